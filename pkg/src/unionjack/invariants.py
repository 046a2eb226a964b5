"""Incidence energy and Laplacian-energy-like invariant of the Union Jack torus.

Both are sums of square roots of eigenvalues: the incidence energy sums
``sqrt(q)`` over the signless Laplacian spectrum (the singular values of the
vertex-edge incidence matrix), the LEL sums ``sqrt(mu)`` over the Laplacian
spectrum. The single zero Laplacian eigenvalue contributes nothing, so all
``2nm`` terms are summed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .lattice import LatticeSize, _as_size, build_union_jack, laplacian, signless_laplacian
from .spectra import closed_form_l_spectrum, closed_form_q_spectrum, numeric_spectrum

# numeric eigenvalues this far below zero are round-off on the zero mode
NEGATIVE_CLAMP = 1e-9


class Kind(str, enum.Enum):
    IE = "ie"
    LEL = "lel"


class Method(str, enum.Enum):
    CLOSED = "closed"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class InvariantReport:
    size: LatticeSize
    kind: Kind
    method: Method
    value: float

    @property
    def per_site(self) -> float:
        """Value divided by the vertex count ``2nm``."""
        return self.value / (2 * self.size.cells)

    @property
    def per_cell(self) -> float:
        """Value divided by the number of unit cells ``nm``."""
        return self.value / self.size.cells

    def csv_row(self) -> str:
        return (f"{self.size.n},{self.size.m},{self.kind.value},{self.method.value},"
                f"{self.value:.17g},{self.per_site:.17g}")


CSV_HEADER = "n,m,kind,method,value,per_site"


def sqrt_sum(values) -> float:
    """Correctly rounded sum of square roots, taken in the given order."""
    values = np.asarray(values, dtype=np.float64)
    low = values.min() if len(values) else 0.0
    if low < -NEGATIVE_CLAMP:
        raise ValueError(f"eigenvalue {low:.3e} is negative beyond round-off")
    return math.fsum(np.sqrt(np.maximum(values, 0.0)).tolist())


def _spectrum_values(size: LatticeSize, kind: Kind, method: Method) -> np.ndarray:
    if method is Method.CLOSED:
        spec = closed_form_q_spectrum(size) if kind is Kind.IE else closed_form_l_spectrum(size)
        return spec.values
    graph, _ = build_union_jack(size)
    mat = signless_laplacian(graph) if kind is Kind.IE else laplacian(graph)
    return numeric_spectrum(mat).values


def _report(size, kind, method) -> InvariantReport:
    size, kind, method = _as_size(size), Kind(kind), Method(method)
    return InvariantReport(size, kind, method, sqrt_sum(_spectrum_values(size, kind, method)))


def incidence_energy(size, method=Method.CLOSED) -> InvariantReport:
    return _report(size, Kind.IE, method)


def lel(size, method=Method.CLOSED) -> InvariantReport:
    return _report(size, Kind.LEL, method)


def invariant_table(sizes, kind, method=Method.CLOSED) -> list[InvariantReport]:
    """One report per size, in input order. Sizes are all validated first."""
    sizes = [_as_size(s) for s in sizes]
    return [_report(s, kind, method) for s in sizes]


def reports_to_csv(reports) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in reports]) + "\n"
