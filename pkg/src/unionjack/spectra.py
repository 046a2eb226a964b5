"""Closed-form Union Jack spectra and the numeric oracle they are checked against.

For each pair of angles ``alpha = 2*pi*i/n`` and ``beta = 2*pi*j/m`` the
Union Jack torus contributes the two roots of a quadratic,
``S +/- sqrt(S**2 - P)``:

* signless Laplacian: ``S = 6 + cos(alpha) + cos(beta)``,
  ``P = 4*(7 + cos(alpha) + cos(beta) - cos(alpha)*cos(beta))``
* Laplacian: ``S = 6 - cos(alpha) - cos(beta)``,
  ``P = 4*(7 - 3*cos(alpha) - 3*cos(beta) - cos(alpha)*cos(beta))``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .jacobi import DEFAULT_MAX_ORDER, jacobi_eigh
from .lattice import LatticeSize, _as_size, _check_cycle_length

DISCRIMINANT_CLAMP = 1e-12


def periodic_cosines(n: int) -> np.ndarray:
    """``cos(2*pi*i/n)`` for ``i = 0..n-1``, bit-identical for ``i`` and ``n-i``."""
    i = np.arange(n)
    return np.cos(2.0 * np.pi * np.minimum(i, n - i) / n)


def _clamped_sqrt_discriminant(s, p):
    disc = s * s - p
    if np.any(disc < -DISCRIMINANT_CLAMP):
        raise ArithmeticError(f"negative discriminant {np.min(disc):.3e}")
    return np.sqrt(np.maximum(disc, 0.0))


def signless_branches(cos_a, cos_b):
    """Upper and lower roots (A, B) of the signless-Laplacian quadratic."""
    s = 6.0 + cos_a + cos_b
    p = 4.0 * (7.0 + cos_a + cos_b - cos_a * cos_b)
    r = _clamped_sqrt_discriminant(s, p)
    return s + r, s - r


def laplacian_branches(cos_a, cos_b):
    """Upper and lower roots (C, D) of the Laplacian quadratic.

    The lower root vanishes at ``cos_a = cos_b = 1``; round-off below zero
    there is clipped.
    """
    s = 6.0 - cos_a - cos_b
    p = 4.0 * (7.0 - 3.0 * cos_a - 3.0 * cos_b - cos_a * cos_b)
    r = _clamped_sqrt_discriminant(s, p)
    return s + r, np.maximum(s - r, 0.0)


class SpectrumEntry(NamedTuple):
    i: int
    j: int
    sign: str
    value: float


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """``2nm`` eigenvalues in lexicographic ``(i, j, sign)`` order, ``+`` before ``-``."""

    size: LatticeSize
    matrix: str  # "Q" or "L"
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.values)

    def __iter__(self) -> Iterator[SpectrumEntry]:
        return iter(self.entries())

    def entries(self) -> list[SpectrumEntry]:
        n, m = self.size.n, self.size.m
        grid = self.values.reshape(n, m, 2)
        return [SpectrumEntry(i, j, "+-"[b], float(grid[i, j, b]))
                for i in range(n) for j in range(m) for b in range(2)]

    def value(self, i: int, j: int, sign: str) -> float:
        return float(self.values.reshape(self.size.n, self.size.m, 2)[i, j, "+-".index(sign)])

    def sorted_values(self) -> np.ndarray:
        return np.sort(self.values)

    def to_csv(self) -> str:
        rows = ["i,j,sign,value"]
        rows += [f"{e.i},{e.j},{e.sign},{e.value:.17g}" for e in self.entries()]
        return "\n".join(rows) + "\n"


def _closed_form(size, branches, label) -> ClosedFormSpectrum:
    size = _as_size(size)
    ca = periodic_cosines(size.n)[:, None]
    cb = periodic_cosines(size.m)[None, :]
    hi, lo = branches(ca, cb)
    return ClosedFormSpectrum(size, label, np.stack([hi, lo], axis=-1).ravel())


def closed_form_q_spectrum(size) -> ClosedFormSpectrum:
    """Signless Laplacian eigenvalues of UJL(n, m), with multiplicity."""
    return _closed_form(size, signless_branches, "Q")


def closed_form_l_spectrum(size) -> ClosedFormSpectrum:
    """Laplacian eigenvalues of UJL(n, m), with multiplicity."""
    return _closed_form(size, laplacian_branches, "L")


def cycle_spectrum(n: int) -> np.ndarray:
    """Adjacency eigenvalues of C_n: ``2*cos(2*pi*i/n)``, in index order."""
    _check_cycle_length(n)
    return 2.0 * periodic_cosines(n)


@dataclass(frozen=True)
class NumericSpectrum:
    values: np.ndarray  # ascending
    residual: float  # max |Mv - lambda v| over the computed pairs
    sweeps: int

    def __len__(self):
        return len(self.values)


def numeric_spectrum(matrix, max_order: int = DEFAULT_MAX_ORDER,
                     rtol: float = 1e-12, max_sweeps: int = 100) -> NumericSpectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi; see :mod:`.jacobi`."""
    mat = np.asarray(matrix, dtype=np.float64)
    w, v, sweeps = jacobi_eigh(mat, rtol=rtol, max_sweeps=max_sweeps, max_order=max_order)
    residual = float(np.abs(mat @ v - v * w).max()) if len(w) else 0.0
    return NumericSpectrum(np.sort(w), residual, sweeps)


@dataclass(frozen=True)
class SpectrumComparison:
    max_abs_diff: float
    passed: bool

    def __bool__(self):
        return self.passed


def compare_spectra(a, b, tol: float = 1e-8) -> SpectrumComparison:
    """Compare two eigenvalue multisets after sorting."""
    a = np.sort(np.asarray(a, dtype=np.float64))
    b = np.sort(np.asarray(b, dtype=np.float64))
    if a.shape != b.shape:
        raise ValueError(f"spectra have different lengths: {len(a)} vs {len(b)}")
    diff = float(np.abs(a - b).max()) if len(a) else 0.0
    return SpectrumComparison(diff, diff <= tol)


__all__ = [
    "ClosedFormSpectrum", "NumericSpectrum", "SpectrumComparison", "SpectrumEntry",
    "closed_form_l_spectrum", "closed_form_q_spectrum", "compare_spectra",
    "cycle_spectrum", "laplacian_branches", "numeric_spectrum", "periodic_cosines",
    "signless_branches",
]
