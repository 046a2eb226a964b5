"""Per-site limits of the incidence energy and LEL by adaptive 2D quadrature.

As ``n, m`` grow, ``sum_{i,j} f(alpha_i, beta_j) / (nm)`` tends to the mean of
``f`` over the torus ``[0, 2pi]^2``. Dividing by ``2nm`` sites instead gives
the normalization ``1 / (8 pi^2)`` used for the four components below.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConvergenceError
from .invariants import Kind, _report
from .lattice import _as_size
from .spectra import laplacian_branches, signless_branches

TWO_PI = 2.0 * math.pi
SITE_NORM = 8.0 * math.pi ** 2
MAX_DEPTH = 30

# 15-point Kronrod extension of the 7-point Gauss-Legendre rule on [-1, 1]
# (QUADPACK qk15). Nodes are listed for x >= 0; odd slots are the Gauss nodes.
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

KRONROD_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[1:7:2] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[9:14:2] = _WG[2::-1]
_GAUSS_SLOTS = GAUSS_WEIGHTS != 0


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool
    panels: int = 0

    def scaled(self, factor: float) -> "QuadratureResult":
        return QuadratureResult(self.value * factor, self.error_estimate * abs(factor),
                                self.evaluations, self.converged, self.panels)


def _panel_rule(f, x0, x1, y0, y1):
    """Tensor Kronrod value and |Kronrod - Gauss| on one rectangle."""
    hx, hy = 0.5 * (x1 - x0), 0.5 * (y1 - y0)
    xs = x0 + hx * (KRONROD_NODES + 1.0)
    ys = y0 + hy * (KRONROD_NODES + 1.0)
    vals = np.asarray(f(xs[:, None], ys[None, :]), dtype=np.float64)
    vals = np.broadcast_to(vals, (15, 15))
    if not np.all(np.isfinite(vals)):
        bad = np.argwhere(~np.isfinite(vals))[0]
        raise FloatingPointError(
            f"integrand is not finite at ({xs[bad[0]]!r}, {ys[bad[1]]!r})")
    area = hx * hy
    kron = area * (KRONROD_WEIGHTS @ vals @ KRONROD_WEIGHTS)
    gvals = vals[np.ix_(_GAUSS_SLOTS, _GAUSS_SLOTS)]
    wg = GAUSS_WEIGHTS[_GAUSS_SLOTS]
    gauss = area * (wg @ gvals @ wg)
    return float(kron), abs(float(kron - gauss))


def integrate2d(f: Callable, tol: float, domain=((0.0, TWO_PI), (0.0, TWO_PI)),
                breaks: Sequence[Sequence[float]] = ((), ()),
                max_evaluations: int = 20_000_000) -> QuadratureResult:
    """Globally adaptive cubature of ``f(x, y)`` over a rectangle.

    ``f`` must accept broadcasting numpy arrays. The domain is first cut at
    ``breaks`` (x cuts, y cuts) so that known singular points lie on panel
    corners, where no Kronrod node ever lands. The panel with the largest
    error estimate is quartered until the summed estimate is at most ``tol``.
    Panels at depth ``MAX_DEPTH`` are frozen; if the target is still missed
    the result comes back with ``converged=False``.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    (ax, bx), (ay, by) = domain
    xcuts = sorted({ax, bx, *(b for b in breaks[0] if ax < b < bx)})
    ycuts = sorted({ay, by, *(b for b in breaks[1] if ay < b < by)})

    heap = []  # (-error, tiebreak, value, x0, x1, y0, y1, depth)
    done = []  # (value, error, x0, y0) of frozen panels
    counter = 0
    evaluations = 0
    for x0, x1 in zip(xcuts, xcuts[1:]):
        for y0, y1 in zip(ycuts, ycuts[1:]):
            val, err = _panel_rule(f, x0, x1, y0, y1)
            evaluations += 225
            heapq.heappush(heap, (-err, counter, val, x0, x1, y0, y1, 0))
            counter += 1

    total_err = math.fsum(-item[0] for item in heap)
    while heap and total_err > tol and evaluations < max_evaluations:
        neg_err, _, val, x0, x1, y0, y1, depth = heapq.heappop(heap)
        if depth >= MAX_DEPTH:
            done.append((val, -neg_err, x0, y0))
            continue
        xm, ym = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
        child_err = 0.0
        for cx0, cx1 in ((x0, xm), (xm, x1)):
            for cy0, cy1 in ((y0, ym), (ym, y1)):
                cval, cerr = _panel_rule(f, cx0, cx1, cy0, cy1)
                heapq.heappush(heap, (-cerr, counter, cval, cx0, cx1, cy0, cy1, depth + 1))
                counter += 1
                child_err += cerr
        evaluations += 900
        total_err += child_err + neg_err
        if counter % 256 == 0:  # curb drift of the running sum
            total_err = math.fsum([-h[0] for h in heap] + [d[1] for d in done])

    panels = [(item[3], item[5], item[2], -item[0]) for item in heap]
    panels += [(x0, y0, val, err) for val, err, x0, y0 in done]
    panels.sort()
    value = math.fsum(p[2] for p in panels)
    error = math.fsum(p[3] for p in panels)
    return QuadratureResult(value, error, evaluations, error <= tol, len(panels))


class Component(str, enum.Enum):
    SQRT_A = "sqrtA"  # signless Laplacian, upper branch
    SQRT_B = "sqrtB"  # signless Laplacian, lower branch
    SQRT_C = "sqrtC"  # Laplacian, upper branch
    SQRT_D = "sqrtD"  # Laplacian, lower branch


def integrand(kind) -> Callable:
    """``(x, y) -> sqrt(branch(cos x, cos y))`` for one of the four components."""
    kind = Component(kind)
    branches = signless_branches if kind in (Component.SQRT_A, Component.SQRT_B) else laplacian_branches
    upper = kind in (Component.SQRT_A, Component.SQRT_C)

    def f(x, y):
        hi, lo = branches(np.cos(x), np.cos(y))
        return np.sqrt(hi if upper else lo)

    f.__name__ = kind.value
    return f


# (0, 0) is a corner of the domain; (pi, pi) needs a cut
_BREAKS = ((math.pi,), (math.pi,))


def component_integral(kind, tol: float = 1e-6) -> QuadratureResult:
    """Integral of one component over the torus, divided by ``8 pi^2``.

    ``tol`` applies to the normalized value.
    """
    raw = integrate2d(integrand(kind), tol * SITE_NORM, breaks=_BREAKS)
    return raw.scaled(1.0 / SITE_NORM)


def ie_constant(tol: float = 1e-6) -> float:
    """Limit of IE(UJL(n, m)) / (2nm). Double it for the per-unit-cell value."""
    return (component_integral(Component.SQRT_A, tol).value
            + component_integral(Component.SQRT_B, tol).value)


def lel_constant(tol: float = 1e-6) -> float:
    """Limit of LEL(UJL(n, m)) / (2nm). Double it for the per-unit-cell value."""
    return (component_integral(Component.SQRT_C, tol).value
            + component_integral(Component.SQRT_D, tol).value)


def asymptotic_constants(tol: float = 1e-6) -> dict:
    """All four components and both limits, per site (/2nm) and per cell (/nm)."""
    parts = {c.value: component_integral(c, tol) for c in Component}
    for name, res in parts.items():
        if not res.converged:
            raise ConvergenceError(f"{name}: error estimate {res.error_estimate:.3e} > {tol:.3e}")
    ie = parts["sqrtA"].value + parts["sqrtB"].value
    lel = parts["sqrtC"].value + parts["sqrtD"].value
    out = {name: res.value for name, res in parts.items()}
    out.update(ie_per_site=ie, lel_per_site=lel, ie_per_cell=2 * ie, lel_per_cell=2 * lel,
               tolerance=tol, evaluations=sum(r.evaluations for r in parts.values()))
    return out


def constants_to_json(constants: dict) -> str:
    """Flat JSON object with floats written at 17 significant digits."""
    def fmt(v):
        return str(v) if isinstance(v, (int, np.integer)) else f"{v:.17g}"
    body = ",\n".join(f'  "{k}": {fmt(v)}' for k, v in constants.items())
    return "{\n" + body + "\n}\n"


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    m: int
    per_site: float
    limit: float

    @property
    def gap(self) -> float:
        return abs(self.per_site - self.limit)


def convergence_study(kind, sizes, limit: float | None = None,
                      tol: float = 1e-10) -> list[ConvergenceRow]:
    """Closed-form per-site values against the limit constant, in input order.

    ``limit`` defaults to the quadrature constant at ``tol``.
    """
    kind = Kind(kind)
    sizes = [_as_size(s) for s in sizes]
    if not sizes:
        return []
    if limit is None:
        limit = ie_constant(tol) if kind is Kind.IE else lel_constant(tol)
    return [ConvergenceRow(s.n, s.m, _report(s, kind, "closed").per_site, limit) for s in sizes]


def convergence_to_csv(kind, rows) -> str:
    kind = Kind(kind)
    lines = ["n,m,kind,per_site,limit,gap"]
    lines += [f"{r.n},{r.m},{kind.value},{r.per_site:.17g},{r.limit:.17g},{r.gap:.17g}"
              for r in rows]
    return "\n".join(lines) + "\n"
