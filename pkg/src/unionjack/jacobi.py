"""Dense symmetric eigenvalues by cyclic Jacobi rotations.

Sweeps use the round-robin (tournament) ordering: every step rotates n/2
disjoint index pairs at once, and the n-1 steps of a sweep visit each
off-diagonal pair exactly once. Disjoint rotations commute, so a step is
one block-orthogonal similarity and can be applied with whole-column
numpy operations.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError, OrderCapError

DEFAULT_MAX_ORDER = 2048


def round_robin_pairs(order: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Index pairs for one sweep, as ``(p, q)`` arrays per step, ``p < q``."""
    players = list(range(order + (order % 2)))
    size = len(players)
    steps = []
    for _ in range(size - 1):
        p, q = [], []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a < order and b < order:
                p.append(min(a, b))
                q.append(max(a, b))
        steps.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        # keep players[0] fixed, rotate the rest by one seat
        players = [players[0], players[-1]] + players[1:-1]
    return steps


def _offdiag_norm(a):
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigh(matrix, rtol=1e-12, max_sweeps=100, max_order=DEFAULT_MAX_ORDER):
    """Return ``(eigenvalues, eigenvectors, sweeps)`` of a symmetric matrix.

    Eigenvalues come unsorted (the final diagonal); column ``k`` of the
    eigenvector matrix pairs with eigenvalue ``k``. Stops once the
    off-diagonal Frobenius norm is at most ``rtol`` times the initial
    Frobenius norm.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    order = a.shape[0]
    if order > max_order:
        raise OrderCapError(f"matrix order {order} exceeds cap {max_order}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not exactly symmetric")

    v = np.eye(order)
    threshold = rtol * float(np.linalg.norm(a))
    steps = round_robin_pairs(order)
    sweeps = 0
    while _offdiag_norm(a) > threshold:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                f"Jacobi: off-diagonal norm {_offdiag_norm(a):.3e} above "
                f"{threshold:.3e} after {max_sweeps} sweeps")
        for p, q in steps:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            cols_p, cols_q = a[:, p].copy(), a[:, q]
            a[:, p] = c * cols_p - s * cols_q
            a[:, q] = s * cols_p + c * cols_q
            rows_p, rows_q = a[p, :].copy(), a[q, :]
            cr, sr = c[:, None], s[:, None]
            a[p, :] = cr * rows_p - sr * rows_q
            a[q, :] = sr * rows_p + cr * rows_q
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q]
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
        a = 0.5 * (a + a.T)
        sweeps += 1
    return np.diag(a).copy(), v, sweeps
