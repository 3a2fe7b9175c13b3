"""Rational reconstruction of a truncated power series (Pade form).

For a candidate denominator degree ``dd`` and numerator degree ``dn`` the
unknown denominator Q = 1 + q_1 T + ... + q_dd T^dd must kill every
coefficient of P*Q above degree ``dn``. Those conditions form a
Hankel-structured linear system, solved exactly by Gaussian elimination.
"""

from __future__ import annotations

from ..errors import ReconstructionFailed
from .series import Poly, TruncatedSeries, field_inverse, series_div

DEFAULT_MARGIN = 2


def solve_linear(rows: list[list], rhs: list) -> list | None:
    """Solve rows * x = rhs exactly; None if inconsistent. Free variables are 0."""
    if not rows:
        return []
    ncols = len(rows[0])
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field_inverse(m[r][c])
        m[r] = [v * inv if v else 0 for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][ncols]:
            return None
    x = [0] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x


def _try(P: TruncatedSeries, dn: int, dd: int):
    p = P.coeffs
    N = P.order
    rows, rhs = [], []
    for k in range(dn + 1, N + 1):
        rows.append([p[k - j] if k - j >= 0 else 0 for j in range(1, dd + 1)])
        rhs.append(-p[k])
    sol = solve_linear(rows, rhs) if dd else ([] if not any(rhs) else None)
    if sol is None:
        return None
    Q = Poly([1] + sol)
    R = Poly((P * Q.to_series(N)).coeffs[: dn + 1])
    return R, Q


def pade_reconstruct(P: TruncatedSeries, dnum: int, dden: int, margin: int = DEFAULT_MARGIN):
    """Return (R, Q) with Q(0) = 1 and R/Q == P through order N.

    The smallest denominator degree wins, then the smallest numerator degree.
    """
    if dnum < 0 or dden < 0:
        raise ValueError("degree bounds must be non-negative")
    if P.order < dnum + dden + margin:
        raise ReconstructionFailed(
            f"truncation order {P.order} < {dnum} + {dden} + margin {margin}; raise N"
        )
    for dd in range(dden + 1):
        for dn in range(dnum + 1):
            found = _try(P, dn, dd)
            if found is None:
                continue
            R, Q = found
            if series_div(R, Q.to_series(P.order)) == P:
                return R, Q
    raise ReconstructionFailed(
        f"no rational function with deg R <= {dnum}, deg Q <= {dden} matches "
        f"{P.order + 1} coefficients; raise N or the degree bounds"
    )
