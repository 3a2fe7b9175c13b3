"""Rational reconstruction of L-series and exact values at the centre T = 1/q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.cyclotomic import CyclotomicNumber
from ..algebra.pade import DEFAULT_MARGIN, pade_reconstruct
from ..algebra.series import Poly
from ..errors import PoleAtCenter, ReconstructionFailed
from .assembly import LSeries, _as_cyclo

DEFAULT_DDEN = 2


def default_bounds(L: LSeries, dnum: int | None, dden: int | None, margin: int = DEFAULT_MARGIN) -> tuple[int, int, bool]:
    """Fill in unset bounds and shrink the numerator bound to fit N; returns (dnum, dden, clamped)."""
    if dden is None:
        dden = DEFAULT_DDEN
    clamped = False
    if dnum is None:
        dnum = L.provenance.get("default_dnum", L.N)
        room = L.N - dden - margin
        if dnum > room:
            dnum, clamped = max(room, 0), True
    return dnum, dden, clamped


def reconstruct(L: LSeries, dnum: int | None = None, dden: int | None = None, margin: int = DEFAULT_MARGIN) -> LSeries:
    """Attach (R, Q) with Q(0) = 1 and R/Q equal to the series through T^N."""
    dnum, dden, clamped = default_bounds(L, dnum, dden, margin)
    try:
        R, Q = pade_reconstruct(L.series, dnum, dden, margin)
    except ReconstructionFailed as exc:
        raise ReconstructionFailed(f"{exc} (N = {L.N})") from None
    n = L.n
    R = Poly([_as_cyclo(c, n) for c in R.coeffs])
    Q = Poly([_as_cyclo(c, n) for c in Q.coeffs])
    prov = dict(L.provenance)
    prov["bounds"] = {"dnum": dnum, "dden": dden, "margin": margin, "clamped": clamped}
    return LSeries(L.q, L.N, L.series, n, prov, (R, Q))


@dataclass(frozen=True)
class LValueReport:
    """A_j = (T d/dT)^j L at T = 1/q for j = 0..k, and the order of vanishing there."""

    values: tuple[CyclotomicNumber, ...]
    order: int

    def to_json(self) -> dict:
        return {"A": [v.to_json() for v in self.values], "vanishing_order": self.order}


def _divide_out_center(P: Poly, q: int) -> tuple[Poly, int]:
    """Strip factors (1 - qT) from P; return the cofactor and the multiplicity."""
    k = 0
    root = Fraction(1, q)
    lin = Poly((1, -q))
    while P and P(root) == 0:
        P, r = divmod(P, lin)
        if r:
            raise AssertionError("exact division by (1 - qT) left a remainder")
        k += 1
    return P, k


def _theta_quotient(num: Poly, den: Poly, power: int) -> Poly:
    """For f = num / den^power, return the numerator of theta f over den^(power + 1)."""
    return num.theta() * den - (den.theta() * num) * power


def evaluate_leading(L: LSeries, k: int) -> LValueReport:
    if L.rational is None:
        raise ValueError("the series has no reconstructed rational form; call reconstruct first")
    if k < 0:
        raise ValueError("derivative count must be non-negative")
    q = L.q
    n = L.n
    R, Q = L.rational
    R, zr = _divide_out_center(R, q)
    Q, zq = _divide_out_center(Q, q)
    if zq > zr:
        raise PoleAtCenter(zq - zr)
    zero_order = zr - zq
    # put the (1 - qT)^zero_order part back; the remaining denominator is a unit at 1/q
    lin = Poly((1, -q))
    for _ in range(zero_order):
        R = R * lin
    t0 = Fraction(1, q)
    Q0 = _as_cyclo(Q(t0), n)
    values = []
    num, power = R, 1
    for j in range(k + 1):
        values.append(_as_cyclo(num(t0), n) / (Q0**power))
        num, power = _theta_quotient(num, Q, power), power + 1
    return LValueReport(tuple(values), zero_order)
