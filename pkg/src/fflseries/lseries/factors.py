"""Local Euler factors det(1 - X Fr | V^I) as polynomials in X = T^deg v."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.cyclotomic import CyclotomicNumber, GaloisAutomorphism, cyclo_automorphism
from ..algebra.series import Poly, TruncatedSeries
from ..characters import DirichletCharacter, is_primitive
from ..curves import ReductionData, ReductionType
from ..errors import ImprimitiveCharacter, UnsupportedRamificationOverlap
from ..fields import Place


def _c(x, n: int = 1) -> CyclotomicNumber:
    return x if isinstance(x, CyclotomicNumber) else CyclotomicNumber.rational(x, n)


@dataclass(frozen=True)
class EulerFactor:
    place: Place
    poly: Poly

    def __post_init__(self):
        if self.poly[0] != 1:
            raise ValueError(f"Euler factor at {self.place} must have constant term 1")
        object.__setattr__(self, "poly", Poly(tuple(_c(c) for c in self.poly.coeffs)))

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def coeffs(self) -> tuple[CyclotomicNumber, ...]:
        return self.poly.coeffs

    def key(self) -> tuple:
        return factor_key(self.poly)

    def conjugate(self, sigma: GaloisAutomorphism) -> EulerFactor:
        return EulerFactor(self.place, self.poly.map(lambda c: cyclo_automorphism(c, sigma)))

    def to_json(self) -> dict:
        return {"place": self.place.to_json(), "coeffs": [c.to_json() for c in self.coeffs]}


def factor_key(poly: Poly) -> tuple:
    return tuple(_c(c).key() for c in poly.coeffs)


ONE = Poly((CyclotomicNumber.rational(1),))


def euler_factor_trivial(v: Place) -> EulerFactor:
    return EulerFactor(v, Poly((1, -1)))


def curve_factor_poly(kind: ReductionType, a_v: int, q_v: int) -> Poly:
    if kind is ReductionType.GOOD:
        return Poly((1, -a_v, q_v))
    if kind is ReductionType.SPLIT:
        return Poly((1, -1))
    if kind is ReductionType.NONSPLIT:
        return Poly((1, 1))
    return Poly((1,))


def euler_factor_curve(red: ReductionData) -> EulerFactor:
    return EulerFactor(red.place, curve_factor_poly(red.type, red.a_v, red.q_v))


def scale_eigenvalues(poly: Poly, u: CyclotomicNumber) -> Poly:
    """c_i -> c_i u^i, i.e. every Frobenius eigenvalue multiplied by u."""
    out, power = [], _c(1, u.n)
    for c in poly.coeffs:
        out.append(_c(c, u.n) * power)
        power = power * u
    return Poly(out)


def character_euler_factor(chi: DirichletCharacter, v: Place) -> EulerFactor:
    """1 - chi(v) X, or 1 at ramified places; imprimitive characters allowed."""
    if chi.is_ramified_at(v):
        return EulerFactor(v, Poly((_c(1, chi.n),)))
    return EulerFactor(v, Poly((_c(1, chi.n), -chi.value_at_place(v))))


def twist_poly(kind: ReductionType | None, a_v: int, q_v: int, u: CyclotomicNumber | None, n: int) -> Poly:
    """Twisted factor from local data; ``u`` None means the character is ramified there.

    ``kind`` None stands for the trivial representation.
    """
    if u is None:
        if kind is not None and kind is not ReductionType.GOOD:
            raise UnsupportedRamificationOverlap(f"character ramified where the curve has {kind.value} reduction")
        return Poly((_c(1, n),))
    if kind is None:
        return Poly((_c(1, n), -u))
    return scale_eigenvalues(curve_factor_poly(kind, a_v, q_v), u)


def twisted_euler_factor(red: ReductionData | None, chi: DirichletCharacter, v: Place | None = None) -> EulerFactor:
    """Euler factor of rho (x) chi at v; ``red`` None means rho trivial."""
    if v is None:
        if red is None:
            raise ValueError("a place is required when rho is trivial")
        v = red.place
    if not is_primitive(chi):
        raise ImprimitiveCharacter(f"{chi} is not primitive")
    u = None if chi.is_ramified_at(v) else chi.value_at_place(v)
    try:
        if red is None:
            return EulerFactor(v, twist_poly(None, 0, 0, u, chi.n))
        return EulerFactor(v, twist_poly(red.type, red.a_v, red.q_v, u, chi.n))
    except UnsupportedRamificationOverlap:
        raise UnsupportedRamificationOverlap(
            f"character ramified at {v}, where the curve has {red.type.value} reduction"
        ) from None


# ---------------------------------------------------------------------------
# expansions of a single factor


def inverse_power(poly: Poly, e: int, order: int) -> TruncatedSeries:
    """F(X)^e for F(0) = 1 and any integer e, through X^order."""
    f = list(poly.coeffs) + [0] * max(0, order + 1 - len(poly.coeffs))
    g = [f[0]]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, min(n, poly.degree) + 1):
            if f[k]:
                acc = acc + f[k] * g[n - k] * ((e + 1) * k - n)
        g.append((Fraction(acc, n) if isinstance(acc, int) else acc / n) if acc else 0)
    return TruncatedSeries(order, g)


def local_expansion(factor: EulerFactor | Poly, order: int) -> TruncatedSeries:
    """1 / F(X) through X^order: the local coefficients a_{v,k}."""
    poly = factor.poly if isinstance(factor, EulerFactor) else factor
    return inverse_power(poly, -1, order)


def power_sums(poly: Poly, count: int) -> list:
    """p_1..p_count of the inverse roots of F, by Newton's identities."""
    c = [poly[i] for i in range(count + 1)]
    p = [0]
    for k in range(1, count + 1):
        acc = -k * c[k] if c[k] else 0
        for i in range(1, k):
            if c[i]:
                acc = acc - c[i] * p[k - i]
        p.append(acc)
    return p[1:]
