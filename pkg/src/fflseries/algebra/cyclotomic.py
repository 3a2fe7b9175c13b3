"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored in the power basis 1, z, ..., z^(phi(n)-1) reduced
modulo the n-th cyclotomic polynomial, as a tuple of integer numerators
over one positive common denominator. Rational numbers are the elements
of conductor 1; mixed conductors are lifted to their lcm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

from ..errors import DivisionByZero, InvalidAutomorphism


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _exact_div_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        out[k - dn] = c
        if c:
            for i in range(dn + 1):
                num[k - dn + i] -= c * den[i]
    assert not any(num[:dn]), "inexact cyclotomic division"
    return out


def _reduce(vec: list[int], n: int) -> list[int]:
    """Reduce an integer vector modulo Phi_n in place; return the phi(n) head."""
    phi_n = cyclotomic_polynomial(n)
    d = len(phi_n) - 1
    for k in range(len(vec) - 1, d - 1, -1):
        c = vec[k]
        if c:
            base = k - d
            for i in range(d):
                if phi_n[i]:
                    vec[base + i] -= c * phi_n[i]
    if len(vec) < d:
        vec.extend([0] * (d - len(vec)))
    return vec[:d]


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-c for c in num], -den
    g = den
    for c in num:
        g = gcd(g, c)
        if g == 1:
            break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CyclotomicNumber:
    """An exact element of Q(zeta_n)."""

    __slots__ = ("n", "_num", "_den")

    def __init__(self, n: int, coeffs=()):
        if n < 1:
            raise ValueError("conductor must be positive")
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        vec = [f.numerator * (den // f.denominator) for f in fracs]
        self.n = n
        self._num, self._den = _normalize(_reduce(vec, n), den)

    @classmethod
    def _raw(cls, n: int, num, den: int) -> CyclotomicNumber:
        obj = cls.__new__(cls)
        obj.n = n
        obj._num, obj._den = _normalize(list(num), den)
        return obj

    @classmethod
    def rational(cls, value, n: int = 1) -> CyclotomicNumber:
        value = Fraction(value)
        d = totient(n)
        return cls._raw(n, [value.numerator] + [0] * (d - 1), value.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CyclotomicNumber:
        vec = [0] * n
        vec[k % n] = 1
        return cls._raw(n, _reduce(vec, n), 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self) -> int:
        return len(self._num)

    def key(self) -> tuple:
        """Hashable identity, valid for comparisons at a fixed conductor."""
        return (self.n, self._num, self._den)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def lift(self, m: int) -> CyclotomicNumber:
        """Embed into Q(zeta_m) via zeta_n -> zeta_m^(m/n)."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot embed Q(zeta_{self.n}) into Q(zeta_{m})")
        step = m // self.n
        vec = [0] * max(m, 1)
        for i, c in enumerate(self._num):
            vec[i * step] = c
        return CyclotomicNumber._raw(m, _reduce(vec, m), self._den)

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.rational(other, self.n)
        return None

    @staticmethod
    def _common(x: CyclotomicNumber, y: CyclotomicNumber):
        if x.n == y.n:
            return x, y
        m = lcm(x.n, y.n)
        return x.lift(m), y.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        x, y = self._common(self, other)
        den = x._den * y._den // gcd(x._den, y._den)
        fx, fy = den // x._den, den // y._den
        return CyclotomicNumber._raw(x.n, [a * fx + b * fy for a, b in zip(x._num, y._num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.n, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicNumber._raw(self.n, [c * other for c in self._num], self._den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        x, y = self._common(self, other)
        if x.is_rational() or y.is_rational():
            if y.is_rational():
                x, y = y, x
            a = x._num[0]
            return CyclotomicNumber._raw(y.n, [a * c for c in y._num], x._den * y._den)
        d = len(x._num)
        vec = [0] * (2 * d - 1)
        for i, a in enumerate(x._num):
            if a:
                for j, b in enumerate(y._num):
                    if b:
                        vec[i + j] += a * b
        return CyclotomicNumber._raw(x.n, _reduce(vec, x.n), x._den * y._den)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Absolute norm to Q: product of all Galois conjugates."""
        prod = CyclotomicNumber.rational(1, self.n)
        for a in range(1, self.n + 1):
            if gcd(a, self.n) == 1:
                prod = prod * self.conjugate(a)
        return prod.to_rational()

    def inverse(self) -> CyclotomicNumber:
        if not self:
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.rational(1 / self.to_rational(), self.n)
        # x^-1 = (product of the other conjugates) / N(x)
        others = CyclotomicNumber.rational(1, self.n)
        for a in range(2, self.n):
            if gcd(a, self.n) == 1:
                others = others * self.conjugate(a)
        nrm = (others * self).to_rational()
        return others / nrm

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise DivisionByZero("division by zero")
            f = Fraction(other)
            return CyclotomicNumber._raw(
                self.n, [c * f.denominator for c in self._num], self._den * f.numerator
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, a: int) -> CyclotomicNumber:
        """Apply zeta_n -> zeta_n^a (no coprimality check)."""
        n = self.n
        vec = [0] * n
        for i, c in enumerate(self._num):
            if c:
                vec[(a * i) % n] += c
        return CyclotomicNumber._raw(n, _reduce(vec, n), self._den)

    def __bool__(self):
        return any(self._num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational() and other.is_rational():
            return self._num[0] * other._den == other._num[0] * self._den
        x, y = self._common(self, other)
        return x._den == y._den and x._num == y._num

    __hash__ = None

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(Fraction(c, self._den)) * z**i for i, c in enumerate(self._num))

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CyclotomicNumber:
        return cls(int(data["n"]), [Fraction(s) for s in data["coeffs"]])

    def __repr__(self):
        return f"CyclotomicNumber({self.n}, {[_frac_str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.n}" + (f"^{i}" if i > 1 else "")
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class GaloisAutomorphism:
    """The automorphism zeta_n -> zeta_n^a of Q(zeta_n)."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidAutomorphism("conductor must be positive")
        if gcd(self.a, self.n) != 1:
            raise InvalidAutomorphism(f"exponent {self.a} is not a unit modulo {self.n}")
        object.__setattr__(self, "a", self.a % self.n if self.n > 1 else 1)

    @classmethod
    def identity(cls, n: int) -> GaloisAutomorphism:
        return cls(n, 1)

    @classmethod
    def all(cls, n: int) -> list[GaloisAutomorphism]:
        return [cls(n, a) for a in range(1, max(n, 2)) if gcd(a, n) == 1]

    def compose(self, other: GaloisAutomorphism) -> GaloisAutomorphism:
        if other.n != self.n:
            raise InvalidAutomorphism("conductors differ")
        return GaloisAutomorphism(self.n, self.a * other.a)

    def inverse(self) -> GaloisAutomorphism:
        return GaloisAutomorphism(self.n, pow(self.a, -1, self.n) if self.n > 1 else 1)

    def restrict(self, m: int) -> GaloisAutomorphism:
        """Restriction to the subfield Q(zeta_m), m | n."""
        if self.n % m:
            raise InvalidAutomorphism(f"Q(zeta_{m}) is not a subfield of Q(zeta_{self.n})")
        return GaloisAutomorphism(m, self.a % m if m > 1 else 1)

    def __call__(self, x):
        return cyclo_automorphism(x, self)


def as_cyclotomic(x, n: int = 1) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    return CyclotomicNumber.rational(x, n)


def cyclo_arith(x, y=None, op: str = "add") -> CyclotomicNumber:
    x = as_cyclotomic(x)
    if op == "inv":
        return x.inverse()
    y = as_cyclotomic(y)
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def cyclo_automorphism(x, sigma: GaloisAutomorphism):
    """Apply sigma to x; x may live in any subfield Q(zeta_m) with m | sigma.n."""
    if not isinstance(x, CyclotomicNumber):
        return x  # rationals are fixed
    if x.n == sigma.n:
        return x.conjugate(sigma.a)
    if sigma.n % x.n == 0:
        return x.conjugate(sigma.a % x.n)
    if x.is_rational():
        return x
    raise InvalidAutomorphism(
        f"automorphism of Q(zeta_{sigma.n}) does not act on Q(zeta_{x.n})"
    )
