"""Dense polynomials and truncated power series over an exact field.

Coefficients may be ints, Fractions or CyclotomicNumbers; everything is
stored lowest degree first in tuples and never mutated.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero, NotInvertibleSeries, NotNormalized
from .cyclotomic import CyclotomicNumber, GaloisAutomorphism, cyclo_automorphism


def field_inverse(c):
    if isinstance(c, CyclotomicNumber):
        return c.inverse()
    if c == 0:
        raise DivisionByZero("division by zero")
    return 1 / Fraction(c)


def _strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial in one variable; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        n = max(len(self), len(other))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self or not other:
            return Poly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: Poly):
        if not other:
            raise DivisionByZero("polynomial division by zero")
        lead_inv = field_inverse(other.coeffs[-1])
        rem = list(self.coeffs)
        dq = len(rem) - len(other)
        if dq < 0:
            return Poly(), self
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c:
                c = c * lead_inv
                quo[k] = c
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * b
        return Poly(quo), Poly(rem[: other.degree])

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def theta(self) -> Poly:
        """Apply T d/dT."""
        return Poly(i * c for i, c in enumerate(self.coeffs))

    def map(self, f) -> Poly:
        return Poly(f(c) for c in self.coeffs)

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


class TruncatedSeries:
    """Power series known modulo T^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = list(coeffs)[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, (1,))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        return all(a == b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __hash__ = None

    def first_difference(self, other: TruncatedSeries) -> int | None:
        n = min(self.order, other.order) + 1
        for i in range(n):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(min(order, self.order), self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.order, (other,))
        n = min(self.order, other.order)
        return TruncatedSeries(n, (a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.order, (c * other for c in self.coeffs))
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedSeries:
        c = self.coeffs
        if not c[0]:
            raise NotInvertibleSeries("constant term of the series is zero")
        inv0 = field_inverse(c[0])
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                if c[i]:
                    acc = acc + c[i] * out[k - i]
            out.append(-(acc * inv0) if acc else 0)
        return TruncatedSeries(self.order, out)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * field_inverse(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def spread(self, d: int, order: int) -> TruncatedSeries:
        """Substitute T -> T^d and truncate at ``order``."""
        out = [0] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if i * d > order:
                break
            out[i * d] = c
        # coefficients past self.order are unknown
        return TruncatedSeries(min(order, (self.order + 1) * d - 1), out)

    def theta(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, (i * c for i, c in enumerate(self.coeffs)))

    def map(self, f) -> TruncatedSeries:
        return TruncatedSeries(self.order, (f(c) for c in self.coeffs))

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({self.order}, {[str(c) for c in self.coeffs]})"


def series_automorphism(P: TruncatedSeries, sigma: GaloisAutomorphism) -> TruncatedSeries:
    return P.map(lambda c: cyclo_automorphism(c, sigma))


def series_div(R: Poly, Q: TruncatedSeries) -> TruncatedSeries:
    if not Q.coeffs[0]:
        raise NotInvertibleSeries("denominator has zero constant term")
    return R.to_series(Q.order) * Q.inverse()


def series_log_derivative(P: TruncatedSeries) -> TruncatedSeries:
    """T P'(T) / P(T); the T^n coefficient is the n-th power sum of inverse roots."""
    if P.coeffs[0] != 1:
        raise NotNormalized("log-derivative requires constant term 1")
    return P.theta() * P.inverse()
