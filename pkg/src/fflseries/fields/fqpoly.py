"""Polynomials over a finite field F_q, coefficients lowest degree first."""

from __future__ import annotations

from ..errors import DivisionByZero
from .finite_field import _Field, prime_factors


class FqPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: _Field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, field, coeffs: tuple) -> FqPoly:
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def t(cls, field) -> FqPoly:
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field, c: int) -> FqPoly:
        return cls(field, (c,))

    @classmethod
    def from_code(cls, field, code: int) -> FqPoly:
        """Inverse of :attr:`code`."""
        q = field.order
        out = []
        while code:
            code, r = divmod(code, q)
            out.append(r)
        return cls._raw(field, tuple(out))

    @property
    def code(self) -> int:
        """Integer sum c_i q^i; orders monic polynomials of equal degree."""
        q = self.field.order
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.field is other.field or self.field == other.field)

    def __hash__(self):
        return hash(self.coeffs)

    def _wrap(self, other) -> FqPoly:
        if isinstance(other, FqPoly):
            return other
        return FqPoly(self.field, (other,))

    def __add__(self, other):
        other = self._wrap(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return FqPoly(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return FqPoly._raw(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FqPoly._raw(self.field, ())
        F = self.field
        out = [0] * (len(a) + len(b) - 1)
        if F.k == 1:
            p = F.p
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return FqPoly(F, [c % p for c in out])
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return FqPoly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> FqPoly:
        F = self.field
        return FqPoly(F, [F.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: FqPoly):
        other = self._wrap(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) <= db:
            return FqPoly._raw(F, ()), self
        inv_lead = F.inv(other.lead)
        b = other.coeffs
        quo = [0] * (len(rem) - db)
        if F.k == 1:
            p = F.p
            for k in range(len(rem) - 1, db - 1, -1):
                c = rem[k] % p
                if c:
                    c = c * inv_lead % p
                    quo[k - db] = c
                    base = k - db
                    for i in range(db + 1):
                        rem[base + i] -= c * b[i]
            return FqPoly(F, quo), FqPoly(F, [r % p for r in rem[:db]])
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                c = F.mul(c, inv_lead)
                quo[k - db] = c
                base = k - db
                for i in range(db + 1):
                    rem[base + i] = F.sub(rem[base + i], F.mul(c, b[i]))
        return FqPoly(F, quo), FqPoly(F, rem[:db])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> FqPoly:
        if not self.coeffs or self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def __pow__(self, e: int) -> FqPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = FqPoly._raw(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, m: FqPoly) -> FqPoly:
        result = FqPoly._raw(self.field, (1,)) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> FqPoly:
        F = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            m = i % F.p
            acc = 0
            for _ in range(m):
                acc = F.add(acc, c)
            out.append(acc)
        return FqPoly(F, out)

    def valuation(self, pi: FqPoly) -> float | int:
        """Exponent of pi in self; infinity for the zero polynomial."""
        if not self.coeffs:
            return float("inf")
        v, f = 0, self
        while True:
            quo, rem = divmod(f, pi)
            if rem:
                return v
            f, v = quo, v + 1

    def to_json(self) -> list:
        if self.field.k == 1:
            return list(self.coeffs)
        return [self.field.digits(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field, data) -> FqPoly:
        return cls(field, [c if isinstance(c, int) else field.from_digits(c) for c in data])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def poly_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    while b:
        a, b = b, a % b
    return a.monic()


def is_irreducible(f: FqPoly) -> bool:
    """Rabin's test over F_q."""
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    f = f.monic()
    q = f.field.order
    t = FqPoly.t(f.field)
    # x^(q^j) mod f, for j = 1..d
    frob = [t % f]
    for _ in range(d):
        frob.append(frob[-1].powmod(q, f))
    if frob[d] != t % f:
        return False
    for r in prime_factors(d):
        h = frob[d // r] - t
        if poly_gcd(f, h).degree != 0:
            return False
    return True
