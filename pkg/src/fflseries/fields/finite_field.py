"""Finite fields with elements encoded as integers.

An element of a field of order p^k is the integer sum d_i p^i of its
coordinates d_i in a fixed F_p-basis. Addition is therefore digit-wise
modulo p for every field here; only multiplication depends on the model.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import DivisionByZero, InvalidField

_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class _Field:
    """Operations common to every finite field model (digit-wise addition)."""

    p: int
    k: int
    order: int

    def _setup(self, p: int, k: int):
        self.p = p
        self.k = k
        self.order = p**k
        self._pows = [p**i for i in range(k)]
        self._add_tab = None
        self._mul_tab = None
        self._tables = None

    zero = 0
    one = 1
    _table_limit = _TABLE_LIMIT

    @property
    def characteristic(self) -> int:
        return self.p

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        p = self.p
        return sum((d % p) * w for d, w in zip(ds, self._pows))

    def elements(self):
        return range(self.order)

    def _small_tables(self):
        if self._add_tab is None and self.order <= self._table_limit:
            q = self.order
            self._add_tab = [[self._add(a, b) for b in range(q)] for a in range(q)]
            self._mul_tab = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        return self._add_tab is not None

    def _add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        out, w = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * w
            w *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._small_tables():
            return self._add_tab[a][b]
        return self._add(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        p = self.p
        out, w = 0, 1
        while a:
            a, r = divmod(a, p)
            out += (-r % p) * w
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self._small_tables():
            return self._mul_tab[a][b]
        return self._mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def is_square(self, a: int) -> bool:
        """True for nonzero squares; zero is reported separately by callers."""
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def quadratic_character(self, a: int) -> int:
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.order - 1
        for r in prime_factors(self.order - 1):
            while n % r == 0 and self.pow(a, n // r) == self.one:
                n //= r
        return n

    def primitive_element(self) -> int:
        factors = prime_factors(self.order - 1)
        for g in range(1, self.order):
            if all(self.pow(g, (self.order - 1) // r) != self.one for r in factors):
                return g
        raise AssertionError("no primitive element found")

    def tables(self):
        """Vectorised log/exp tables over every element (numpy)."""
        if self._tables is None:
            from .tables import FieldTables

            self._tables = FieldTables(self)
        return self._tables


class FiniteField(_Field):
    """F_p[x]/(modulus) for a monic irreducible modulus of degree k over F_p."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise InvalidField(f"{p} is not prime")
        if k < 1:
            raise InvalidField("extension degree must be at least 1")
        if modulus is None:
            modulus = (0, 1) if k == 1 else _smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InvalidField("modulus must be monic of the extension degree")
        self._setup(p, k)
        self.modulus = modulus

    def _mul(self, a: int, b: int) -> int:
        p, k, mod = self.p, self.k, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] += x * y
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(k):
                    prod[top - k + i] -= c * mod[i]
        return self.from_digits(prod[:k])

    @property
    def generator(self) -> int:
        """The class of x (equal to 0 in the prime field, where modulus = x)."""
        return self.p if self.k > 1 else 0

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.p}, {self.k})" if self.k > 1 else f"FiniteField({self.p})"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


def _is_irreducible_mod_p(p: int, coeffs: tuple[int, ...]) -> bool:
    from .fqpoly import FqPoly, is_irreducible

    return is_irreducible(FqPoly(field_create(p, 1), coeffs))


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # candidates in increasing integer code sum c_i p^i of the monic polynomial
    base = p**k
    for code in range(base, 2 * base):
        coeffs = []
        c = code
        while c:
            c, r = divmod(c, p)
            coeffs.append(r)
        if coeffs[0] == 0:
            continue
        if _is_irreducible_mod_p(p, tuple(coeffs)):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")


@lru_cache(maxsize=None)
def field_create(p: int, k: int = 1) -> FiniteField:
    """The field of order p^k with the smallest monic irreducible modulus."""
    return FiniteField(p, k)


def parse_order(value) -> tuple[int, int]:
    """Parse ``"P"``, ``"P^E"`` or an integer prime power into (p, e)."""
    if isinstance(value, int):
        q = value
        for p in range(2, q + 1):
            if q % p == 0:
                e, r = 0, q
                while r % p == 0:
                    r //= p
                    e += 1
                if r != 1 or not is_prime(p):
                    raise InvalidField(f"{q} is not a prime power")
                return p, e
        raise InvalidField(f"{q} is not a prime power")
    text = str(value).strip()
    if "^" in text:
        p, e = text.split("^", 1)
        p, e = int(p), int(e)
        if not is_prime(p) or e < 1:
            raise InvalidField(f"{text} is not of the form prime^exponent")
        return p, e
    return parse_order(int(text))
