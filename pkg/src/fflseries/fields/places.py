"""Places of K = F_q(t), effective divisors, and residue fields."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from ..errors import BadReductionOfFunction
from .finite_field import _Field, prime_factors
from .fqpoly import FqPoly, is_irreducible


def mobius(n: int) -> int:
    result = 1
    for p in prime_factors(n):
        if n % (p * p) == 0:
            return 0
        result = -result
    return result


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q."""
    total = sum(mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


@dataclass(frozen=True, slots=True)
class Place:
    """A closed point of P^1: a monic irreducible ``poly``, or infinity (poly None)."""

    poly: FqPoly | None = None

    @classmethod
    def finite(cls, poly: FqPoly, check: bool = True) -> Place:
        if check and (not poly.is_monic() or not is_irreducible(poly)):
            raise ValueError(f"{poly} is not monic irreducible")
        return cls(poly)

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self) -> tuple:
        if self.poly is None:
            return (1, 1, 0)
        return (self.poly.degree, 0, self.poly.code)

    def to_json(self) -> dict:
        if self.poly is None:
            return {"infinity": True}
        return {"finite": self.poly.to_json()}

    @classmethod
    def from_json(cls, field, data: Mapping) -> Place:
        if data.get("infinity"):
            return cls.infinity()
        return cls(FqPoly.from_json(field, data["finite"]))

    def __repr__(self):
        return "Place(oo)" if self.poly is None else f"Place({self.poly})"


class EffectiveDivisor:
    """A finite formal sum of places with positive multiplicities."""

    __slots__ = ("_items",)

    def __init__(self, items: Mapping[Place, int] | Iterable[tuple[Place, int]] = ()):
        items = dict(items)
        if any(n <= 0 for n in items.values()):
            raise ValueError("multiplicities must be positive")
        self._items = tuple(sorted(items.items(), key=lambda kv: kv[0].sort_key()))

    def items(self):
        return self._items

    @property
    def degree(self) -> int:
        return sum(n * v.degree for v, n in self._items)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        return isinstance(other, EffectiveDivisor) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def to_json(self) -> list:
        return [{"place": v.to_json(), "multiplicity": n} for v, n in self._items]

    def __repr__(self):
        return " + ".join(f"{n}*{v!r}" for v, n in self._items) or "0"


# ---------------------------------------------------------------------------
# enumeration of places


def _monic_codes(q: int, d: int) -> range:
    return range(q**d, 2 * q**d)


def _irreducibles_rabin(F: _Field, d: int) -> list[FqPoly]:
    out = []
    for code in _monic_codes(F.order, d):
        f = FqPoly.from_code(F, code)
        if is_irreducible(f):
            out.append(f)
    return out


def _digit_matrix(n_rows: int, q: int, width: int) -> np.ndarray:
    codes = np.arange(n_rows, dtype=np.int64)
    out = np.empty((n_rows, width), dtype=np.int64)
    for j in range(width):
        codes, out[:, j] = np.divmod(codes, q)
    return out


def _irreducibles_sieve(F: _Field, d: int) -> list[FqPoly]:
    q = F.order
    size = q**d
    reducible = np.zeros(size, dtype=bool)
    if F.k == 1:
        mul_tab = add_tab = None
    else:
        F._small_tables()
        mul_tab = np.array(F._mul_tab, dtype=np.int64)
        add_tab = np.array(F._add_tab, dtype=np.int64)
    weights = np.array([q**j for j in range(d)], dtype=np.int64)
    for i in range(1, d // 2 + 1):
        e = d - i
        G = _digit_matrix(q**e, q, e)
        G = np.concatenate([G, np.ones((q**e, 1), dtype=np.int64)], axis=1)
        for f in enumerate_monic_irreducibles(F, i):
            fc = f.coeffs
            P = np.zeros((q**e, d + 1), dtype=np.int64)
            if mul_tab is None:
                for l, c in enumerate(fc):
                    if c:
                        P[:, l : l + e + 1] += c * G
                P %= q
            else:
                for l, c in enumerate(fc):
                    if c:
                        P[:, l : l + e + 1] = add_tab[P[:, l : l + e + 1], mul_tab[c][G]]
            reducible[P[:, :d] @ weights] = True
    lows = np.flatnonzero(~reducible)
    return [FqPoly.from_code(F, int(c) + size) for c in lows]


@lru_cache(maxsize=None)
def _enumerate_cached(F: _Field, d: int, method: str) -> tuple[FqPoly, ...]:
    if d == 1:
        return tuple(FqPoly._raw(F, (c, 1)) for c in F.elements())
    if method == "auto":
        method = "rabin" if F.order**d <= 2048 else "sieve"
    if method == "rabin":
        return tuple(_irreducibles_rabin(F, d))
    if method == "sieve":
        return tuple(_irreducibles_sieve(F, d))
    raise ValueError(f"unknown method {method!r}")


def enumerate_monic_irreducibles(F: _Field, d: int, method: str = "auto") -> tuple[FqPoly, ...]:
    """All monic irreducibles of degree d over F, ordered by :attr:`FqPoly.code`."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    return _enumerate_cached(F, d, method)


def enumerate_places(F: _Field, max_degree: int, include_infinity: bool = False) -> list[Place]:
    places = [Place(f) for d in range(1, max_degree + 1) for f in enumerate_monic_irreducibles(F, d)]
    if include_infinity and max_degree >= 1:
        places.append(Place.infinity())
    return sorted(places, key=Place.sort_key)


def enumerate_effective_divisors(F: _Field, m: int, include_infinity: bool = False) -> list[EffectiveDivisor]:
    """Every effective divisor of degree exactly m, each once."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    places = enumerate_places(F, m, include_infinity)
    out: list[EffectiveDivisor] = []

    def extend(start: int, remaining: int, chosen: dict):
        if remaining == 0:
            out.append(EffectiveDivisor(chosen))
            return
        for idx in range(start, len(places)):
            v = places[idx]
            dv = v.degree
            if dv > remaining:
                break
            for n in range(1, remaining // dv + 1):
                chosen[v] = n
                extend(idx + 1, remaining - n * dv, chosen)
            del chosen[v]

    extend(0, m, {})
    return out


# ---------------------------------------------------------------------------
# residue fields


class ResidueField(_Field):
    """F_q[t]/(pi) for a monic irreducible pi; element code = sum c_j q^j."""

    _table_limit = 64

    def __init__(self, base: _Field, modulus: FqPoly):
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError("modulus must be monic of positive degree")
        self.base = base
        self.modulus = modulus
        self.degree_over_base = modulus.degree
        self._setup(base.p, base.k * modulus.degree)

    def embed(self, c: int) -> int:
        """Image of an element of the base field (a constant)."""
        return c

    def element(self, f: FqPoly) -> int:
        return (f % self.modulus).code

    def poly(self, a: int) -> FqPoly:
        return FqPoly.from_code(self.base, a)

    def _mul(self, a: int, b: int) -> int:
        return ((self.poly(a) * self.poly(b)) % self.modulus).code

    def mul(self, a: int, b: int) -> int:
        if self._small_tables():
            return self._mul_tab[a][b]
        return self._mul(a, b)

    def add(self, a: int, b: int) -> int:
        if self._small_tables():
            return self._add_tab[a][b]
        return self._add(a, b)

    def relative_frobenius(self, a: int) -> int:
        """x -> x^q, generating Gal over the base field."""
        return self.pow(a, self.base.order)

    @property
    def generator(self) -> int:
        """Image of t."""
        return self.element(FqPoly.t(self.base))

    def __repr__(self):
        return f"ResidueField({self.base!r}, {self.modulus})"


@lru_cache(maxsize=4096)
def residue_field(place: Place, base: _Field | None = None) -> _Field:
    if place.is_infinity:
        if base is None:
            raise ValueError("the residue field at infinity needs the base field")
        return base
    return ResidueField(place.poly.field, place.poly)


def residue_map(place: Place, f, base: _Field | None = None) -> int:
    """Reduce a polynomial or a (numerator, denominator) pair at ``place``."""
    num, den = (f if isinstance(f, tuple) else (f, None))
    if place.is_infinity:
        F = num.field
        if den is None:
            if num.degree > 0:
                raise BadReductionOfFunction(f"{num} has a pole at infinity")
            return num[0]
        if not den:
            raise BadReductionOfFunction("zero denominator")
        if num.degree > den.degree:
            raise BadReductionOfFunction("function has a pole at infinity")
        if num.degree < den.degree:
            return 0
        return F.div(num.lead, den.lead)
    R = residue_field(place)
    a = R.element(num)
    if den is None:
        return a
    b = R.element(den)
    if b == 0:
        raise BadReductionOfFunction(f"denominator vanishes at {place}")
    return R.div(a, b)
