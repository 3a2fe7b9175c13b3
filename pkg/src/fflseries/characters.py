"""Dirichlet characters of F_q[t].

A character mod m is stored by the images of a fixed basis of the unit
group (F_q[t]/m)^x: generator g_i goes to zeta_n^{e_i}. Evaluation is a
table lookup of discrete logarithms built once per modulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import product
from math import gcd, lcm
from typing import Mapping, Sequence

from .algebra.cyclotomic import CyclotomicNumber, GaloisAutomorphism, divisors
from .errors import ConfigError, InvalidAutomorphism
from .fields import FqPoly, Place, poly_gcd


class UnitGroup:
    """(F_q[t]/m)^x with a basis g_1..g_r and a full discrete-log table."""

    def __init__(self, m: FqPoly):
        if m.degree < 1 or not m.is_monic():
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = m
        self.field = m.field
        F = self.field
        one = FqPoly.constant(F, 1)
        units = []
        for code in range(F.order**m.degree):
            f = FqPoly.from_code(F, code)
            if f and poly_gcd(f, m).degree == 0:
                units.append(f)
        self.order = len(units)
        self._one_code = one.code
        orders = {u.code: self._element_order(u) for u in units}
        self._units = {u.code: u for u in units}
        gens = self._choose_basis(orders)
        if gens is None:
            raise AssertionError(f"no basis found for the unit group mod {m}")
        self.generators: tuple[FqPoly, ...] = tuple(self._units[c] for c in gens)
        self.generator_orders: tuple[int, ...] = tuple(orders[c] for c in gens)
        self._dlog = self._span(gens, orders)
        if len(self._dlog) != self.order or set(self._dlog) != set(self._units):
            raise AssertionError("discrete-log table does not cover the unit group")

    def _mulmod(self, a: FqPoly, b: FqPoly) -> FqPoly:
        return (a * b) % self.modulus

    def _element_order(self, u: FqPoly) -> int:
        for d in divisors(self.order):
            if u.powmod(d, self.modulus).code == self._one_code:
                return d
        raise AssertionError("element order does not divide the group order")

    def _span(self, gens: Sequence[int], orders: Mapping[int, int]) -> dict[int, tuple[int, ...]] | None:
        """Map code -> exponent vector for the subgroup generated by ``gens``; None if not a direct product."""
        table = {self._one_code: ()}
        for g in gens:
            gpoly = self._units[g]
            new = {}
            for code, exps in table.items():
                cur = self._units[code]
                for j in range(orders[g]):
                    if cur.code in new:
                        return None
                    new[cur.code] = exps + (j,)
                    cur = self._mulmod(cur, gpoly)
            table = new
        return table

    def _choose_basis(self, orders: Mapping[int, int]) -> list[int] | None:
        # largest order first, ties by residue code; backtrack if a greedy choice cannot be completed
        ranked = sorted(orders, key=lambda c: (-orders[c], c))

        def extend(chosen: list[int], size: int, bound: int):
            if size == self.order:
                return chosen
            for c in ranked:
                o = orders[c]
                if o > bound or o == 1 or self.order % (size * o):
                    continue
                if self._span(chosen + [c], orders) is None:
                    continue
                found = extend(chosen + [c], size * o, o)
                if found is not None:
                    return found
            return None

        return extend([], 1, self.order)

    def units(self) -> list[FqPoly]:
        return [self._units[c] for c in sorted(self._units)]

    def dlog(self, f: FqPoly) -> tuple[int, ...] | None:
        """Exponents of f mod m in the basis, or None when f is not a unit."""
        return self._dlog.get((f % self.modulus).code)

    def dlog_code(self, code: int) -> tuple[int, ...] | None:
        return self._dlog.get(code)

    def exponent(self) -> int:
        return reduce(lcm, self.generator_orders, 1)

    def __repr__(self):
        return f"UnitGroup({self.modulus}, orders={self.generator_orders})"


_GROUPS: dict[FqPoly, UnitGroup] = {}


def unit_group(m: FqPoly) -> UnitGroup:
    if m not in _GROUPS:
        _GROUPS[m] = UnitGroup(m)
    return _GROUPS[m]


@dataclass(frozen=True)
class DirichletCharacter:
    """g_i -> zeta_n^{e_i}; ``infinity`` is "ramified" or an exponent j with chi(oo) = zeta_n^j."""

    group: UnitGroup
    n: int
    exponents: tuple[int, ...]
    infinity: str | int = "ramified"
    _values: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError("order", "character order must be positive")
        exps = tuple(int(e) % self.n for e in self.exponents)
        if len(exps) != len(self.group.generators):
            raise ConfigError("exponents", f"expected {len(self.group.generators)} generator images")
        for e, o in zip(exps, self.group.generator_orders):
            if (e * o) % self.n:
                raise ConfigError("exponents", f"zeta_{self.n}^{e} has order not dividing {o}")
        object.__setattr__(self, "exponents", exps)
        if self.infinity != "ramified":
            if not isinstance(self.infinity, int):
                raise ConfigError("infinity", "expected 'ramified' or an integer exponent")
            object.__setattr__(self, "infinity", self.infinity % self.n)

    @property
    def modulus(self) -> FqPoly:
        return self.group.modulus

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return (self.modulus, self.n, self.exponents, self.infinity) == (
            other.modulus,
            other.n,
            other.exponents,
            other.infinity,
        )

    def __hash__(self):
        return hash((self.modulus, self.n, self.exponents, self.infinity))

    def exact_order(self) -> int:
        g = reduce(gcd, self.exponents, self.n)
        if self.infinity != "ramified":
            g = gcd(g, self.infinity)
        return self.n // g

    def normalized(self) -> DirichletCharacter:
        """The same character written with n equal to its exact order."""
        n = self.exact_order()
        r = self.n // n
        inf = self.infinity if self.infinity == "ramified" else self.infinity // r
        return DirichletCharacter(self.group, n, tuple(e // r for e in self.exponents), inf)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def exponent_of(self, f: FqPoly) -> int | None:
        """k with chi(f) = zeta_n^k, or None when gcd(f, m) != 1."""
        code = (f % self.modulus).code
        return self.exponent_of_code(code)

    def exponent_of_code(self, code: int) -> int | None:
        if code in self._values:
            return self._values[code]
        x = self.group.dlog_code(code)
        k = None if x is None else sum(e * xi for e, xi in zip(self.exponents, x)) % self.n
        self._values[code] = k
        return k

    def value_at_code(self, code: int) -> CyclotomicNumber:
        k = self.exponent_of_code(code)
        return CyclotomicNumber.rational(0, self.n) if k is None else CyclotomicNumber.zeta(self.n, k)

    def is_ramified_at(self, v: Place) -> bool:
        if v.is_infinity:
            return self.infinity == "ramified"
        return (self.modulus % v.poly).degree < 0

    def value_at_place(self, v: Place) -> CyclotomicNumber:
        """chi(pi_v) for finite v, chi(oo) at infinity; zero where ramified."""
        if v.is_infinity:
            if self.infinity == "ramified":
                return CyclotomicNumber.rational(0, self.n)
            return CyclotomicNumber.zeta(self.n, self.infinity)
        return character_eval(self, v.poly)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus.to_json(),
            "order": self.n,
            "exponents": list(self.exponents),
            "infinity": self.infinity,
        }

    @classmethod
    def from_json(cls, field_, data: Mapping) -> DirichletCharacter:
        for key in ("modulus", "order", "exponents"):
            if key not in data:
                raise ConfigError(f"character.{key}", "missing")
        m = FqPoly.from_json(field_, data["modulus"])
        if m.degree < 1 or not m.is_monic():
            raise ConfigError("character.modulus", "modulus must be monic of degree >= 1")
        inf = data.get("infinity", "ramified")
        return cls(unit_group(m), int(data["order"]), tuple(data["exponents"]), inf)

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, n={self.n}, e={self.exponents}, oo={self.infinity})"


def character_eval(chi: DirichletCharacter, f: FqPoly) -> CyclotomicNumber:
    return chi.value_at_code((f % chi.modulus).code)


def _monic_divisors(m: FqPoly) -> list[FqPoly]:
    F = m.field
    q = F.order
    out = []
    for d in range(m.degree + 1):
        for code in range(q**d, 2 * q**d):
            g = FqPoly.from_code(F, code)
            if (m % g).degree < 0:
                out.append(g)
    return out


@lru_cache(maxsize=None)
def is_primitive(chi: DirichletCharacter) -> bool:
    """True iff chi is nontrivial on ker((F_q[t]/m)^x -> (F_q[t]/m')^x) for every proper divisor m'."""
    m = chi.modulus
    units = chi.group.units()
    for d in _monic_divisors(m):
        if d.degree == m.degree:
            continue
        kernel = units if d.degree == 0 else [u for u in units if (u % d).code == 1]
        if all(chi.exponent_of(u) == 0 for u in kernel):
            return False
    return True


@lru_cache(maxsize=None)
def conductor(chi: DirichletCharacter) -> FqPoly:
    """The smallest-degree monic divisor m' of m through which chi factors."""
    units = chi.group.units()
    for d in _monic_divisors(chi.modulus):
        kernel = units if d.degree == 0 else [u for u in units if (u % d).code == 1]
        if all(chi.exponent_of(u) == 0 for u in kernel):
            return d
    return chi.modulus


def character_conjugate(chi: DirichletCharacter, sigma: GaloisAutomorphism) -> DirichletCharacter:
    """chi^sigma: exponents e -> a e mod n."""
    if sigma.n % chi.n:
        raise InvalidAutomorphism(f"automorphism of Q(zeta_{sigma.n}) does not act on Q(zeta_{chi.n})")
    a = sigma.a % chi.n if chi.n > 1 else 0
    if chi.n > 1 and gcd(a, chi.n) != 1:
        raise InvalidAutomorphism(f"{sigma.a} is not a unit mod {chi.n}")
    inf = chi.infinity if chi.infinity == "ramified" else a * chi.infinity
    return DirichletCharacter(chi.group, chi.n, tuple(a * e for e in chi.exponents), inf)


def all_characters(group: UnitGroup, infinity: str | int = "ramified") -> list[DirichletCharacter]:
    """Every character of the group, each written with n equal to its exact order."""
    n = group.exponent()
    out = []
    for ks in product(*(range(o) for o in group.generator_orders)):
        exps = tuple(k * (n // o) for k, o in zip(ks, group.generator_orders))
        out.append(DirichletCharacter(group, n, exps, infinity if infinity == "ramified" else 0).normalized())
    return out


@dataclass(frozen=True)
class CharacterTuple:
    """A direct sum of one-dimensional characters."""

    characters: tuple[DirichletCharacter, ...]

    def __post_init__(self):
        object.__setattr__(self, "characters", tuple(self.characters))
        if not self.characters:
            raise ConfigError("characters", "a character tuple must be nonempty")

    @property
    def n(self) -> int:
        return reduce(lcm, (c.n for c in self.characters), 1)

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def conjugate(self, sigma: GaloisAutomorphism) -> CharacterTuple:
        return CharacterTuple(tuple(character_conjugate(c, sigma) for c in self.characters))

    def trace(self, f: FqPoly) -> CyclotomicNumber:
        total = CyclotomicNumber.rational(0, self.n)
        for c in self.characters:
            total = total + character_eval(c, f)
        return total
