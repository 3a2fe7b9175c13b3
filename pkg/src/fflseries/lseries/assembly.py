"""Formal L-series  L(T) = prod_v 1 / F_v(T^deg v)  truncated at T^N.

Places of equal degree with equal Euler factors are grouped, so a census of
a million places costs one power per distinct factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import Iterable, Mapping

from ..algebra.cyclotomic import CyclotomicNumber, GaloisAutomorphism, cyclo_automorphism
from ..algebra.series import Poly, TruncatedSeries, series_automorphism
from ..errors import IncompleteLocalData, IncomparableSeries
from ..fields import Place, necklace_count
from .factors import EulerFactor, factor_key, inverse_power, local_expansion, power_sums


def _zero(n: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.rational(0, n)


def _one(n: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.rational(1, n)


class LocalFactors:
    """Euler factors at all places of degree <= N, grouped by (degree, factor)."""

    def __init__(self, field, max_degree: int, include_infinity: bool, n: int = 1, keep_places: bool = False):
        self.field = field
        self.max_degree = max_degree
        self.include_infinity = include_infinity
        self.n = n
        self.groups: dict[int, dict[tuple, list]] = {d: {} for d in range(1, max_degree + 1)}
        self.place_counts: dict[int, int] = {d: 0 for d in range(1, max_degree + 1)}
        self.infinity: EulerFactor | None = None
        self.places: dict[Place, EulerFactor] | None = {} if keep_places else None

    def add(self, factor: EulerFactor) -> None:
        v = factor.place
        if v.is_infinity:
            if self.include_infinity:
                self.infinity = factor
                if self.places is not None:
                    self.places[v] = factor
            return
        if v.degree > self.max_degree:
            return
        if self.places is not None:
            if v in self.places:
                raise ValueError(f"duplicate factor at {v}")
            self.places[v] = factor
        self.add_group(v.degree, factor.poly, 1)

    def add_group(self, degree: int, poly: Poly, count: int) -> None:
        if count <= 0:
            return
        key = factor_key(poly)
        slot = self.groups[degree].get(key)
        if slot is None:
            self.groups[degree][key] = [poly, count]
        else:
            slot[1] += count
        self.place_counts[degree] += count

    def check_complete(self) -> None:
        q = self.field.order
        for d in range(1, self.max_degree + 1):
            want, have = necklace_count(q, d), self.place_counts[d]
            if have != want:
                raise IncompleteLocalData(f"{have} of {want} places of degree {d} have local data")
        if self.include_infinity and self.infinity is None:
            raise IncompleteLocalData("the infinite place has no local data")

    def items(self) -> Iterable[tuple[int, Poly, int]]:
        """(degree, factor, multiplicity) in a fixed order; infinity listed with degree 1."""
        for d in range(1, self.max_degree + 1):
            for key in sorted(self.groups[d]):
                poly, count = self.groups[d][key]
                yield d, poly, count
        if self.infinity is not None:
            yield 1, self.infinity.poly, 1

    def conjugate(self, sigma: GaloisAutomorphism) -> LocalFactors:
        out = LocalFactors(self.field, self.max_degree, self.include_infinity, self.n, self.places is not None)
        conj = lambda poly: poly.map(lambda c: cyclo_automorphism(c, sigma))  # noqa: E731
        for d in range(1, self.max_degree + 1):
            for poly, count in self.groups[d].values():
                out.add_group(d, conj(poly), count)
        if self.infinity is not None:
            out.infinity = self.infinity.conjugate(sigma)
        if self.places is not None:
            out.places = {v: f.conjugate(sigma) for v, f in self.places.items()}
        return out

    def place_set(self) -> dict:
        return {"q": self.field.order, "max_degree": self.max_degree, "include_infinity": self.include_infinity}

    @classmethod
    def from_mapping(
        cls, factors: Mapping[Place, EulerFactor], field, max_degree: int, include_infinity: bool, n: int | None = None
    ) -> LocalFactors:
        if n is None:
            n = reduce(lcm, (c.n for f in factors.values() for c in f.coeffs), 1)
        out = cls(field, max_degree, include_infinity, n, keep_places=True)
        for v in sorted(factors, key=Place.sort_key):
            out.add(factors[v])
        return out


@dataclass
class LSeries:
    q: int
    N: int
    series: TruncatedSeries
    n: int = 1
    provenance: dict = field(default_factory=dict)
    rational: tuple[Poly, Poly] | None = None

    @property
    def coefficients(self) -> tuple:
        return self.series.coeffs

    def place_set(self) -> dict:
        return self.provenance.get("place_set", {})

    def conjugate(self, sigma: GaloisAutomorphism) -> LSeries:
        rational = None
        if self.rational is not None:
            R, Q = self.rational
            f = lambda c: cyclo_automorphism(c, sigma)  # noqa: E731
            rational = (R.map(f), Q.map(f))
        return LSeries(self.q, self.N, series_automorphism(self.series, sigma), self.n, dict(self.provenance), rational)

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "N": self.N,
            "conductor": self.n,
            "places_included": self.place_set(),
            "coefficients": [_as_cyclo(c, self.n).to_json() for c in self.series.coeffs],
        }
        if self.rational is not None:
            R, Q = self.rational
            out["numerator"] = [_as_cyclo(c, self.n).to_json() for c in R.coeffs]
            out["denominator"] = [_as_cyclo(c, self.n).to_json() for c in Q.coeffs]
        return out


def _as_cyclo(c, n: int) -> CyclotomicNumber:
    return c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.rational(c, n)


def _to_local_factors(factors, N: int, include_infinity: bool, field=None) -> LocalFactors:
    if isinstance(factors, LocalFactors):
        if factors.max_degree < N:
            raise IncompleteLocalData(f"local data only through degree {factors.max_degree} < {N}")
        if factors.include_infinity != include_infinity:
            raise IncompleteLocalData("infinity flag differs from the local data")
        return factors
    if field is None:
        finite = [v for v in factors if not v.is_infinity]
        if not finite:
            raise IncompleteLocalData("no finite places supplied")
        field = finite[0].poly.field
    return LocalFactors.from_mapping(factors, field, N, include_infinity)


def assemble_l_series(factors, N: int, include_infinity: bool = False, field=None, description=None) -> LSeries:
    """Exact product of inverse Euler factors through T^N."""
    local = _to_local_factors(factors, N, include_infinity, field)
    local.check_complete()
    n = local.n
    acc = TruncatedSeries(N, [_one(n)] + [_zero(n)] * N)
    by_degree: dict[int, TruncatedSeries] = {}
    for d, poly, count in local.items():
        if d > N:
            continue
        m = N // d
        part = inverse_power(poly, -count, m)
        by_degree[d] = by_degree[d] * part if d in by_degree else part
    for d in sorted(by_degree):
        acc = acc * by_degree[d].spread(d, N)
    acc = acc.map(lambda c: _as_cyclo(c, n))
    prov = {"place_set": local.place_set(), "place_count": sum(local.place_counts.values()) + (local.infinity is not None)}
    if description is not None:
        prov["object"] = description
    return LSeries(local.field.order, N, acc, n, prov)


def trace_sums(factors: LocalFactors, n: int) -> CyclotomicNumber:
    """s_n = sum over places with deg v | n of deg v * tr(Fr_v^(n / deg v)), via Newton's identities."""
    total = _zero(factors.n)
    for d, poly, count in factors.items():
        if n % d:
            continue
        p = power_sums(poly, n // d)[-1]
        if p:
            total = total + _as_cyclo(p, factors.n) * (d * count)
    return total


def direct_sum_l(parts: list[LSeries]) -> LSeries:
    """L-series of a direct sum: the product of the parts."""
    if not parts:
        raise ValueError("need at least one part")
    first = parts[0]
    for other in parts[1:]:
        if (other.q, other.N, other.place_set()) != (first.q, first.N, first.place_set()):
            raise IncomparableSeries("direct sum of series with different place sets or truncation")
    n = reduce(lcm, (p.n for p in parts), 1)
    acc = first.series
    for other in parts[1:]:
        acc = acc * other.series
    prov = dict(first.provenance)
    prov["object"] = {"direct_sum": [p.provenance.get("object") for p in parts]}
    return LSeries(first.q, first.N, acc.map(lambda c: _as_cyclo(c, n)), n, prov)


# ---------------------------------------------------------------------------
# the rearrangement identity


def local_coefficient_tables(factors: Mapping[Place, EulerFactor], m: int) -> dict[Place, tuple]:
    """a_{v,k} for k <= m / deg v: coefficients of 1 / F_v(X)."""
    return {v: local_expansion(f, m // v.degree).coeffs for v, f in factors.items() if v.degree <= m}


def divisor_coefficients(tables: Mapping[Place, tuple], m: int, n: int = 1):
    """sum over effective divisors D of degree m of prod_v a_{v, n_v}."""
    places = sorted((v for v in tables if v.degree <= m), key=Place.sort_key)

    def walk(start: int, remaining: int):
        if remaining == 0:
            return _one(n)
        total = _zero(n)
        for idx in range(start, len(places)):
            v = places[idx]
            dv = v.degree
            if dv > remaining:
                break
            row = tables[v]
            for k in range(1, remaining // dv + 1):
                a = row[k]
                if a:
                    rest = walk(idx + 1, remaining - k * dv)
                    if rest:
                        total = total + rest * a
        return total

    return walk(0, m)
