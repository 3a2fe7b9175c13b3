import pytest
from hypothesis import given
from hypothesis import strategies as st

from fflseries.errors import BadReductionOfFunction, InvalidField
from fflseries.fields import (
    FqPoly,
    Place,
    enumerate_effective_divisors,
    enumerate_monic_irreducibles,
    field_create,
    is_irreducible,
    necklace_count,
    parse_order,
    residue_field,
    residue_map,
)

from conftest import fq_polys


def brute_irreducibles(F, d):
    """Monic degree-d polynomials with no monic factor of degree 1..d//2."""
    q = F.order
    small = [FqPoly.from_code(F, c) for e in range(1, d // 2 + 1) for c in range(q**e, 2 * q**e)]
    out = []
    for code in range(q**d, 2 * q**d):
        f = FqPoly.from_code(F, code)
        if all((f % g).degree >= 0 for g in small):
            out.append(f)
    return out


class TestFiniteField:
    def test_prime_field(self):
        F = field_create(5, 1)
        assert F.order == 5 and F.modulus == (0, 1)

    def test_f25_modulus_is_smallest(self):
        p = 5
        irreducible = []
        for c0 in range(p):
            for c1 in range(p):
                if all((x * x + c1 * x + c0) % p for x in range(p)):
                    irreducible.append((c0 + c1 * p, (c0, c1, 1)))
        assert field_create(5, 2).modulus == min(irreducible)[1]

    def test_f4(self):
        assert field_create(2, 2).modulus == (1, 1, 1)

    def test_non_prime(self):
        with pytest.raises(InvalidField):
            field_create(6)

    def test_parse_order(self):
        assert parse_order("5") == (5, 1)
        assert parse_order("3^2") == (3, 2)
        assert parse_order(25) == (5, 2)
        with pytest.raises(InvalidField):
            parse_order("12")

    @pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2), (7, 1)])
    def test_field_axioms_and_frobenius(self, p, k):
        F = field_create(p, k)
        els = list(F.elements())
        for a in els:
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
            x = a
            for _ in range(k):
                x = F.frobenius(x)
            assert x == a
        image = {F.frobenius(a) for a in els}
        assert len(image) == len(els)
        for a in els[:7]:
            for b in els[:7]:
                assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


class TestIrreducibles:
    def test_f2(self):
        F = field_create(2)
        assert [f.to_json() for f in enumerate_monic_irreducibles(F, 1)] == [[0, 1], [1, 1]]
        assert [f.to_json() for f in enumerate_monic_irreducibles(F, 2)] == [[1, 1, 1]]

    def test_f3_quadratics(self):
        assert len(enumerate_monic_irreducibles(field_create(3), 2)) == 3

    @pytest.mark.parametrize("p,k,d", [(2, 1, 6), (3, 1, 5), (5, 1, 3), (3, 2, 2), (2, 2, 3)])
    def test_against_trial_division(self, p, k, d):
        F = field_create(p, k)
        assert list(enumerate_monic_irreducibles(F, d)) == brute_irreducibles(F, d)

    @pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (5, 1), (7, 1), (3, 2)])
    def test_necklace_count(self, p, k):
        F = field_create(p, k)
        for d in range(1, 7):
            found = enumerate_monic_irreducibles(F, d)
            assert len(found) == necklace_count(F.order, d)
            assert [f.code for f in found] == sorted(f.code for f in found)

    def test_necklace_count_f25(self):
        F = field_create(5, 2)
        for d in range(1, 5):
            assert len(enumerate_monic_irreducibles(F, d)) == necklace_count(25, d)

    @pytest.mark.slow
    def test_necklace_count_f25_degree5(self):
        assert len(enumerate_monic_irreducibles(field_create(5, 2), 5)) == necklace_count(25, 5)

    def test_sieve_agrees_with_rabin(self):
        F = field_create(3)
        for d in range(1, 6):
            assert enumerate_monic_irreducibles(F, d, method="sieve") == enumerate_monic_irreducibles(F, d, method="rabin")


class TestDivisors:
    def test_empty(self):
        divs = enumerate_effective_divisors(field_create(2), 0)
        assert len(divs) == 1 and divs[0].degree == 0

    def test_degree_one(self):
        divs = enumerate_effective_divisors(field_create(2), 1)
        assert sorted(tuple(v.poly.to_json()) for D in divs for v, _ in D.items()) == [(0, 1), (1, 1)]

    def test_q3_m2(self):
        assert len(enumerate_effective_divisors(field_create(3), 2)) == 9

    @pytest.mark.parametrize("p,mmax", [(2, 8), (3, 7), (5, 4)])
    def test_unique_factorization_count(self, p, mmax):
        F = field_create(p)
        for m in range(mmax + 1):
            divs = enumerate_effective_divisors(F, m)
            assert len(divs) == p**m
            assert len(set(divs)) == len(divs)
            assert all(D.degree == m for D in divs)

    def test_divisors_match_monic_polynomials(self):
        F = field_create(3)
        products = set()
        for D in enumerate_effective_divisors(F, 4):
            f = FqPoly.constant(F, 1)
            for v, n in D.items():
                for _ in range(n):
                    f = f * v.poly
            products.add(f.code)
        assert products == set(range(81, 162))

    def test_with_infinity(self):
        F = field_create(2)
        # the extra degree-one place adds sum_{j<=m} q^j divisors
        for m in range(5):
            assert len(enumerate_effective_divisors(F, m, include_infinity=True)) == sum(2**j for j in range(m + 1))


class TestResidueMap:
    def test_evaluation_at_zero(self):
        F = field_create(5)
        t = FqPoly.t(F)
        assert residue_map(Place(t), t + 3) == 3

    def test_evaluation_at_one(self):
        F = field_create(5)
        t = FqPoly.t(F)
        assert residue_map(Place(t - 1), t * t) == 1

    def test_quadratic_place(self):
        F = field_create(3)
        pi = enumerate_monic_irreducibles(F, 2)[0]
        R = residue_field(Place(pi))
        g = residue_map(Place(pi), FqPoly.t(F))
        assert g == R.generator
        # t satisfies pi in the residue field
        assert R.add(R.mul(g, g), pi[0]) == 0 and R.order == 9

    def test_denominator_in_place(self):
        F = field_create(5)
        t = FqPoly.t(F)
        with pytest.raises(BadReductionOfFunction):
            residue_map(Place(t), (FqPoly.constant(F, 1), t * (t + 1)))

    def test_fraction(self):
        F = field_create(5)
        t = FqPoly.t(F)
        # (t + 1) / (t + 2) at t = 0 is 1/2 = 3
        assert residue_map(Place(t), (t + 1, t + 2)) == 3

    @given(st.data())
    def test_ring_homomorphism(self, data):
        F = field_create(3)
        pi = data.draw(st.sampled_from(list(enumerate_monic_irreducibles(F, 3))))
        v = Place(pi)
        R = residue_field(v)
        f = data.draw(fq_polys(F, 6))
        g = data.draw(fq_polys(F, 6))
        assert residue_map(v, f * g) == R.mul(residue_map(v, f), residue_map(v, g))
        assert residue_map(v, f + g) == R.add(residue_map(v, f), residue_map(v, g))

    def test_frobenius_order_on_residue_field(self):
        F = field_create(3, 2)
        for pi in enumerate_monic_irreducibles(F, 2)[:5]:
            R = residue_field(Place(pi))
            for a in range(0, R.order, 7):
                x = a
                for _ in range(F.k * pi.degree):
                    x = R.frobenius(x)
                assert x == a


class TestPlaces:
    def test_serialization(self):
        F = field_create(3)
        v = Place(FqPoly(F, [1, 0, 1]))
        assert v.to_json() == {"finite": [1, 0, 1]}
        assert Place.from_json(F, v.to_json()) == v
        assert Place.infinity().to_json() == {"infinity": True}
        assert Place.from_json(F, {"infinity": True}).is_infinity

    def test_finite_checks(self):
        F = field_create(3)
        with pytest.raises(ValueError):
            Place.finite(FqPoly(F, [2, 0, 1]))  # t^2 - 1
        assert Place.finite(FqPoly(F, [1, 0, 1])).degree == 2

    @given(st.data())
    def test_irreducibility_matches_enumeration(self, data):
        F = field_create(5)
        f = data.draw(fq_polys(F, 4, monic=True))
        if f.degree >= 1:
            assert is_irreducible(f) == (f in set(enumerate_monic_irreducibles(F, f.degree)))
