from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fflseries.algebra import CyclotomicNumber
from fflseries.fields import FqPoly, field_create

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def cyclotomics(draw, n=4):
    from fflseries.algebra.cyclotomic import totient

    coeffs = draw(st.lists(small_fractions, min_size=totient(n), max_size=totient(n)))
    return CyclotomicNumber(n, coeffs)


@st.composite
def fq_polys(draw, field, max_degree=5, monic=False):
    d = draw(st.integers(0, max_degree))
    cs = draw(st.lists(st.integers(0, field.order - 1), min_size=d + 1, max_size=d + 1))
    if monic:
        cs[-1] = 1
    return FqPoly(field, cs)


@pytest.fixture(scope="session")
def F3():
    return field_create(3)


@pytest.fixture(scope="session")
def F5():
    return field_create(5)


def frac(s: str) -> Fraction:
    return Fraction(s)
