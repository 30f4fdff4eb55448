import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from germoid.scalars import Scalar

fractions_st = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)
scalars_st = st.builds(Scalar, fractions_st, fractions_st)


@pytest.fixture
def rng():
    return random.Random(20406)
