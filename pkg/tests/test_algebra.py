from fractions import Fraction

import pytest

from germoid.algebra import (
    AlgebraElement,
    CompatibilityError,
    NotNormalizerError,
    conditional_expectation,
    cross_central_element,
    cross_generators,
    embed_C0,
    evaluate_convolution_pointwise,
    from_sheet,
    has_nonunit_value,
    induced_point_map,
    is_bisection_support,
    lambda_scalar,
    open_support,
    verify_central_ideal,
)
from germoid.germs import CenterGerm, EdgeGerm, GermError, GermGroupoid
from germoid.perms import Permutation, parse_cycles
from germoid.poly import PiecewisePoly
from germoid.sampling import random_algebra_element, random_germ, random_ppfun
from germoid.scalars import Scalar
from germoid.starspace import CENTER, EdgePoint, PPFun


@pytest.fixture
def cross():
    return GermGroupoid.cross()


@pytest.fixture
def star4():
    return GermGroupoid.star(4)


@pytest.fixture
def f(cross):
    return cross_central_element(cross)


def _sx():
    return parse_cycles("(1 2)", 4)


def _sy():
    return parse_cycles("(3 4)", 4)


# -- constructors ---------------------------------------------------------------

def test_unit_is_identity_sheet(cross):
    one = AlgebraElement.unit(cross)
    assert one == from_sheet(cross, cross.group.identity, PPFun.one(4))
    assert set(one.strips) == {(1, 1), (2, 2), (3, 3), (4, 4)}
    g = random_algebra_element(cross, __import__("random").Random(1))
    assert one * g == g
    assert g * one == g


def test_sheet_strips_follow_the_permutation(cross):
    fx = from_sheet(cross, _sx(), PPFun.one(4))
    assert set(fx.strips) == {(1, 2), (2, 1), (3, 3), (4, 4)}
    assert fx.center_value(_sx()) == Scalar(1)
    assert fx.evaluate(EdgeGerm(Fraction(1, 2), 1, 2)) == Scalar(1)
    assert fx.evaluate(EdgeGerm(Fraction(1, 2), 1, 1)) == Scalar(0)


def test_zero_sheet(cross):
    z = from_sheet(cross, _sx(), PPFun.zero(4))
    assert z.is_zero()
    assert z == AlgebraElement.zero(cross)


def test_from_sheet_requires_group_membership(cross):
    with pytest.raises(Exception):
        from_sheet(cross, parse_cycles("(1 3)", 4), PPFun.one(4))


def test_embed_is_multiplicative(cross, rng):
    for _ in range(10):
        h = random_ppfun(4, rng)
        k = random_ppfun(4, rng)
        assert embed_C0(cross, h) * embed_C0(cross, k) == embed_C0(cross, h * k)
    assert embed_C0(cross, PPFun.one(4)) == AlgebraElement.unit(cross)


def test_embed_diagonal_only(cross):
    tpoly = PiecewisePoly.from_poly((Scalar(0), Scalar(1)))
    h = PPFun(4, Scalar(0), [tpoly] + [PiecewisePoly.zero()] * 3)
    e = embed_C0(cross, h)
    assert set(e.strips) == {(1, 1)}


# -- the compatibility validator ---------------------------------------------------

def test_compatibility_rejects_bad_normal_forms(cross):
    # nonzero center value with strips that vanish at 0: the gluing law fails
    with pytest.raises(CompatibilityError):
        AlgebraElement(cross, {}, {cross.group.identity: Scalar(1)})
    # an indicator strip with no center mass fails too
    with pytest.raises(CompatibilityError):
        AlgebraElement(cross, {(1, 1): PiecewisePoly.const(1)}, {})


def test_compatibility_preserved_by_random_op_sequences(cross, rng):
    for _ in range(10):
        a = random_algebra_element(cross, rng, sheets=2)
        b = random_algebra_element(cross, rng, sheets=2)
        for result in (
            a + b,
            a - b,
            a.scale(Scalar(Fraction(2, 3), Fraction(-1, 5))),
            a.adjoint(),
            a * b,
            (a * b).adjoint() * a,
        ):
            result.check_compatible()  # raises on violation


# -- linear ops and evaluation -------------------------------------------------------

def test_value_table_of_the_central_element(cross, f):
    ident = cross.group.identity
    assert f.evaluate(CenterGerm(ident)) == Scalar(1)
    assert f.evaluate(CenterGerm(_sx())) == Scalar(-1)
    assert f.evaluate(CenterGerm(_sy())) == Scalar(-1)
    assert f.evaluate(CenterGerm(_sx() * _sy())) == Scalar(1)
    assert not f.strips  # vanishes away from the center
    assert f.evaluate(EdgeGerm(Fraction(1, 2), 1, 1)) == Scalar(0)
    assert f.evaluate(EdgeGerm(Fraction(1, 2), 1, 2)) == Scalar(0)


def test_evaluate_outside_groupoid_raises(cross, f):
    with pytest.raises(GermError):
        f.evaluate(EdgeGerm(Fraction(1, 2), 1, 3))
    with pytest.raises(GermError):
        f.evaluate(CenterGerm(parse_cycles("(1 3)", 4)))


def test_adjoint_is_an_involution(cross, rng):
    for _ in range(10):
        a = random_algebra_element(cross, rng, sheets=2)
        assert a.adjoint().adjoint() == a
    fx = from_sheet(cross, _sx(), PPFun.one(4))
    # the sheet of an involution is self-adjoint with real coefficients
    assert fx.adjoint() == fx


def test_adjoint_evaluates_to_conjugate_at_inverse(star4, rng):
    for _ in range(10):
        a = random_algebra_element(star4, rng, sheets=2)
        g = random_germ(star4, rng)
        assert a.adjoint().evaluate(g) == a.evaluate(star4.inverse(g)).conjugate()


# -- convolution ----------------------------------------------------------------

def test_sheet_indicators_multiply_like_the_group(star4):
    els = star4.group.elements
    for s in els[:6]:
        for t in els[:6]:
            lhs = from_sheet(star4, s, 1) * from_sheet(star4, t, 1)
            assert lhs == from_sheet(star4, s * t, 1)


def test_center_convolution_formula(cross, f):
    gx = from_sheet(cross, _sx(), PPFun.one(4))
    assert (gx * f).evaluate(CenterGerm(cross.group.identity)) == Scalar(-1)


def test_convolution_matches_pointwise_sums(star4, rng):
    samples = 0
    for _ in range(12):
        a = random_algebra_element(star4, rng, sheets=2)
        b = random_algebra_element(star4, rng, sheets=2)
        ab = a * b
        for _ in range(16):
            g = random_germ(star4, rng)
            assert ab.evaluate(g) == evaluate_convolution_pointwise(a, b, g)
            samples += 1
    assert samples >= 150


def test_associativity_and_star_antimultiplicativity(star4, rng):
    for _ in range(8):
        a = random_algebra_element(star4, rng, sheets=2)
        b = random_algebra_element(star4, rng, sheets=2)
        c = random_algebra_element(star4, rng, sheets=2)
        assert (a * b) * c == a * (b * c)
        assert (a * b).adjoint() == b.adjoint() * a.adjoint()


# -- conditional expectation ------------------------------------------------------

def test_expectation_of_central_element_is_discontinuous(cross, f):
    e = conditional_expectation(f)
    assert e.center == Scalar(1)
    assert all(pp.is_zero() for pp in e.edges)
    assert not e.is_continuous()  # the non-Hausdorff signature


def test_expectation_of_unit(cross):
    e = conditional_expectation(AlgebraElement.unit(cross))
    assert e.center == Scalar(1)
    assert all(pp == PiecewisePoly.const(1) for pp in e.edges)
    assert e.is_continuous()


def test_expectation_positive_with_fiber_sum_oracle(star4, rng):
    for _ in range(8):
        a = random_algebra_element(star4, rng, sheets=2)
        e = conditional_expectation(a.adjoint() * a)
        for i in range(1, 5):
            for t in (Fraction(1, 3), Fraction(4, 5), Fraction(1)):
                # oracle: the fiber sum of squared moduli, straight from a
                expected = Scalar(0)
                for j in range(1, 5):
                    if (i, j) in star4.admissible_pairs:
                        val = a.evaluate(EdgeGerm(t, i, j))
                        expected = expected + val * val.conjugate()
                got = e.eval(EdgePoint(i, t))
                assert got == expected
                assert got.im == 0 and got.re >= 0
        center_expected = Scalar(0)
        for s in star4.group:
            val = a.evaluate(CenterGerm(s))
            center_expected = center_expected + val * val.conjugate()
        assert e.center == center_expected


def test_expectation_is_faithful(star4, rng):
    for _ in range(10):
        a = random_algebra_element(star4, rng, sheets=2)
        e = conditional_expectation(a.adjoint() * a)
        assert e.is_zero() == a.is_zero()
    z = AlgebraElement.zero(star4)
    assert conditional_expectation(z.adjoint() * z).is_zero()


# -- the central ideal -----------------------------------------------------------

def test_lambda_values(cross, f):
    assert lambda_scalar(f) == Scalar(4)
    assert lambda_scalar(AlgebraElement.unit(cross)) == Scalar(1)
    assert lambda_scalar(from_sheet(cross, _sx(), 1)) == Scalar(-1)


def test_lambda_requires_the_cross(star4):
    with pytest.raises(Exception):
        lambda_scalar(AlgebraElement.unit(star4))


def test_central_identity_for_generators_and_random_elements(cross, f, rng):
    tests = cross_generators(cross) + [
        random_algebra_element(cross, rng, sheets=3) for _ in range(30)
    ]
    report = verify_central_ideal(f, tests)
    assert report.all_commute
    assert report.not_in_C0
    assert report.span_meets_diagonal_trivially
    assert report.ok
    gx = from_sheet(cross, _sx(), 1)
    assert gx * f == f * gx == f.scale(-1)


def test_f_is_central_but_not_diagonal(cross, f, rng):
    for _ in range(25):
        h = random_ppfun(4, rng)
        e = embed_C0(cross, h)
        assert f * e == e * f
    assert has_nonunit_value(f)
    assert not has_nonunit_value(embed_C0(cross, random_ppfun(4, rng)))


def test_f_squared(cross, f):
    assert f * f == f.scale(4)


# -- support and bisections --------------------------------------------------------

def test_support_of_central_element(cross, f):
    supp = open_support(f)
    assert supp.strip_intervals == ()
    assert set(supp.center_support) == set(cross.group.elements)
    flag, witness = is_bisection_support(f)
    assert flag is False
    assert witness[0] == "center" and len(witness[1]) == 4


def test_sheet_supports_are_bisections(star4):
    for s in star4.group.elements[:6]:
        flag, witness = is_bisection_support(from_sheet(star4, s, 1))
        assert flag is True and witness is None


def test_support_product_closure(star4):
    els = star4.group.elements
    for s in els[:5]:
        for t in els[:5]:
            prod = from_sheet(star4, s, 1) * from_sheet(star4, t, 1)
            assert open_support(prod) == open_support(from_sheet(star4, s * t, 1))


def test_source_collision_witness(cross):
    # strips (1,1) and (1,2) both carry t: one source edge, two targets,
    # no center mass, so the failure is a genuine source collision
    tpoly = PiecewisePoly.from_poly((Scalar(0), Scalar(1)))
    tz = [tpoly] + [PiecewisePoly.zero()] * 3
    h_edge1 = PPFun(4, Scalar(0), tz)
    h_all = PPFun(4, Scalar(0), [tpoly] * 4)
    u = embed_C0(cross, h_edge1) + from_sheet(cross, _sx(), h_all)
    assert not u.center
    flag, witness = is_bisection_support(u)
    assert flag is False
    assert witness[0] == "source" and witness[1] == 1
    assert {witness[2], witness[3]} == {1, 2}


def test_zero_support(cross):
    supp = open_support(AlgebraElement.zero(cross))
    assert supp.strip_intervals == () and supp.center_support == ()


# -- induced point maps --------------------------------------------------------------

def test_point_map_of_sheet(star4):
    s = parse_cycles("(1 2 3)", 4)
    pm = induced_point_map(from_sheet(star4, s, 1))
    assert pm.as_permutation() == s
    assert pm.center_fixed
    assert pm.apply(EdgePoint(1, Fraction(1, 2))) == EdgePoint(2, Fraction(1, 2))
    assert pm.apply(CENTER) == CENTER


def test_point_map_of_unit(cross):
    pm = induced_point_map(AlgebraElement.unit(cross))
    assert pm.as_permutation() == Permutation.identity(4)


def test_point_map_rejects_nonunitary(cross, f):
    with pytest.raises(NotNormalizerError):
        induced_point_map(f)  # f*f = 4f != unit


def test_scaled_rows_are_not_unitary(cross):
    half = AlgebraElement.unit(cross).scale(Scalar(Fraction(1, 2)))
    with pytest.raises(NotNormalizerError):
        induced_point_map(half)
