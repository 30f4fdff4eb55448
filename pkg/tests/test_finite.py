import numpy as np
import pytest

from germoid.finite import (
    FiniteAlgebraElement,
    FiniteGroupoid,
    GroupoidAxiomError,
    algebra_image_rank,
    center_basis_exact,
    diagonal_masa_check,
    faithfulness_check,
    intersection_property_check,
    key_inequality_check,
    minimal_central_projections,
    operator_norm,
    parse_finite_spec,
    principality,
    random_finite_element,
    regular_rep,
    restrict_to_units,
)
from germoid.perms import PermGroup, parse_cycles

TOL = 1e-9


@pytest.fixture
def z3_free():
    return FiniteGroupoid.transformation(3, PermGroup.cyclic(3))


@pytest.fixture
def z2_point():
    z2 = PermGroup.generate(2, [parse_cycles("(1 2)", 2)])
    return FiniteGroupoid.trivial_action(1, z2)


# -- construction -----------------------------------------------------------------

def test_free_action_arrow_count(z3_free):
    assert len(z3_free.arrows) == 9  # |X| * |group|
    assert len(z3_free.units) == 3
    assert z3_free.orbits() == [[1, 2, 3]]
    assert all(z3_free.has_no_isotropy(x) for x in z3_free.units)


def test_trivial_action_isotropy(z2_point):
    assert len(z2_point.arrows) == 2
    assert len(z2_point.isotropy_arrows(1)) == 2
    assert not z2_point.has_no_isotropy(1)


def test_equivalence_relation_groupoid():
    E = FiniteGroupoid.equivalence([[1, 2], [3]])
    assert len(E.arrows) == 5
    assert E.orbits() == [[1, 2], [3]]
    F = FiniteGroupoid.full_equivalence(4)
    assert len(F.arrows) == 16
    with pytest.raises(ValueError):
        FiniteGroupoid.equivalence([[1, 2], [2, 3]])


def test_broken_composition_table_is_rejected():
    # two points, one arrow each way plus units, but a*b deliberately wrong
    units = ["x", "y"]
    arrows = {
        "x": ("x", "x"),
        "y": ("y", "y"),
        "a": ("x", "y"),  # a: x -> y
        "b": ("y", "x"),  # b: y -> x
    }
    compose = [
        ("x", "x", "x"), ("y", "y", "y"),
        ("a", "x", "a"), ("y", "a", "a"),
        ("b", "y", "b"), ("x", "b", "b"),
        ("b", "a", "x"), ("a", "b", "x"),  # a*b should be y, not x
    ]
    with pytest.raises(GroupoidAxiomError) as err:
        FiniteGroupoid.explicit(units, arrows, compose)
    assert err.value.witness is not None


def test_axiom_witnesses_name_the_problem():
    units = ["x"]
    arrows = {"x": ("x", "x"), "a": ("x", "x")}
    # missing compositions involving a
    with pytest.raises(GroupoidAxiomError):
        FiniteGroupoid.explicit(units, arrows, [("x", "x", "x")])


def test_transformation_action_must_be_a_homomorphism():
    z2 = PermGroup.generate(2, [parse_cycles("(1 2)", 2)])
    swap3 = parse_cycles("(1 2 3)", 3)
    from germoid.perms import Permutation

    bad = {g: (swap3 if not g.is_identity() else Permutation.identity(3)) for g in z2}
    with pytest.raises(ValueError):
        FiniteGroupoid.transformation(3, z2, bad)


# -- the algebra -------------------------------------------------------------------

def test_unit_element_and_norm(z3_free):
    one = FiniteAlgebraElement.unit(z3_free)
    assert abs(operator_norm(one) - 1.0) < TOL
    blocks = regular_rep(one)
    for M in blocks.values():
        assert np.allclose(M, np.eye(M.shape[0]))


def test_convolution_associativity_numeric(z3_free, rng):
    for _ in range(20):
        f = random_finite_element(z3_free, rng)
        g = random_finite_element(z3_free, rng)
        h = random_finite_element(z3_free, rng)
        lhs = ((f * g) * h).vector()
        rhs = (f * (g * h)).vector()
        assert np.allclose(lhs, rhs, atol=1e-12)


def test_regular_rep_is_multiplicative(z3_free, rng):
    for _ in range(10):
        f = random_finite_element(z3_free, rng)
        g = random_finite_element(z3_free, rng)
        bf, bg, bfg = regular_rep(f), regular_rep(g), regular_rep(f * g)
        for x in z3_free.units:
            assert np.allclose(bf[x] @ bg[x], bfg[x], atol=1e-10)


def test_cstar_identity_numeric(z3_free, rng):
    for _ in range(25):
        f = random_finite_element(z3_free, rng)
        lhs = operator_norm(f.adjoint() * f)
        rhs = operator_norm(f) ** 2
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, rhs)


def test_full_matrix_block(z3_free):
    # free Z/3 on 3 points is the full relation on the orbit: a 3x3 block
    assert algebra_image_rank(z3_free) == 9
    assert len(center_basis_exact(z3_free)) == 1


def test_two_blocks_for_the_point_group(z2_point):
    assert len(center_basis_exact(z2_point)) == 2
    split = minimal_central_projections(z2_point, seed=4)
    assert split.blocks == 2
    assert split.idempotent_residual < 1e-9


# -- principality and the three properties ---------------------------------------------

def test_principality(z3_free, z2_point):
    assert principality(z3_free).principal
    assert principality(FiniteGroupoid.full_equivalence(3)).principal
    flags = principality(z2_point)
    assert not flags.principal and not flags.essentially_principal
    assert flags.witnesses  # the nontrivial isotropy arrow
    assert principality(z3_free).essentially_principal == principality(z3_free).principal


def test_masa_check(z3_free, z2_point):
    assert diagonal_masa_check(z3_free).is_masa
    assert diagonal_masa_check(FiniteGroupoid.units_only(3)).is_masa
    report = diagonal_masa_check(z2_point)
    assert not report.is_masa
    assert report.commutant_dim == 2 and report.units == 1
    assert report.witness is not None


def test_intersection_property(z3_free, z2_point):
    assert intersection_property_check(z3_free, seed=1).holds
    assert intersection_property_check(FiniteGroupoid.full_equivalence(2), seed=1).holds
    rep = intersection_property_check(z2_point, seed=1)
    assert not rep.holds
    assert len(rep.witnesses) >= 1  # a block missing the diagonal entirely


def test_faithfulness_agrees_with_intersection(z3_free, z2_point):
    corpus = [
        z3_free,
        z2_point,
        FiniteGroupoid.full_equivalence(2),
        FiniteGroupoid.full_equivalence(4),
        FiniteGroupoid.units_only(2),
        FiniteGroupoid.transformation(4, PermGroup.klein_cross()),
        FiniteGroupoid.transformation(3, PermGroup.symmetric(3)),
    ]
    for G in corpus:
        assert faithfulness_check(G, seed=2).holds == intersection_property_check(G, seed=2).holds


def test_essentially_principal_implies_properties():
    corpus = [
        FiniteGroupoid.transformation(3, PermGroup.cyclic(3)),
        FiniteGroupoid.transformation(4, PermGroup.cyclic(4)),
        FiniteGroupoid.transformation(2, PermGroup.symmetric(2)),
        FiniteGroupoid.full_equivalence(2),
        FiniteGroupoid.full_equivalence(3),
        FiniteGroupoid.full_equivalence(4),
        FiniteGroupoid.equivalence([[1, 2], [3, 4]]),
        FiniteGroupoid.units_only(5),
        FiniteGroupoid.transformation(4, PermGroup.klein_cross()),
        FiniteGroupoid.transformation(4, PermGroup.alternating(4)),
        FiniteGroupoid.transformation(3, PermGroup.symmetric(3)),
    ]
    for G in corpus:
        assert len(G.arrows) <= 200
        if principality(G).essentially_principal:
            assert intersection_property_check(G, seed=3).holds, G
            assert diagonal_masa_check(G).is_masa, G


# -- the key inequality -----------------------------------------------------------------

def test_key_inequality_no_violations(z3_free):
    report = key_inequality_check(z3_free, trials=300, seed=9)
    assert report.holds
    assert report.violations == []
    assert report.units_tested == 3
    assert report.pairing_exact


def test_key_inequality_equality_case(z3_free):
    # the indicator of one unit has value 1 there and operator norm 1
    x = z3_free.units[0]
    f = FiniteAlgebraElement.delta(z3_free, z3_free.unit_arrow[x])
    assert abs(operator_norm(f) - 1.0) < TOL
    assert f.coeff(z3_free.unit_arrow[x]) == 1.0


def test_key_inequality_skips_isotropy_units(z2_point):
    report = key_inequality_check(z2_point, trials=10, seed=0)
    assert report.units_tested == 0  # the only unit has isotropy
    assert report.holds


# -- the conditional expectation ------------------------------------------------------------

def test_expectation_positive_and_faithful(z3_free, rng):
    for _ in range(25):
        f = random_finite_element(z3_free, rng)
        e = restrict_to_units(f.adjoint() * f)
        for x, v in e.items():
            assert v.real >= -1e-12 and abs(v.imag) < 1e-12
            # fiber sum oracle
            expected = sum(
                abs(f.coeff(a)) ** 2 for a in z3_free.source_fiber(x)
            )
            assert abs(v - expected) < 1e-9
        if f.coeffs:
            assert any(abs(v) > 1e-12 for v in e.values())


# -- JSON specs -------------------------------------------------------------------------------

def test_parse_transformation_spec():
    G = parse_finite_spec(
        {"transformation": {"points": 3, "group_generators": ["(1 2 3)"]}}
    )
    assert len(G.arrows) == 9


def test_parse_trivial_action_spec():
    G = parse_finite_spec(
        {
            "transformation": {
                "points": 1,
                "group_degree": 2,
                "group_generators": ["(1 2)"],
                "action": ["()"],
            }
        }
    )
    assert len(G.arrows) == 2
    assert not principality(G).principal


def test_parse_equivalence_spec():
    G = parse_finite_spec({"equivalence": {"blocks": [[1, 2, 3]]}})
    assert len(G.arrows) == 9
    assert principality(G).principal


def test_parse_explicit_spec():
    spec = {
        "units": ["x"],
        "arrows": [
            {"id": "x", "src": "x", "rng": "x"},
            {"id": "g", "src": "x", "rng": "x"},
        ],
        "compose": [
            ["x", "x", "x"], ["x", "g", "g"], ["g", "x", "g"], ["g", "g", "x"],
        ],
    }
    G = parse_finite_spec(spec)
    assert len(G.arrows) == 2
    assert not diagonal_masa_check(G).is_masa


def test_parse_rejects_unknown():
    with pytest.raises(ValueError):
        parse_finite_spec({"nonsense": 1})
