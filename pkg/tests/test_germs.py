from fractions import Fraction

import pytest

from germoid.germs import CenterGerm, EdgeGerm, GermError, GermGroupoid, parse_star_spec
from germoid.perms import PermGroup, Permutation, parse_cycles
from germoid.sampling import random_germ
from germoid.starspace import CENTER, EdgePoint, act


@pytest.fixture
def cross():
    return GermGroupoid.cross()


@pytest.fixture
def star4():
    return GermGroupoid.star(4)


def test_germ_of_collapses_on_edges(cross):
    # (3 4) acts trivially on edge 1, so its germ there is the unit germ
    sy = parse_cycles("(3 4)", 4)
    p = EdgePoint(1, Fraction(1, 2))
    assert cross.germ_of(sy, p) == EdgeGerm(Fraction(1, 2), 1, 1)
    assert cross.germ_of(sy, p) == cross.unit_at(p)
    # but at the center the germs of distinct elements stay distinct
    assert cross.germ_of(sy, CENTER) != cross.germ_of(cross.group.identity, CENTER)


def test_germ_of_examples(cross):
    assert cross.germ_of(cross.group.identity, CENTER) == CenterGerm(
        Permutation.identity(4)
    )
    sx = parse_cycles("(1 2)", 4)
    assert cross.germ_of(sx, EdgePoint(1, Fraction(1, 3))) == EdgeGerm(Fraction(1, 3), 1, 2)
    with pytest.raises(GermError):
        cross.germ_of(parse_cycles("(1 3)", 4), CENTER)  # not in the group


def test_source_range_inverse(cross):
    g = EdgeGerm(Fraction(1, 2), 1, 2)
    assert cross.source(g) == EdgePoint(1, Fraction(1, 2))
    assert cross.range(g) == EdgePoint(2, Fraction(1, 2))
    assert cross.inverse(g) == EdgeGerm(Fraction(1, 2), 2, 1)
    c = CenterGerm(parse_cycles("(1 2)", 4))
    assert cross.source(c) == CENTER
    assert cross.range(c) == CENTER
    assert cross.inverse(c) == c  # an involution is its own inverse


def test_compose(star4):
    t = Fraction(1, 3)
    assert star4.compose(EdgeGerm(t, 2, 3), EdgeGerm(t, 1, 2)) == EdgeGerm(t, 1, 3)
    s = parse_cycles("(1 2 3)", 4)
    assert star4.compose(
        CenterGerm(s), CenterGerm(s.inverse())
    ) == CenterGerm(Permutation.identity(4))
    with pytest.raises(GermError):
        star4.compose(CenterGerm(s), EdgeGerm(t, 1, 2))
    with pytest.raises(GermError):
        star4.compose(EdgeGerm(t, 2, 3), EdgeGerm(t, 1, 3))  # sources do not match
    with pytest.raises(GermError):
        star4.compose(EdgeGerm(t, 2, 3), EdgeGerm(Fraction(1, 4), 1, 2))


def test_admissibility(cross):
    # the cross group never maps edge 1 to edge 3
    assert not cross.contains(EdgeGerm(Fraction(1, 2), 1, 3))
    with pytest.raises(GermError):
        cross.source(EdgeGerm(Fraction(1, 2), 1, 3))
    assert cross.contains(EdgeGerm(Fraction(1, 2), 1, 2))


def test_composition_associativity_random(star4, rng):
    done = 0
    while done < 60:
        x, y, z = (random_germ(star4, rng) for _ in range(3))
        try:
            lhs = star4.compose(x, star4.compose(y, z))
        except GermError:
            continue
        rhs = star4.compose(star4.compose(x, y), z)
        assert lhs == rhs
        done += 1


def test_inverse_laws_random(star4, rng):
    for _ in range(60):
        g = random_germ(star4, rng)
        assert star4.inverse(star4.inverse(g)) == g
        unit = star4.unit_at(star4.range(g))
        assert star4.compose(g, star4.inverse(g)) == unit


def test_germ_of_respects_products(star4, rng):
    for _ in range(60):
        s = rng.choice(star4.group.elements)
        t = rng.choice(star4.group.elements)
        p = rng.choice(
            [CENTER] + [EdgePoint(i, Fraction(1, 5)) for i in range(1, 5)]
        )
        lhs = star4.compose(star4.germ_of(s, act(t, p)), star4.germ_of(t, p))
        assert lhs == star4.germ_of(s * t, p)


def test_isotropy_description(cross, star4):
    iso = cross.isotropy_description()
    assert len(iso) == 3
    assert all(isinstance(g, CenterGerm) for g in iso)
    assert len(star4.isotropy_description()) == len(star4.group) - 1 == 11
    trivial = GermGroupoid(3, PermGroup.trivial(3))
    assert trivial.isotropy_description() == []


def test_essentially_principal(cross, star4):
    for G in (cross, star4, GermGroupoid.cyclic_star(4)):
        flag, witnesses = G.essentially_principal_check()
        assert flag is True
        assert witnesses == []


def test_hausdorff_cross(cross):
    flag, pairs = cross.hausdorff_check()
    assert flag is False
    ident = Permutation.identity(4)
    sy = parse_cycles("(3 4)", 4)
    assert any({a, b} == {ident, sy} for a, b in pairs)  # (3 4) fixes edges 1,2


def test_hausdorff_free_actions():
    flag, pairs = GermGroupoid.cyclic_star(4).hausdorff_check()
    assert flag is True and pairs == []
    flag, pairs = GermGroupoid(3, PermGroup.trivial(3)).hausdorff_check()
    assert flag is True and pairs == []


def test_hausdorff_star4(star4):
    flag, pairs = star4.hausdorff_check()
    assert flag is False and len(pairs) > 0
    # every reported pair really does agree on some edge
    for a, b in pairs:
        assert any(a(i) == b(i) for i in range(1, 5))


def test_group_must_match_edge_count():
    with pytest.raises(ValueError):
        GermGroupoid(5, PermGroup.alternating(4))


def test_parse_star_spec():
    g = parse_star_spec({"n": 4, "group": "A4"})
    assert g == GermGroupoid.star(4)
    g = parse_star_spec({"n": 4, "generators": ["(1 2)", "(3 4)"]})
    assert g == GermGroupoid.cross()
    assert parse_star_spec({"n": 4, "group": "Z4"}) == GermGroupoid.cyclic_star(4)
    assert len(parse_star_spec({"n": 3, "group": "S3"}).group) == 6
    with pytest.raises(ValueError):
        parse_star_spec({"group": "A4"})
    with pytest.raises(ValueError):
        parse_star_spec({"n": 4, "group": "B4"})
    with pytest.raises(ValueError):
        parse_star_spec({"n": 3, "group": "A4"})
