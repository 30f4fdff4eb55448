"""Seeded random generators for scalars, functions, algebra elements, and germs.

Deterministic given a random.Random instance; the CLI and the property-test
suites share these so reported trials are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement, from_sheet
from .germs import CenterGerm, EdgeGerm, GermGroupoid
from .perms import PermGroup
from .poly import PiecewisePoly, padd, pconst, peval, ptrim
from .scalars import Scalar
from .starspace import OpenStarSet, PPFun

_BREAK_POOL = [Fraction(a, b) for b in (2, 3, 4, 5) for a in range(1, b)]


def random_fraction(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_scalar(rng: random.Random, span: int = 4) -> Scalar:
    return Scalar(random_fraction(rng, span), random_fraction(rng, span))


def random_poly(rng: random.Random, max_deg: int = 2):
    deg = rng.randint(0, max_deg)
    return ptrim(random_scalar(rng) for _ in range(deg + 1))


def random_breaks(rng: random.Random, max_interior: int = 2):
    interior = rng.sample(_BREAK_POOL, rng.randint(0, max_interior))
    return sorted({Fraction(0), Fraction(1), *interior})


def random_piecewise(rng: random.Random, value_at_0: Scalar, max_interior: int = 2) -> PiecewisePoly:
    """Random continuous piecewise polynomial with the given limit at 0."""
    breaks = random_breaks(rng, max_interior)
    polys = []
    level = value_at_0
    for lo, hi in zip(breaks, breaks[1:]):
        p = random_poly(rng)
        # shift the constant term so the chain stays continuous at lo
        p = padd(p, pconst(level - peval(p, lo)))
        polys.append(p)
        level = peval(p, hi)
    return PiecewisePoly(breaks, polys)


def random_ppfun(n: int, rng: random.Random) -> PPFun:
    center = random_scalar(rng)
    return PPFun(n, center, [random_piecewise(rng, center) for _ in range(n)])


def random_open_set(n: int, rng: random.Random) -> OpenStarSet:
    edges = []
    for _ in range(n):
        ivs = []
        for _ in range(rng.randint(0, 2)):
            a, b = sorted(rng.sample(_BREAK_POOL + [Fraction(0), Fraction(1)], 2))
            if a < b:
                ivs.append((a, b, b == 1 and rng.random() < 0.5))
        edges.append(ivs)
    s = OpenStarSet(n, False, edges)
    if rng.random() < 0.3:
        eps = rng.choice(_BREAK_POOL)
        s = s.union(OpenStarSet(n, True, [[(Fraction(0), eps, False)]] * n))
    return s


def random_group_element(group: PermGroup, rng: random.Random):
    return rng.choice(group.elements)


def random_algebra_element(
    groupoid: GermGroupoid, rng: random.Random, sheets: int = 3
) -> AlgebraElement:
    """Random sum of sheet elements; compatible by construction."""
    out = AlgebraElement.zero(groupoid)
    for _ in range(sheets):
        sigma = random_group_element(groupoid.group, rng)
        out = out + from_sheet(groupoid, sigma, random_ppfun(groupoid.n, rng))
    return out


def random_germ(groupoid: GermGroupoid, rng: random.Random):
    if rng.random() < 0.3:
        return CenterGerm(random_group_element(groupoid.group, rng))
    pair = rng.choice(sorted(groupoid.admissible_pairs))
    t = Fraction(rng.randint(1, 24), 24)
    return EdgeGerm(t, pair[0], pair[1])


def random_group_algebra_element(group, rng: random.Random, support: int = 3):
    from .rep import GroupAlgebraElement

    coeffs = {}
    for _ in range(support):
        coeffs[rng.choice(group.elements)] = random_scalar(rng)
    return GroupAlgebraElement(group, coeffs)
