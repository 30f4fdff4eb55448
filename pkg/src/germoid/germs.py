"""Groupoids of germs for edge-permutation actions on star spaces.

Away from the center, the germ of sigma at (t,i) remembers only the pair
(i, sigma(i)), so edge germs are triples (t,i,j).  At the center two distinct
group elements always have distinct germs, so center germs are labelled by
group elements.  Composition follows source(first) = range(second).
"""

from __future__ import annotations

from fractions import Fraction

from .perms import PermGroup, Permutation
from .starspace import CENTER, CenterPoint, EdgePoint


class GermError(ValueError):
    pass


class EdgeGerm:
    """Germ (t, i, j): source (t, i), range (t, j)."""

    __slots__ = ("t", "i", "j")

    def __init__(self, t, i: int, j: int):
        t = Fraction(t)
        if not 0 < t <= 1:
            raise GermError(f"edge coordinate {t} outside (0,1]")
        self.t = t
        self.i = i
        self.j = j

    def __eq__(self, other):
        return isinstance(other, EdgeGerm) and (self.t, self.i, self.j) == (
            other.t, other.i, other.j)

    def __hash__(self):
        return hash(("edge", self.t, self.i, self.j))

    def __repr__(self):
        return f"EdgeGerm({self.t}, {self.i}, {self.j})"


class CenterGerm:
    """Germ of a group element at the center."""

    __slots__ = ("sigma",)

    def __init__(self, sigma: Permutation):
        self.sigma = sigma

    def __eq__(self, other):
        return isinstance(other, CenterGerm) and self.sigma == other.sigma

    def __hash__(self):
        return hash(("center", self.sigma))

    def __repr__(self):
        return f"CenterGerm({self.sigma})"


class GermGroupoid:
    """The groupoid of germs of a permutation group acting on an n-edge star."""

    def __init__(self, n: int, group: PermGroup):
        if group.n != n:
            raise ValueError(f"group acts on {group.n} edges, star has {n}")
        self.n = n
        self.group = group
        pairs = set()
        for sigma in group:
            for i in range(1, n + 1):
                pairs.add((i, sigma(i)))
        self.admissible_pairs = frozenset(pairs)

    # -- canonical constructions ------------------------------------------

    @classmethod
    def cross(cls) -> "GermGroupoid":
        """4-edge star with the order-4 group <(1 2),(3 4)>.

        Edges 1,2 are the two halves of one axis and 3,4 of the other, so
        this is the axis-reflection action on a plus-shaped space.
        """
        return cls(4, PermGroup.klein_cross())

    @classmethod
    def star(cls, n: int) -> "GermGroupoid":
        """n-edge star with the alternating group acting by edge permutation."""
        return cls(n, PermGroup.alternating(n))

    @classmethod
    def cyclic_star(cls, n: int) -> "GermGroupoid":
        return cls(n, PermGroup.cyclic(n))

    # -- germs -------------------------------------------------------------

    def contains(self, germ) -> bool:
        if isinstance(germ, EdgeGerm):
            return (germ.i, germ.j) in self.admissible_pairs
        if isinstance(germ, CenterGerm):
            return germ.sigma in self.group
        return False

    def germ_of(self, sigma: Permutation, p):
        if sigma not in self.group:
            raise GermError(f"{sigma} is not in the acting group")
        if isinstance(p, CenterPoint):
            return CenterGerm(sigma)
        if isinstance(p, EdgePoint):
            return EdgeGerm(p.t, p.edge, sigma(p.edge))
        raise TypeError(f"not a star point: {p!r}")

    def unit_at(self, p):
        return self.germ_of(self.group.identity, p)

    def is_unit(self, germ) -> bool:
        if isinstance(germ, EdgeGerm):
            return germ.i == germ.j
        return germ.sigma.is_identity()

    def source(self, germ):
        self._require(germ)
        if isinstance(germ, EdgeGerm):
            return EdgePoint(germ.i, germ.t)
        return CENTER

    def range(self, germ):
        self._require(germ)
        if isinstance(germ, EdgeGerm):
            return EdgePoint(germ.j, germ.t)
        return CENTER

    def inverse(self, germ):
        self._require(germ)
        if isinstance(germ, EdgeGerm):
            return EdgeGerm(germ.t, germ.j, germ.i)
        return CenterGerm(germ.sigma.inverse())

    def compose(self, first, second):
        """Product first*second, defined when source(first) = range(second)."""
        self._require(first)
        self._require(second)
        if isinstance(first, EdgeGerm) and isinstance(second, EdgeGerm):
            if first.t != second.t or first.i != second.j:
                raise GermError(f"germs {second} and {first} do not compose")
            return EdgeGerm(first.t, second.i, first.j)
        if isinstance(first, CenterGerm) and isinstance(second, CenterGerm):
            return CenterGerm(first.sigma * second.sigma)
        raise GermError(f"germs {second} and {first} do not compose")

    def _require(self, germ):
        if not self.contains(germ):
            raise GermError(f"{germ!r} is not a germ of this groupoid")

    # -- diagnostics ---------------------------------------------------------

    def isotropy_description(self):
        """Non-unit isotropy germ classes: one center germ per sigma != id.

        Edge germs (t,i,i) have equal source and range but are units, so
        they never appear here.
        """
        return [CenterGerm(s) for s in self.group if not s.is_identity()]

    def essentially_principal_check(self):
        """True plus witnesses (non-unit germs interior to the isotropy bundle).

        A center germ of sigma is interior to the isotropy bundle only if
        every nearby edge germ (t,i,sigma(i)) is isotropy too, i.e. sigma
        fixes every edge; edge permutations acting as the identity *are* the
        identity, so the witness list is computed and always comes out empty.
        """
        witnesses = [
            CenterGerm(s)
            for s in self.group
            if not s.is_identity() and len(s.fixed_points()) == self.n
        ]
        return (not witnesses), witnesses

    def hausdorff_check(self):
        """Hausdorff flag plus the inseparable pairs of center germs.

        Center germs of sigma and sigma' cannot be separated exactly when
        sigma and sigma' agree on some edge: the edge germs (t,i,j) with
        j = sigma(i) = sigma'(i) converge to both as t -> 0.
        """
        pairs = []
        els = list(self.group)
        for a in range(len(els)):
            for b in range(a + 1, len(els)):
                s, sp = els[a], els[b]
                if any(s(i) == sp(i) for i in range(1, self.n + 1)):
                    pairs.append((s, sp))
        return (not pairs), pairs

    def __eq__(self, other):
        return (
            isinstance(other, GermGroupoid)
            and self.n == other.n
            and self.group == other.group
        )

    def __hash__(self):
        return hash((self.n, self.group))

    def __repr__(self):
        return f"GermGroupoid(n={self.n}, group order {len(self.group)})"


def parse_star_spec(spec: dict) -> GermGroupoid:
    """Build a germ groupoid from its JSON description.

    {"n": 4, "group": "A4"}               named group: A<n>, S<n>, Z<n>,
                                          "trivial", "klein_cross"
    {"n": 4, "generators": ["(1 2)", "(3 4)"]}   generated subgroup
    """
    from .perms import parse_cycles

    if "n" not in spec:
        raise ValueError("star spec needs an edge count 'n'")
    n = int(spec["n"])
    if n < 1:
        raise ValueError("edge count must be positive")
    if "generators" in spec:
        gens = [parse_cycles(s, n) for s in spec["generators"]]
        return GermGroupoid(n, PermGroup.generate(n, gens))
    name = spec.get("group", "trivial")
    if name == "trivial":
        return GermGroupoid(n, PermGroup.trivial(n))
    if name == "klein_cross":
        if n != 4:
            raise ValueError("klein_cross requires n=4")
        return GermGroupoid.cross()
    kind, num = name[0], name[1:]
    if not num.isdigit() or int(num) != n or kind not in "ASZ":
        raise ValueError(f"unknown group name {name!r} for n={n}")
    maker = {"A": PermGroup.alternating, "S": PermGroup.symmetric, "Z": PermGroup.cyclic}[kind]
    return GermGroupoid(n, maker(n))
