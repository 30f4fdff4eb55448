"""The convolution *-algebra of a star-space germ groupoid, in exact normal form.

An element is stored as the function it defines on the groupoid: one
piecewise polynomial per admissible edge pair (a "strip") plus one scalar per
group element (the values at the center germs).  Two sums of sheets with the
same values are therefore identified, and equality is decidable.

The normal form must satisfy the gluing law tying each strip's limit at the
center to the sum of center values over the group elements inducing that
edge pair; this is the computational signature of a non-Hausdorff groupoid,
and it is checked on every construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .germs import CenterGerm, EdgeGerm, GermError, GermGroupoid
from .perms import Permutation
from .poly import PiecewisePoly
from .scalars import ZERO, Scalar, as_scalar, render_scalar
from .starspace import CENTER, CenterPoint, EdgePoint, PPFun

_PPZERO = PiecewisePoly.zero()


class AlgebraError(ValueError):
    pass


class CompatibilityError(AlgebraError):
    """The strip limits at the center do not match the center-value sums."""


class NotNormalizerError(AlgebraError):
    pass


class AlgebraElement:
    """An element of the convolution algebra, in normal form."""

    __slots__ = ("groupoid", "strips", "center")

    def __init__(self, groupoid: GermGroupoid, strips, center, _checked=False):
        self.groupoid = groupoid
        self.strips = {pair: pp for pair, pp in strips.items() if not pp.is_zero()}
        self.center = {s: as_scalar(c) for s, c in center.items() if as_scalar(c)}
        if not _checked:
            for pair in self.strips:
                if pair not in groupoid.admissible_pairs:
                    raise AlgebraError(f"strip {pair} is not an admissible edge pair")
            for s in self.center:
                if s not in groupoid.group:
                    raise AlgebraError(f"{s} is not in the acting group")
        self.check_compatible()

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, groupoid: GermGroupoid) -> "AlgebraElement":
        return cls(groupoid, {}, {}, _checked=True)

    @classmethod
    def unit(cls, groupoid: GermGroupoid) -> "AlgebraElement":
        return from_sheet(groupoid, groupoid.group.identity, PPFun.one(groupoid.n))

    # -- the validator ---------------------------------------------------------

    def check_compatible(self):
        """Raise unless every strip's limit at 0 equals its center-value sum."""
        for (i, j) in self.groupoid.admissible_pairs:
            lim = self.strips[(i, j)].at0() if (i, j) in self.strips else ZERO
            total = ZERO
            for s, c in self.center.items():
                if s(i) == j:
                    total = total + c
            if lim != total:
                raise CompatibilityError(
                    f"strip ({i},{j}) has limit {lim} at the center but the "
                    f"center values sum to {total}"
                )

    # -- accessors ---------------------------------------------------------

    def strip(self, i: int, j: int) -> PiecewisePoly:
        return self.strips.get((i, j), _PPZERO)

    def center_value(self, sigma: Permutation) -> Scalar:
        return self.center.get(sigma, ZERO)

    def evaluate(self, germ) -> Scalar:
        if not self.groupoid.contains(germ):
            raise GermError(f"{germ!r} is not a germ of this groupoid")
        if isinstance(germ, EdgeGerm):
            return self.strip(germ.i, germ.j)(germ.t)
        return self.center_value(germ.sigma)

    def is_zero(self) -> bool:
        return not self.strips and not self.center

    # -- linear structure ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.groupoid != self.groupoid:
            raise AlgebraError("elements live on different groupoids")

    def __add__(self, other):
        self._check(other)
        strips = dict(self.strips)
        for pair, pp in other.strips.items():
            strips[pair] = strips[pair] + pp if pair in strips else pp
        center = dict(self.center)
        for s, c in other.center.items():
            center[s] = center[s] + c if s in center else c
        return AlgebraElement(self.groupoid, strips, center, _checked=True)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        c = as_scalar(c)
        return AlgebraElement(
            self.groupoid,
            {pair: pp.scale(c) for pair, pp in self.strips.items()},
            {s: c * v for s, v in self.center.items()},
            _checked=True,
        )

    def adjoint(self) -> "AlgebraElement":
        """Involution f*(germ) = conj f(germ^{-1})."""
        return AlgebraElement(
            self.groupoid,
            {(j, i): pp.conj() for (i, j), pp in self.strips.items()},
            {s.inverse(): v.conjugate() for s, v in self.center.items()},
            _checked=True,
        )

    # -- convolution ---------------------------------------------------------

    def __mul__(self, other):
        """Convolution: (f*g)(germ) = sum of f(a)g(b) over factorizations ab."""
        self._check(other)
        strips = {}
        for (k, j), fs in self.strips.items():
            for (i, k2), gs in other.strips.items():
                if k2 != k:
                    continue
                term = fs * gs
                pair = (i, j)
                strips[pair] = strips[pair] + term if pair in strips else term
        center = {}
        for a, fa in self.center.items():
            for b, gb in other.center.items():
                ab = a * b
                prod = fa * gb
                center[ab] = center[ab] + prod if ab in center else prod
        return AlgebraElement(self.groupoid, strips, center, _checked=True)

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.groupoid == other.groupoid
            and self.strips == other.strips
            and self.center == other.center
        )

    def __hash__(self):
        return hash(
            (self.groupoid, frozenset(self.strips.items()), frozenset(self.center.items()))
        )

    def __repr__(self):
        return (
            f"AlgebraElement({len(self.strips)} strips, "
            f"center support {len(self.center)})"
        )

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        strips = [
            {
                "source": i,
                "range": j,
                "breaks": [str(b) for b in pp.breaks],
                "pieces": [[render_scalar(c) for c in p] for p in pp.polys],
            }
            for (i, j), pp in sorted(self.strips.items())
        ]
        center = [
            {"perm": s.cycle_string(), "value": render_scalar(v)}
            for s, v in sorted(self.center.items())
        ]
        return {"strips": strips, "center": center}


# ---------------------------------------------------------------------------
# constructors from the unit space


def from_sheet(groupoid: GermGroupoid, sigma: Permutation, h) -> "AlgebraElement":
    """The element supported on the sheet of sigma with coefficient h.

    The constant-1 case is the unitary indicator of sigma's sheet; sheets
    generate the implemented class.
    """
    if sigma not in groupoid.group:
        raise AlgebraError(f"{sigma} is not in the acting group")
    if isinstance(h, (int, Fraction, Scalar)):
        h = PPFun.const(groupoid.n, h)
    if h.n != groupoid.n:
        raise AlgebraError("coefficient function lives on the wrong star")
    strips = {}
    for i in range(1, groupoid.n + 1):
        strips[(i, sigma(i))] = h.edges[i - 1]
    return AlgebraElement(groupoid, strips, {sigma: h.center})


def embed_C0(groupoid: GermGroupoid, h) -> "AlgebraElement":
    """Embed a continuous function on the star as a diagonal element."""
    return from_sheet(groupoid, groupoid.group.identity, h)


def convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    return f * g


def evaluate_convolution_pointwise(f: AlgebraElement, g: AlgebraElement, germ) -> Scalar:
    """Sum f(a)g(b) over factorizations ab = germ, straight from the definition.

    Independent of the normal-form convolution; used as its oracle.
    """
    G = f.groupoid
    if isinstance(germ, CenterGerm):
        total = ZERO
        for b in G.group:
            a = germ.sigma * b.inverse()
            total = total + f.evaluate(CenterGerm(a)) * g.evaluate(CenterGerm(b))
        return total
    total = ZERO
    for k in range(1, G.n + 1):
        if (germ.i, k) in G.admissible_pairs and (k, germ.j) in G.admissible_pairs:
            a = EdgeGerm(germ.t, k, germ.j)
            b = EdgeGerm(germ.t, germ.i, k)
            total = total + f.evaluate(a) * g.evaluate(b)
    return total


# ---------------------------------------------------------------------------
# conditional expectation onto the unit space


class UnitSpaceFunction:
    """A function on the star that may be discontinuous at the center.

    This is the codomain of the conditional expectation: restricting an
    algebra element to the unit space keeps the diagonal strips and the
    identity's center value, and on a non-Hausdorff groupoid those need not
    glue continuously.
    """

    __slots__ = ("n", "center", "edges")

    def __init__(self, n: int, center, edges):
        self.n = n
        self.center = as_scalar(center)
        self.edges = tuple(edges)

    def eval(self, p) -> Scalar:
        if isinstance(p, CenterPoint):
            return self.center
        if isinstance(p, EdgePoint):
            return self.edges[p.edge - 1](p.t)
        raise TypeError(f"not a star point: {p!r}")

    __call__ = eval

    def is_zero(self) -> bool:
        return self.center.is_zero() and all(e.is_zero() for e in self.edges)

    def is_continuous(self) -> bool:
        return all(e.at0() == self.center for e in self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, UnitSpaceFunction)
            and (self.n, self.center, self.edges) == (other.n, other.center, other.edges)
        )

    def __repr__(self):
        return f"UnitSpaceFunction(n={self.n}, center={self.center})"


def conditional_expectation(f: AlgebraElement) -> UnitSpaceFunction:
    """Restriction to the unit space: diagonal strips plus the identity's value."""
    G = f.groupoid
    return UnitSpaceFunction(
        G.n,
        f.center_value(G.group.identity),
        [f.strip(i, i) for i in range(1, G.n + 1)],
    )


# ---------------------------------------------------------------------------
# the cross example: central element and its ideal


def _require_cross(groupoid: GermGroupoid):
    if groupoid != GermGroupoid.cross():
        raise AlgebraError("this operation is specific to the 4-edge cross groupoid")


def cross_generators(groupoid: GermGroupoid):
    """The four sheet indicators of the cross group, in group order."""
    _require_cross(groupoid)
    return [from_sheet(groupoid, s, PPFun.one(4)) for s in groupoid.group]


def cross_central_element(groupoid: GermGroupoid) -> AlgebraElement:
    """The alternating sum of the four sheet indicators.

    Its strips all cancel, leaving the center value table (1,-1,-1,1); it
    spans a one-dimensional two-sided ideal meeting the diagonal only in 0.
    """
    _require_cross(groupoid)
    ident = groupoid.group.identity
    sx = next(s for s in groupoid.group if s.cycle_string() == "(1 2)")
    sy = next(s for s in groupoid.group if s.cycle_string() == "(3 4)")
    one = PPFun.one(4)
    return (
        from_sheet(groupoid, ident, one)
        - from_sheet(groupoid, sx, one)
        - from_sheet(groupoid, sy, one)
        + from_sheet(groupoid, sx * sy, one)
    )


def lambda_scalar(g: AlgebraElement) -> Scalar:
    """The scalar by which multiplication against the central element acts."""
    _require_cross(g.groupoid)
    group = g.groupoid.group
    ident = group.identity
    sx = next(s for s in group if s.cycle_string() == "(1 2)")
    sy = next(s for s in group if s.cycle_string() == "(3 4)")
    return (
        g.center_value(ident)
        - g.center_value(sx)
        - g.center_value(sy)
        + g.center_value(sx * sy)
    )


def has_nonunit_value(f: AlgebraElement) -> bool:
    """True when f is nonzero at some non-unit germ, i.e. f is not a diagonal
    (unit-space) element."""
    if any(not s.is_identity() for s in f.center):
        return True
    return any(i != j for (i, j) in f.strips)


@dataclass
class CentralTestResult:
    lam: Scalar
    left_ok: bool   # g*f == lambda(g) f
    right_ok: bool  # f*g == lambda(g) f


@dataclass
class CentralIdealReport:
    results: list
    not_in_C0: bool
    span_meets_diagonal_trivially: bool

    @property
    def all_commute(self) -> bool:
        return all(r.left_ok and r.right_ok for r in self.results)

    @property
    def ok(self) -> bool:
        return self.all_commute and self.not_in_C0 and self.span_meets_diagonal_trivially


def verify_central_ideal(f: AlgebraElement, tests) -> CentralIdealReport:
    """Check g*f = f*g = lambda(g) f exactly for each test element, and that
    the line through f misses the diagonal subalgebra."""
    results = []
    for g in tests:
        lam = lambda_scalar(g)
        expected = f.scale(lam)
        results.append(CentralTestResult(lam, g * f == expected, f * g == expected))
    nonunit = has_nonunit_value(f)
    # a nonzero multiple of f has the same nonunit support, so the span of f
    # meets the diagonal subalgebra only in 0 exactly when f has a nonunit value
    return CentralIdealReport(results, nonunit, nonunit or f.is_zero())


# ---------------------------------------------------------------------------
# open support, bisections, and the induced point map


@dataclass(frozen=True)
class SupportDescriptor:
    """Where an element is nonzero: intervals per strip (each nonzero off
    finitely many roots) and the center germs carrying nonzero values."""

    strip_intervals: tuple  # ((i, j, ((lo, hi), ...)), ...)
    center_support: tuple   # permutations

    def __str__(self):
        bits = [
            f"({i},{j}): " + ", ".join(f"({lo},{hi}]" for lo, hi in ivs)
            for i, j, ivs in self.strip_intervals
        ]
        bits += [f"[{s}] at center" for s in self.center_support]
        return "; ".join(bits) if bits else "(empty)"


def open_support(f: AlgebraElement) -> SupportDescriptor:
    strips = tuple(
        (i, j, tuple(pp.nonzero_intervals()))
        for (i, j), pp in sorted(f.strips.items())
    )
    return SupportDescriptor(strips, tuple(sorted(f.center)))


def _collision_on_common_piece(strips_by_key):
    """Find two strips sharing an index that are both nonzero somewhere.

    strips_by_key maps the other edge index to a PiecewisePoly; returns
    (key1, key2, (lo, hi)) or None.  Two continuous piecewise polynomials are
    simultaneously nonzero at some point iff they are both not identically
    zero on a common refined piece.
    """
    keys = sorted(strips_by_key)
    breaks = sorted({b for pp in strips_by_key.values() for b in pp.breaks})
    for lo, hi in zip(breaks, breaks[1:]):
        live = [
            k for k in keys
            if strips_by_key[k].polys[strips_by_key[k]._piece_index(lo)]
        ]
        if len(live) >= 2:
            return live[0], live[1], (lo, hi)
    return None


def is_bisection_support(f: AlgebraElement):
    """Whether the open support of f is a bisection, with a witness if not.

    Fails iff two center values are nonzero (all center germs share source
    and range), or two strips with a common source edge, or with a common
    range edge, are simultaneously nonzero.
    """
    center = sorted(f.center)
    if len(center) >= 2:
        return False, ("center", tuple(center))
    n = f.groupoid.n
    for i in range(1, n + 1):
        row = {j: pp for (si, j), pp in f.strips.items() if si == i}
        hit = _collision_on_common_piece(row)
        if hit:
            j1, j2, iv = hit
            return False, ("source", i, j1, j2, iv)
    for j in range(1, n + 1):
        col = {i: pp for (i, sj), pp in f.strips.items() if sj == j}
        hit = _collision_on_common_piece(col)
        if hit:
            i1, i2, iv = hit
            return False, ("range", j, i1, i2, iv)
    return True, None


@dataclass(frozen=True)
class PointMap:
    """A partial map on star points, read off the support of a normalizer:
    source points go to range points over the support."""

    n: int
    edge_segments: tuple  # ((i, ((lo, hi, j), ...)), ...)
    center_fixed: bool
    well_defined: bool = True

    def apply(self, p):
        if isinstance(p, CenterPoint):
            return CENTER if self.center_fixed else None
        for i, segs in self.edge_segments:
            if i == p.edge:
                for lo, hi, j in segs:
                    if lo < p.t <= hi:
                        return EdgePoint(j, p.t)
        return None

    def as_permutation(self):
        """The edge permutation inducing this map, if it is one everywhere."""
        images = {}
        for i, segs in self.edge_segments:
            if len(segs) != 1:
                return None
            lo, hi, j = segs[0]
            if lo != 0 or hi != 1:
                return None
            images[i] = j
        if sorted(images) != list(range(1, self.n + 1)):
            return None
        try:
            return Permutation([images[i] for i in range(1, self.n + 1)])
        except ValueError:
            return None

    def to_json_dict(self) -> dict:
        return {
            "edges": [
                {"source": i, "segments": [[str(lo), str(hi), j] for lo, hi, j in segs]}
                for i, segs in self.edge_segments
            ],
            "center_fixed": self.center_fixed,
            "well_defined": self.well_defined,
        }


def induced_point_map(u: AlgebraElement) -> PointMap:
    """The source-to-range map over the open support of a unitary u.

    Requires u*u = uu* = 1 and a single-valued map; a multi-valued support
    map means u does not implement a transformation of the star.
    """
    G = u.groupoid
    one = AlgebraElement.unit(G)
    if u.adjoint() * u != one or u * u.adjoint() != one:
        raise NotNormalizerError("element is not unitary")
    segments = []
    for i in range(1, G.n + 1):
        row = {j: pp for (si, j), pp in u.strips.items() if si == i}
        breaks = sorted({b for pp in row.values() for b in pp.breaks} | {Fraction(0), Fraction(1)})
        segs = []
        for lo, hi in zip(breaks, breaks[1:]):
            live = [j for j, pp in sorted(row.items()) if pp.polys[pp._piece_index(lo)]]
            if len(live) > 1:
                raise NotNormalizerError(
                    f"support map is multi-valued on edge {i} over ({lo},{hi}]"
                )
            if live:
                j = live[0]
                if segs and segs[-1][1] == lo and segs[-1][2] == j:
                    segs[-1] = (segs[-1][0], hi, j)
                else:
                    segs.append((lo, hi, j))
        segments.append((i, tuple(segs)))
    return PointMap(G.n, tuple(segments), center_fixed=bool(u.center))
