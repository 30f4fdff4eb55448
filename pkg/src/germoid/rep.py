"""Permutation representations, group-algebra elements, commutants, and the
constructive normalizer pipeline.

Everything here is exact: commutants and preimages come from rational row
reduction, and the unitary produced for a target permutation is verified
algebraically with zero tolerance rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraElement,
    embed_C0,
    induced_point_map,
    is_bisection_support,
    open_support,
)
from .germs import GermGroupoid
from .linalg import Matrix, nullspace, reduce_basis, solve
from .perms import PermGroup, Permutation
from .poly import PiecewisePoly, pconst
from .scalars import ONE, ZERO, Scalar, as_scalar
from .starspace import act


class PreimageObstruction(ValueError):
    """The target operator is not in the image of the integrated representation."""


class InternalCheckError(AssertionError):
    """An exact runtime verification of a constructed object failed."""


def perm_rep(sigma: Permutation) -> Matrix:
    """The 0/1 matrix sending basis vector e_i to e_{sigma(i)}."""
    n = sigma.n
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(1, n + 1):
        rows[sigma(i) - 1][i - 1] = ONE
    return Matrix(rows)


class GroupAlgebraElement:
    """A finitely supported scalar function on a permutation group, with
    convolution product and the standard involution."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: PermGroup, coeffs):
        self.group = group
        self.coeffs = {}
        for s, c in coeffs.items():
            c = as_scalar(c)
            if s not in group:
                raise ValueError(f"{s} is not in the group")
            if c:
                self.coeffs[s] = c

    @classmethod
    def delta(cls, group: PermGroup, sigma: Permutation) -> "GroupAlgebraElement":
        return cls(group, {sigma: ONE})

    @classmethod
    def zero(cls, group: PermGroup) -> "GroupAlgebraElement":
        return cls(group, {})

    @classmethod
    def unit(cls, group: PermGroup) -> "GroupAlgebraElement":
        return cls.delta(group, group.identity)

    def coeff(self, sigma: Permutation) -> Scalar:
        return self.coeffs.get(sigma, ZERO)

    def support(self):
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if self.group != other.group:
            raise ValueError("elements of different group algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out[s] + c if s in out else c
        return GroupAlgebraElement(self.group, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = as_scalar(c)
        return GroupAlgebraElement(self.group, {s: c * v for s, v in self.coeffs.items()})

    def __mul__(self, other):
        self._check(other)
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                ab = a * b
                prod = ca * cb
                out[ab] = out[ab] + prod if ab in out else prod
        return GroupAlgebraElement(self.group, out)

    def adjoint(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self.group, {s.inverse(): c.conjugate() for s, c in self.coeffs.items()}
        )

    def inner(self, other) -> Scalar:
        """Coefficient inner product <a,b> = sum a_s conj(b_s)."""
        self._check(other)
        acc = ZERO
        for s, c in self.coeffs.items():
            if s in other.coeffs:
                acc = acc + c * other.coeffs[s].conjugate()
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.group, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = " + ".join(f"({c})d[{s}]" for s, c in sorted(self.coeffs.items()))
        return terms or "0"


def integrated_rep(a: GroupAlgebraElement) -> Matrix:
    """Extend the permutation representation linearly; entry (j,i) is the sum
    of the coefficients of the elements sending i to j."""
    n = a.group.n
    rows = [[ZERO] * n for _ in range(n)]
    for s, c in a.coeffs.items():
        for i in range(1, n + 1):
            j = s(i)
            rows[j - 1][i - 1] = rows[j - 1][i - 1] + c
    return Matrix(rows)


# ---------------------------------------------------------------------------
# commutants and bi-transitivity


def commutant_basis(mats):
    """Exact basis of {X : XM = MX for all M}, in reduced row echelon form
    (row-major vectorization), plus its dimension."""
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].nrows
    for m in mats:
        if m.nrows != n or m.ncols != n:
            raise ValueError("matrices must be square and of equal size")

    def v(r, c):
        return r * n + c

    rows = []
    for m in mats:
        for r in range(n):
            for c in range(n):
                row = [ZERO] * (n * n)
                for k in range(n):
                    # (XM)[r,c] += X[r,k] M[k,c];  (MX)[r,c] += M[r,k] X[k,c]
                    row[v(r, k)] = row[v(r, k)] + m[k, c]
                    row[v(k, c)] = row[v(k, c)] - m[r, k]
                rows.append(row)
    basis_vecs = reduce_basis(nullspace(rows, n * n))
    basis = [
        Matrix([vec[r * n : (r + 1) * n] for r in range(n)]) for vec in basis_vecs
    ]
    return basis, len(basis)


def bitransitivity_check(group: PermGroup) -> bool:
    """Brute force: every ordered pair of distinct points reaches every other."""
    n = group.n
    pairs = [(i1, i2) for i1 in range(1, n + 1) for i2 in range(1, n + 1) if i1 != i2]
    for i1, i2 in pairs:
        reached = {(s(i1), s(i2)) for s in group}
        if any(p not in reached for p in pairs):
            return False
    return True


# ---------------------------------------------------------------------------
# minimum-norm preimages and the constructive unitary


def _integrated_system(group: PermGroup):
    """Matrix of the integrated representation as a linear map from group
    coefficients (columns, in group order) to matrix entries (rows)."""
    elems = list(group)
    n = group.n
    rows = []
    for r in range(n):
        for c in range(n):
            rows.append([ONE if s(c + 1) == r + 1 else ZERO for s in elems])
    return elems, rows


def min_norm_preimage(target: Matrix, group: PermGroup) -> GroupAlgebraElement:
    """The unique preimage of target under the integrated representation that
    is orthogonal to its kernel in the coefficient inner product.

    Solves the linear system exactly, then subtracts the projection of the
    particular solution onto the kernel (Gram solve, all rational).  Raises
    PreimageObstruction when the target is outside the image, which is how
    the small-n obstruction shows up.
    """
    n = group.n
    if target.nrows != n or target.ncols != n:
        raise ValueError("target has the wrong shape")
    elems, rows = _integrated_system(group)
    rhs = target.vec()
    x0 = solve(rows, rhs)
    if x0 is None:
        raise PreimageObstruction(
            "target is not in the span of the group's permutation matrices"
        )
    kernel = nullspace(rows, len(elems))
    if kernel:
        # Gram solve: coefficients of the projection of x0 onto the kernel;
        # the Gram matrix is hermitian, so compute the upper half only
        m = len(kernel)
        gram = [[None] * m for _ in range(m)]
        for r in range(m):
            for c in range(r, m):
                val = _hdot(kernel[c], kernel[r])
                gram[r][c] = val
                gram[c][r] = val.conjugate()
        proj_rhs = [_hdot(x0, kr) for kr in kernel]
        coefs = solve(gram, proj_rhs)
        if coefs is None:
            raise InternalCheckError("positive-definite Gram system failed to solve")
        for c, k in zip(coefs, kernel):
            x0 = [a - c * b for a, b in zip(x0, k)]
        for k in kernel:
            if _hdot(x0, k):
                raise InternalCheckError("projection left a kernel component")
    result = GroupAlgebraElement(group, dict(zip(elems, x0)))
    if integrated_rep(result) != target:
        raise InternalCheckError("preimage does not map to the target")
    return result


def _hdot(xs, ys) -> Scalar:
    acc = ZERO
    for x, y in zip(xs, ys):
        if (x.re or x.im) and (y.re or y.im):
            acc = acc + x * y.conjugate()
    return acc


def kernel_projection(group: PermGroup) -> GroupAlgebraElement:
    """The central projection p with: ker of the integrated representation
    equal to p times the group algebra.  Built as delta_id minus the
    minimum-norm preimage of the identity matrix, then verified exactly."""
    q = min_norm_preimage(Matrix.identity(group.n), group)
    p = GroupAlgebraElement.unit(group) - q
    if p * p != p or p.adjoint() != p:
        raise InternalCheckError("kernel projection is not a self-adjoint idempotent")
    for s in group:
        d = GroupAlgebraElement.delta(group, s)
        if p * d != d * p:
            raise InternalCheckError("kernel projection is not central")
    if not integrated_rep(p).is_zero():
        raise InternalCheckError("kernel projection is not killed by the representation")
    return p


def build_unitary_v(group: PermGroup, tau: Permutation) -> GroupAlgebraElement:
    """A unitary group-algebra element mapping to the permutation matrix of tau.

    The minimum-norm preimage of pi(tau) is unitary in the corner complementary
    to the kernel (the representation is a *-isomorphism there and the target
    is unitary); adding the kernel projection makes it unitary outright.
    Every step is verified exactly and failures are hard errors.
    """
    if tau.n != group.n:
        raise ValueError("tau acts on the wrong number of points")
    p = kernel_projection(group)
    v0 = min_norm_preimage(perm_rep(tau), group)
    v = v0 + p
    unit = GroupAlgebraElement.unit(group)
    if v.adjoint() * v != unit or v * v.adjoint() != unit:
        raise InternalCheckError("constructed element is not unitary")
    if integrated_rep(v) != perm_rep(tau):
        raise InternalCheckError("constructed element misses the target")
    return v


# ---------------------------------------------------------------------------
# integration into the convolution algebra


def phi(a: GroupAlgebraElement, groupoid: GermGroupoid) -> AlgebraElement:
    """Send sum a_s delta_s to sum a_s (indicator of s's sheet).

    The strip over (i,j) is the constant sum of a_s over s(i)=j, which is
    exactly the (j,i) entry of the integrated representation.
    """
    if groupoid.group != a.group:
        raise ValueError("group algebra and groupoid do not match")
    strips = {}
    for (i, j) in groupoid.admissible_pairs:
        total = ZERO
        for s, c in a.coeffs.items():
            if s(i) == j:
                total = total + c
        if total:
            strips[(i, j)] = PiecewisePoly.from_poly(pconst(total))
    return AlgebraElement(groupoid, strips, dict(a.coeffs))


@dataclass
class NormalizerReport:
    """What the constructive normalizer pipeline verified, exactly."""

    n: int
    tau: Permutation
    tau_is_even: bool
    v_support_size: int
    center_support: list          # (Permutation, Scalar) pairs
    unitary_ok: bool
    strips_match_tau: bool
    conjugation_trials: int
    conjugation_ok: bool
    bisection_flag: bool
    bisection_witness: object
    point_map: object
    point_map_is_tau: bool
    essentially_principal: bool
    isotropy_classes: int
    support: object = None
    note: str = ""

    @property
    def ok(self) -> bool:
        base = (
            self.unitary_ok
            and self.strips_match_tau
            and self.conjugation_ok
            and self.point_map_is_tau
            and self.essentially_principal
        )
        if self.tau_is_even:
            # the constructed unitary may or may not have bisection support
            # (center support depends on the preimage convention); no constraint
            return base
        # odd tau: at least two center coefficients are forced, so the open
        # support must fail the bisection test
        return base and not self.bisection_flag


def build_strange_normalizer(n: int, tau: Permutation, trials: int = 8, seed: int = 0):
    """Unitary u in the star algebra whose strips are the 0/1 pattern of tau,
    conjugating diagonal elements to their tau-translates; for odd tau its
    open support is not a bisection even though the groupoid is essentially
    principal.  Returns (u, report)."""
    if n < 4:
        raise ValueError("the construction needs at least 4 edges")
    if tau.n != n:
        raise ValueError("tau acts on the wrong number of edges")
    from .sampling import random_ppfun

    G = GermGroupoid.star(n)
    v = build_unitary_v(G.group, tau)
    u = phi(v, G)

    one = AlgebraElement.unit(G)
    unitary_ok = (u.adjoint() * u == one) and (u * u.adjoint() == one)

    expected_strips = {
        (i, tau(i)): PiecewisePoly.const(1) for i in range(1, n + 1)
    }
    strips_match = u.strips == expected_strips

    import random

    rng = random.Random(seed)
    conj_ok = True
    for _ in range(trials):
        h = random_ppfun(n, rng)
        lhs = u.adjoint() * embed_C0(G, h) * u
        rhs = embed_C0(G, act(tau.inverse(), h))  # h composed with the tau action
        if lhs != rhs:
            conj_ok = False
            break

    bis_flag, bis_witness = is_bisection_support(u)
    pm = induced_point_map(u)
    point_map_is_tau = pm.as_permutation() == tau and pm.center_fixed
    ep_flag, _ = G.essentially_principal_check()

    note = ""
    if tau.is_even():
        note = (
            "tau is even: the plain sheet indicator of tau is an alternative "
            "normalizer whose open support is a bisection"
        )

    report = NormalizerReport(
        n=n,
        tau=tau,
        tau_is_even=tau.is_even(),
        v_support_size=len(v.coeffs),
        center_support=sorted(u.center.items()),
        unitary_ok=unitary_ok,
        strips_match_tau=strips_match,
        conjugation_trials=trials,
        conjugation_ok=conj_ok,
        bisection_flag=bis_flag,
        bisection_witness=bis_witness,
        point_map=pm,
        point_map_is_tau=point_map_is_tau,
        essentially_principal=ep_flag,
        isotropy_classes=len(G.isotropy_description()),
        support=open_support(u),
        note=note,
    )
    return u, report
