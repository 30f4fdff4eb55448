"""Polynomials and continuous piecewise polynomials on [0,1], all exact.

A polynomial is a tuple of Scalar coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  A PiecewisePoly
carries rational breakpoints 0 = b0 < ... < bm = 1 and one polynomial per
piece (b_k, b_{k+1}], with matching values at interior breakpoints.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction

from .scalars import ZERO, Scalar, as_scalar

PZERO = ()
PONE = (Scalar(1),)


def ptrim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


def pconst(c) -> tuple:
    return ptrim((as_scalar(c),))


def padd(p, q):
    if not p:
        return q
    if not q:
        return p
    n = max(len(p), len(q))
    return ptrim(
        (p[k] if k < len(p) else ZERO) + (q[k] if k < len(q) else ZERO)
        for k in range(n)
    )


def pneg(p):
    return tuple(-c for c in p)


def psub(p, q):
    return padd(p, pneg(q))


def pmul(p, q):
    if not p or not q:
        return PZERO
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return ptrim(out)


def pscale(c, p):
    c = as_scalar(c)
    if c.is_zero():
        return PZERO
    return ptrim(c * a for a in p)


def pconj(p):
    # conj of the function on real arguments: conjugate the coefficients
    return tuple(a.conjugate() for a in p)


def peval(p, t) -> Scalar:
    t = as_scalar(t) if not isinstance(t, Fraction) else Scalar(t)
    acc = ZERO
    for c in reversed(p):
        acc = acc * t + c
    return acc


class PiecewisePoly:
    """A continuous piecewise polynomial on (0,1] with a limit value at 0.

    The stored pieces are automatically normalized: adjacent pieces with the
    same polynomial are merged, so equal functions compare equal.
    """

    __slots__ = ("breaks", "polys")

    def __init__(self, breaks, polys, _checked=False):
        breaks = tuple(Fraction(b) for b in breaks)
        polys = tuple(ptrim(p) for p in polys)
        if not _checked:
            if len(breaks) < 2 or len(polys) != len(breaks) - 1:
                raise ValueError("breakpoint/piece count mismatch")
            if breaks[0] != 0 or breaks[-1] != 1:
                raise ValueError("breakpoints must run from 0 to 1")
            if any(a >= b for a, b in zip(breaks, breaks[1:])):
                raise ValueError("breakpoints must be strictly increasing")
            for k in range(1, len(polys)):
                if peval(polys[k - 1], breaks[k]) != peval(polys[k], breaks[k]):
                    raise ValueError(f"discontinuity at t={breaks[k]}")
        # merge adjacent identical pieces
        mb = [breaks[0]]
        mp = []
        for k, p in enumerate(polys):
            if mp and mp[-1] == p:
                mb[-1] = breaks[k + 1]
            else:
                mp.append(p)
                mb.append(breaks[k + 1])
        self.breaks = tuple(mb)
        self.polys = tuple(mp)

    @classmethod
    def zero(cls) -> "PiecewisePoly":
        return cls((Fraction(0), Fraction(1)), (PZERO,), _checked=True)

    @classmethod
    def const(cls, c) -> "PiecewisePoly":
        return cls((Fraction(0), Fraction(1)), (pconst(c),), _checked=True)

    @classmethod
    def from_poly(cls, p) -> "PiecewisePoly":
        return cls((Fraction(0), Fraction(1)), (ptrim(p),), _checked=True)

    def at0(self) -> Scalar:
        """Limit value as t -> 0+ (the first piece evaluated at 0)."""
        p = self.polys[0]
        return p[0] if p else ZERO

    def __call__(self, t) -> Scalar:
        t = Fraction(t)
        if not 0 < t <= 1:
            raise ValueError(f"t={t} outside (0,1]")
        k = bisect_left(self.breaks, t) - 1
        return peval(self.polys[k], t)

    def _aligned(self, other):
        breaks = sorted(set(self.breaks) | set(other.breaks))
        mine = [self.polys[self._piece_index(lo)] for lo in breaks[:-1]]
        theirs = [other.polys[other._piece_index(lo)] for lo in breaks[:-1]]
        return breaks, mine, theirs

    def _piece_index(self, lo: Fraction) -> int:
        # index of the piece covering the interval just right of lo
        k = bisect_left(self.breaks, lo)
        if k < len(self.breaks) and self.breaks[k] == lo:
            return min(k, len(self.polys) - 1)
        return k - 1

    def _zip(self, other, op):
        breaks, mine, theirs = self._aligned(other)
        return PiecewisePoly(breaks, [op(p, q) for p, q in zip(mine, theirs)], _checked=True)

    def __add__(self, other):
        return self._zip(other, padd)

    def __sub__(self, other):
        return self._zip(other, psub)

    def __mul__(self, other):
        return self._zip(other, pmul)

    def __neg__(self):
        return PiecewisePoly(self.breaks, [pneg(p) for p in self.polys], _checked=True)

    def scale(self, c) -> "PiecewisePoly":
        return PiecewisePoly(self.breaks, [pscale(c, p) for p in self.polys], _checked=True)

    def conj(self) -> "PiecewisePoly":
        return PiecewisePoly(self.breaks, [pconj(p) for p in self.polys], _checked=True)

    def is_zero(self) -> bool:
        return all(not p for p in self.polys)

    def pieces(self):
        for k, p in enumerate(self.polys):
            yield self.breaks[k], self.breaks[k + 1], p

    def nonzero_intervals(self):
        """Maximal intervals (lo, hi] of pieces whose polynomial is not identically zero."""
        out = []
        for lo, hi, p in self.pieces():
            if not p:
                continue
            if out and out[-1][1] == lo:
                out[-1] = (out[-1][0], hi)
            else:
                out.append((lo, hi))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PiecewisePoly)
            and self.breaks == other.breaks
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash((self.breaks, self.polys))

    def __repr__(self):
        bits = ", ".join(f"({lo},{hi}]:{list(map(str, p))}" for lo, hi, p in self.pieces())
        return f"PiecewisePoly[{bits}]"
