"""Ladder multisegments indexed by partitions and the interval-set reducibility test.

A ladder ``m(alpha, x)`` has rows ``[x-i+1, x-i+alpha_i]``.  Its interval set
is everything strictly left of the support plus every row end moved up by one;
reducibility of a product of two ladders is read off the two set differences.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .core import DEFAULT_LINE, Multisegment, Segment, SpehParams
from .criteria import Status, Verdict


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("partition must be nonempty")
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(int(p) for p in text.split(",") if p.strip())

    @classmethod
    def constant(cls, part: int, count: int) -> "Partition":
        return cls([part] * count)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class RaySet(NamedTuple):
    """All integers ``<= ray_max`` together with finitely many larger ones."""

    ray_max: int
    extra: frozenset

    @classmethod
    def make(cls, ray_max: int, extra) -> "RaySet":
        extra = {x for x in extra if x > ray_max}
        while ray_max + 1 in extra:
            ray_max += 1
            extra.discard(ray_max)
        return cls(ray_max, frozenset(extra))

    def __contains__(self, x) -> bool:  # type: ignore[override]
        return x <= self.ray_max or x in self.extra

    def sorted_extra(self) -> list[int]:
        return sorted(self.extra)

    def __str__(self) -> str:
        tail = ",".join(map(str, self.sorted_extra()))
        return f"<-inf,{self.ray_max}]" + (f" u {{{tail}}}" if tail else "")


def ladder_multisegment(alpha: Partition, x: int, line: str = DEFAULT_LINE) -> Multisegment:
    return Multisegment(Segment(line, x - i + 1, x - i + a) for i, a in enumerate(alpha, start=1))


def i_set(alpha: Partition, x: int) -> RaySet:
    r = len(alpha)
    return RaySet.make(x - r, {x - i + a + 1 for i, a in enumerate(alpha, start=1)})


def i_set_speh(p: SpehParams) -> RaySet:
    return RaySet.make(p.A - 1, range(p.B + 1, p.D + 2))


def speh_to_ladder(p: SpehParams) -> tuple[Partition, int]:
    """Constant partition ``(d,...,d)`` with ``n`` rows, anchored at ``x = C``."""
    p.validate()
    return Partition.constant(p.d, p.n), p.C


def rayset_diff(s1: RaySet, s2: RaySet) -> set[int]:
    """``s1 \\ s2``; finite because both rays are cut off."""
    lo = min(s2.ray_max + 1, min(s1.extra, default=s2.ray_max + 1))
    hi = max(s1.ray_max, max(s1.extra, default=s1.ray_max))
    return {x for x in range(lo, hi + 1) if x in s1 and x not in s2}


def hull(points) -> tuple[int, int] | None:
    """Smallest segment containing ``points``; None for the empty set."""
    points = list(points)
    if not points:
        return None
    return (min(points), max(points))


def _hull_meets(outer: set[int], inner: set[int]) -> bool:
    h = hull(outer)
    return h is not None and any(h[0] <= v <= h[1] for v in inner)


def _between(outer: set[int], inner: set[int]) -> bool:
    # some j in inner with i < j < k for i, k in outer
    return any(i < j < k for i, k in itertools.combinations(sorted(outer), 2) for j in inner)


def _interleaved(xs: set[int], ys: set[int]) -> bool:
    # i<j<k<l or j<i<l<k with i,k from xs and j,l from ys
    for i, k in itertools.permutations(xs, 2):
        for j, l in itertools.permutations(ys, 2):
            if i < j < k < l or j < i < l < k:
                return True
    return False


def _differences(alpha, x, beta, y):
    I1, I2 = i_set(alpha, x), i_set(beta, y)
    return rayset_diff(I1, I2), rayset_diff(I2, I1)


def lnt_reducible(alpha: Partition, x: int, beta: Partition, y: int, same_line: bool = True,
                  form: str = "hull") -> Verdict:
    """Reducibility of ``L(m(alpha,x)) x L(m(beta,y))``.

    ``form`` selects the hull formulation or the ordered-witness formulation;
    the two must agree.
    """
    if form not in ("hull", "witness"):
        raise ValueError(f"unknown form {form!r}")
    constant = len(set(alpha)) == 1 and len(set(beta)) == 1
    provenance = "speh" if constant else "LNT-only"
    if not same_line:
        return Verdict(Status.IRREDUCIBLE, "lnt", "different-lines", {"provenance": provenance})
    d12, d21 = _differences(alpha, x, beta, y)
    if form == "hull":
        left = _hull_meets(d12, d21)    # hull(I1\I2) meets I2\I1
        right = _hull_meets(d21, d12)   # I1\I2 meets hull(I2\I1)
        both = left and right
    else:
        left = _between(d12, d21)
        right = _between(d21, d12)
        both = _interleaved(d12, d21)
    if y < x:
        case, red = "y<x", left
    elif x < y:
        case, red = "x<y", right
    else:
        case, red = "x=y", both
    witness = {
        "case": case,
        "form": form,
        "I1_minus_I2": sorted(d12),
        "I2_minus_I1": sorted(d21),
        "provenance": provenance,
    }
    status = Status.REDUCIBLE if red else Status.IRREDUCIBLE
    return Verdict(status, "lnt", "interleaved" if red else "separated", witness)


def lnt_speh(p1: SpehParams, p2: SpehParams, form: str = "hull") -> Verdict:
    a, x = speh_to_ladder(p1)
    b, y = speh_to_ladder(p2)
    return lnt_reducible(a, x, b, y, same_line=p1.line == p2.line, form=form)
