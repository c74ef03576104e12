"""Zelevinsky involution on multisegments via the Moeglin-Waldspurger algorithm.

``mwa_left`` repeatedly peels off a segment built from descending ends,
``mwa_right`` the mirror image built from ascending beginnings.  Both run per
line on sorted tuples of ``(b, e)`` pairs; results on a single line are cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Multisegment, Segment

Pairs = tuple[tuple[int, int], ...]


class StepRuleError(AssertionError):
    """A debug check on the stage rules of a step failed."""


@dataclass(frozen=True)
class StepTrace:
    produced: Segment
    used: tuple[Segment, ...]
    remainder: Multisegment

    def to_json(self) -> dict:
        return {
            "produced": [self.produced.b, self.produced.e],
            "used": [[s.b, s.e] for s in self.used],
        }


def _take(pool: list[tuple[int, int]], seg: tuple[int, int]) -> None:
    # pool is sorted; removing the first copy keeps it sorted
    pool.remove(seg)


def _check_left_stage(pool, used, nxt):
    """Debug checks after the stage that used ``used[-1]``; ``nxt`` is the next pick or None."""
    X, Y = used[-1]
    if (X - 1, Y - 1) in pool and nxt != (X - 1, Y - 1):
        raise StepRuleError(f"copy of [{X-1},{Y-1}] available after [{X},{Y}] but not used next")
    if pool and all(X <= b for b, _ in pool) and nxt is not None:
        raise StepRuleError(f"step continued after [{X},{Y}] although X is a minimal beginning")
    if nxt is not None and nxt[1] - nxt[0] < Y - X:
        raise StepRuleError(f"[{nxt[0]},{nxt[1]}] shorter than earlier [{X},{Y}] in the same step")


def _left_step(pairs, check=False):
    pool = list(pairs)
    first = max(pool, key=lambda s: (s[1], s[0]))
    _take(pool, first)
    used = [first]
    x = first[1]
    prev_b = first[0]
    while True:
        target = x - len(used)
        best = None
        for b, e in pool:
            if e == target and b < prev_b and (best is None or b > best[0]):
                best = (b, e)
        if check:
            _check_left_stage(pool, used, best)
        if best is None:
            break
        _take(pool, best)
        used.append(best)
        prev_b = best[0]
    k = len(used)
    for b, e in used:
        if b < e:
            pool.append((b, e - 1))
    pool.sort()
    return (x - k + 1, x), used, pool


def _right_step(pairs):
    pool = list(pairs)
    first = min(pool)  # minimal b, then minimal e
    _take(pool, first)
    used = [first]
    x = first[0]
    prev_e = first[1]
    while True:
        target = x + len(used)
        best = None
        for b, e in pool:
            if b == target and e > prev_e and (best is None or e < best[1]):
                best = (b, e)
        if best is None:
            break
        _take(pool, best)
        used.append(best)
        prev_e = best[1]
    k = len(used)
    for b, e in used:
        if b < e:
            pool.append((b + 1, e))
    pool.sort()
    return (x, x + k - 1), used, pool


@lru_cache(maxsize=1 << 18)
def dual_pairs(pairs: Pairs) -> Pairs:
    """``mwa_left`` on one line's sorted pairs."""
    out = []
    pool = pairs
    while pool:
        produced, _, rest = _left_step(pool)
        out.append(produced)
        pool = tuple(rest)
    out.sort()
    return tuple(out)


def dual_pairs_right(pairs: Pairs) -> Pairs:
    out = []
    pool = pairs
    while pool:
        produced, _, rest = _right_step(pool)
        out.append(produced)
        pool = tuple(rest)
    out.sort()
    return tuple(out)


def _single_line(a: Multisegment) -> str:
    lines = a.lines()
    if len(lines) != 1:
        raise ValueError("step operations need a multisegment on exactly one line")
    return lines[0]


def mwa_left_step(a: Multisegment, check: bool = False) -> StepTrace:
    """One step of the end-descending algorithm on a single-line multisegment.

    With ``check`` the stage-rule facts (next shifted copy is used, a minimal
    beginning ends the step, later segments are no shorter) are asserted.
    """
    if not a:
        raise ValueError("empty multisegment")
    line = _single_line(a)
    produced, used, rest = _left_step(a.pairs(), check=check)
    return StepTrace(
        Segment(line, *produced),
        tuple(Segment(line, b, e) for b, e in used),
        Multisegment.from_pairs(rest, line),
    )


def mwa_right_step(a: Multisegment) -> StepTrace:
    if not a:
        raise ValueError("empty multisegment")
    line = _single_line(a)
    produced, used, rest = _right_step(a.pairs())
    return StepTrace(
        Segment(line, *produced),
        tuple(Segment(line, b, e) for b, e in used),
        Multisegment.from_pairs(rest, line),
    )


def mwa_left(a: Multisegment, check: bool = False) -> Multisegment:
    if check:
        return Multisegment(t.produced for t in trace_left(a, check=True))
    return Multisegment(
        Segment(line, b, e) for line, pairs in a.by_line().items() for b, e in dual_pairs(pairs)
    )


def mwa_right(a: Multisegment) -> Multisegment:
    return Multisegment(
        Segment(line, b, e) for line, pairs in a.by_line().items() for b, e in dual_pairs_right(pairs)
    )


def trace_left(a: Multisegment, check: bool = False) -> list[StepTrace]:
    """All steps of ``mwa_left``, line by line in canonical line order."""
    steps = []
    for line, pairs in a.by_line().items():
        cur = Multisegment.from_pairs(pairs, line)
        while cur:
            t = mwa_left_step(cur, check=check)
            steps.append(t)
            cur = t.remainder
    return steps


def trace_right(a: Multisegment) -> list[StepTrace]:
    steps = []
    for line, pairs in a.by_line().items():
        cur = Multisegment.from_pairs(pairs, line)
        while cur:
            t = mwa_right_step(cur)
            steps.append(t)
            cur = t.remainder
    return steps


def dual(a: Multisegment) -> Multisegment:
    """The Zelevinsky involution ``a -> a^t``."""
    return mwa_left(a)
