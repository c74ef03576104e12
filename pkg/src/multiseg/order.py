"""The order on multisegments generated by elementary linkings.

``c < b`` when ``c`` is reached from ``b`` by a chain of moves replacing a
linked pair by its union and intersection.  Downsets are found by BFS per line
(segments on different lines never link) and recombined as a product.
"""

from __future__ import annotations

import itertools
import os
from collections import deque

from .core import Multisegment, Segment, support

Pairs = tuple[tuple[int, int], ...]

DEFAULT_BUDGET = 200_000


class DownsetBudgetExceeded(RuntimeError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"downset budget exceeded ({count} states visited, limit {limit})")


def default_budget() -> int:
    env = os.environ.get("MULTISEG_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def linkings_pairs(pairs: Pairs) -> set[Pairs]:
    out = set()
    n = len(pairs)
    for i in range(n):
        b1, e1 = pairs[i]
        for j in range(i + 1, n):
            b2, e2 = pairs[j]
            # pairs sorted, so b1 <= b2
            if b1 < b2 and e1 < e2 and b2 <= e1 + 1:
                rest = list(pairs[:i] + pairs[i + 1 : j] + pairs[j + 1 :])
                rest.append((b1, e2))
                if b2 <= e1:
                    rest.append((b2, e1))
                rest.sort()
                out.add(tuple(rest))
    return out


_downsets: dict[Pairs, frozenset] = {}
_DOWNSET_CACHE_MAX = 4096


def _bfs(pairs: Pairs, limit: int):
    """Generator doing one BFS expansion per ``next``; returns the downset."""
    if pairs in _downsets:
        cached = _downsets[pairs]
        if len(cached) > limit:
            raise DownsetBudgetExceeded(len(cached), limit)
        return cached
    seen: set[Pairs] = set()
    queue = deque([pairs])
    while queue:
        cur = queue.popleft()
        for nxt in linkings_pairs(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise DownsetBudgetExceeded(len(seen), limit)
                queue.append(nxt)
        yield
    result = frozenset(seen)
    if len(_downsets) >= _DOWNSET_CACHE_MAX:
        _downsets.clear()
    _downsets[pairs] = result
    return result


def _run(gen):
    while True:
        try:
            next(gen)
        except StopIteration as stop:
            return stop.value


def downset_pairs(pairs: Pairs, limit: int | None = None) -> frozenset:
    """Strict downset of one line's sorted pairs."""
    return _run(_bfs(tuple(pairs), default_budget() if limit is None else limit))


def smaller_downset(p: Pairs, q: Pairs, limit: int | None = None) -> tuple[int, frozenset]:
    """Expand both downsets in lockstep; return ``(0, down(p))`` or ``(1, down(q))``
    for whichever finishes first."""
    limit = default_budget() if limit is None else limit
    gens = [_bfs(tuple(p), limit), _bfs(tuple(q), limit)]
    while True:
        for idx, gen in enumerate(gens):
            try:
                next(gen)
            except StopIteration as stop:
                return idx, stop.value


def rank_profile(pairs: Pairs, lo: int, hi: int) -> tuple[int, ...]:
    """For ``lo <= i <= j <= hi``, the number of segments containing ``[i, j]``."""
    out = []
    for i in range(lo, hi + 1):
        for j in range(i, hi + 1):
            out.append(sum(1 for b, e in pairs if b <= i and j <= e))
    return tuple(out)


def _span(pairs: Pairs) -> tuple[int, int]:
    return min(b for b, _ in pairs), max(e for _, e in pairs)


def lt_pairs(x: Pairs, y: Pairs, limit: int | None = None) -> bool:
    """``x < y`` on one line, by a search down from ``y``.

    A linking move never lowers any count in :func:`rank_profile`, so states
    whose profile already exceeds that of ``x`` somewhere are pruned.
    """
    if x == y or not x or not y:
        return False
    limit = default_budget() if limit is None else limit
    lo, hi = _span(y)
    if _span(x) != (lo, hi):
        return False
    rx = rank_profile(x, lo, hi)

    def reachable(z):
        return all(a >= b for a, b in zip(rx, rank_profile(z, lo, hi)))

    if not reachable(y):
        return False
    seen = {y}
    stack = [y]
    while stack:
        cur = stack.pop()
        for nxt in linkings_pairs(cur):
            if nxt == x:
                return True
            if nxt not in seen and reachable(nxt):
                seen.add(nxt)
                if len(seen) > limit:
                    raise DownsetBudgetExceeded(len(seen), limit)
                stack.append(nxt)
    return False


def elementary_linkings(b: Multisegment) -> set[Multisegment]:
    """All ``c`` with ``c`` obtained from ``b`` by a single linking move."""
    out = set()
    groups = b.by_line()
    for line, pairs in groups.items():
        others = [Segment(l, x, y) for l, ps in groups.items() if l != line for x, y in ps]
        for nxt in linkings_pairs(pairs):
            out.add(Multisegment(others + [Segment(line, x, y) for x, y in nxt]))
    return out


def strict_downset(b: Multisegment, limit: int | None = None) -> set[Multisegment]:
    """All ``c < b``.  Raises :class:`DownsetBudgetExceeded` past ``limit`` states."""
    limit = default_budget() if limit is None else limit
    groups = b.by_line()
    choices = []
    for line, pairs in groups.items():
        below = downset_pairs(pairs, limit)
        choices.append([(line, pairs)] + [(line, c) for c in below])
    total = 1
    for ch in choices:
        total *= len(ch)
    if total - 1 > limit:
        raise DownsetBudgetExceeded(total - 1, limit)
    out = set()
    for combo in itertools.product(*choices):
        m = Multisegment(Segment(line, x, y) for line, ps in combo for x, y in ps)
        out.add(m)
    out.discard(b)
    return out


def leq(b1: Multisegment, b2: Multisegment, limit: int | None = None) -> bool:
    if b1 == b2:
        return True
    return lt(b1, b2, limit)


def lt(b1: Multisegment, b2: Multisegment, limit: int | None = None) -> bool:
    """Strict order ``b1 < b2``."""
    if b1 == b2 or b1.lines() != b2.lines() or support(b1) != support(b2):
        return False
    g1, g2 = b1.by_line(), b2.by_line()
    for line, p2 in g2.items():
        p1 = g1[line]
        if p1 != p2 and not lt_pairs(p1, p2, limit):
            return False
    return True
