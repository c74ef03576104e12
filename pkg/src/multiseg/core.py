"""Segments, multisegments and their plain-text / JSON forms.

Exponents are integers on a labelled cuspidal line.  A multisegment keeps its
segments sorted by ``(line, b, e)`` so equality of multisets is equality of
tuples.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, NamedTuple

DEFAULT_LINE = "rho"
DUAL_SUFFIX = "~"

_FORBIDDEN = set("[],+@")


class ParseError(ValueError):
    """Malformed multisegment text.  ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def check_line(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError("line label must be a nonempty string")
    if any(ch.isspace() or ch in _FORBIDDEN for ch in label):
        raise ValueError(f"invalid line label {label!r}")
    return label


def dual_line(label: str) -> str:
    if label.endswith(DUAL_SUFFIX):
        return label[: -len(DUAL_SUFFIX)]
    return label + DUAL_SUFFIX


class Segment(NamedTuple):
    line: str
    b: int
    e: int

    @classmethod
    def make(cls, b: int, e: int, line: str = DEFAULT_LINE) -> "Segment":
        if b > e:
            raise ValueError(f"empty segment [{b},{e}]")
        return cls(check_line(line), int(b), int(e))

    @property
    def length(self) -> int:
        return self.e - self.b + 1

    def shift(self, k: int) -> "Segment":
        return Segment(self.line, self.b + k, self.e + k)

    def __str__(self) -> str:
        return f"[{self.b},{self.e}]"


def is_linked(s1: Segment, s2: Segment) -> bool:
    if s1.line != s2.line:
        return False
    if s1.b > s2.e + 1 or s2.b > s1.e + 1:
        return False
    # union is a segment; linked unless one contains the other
    lo, hi = min(s1.b, s2.b), max(s1.e, s2.e)
    return (lo, hi) != (s1.b, s1.e) and (lo, hi) != (s2.b, s2.e)


def precedes(s1: Segment, s2: Segment) -> bool:
    return is_linked(s1, s2) and s1.b < s2.b


def is_juxtaposed(s1: Segment, s2: Segment) -> bool:
    return s1.line == s2.line and (s1.e + 1 == s2.b or s2.e + 1 == s1.b)


class Multisegment:
    """Finite multiset of segments, immutable and canonically ordered."""

    __slots__ = ("items", "_hash")

    def __init__(self, segments: Iterable[Segment] = ()):
        items = []
        for s in segments:
            if not isinstance(s, Segment):
                s = Segment(*s)
            if s.b > s.e:
                raise ValueError(f"empty segment [{s.b},{s.e}]")
            items.append(s)
        items.sort()
        self.items: tuple[Segment, ...] = tuple(items)
        self._hash = hash(self.items)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], line: str = DEFAULT_LINE) -> "Multisegment":
        check_line(line)
        return cls(Segment(line, b, e) for b, e in pairs)

    @classmethod
    def from_lines(cls, per_line: dict[str, Iterable[tuple[int, int]]]) -> "Multisegment":
        return cls(Segment(line, b, e) for line, pairs in per_line.items() for b, e in pairs)

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.items == other.items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Multisegment") -> bool:
        # lexicographic, only so collections of multisegments sort stably
        return self.items < other.items

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.items + other.items)

    def __repr__(self) -> str:
        return f"Multisegment({format_multisegment(self)!r})"

    def __str__(self) -> str:
        return format_multisegment(self)

    def lines(self) -> list[str]:
        return sorted({s.line for s in self.items})

    def pairs(self, line: str | None = None) -> tuple[tuple[int, int], ...]:
        """Sorted ``(b, e)`` pairs, restricted to ``line`` if given."""
        return tuple((s.b, s.e) for s in self.items if line is None or s.line == line)

    def by_line(self) -> dict[str, tuple[tuple[int, int], ...]]:
        out: dict[str, list[tuple[int, int]]] = {}
        for s in self.items:
            out.setdefault(s.line, []).append((s.b, s.e))
        return {k: tuple(v) for k, v in out.items()}

    def shift(self, k: int) -> "Multisegment":
        return Multisegment(s.shift(k) for s in self.items)

    def cardinality(self) -> int:
        """Total number of exponents counted with multiplicity."""
        return sum(s.e - s.b + 1 for s in self.items)

    def max_length(self) -> int:
        return max((s.e - s.b + 1 for s in self.items), default=0)


EMPTY = Multisegment()


class SpehParams(NamedTuple):
    A: int
    B: int
    C: int
    D: int
    line: str = DEFAULT_LINE

    def validate(self) -> "SpehParams":
        A, B, C, D = self.A, self.B, self.C, self.D
        if not (A <= B and A <= C and A + D == B + C):
            raise ValueError(f"invalid Speh quadruple {(A, B, C, D)}")
        check_line(self.line)
        return self

    @property
    def n(self) -> int:
        """Number of segments."""
        return self.C - self.A + 1

    @property
    def d(self) -> int:
        """Common segment length."""
        return self.B - self.A + 1

    def quad(self) -> tuple[int, int, int, int]:
        return (self.A, self.B, self.C, self.D)

    def shift(self, k: int) -> "SpehParams":
        return SpehParams(self.A + k, self.B + k, self.C + k, self.D + k, self.line)

    def __str__(self) -> str:
        return f"{self.A},{self.B},{self.C},{self.D}"


def speh_multisegment(p: SpehParams) -> Multisegment:
    p.validate()
    return Multisegment(Segment(p.line, p.A + i, p.B + i) for i in range(p.C - p.A + 1))


def a_nd(n: int, d: int, line: str = DEFAULT_LINE) -> Multisegment:
    """Rectangle multisegment with ``n`` segments of length ``d``, first beginning 0."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    return Multisegment(Segment(line, i, i + d - 1) for i in range(n))


def support(a: Multisegment) -> Counter:
    """Multiset of ``(line, exponent)`` points."""
    points: Counter = Counter()
    for s in a:
        for x in range(s.b, s.e + 1):
            points[(s.line, x)] += 1
    return points


def underlying_support(a: Multisegment) -> dict[str, list[tuple[int, int]]]:
    """Per line, the set of exponents as maximal disjoint segments."""
    out: dict[str, list[tuple[int, int]]] = {}
    for line, pairs in a.by_line().items():
        comps: list[list[int]] = []
        for b, e in pairs:  # sorted by b
            if comps and b <= comps[-1][1] + 1:
                comps[-1][1] = max(comps[-1][1], e)
            else:
                comps.append([b, e])
        out[line] = [(b, e) for b, e in comps]
    return out


def contragredient(a: Multisegment) -> Multisegment:
    return Multisegment(Segment(dual_line(s.line), -s.e, -s.b) for s in a)


# --- text form -------------------------------------------------------------

_TERM = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")
_LABEL = re.compile(r"@([^\s\[\],+@]+)")


def parse_multisegment(text: str) -> Multisegment:
    """Parse ``[b,e]+[b,e]...`` with optional ``@label`` closing a run of terms.

    A label applies to every unlabelled term before it; terms after the last
    label sit on the default line.
    """
    src = text.strip()
    if not src:
        raise ParseError("empty input", 0)
    if src == "0":
        return EMPTY
    segments: list[Segment] = []
    pending: list[tuple[int, int]] = []
    pos = 0
    while True:
        m = _TERM.match(src, pos)
        if not m:
            raise ParseError("expected segment '[b,e]'", pos)
        b, e = int(m.group(1)), int(m.group(2))
        if b > e:
            raise ParseError(f"empty segment [{b},{e}]", pos)
        pending.append((b, e))
        pos = m.end()
        lm = _LABEL.match(src, pos)
        if lm:
            segments.extend(Segment(lm.group(1), b, e) for b, e in pending)
            pending = []
            pos = lm.end()
        if pos == len(src):
            break
        if src[pos] != "+":
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        pos += 1
    segments.extend(Segment(DEFAULT_LINE, b, e) for b, e in pending)
    return Multisegment(segments)


def format_multisegment(a: Multisegment) -> str:
    if not a:
        return "0"
    groups = a.by_line()
    if list(groups) == [DEFAULT_LINE]:
        return "+".join(f"[{b},{e}]" for b, e in groups[DEFAULT_LINE])
    return "+".join(
        "+".join(f"[{b},{e}]" for b, e in pairs) + f"@{line}" for line, pairs in groups.items()
    )


# --- JSON form -------------------------------------------------------------

def multisegment_to_json(a: Multisegment):
    groups = a.by_line()
    objs = [{"line": line, "segments": [list(p) for p in pairs]} for line, pairs in groups.items()]
    if not objs:
        return {"line": DEFAULT_LINE, "segments": []}
    return objs[0] if len(objs) == 1 else objs


def multisegment_from_json(data) -> Multisegment:
    objs = data if isinstance(data, list) else [data]
    segs = []
    for obj in objs:
        line = check_line(obj.get("line", DEFAULT_LINE))
        for b, e in obj["segments"]:
            segs.append(Segment.make(b, e, line))
    return Multisegment(segs)
