"""Reducibility and irreducibility tests for products ``L(a) x L(b)``.

General multisegments get the one-sided certificates (dual non-additivity for
reducibility, the downset scan for irreducibility).  Pairs of essentially
Speh representations are decided exactly, by the quadruple condition and by
the linked-and-crossed condition, and the Moeglin-Waldspurger linking
condition is evaluated in doubled (half-integer free) arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import (
    DEFAULT_LINE,
    Multisegment,
    SpehParams,
    check_line,
    is_juxtaposed,
    speh_multisegment,
)
from .involution import dual_pairs, mwa_left
from .order import DownsetBudgetExceeded, default_budget, lt_pairs, smaller_downset


class Status(str, enum.Enum):
    REDUCIBLE = "Reducible"
    IRREDUCIBLE = "Irreducible"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    status: Status
    criterion: str
    clause: str
    witness: dict = field(default_factory=dict)

    @property
    def decided(self) -> bool:
        return self.status is not Status.UNKNOWN

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "evidence": {"criterion": self.criterion, "clause": self.clause, "witness": self.witness},
        }

    def __str__(self) -> str:
        return f"{self.status.value} ({self.criterion}: {self.clause})"


# --- contact and crossing -------------------------------------------------

def is_contact(a: Multisegment, b: Multisegment) -> bool:
    return any(is_juxtaposed(s, t) for s in a for t in b)


def is_crossed(a: Multisegment, b: Multisegment) -> bool:
    return is_contact(a, mwa_left(b)) and is_contact(mwa_left(a), b)


def _meets(lo1, hi1, lo2, hi2) -> bool:
    return max(lo1, lo2) <= min(hi1, hi2)


def contact_speh(p1: SpehParams, p2: SpehParams) -> bool:
    """Closed-form contact test on quadruples."""
    if p1.line != p2.line:
        return False
    return _meets(p1.A, p1.C, p2.B + 1, p2.D + 1) or _meets(p1.B + 1, p1.D + 1, p2.A, p2.C)


def dashed_intersect(p1: SpehParams, p2: SpehParams) -> bool:
    """``[B1+1, D1+1]`` meets ``[A2, C2]``."""
    return _meets(p1.B + 1, p1.D + 1, p2.A, p2.C)


def linked_supports(p1: SpehParams, p2: SpehParams) -> bool:
    """Underlying supports ``[A1,D1]`` and ``[A2,D2]`` are linked segments."""
    if p1.line != p2.line:
        return False
    if p1.A > p2.A:
        p1, p2 = p2, p1
    return p1.A < p2.A and p1.D < p2.D and p2.A <= p1.D + 1


def support_contains(p1: SpehParams, p2: SpehParams) -> bool:
    """``[A2,D2]`` lies inside ``[A1,D1]`` on the same line."""
    return p1.line == p2.line and p1.A <= p2.A and p2.D <= p1.D


# --- general certificates --------------------------------------------------

def rc_check(a: Multisegment, b: Multisegment) -> Verdict:
    """Reducible when the dual of the sum differs from the sum of duals."""
    whole = mwa_left(a + b)
    parts = mwa_left(a) + mwa_left(b)
    if whole != parts:
        only_whole = sorted(set(whole.items) - set(parts.items))
        only_parts = sorted(set(parts.items) - set(whole.items))
        return Verdict(
            Status.REDUCIBLE,
            "rc",
            "dual-not-additive",
            {
                "dual_of_sum": str(whole),
                "sum_of_duals": str(parts),
                "only_in_dual_of_sum": [[s.b, s.e] for s in only_whole],
                "only_in_sum_of_duals": [[s.b, s.e] for s in only_parts],
            },
        )
    return Verdict(Status.UNKNOWN, "rc", "dual-additive", {"dual_of_sum": str(whole)})


def badulescu_check(a: Multisegment, b: Multisegment, limit: int | None = None) -> Verdict:
    """Irreducible if no ``c < a+b`` has ``c^t < (a+b)^t``; Unknown otherwise.

    Dual non-additivity is reported as Reducible straight away.  The scan runs
    line by line (a violating ``c`` can be taken to differ from ``a+b`` on one
    line only) and walks whichever of the two downsets is smaller.
    """
    limit = default_budget() if limit is None else limit
    rc = rc_check(a, b)
    if rc.status is Status.REDUCIBLE:
        return Verdict(Status.REDUCIBLE, "badulescu", "via-rc", rc.witness)
    total = a + b
    groups = total.by_line()
    checked = 0
    try:
        for line, s in groups.items():
            t = dual_pairs(s)
            side, down = smaller_downset(s, t, limit)
            for z in down:
                checked += 1
                dz = dual_pairs(z)
                # side 0: z = c < s, test c^t < t;  side 1: z = c^t < t, test c < s
                c, hit = (z, lt_pairs(dz, t, limit)) if side == 0 else (dz, lt_pairs(dz, s, limit))
                if hit:
                    cm = Multisegment.from_lines({**groups, line: c})
                    return Verdict(
                        Status.UNKNOWN,
                        "badulescu",
                        "violating-element",
                        {"c": str(cm), "dual_c": str(mwa_left(cm)), "checked": checked},
                    )
    except DownsetBudgetExceeded as exc:
        return Verdict(Status.UNKNOWN, "badulescu", "budget", {"visited": exc.count, "limit": exc.limit})
    return Verdict(Status.IRREDUCIBLE, "badulescu", "downset-clean", {"checked": checked})


# --- essentially Speh pairs ------------------------------------------------

def strong_less(p1: SpehParams, p2: SpehParams) -> bool:
    return p1.A < p2.A and p1.B < p2.B and p1.C < p2.C and p1.D < p2.D


def speh_reducible_thm72(p1: SpehParams, p2: SpehParams) -> Verdict:
    """Reducible iff the supports' hull is a segment and one quadruple strongly dominates."""
    p1.validate()
    p2.validate()
    name = "thm72"
    if p1.line != p2.line:
        return Verdict(Status.IRREDUCIBLE, name, "different-lines")
    lo, hi = sorted([(p1.A, p1.D), (p2.A, p2.D)])
    if hi[0] > lo[1] + 1:
        return Verdict(Status.IRREDUCIBLE, name, "union-not-segment",
                       {"supports": [[p1.A, p1.D], [p2.A, p2.D]]})
    if strong_less(p1, p2):
        return Verdict(Status.REDUCIBLE, name, "strong-dominance-12")
    if strong_less(p2, p1):
        return Verdict(Status.REDUCIBLE, name, "strong-dominance-21")
    return Verdict(Status.IRREDUCIBLE, name, "no-strong-dominance")


def speh_reducible_thm71(p1: SpehParams, p2: SpehParams) -> Verdict:
    """Reducible iff the supports are linked and the multisegments are crossed."""
    p1.validate()
    p2.validate()
    name = "thm71"
    if p1.line != p2.line:
        return Verdict(Status.IRREDUCIBLE, name, "different-lines")
    if not linked_supports(p1, p2):
        return Verdict(Status.IRREDUCIBLE, name, "supports-not-linked")
    if not is_crossed(speh_multisegment(p1), speh_multisegment(p2)):
        return Verdict(Status.IRREDUCIBLE, name, "not-crossed")
    return Verdict(Status.REDUCIBLE, name, "linked-and-crossed")


def blm_check(a: Multisegment, b: Multisegment) -> Verdict:
    """Irreducible when ``a`` and ``b`` are not crossed; Unknown otherwise."""
    if not is_contact(a, mwa_left(b)):
        return Verdict(Status.IRREDUCIBLE, "blm", "a-no-contact-dual-b")
    if not is_contact(mwa_left(a), b):
        return Verdict(Status.IRREDUCIBLE, "blm", "dual-a-no-contact-b")
    return Verdict(Status.UNKNOWN, "blm", "crossed")


def certificate_verdict(a: Multisegment, b: Multisegment, limit: int | None = None) -> Verdict:
    """RC followed by the Badulescu downset scan."""
    rc = rc_check(a, b)
    if rc.decided:
        return rc
    return badulescu_check(a, b, limit)


def product_irreducible(ps: list[SpehParams]) -> Verdict:
    """A product of essentially Speh representations is irreducible iff all pairs are."""
    if not ps:
        raise ValueError("empty product")
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            v = speh_reducible_thm72(ps[i], ps[j])
            if v.status is Status.REDUCIBLE:
                return Verdict(Status.REDUCIBLE, "product", "reducible-pair",
                               {"pair": [i + 1, j + 1], "clause": v.clause})
    return Verdict(Status.IRREDUCIBLE, "product", "pairwise-irreducible", {"factors": len(ps)})


def shrink(p: SpehParams) -> SpehParams:
    """``(A, B, C-1, D-1)``: drop the top segment."""
    return SpehParams(p.A, p.B, p.C - 1, p.D - 1, p.line)


def closure_hypotheses(p1: SpehParams, p2: SpehParams) -> bool:
    """Hypotheses under which shrinking ``p1`` keeps the product irreducible.

    Also requires ``p1`` to have at least two segments so the shrunken
    quadruple exists.
    """
    if p1.C <= p1.A:
        return False
    if speh_reducible_thm72(p1, p2).status is not Status.IRREDUCIBLE:
        return False
    s1, s2 = p1.C + p1.D, p2.C + p2.D
    if s2 > s1:
        return False
    if s2 == s1 and not (1 <= p1.D - p1.B <= p2.D - p2.B):
        return False
    return True


# --- Moeglin-Waldspurger parameters ----------------------------------------

class MWParams(NamedTuple):
    """``J(delta, a, b)`` with ``delta`` of width ``2t+1``, all stored doubled."""

    t2: int
    a2: int
    b2: int
    line: str = DEFAULT_LINE

    def validate(self) -> "MWParams":
        if self.t2 < 0:
            raise ValueError("t must be nonnegative")
        if self.b2 < self.a2 or (self.b2 - self.a2) % 2:
            raise ValueError("b - a must be a nonnegative integer")
        check_line(self.line)
        return self

    @classmethod
    def from_speh(cls, p: SpehParams) -> "MWParams":
        return cls(p.B - p.A, p.A + p.B, p.C + p.D, p.line)


def _doubled_quad(j: MWParams) -> tuple[int, int, int, int]:
    return (j.a2 - j.t2, j.a2 + j.t2, j.b2 - j.t2, j.b2 + j.t2)


def mw_to_speh(j: MWParams, shift2: int = 0) -> SpehParams | None:
    """Quadruple ``(a-t, a+t, b-t, b+t)``, moved by ``shift2/2``; None if not integral."""
    j.validate()
    q = [x + shift2 for x in _doubled_quad(j)]
    if any(x % 2 for x in q):
        return None
    return SpehParams(*(x // 2 for x in q), j.line)


def mw_pair_to_speh(j1: MWParams, j2: MWParams) -> tuple[SpehParams, SpehParams] | None:
    """Both quadruples on a common integer lattice, or None if they share none."""
    j1.validate()
    j2.validate()
    if j1.line != j2.line:
        return None
    r1 = (j1.a2 - j1.t2) % 2
    r2 = (j2.a2 - j2.t2) % 2
    if r1 != r2:
        return None
    return mw_to_speh(j1, r1), mw_to_speh(j2, r1)


def _mw_cond3(j: MWParams, k: MWParams) -> bool:
    dt = abs(j.t2 - k.t2)
    return j.b2 > k.b2 + dt and j.a2 > k.a2 + dt and j.a2 - k.b2 <= 2 + j.t2 + k.t2


def mw_linked(j1: MWParams, j2: MWParams) -> bool:
    j1.validate()
    j2.validate()
    if j1.line != j2.line:
        return False
    if ((j1.a2 - j1.t2) - (j2.a2 - j2.t2)) % 2:
        return False
    return _mw_cond3(j1, j2) or _mw_cond3(j2, j1)


def mw_verdict(j1: MWParams, j2: MWParams) -> Verdict:
    if mw_linked(j1, j2):
        return Verdict(Status.REDUCIBLE, "mw", "linked")
    return Verdict(Status.IRREDUCIBLE, "mw", "not-linked")
