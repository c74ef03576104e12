"""Exhaustive and seeded property sweeps.

Every suite is a pair of functions: one yielding cases from a config, one
checking a single case and returning a list of failure records
``{"check", "inputs", "expected", "got"}``.  :func:`run_suite` drives them,
optionally across worker processes, and returns a JSON-ready report.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .core import (
    Multisegment,
    Segment,
    SpehParams,
    a_nd,
    contragredient,
    is_linked,
    precedes,
    speh_multisegment,
    support,
)
from .criteria import (
    MWParams,
    Status,
    blm_check,
    certificate_verdict,
    closure_hypotheses,
    contact_speh,
    dashed_intersect,
    is_contact,
    is_crossed,
    linked_supports,
    mw_linked,
    mw_pair_to_speh,
    product_irreducible,
    rc_check,
    shrink,
    speh_reducible_thm71,
    speh_reducible_thm72,
    support_contains,
)
from .involution import mwa_left, mwa_right
from .lnt import Partition, i_set, i_set_speh, lnt_speh
from .order import DEFAULT_BUDGET, leq, lt, strict_downset


@dataclass
class Config:
    max_end: int = 7
    max_segments: int = 5
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    random_cases: int = 10_000
    rect_bound: int = 8
    mw_t2_max: int = 6
    mw_window: int = 16


@dataclass
class Report:
    suite: str
    cases_run: int
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _fail(check, inputs, expected, got) -> dict:
    return {"check": check, "inputs": inputs, "expected": expected, "got": got}


# --- populations -----------------------------------------------------------

def all_segments(max_end: int) -> list[tuple[int, int]]:
    return [(b, e) for b in range(max_end + 1) for e in range(b, max_end + 1)]


def small_multisegments(max_end: int, max_segments: int) -> Iterable[Multisegment]:
    """Every single-line multisegment with at most ``max_segments`` segments in ``[0, max_end]``."""
    segs = all_segments(max_end)
    for k in range(0, max_segments + 1):
        for combo in itertools.combinations_with_replacement(segs, k):
            yield Multisegment.from_pairs(combo)


def random_multisegments(count: int, seed: int, max_end: int = 12,
                         min_segments: int = 5, max_segments: int = 10) -> Iterable[Multisegment]:
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(min_segments, max_segments)
        pairs = []
        for _ in range(k):
            b = rng.randint(0, max_end)
            pairs.append((b, rng.randint(b, max_end)))
        yield Multisegment.from_pairs(pairs)


def speh_grid(max_end: int) -> list[SpehParams]:
    """All quadruples with ``0 <= A <= B, C <= D <= max_end``."""
    out = []
    for A in range(max_end + 1):
        for B in range(A, max_end + 1):
            for C in range(A, max_end + 1):
                D = B + C - A
                if D <= max_end:
                    out.append(SpehParams(A, B, C, D))
    return out


def _q(p: SpehParams) -> list[int]:
    return list(p.quad())


def _population(cfg: Config):
    yield from (("grid", m.pairs()) for m in small_multisegments(cfg.max_end, cfg.max_segments))
    yield from (("random", m.pairs()) for m in random_multisegments(cfg.random_cases, cfg.seed))


# --- involution / length bounds --------------------------------------------

def _check_involution(case, cfg):
    _, pairs = case
    a = Multisegment.from_pairs(pairs)
    fails = []
    t = mwa_left(a, check=True)
    if mwa_left(t) != a:
        fails.append(_fail("involutive", str(a), str(a), str(mwa_left(t))))
    r = mwa_right(a)
    if r != t:
        fails.append(_fail("left-equals-right", str(a), str(t), str(r)))
    ct = mwa_left(contragredient(a))
    if ct != contragredient(t):
        fails.append(_fail("contragredient-commutes", str(a), str(contragredient(t)), str(ct)))
    if t.cardinality() != a.cardinality():
        fails.append(_fail("cardinality", str(a), a.cardinality(), t.cardinality()))
    return fails


def _check_length_bounds(case, cfg):
    _, pairs = case
    a = Multisegment.from_pairs(pairs)
    if not a:
        return []
    t = mwa_left(a)
    fails = []
    ends = [s.e for s in a]
    begins = [s.b for s in a]
    m_end = max(ends) - min(ends) + 1
    m_begin = max(begins) - min(begins) + 1
    if t.max_length() > m_end:
        fails.append(_fail("ends-bound", str(a), f"<= {m_end}", t.max_length()))
    if t.max_length() > m_begin:
        fails.append(_fail("beginnings-bound", str(a), f"<= {m_begin}", t.max_length()))
    return fails


def _rect_cases(cfg):
    return [(n, d) for n in range(1, cfg.rect_bound + 1) for d in range(1, cfg.rect_bound + 1)]


def _check_rect(case, cfg):
    n, d = case
    got = mwa_left(a_nd(n, d))
    want = a_nd(d, n)
    return [] if got == want else [_fail("rectangle", [n, d], str(want), str(got))]


# --- core invariants -------------------------------------------------------

def _core_cases(cfg):
    rng = random.Random(cfg.seed)
    for _ in range(min(cfg.random_cases, 2000)):
        k = rng.randint(1, 6)
        pairs = []
        for _ in range(k):
            b = rng.randint(-5, 8)
            pairs.append((b, b + rng.randint(0, 4)))
        yield (tuple(pairs), rng.randint(-9, 9), rng.random())


def _check_core(case, cfg):
    pairs, k, u = case
    fails = []
    rng = random.Random(u)
    shuffled = list(pairs)
    rng.shuffle(shuffled)
    a = Multisegment.from_pairs(pairs)
    if Multisegment.from_pairs(shuffled) != a:
        fails.append(_fail("canonical-order", list(pairs), str(a), str(Multisegment.from_pairs(shuffled))))
    if contragredient(contragredient(a)) != a:
        fails.append(_fail("contragredient-involution", str(a), str(a), str(contragredient(contragredient(a)))))
    segs = list(a)
    for s1, s2 in itertools.product(segs, repeat=2):
        t1, t2 = s1.shift(k), s2.shift(k)
        if is_linked(s1, s2) != is_linked(t1, t2) or precedes(s1, s2) != precedes(t1, t2):
            fails.append(_fail("shift-invariance", [str(s1), str(s2), k], "unchanged", "changed"))
        c1, c2 = contragredient(Multisegment([s1])).items[0], contragredient(Multisegment([s2])).items[0]
        if is_linked(s1, s2) != is_linked(c1, c2):
            fails.append(_fail("contragredient-linking", [str(s1), str(s2)], is_linked(s1, s2), is_linked(c1, c2)))
    shape = sorted(support(a).values())
    if sorted(support(a.shift(k)).values()) != shape:
        fails.append(_fail("shift-support", [str(a), k], shape, sorted(support(a.shift(k)).values())))
    if mwa_left(a.shift(k)) != mwa_left(a).shift(k):
        fails.append(_fail("shift-dual", [str(a), k], str(mwa_left(a).shift(k)), str(mwa_left(a.shift(k)))))
    return fails


# --- order -----------------------------------------------------------------

def _order_family(cfg):
    # small closed family: everything with support inside [0,3], up to 3 segments
    return [m for m in small_multisegments(min(cfg.max_end, 3), min(cfg.max_segments, 3)) if m]


def _order_cases(cfg):
    return [m.pairs() for m in _order_family(cfg)]


def _check_order(case, cfg):
    b = Multisegment.from_pairs(case)
    fails = []
    down = strict_downset(b, cfg.budget)
    for c in down:
        if support(c) != support(b):
            fails.append(_fail("support-preserved", [str(c), str(b)], "equal", "differs"))
        if c.max_length() < b.max_length():
            fails.append(_fail("max-length-monotone", [str(c), str(b)], f">= {b.max_length()}", c.max_length()))
        if lt(b, c, cfg.budget):
            fails.append(_fail("antisymmetric", [str(c), str(b)], False, True))
        for d in strict_downset(c, cfg.budget):
            if d not in down:
                fails.append(_fail("transitive", [str(d), str(c), str(b)], True, False))
        if not leq(c, b, cfg.budget):
            fails.append(_fail("leq-agrees-with-downset", [str(c), str(b)], True, False))
    if not leq(b, b):
        fails.append(_fail("reflexive", str(b), True, False))
    return fails


# --- Speh pair suites ------------------------------------------------------

def _speh_pairs(cfg):
    grid = speh_grid(cfg.max_end)
    return [(p.quad(), q.quad()) for p in grid for q in grid]


def _pair(case):
    return SpehParams(*case[0]), SpehParams(*case[1])


def _check_speh_cross(case, cfg):
    p1, p2 = _pair(case)
    inputs = [_q(p1), _q(p2)]
    fails = []
    v72 = speh_reducible_thm72(p1, p2)
    v71 = speh_reducible_thm71(p1, p2)
    if v72.status != v71.status:
        fails.append(_fail("thm72-equals-thm71", inputs, v72.status.value, v71.status.value))
    cert = certificate_verdict(speh_multisegment(p1), speh_multisegment(p2), cfg.budget)
    if not cert.decided:
        fails.append(_fail("certificate-decisive", inputs, v72.status.value,
                           f"Unknown ({cert.clause})"))
    elif cert.status != v72.status:
        fails.append(_fail("certificate-agrees", inputs, v72.status.value, cert.status.value))
    return fails


def _check_speh_blm_cert(case, cfg):
    # certificates with the non-crossing test added in front of the downset scan
    p1, p2 = _pair(case)
    a, b = speh_multisegment(p1), speh_multisegment(p2)
    v72 = speh_reducible_thm72(p1, p2)
    v = rc_check(a, b)
    if not v.decided:
        v = blm_check(a, b)
    if not v.decided:
        v = certificate_verdict(a, b, cfg.budget)
    if v.status != v72.status:
        return [_fail("certificates-with-blm", [_q(p1), _q(p2)], v72.status.value, f"{v.status.value} ({v.criterion})")]
    return []


def _mw_params(cfg) -> list[MWParams]:
    out = []
    for t2 in range(cfg.mw_t2_max + 1):
        for a2 in range(cfg.mw_window):
            for b2 in range(a2, cfg.mw_window, 2):
                out.append(MWParams(t2, a2, b2))
    return out


def _mw_cases(cfg):
    ps = _mw_params(cfg)
    # chunk by first argument to keep the case list small
    return [(tuple(j), tuple(tuple(k) for k in ps)) for j in ps]


def _check_mw(case, cfg):
    j1 = MWParams(*case[0])
    fails = []
    for k in case[1]:
        j2 = MWParams(*k)
        linked = mw_linked(j1, j2)
        quads = mw_pair_to_speh(j1, j2)
        if quads is None:
            if linked:
                fails.append(_fail("mw-cond2-fails", [list(j1[:3]), list(j2[:3])], False, True))
            continue
        red = speh_reducible_thm72(*quads).status is Status.REDUCIBLE
        if red != linked:
            fails.append(_fail("mw-equals-thm72", [list(j1[:3]), list(j2[:3])], red, linked))
    return fails


def _check_lnt(case, cfg):
    p1, p2 = _pair(case)
    inputs = [_q(p1), _q(p2)]
    fails = []
    v72 = speh_reducible_thm72(p1, p2).status
    h = lnt_speh(p1, p2, "hull").status
    w = lnt_speh(p1, p2, "witness").status
    if h != v72:
        fails.append(_fail("lnt-equals-thm72", inputs, v72.value, h.value))
    if h != w:
        fails.append(_fail("hull-equals-witness", inputs, h.value, w.value))
    if p1 == p2 or case[0] <= case[1]:
        for p in (p1, p2):
            if i_set_speh(p) != i_set(Partition.constant(p.d, p.n), p.C):
                fails.append(_fail("i-set-speh", _q(p), str(i_set(Partition.constant(p.d, p.n), p.C)),
                                   str(i_set_speh(p))))
    return fails


_downset_duals_cache: dict = {}


def downset_duals_hold(p: SpehParams, budget: int) -> tuple[bool, str | None]:
    """Every ``c < a`` has ``c^t`` not strictly below ``a^t``; returns a witness if not."""
    key = (p.quad(), budget)
    if key not in _downset_duals_cache:
        a = speh_multisegment(p)
        at = mwa_left(a)
        bad = None
        for c in sorted(strict_downset(a, budget)):
            if lt(mwa_left(c), at, budget):
                bad = str(c)
                break
        _downset_duals_cache[key] = (bad is None, bad)
    return _downset_duals_cache[key]


def _containment_cases(cfg):
    return [c for c in _speh_pairs(cfg) if support_contains(*_pair(c))]


def _check_containment(case, cfg):
    p1, p2 = _pair(case)  # p2's support inside p1's
    inputs = [_q(p1), _q(p2)]
    a1, a2 = speh_multisegment(p1), speh_multisegment(p2)
    fails = []
    whole, parts = mwa_left(a1 + a2), mwa_left(a1) + mwa_left(a2)
    if whole != parts:
        fails.append(_fail("t-additive", inputs, str(parts), str(whole)))
    ok, witness = downset_duals_hold(p2, cfg.budget)
    if not ok:
        fails.append(_fail("downset-duals", _q(p2), "no c with c^t < a^t", witness))
    v = certificate_verdict(a1, a2, cfg.budget)
    if v.status is not Status.IRREDUCIBLE:
        fails.append(_fail("badulescu-irreducible", inputs, "Irreducible", f"{v.status.value} ({v.clause})"))
    return fails


def _check_contact(case, cfg):
    p1, p2 = _pair(case)
    inputs = [_q(p1), _q(p2)]
    fails = []
    closed = contact_speh(p1, p2)
    brute = is_contact(speh_multisegment(p1), speh_multisegment(p2))
    if closed != brute:
        fails.append(_fail("contact-closed-form", inputs, brute, closed))
    if linked_supports(p1, p2) and p1.A < p2.A and brute != dashed_intersect(p1, p2):
        fails.append(_fail("contact-dashed", inputs, brute, dashed_intersect(p1, p2)))
    return fails


def _check_blm(case, cfg):
    p1, p2 = _pair(case)
    if speh_reducible_thm72(p1, p2).status is Status.REDUCIBLE:
        if not is_crossed(speh_multisegment(p1), speh_multisegment(p2)):
            return [_fail("reducible-implies-crossed", [_q(p1), _q(p2)], True, False)]
    return []


def _closure_cases(cfg):
    cases = [("pair", c) for c in _speh_pairs(cfg) if closure_hypotheses(*_pair(c))]
    grid = speh_grid(cfg.max_end)
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random_cases):
        cases.append(("triple", tuple(rng.choice(grid).quad() for _ in range(3))))
    return cases


def _check_closure(case, cfg):
    kind, data = case
    if kind == "pair":
        p1, p2 = _pair(data)
        v = speh_reducible_thm72(shrink(p1), p2)
        if v.status is not Status.IRREDUCIBLE:
            return [_fail("shrunken-irreducible", [_q(p1), _q(p2), _q(shrink(p1))], "Irreducible", v.status.value)]
        return []
    ps = [SpehParams(*q) for q in data]
    if product_irreducible(ps).status is not Status.IRREDUCIBLE:
        return []
    ms = [speh_multisegment(p) for p in ps]
    whole = mwa_left(ms[0] + ms[1] + ms[2])
    parts = mwa_left(ms[0]) + mwa_left(ms[1]) + mwa_left(ms[2])
    if whole != parts:
        return [_fail("k-fold-additive", [_q(p) for p in ps], str(parts), str(whole))]
    return []


# --- registry and driver ---------------------------------------------------

@dataclass(frozen=True)
class Suite:
    name: str
    cases: Callable
    check: Callable
    description: str


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("core", _core_cases, _check_core, "canonical form, shift invariance, contragredient"),
        Suite("involution", _population, _check_involution,
              "dual is an involution, both algorithms agree, commutes with contragredient"),
        Suite("rectangle", _rect_cases, _check_rect, "rectangles transpose under the dual"),
        Suite("length-bounds", _population, _check_length_bounds, "dual segment lengths bounded by end/beginning spread"),
        Suite("order", _order_cases, _check_order, "linking order is a partial order preserving support"),
        Suite("speh-cross-validation", _speh_pairs, _check_speh_cross,
              "quadruple criterion = linked-and-crossed; RC + downset scan decisive and in agreement"),
        Suite("speh-certificates-blm", _speh_pairs, _check_speh_blm_cert,
              "RC, non-crossing and downset scan together reproduce the quadruple criterion"),
        Suite("mw-equivalence", _mw_cases, _check_mw, "MW linking condition = quadruple criterion"),
        Suite("lnt-equivalence", _speh_pairs, _check_lnt, "interval-set test = quadruple criterion; both forms agree"),
        Suite("containment", _containment_cases, _check_containment,
              "support containment: additivity, downset duals, downset scan irreducible"),
        Suite("contact", _speh_pairs, _check_contact, "closed-form contact and the dashed-interval form"),
        Suite("closure", _closure_cases, _check_closure, "shrinking keeps irreducibility; pairwise irreducible triples are additive"),
        Suite("blm", _speh_pairs, _check_blm, "reducible implies crossed"),
    ]
}


def _check_chunk(args):
    name, chunk, cfg = args
    check = SUITES[name].check
    out = []
    for case in chunk:
        out.extend(check(case, cfg))
    return len(chunk), out


def run_suite(name: str, cfg: Config | None = None, parallel: bool = False, workers: int | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(name)
    cfg = cfg or Config()
    suite = SUITES[name]
    start = time.perf_counter()
    cases = list(suite.cases(cfg))
    failures: list = []
    if parallel and len(cases) > 1:
        size = max(1, len(cases) // 64)
        chunks = [cases[i : i + size] for i in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for _, fails in pool.map(_check_chunk, [(name, c, cfg) for c in chunks]):
                failures.extend(fails)
    else:
        for case in cases:
            failures.extend(suite.check(case, cfg))
    return Report(
        suite=name,
        cases_run=len(cases),
        failures=failures,
        wall_time=round(time.perf_counter() - start, 3),
        config=asdict(cfg),
    )
