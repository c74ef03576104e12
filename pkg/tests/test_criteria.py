import itertools
from functools import lru_cache

import pytest

from multiseg.core import Multisegment, SpehParams, contragredient, speh_multisegment
from multiseg.criteria import (
    MWParams,
    Status,
    badulescu_check,
    blm_check,
    certificate_verdict,
    closure_hypotheses,
    contact_speh,
    is_contact,
    is_crossed,
    mw_linked,
    mw_pair_to_speh,
    mw_to_speh,
    mw_verdict,
    product_irreducible,
    rc_check,
    shrink,
    speh_reducible_thm71,
    speh_reducible_thm72,
    strong_less,
)
from multiseg.involution import mwa_left
from multiseg.verify import speh_grid

from test_order import oracle_below

P = Multisegment.from_pairs
S = SpehParams
R, I, U = Status.REDUCIBLE, Status.IRREDUCIBLE, Status.UNKNOWN


def sp(*q):
    return speh_multisegment(S(*q))


def test_contact_examples():
    assert is_contact(P([(0, 1)]), P([(2, 3)]))
    assert not is_contact(P([(0, 1)]), P([(1, 2)]))
    assert not is_contact(P([(0, 1)]), P([(3, 4)]))


def test_crossed_examples():
    assert is_crossed(sp(0, 1, 2, 3), sp(1, 2, 3, 4))
    # no segment of [0,3]+[1,4] is juxtaposed to one of the dual [1,2]+[2,3]
    assert not is_crossed(sp(0, 3, 1, 4), sp(1, 2, 2, 3))
    # a crossed pair with contained support: [0,1]+[1,2]+[2,3] and [0,0]+[1,1]
    assert is_crossed(sp(0, 1, 2, 3), sp(0, 0, 1, 1))
    assert speh_reducible_thm72(S(0, 1, 2, 3), S(0, 0, 1, 1)).status is I
    assert not is_crossed(P([(0, 1)]), P([(5, 6)]))


def test_contact_speh_examples():
    assert contact_speh(S(0, 1, 2, 3), S(1, 2, 3, 4))
    assert not contact_speh(S(0, 1, 2, 3), S(5, 6, 7, 8))
    assert contact_speh(S(0, 0, 0, 0), S(1, 1, 1, 1))


def test_rc_examples():
    v = rc_check(sp(0, 1, 2, 3), sp(1, 2, 3, 4))
    assert v.status is R and v.clause == "dual-not-additive"
    assert [1, 4] in v.witness["only_in_dual_of_sum"]
    assert rc_check(sp(0, 3, 1, 4), sp(1, 2, 2, 3)).status is U
    assert rc_check(P([(0, 0)]), P([(5, 5)])).status is U


def test_badulescu_examples():
    assert badulescu_check(sp(0, 3, 1, 4), sp(1, 2, 2, 3)).status is I
    v = badulescu_check(sp(0, 1, 2, 3), sp(1, 2, 3, 4))
    assert (v.status, v.clause) == (R, "via-rc")
    assert badulescu_check(sp(0, 1, 2, 3), sp(0, 1, 2, 3)).status is I


def test_badulescu_budget_gives_unknown():
    v = badulescu_check(sp(0, 3, 1, 4), sp(1, 2, 2, 3), limit=2)
    assert (v.status, v.clause) == (U, "budget")


def test_badulescu_linked_not_crossed_is_undecided():
    # [0,1] x L([1,1]+[2,2]): the scan finds c = [0,1]+[1,2] with c^t < (a+b)^t
    a, b = sp(0, 1, 0, 1), sp(1, 1, 2, 2)
    v = badulescu_check(a, b)
    assert (v.status, v.clause) == (U, "violating-element")
    assert v.witness["c"] == "[0,1]+[1,2]"
    assert speh_reducible_thm72(S(0, 1, 0, 1), S(1, 1, 2, 2)).status is I
    assert blm_check(a, b).status is I


def naive_badulescu(a, b):
    """Full downset scan: Irreducible if no c < a+b has c^t < (a+b)^t."""
    total = a + b
    dual_total = mwa_left(total)
    below_dual = oracle_below(dual_total)
    for c in oracle_below(total):
        if mwa_left(c) in below_dual:
            return U
    return I


@lru_cache(maxsize=None)
def _grid(n):
    return speh_grid(n)


def test_badulescu_matches_naive_oracle():
    grid = _grid(4)
    for p1, p2 in itertools.product(grid, repeat=2):
        a, b = speh_multisegment(p1), speh_multisegment(p2)
        fast = badulescu_check(a, b)
        if fast.status is R:
            continue
        assert fast.status is naive_badulescu(a, b), (p1, p2)


def test_badulescu_general_multisegments_match_oracle():
    segs = [(b, e) for b in range(4) for e in range(b, 4)]
    for x, y in itertools.product(segs, itertools.combinations_with_replacement(segs, 2)):
        a, b = P([x]), P(y)
        fast = badulescu_check(a, b)
        if fast.status is not R:
            assert fast.status is naive_badulescu(a, b), (a, b)


def test_strong_less():
    assert strong_less(S(0, 1, 2, 3), S(1, 2, 3, 4))
    assert not strong_less(S(0, 1, 2, 3), S(0, 1, 2, 3))
    assert not strong_less(S(0, 1, 2, 3), S(1, 2, 2, 3))


@pytest.mark.parametrize(
    "q1, q2, status, clause",
    [
        ((0, 1, 2, 3), (1, 2, 3, 4), R, "strong-dominance-12"),
        ((1, 2, 3, 4), (0, 1, 2, 3), R, "strong-dominance-21"),
        ((0, 3, 1, 4), (1, 2, 2, 3), I, "no-strong-dominance"),
        ((0, 1, 2, 3), (5, 6, 7, 8), I, "union-not-segment"),
        ((0, 1, 2, 3), (4, 5, 6, 7), R, "strong-dominance-12"),
    ],
)
def test_thm72(q1, q2, status, clause):
    v = speh_reducible_thm72(S(*q1), S(*q2))
    assert (v.status, v.clause) == (status, clause)


@pytest.mark.parametrize(
    "q1, q2, status, clause",
    [
        ((0, 1, 2, 3), (1, 2, 3, 4), R, "linked-and-crossed"),
        ((0, 3, 1, 4), (1, 2, 2, 3), I, "supports-not-linked"),
        ((0, 1, 2, 3), (0, 1, 2, 3), I, "supports-not-linked"),
        ((0, 1, 0, 1), (1, 1, 2, 2), I, "not-crossed"),
    ],
)
def test_thm71(q1, q2, status, clause):
    v = speh_reducible_thm71(S(*q1), S(*q2))
    assert (v.status, v.clause) == (status, clause)


def test_different_lines():
    p1, p2 = S(0, 1, 2, 3, "a"), S(1, 2, 3, 4, "b")
    assert speh_reducible_thm72(p1, p2).clause == "different-lines"
    assert speh_reducible_thm71(p1, p2).clause == "different-lines"
    assert speh_reducible_thm72(p1, p2).status is I


def test_invalid_quadruple_rejected():
    with pytest.raises(ValueError):
        speh_reducible_thm72(S(0, 1, 2, 4), S(0, 1, 2, 3))


def test_product_examples():
    assert product_irreducible([S(0, 1, 2, 3)]).status is I
    v = product_irreducible([S(0, 1, 2, 3), S(1, 2, 3, 4), S(9, 10, 11, 12)])
    assert v.status is R and v.witness["pair"] == [1, 2]
    assert product_irreducible([S(0, 1, 2, 3)] * 3).status is I
    with pytest.raises(ValueError):
        product_irreducible([])


def test_grid_symmetry_and_contragredient():
    grid = _grid(5)
    for p1, p2 in itertools.product(grid, repeat=2):
        v = speh_reducible_thm72(p1, p2).status
        assert v is speh_reducible_thm72(p2, p1).status
        assert v is speh_reducible_thm71(p1, p2).status
        a, b = speh_multisegment(p1), speh_multisegment(p2)
        assert is_crossed(a, b) == is_crossed(contragredient(a), contragredient(b))
        assert rc_check(a, b).status is rc_check(b, a).status


def test_certificates_never_contradict_quadruple_criterion():
    grid = _grid(4)
    for p1, p2 in itertools.product(grid, repeat=2):
        expected = speh_reducible_thm72(p1, p2).status
        v = certificate_verdict(speh_multisegment(p1), speh_multisegment(p2))
        assert v.status in (expected, U)


def test_closure_shrink():
    p1, p2 = S(0, 3, 1, 4), S(1, 2, 2, 3)
    assert shrink(p1) == S(0, 3, 0, 3)
    assert closure_hypotheses(p1, p2)
    assert not closure_hypotheses(S(0, 3, 0, 3), p2)  # single segment, nothing to drop


# --- MW parameters ------------------------------------------------------------

def test_mw_to_speh_examples():
    assert mw_to_speh(MWParams(1, 1, 5)) == S(0, 1, 2, 3)
    assert mw_to_speh(MWParams(0, 0, 4)) == S(0, 0, 2, 2)
    assert mw_to_speh(MWParams(2, 1, 3)) is None


def test_mw_from_speh_round_trip():
    for p in _grid(5):
        assert mw_to_speh(MWParams.from_speh(p)) == p


def test_mw_linked_examples():
    j1, j2 = MWParams(1, 1, 5), MWParams(1, 3, 7)
    assert mw_linked(j1, j2)
    assert mw_verdict(j1, j2).status is R
    assert mw_pair_to_speh(j1, j2) == (S(0, 1, 2, 3), S(1, 2, 3, 4))
    assert not mw_linked(MWParams(1, 1, 5), MWParams(0, 2, 6))
    assert not mw_linked(MWParams(1, 1, 5, "a"), MWParams(1, 3, 7, "b"))


def test_mw_half_integral_pair_is_aligned():
    # t = 0 and a, b half-integers: both land on the integers after one common shift
    j1, j2 = MWParams(0, 1, 3), MWParams(0, 3, 5)
    p1, p2 = mw_pair_to_speh(j1, j2)
    assert (p1, p2) == (S(1, 1, 2, 2), S(2, 2, 3, 3))
    assert mw_linked(j1, j2) == (speh_reducible_thm72(p1, p2).status is R)


def test_mw_validation():
    with pytest.raises(ValueError):
        MWParams(-1, 0, 0).validate()
    with pytest.raises(ValueError):
        MWParams(0, 0, 1).validate()


def test_linked_and_crossed_breaks_additivity():
    from multiseg.criteria import linked_supports

    for p1, p2 in itertools.product(_grid(5), repeat=2):
        a, b = speh_multisegment(p1), speh_multisegment(p2)
        if linked_supports(p1, p2) and is_crossed(a, b):
            assert rc_check(a, b).status is R, (p1, p2)
