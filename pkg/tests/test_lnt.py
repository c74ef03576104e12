import itertools
import random

import pytest

from multiseg.core import Multisegment, SpehParams, speh_multisegment
from multiseg.criteria import Status, speh_reducible_thm72
from multiseg.lnt import (
    Partition,
    RaySet,
    hull,
    i_set,
    i_set_speh,
    ladder_multisegment,
    lnt_reducible,
    lnt_speh,
    rayset_diff,
)
from multiseg.verify import speh_grid

P = Multisegment.from_pairs
R, I = Status.REDUCIBLE, Status.IRREDUCIBLE


def test_partition_validation():
    assert Partition.parse("4,4") == (4, 4)
    for bad in ([], [0], [1, 2]):
        with pytest.raises(ValueError):
            Partition(bad)


@pytest.mark.parametrize(
    "alpha, x, pairs",
    [((2, 2, 2), 2, [(0, 1), (1, 2), (2, 3)]), ((3,), 0, [(0, 2)]), ((3, 1), 1, [(0, 0), (1, 3)])],
)
def test_ladder(alpha, x, pairs):
    assert ladder_multisegment(Partition(alpha), x) == P(pairs)


def test_ladder_of_constant_partition_is_speh():
    for p in speh_grid(5):
        alpha = Partition.constant(p.d, p.n)
        assert ladder_multisegment(alpha, p.C) == speh_multisegment(p)


@pytest.mark.parametrize(
    "alpha, x, ray, extra",
    [((2, 2, 2), 2, -1, {2, 3, 4}), ((1,), 0, -1, {1}), ((2, 1), 1, -1, {1, 3})],
)
def test_i_set(alpha, x, ray, extra):
    assert i_set(Partition(alpha), x) == RaySet(ray, frozenset(extra))


@pytest.mark.parametrize(
    "quad, ray, extra",
    [((0, 1, 2, 3), -1, {2, 3, 4}), ((0, 0, 0, 0), -1, {1}), ((0, 2, 1, 3), -1, {3, 4})],
)
def test_i_set_speh(quad, ray, extra):
    p = SpehParams(*quad)
    assert i_set_speh(p) == RaySet(ray, frozenset(extra))
    assert i_set_speh(p) == i_set(Partition.constant(p.d, p.n), p.C)


def test_rayset_normalizes():
    assert RaySet.make(-1, {0, 1, 3}) == RaySet(1, frozenset({3}))
    assert 0 in RaySet.make(-1, {0}) and 5 not in RaySet.make(-1, {0})


def test_rayset_diff_examples():
    s1 = RaySet.make(-1, {2, 3, 4})
    s2 = RaySet.make(0, {3, 4, 5})
    assert rayset_diff(s1, s2) == {2}
    assert rayset_diff(s2, s1) == {0, 5}
    assert hull({0, 5}) == (0, 5)
    assert hull(set()) is None


def test_rayset_diff_against_window():
    rng = random.Random(5)
    for _ in range(500):
        s1 = RaySet.make(rng.randint(-4, 4), rng.sample(range(-3, 10), 4))
        s2 = RaySet.make(rng.randint(-4, 4), rng.sample(range(-3, 10), 4))
        brute = {v for v in range(-30, 30) if v in s1 and v not in s2}
        assert rayset_diff(s1, s2) == brute


@pytest.mark.parametrize("form", ["hull", "witness"])
def test_lnt_examples(form):
    assert lnt_reducible(Partition((2, 2, 2)), 2, Partition((2, 2, 2)), 3, form=form).status is R
    assert lnt_reducible(Partition((2, 2, 2)), 2, Partition((2, 2, 2)), 2, form=form).status is I
    assert lnt_reducible(Partition((4, 4)), 1, Partition((2, 2)), 2, form=form).status is I


def test_lnt_different_lines_and_provenance():
    v = lnt_reducible(Partition((2, 2, 2)), 2, Partition((2, 2, 2)), 3, same_line=False)
    assert (v.status, v.clause) == (I, "different-lines")
    v = lnt_reducible(Partition((3, 1)), 1, Partition((2,)), 2)
    assert v.witness["provenance"] == "LNT-only"
    assert lnt_reducible(Partition((2, 2)), 1, Partition((2,)), 2).witness["provenance"] == "speh"
    with pytest.raises(ValueError):
        lnt_reducible(Partition((1,)), 0, Partition((1,)), 0, form="other")


def test_lnt_matches_quadruple_criterion():
    grid = speh_grid(5)
    for p1, p2 in itertools.product(grid, repeat=2):
        expected = speh_reducible_thm72(p1, p2).status
        assert lnt_speh(p1, p2, "hull").status is expected
        assert lnt_speh(p1, p2, "witness").status is expected


def _partitions(max_part, max_len):
    for r in range(1, max_len + 1):
        for parts in itertools.combinations_with_replacement(range(max_part, 0, -1), r):
            yield Partition(parts)


def test_general_ladders_symmetric_and_forms_agree():
    parts = list(_partitions(3, 3))
    for a, b in itertools.product(parts, repeat=2):
        for x, y in itertools.product(range(4), repeat=2):
            h = lnt_reducible(a, x, b, y).status
            assert h is lnt_reducible(b, y, a, x).status
            assert h is lnt_reducible(a, x, b, y, form="witness").status
