import pytest

from rimhook import oscillating, tableaux
from rimhook.matchings import ColoredMatching, crossing_number, enumerate_matchings, nesting_number
from rimhook.oscillating import OscillatingTableau
from rimhook.tableaux import HookPermutation, HookTableau
from rimhook.verify import DOMINO_EXAMPLE, DOMINO_EXAMPLE_ARCS

import oracles

TRIPLE_EXAMPLE = [(), (1, 1, 1), (2, 2, 2), (2, 1), (3, 3), (3,), (3, 2, 1), (1, 1, 1), ()]


def test_validate_examples():
    assert oscillating.validate(OscillatingTableau.of(2, DOMINO_EXAMPLE))
    assert oscillating.validate(OscillatingTableau.of(3, TRIPLE_EXAMPLE))
    assert not oscillating.validate(OscillatingTableau.of(2, [(), (1,), ()]))
    assert "step 1" in oscillating.check(OscillatingTableau.of(2, [(), (1,), ()]))
    assert not oscillating.validate(OscillatingTableau.of(2, [(), (2,)]))


def test_statistics_of_example():
    o = OscillatingTableau.of(2, DOMINO_EXAMPLE)
    assert (o.max_rows, o.max_columns) == (2, 3)


def test_domino_example_matching():
    o = OscillatingTableau.of(2, DOMINO_EXAMPLE)
    M = oscillating.to_matching(o)
    assert M.arcs == DOMINO_EXAMPLE_ARCS
    assert sorted(M.color_class(1)) == [(1, 5), (3, 7)]
    assert sorted(M.color_class(2)) == [(2, 4), (6, 8)]
    assert (crossing_number(M), nesting_number(M)) == (2, 1)
    assert oscillating.from_matching(M) == o


def test_single_arc_examples():
    vertical = oscillating.to_matching(OscillatingTableau.of(2, [(), (1, 1), ()]))
    horizontal = oscillating.to_matching(OscillatingTableau.of(2, [(), (2,), ()]))
    assert vertical.arcs == ((1, 2, 1),)
    assert horizontal.arcs == ((1, 2, 2),)
    assert oscillating.from_matching(vertical).shapes == ((), (1, 1), ())


def test_conjugate():
    o = OscillatingTableau.of(2, DOMINO_EXAMPLE)
    c = oscillating.conjugate(o)
    assert c.shapes == ((), (2,), (2, 2), (2, 2, 2), (2, 1, 1), (2,), (2, 2), (1, 1), ())
    assert oscillating.conjugate(c) == o
    assert (c.max_rows, c.max_columns) == (o.max_columns, o.max_rows)


def open_arcs(M, i):
    """Hook permutation of the arcs open just after vertex i, latest closer first."""
    live = sorted((a for a in M.arcs if a[0] <= i < a[1]), key=lambda a: -a[1])
    return HookPermutation(M.m, tuple(HookTableau(M.m, c, j) for j, _, c in live))


@pytest.mark.parametrize("m, n", [(1, 4), (2, 3), (3, 2)])
def test_intermediate_tableaux_are_insertion_tableaux(m, n):
    for M in enumerate_matchings(n, m):
        for i, T in enumerate(oscillating.tableau_sequence(M)):
            assert T == tableaux.insertion_tableau(open_arcs(M, i)), (M, i)


@pytest.mark.parametrize("m, n", [(1, 4), (2, 3), (3, 2)])
def test_bijection(m, n):
    tabs = list(oscillating.enumerate_oscillating(m, n))
    assert len(tabs) == len(set(tabs)) == oracles.count_perfect_matchings(n) * m ** n
    assert len(tabs) == oracles.oscillating_count(m, n)
    images = set()
    for o in tabs:
        M = oscillating.to_matching(o)
        images.add(M)
        assert oscillating.from_matching(M) == o
    assert images == set(enumerate_matchings(n, m))


@pytest.mark.parametrize("m, n", [(1, 4), (2, 3), (3, 2)])
def test_statistics_follow_shapes(m, n):
    for o in oscillating.enumerate_oscillating(m, n):
        M = oscillating.to_matching(o)
        assert nesting_number(M) == tableaux.ceil_div(o.max_rows, m)
        assert crossing_number(M) == tableaux.ceil_div(o.max_columns, m)


@pytest.mark.parametrize("m, n", [(1, 4), (2, 3)])
def test_conjugation_swaps_crossings_and_nestings(m, n):
    for M in enumerate_matchings(n, m):
        flipped = oscillating.to_matching(oscillating.conjugate(oscillating.from_matching(M)))
        assert (crossing_number(flipped), nesting_number(flipped)) == (nesting_number(M), crossing_number(M))


def test_enumeration_prefix_sharding():
    full = list(oscillating.enumerate_oscillating(2, 3))
    firsts = [(1, 1), (2,)]
    shards = [list(oscillating.enumerate_oscillating(2, 3, prefix=[p])) for p in firsts]
    assert sorted(o.shapes for s in shards for o in s) == sorted(o.shapes for o in full)


def test_two_column_pruning():
    for o in oscillating.enumerate_oscillating(2, 3, max_columns=2):
        assert o.max_columns <= 2


def test_to_matching_rejects_invalid():
    with pytest.raises(ValueError):
        oscillating.to_matching(OscillatingTableau.of(2, [(), (1,), ()]))


def test_from_matching_of_empty():
    assert oscillating.from_matching(ColoredMatching(0, 3, ())).shapes == ((),)
