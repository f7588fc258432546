import json

import pytest

from rimhook import codec, oscillating, paths, tableaux
from rimhook.matchings import enumerate_matchings, is_noncrossing
from rimhook.oscillating import OscillatingTableau
from rimhook.tableaux import HookPermutation, HookTableau


def through_json(obj):
    return json.loads(json.dumps(obj))


def test_partition():
    assert codec.partition_to_json((5, 4, 2, 2)) == [5, 4, 2, 2]
    assert codec.partition_from_json([]) == ()
    with pytest.raises(ValueError):
        codec.partition_from_json([1, 3])
    with pytest.raises(ValueError):
        codec.partition_from_json("5")


def test_tableau_schema():
    T = tableaux.insertion_tableau(HookPermutation(2, (HookTableau(2, 1, 1), HookTableau(2, 2, 2))))
    doc = codec.tableau_to_json(T)
    assert doc == {"m": 2, "shape": [2, 2], "hooks": [
        {"content": 1, "cells": [[2, 1], [1, 1]]}, {"content": 2, "cells": [[2, 2], [1, 2]]}]}
    assert codec.tableau_from_json(through_json(doc)) == T


def test_tableau_rejects_bad_shape_or_filling():
    with pytest.raises(ValueError):
        codec.tableau_from_json({"m": 2, "shape": [3], "hooks": [{"content": 1, "cells": [[1, 1], [1, 2]]}]})
    with pytest.raises(ValueError):
        codec.tableau_from_json({"m": 2, "hooks": [
            {"content": 2, "cells": [[2, 1], [1, 1]]}, {"content": 1, "cells": [[1, 2], [1, 3]]}]})


def test_matching_schema():
    doc = {"n": 4, "m": 2, "arcs": [[1, 5, 2], [2, 4, 1], [3, 7, 2], [6, 8, 1]]}
    M = codec.matching_from_json(doc)
    assert codec.matching_to_json(M) == doc


def test_hookperm_and_walk_and_packing():
    hp = {"m": 2, "hooks": [{"content": 6, "arm": 2}, {"content": 1, "arm": 1}]}
    assert codec.hookperm_to_json(codec.hookperm_from_json(hp)) == hp
    assert codec.guywalk_to_json(codec.guywalk_from_json("RUDL")) == "RUDL"
    with pytest.raises(ValueError):
        codec.guywalk_from_json(["R", "L"])
    pk = {"D": [0, 1, 2, 3, 2, 1, 2, 1, 0], "E": [0, 0, 0, 0, 1, 0, 0, 1, 0]}
    assert codec.packing_to_json(codec.packing_from_json(pk)) == pk


def test_convert_example():
    assert codec.convert_record({"n": 1, "m": 2, "arcs": [[1, 2, 1]]}, "matching", "guywalk") == "RL"
    with pytest.raises(KeyError):
        codec.convert_record("RL", "guywalk", "packing")


def samples(fmt):
    if fmt == "matching":
        return [codec.matching_to_json(M) for M in enumerate_matchings(3, 2)]
    if fmt == "oscillating":
        return [codec.oscillating_to_json(o) for o in oscillating.enumerate_oscillating(2, 3)]
    if fmt == "packing":
        return [codec.packing_to_json(p) for p in paths.packings(3)]
    if fmt == "guywalk":
        return [w.steps for w in paths.guy_walks(3)]
    if fmt == "hookperm":
        return [codec.hookperm_to_json(h) for h in tableaux.hook_permutations(3, 2)]
    if fmt == "pair":
        return [codec.pair_to_json(tableaux.schensted(h)) for h in tableaux.hook_permutations(3, 2)]
    raise AssertionError(fmt)


def in_domain(obj, src, dst):
    if (src, dst) == ("matching", "guywalk"):
        return is_noncrossing(codec.matching_from_json(obj))
    if (src, dst) == ("oscillating", "packing"):
        return paths.in_two_column_set(codec.oscillating_from_json(obj))
    return True


@pytest.mark.parametrize("src, dst", sorted(codec.CONVERSIONS))
def test_convert_round_trips(src, dst):
    checked = 0
    for obj in samples(src):
        if not in_domain(obj, src, dst):
            with pytest.raises(ValueError):
                codec.convert_record(obj, src, dst)
            continue
        there = through_json(codec.convert_record(obj, src, dst))
        back = through_json(codec.convert_record(there, dst, src))
        assert back == obj
        checked += 1
    assert checked > 0


def test_record_cells():
    assert codec.record_cells({"n": 3, "m": 2, "arcs": []}, "matching") == 12
    assert codec.record_cells({"m": 2, "shapes": [[], [2, 2], []]}, "oscillating") == 4
    assert codec.record_cells("RLUD", "guywalk") == 8
