"""JSON encodings for every object family, plus the record-level conversions."""
from __future__ import annotations

from typing import Any, Callable

from rimhook import oscillating, paths, shapes, tableaux
from rimhook.matchings import ColoredMatching
from rimhook.oscillating import OscillatingTableau
from rimhook.paths import DyckPathPacking, GuyWalk
from rimhook.shapes import RimHook
from rimhook.tableaux import HookPermutation, HookTableau, RimHookTableau


def partition_to_json(p) -> list[int]:
    return list(p)


def partition_from_json(obj) -> shapes.Partition:
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise ValueError("a partition is a JSON array of integers")
    return shapes.partition(obj)


def hook_to_json(h: RimHook) -> dict:
    return {"cells": [list(c) for c in h.cells]}


def hook_from_json(obj) -> RimHook:
    return RimHook.of(tuple(c) for c in obj["cells"])


def tableau_to_json(T: RimHookTableau) -> dict:
    out: dict[str, Any] = {"m": T.m, "shape": list(T.shape)}
    if T.inner:
        out["inner"] = list(T.inner)
    out["hooks"] = [{"content": c, "cells": [list(x) for x in h.cells]} for c, h in T.hooks]
    return out


def tableau_from_json(obj) -> RimHookTableau:
    T = RimHookTableau.build(
        int(obj["m"]),
        {int(h["content"]): hook_from_json(h) for h in obj["hooks"]},
        tuple(obj.get("inner", ())),
    )
    problem = tableaux.check(T)
    if problem:
        raise ValueError(f"invalid rim hook tableau: {problem}")
    if "shape" in obj and tuple(obj["shape"]) != T.shape:
        raise ValueError(f"declared shape {obj['shape']} does not match cells {list(T.shape)}")
    return T


def hookperm_to_json(hp: HookPermutation) -> dict:
    return {"m": hp.m, "hooks": [{"content": h.content, "arm": h.arm} for h in hp.hooks]}


def hookperm_from_json(obj) -> HookPermutation:
    m = int(obj["m"])
    return HookPermutation(m, tuple(HookTableau(m, int(h["arm"]), int(h["content"])) for h in obj["hooks"]))


def pair_to_json(pq: tuple[RimHookTableau, RimHookTableau]) -> dict:
    return {"P": tableau_to_json(pq[0]), "Q": tableau_to_json(pq[1])}


def pair_from_json(obj) -> tuple[RimHookTableau, RimHookTableau]:
    return tableau_from_json(obj["P"]), tableau_from_json(obj["Q"])


def matching_to_json(M: ColoredMatching) -> dict:
    return {"n": M.n, "m": M.m, "arcs": [list(a) for a in M.arcs]}


def matching_from_json(obj) -> ColoredMatching:
    arcs = tuple(tuple(int(x) for x in a) for a in obj["arcs"])
    n = int(obj.get("n", len(arcs)))
    return ColoredMatching(n, int(obj["m"]), arcs)


def oscillating_to_json(o: OscillatingTableau) -> dict:
    return {"m": o.m, "shapes": [list(p) for p in o.shapes]}


def oscillating_from_json(obj) -> OscillatingTableau:
    o = OscillatingTableau.of(int(obj["m"]), obj["shapes"])
    problem = oscillating.check(o)
    if problem:
        raise ValueError(f"invalid oscillating tableau: {problem}")
    return o


def packing_to_json(pk: DyckPathPacking) -> dict:
    return {"D": list(pk.D.heights), "E": list(pk.E.heights)}


def packing_from_json(obj) -> DyckPathPacking:
    return DyckPathPacking.of(obj["D"], obj["E"])


def guywalk_to_json(w: GuyWalk) -> str:
    return w.steps


def guywalk_from_json(obj) -> GuyWalk:
    if not isinstance(obj, str):
        raise ValueError("a Guy's walk is a JSON string over RLUD")
    return GuyWalk(obj)


FORMATS: dict[str, tuple[Callable, Callable]] = {
    "matching": (matching_to_json, matching_from_json),
    "oscillating": (oscillating_to_json, oscillating_from_json),
    "packing": (packing_to_json, packing_from_json),
    "guywalk": (guywalk_to_json, guywalk_from_json),
    "pair": (pair_to_json, pair_from_json),
    "hookperm": (hookperm_to_json, hookperm_from_json),
}

CONVERSIONS: dict[tuple[str, str], Callable] = {
    ("oscillating", "matching"): oscillating.to_matching,
    ("matching", "oscillating"): oscillating.from_matching,
    ("oscillating", "packing"): paths.to_packing,
    ("packing", "oscillating"): paths.from_packing,
    ("matching", "guywalk"): paths.to_guy_walk,
    ("guywalk", "matching"): paths.from_guy_walk,
    ("hookperm", "pair"): tableaux.schensted,
    ("pair", "hookperm"): lambda pq: tableaux.schensted_inverse(*pq),
}


def convert_record(obj: Any, src: str, dst: str) -> Any:
    """Decode one JSON value as ``src``, map it, and encode it as ``dst``."""
    if (src, dst) not in CONVERSIONS:
        raise KeyError(f"no conversion from {src} to {dst}")
    decoded = FORMATS[src][1](obj)
    return FORMATS[dst][0](CONVERSIONS[src, dst](decoded))


def record_cells(obj: Any, fmt: str) -> int:
    """Largest shape size a record will touch, for the safety cap."""
    if fmt == "matching":
        return 2 * int(obj.get("n", len(obj["arcs"]))) * int(obj["m"])
    if fmt == "oscillating":
        return max((sum(p) for p in obj["shapes"]), default=0)
    if fmt == "packing":
        return 2 * len(obj["D"])
    if fmt == "guywalk":
        return 2 * len(obj)
    if fmt == "pair":
        return sum(obj["P"]["shape"])
    if fmt == "hookperm":
        return int(obj["m"]) * len(obj["hooks"])
    return 0
