"""Rim hook tableaux and the rim hook Schensted insertion.

A tableau stores one :class:`RimHook` per content.  Skew tableaux carry a
nonempty ``inner`` shape.  Insertion follows the overlapping-pair scheme:
the new hook is parked on the border of the part of ``P`` below its
content, then the larger contents are merged back one at a time by
:func:`merge_step` and :func:`combine`.
"""
from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping

from rimhook.shapes import (
    Cell,
    Partition,
    RimHook,
    add_hook,
    bump_hook,
    bumpout,
    cells,
    from_cells,
    has_legal_head,
    has_legal_tail,
    is_rim_hook_outside,
    partitions_of,
    remove_hook,
    removable_rim_hook_at,
    removable_rim_hooks,
    slitherdown,
    slitherup,
)


class NoPreimageError(ValueError):
    """Raised when a tableau has no preimage under insertion."""


@dataclass(frozen=True)
class RimHookTableau:
    m: int
    hooks: tuple[tuple[int, RimHook], ...]
    inner: Partition = ()

    @classmethod
    def build(cls, m: int, hooks: Mapping[int, RimHook], inner: Partition = ()) -> "RimHookTableau":
        return cls(m, tuple(sorted(hooks.items())), tuple(inner))

    @classmethod
    def empty(cls, m: int, inner: Partition = ()) -> "RimHookTableau":
        return cls(m, (), tuple(inner))

    @cached_property
    def hook_map(self) -> dict[int, RimHook]:
        return dict(self.hooks)

    @property
    def contents(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.hooks)

    def hook(self, c: int) -> RimHook:
        return self.hook_map[c]

    @cached_property
    def shape(self) -> Partition:
        cs = cells(self.inner)
        for _, h in self.hooks:
            cs |= h.cell_set
        p = from_cells(cs)
        if p is None:
            raise ValueError("cells of the tableau do not form a partition")
        return p

    @property
    def filling(self) -> dict[Cell, int]:
        return {cell: c for c, h in self.hooks for cell in h.cells}

    def __len__(self) -> int:
        return len(self.hooks)

    def with_hook(self, c: int, hook: RimHook) -> "RimHookTableau":
        if c in self.hook_map:
            raise ValueError(f"content {c} already present")
        return RimHookTableau.build(self.m, {**self.hook_map, c: hook}, self.inner)

    def without(self, c: int) -> "RimHookTableau":
        rest = dict(self.hook_map)
        del rest[c]
        return RimHookTableau.build(self.m, rest, self.inner)

    def restrict(self, keep) -> "RimHookTableau":
        return RimHookTableau.build(self.m, {c: h for c, h in self.hooks if keep(c)}, self.inner)

    def with_inner(self, inner: Partition) -> "RimHookTableau":
        return RimHookTableau(self.m, self.hooks, tuple(inner))


def check(T: RimHookTableau) -> str | None:
    """First reason T is not an m-rim hook tableau, or None if it is."""
    seen: set[Cell] = set(cells(T.inner))
    for c, h in T.hooks:
        if c < 1:
            return f"content {c} is not a positive integer"
        if len(h) != T.m:
            return f"content {c} occupies {len(h)} cells, expected {T.m}"
        if h.cell_set & seen:
            return f"content {c} overlaps earlier cells"
        seen |= h.cell_set
    shape = from_cells(seen)
    if shape is None:
        return "cells do not form a partition"
    for c, h in reversed(T.hooks):
        rest = from_cells(cells(shape) - h.cell_set)
        if rest is None or not is_rim_hook_outside(rest, h.cells):
            return f"content {c} is not an outer rim hook when peeled"
        shape = rest
    if shape != T.inner:
        return "peeling does not end at the inner shape"
    return None


def validate(T: RimHookTableau) -> bool:
    return check(T) is None


# -- hooks and hook permutations ----------------------------------------------

@dataclass(frozen=True)
class HookTableau:
    """An m-hook (arm, 1, ..., 1) filled with a single content."""

    m: int
    arm: int
    content: int

    def __post_init__(self):
        if not 1 <= self.arm <= self.m:
            raise ValueError(f"arm {self.arm} out of range for m={self.m}")

    @property
    def leg(self) -> int:
        return self.m - self.arm + 1

    @property
    def shape(self) -> Partition:
        return (self.arm,) + (1,) * (self.leg - 1)

    @property
    def hook(self) -> RimHook:
        column = [(i, 1) for i in range(self.leg, 0, -1)]
        row = [(1, j) for j in range(2, self.arm + 1)]
        return RimHook(tuple(column + row))

    def tableau(self) -> RimHookTableau:
        return RimHookTableau.build(self.m, {self.content: self.hook})


def arm_of_tail(tail_content: int, m: int) -> int:
    """Arm of the origin hook that shares a residue class with this tail."""
    return tail_content % m or m


@dataclass(frozen=True)
class HookPermutation:
    m: int
    hooks: tuple[HookTableau, ...]

    def __post_init__(self):
        if len({h.content for h in self.hooks}) != len(self.hooks):
            raise ValueError("hook contents must be distinct")
        if any(h.m != self.m for h in self.hooks):
            raise ValueError("all hooks must share m")

    def __len__(self) -> int:
        return len(self.hooks)

    def without_content(self, c: int) -> "HookPermutation":
        return HookPermutation(self.m, tuple(h for h in self.hooks if h.content != c))


def hook_permutations(n: int, m: int) -> Iterator[HookPermutation]:
    """All n! * m**n hook permutations on {1..n}."""
    for perm in itertools.permutations(range(1, n + 1)):
        for arms in itertools.product(range(1, m + 1), repeat=n):
            yield HookPermutation(m, tuple(HookTableau(m, a, c) for c, a in zip(perm, arms)))


# -- overlapping pairs and insertion ------------------------------------------

@dataclass(frozen=True)
class OverlappingPair:
    U: RimHookTableau
    V: RimHookTableau

    @property
    def sigma(self) -> RimHook:
        return RimHook.of(cells(self.U.shape) - cells(self.V.inner))

    def check(self) -> str | None:
        for name, T in (("U", self.U), ("V", self.V)):
            problem = check(T)
            if problem:
                return f"{name}: {problem}"
        sigma_cells = cells(self.U.shape) - cells(self.V.inner)
        if not cells(self.V.inner) <= cells(self.U.shape) or len(sigma_cells) != self.U.m:
            return "U's shape is not V's inner shape plus one hook"
        if not is_rim_hook_outside(self.V.inner, sigma_cells):
            return "sigma is not a rim hook outside V's inner shape"
        if self.U.contents and self.V.contents and max(self.U.contents) >= min(self.V.contents):
            return "contents of U are not all below those of V"
        return None


def merge_step(pair: OverlappingPair) -> OverlappingPair:
    """Move the smallest hook of V into U.

    A hook disjoint from sigma is copied as is; one overlapping sigma is
    bumped past it; one equal to sigma slides up the border of U's shape
    in steps of m until its head is legal.
    """
    U, V = pair.U, pair.V
    if not V.contents:
        raise ValueError("merge_step needs a nonempty V")
    m = U.m
    omega, lam, sigma = V.inner, U.shape, pair.sigma
    r = V.contents[0]
    tau = V.hook(r)
    if not sigma.cell_set & tau.cell_set:
        placed = tau
    elif sigma != tau:
        placed = bump_hook(omega, tau, sigma)
    else:
        placed = slitherup(lam, RimHook.of(bumpout(tau.cells)))
        while not has_legal_head(lam, placed):
            placed = slitherup(lam, placed)
        assert has_legal_tail(lam, placed), (lam, placed)
    nxt = OverlappingPair(U.with_hook(r, placed), V.without(r).with_inner(add_hook(omega, tau)))
    assert nxt.check() is None, nxt.check()
    return nxt


def combine(U: RimHookTableau, V: RimHookTableau) -> RimHookTableau:
    pair = OverlappingPair(U, V)
    while pair.V.contents:
        pair = merge_step(pair)
    return pair.U


def _initial_hook(below: Partition, H: HookTableau) -> RimHook:
    # slide the origin hook down column 1 until it clears `below`, then up
    # the border of `below` until its head is legal
    held = cells(below)
    tau = H.hook
    while tau.cell_set & held:
        tau = slitherdown((), tau)
    sigma = tau
    while not has_legal_head(below, sigma):
        sigma = slitherup(below, sigma)
    assert is_rim_hook_outside(below, sigma.cells), (below, sigma)
    return sigma


def insert(P: RimHookTableau, H: HookTableau) -> RimHookTableau:
    """P <- H."""
    if H.m != P.m:
        raise ValueError(f"hook size {H.m} does not match tableau m={P.m}")
    r = H.content
    if r in P.hook_map:
        raise ValueError(f"content {r} already in P")
    P1 = P.restrict(lambda c: c < r)
    P2 = P.restrict(lambda c: c > r).with_inner(P1.shape)
    U = P1.with_hook(r, _initial_hook(P1.shape, H))
    return combine(U, P2)


def _undo_step(pair: OverlappingPair) -> OverlappingPair | None:
    """Inverse of merge_step, or None when U's top hook is the inserted one."""
    U, V = pair.U, pair.V
    m = U.m
    x = U.contents[-1]
    rho = U.hook(x)
    lam = remove_hook(U.shape, rho)
    if rho.cell_set != cells(U.shape) - cells(V.inner):
        tau = removable_rim_hook_at(V.inner, rho.tail_content, m)
        if tau is None:
            raise NoPreimageError(f"content {x}: no hook of the inner shape to restore")
        omega = remove_hook(V.inner, tau)
        if not cells(omega) <= cells(lam):
            raise NoPreimageError(f"content {x}: inner shape escapes U")
        return OverlappingPair(U.without(x), V.with_inner(omega).with_hook(x, tau))
    if V.inner != lam:
        raise NoPreimageError(f"content {x}: inner shape mismatch")
    q = rho.tail_content - m
    while q >= 1 - len(lam):
        sigma = removable_rim_hook_at(lam, q, m)
        if sigma is not None:
            return OverlappingPair(U.without(x), V.with_inner(remove_hook(lam, sigma)).with_hook(x, sigma))
        q -= m
    return None


def uninsert(T: RimHookTableau, target_shape: Iterable[int]) -> tuple[RimHookTableau, HookTableau]:
    """The unique (P, H) with shape(P) == target_shape and P <- H == T."""
    target = tuple(target_shape)
    sigma_cells = cells(T.shape) - cells(target)
    if not cells(target) <= cells(T.shape) or len(sigma_cells) != T.m:
        raise NoPreimageError(f"{target} is not {T.shape} minus one {T.m}-rim hook")
    if not is_rim_hook_outside(target, sigma_cells):
        raise NoPreimageError(f"{T.shape}/{target} is not a rim hook")
    pair = OverlappingPair(T, RimHookTableau.empty(T.m, target))
    while (prev := _undo_step(pair)) is not None:
        pair = prev
    x = pair.U.contents[-1]
    H = HookTableau(T.m, arm_of_tail(pair.U.hook(x).tail_content, T.m), x)
    P1 = pair.U.without(x)
    if pair.V.inner != P1.shape:
        raise NoPreimageError("inserted hook is not on top of the smaller contents")
    P = RimHookTableau.build(T.m, {**P1.hook_map, **pair.V.hook_map})
    if insert(P, H) != T:
        raise NoPreimageError("reconstructed pair does not insert back to T")
    return P, H


def insertion_tableau(hp: HookPermutation) -> RimHookTableau:
    P = RimHookTableau.empty(hp.m)
    for H in hp.hooks:
        P = insert(P, H)
    return P


def schensted(hp: HookPermutation) -> tuple[RimHookTableau, RimHookTableau]:
    """Insertion and recording tableaux of a hook permutation.

    The recording tableau fills the rim hook added by the k-th insertion
    with k.
    """
    P = RimHookTableau.empty(hp.m)
    Q: dict[int, RimHook] = {}
    for k, H in enumerate(hp.hooks, 1):
        before = cells(P.shape)
        P = insert(P, H)
        Q[k] = RimHook.of(cells(P.shape) - before)
    return P, RimHookTableau.build(hp.m, Q)


def schensted_inverse(P: RimHookTableau, Q: RimHookTableau) -> HookPermutation:
    if P.shape != Q.shape or P.m != Q.m:
        raise ValueError("P and Q must share shape and m")
    n = len(Q)
    if Q.contents != tuple(range(1, n + 1)):
        raise ValueError("recording tableau must have contents 1..n")
    hooks: list[HookTableau] = []
    for k in range(n, 0, -1):
        target = remove_hook(P.shape, Q.hook(k))
        try:
            P, H = uninsert(P, target)
        except NoPreimageError as exc:
            raise NoPreimageError(f"not in image: {exc}") from exc
        hooks.append(H)
    return HookPermutation(Q.m, tuple(reversed(hooks)))


# -- monotone subsequences ----------------------------------------------------

def _longest_increasing(seq: list[int]) -> int:
    tails: list[int] = []
    for x in seq:
        k = bisect.bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def lis(hp: HookPermutation) -> int:
    """Longest run of same-shape hooks with increasing contents."""
    return max(
        (_longest_increasing([h.content for h in hp.hooks if h.arm == a]) for a in range(1, hp.m + 1)),
        default=0,
    )


def lds(hp: HookPermutation) -> int:
    return max(
        (_longest_increasing([-h.content for h in hp.hooks if h.arm == a]) for a in range(1, hp.m + 1)),
        default=0,
    )


def rows_and_columns(p: Partition) -> tuple[int, int]:
    return len(p), (p[0] if p else 0)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- enumeration of tableaux --------------------------------------------------

def rim_hook_tableaux(shape: Partition, m: int, contents: Iterable[int] | None = None) -> Iterator[RimHookTableau]:
    """All m-rim hook tableaux of ``shape`` on the given contents (default 1..n)."""
    shape = tuple(shape)
    if sum(shape) % m:
        return
    n = sum(shape) // m
    labels = sorted(contents) if contents is not None else list(range(1, n + 1))
    if len(labels) != n:
        raise ValueError("number of contents must be |shape| / m")

    def peel(p: Partition, k: int) -> Iterator[dict[int, RimHook]]:
        if k == 0:
            yield {}
            return
        for h in removable_rim_hooks(p, m):
            for rest in peel(remove_hook(p, h), k - 1):
                yield {**rest, labels[k - 1]: h}

    for hooks in peel(shape, n):
        yield RimHookTableau.build(m, hooks)


@lru_cache(maxsize=None)
def count_rim_hook_tableaux(shape: Partition, m: int) -> int:
    if not shape:
        return 1
    return sum(count_rim_hook_tableaux(remove_hook(shape, h), m) for h in removable_rim_hooks(shape, m))


def sum_of_squares(n: int, m: int) -> int:
    """Number of same-shape tableau pairs with n hooks of size m."""
    return sum(count_rim_hook_tableaux(p, m) ** 2 for p in partitions_of(m * n))


def hook_permutation_count(n: int, m: int) -> int:
    return math.factorial(n) * m ** n
