"""Exhaustive verification suites and their reports.

Each suite returns a :class:`VerificationReport`.  Reports serialize to
byte-stable JSON: keys are sorted, failures are capped and ordered by
discovery, and wall-clock time is left out unless asked for.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from rimhook import enumeration, oscillating, paths, shapes, tableaux
from rimhook.matchings import ColoredMatching, crossing_number, enumerate_matchings, is_noncrossing, nesting_number
from rimhook.oscillating import OscillatingTableau
from rimhook.tableaux import HookPermutation, HookTableau

SUITES = ("sch", "stats", "phi", "packing", "guy", "identity")
MAX_FAILURES = 10
IDENTITY_N_MAX = 30

# domino oscillating tableau of length 8 and the matching it corresponds to
DOMINO_EXAMPLE = ((), (1, 1), (2, 2), (3, 3), (3, 1), (1, 1), (2, 2), (2,), ())
DOMINO_EXAMPLE_ARCS = ((1, 5, 1), (2, 4, 2), (3, 7, 1), (6, 8, 2))
# packing of the conjugate of DOMINO_EXAMPLE
DOMINO_EXAMPLE_PACKING = ((0, 1, 2, 3, 2, 1, 2, 1, 0), (0, 0, 0, 0, 1, 0, 0, 1, 0))


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks: dict[str, bool] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    calibration: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def expect(self, name: str, ok: bool, witness: object = None) -> bool:
        self.checks[name] = self.checks.get(name, True) and bool(ok)
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(f"{name}: {witness!r}")
        return bool(ok)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "checks": self.checks,
            "counts": self.counts,
            "calibration": self.calibration,
            "failures": self.failures,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)

    def to_text(self, timing: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        head = f"[{status}] {self.suite} {params}"
        if timing:
            head += f" ({self.seconds:.2f}s)"
        lines = [head]
        width = max((len(k) for k in self.checks), default=0)
        for name in sorted(self.checks):
            lines.append(f"  {name:<{width}}  {'ok' if self.checks[name] else 'FAILED'}")
        if self.counts:
            width = max(len(k) for k in self.counts)
            lines.append("  counts:")
            lines.extend(f"    {k:<{width}}  {v}" for k, v in sorted(self.counts.items()))
        if self.calibration:
            lines.append("  calibration:")
            lines.extend(f"    {k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(self.calibration.items()))
        lines.extend(f"  ! {f}" for f in self.failures)
        return "\n".join(lines)


def _orientation(oriented: int, transposed: int, total: int, forward: str, backward: str) -> str:
    if oriented == total:
        return forward
    if transposed == total:
        return backward
    return "neither"


def _random_hook_permutation(rng: random.Random, n: int, m: int) -> HookPermutation:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return HookPermutation(m, tuple(HookTableau(m, rng.randint(1, m), c) for c in order))


def _random_matching(rng: random.Random, n: int, m: int) -> ColoredMatching:
    verts = list(range(1, 2 * n + 1))
    rng.shuffle(verts)
    return ColoredMatching(n, m, tuple((verts[2 * k], verts[2 * k + 1], rng.randint(1, m)) for k in range(n)))


# -- suites ---------------------------------------------------------------------

def suite_sch(m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    """Schensted bijectivity, exact inverse, and max-content deletion."""
    rep = VerificationReport("sch", {"m": m, "n_max": n_max, "seed": seed})
    for n in range(1, n_max + 1):
        tag = f"[n={n}]"
        image = set()
        perms = 0
        for hp in tableaux.hook_permutations(n, m):
            perms += 1
            P, Q = tableaux.schensted(hp)
            rep.expect("valid_pair" + tag, tableaux.validate(P) and tableaux.validate(Q) and P.shape == Q.shape, hp)
            rep.expect("contents" + tag, P.contents == tuple(sorted(h.content for h in hp.hooks)), hp)
            rep.expect("inverse" + tag, tableaux.schensted_inverse(P, Q) == hp, hp)
            top = max(h.content for h in hp.hooks)
            smaller = tableaux.insertion_tableau(hp.without_content(top))
            rep.expect("max_content_deletion" + tag, smaller == P.without(top), hp)
            image.add((P, Q))
        rep.expect("injective" + tag, len(image) == perms, (len(image), perms))

        pairs = 0
        for lam in shapes.partitions_of(m * n):
            family = list(tableaux.rim_hook_tableaux(lam, m))
            for pq in product(family, repeat=2):
                pairs += 1
                rep.expect("surjective" + tag, pq in image, pq)
        rep.expect("pair_count" + tag, pairs == tableaux.sum_of_squares(n, m), pairs)
        rep.expect("count_closed_form" + tag, perms == pairs == math.factorial(n) * m ** n, (perms, pairs))
        rep.counts["hook_permutations" + tag] = perms
        rep.counts["tableau_pairs" + tag] = pairs

    if seed is not None:
        rng = random.Random(seed)
        n = n_max + 2
        for _ in range(10):
            hp = _random_hook_permutation(rng, n, m)
            P, Q = tableaux.schensted(hp)
            rep.expect(f"spot_inverse[n={n}]", tableaux.schensted_inverse(P, Q) == hp, hp)
    return rep


def check_monotone(rep: VerificationReport, m: int, n_max: int) -> None:
    """Longest monotone same-shape runs against rows and columns of P."""
    total = oriented = transposed = 0
    for n in range(1, n_max + 1):
        for hp in tableaux.hook_permutations(n, m):
            r, c = tableaux.rows_and_columns(tableaux.insertion_tableau(hp).shape)
            a, b = tableaux.ceil_div(r, m), tableaux.ceil_div(c, m)
            inc, dec = tableaux.lis(hp), tableaux.lds(hp)
            total += 1
            oriented += (inc, dec) == (a, b)
            transposed += (inc, dec) == (b, a)
            rep.expect(f"monotone_multiset[n={n}]", sorted((inc, dec)) == sorted((a, b)), hp)
    rep.counts["hook_permutations"] = total
    rep.calibration["monotone_orientation"] = _orientation(
        oriented, transposed, total,
        "lis=ceil(rows/m), lds=ceil(columns/m)", "lis=ceil(columns/m), lds=ceil(rows/m)",
    )


def check_crossing_nesting(rep: VerificationReport, m: int, n_max: int) -> None:
    """Nesting and crossing numbers against the widest and tallest shapes."""
    total = oriented = transposed = 0
    for n in range(1, n_max + 1):
        for o in oscillating.enumerate_oscillating(m, n):
            M = oscillating.to_matching(o)
            r, c = tableaux.ceil_div(o.max_rows, m), tableaux.ceil_div(o.max_columns, m)
            ne, cr = nesting_number(M), crossing_number(M)
            total += 1
            oriented += (ne, cr) == (r, c)
            transposed += (ne, cr) == (c, r)
            rep.expect(f"crossing_nesting_multiset[n={n}]", sorted((ne, cr)) == sorted((r, c)), o)
            rep.expect(f"crossing_nesting_oriented[n={n}]", (ne, cr) == (r, c), o)
    rep.counts["oscillating_tableaux"] = total
    rep.calibration["crossing_nesting_orientation"] = _orientation(
        oriented, transposed, total,
        "ne=ceil(rows/m), cr=ceil(columns/m)", "ne=ceil(columns/m), cr=ceil(rows/m)",
    )
    rep.calibration["conjugation_applied"] = False


def check_symmetry(rep: VerificationReport, m: int, n_max: int) -> None:
    for n in range(1, n_max + 1):
        table = enumeration.joint_distribution(n, m)
        rep.expect(f"joint_symmetric[n={n}]", enumeration.is_symmetric(table), table)
        rep.counts[f"joint_total[n={n}]"] = sum(table.values())


def suite_stats(m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    """Monotone subsequences vs shape, crossings/nestings vs shape, symmetry."""
    rep = VerificationReport("stats", {"m": m, "n_max": n_max, "seed": seed})
    check_monotone(rep, m, n_max)
    check_crossing_nesting(rep, m, n_max)
    check_symmetry(rep, m, n_max)
    return rep


def suite_phi(m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    """Oscillating tableaux and colored matchings are mutually inverse."""
    rep = VerificationReport("phi", {"m": m, "n_max": n_max, "seed": seed})
    for n in range(0, n_max + 1):
        tag = f"[n={n}]"
        seen = set()
        count = 0
        for o in oscillating.enumerate_oscillating(m, n):
            count += 1
            M = oscillating.to_matching(o)
            seen.add(M)
            rep.expect("from_after_to" + tag, oscillating.from_matching(M) == o, o)
        roundtrips = 0
        for M in enumerate_matchings(n, m):
            o = oscillating.from_matching(M)
            ok = oscillating.validate(o) and oscillating.to_matching(o) == M
            roundtrips += ok
            rep.expect("to_after_from" + tag, ok, M)
        closed = enumeration.closed_form("oscillating", n, m)
        rep.expect("count" + tag, count == closed == roundtrips == len(seen), (count, closed, roundtrips))
        rep.counts["oscillating" + tag] = count
        rep.counts["round_trips" + tag] = roundtrips

    if m == 2:
        o = OscillatingTableau.of(2, DOMINO_EXAMPLE)
        M = oscillating.to_matching(o)
        rep.expect("domino_example", M.arcs == DOMINO_EXAMPLE_ARCS, M.arcs)
        rep.expect("domino_example_stats", (crossing_number(M), nesting_number(M)) == (2, 1), M)
        rep.expect("domino_example_inverse", oscillating.from_matching(M) == o, M)
        # the drawing uses dotted curves for (1,5),(3,7) and solid for (2,4),(6,8)
        drawn = {"dotted": [[1, 5], [3, 7]], "solid": [[2, 4], [6, 8]]}
        arm_style = {}
        for arm in (1, 2):
            arcs = [list(a) for a in M.color_class(arm)]
            arm_style[f"arm_{arm}"] = {"arcs": arcs, "line_style": next((s for s, a in drawn.items() if a == arcs), None)}
        rep.calibration["domino_example_arms"] = arm_style

    if seed is not None:
        rng = random.Random(seed)
        n = n_max + 1
        for _ in range(10):
            M = _random_matching(rng, n, m)
            rep.expect(f"spot_round_trip[n={n}]", oscillating.to_matching(oscillating.from_matching(M)) == M, M)
    return rep


def suite_packing(m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    """Two-column domino oscillating tableaux vs Dyck path packings."""
    rep = VerificationReport("packing", {"n_max": n_max})
    for n in range(0, n_max + 1):
        tag = f"[n={n}]"
        image = set()
        count = 0
        for o in oscillating.enumerate_oscillating(2, n, max_columns=2):
            count += 1
            pk = paths.to_packing(o)
            image.add(pk)
            rep.expect("round_trip" + tag, paths.from_packing(pk) == o, o)
        direct = sum(1 for _ in paths.packings(n))
        closed = enumeration.closed_form("packings", n)
        rep.expect("count" + tag, count == direct == len(image) == closed, (count, direct, closed))
        rep.counts["two_column_tableaux" + tag] = count
        rep.counts["packings" + tag] = direct
    o = oscillating.conjugate(OscillatingTableau.of(2, DOMINO_EXAMPLE))
    pk = paths.to_packing(o)
    rep.expect("domino_example", (pk.D.heights, pk.E.heights) == DOMINO_EXAMPLE_PACKING, pk)
    return rep


def suite_guy(m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    """Noncrossing 2-colored matchings vs Guy's walks."""
    rep = VerificationReport("guy", {"n_max": n_max})
    for n in range(0, n_max + 1):
        tag = f"[n={n}]"
        count = 0
        for M in filter(is_noncrossing, enumerate_matchings(n, 2)):
            count += 1
            rep.expect("round_trip" + tag, paths.from_guy_walk(paths.to_guy_walk(M)) == M, M)
        walks = 0
        for w in paths.guy_walks(n):
            walks += 1
            rep.expect("walk_round_trip" + tag, paths.to_guy_walk(paths.from_guy_walk(w)) == w, w)
        closed = enumeration.closed_form("guy_walks", n)
        rep.expect("count" + tag, count == walks == closed, (count, walks, closed))
        rep.counts["noncrossing2" + tag] = count
        rep.counts["guy_walks" + tag] = walks
    return rep


def suite_identity(m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    """Binomial-weighted Catalan convolution equals a Catalan product."""
    top = max(n_max, IDENTITY_N_MAX)
    rep = VerificationReport("identity", {"n_max": top})
    for n in range(top + 1):
        rep.expect("binomial_catalan", enumeration.verify_binomial_catalan_identity(n), n)
    rep.counts["largest_value"] = enumeration.catalan(top) * enumeration.catalan(top + 1)
    return rep


RUNNERS: dict[str, Callable[..., VerificationReport]] = {
    "sch": suite_sch,
    "stats": suite_stats,
    "phi": suite_phi,
    "packing": suite_packing,
    "guy": suite_guy,
    "identity": suite_identity,
}


def run_suite(name: str, m: int, n_max: int, seed: int | None = None) -> VerificationReport:
    start = time.perf_counter()
    rep = RUNNERS[name](m, n_max, seed)
    rep.seconds = time.perf_counter() - start
    return rep
