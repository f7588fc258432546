"""Exact counts by streamed generation, and the closed forms they must meet.

Every count here is a Python int; nothing passes through floating point.
"""
from __future__ import annotations

from collections import Counter
from math import comb, prod

from rimhook.matchings import crossing_number, enumerate_matchings, is_noncrossing, nesting_number
from rimhook.oscillating import enumerate_oscillating
from rimhook.paths import guy_walks, packings

FAMILIES = ("colored_matchings", "noncrossing2", "oscillating", "O2n2", "packings", "guy_walks")


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def double_factorial_odd(n: int) -> int:
    """(2n-1)!!, the number of perfect matchings on [2n]."""
    return prod(range(1, 2 * n, 2))


def closed_form(family: str, n: int, m: int = 2) -> int:
    if family in ("colored_matchings", "oscillating"):
        return double_factorial_odd(n) * m ** n
    if family in ("noncrossing2", "O2n2", "packings", "guy_walks"):
        return catalan(n) * catalan(n + 1)
    raise ValueError(f"unknown family {family!r}")


def count_family(family: str, n: int, m: int = 2) -> int:
    """Count a family by exhaustive generation.

    The Catalan-product families are 2-colored / domino objects; ``m`` is
    ignored for them.
    """
    if family == "colored_matchings":
        stream = enumerate_matchings(n, m)
    elif family == "noncrossing2":
        stream = filter(is_noncrossing, enumerate_matchings(n, 2))
    elif family == "oscillating":
        stream = enumerate_oscillating(m, n)
    elif family == "O2n2":
        stream = enumerate_oscillating(2, n, max_columns=2)
    elif family == "packings":
        stream = packings(n)
    elif family == "guy_walks":
        stream = guy_walks(n)
    else:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return sum(1 for _ in stream)


def binomial_catalan_sum(n: int) -> int:
    return sum(comb(2 * n, 2 * i) * catalan(i) * catalan(n - i) for i in range(n + 1))


def verify_binomial_catalan_identity(n: int) -> bool:
    """sum_i C(2n, 2i) C_i C_{n-i} == C_n C_{n+1}, in exact integers."""
    return binomial_catalan_sum(n) == catalan(n) * catalan(n + 1)


def joint_distribution(n: int, m: int) -> dict[tuple[int, int], int]:
    """Counts of (crossing number, nesting number) over all m-colored matchings."""
    table = Counter((crossing_number(M), nesting_number(M)) for M in enumerate_matchings(n, m))
    return dict(sorted(table.items()))


def is_symmetric(table: dict[tuple[int, int], int]) -> bool:
    return all(table.get((j, i), 0) == v for (i, j), v in table.items())
