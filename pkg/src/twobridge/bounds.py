"""Divisor-count bounds on how many knots can sit below a knot.

A knot strictly greater than m pairwise-distinct nontrivial knots needs
at least ``least_odd_with_divisors(m)`` crossings: the least positive
odd integer with at least m nontrivial proper divisors (divisors other
than 1 and the number itself).  Conversely a torus knot with q crossings
sits strictly above exactly one knot per nontrivial proper divisor of q,
so the bound is attained at ``least_odd_with_divisors(m)`` exactly when
the next value of the sequence is strictly larger.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

__all__ = [
    "CmEntry",
    "bound_entry",
    "ek_exact_at_bound",
    "ek_upper_bound",
    "least_odd_with_divisors",
    "nontrivial_proper_divisor_count",
]


def nontrivial_proper_divisor_count(n: int) -> int:
    """The number of nontrivial proper divisors of n (excluding 1 and n)."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    if n == 1:
        return 0
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            count += 1 if d * d == n else 2
        d += 1
    return count - 2


# least_odd_with_divisors sieves odd integers in geometrically growing
# windows, recording the first integer to reach each divisor count.  The
# table only ever grows (the sequence is nondecreasing), so concurrent
# readers are safe; the lock serializes extension.
_table: list[int] = [3]  # index m holds the least odd with >= m divisors; m = 0 is 3 by convention
_sieved_to = 3  # largest odd integer folded into the table so far
_table_lock = threading.Lock()


def _window_counts(lo: int, hi: int) -> list[int]:
    """Divisor counts of the odd integers lo, lo + 2, ..., hi (lo, hi odd).

    counts[i] is the nontrivial proper divisor count of lo + 2i.  Every
    such divisor d of an odd n satisfies 3 <= d <= n // 3, so marking
    n = d * k over odd k >= 3 touches each divisor exactly once.
    """
    counts = [0] * ((hi - lo) // 2 + 1)
    for d in range(3, hi // 3 + 1, 2):
        k = max(3, -(-lo // d))
        if k % 2 == 0:
            k += 1
        for mult in range(d * k, hi + 1, 2 * d):
            counts[(mult - lo) // 2] += 1
    return counts


def least_odd_with_divisors(m: int) -> int:
    """The least positive odd integer with at least m nontrivial proper divisors.

    The m = 0 value is 3 by convention (the trefoil's crossing number),
    not 1.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m < len(_table):
        return _table[m]
    global _sieved_to
    with _table_lock:
        while m >= len(_table):
            lo = _sieved_to + 2
            hi = max(4 * _sieved_to + 5, 1001)
            for i, count in enumerate(_window_counts(lo, hi)):
                while len(_table) <= count:
                    _table.append(lo + 2 * i)
            _sieved_to = hi
    return _table[m]


def ek_upper_bound(n: int) -> int:
    """floor((n - 3) / 6): no knot with n crossings exceeds this many smaller knots."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return (n - 3) // 6


def ek_exact_at_bound(m: int) -> bool:
    """True when the divisor bound is tight at its own threshold.

    Exactly the case ``least_odd_with_divisors(m + 1) >
    least_odd_with_divisors(m)``: then the maximal number of knots below
    any knot with ``least_odd_with_divisors(m)`` crossings is m itself.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    return least_odd_with_divisors(m + 1) > least_odd_with_divisors(m)


@dataclass(frozen=True)
class CmEntry:
    """One row of the divisor-bound table."""

    m: int
    value: int

    def to_json_dict(self) -> dict:
        return {"m": self.m, "value": self.value}


def bound_entry(m: int) -> CmEntry:
    return CmEntry(m, least_odd_with_divisors(m))
