"""Explicit code families and their exact counting recurrences.

Counts use unbounded integers throughout; recurrence values pass 64 bits
near n = 80. Rates are always derived from exact counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .codesearch import Code
from .errors import CapExceededError
from .sequences import ENUMERATION_CAP, Bits, all_sequences, contains_run


@dataclass(frozen=True)
class CountTable:
    """counts[n] = family size at block length n, for one family parameter."""

    parameter: int
    counts: tuple[int, ...]


def pairwise_block_code(n: int) -> Code:
    """All concatenations of 00/11 blocks; odd lengths get a free first symbol.

    Size 2^ceil(n/2).
    """
    if n < 1:
        raise ValueError("block length must be >= 1")
    prefixes = ("",) if n % 2 == 0 else ("0", "1")
    words = [
        Bits(head + "".join(blocks))
        for head in prefixes
        for blocks in product(("00", "11"), repeat=n // 2)
    ]
    return Code.from_words(words, n=n)


def forbidden_run_code(n: int, run_bound: int, *, max_n: int = ENUMERATION_CAP) -> Code:
    """All length-n sequences whose every run is shorter than run_bound."""
    if n < 1:
        raise ValueError("block length must be >= 1")
    if run_bound < 2:
        raise ValueError("run bound must be >= 2")
    if n > max_n:
        raise CapExceededError(f"enumerating length {n} exceeds cap {max_n}")
    words = [x for x in all_sequences(n, max_n=max_n) if not contains_run(x, run_bound)]
    return Code.from_words(words, n=n)


def forbidden_run_counts(run_bound: int, n_max: int) -> CountTable:
    """Sizes of the runs-shorter-than-run_bound family for n = 0..n_max.

    For n < run_bound every sequence qualifies (2^n); from n = run_bound on,
    counts[n] = sum of the previous run_bound - 1 counts (classify by the
    length of the final run).
    """
    if run_bound < 2:
        raise ValueError("run bound must be >= 2")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    counts = [1 << n for n in range(min(run_bound, n_max + 1))]
    for n in range(run_bound, n_max + 1):
        counts.append(sum(counts[n - i] for i in range(1, run_bound)))
    return CountTable(parameter=run_bound, counts=tuple(counts))


def count_forbidden_run(n: int, run_bound: int) -> int:
    """Number of length-n sequences with all runs shorter than run_bound."""
    return forbidden_run_counts(run_bound, n).counts[n]


def no_run_break_counts(k2: int, n_max: int) -> CountTable:
    """Sizes of the family avoiding 0^(k2-1)1 and 1^(k2-1)0, for n = 0..n_max.

    DP over (last symbol, trailing run capped at k2-1): a run that has
    reached k2-1 may only be extended or end the sequence.
    """
    if k2 < 3:
        raise ValueError("k2 must be >= 3")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    cap = k2 - 1
    counts = [1]
    state: dict[tuple[int, int], int] = {(0, 1): 1, (1, 1): 1}
    if n_max >= 1:
        counts.append(2)
    for _ in range(2, n_max + 1):
        nxt: dict[tuple[int, int], int] = {}
        for (last, run), ways in state.items():
            key = (last, min(run + 1, cap))
            nxt[key] = nxt.get(key, 0) + ways
            if run < cap:
                key = (1 - last, 1)
                nxt[key] = nxt.get(key, 0) + ways
        state = nxt
        counts.append(sum(state.values()))
    return CountTable(parameter=k2, counts=tuple(counts))


def count_no_run_break(n: int, k2: int) -> int:
    """Number of length-n sequences avoiding 0^(k2-1)1 and 1^(k2-1)0."""
    return no_run_break_counts(k2, n).counts[n]


def growth_ratio(run_bound: int, n: int) -> float:
    """counts[n+1]/counts[n] for the forbidden-run family.

    Estimates the dominant root of the counting recurrence; requires
    n >= 2 * run_bound so the recurrence is past its base cases.
    """
    if n < 2 * run_bound:
        raise ValueError("n must be at least twice the run bound")
    counts = forbidden_run_counts(run_bound, n + 1).counts
    return counts[n + 1] / counts[n]
