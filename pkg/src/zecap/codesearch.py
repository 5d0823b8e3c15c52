"""Zero-error code verification, exact optimal-code search, and code files.

The exact search is branch and bound for a maximum clique of the complement
graph (a clique of pairwise-distinguishable inputs), with a greedy-coloring
upper bound and big-int bit vectors for candidate sets. Before branching,
vertices whose closed neighborhood contains another's are discarded: if
N[u] is a subset of N[v], any code using v can swap v for u, so v is never
needed. That is the graph form of the codeword-replacement rule and it
preserves the exact optimum.
"""

from __future__ import annotations

import os
import re
import sys
import time
from dataclasses import dataclass
from collections.abc import Iterable, Iterator
from math import log2

from .channel import ChannelParams
from .confusability import ConfusabilityGraph, confusable_dp, output_membership, possible_outputs
from .errors import PreconditionError
from .sequences import Bits

DEFAULT_TIME_LIMIT = 60.0


@dataclass(frozen=True)
class Code:
    """A set of equal-length words, stored sorted lexicographically."""

    n: int
    words: tuple[Bits, ...]

    @classmethod
    def from_words(cls, words: Iterable[Bits], n: int | None = None) -> "Code":
        unique = sorted(set(words))
        if not unique and n is None:
            raise ValueError("empty code needs an explicit block length")
        length = n if n is not None else len(unique[0])
        if any(len(w) != length for w in unique):
            raise ValueError("code words must all have the same length")
        return cls(n=length, words=tuple(unique))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Bits]:
        return iter(self.words)

    def __contains__(self, word: Bits) -> bool:
        return word in self.words


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an optimal-code search; optimal=False marks a timeout."""

    size: int
    witness: Code
    optimal: bool


def verify_code(params: ChannelParams, code: Code) -> bool:
    """True iff every distinct pair of words is distinguishable."""
    words = code.words
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            if confusable_dp(params, words[i], words[j]):
                return False
    return True


def rate(n: int, size: int) -> float:
    """Code rate log2(size)/n in bits per channel use."""
    if n < 1:
        raise ValueError("block length must be >= 1")
    if size < 1:
        raise ValueError("code size must be >= 1")
    return log2(size) / n


def replace_codeword(params: ChannelParams, code: Code, x: Bits, x_new: Bits) -> Code:
    """Swap codeword x for x_new; requires every output of x_new to be one of x's.

    Under that containment the updated set stays a zero-error code.
    """
    if x not in code:
        raise PreconditionError(f"{x} is not a codeword")
    if len(x_new) != code.n:
        raise ValueError("replacement word has the wrong length")
    for y in possible_outputs(params, x_new):
        if not output_membership(params, x, y):
            raise PreconditionError(
                f"output {y} of {x_new} is not a possible output of {x}"
            )
    return Code.from_words([w for w in code.words if w != x] + [x_new], n=code.n)


class _SearchTimeout(Exception):
    pass


def _drop_dominated(rows: list[int]) -> int:
    """Bitmask of kept vertices after closed-neighborhood domination removal."""
    count = len(rows)
    alive = (1 << count) - 1
    closed = [rows[i] | (1 << i) for i in range(count)]
    changed = True
    while changed:
        changed = False
        for u in range(count):
            if not (alive >> u) & 1:
                continue
            cu = closed[u] & alive
            neighbors = rows[u] & alive
            while neighbors:
                low = neighbors & -neighbors
                neighbors ^= low
                v = low.bit_length() - 1
                if cu & ~(closed[v] & alive) == 0:
                    alive &= ~low
                    cu &= ~low
                    changed = True
    return alive


def _greedy_clique(adj: list[int], full: int) -> int:
    """Clique bitmask found by repeatedly taking the densest compatible vertex."""
    clique = 0
    candidates = full
    while candidates:
        best_v, best_deg = -1, -1
        m = candidates
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            deg = (adj[v] & candidates).bit_count()
            if deg > best_deg:
                best_v, best_deg = v, deg
        clique |= 1 << best_v
        candidates &= adj[best_v]
    return clique


def _max_clique(adj: list[int], time_limit: float | None) -> tuple[int, bool]:
    """Exact maximum clique bitmask; second value False when the search timed out."""
    count = len(adj)
    if count == 0:
        return 0, True
    order = sorted(range(count), key=lambda v: adj[v].bit_count(), reverse=True)
    back = {v: i for i, v in enumerate(order)}
    radj = [0] * count
    for new_i, old_i in enumerate(order):
        row = adj[old_i]
        while row:
            low = row & -row
            row ^= low
            radj[new_i] |= 1 << back[low.bit_length() - 1]

    full = (1 << count) - 1
    best_mask = _greedy_clique(radj, full)
    best = best_mask.bit_count()
    deadline = None if time_limit is None else time.monotonic() + time_limit
    current: list[int] = []
    completed = True

    def color_order(candidates: int) -> tuple[list[int], list[int]]:
        # greedy coloring: the color index bounds any clique inside `candidates`
        verts: list[int] = []
        bounds: list[int] = []
        rest = candidates
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~(radj[v] | low)
                rest ^= low
                verts.append(v)
                bounds.append(color)
        return verts, bounds

    def expand(size: int, candidates: int) -> None:
        nonlocal best, best_mask
        if deadline is not None and time.monotonic() > deadline:
            raise _SearchTimeout
        verts, bounds = color_order(candidates)
        for idx in range(len(verts) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = verts[idx]
            current.append(v)
            rest = candidates & radj[v]
            if rest:
                expand(size + 1, rest)
            elif size + 1 > best:
                best = size + 1
                best_mask = 0
                for u in current:
                    best_mask |= 1 << u
            current.pop()
            candidates &= ~(1 << v)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, count + 1000))
    try:
        expand(0, full)
    except _SearchTimeout:
        completed = False
    finally:
        sys.setrecursionlimit(old_limit)

    original_mask = 0
    m = best_mask
    while m:
        low = m & -m
        m ^= low
        original_mask |= 1 << order[low.bit_length() - 1]
    return original_mask, completed


def optimal_code(
    graph: ConfusabilityGraph,
    *,
    time_limit: float | None = DEFAULT_TIME_LIMIT,
    reduce_dominated: bool = True,
) -> SearchResult:
    """Exact largest zero-error code for the graph's channel and length.

    The size is deterministic; the witness is one maximizer and need not be
    canonical. On timeout the best code found so far is returned with
    optimal=False.
    """
    size = graph.vertex_count
    rows = list(graph.rows)
    alive = _drop_dominated(rows) if reduce_dominated else (1 << size) - 1

    verts: list[int] = []
    m = alive
    while m:
        low = m & -m
        m ^= low
        verts.append(low.bit_length() - 1)
    count = len(verts)

    # complement adjacency among kept vertices, reindexed 0..count-1
    position = {v: i for i, v in enumerate(verts)}
    full = (1 << count) - 1
    comp = [full & ~(1 << i) for i in range(count)]
    for i, v in enumerate(verts):
        row = rows[v] & alive
        while row:
            low = row & -row
            row ^= low
            comp[i] &= ~(1 << position[low.bit_length() - 1])

    clique_mask, completed = _max_clique(comp, time_limit)
    words = []
    m = clique_mask
    while m:
        low = m & -m
        m ^= low
        words.append(graph.sequence(verts[low.bit_length() - 1]))
    witness = Code.from_words(words, n=graph.n)
    return SearchResult(size=len(witness), witness=witness, optimal=completed)


_HEADER_RE = re.compile(r"^# zecap code n=(\d+) k1=(\d+) k2=(\d+)\s*$")


def write_code_file(path: str | os.PathLike[str], params: ChannelParams, code: Code) -> None:
    """Write `# zecap code n=<n> k1=<k1> k2=<k2>` then one word per line."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# zecap code n={code.n} k1={params.k1} k2={params.k2}\n")
        for word in code.words:
            fh.write(f"{word}\n")


def read_code_file(path: str | os.PathLike[str]) -> tuple[ChannelParams, Code]:
    """Read a code file written by write_code_file, bit-exact."""
    with open(path, encoding="ascii") as fh:
        header = fh.readline()
        match = _HEADER_RE.match(header)
        if not match:
            raise ValueError(f"{path}: missing or malformed code file header")
        n, k1, k2 = (int(g) for g in match.groups())
        words = []
        for line in fh:
            line = line.strip()
            if line:
                words.append(Bits(line))
    code = Code.from_words(words, n=n)
    return ChannelParams(k1, k2), code
