"""Brute-force ground truth for output counting and reconstruction.

Everything here is exact: words are enumerated exhaustively (guarded by a
state budget), counts are arbitrary-precision integers, and the per-profile
composition counts are closed-form products of binomials that must agree
with enumeration wherever both apply.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import time
from dataclasses import dataclass
from math import comb, prod
from typing import Mapping, Sequence

from .channels import ChannelSystem
from .systems import edge_system, pairs_graph, remove_dominated, separable_split

DEFAULT_BUDGET = 200_000_000


class BudgetExceededError(RuntimeError):
    """Enumeration refused: the state space exceeds the configured budget."""

    def __init__(self, q: int, n: int, limit: int):
        self.states = q ** n
        self.limit = limit
        super().__init__(
            f"enumerating {q}^{n} = {self.states} words exceeds the budget "
            f"of {limit} states; raise the budget to force it")


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    count: int
    rate: float
    elapsed: float


def _key_set(system: ChannelSystem, n: int, prefix: tuple[int, ...]) -> set:
    """Canonical output keys of all words with the given prefix.

    Keys concatenate the per-channel projections with a 0 separator, which
    no letter can collide with.  Letters above 255 fall back to tuple keys.
    """
    q = system.q
    tail = n - len(prefix)
    if q <= 255:
        deletes = [bytes(a for a in range(1, q + 1) if a not in ch)
                   for ch in system.channels]
        alphabet = bytes(range(1, q + 1))
        head = bytes(prefix)
        seen = set()
        for rest in itertools.product(alphabet, repeat=tail):
            w = head + bytes(rest)
            seen.add(b"\0".join(w.translate(None, d) for d in deletes))
        return seen
    seen = set()
    chans = system.channels
    for rest in itertools.product(range(1, q + 1), repeat=tail):
        w = prefix + rest
        seen.add(tuple(tuple(a for a in w if a in ch) for ch in chans))
    return seen


def count_outputs(system: ChannelSystem, n: int, *, budget: int | None = None,
                  workers: int = 1) -> EnumerationReport:
    """Exact number of distinct output tuples over all q^n words.

    Raises BudgetExceededError when q^n exceeds the budget (default
    DEFAULT_BUDGET states).  With workers > 1 the word space is partitioned
    by prefix and the per-worker key sets are merged by union, so the count
    is identical for any worker count.
    """
    if n < 0:
        raise ValueError(f"block length must be >= 0, got {n}")
    limit = DEFAULT_BUDGET if budget is None else budget
    states = system.q ** n
    if states > limit:
        raise BudgetExceededError(system.q, n, limit)
    start = time.perf_counter()
    if workers > 1 and states >= 4096 and n >= 2:
        count = _count_parallel(system, n, workers)
    else:
        count = len(_key_set(system, n, ()))
    elapsed = time.perf_counter() - start
    # log of the exact power, so a full channel reports a rate of exactly 1.0
    rate = 0.0 if n == 0 else math.log(count) / math.log(system.q ** n)
    return EnumerationReport(n=n, count=count, rate=rate, elapsed=elapsed)


def _count_parallel(system: ChannelSystem, n: int, workers: int) -> int:
    q = system.q
    depth = 1
    while q ** depth < 4 * workers and depth < n:
        depth += 1
    prefixes = list(itertools.product(range(1, q + 1), repeat=depth))
    with multiprocessing.Pool(workers) as pool:
        parts = pool.starmap(_key_set, [(system, n, p) for p in prefixes])
    merged = set().union(*parts)
    return len(merged)


@dataclass(frozen=True)
class CompositionCount:
    """Exact count of output tuples from words of one composition."""

    params: dict
    count: int


def composition_count_sunflower(k: int, p: int, t: int, i: Sequence[int],
                                j1: int) -> CompositionCount:
    """Outputs of (k,p,t)-sunflower words with i[l] letters from petal l and
    j1 core letters:  k^j1 * p^sum(i) * prod_l C(j1 + i[l], i[l]).
    """
    i = tuple(i)
    if len(i) != t:
        raise ValueError(f"need one petal count per channel, got {len(i)} for t={t}")
    if j1 < 0 or any(x < 0 for x in i):
        raise ValueError("composition entries must be >= 0")
    count = k ** j1 * p ** sum(i) * prod(comb(j1 + x, x) for x in i)
    return CompositionCount(params={"k": k, "p": p, "t": t, "i": i, "j1": j1},
                            count=count)


def composition_count_path(a: Sequence[int]) -> CompositionCount:
    """Outputs of path words with a[i] copies of the i-th path letter:
    prod_i C(a[i-1] + a[i], a[i]) over consecutive pairs.
    """
    a = tuple(a)
    if len(a) < 2:
        raise ValueError("a path profile needs at least two letter counts")
    if any(x < 0 for x in a):
        raise ValueError("composition entries must be >= 0")
    count = prod(comb(a[i - 1] + a[i], a[i]) for i in range(1, len(a)))
    return CompositionCount(params={"a": a}, count=count)


class ReconstructionError(ValueError):
    """The pairwise views are not the projections of any single word."""


def reconstruct_view(pair_views: Mapping, channel) -> tuple[int, ...]:
    """Rebuild the projection onto `channel` from all its pairwise views.

    pair_views maps each 2-subset {a, b} of the channel to the projection of
    the word onto {a, b}.  Repeatedly, each nonempty view rules out the pair
    letter that does not come first; the unique letter never ruled out is
    the next symbol, and its first occurrence is dropped from every view
    containing it.  Inconsistent views raise ReconstructionError.
    """
    letters = sorted(set(channel))
    if len(letters) < 2:
        raise ValueError("reconstruction needs a channel of at least 2 letters")
    pairs = [(a, b) for a, b in itertools.combinations(letters, 2)]
    normalized = {frozenset(key): tuple(word) for key, word in pair_views.items()}
    if len(normalized) != len(pair_views):
        raise ReconstructionError("duplicate pair keys in the views")
    views: dict[tuple[int, int], list[int]] = {}
    for pair in pairs:
        key = frozenset(pair)
        if key not in normalized:
            raise ReconstructionError(f"missing view for pair {pair}")
        word = normalized.pop(key)
        bad = [s for s in word if s not in pair]
        if bad:
            raise ReconstructionError(
                f"view for pair {pair} contains foreign symbol {bad[0]}")
        views[pair] = list(word)
    if normalized:
        extra = tuple(sorted(next(iter(normalized))))
        raise ReconstructionError(f"view for {extra} is not a pair of the channel")

    remaining: dict[int, int] = {}
    for a in letters:
        counts = {pair: views[pair].count(a) for pair in pairs if a in pair}
        values = set(counts.values())
        if len(values) > 1:
            raise ReconstructionError(
                f"letter {a} occurs a different number of times across views")
        remaining[a] = values.pop()

    out = []
    total = sum(remaining.values())
    for _ in range(total):
        ruled_out = set()
        for (a, b), v in views.items():
            if v:
                ruled_out.add(b if v[0] == a else a)
        survivors = [a for a in letters if remaining[a] and a not in ruled_out]
        if len(survivors) != 1:
            raise ReconstructionError(
                "elimination left no viable next symbol" if not survivors
                else f"elimination left several candidates: {survivors}")
        z = survivors[0]
        out.append(z)
        remaining[z] -= 1
        for pair in pairs:
            if z in pair:
                v = views[pair]
                v.pop(v.index(z))
    return tuple(out)


def verify_pairs_equality(system: ChannelSystem, n: int, *,
                          budget: int | None = None, workers: int = 1) -> bool:
    """Whether the system and its pairs-graph edge system have equal counts.

    For an irreducible system with t >= 2 channels the two counts agree for
    every n; this checks one n exhaustively.
    """
    if system.t < 2:
        raise ValueError("pairs equality needs at least two channels")
    if remove_dominated(system) != system or len(separable_split(system)) > 1:
        raise ValueError("pairs equality expects an irreducible system; "
                         "reduce and split it first")
    edges = edge_system(pairs_graph(system))
    a = count_outputs(system, n, budget=budget, workers=workers).count
    b = count_outputs(edges, n, budget=budget, workers=workers).count
    return a == b


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[EnumerationReport, ...]
    truncated: bool


def empirical_rate_sweep(system: ChannelSystem, n_max: int, *,
                         budget: int | None = None,
                         workers: int = 1) -> SweepResult:
    """Reports for n = 1..n_max, stopping early if the budget cuts in."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    reports = []
    for n in range(1, n_max + 1):
        try:
            reports.append(count_outputs(system, n, budget=budget, workers=workers))
        except BudgetExceededError:
            return SweepResult(tuple(reports), truncated=True)
    return SweepResult(tuple(reports), truncated=False)
