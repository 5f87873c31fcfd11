"""Capacity bounds where no exact formula is known.

For an irreducible system the clique number of the pairs graph sandwiches
the capacity: a clique of co-occurring letters is transmitted losslessly,
and a counting argument caps the rate at log_q(omega * t * e).  Cycles of
2-set channels get a tailored sandwich: the cycle contains a path (lower)
and its pairs graph sits inside a (2,1,2)-sunflower's (upper).
"""

from __future__ import annotations

import math

from .capacity import (
    CapacityResult, _dispatch, _logq, capacity_path, capacity_single, entropy,
)
from .channels import ChannelSystem
from .systems import (
    Cycle, FullClique, SingleChannel, classify, max_clique, pairs_graph,
    remove_dominated, separable_split,
)


def bounds_general(system: ChannelSystem) -> CapacityResult:
    """Clique-number sandwich log_q(omega) <= ccap <= log_q(omega * t * e).

    Requires an irreducible system with at least two channels.  The upper
    end is clamped to 1, the trivial cap for any system.
    """
    if system.t < 2:
        raise ValueError("general bounds need at least two channels")
    if remove_dominated(system) != system or len(separable_split(system)) > 1:
        raise ValueError("general bounds expect an irreducible system; "
                         "reduce and split it first")
    clique = max_clique(pairs_graph(system))
    omega = len(clique)
    lower = _logq(omega, system.q)
    upper = min(1.0, _logq(omega * system.t * math.e, system.q))
    return CapacityResult("bounds", "general", lower=lower, upper=upper,
                          witness={"omega": omega, "clique": sorted(clique),
                                   "t": system.t})


def bounds_cycle(t: int, q: int) -> CapacityResult:
    """Sandwich for a cycle of t >= 4 channels {s0,s1}, ..., {s_{t-1},s0}.

    Lower: the cycle contains a path of t-1 channels.  Upper: for t = 4 the
    pairs graph embeds in a (2,1,2)-sunflower's, giving the exact constant
        (1/sqrt(3) + (1 + 1/sqrt(3)) H(2 - sqrt(3))) log_q 2,
    and for t >= 5 the four-letter alphabet of any window caps the rate at
    log_q 4.
    """
    if t < 4:
        raise ValueError("a cycle of 3 channels has a complete pairs graph; "
                         "classify the system instead of bounding it")
    if t > q:
        raise ValueError(f"a cycle of {t} channels needs {t} letters, "
                         f"alphabet has {q}")
    path = capacity_path(t - 1, q)
    if t == 4:
        s = math.sqrt(3.0)
        upper = (1.0 / s + (1.0 + 1.0 / s) * entropy(2.0 - s)) * _logq(2, q)
    else:
        upper = _logq(4, q)
    return CapacityResult("bounds", "cycle", lower=path.value, upper=upper,
                          witness={"t": t, "lower_path": path.witness})


def bounds(system: ChannelSystem) -> CapacityResult:
    """Sandwich for an arbitrary system, ignoring exact structural formulas.

    Same reduction chain as capacity(): dominated channels are dropped and
    separable components combine by the max rule.  Each irreducible core is
    bounded by its clique sandwich (cycles get the tailored one); single
    channels and covering designs are lossless cases reported exactly.
    """

    def leaf(core: ChannelSystem) -> CapacityResult:
        cls = classify(core)
        if isinstance(cls, SingleChannel):
            return capacity_single(cls.size, core.q)
        if isinstance(cls, FullClique):
            return CapacityResult("exact", "full_clique", value=1.0,
                                  witness={"q": core.q})
        if isinstance(cls, Cycle):
            return bounds_cycle(cls.t, core.q)
        return bounds_general(core)

    return _dispatch(system, leaf)


def subgraph_monotonic_check(small: ChannelSystem, large: ChannelSystem, n: int,
                             *, budget: int | None = None,
                             workers: int = 1) -> bool:
    """Whether the smaller system's output count is <= the larger's at length n.

    Requires the two systems to share an alphabet with pairs_graph(small) a
    subgraph of pairs_graph(large); the count comparison is then expected to
    hold for every n.
    """
    from .oracle import count_outputs

    if small.q != large.q:
        raise ValueError(f"alphabets differ: {small.q} vs {large.q}")
    if not pairs_graph(small).edges <= pairs_graph(large).edges:
        raise ValueError("first system's pairs graph is not a subgraph "
                         "of the second's")
    a = count_outputs(small, n, budget=budget, workers=workers).count
    b = count_outputs(large, n, budget=budget, workers=workers).count
    return a <= b
