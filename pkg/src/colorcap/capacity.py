"""Exact capacities of structured channel systems.

Capacity is measured in alphabet units: ccap = limsup (1/n) log_q of the
number of distinguishable output tuples of length-n words, so a lossless
system has capacity 1.  The closed forms below come from optimizing the
exponential growth rate over the composition (letter-frequency profile) of
the input words; each result carries the optimizing profile as a witness.

All logarithms in base q are computed as ln(x)/ln(q) in double precision.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field

from .channels import ChannelSystem
from .systems import (
    Cycle, FullClique, Path, SingleChannel, Sunflower, TwoSets,
    classify, remove_dominated, separable_split,
)


def entropy(x: float) -> float:
    """Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _logq(x: float, q: int) -> float:
    return math.log(x) / math.log(q)


def chebyshev_U(i: int, x):
    """Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x.

    The recurrence U_i = 2x U_{i-1} - U_{i-2} is evaluated in the arithmetic
    of x, so integer (or Fraction) inputs stay exact.
    """
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    u_prev = x * 0 + 1
    if i == 0:
        return u_prev
    u = 2 * x
    for _ in range(i - 1):
        u_prev, u = u, 2 * x * u - u_prev
    return u


def chebyshev_W(i: int, x):
    """Chebyshev polynomial of the fourth kind, W_i = U_i + U_{i-1}."""
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    if i == 0:
        return x * 0 + 1
    return chebyshev_U(i, x) + chebyshev_U(i - 1, x)


@dataclass(frozen=True)
class CapacityResult:
    """Either an exact capacity or a [lower, upper] sandwich, with witness."""

    kind: str  # "exact" | "bounds"
    method: str
    value: float | None = None
    lower: float | None = None
    upper: float | None = None
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        eps = 1e-9
        if self.kind == "exact":
            if self.value is None or not -eps <= self.value <= 1 + eps:
                raise ValueError(f"exact capacity outside [0, 1]: {self.value}")
        elif self.kind == "bounds":
            if self.lower is None or self.upper is None:
                raise ValueError("bounds result needs both endpoints")
            if not -eps <= self.lower <= self.upper + eps or self.upper > 1 + eps:
                raise ValueError(f"bad interval [{self.lower}, {self.upper}]")
        else:
            raise ValueError(f"kind must be 'exact' or 'bounds', got {self.kind!r}")

    def interval(self) -> tuple[float, float]:
        if self.kind == "exact":
            return (self.value, self.value)
        return (self.lower, self.upper)

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind, "method": self.method}
        if self.kind == "exact":
            out["value"] = self.value
        else:
            out["lower"] = self.lower
            out["upper"] = self.upper
        out["witness"] = self.witness
        return out


def capacity_single(size: int, q: int) -> CapacityResult:
    """A single channel of the given size transmits log_q(size) exactly."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not 1 <= size <= q:
        raise ValueError(f"channel size must lie in 1..{q}, got {size}")
    return CapacityResult("exact", "single_channel", value=_logq(size, q),
                          witness={"size": size})


def capacity_sunflower(k: int, p: int, t: int, q: int) -> CapacityResult:
    """Capacity of a (k, p, t)-sunflower: t channels of size k+p whose
    pairwise intersections all equal a common core of size k.

    The value is g(y*) for
        g(y) = (1-y) log_q k + y log_q p
               + (t - (t-1)y) H(y / (t - (t-1)y)) log_q 2,
    where y* is the unique root in (0, 1) of
        p t (1-y)^t  =  k y (1 - (t-1)y/t)^(t-1),
    i.e. the stationary point of the strictly concave g.  y is the fraction
    of input symbols drawn from the petals.
    """
    if min(k, p, t) < 1:
        raise ValueError(f"need k, p, t >= 1, got ({k}, {p}, {t})")
    if k + t * p > q:
        raise ValueError(f"a ({k},{p},{t})-sunflower needs {k + t * p} letters, "
                         f"alphabet has {q}")

    def slope_sign(y: float) -> float:
        # ln of  p t (1-y)^t / (k y (1 - (t-1)y/t)^(t-1)),  same sign as g'(y)
        return (math.log(p * t) + t * math.log1p(-y) - math.log(k)
                - math.log(y) - (t - 1) * math.log(1 - (t - 1) * y / t))

    lo, hi = 1e-15, 1.0 - 1e-15
    for _ in range(200):
        if hi - lo <= 1e-14:
            break
        mid = (lo + hi) / 2.0
        if slope_sign(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    y = (lo + hi) / 2.0
    denom = t - (t - 1) * y
    value = ((1 - y) * _logq(k, q) + y * _logq(p, q)
             + denom * entropy(y / denom) * _logq(2, q))
    return CapacityResult("exact", "sunflower", value=value,
                          witness={"k": k, "p": p, "t": t, "y_star": y})


def capacity_two_sets(k: int, p1: int, p2: int, q: int) -> CapacityResult:
    """Capacity of a pair of channels with core size k and petal sizes p1, p2.

    The optimum of
        M(x1, x2) = (1-x1-x2) log_q k + x1 log_q p1 + x2 log_q p2
                    + (1-x2) H(x1/(1-x2)) log_q 2 + (1-x1) H(x2/(1-x1)) log_q 2
    is attained in closed form at
        x_i* = 1/2 - (k + p_j - p_i) / (2 sqrt((k+p1+p2)^2 - 4 p1 p2)),
    where x_i is the input fraction of petal-i letters.
    """
    if min(k, p1, p2) < 1:
        raise ValueError(f"need k, p1, p2 >= 1, got ({k}, {p1}, {p2})")
    if k + p1 + p2 > q:
        raise ValueError(f"two sets with parameters ({k},{p1},{p2}) need "
                         f"{k + p1 + p2} letters, alphabet has {q}")
    disc = math.sqrt((k + p1 + p2) ** 2 - 4 * p1 * p2)
    x1 = 0.5 - (k + p2 - p1) / (2 * disc)
    x2 = 0.5 - (k + p1 - p2) / (2 * disc)
    value = ((1 - x1 - x2) * _logq(k, q) + x1 * _logq(p1, q) + x2 * _logq(p2, q)
             + (1 - x2) * entropy(x1 / (1 - x2)) * _logq(2, q)
             + (1 - x1) * entropy(x2 / (1 - x1)) * _logq(2, q))
    return CapacityResult("exact", "two_sets", value=value,
                          witness={"k": k, "p1": p1, "p2": p2,
                                   "x1_star": x1, "x2_star": x2})


def path_profile(t: int) -> tuple[float, list[float], list[float]]:
    """Optimizing profile (m*, r*, alpha*) for a path of t channels.

        m* = 2 + 2 cos(2 pi / (t+3))
        r*_0 = m* - 1,   r*_i = ((m*-1) r*_{i-1} - 1) / (r*_{i-1} + 1)
        alpha*_i  proportional to  prod_{j<i} r*_j,  normalized to sum 1.

    alpha*_i is the optimal input frequency of the i-th path letter; the
    ratios satisfy r*_{t-1} = 1/(m* - 1) at the far endpoint.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    m = 2.0 + 2.0 * math.cos(2.0 * math.pi / (t + 3))
    r = [m - 1.0]
    for _ in range(t - 1):
        r.append(((m - 1.0) * r[-1] - 1.0) / (r[-1] + 1.0))
    prods = [1.0]
    for ri in r:
        prods.append(prods[-1] * ri)
    total = math.fsum(prods)
    alpha = [pr / total for pr in prods]
    return m, r, alpha


def capacity_path(t: int, q: int) -> CapacityResult:
    """Capacity of a path of t channels {s0,s1}, ..., {s_{t-1},s_t}.

    With the profile from path_profile, the value is
        sum_i (alpha*_{i-1} + alpha*_i) H(alpha*_i / (alpha*_{i-1} + alpha*_i)) log_q 2,
    which also equals log_q(m*).  A 2-path is a (1,1,2)-sunflower and the
    same expression applies.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    if t + 1 > q:
        raise ValueError(f"a path of {t} channels needs {t + 1} letters, "
                         f"alphabet has {q}")
    m, r, alpha = path_profile(t)
    value = math.fsum(
        (alpha[i - 1] + alpha[i]) * entropy(alpha[i] / (alpha[i - 1] + alpha[i]))
        for i in range(1, t + 1)
    ) * _logq(2, q)
    return CapacityResult("exact", "path", value=value,
                          witness={"t": t, "m_star": m, "r_star": r,
                                   "alpha_star": alpha})


def _removed_channels(original: ChannelSystem, reduced: ChannelSystem) -> list:
    remaining = list(reduced.channels)
    removed = []
    for ch in original.channels:
        if ch in remaining:
            remaining.remove(ch)
        else:
            removed.append(ch)
    return removed


def _dispatch(system: ChannelSystem, leaf_fn) -> CapacityResult:
    """Reduce, split, recurse, and combine component results by the max rule.

    leaf_fn handles an irreducible system.  Component results combine into
    an exact maximum when all are exact, otherwise into the interval of the
    pointwise maxima.  The witness records the reduction chain.
    """
    reduced = remove_dominated(system)
    removed = _removed_channels(system, reduced)
    components = separable_split(reduced)

    if len(components) > 1:
        parts = [_dispatch(c, leaf_fn) for c in components]
        lowers = [p.interval()[0] for p in parts]
        uppers = [p.interval()[1] for p in parts]
        winner = max(range(len(parts)), key=lambda i: lowers[i])
        witness = {"components": [p.as_dict() for p in parts], "winner": winner}
        if removed:
            witness["removed_channels"] = [sorted(c) for c in removed]
        if all(p.kind == "exact" for p in parts):
            return CapacityResult("exact", "separable", value=max(lowers),
                                  witness=witness)
        return CapacityResult("bounds", "separable", lower=max(lowers),
                              upper=max(uppers), witness=witness)

    result = leaf_fn(components[0])
    if removed:
        witness = dict(result.witness)
        witness["removed_channels"] = [sorted(c) for c in removed]
        result = dataclasses.replace(result, witness=witness)
    return result


def _capacity_leaf(leaf: ChannelSystem) -> CapacityResult:
    from .bounds import bounds_cycle, bounds_general

    cls = classify(leaf)
    if isinstance(cls, SingleChannel):
        return capacity_single(cls.size, leaf.q)
    if isinstance(cls, FullClique):
        return CapacityResult("exact", "full_clique", value=1.0,
                              witness={"q": leaf.q})
    if isinstance(cls, TwoSets):
        return capacity_two_sets(cls.k, cls.p1, cls.p2, leaf.q)
    if isinstance(cls, Sunflower):
        return capacity_sunflower(cls.k, cls.p, cls.t, leaf.q)
    if isinstance(cls, Path):
        return capacity_path(cls.t, leaf.q)
    if isinstance(cls, Cycle):
        return bounds_cycle(cls.t, leaf.q)
    return bounds_general(leaf)


def capacity(system: ChannelSystem) -> CapacityResult:
    """Best known capacity statement for an arbitrary system.

    Dominated channels are dropped, separable systems take the maximum over
    their components, and the irreducible core dispatches on its structural
    class: exact formulas where one exists, interval bounds otherwise.
    """
    return _dispatch(system, _capacity_leaf)
