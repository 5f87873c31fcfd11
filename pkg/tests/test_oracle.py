import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorcap import (
    BudgetExceededError,
    ChannelSystem,
    ReconstructionError,
    apply_channel,
    composition_count_path,
    composition_count_sunflower,
    count_outputs,
    edge_system,
    empirical_rate_sweep,
    pairs_graph,
    reconstruct_view,
    remove_dominated,
    restrict_alphabet,
    separable_split,
    verify_pairs_equality,
)


def _compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def test_count_small_examples():
    assert count_outputs(ChannelSystem(3, [[1, 3], [2, 3]]), 2).count == 8
    assert count_outputs(ChannelSystem(2, [[1, 2]]), 5).count == 32
    assert count_outputs(ChannelSystem(4, [[1, 2, 3, 4]]), 0).count == 1


def test_count_two_singletons():
    # only the multiplicity pair (#1s, #2s) survives, so n+1 outputs
    system = ChannelSystem(2, [[1], [2]])
    for n in range(9):
        assert count_outputs(system, n).count == n + 1


def test_count_rate_and_elapsed():
    report = count_outputs(ChannelSystem(3, [[1, 3], [2, 3]]), 5)
    assert report.n == 5
    assert math.isclose(
        report.rate, math.log(report.count) / (5 * math.log(3)), abs_tol=1e-15
    )
    assert report.elapsed >= 0
    assert count_outputs(ChannelSystem(3, [[1, 2]]), 0).rate == 0.0


def test_count_rejects_negative_n():
    with pytest.raises(ValueError):
        count_outputs(ChannelSystem(2, [[1, 2]]), -1)


def test_budget_refusal():
    with pytest.raises(BudgetExceededError) as info:
        count_outputs(ChannelSystem(4, [[1, 2]]), 30, budget=10**6)
    assert info.value.states == 4**30
    assert info.value.limit == 10**6


def test_worker_invariance():
    system = ChannelSystem(4, [[1, 2], [2, 3], [3, 4], [4, 1]])
    serial = count_outputs(system, 7, workers=1)
    for workers in (2, 3, 5):
        assert count_outputs(system, 7, workers=workers).count == serial.count


def test_dominated_removal_count_invariance():
    system = ChannelSystem(4, [[1, 2], [1, 2, 3], [3, 4]])
    reduced = remove_dominated(system)
    assert reduced.t == 2
    for n in range(7):
        assert (
            count_outputs(system, n).count == count_outputs(reduced, n).count
        )


def test_monotone_in_added_channel():
    # a finer system can only distinguish more
    base = ChannelSystem(4, [[1, 2], [3, 4]])
    finer = ChannelSystem(4, [[1, 2], [3, 4], [2, 3]])
    for n in range(1, 7):
        assert count_outputs(base, n).count <= count_outputs(finer, n).count


# pairs-graph equality


def _irreducible_families(q):
    letters = list(range(1, q + 1))
    subsets = []
    for r in range(1, q + 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(letters, r))
    out = []
    for tsize in range(2, len(subsets) + 1):
        for combo in itertools.combinations(subsets, tsize):
            if any(a < b or b < a for a, b in itertools.combinations(combo, 2)):
                continue
            system = ChannelSystem(q, combo)
            if len(separable_split(system)) > 1:
                continue
            out.append(system)
    return out


def test_pairs_equality_exhaustive_q3():
    families = _irreducible_families(3)
    assert len(families) == 4
    for system in families:
        for n in range(1, 9):
            assert verify_pairs_equality(system, n)


def test_pairs_equality_named_q4_systems():
    for channels in (
        [[1, 2, 3], [2, 3, 4]],
        [[1, 2], [2, 3], [3, 4], [4, 1]],
        [[1, 2], [1, 3], [1, 4]],
        [[1, 2, 3], [1, 3, 4]],
    ):
        system = ChannelSystem(4, channels)
        for n in range(1, 9):
            assert verify_pairs_equality(system, n)


def test_pairs_equality_rejects_reducible():
    with pytest.raises(ValueError):
        verify_pairs_equality(ChannelSystem(3, [[1], [1, 2]]), 3)
    with pytest.raises(ValueError):
        verify_pairs_equality(ChannelSystem(4, [[1, 2], [3, 4]]), 3)


def test_edge_system_counts_differ_before_reduction_boundary():
    # sanity: the equality is a fact about views, not a tautology; the
    # two systems have different channel counts yet identical output counts
    system = ChannelSystem(4, [[1, 2, 3], [2, 3, 4]])
    edges = edge_system(pairs_graph(system))
    assert edges.t == 5
    assert count_outputs(system, 6).count == count_outputs(edges, 6).count


# composition counting


def test_composition_count_sunflower_examples():
    # one core letter, two single-letter petals: C(j1+i1,i1) C(j1+i2,i2)
    assert composition_count_sunflower(1, 1, 2, (1, 1), 1).count == 4
    assert composition_count_sunflower(2, 3, 2, (0, 0), 2).count == 4
    assert composition_count_sunflower(1, 2, 3, (1, 0, 2), 1).count == 2**3 * 2 * 3


def test_composition_count_sunflower_validation():
    with pytest.raises(ValueError):
        composition_count_sunflower(1, 1, 2, (1,), 1)
    with pytest.raises(ValueError):
        composition_count_sunflower(1, 1, 2, (1, -1), 1)


def test_composition_count_path_examples():
    assert composition_count_path((1, 1)).count == 2
    assert composition_count_path((2, 1, 2)).count == 3 * 3
    with pytest.raises(ValueError):
        composition_count_path((3,))


def _sunflower_sum(k, p, t, n):
    total = 0
    for j1 in range(n + 1):
        for i in _compositions(n - j1, t):
            total += composition_count_sunflower(k, p, t, i, j1).count
    return total


def _path_sum(t, n):
    return sum(
        composition_count_path(a).count for a in _compositions(n, t + 1)
    )


def test_sunflower_composition_sum_matches_oracle():
    star = ChannelSystem(3, [[1, 2], [1, 3]])
    wide = ChannelSystem(4, [[1, 2, 3], [1, 2, 4]])
    for n in range(9):
        assert _sunflower_sum(1, 1, 2, n) == count_outputs(star, n).count
        assert _sunflower_sum(2, 1, 2, n) == count_outputs(wide, n).count


def test_path_composition_sum_matches_oracle():
    system = ChannelSystem(4, [[1, 2], [2, 3], [3, 4]])
    for n in range(9):
        assert _path_sum(3, n) == count_outputs(system, n).count


def test_composition_sum_three_petals():
    system = ChannelSystem(4, [[1, 2], [1, 3], [1, 4]])
    for n in range(7):
        assert _sunflower_sum(1, 1, 3, n) == count_outputs(system, n).count


# sweep


def test_sweep_full_channel_rate_one():
    sweep = empirical_rate_sweep(ChannelSystem(3, [[1, 2, 3]]), 6)
    assert not sweep.truncated
    assert [r.rate for r in sweep.reports] == [1.0] * 6


def test_sweep_truncates_at_budget():
    sweep = empirical_rate_sweep(
        ChannelSystem(3, [[1], [2]]), 12, budget=3**5
    )
    assert sweep.truncated
    assert [r.n for r in sweep.reports] == [1, 2, 3, 4, 5]
    assert [r.count for r in sweep.reports] == [3, 6, 10, 15, 21]


def test_sweep_rates_bounded_by_exact_value():
    # finite-n rates of the 3-path stay below capacity + slack; purely
    # observational, no convergence claimed
    system = ChannelSystem(4, [[1, 2], [2, 3], [3, 4]])
    sweep = empirical_rate_sweep(system, 8)
    assert all(r.rate <= 1.0 for r in sweep.reports)


# separable convolution


def _restricted_counts(component, n):
    if len(component.letters) < 2:
        return [1] * (n + 1)
    small = restrict_alphabet(component)
    return [count_outputs(small, i).count for i in range(n + 1)]


def _convolution_check(system, n):
    parts = separable_split(system)
    assert len(parts) == 2
    t1 = _restricted_counts(parts[0], n)
    t2 = _restricted_counts(parts[1], n)
    expected = sum(t1[i] * t2[n - i] for i in range(n + 1))
    return expected == count_outputs(system, n).count


def test_convolution_two_singletons():
    assert _convolution_check(ChannelSystem(2, [[1], [2]]), 5)


def test_convolution_pair_components():
    system = ChannelSystem(4, [[1, 2], [3, 4]])
    for n in range(8):
        assert _convolution_check(system, n)


def test_convolution_random_systems():
    rng = random.Random(20240817)
    for trial in range(20):
        q = rng.randint(3, 6)
        letters = list(range(1, q + 1))
        rng.shuffle(letters)
        cut = rng.randint(1, q - 1)
        groups = [letters[:cut], letters[cut:]]
        channels = []
        for group in groups:
            if len(group) == 1:
                channels.append(group)
                continue
            # a chain keeps the group connected and covered
            for i in range(len(group) - 1):
                channels.append(group[i : i + 2])
            for _ in range(rng.randint(0, 2)):
                size = rng.randint(1, len(group))
                channels.append(rng.sample(group, size))
        rng.shuffle(channels)
        system = ChannelSystem(q, channels)
        n = rng.randint(1, 7)
        assert _convolution_check(system, n), (q, channels, n)


def test_convolution_requires_every_letter_in_a_channel():
    # with a channel-free letter the word can hide symbols, and the identity
    # genuinely fails; this pins the precondition
    system = ChannelSystem(3, [[1], [2]])  # letter 3 invisible
    parts = separable_split(system)
    t1 = _restricted_counts(parts[0], 2)
    t2 = _restricted_counts(parts[1], 2)
    convolution = sum(t1[i] * t2[2 - i] for i in range(3))
    assert count_outputs(system, 2).count > convolution


# reconstruction


def test_reconstruct_three_letter_example():
    views = {
        frozenset({1, 2}): (1, 2),
        frozenset({1, 3}): (1, 3),
        frozenset({2, 3}): (2, 3),
    }
    assert reconstruct_view(views, frozenset({1, 2, 3})) == (1, 2, 3)


def test_reconstruct_single_pair_is_identity():
    views = {frozenset({1, 2}): (2, 1, 2, 1)}
    assert reconstruct_view(views, frozenset({1, 2})) == (2, 1, 2, 1)


def test_reconstruct_documented_round_trip():
    x = (3, 1, 2, 1)
    channel = frozenset({1, 2, 3})
    views = {
        frozenset(p): apply_channel(x, frozenset(p))
        for p in itertools.combinations(sorted(channel), 2)
    }
    assert views[frozenset({1, 2})] == (1, 2, 1)
    assert views[frozenset({1, 3})] == (3, 1, 1)
    assert views[frozenset({2, 3})] == (3, 2)
    assert reconstruct_view(views, channel) == x


def test_reconstruct_missing_view():
    with pytest.raises(ReconstructionError, match="missing view"):
        reconstruct_view({frozenset({1, 2}): (1, 2)}, frozenset({1, 2, 3}))


def test_reconstruct_count_mismatch():
    views = {
        frozenset({1, 2}): (1, 2),
        frozenset({1, 3}): (1, 1, 3),  # two 1s here, one elsewhere
        frozenset({2, 3}): (2, 3),
    }
    with pytest.raises(ReconstructionError):
        reconstruct_view(views, frozenset({1, 2, 3}))


def test_reconstruct_cyclic_inconsistency():
    # pairwise orders 1<2, 2<3, 3<1 admit no word
    views = {
        frozenset({1, 2}): (1, 2),
        frozenset({2, 3}): (2, 3),
        frozenset({1, 3}): (3, 1),
    }
    with pytest.raises(ReconstructionError):
        reconstruct_view(views, frozenset({1, 2, 3}))


def test_reconstruct_foreign_symbol():
    views = {
        frozenset({1, 2}): (1, 9),
        frozenset({1, 3}): (1,),
        frozenset({2, 3}): (9,),
    }
    with pytest.raises(ReconstructionError):
        reconstruct_view(views, frozenset({1, 2, 3}))


@settings(max_examples=60)
@given(st.lists(st.integers(1, 4), max_size=24).map(tuple), st.data())
def test_reconstruct_round_trip_property(x, data):
    size = data.draw(st.integers(2, 4))
    channel = frozenset(
        data.draw(
            st.permutations(range(1, 5)).map(lambda p: tuple(p[:size]))
        )
    )
    views = {
        frozenset(p): apply_channel(x, frozenset(p))
        for p in itertools.combinations(sorted(channel), 2)
    }
    assert reconstruct_view(views, channel) == apply_channel(x, channel)
