"""Symmetric-subspace simulator: definitions, invariants, hand examples."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercube_walk import walk


def test_start_state_n5():
    state = walk.start_state(5)
    assert state.alpha_right.tolist() == [1, 0, 0, 0, 0, 0]
    assert state.alpha_left.tolist() == [0, 0, 0, 0, 0, 0]


def test_start_state_n1():
    state = walk.start_state(1)
    assert state.alpha_right.tolist() == [1, 0]
    assert state.alpha_left.tolist() == [0, 0]


@pytest.mark.parametrize("n", [1, 2, 7, 33, 60])
def test_start_state_normalized(n):
    assert walk.start_state(n).norm_sq() == pytest.approx(1.0, abs=1e-15)


def test_start_state_rejects_zero():
    with pytest.raises(ValueError):
        walk.start_state(0)


def test_walk_params_validation():
    with pytest.raises(ValueError):
        walk.WalkParams(0, 5)
    with pytest.raises(ValueError):
        walk.WalkParams(3, -1)


def test_coin_n2_w1_is_swap():
    assert walk.coin_matrix(2, 1).tolist() == [[0, 1], [1, 0]]


def test_coin_n2_w0_degenerate():
    assert walk.coin_matrix(2, 0).tolist() == [[1, 0], [0, -1]]


def test_coin_n4_w1():
    expected = np.array([[0.5, np.sqrt(3) / 2], [np.sqrt(3) / 2, -0.5]])
    assert np.allclose(walk.coin_matrix(4, 1), expected, atol=1e-15)


def test_coin_rejects_out_of_range():
    with pytest.raises(ValueError):
        walk.coin_matrix(4, -1)
    with pytest.raises(ValueError):
        walk.coin_matrix(4, 5)


def test_coin_orthogonal_up_to_n100():
    for n in range(1, 101):
        for w in range(n + 1):
            c = walk.coin_matrix(n, w)
            assert np.max(np.abs(c @ c.T - np.eye(2))) < 1e-14


def test_step_n2_hand_calculation():
    state = walk.step(walk.start_state(2))
    assert state.alpha_left[1] == pytest.approx(1.0, abs=1e-15)
    assert abs(state.alpha_right).max() == 0.0
    state = walk.step(state)
    assert state.alpha_left[2] == pytest.approx(1.0, abs=1e-15)
    assert walk.level_probability(state, 0) == 0.0


@settings(deadline=None, max_examples=30)
@given(
    n=st.integers(min_value=1, max_value=25),
    seed=st.integers(min_value=0, max_value=2**31 - 1),
)
def test_step_preserves_norm_of_random_states(n, seed):
    rng = np.random.default_rng(seed)
    alpha_right = rng.standard_normal(n + 1)
    alpha_left = rng.standard_normal(n + 1)
    alpha_right[n] = 0.0
    alpha_left[0] = 0.0
    scale = np.sqrt(alpha_right @ alpha_right + alpha_left @ alpha_left)
    state = walk.SymmetricState(n, alpha_right / scale, alpha_left / scale)
    stepped = walk.step(state)
    assert stepped.norm_sq() == pytest.approx(1.0, abs=1e-12)


def test_norm_preserved_along_long_trajectory():
    state = walk.start_state(50)
    for _ in range(200):
        state = walk.step(state)
    assert state.norm_sq() == pytest.approx(1.0, abs=1e-12)


def test_level_probability_examples():
    assert walk.level_probability(walk.start_state(7), 0) == 1.0
    states = walk.trajectory(2, 2)
    assert walk.level_probability(states[2], 2) == pytest.approx(1.0, abs=1e-15)
    assert walk.level_probability(states[2], 0) == 0.0
    with pytest.raises(ValueError):
        walk.level_probability(states[2], 3)


def test_level_probabilities_sum_to_one():
    for state in walk.trajectory(13, 40):
        assert walk.level_probabilities(state).sum() == pytest.approx(1.0, abs=1e-12)


def test_vertex_probability_divides_by_binomial():
    states = walk.trajectory(6, 9)
    for state in states:
        levels = walk.level_probabilities(state)
        for w in range(7):
            from math import comb

            assert walk.vertex_probability(state, w) == pytest.approx(
                levels[w] / comb(6, w), abs=1e-15
            )


def test_parity_levels_bitwise_zero():
    for t, state in enumerate(walk.trajectory(9, 25)):
        levels = walk.level_probabilities(state)
        off_parity = levels[np.arange(10) % 2 != t % 2]
        assert np.all(off_parity == 0.0)


def test_unreachable_levels_bitwise_zero():
    for t, state in enumerate(walk.trajectory(14, 10)):
        levels = walk.level_probabilities(state)
        assert np.all(levels[t + 1:] == 0.0)


def test_scan_n2_max_probabilities():
    profile = walk.scan(walk.WalkParams(2, 2))
    assert [row.max_vertex_prob for row in profile] == pytest.approx([1.0, 0.5, 1.0])
    assert [row.argmax_w for row in profile] == [0, 1, 2]


def test_scan_t0_row():
    row = walk.scan(walk.WalkParams(17, 0))[0]
    assert row.t == 0 and row.p0 == 1.0 and row.max_vertex_prob == 1.0 and row.argmax_w == 0


def test_scan_n50_minimum_location_and_depth():
    profile = walk.scan(walk.WalkParams(50, 100))
    t_best, p_best = walk.t_min(profile)
    assert abs(t_best - (-0.754 + 0.849 * 50)) <= 2
    assert 1e-15 <= p_best <= 1e-13
    assert p_best <= 5 * 1.93**-50


def test_t_min_tie_breaks_to_first():
    rows = [walk.ProbabilityProfile(t, 1.0, 0.5, 0) for t in range(4)]
    assert walk.t_min(rows) == (0, 0.5)


def test_t_min_parity_filter():
    profile = walk.scan(walk.WalkParams(12, 30))
    t_even, _ = walk.t_min(profile, parity="even")
    t_odd, _ = walk.t_min(profile, parity="odd")
    assert t_even % 2 == 0 and t_odd % 2 == 1
    with pytest.raises(ValueError):
        walk.t_min(profile, parity="bogus")
    with pytest.raises(ValueError):
        walk.t_min([])


def test_lemma1_chain_inequalities_hold_on_trajectories():
    from hypercube_walk import bounds

    for n in (3, 5, 8, 12, 20):
        coin_margin, shift_margin = bounds.lemma1_chain_margins(n, t_max=25)
        assert coin_margin >= -1e-15
        assert shift_margin >= -1e-15
