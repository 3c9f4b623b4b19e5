"""Learning automaton initialization, selection, and reinforcement updates."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aiopt import ConfigError, LearningAutomaton
from aiopt.automata import PENALTY, REWARD


def automaton(probabilities, a=0.1, b=0.1):
    auto = LearningAutomaton(len(probabilities), a, b)
    auto.probabilities[:] = probabilities
    return auto


# ------------------------------------------------------------- construction

def test_two_action_uniform_start():
    auto = LearningAutomaton(2, 0.1, 0.1)
    np.testing.assert_array_equal(auto.probabilities, [0.5, 0.5])
    assert auto.scheme == "L_RP"


def test_four_action_reward_inaction():
    auto = LearningAutomaton(4, 0.1, 0.0)
    np.testing.assert_array_equal(auto.probabilities, [0.25] * 4)
    assert auto.scheme == "L_RI"


def test_reward_epsilon_penalty_label():
    assert LearningAutomaton(3, 0.5, 0.01).scheme == "L_ReP"


@pytest.mark.parametrize("r, a, b", [(1, 0.1, 0.1), (0, 0.1, 0.1), (2, -0.1, 0.1),
                                     (2, 0.1, 1.5), (2, 2.0, 0.1)])
def test_invalid_construction_rejected(r, a, b):
    with pytest.raises(ConfigError):
        LearningAutomaton(r, a, b)


# ---------------------------------------------------------------- selection

def test_degenerate_distribution_always_selected():
    rng = np.random.default_rng(3)
    first = automaton([1.0, 0.0])
    last = automaton([0.0, 0.0, 1.0])
    assert all(first.select_action(rng) == 0 for _ in range(200))
    assert all(last.select_action(rng) == 2 for _ in range(200))


def test_selection_leaves_probabilities_untouched():
    rng = np.random.default_rng(4)
    auto = automaton([0.3, 0.7])
    before = auto.probabilities.copy()
    for _ in range(50):
        auto.select_action(rng)
    np.testing.assert_array_equal(auto.probabilities, before)


def test_fair_coin_frequencies():
    rng = np.random.default_rng(5)
    auto = LearningAutomaton(2, 0.1, 0.1)
    draws = sum(auto.select_action(rng) for _ in range(100_000))
    assert abs(draws / 100_000 - 0.5) <= 0.01


# ------------------------------------------------------------ reinforcement

def test_reward_shifts_mass_to_chosen_action():
    auto = automaton([0.5, 0.5], a=0.1)
    auto.reinforce(0, REWARD)
    np.testing.assert_allclose(auto.probabilities, [0.55, 0.45], atol=1e-15)


def test_penalty_shifts_mass_away_from_chosen_action():
    auto = automaton([0.5, 0.5], b=0.1)
    auto.reinforce(0, PENALTY)
    np.testing.assert_allclose(auto.probabilities, [0.45, 0.55], atol=1e-15)


def test_penalty_is_inaction_when_rate_zero():
    auto = automaton([0.3, 0.7], a=0.1, b=0.0)
    auto.reinforce(1, PENALTY)
    np.testing.assert_array_equal(auto.probabilities, [0.3, 0.7])


def test_five_action_penalty_spreads_evenly():
    auto = automaton([0.2] * 5, b=0.1)
    auto.reinforce(2, PENALTY)
    # chosen: 0.2*0.9; others: 0.1/4 + 0.9*0.2
    np.testing.assert_allclose(auto.probabilities[2], 0.18, atol=1e-15)
    np.testing.assert_allclose(
        np.delete(auto.probabilities, 2), [0.205] * 4, atol=1e-15
    )


def test_out_of_range_action_rejected():
    auto = LearningAutomaton(3, 0.1, 0.1)
    with pytest.raises(ValueError):
        auto.reinforce(3, REWARD)
    with pytest.raises(ValueError):
        auto.reinforce(-1, REWARD)


def test_bad_signal_rejected():
    auto = LearningAutomaton(3, 0.1, 0.1)
    with pytest.raises(ValueError):
        auto.reinforce(0, 2)


# ------------------------------------------------------------- properties

ops = st.lists(st.tuples(st.integers(0, 9), st.sampled_from([REWARD, PENALTY])),
               max_size=60)


@settings(deadline=None)
@given(r=st.sampled_from([2, 5, 10]), a=st.floats(0, 1), b=st.floats(0, 1), seq=ops)
def test_simplex_preserved_by_any_sequence(r, a, b, seq):
    auto = LearningAutomaton(r, a, b)
    for action, signal in seq:
        auto.reinforce(action % r, signal)
        assert abs(auto.probabilities.sum() - 1.0) <= 1e-9
        assert np.all(auto.probabilities >= 0.0)
        assert np.all(auto.probabilities <= 1.0)


@settings(deadline=None)
@given(r=st.sampled_from([2, 5, 10]), a=st.floats(0, 1), b=st.floats(0, 1),
       action=st.integers(0, 9), signal=st.sampled_from([REWARD, PENALTY]),
       seed=st.integers(0, 10_000))
def test_reinforcement_moves_chosen_probability_the_right_way(r, a, b, action, signal, seed):
    auto = LearningAutomaton(r, a, b)
    # start from an arbitrary reachable point on the simplex
    warm = np.random.default_rng(seed)
    for _ in range(5):
        auto.reinforce(int(warm.integers(r)), int(warm.integers(2)))
    action %= r
    before = auto.probabilities[action]
    auto.reinforce(action, signal)
    after = auto.probabilities[action]
    if signal == REWARD:
        assert after >= before - 1e-12
    else:
        assert after <= before + 1e-12


@pytest.mark.parametrize("signal", [REWARD, PENALTY])
def test_reward_inaction_absorbing_state(signal):
    auto = automaton([0.0, 1.0, 0.0], a=0.1, b=0.0)
    auto.reinforce(1, signal)
    np.testing.assert_array_equal(auto.probabilities, [0.0, 1.0, 0.0])


def test_repeated_reward_converges_to_certainty():
    auto = LearningAutomaton(5, 0.1, 0.1)
    for _ in range(400):
        auto.reinforce(3, REWARD)
    assert auto.probabilities[3] > 0.999
    assert abs(auto.probabilities.sum() - 1.0) <= 1e-9
