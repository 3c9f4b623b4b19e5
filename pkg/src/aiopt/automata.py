"""Variable-structure learning automata with linear reinforcement.

An automaton keeps a probability distribution over a finite action set.
After acting it receives a binary signal, 0 for reward and 1 for penalty,
and shifts probability mass toward or away from the chosen action with
learning rates ``a`` (reward) and ``b`` (penalty).  The usual scheme
names apply: reward-penalty when a == b, reward-inaction when b == 0,
and reward-epsilon-penalty when a is much larger than b.
"""
from __future__ import annotations

import numpy as np

from .errors import ConfigError

REWARD = 0
PENALTY = 1


class LearningAutomaton:
    """Probability vector over ``action_count`` actions plus its update rule.

    The penalty update distributes ``b / (r - 1)`` to each non-chosen
    action, which keeps the probabilities on the simplex for any action
    count.  Both updates preserve the simplex exactly in real arithmetic;
    a renormalization guards against float drift over long runs.
    """

    def __init__(self, action_count: int, reward_rate: float, penalty_rate: float):
        if action_count < 2:
            raise ConfigError(f"automaton needs at least 2 actions, got {action_count}")
        if not 0.0 <= reward_rate <= 1.0:
            raise ConfigError(f"reward rate must be in [0, 1], got {reward_rate}")
        if not 0.0 <= penalty_rate <= 1.0:
            raise ConfigError(f"penalty rate must be in [0, 1], got {penalty_rate}")
        self.reward_rate = float(reward_rate)
        self.penalty_rate = float(penalty_rate)
        self.probabilities = np.full(action_count, 1.0 / action_count)

    @property
    def action_count(self) -> int:
        return len(self.probabilities)

    @property
    def scheme(self) -> str:
        if self.penalty_rate == 0.0:
            return "L_RI"
        if self.reward_rate == self.penalty_rate:
            return "L_RP"
        if self.reward_rate > self.penalty_rate:
            return "L_ReP"
        return "linear"

    def select_action(self, rng: np.random.Generator) -> int:
        """Draw an action index according to the current probabilities."""
        u = rng.random()
        idx = int(np.searchsorted(np.cumsum(self.probabilities), u, side="right"))
        return min(idx, self.action_count - 1)

    def reinforce(self, action: int, signal: int) -> None:
        """Update the probability vector for the given action and signal."""
        if not 0 <= action < self.action_count:
            raise ValueError(f"action {action} out of range for {self.action_count} actions")
        if signal not in (REWARD, PENALTY):
            raise ValueError(f"signal must be 0 (reward) or 1 (penalty), got {signal}")
        p = self.probabilities
        if signal == REWARD:
            a = self.reward_rate
            chosen = p[action] + a * (1.0 - p[action])
            p *= 1.0 - a
            p[action] = chosen
        else:
            b = self.penalty_rate
            chosen = p[action] * (1.0 - b)
            p *= 1.0 - b
            p += b / (self.action_count - 1)
            p[action] = chosen
        total = p.sum()
        if abs(total - 1.0) > 1e-12:
            p /= total
