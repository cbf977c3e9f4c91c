"""
UCB
"""
import math
from typing import Any, Dict, Optional, Sequence

import numpy as np

from senweaver_bms.bandit.base import BaseBandit


class UcbBandit(BaseBandit):
    """
    UCB：argmax μ̂_a + sqrt(α ln t / (2 N_a))

    t为本智能体自己的决策次数；未拉过的可选臂按索引升序依次初始化
    """

    def __init__(self, n_arms: int, params: Optional[Dict[str, float]] = None,
                 rng: Optional[np.random.Generator] = None, dim: Optional[int] = None):
        super().__init__(n_arms, params, rng, dim)
        self.alpha = float(self.params.get("alpha", 1.0))
        if self.alpha <= 0:
            raise ValueError("alpha必须为正")
        self.counts = np.zeros(self.n_arms, dtype=np.int64)
        self.means = np.zeros(self.n_arms)

    @property
    def t(self) -> int:
        return int(self.counts.sum())

    def indices(self, arms: Sequence[int]) -> np.ndarray:
        """
        给定臂的UCB指数
        """
        arms = list(arms)
        counts = self.counts[arms]
        log_t = math.log(max(self.t, 1))
        return self.means[arms] + np.sqrt(self.alpha * log_t / (2.0 * counts))

    def select(self, context=None, allowed=None) -> int:
        arms = self._allowed(allowed)
        for arm in arms:
            if self.counts[arm] == 0:
                return arm
        return self.argmax(arms, self.indices(arms))

    def update(self, arm: int, context, reward: float) -> None:
        reward = self._reward(reward)
        self.counts[arm] += 1
        self.means[arm] += (reward - self.means[arm]) / self.counts[arm]
        self.rounds += 1

    def snapshot(self) -> Dict[str, Any]:
        data = super().snapshot()
        data.update(counts=self.counts.tolist(), means=self.means.tolist())
        return data
