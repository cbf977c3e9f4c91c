"""
E-RLB：ε-greedy与RMSProp线性模型
"""
from typing import Any, Dict, Optional

import numpy as np

from senweaver_bms.bandit.base import BaseBandit


class ErlbBandit(BaseBandit):
    """
    E-RLB

    以概率ε随机探索，否则按EMA权重的线性预测贪心选择；
    所选臂的权重用RMSProp在线更新，再平滑到EMA权重
    """
    contextual = True

    def __init__(self, n_arms: int, params: Optional[Dict[str, float]] = None,
                 rng: Optional[np.random.Generator] = None, dim: Optional[int] = None):
        """
        初始化

        Args:
            n_arms: 臂数量
            params: epsilon, eta, gamma, alpha_ema, eps_num
            rng: 探索随机数流
            dim: 上下文维度
        """
        super().__init__(n_arms, params, rng, dim)
        if not dim or dim < 1:
            raise ValueError("E-RLB需要正的上下文维度")
        self.epsilon = float(self.params.get("epsilon", 0.02))
        self.eta = float(self.params.get("eta", 0.086))
        self.gamma = float(self.params.get("gamma", 0.87))
        self.alpha_ema = float(self.params.get("alpha_ema", 0.22))
        self.eps_num = float(self.params.get("eps_num", 1e-8))
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon必须在[0,1]内")
        if self.eps_num <= 0:
            raise ValueError("eps_num必须为正")
        self.theta = np.zeros((self.n_arms, dim))
        self.theta_ema = np.zeros((self.n_arms, dim))
        self.v = np.zeros((self.n_arms, dim))
        self.last_explored = False
        self.explorations = 0

    def select(self, context=None, allowed=None) -> int:
        arms = self._allowed(allowed)
        x = self._context(context)
        self.last_explored = bool(self.rng.random() < self.epsilon)
        if self.last_explored:
            self.explorations += 1
            return self.uniform(arms)
        return self.argmax(arms, self.theta_ema[arms] @ x)

    def update(self, arm: int, context, reward: float) -> None:
        x = self._context(context)
        reward = self._reward(reward)
        theta = self.theta[arm]
        g = (x @ theta - reward) * x
        self.v[arm] = self.gamma * self.v[arm] + (1.0 - self.gamma) * g * g
        self.theta[arm] = theta - self.eta / np.sqrt(self.v[arm] + self.eps_num) * g
        self.theta_ema[arm] = self.alpha_ema * self.theta_ema[arm] + (1.0 - self.alpha_ema) * self.theta[arm]
        self.rounds += 1

    def snapshot(self) -> Dict[str, Any]:
        data = super().snapshot()
        data.update(theta=self.theta.tolist(), theta_ema=self.theta_ema.tolist(),
                    explorations=self.explorations)
        return data
