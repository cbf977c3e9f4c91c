"""
LinUCB
"""
from typing import Any, Dict, Optional

import numpy as np

from senweaver_bms.bandit.base import BaseBandit


class LinucbBandit(BaseBandit):
    """
    LinUCB（每臂独立的岭回归）

    A_a = I + Σ x xᵀ，b_a = Σ r x，θ̂_a = A_a⁻¹ b_a；
    A_a⁻¹通过Sherman-Morrison秩一更新维护
    """
    contextual = True

    def __init__(self, n_arms: int, params: Optional[Dict[str, float]] = None,
                 rng: Optional[np.random.Generator] = None, dim: Optional[int] = None):
        super().__init__(n_arms, params, rng, dim)
        if not dim or dim < 1:
            raise ValueError("LinUCB需要正的上下文维度")
        self.alpha = float(self.params.get("alpha", 1.0))
        eye = np.eye(dim)
        self.A = np.repeat(eye[None, :, :], self.n_arms, axis=0)
        self.A_inv = self.A.copy()
        self.b = np.zeros((self.n_arms, dim))
        self.theta = np.zeros((self.n_arms, dim))

    def scores(self, context: np.ndarray, arms) -> np.ndarray:
        """
        给定臂的 θ̂ᵀx + α·sqrt(xᵀA⁻¹x)
        """
        x = self._context(context)
        arms = list(arms)
        index = slice(None) if len(arms) == self.n_arms else arms
        width = (self.A_inv[index] @ x) @ x
        return self.theta[index] @ x + self.alpha * np.sqrt(np.maximum(width, 0.0))

    def select(self, context=None, allowed=None) -> int:
        arms = self._allowed(allowed)
        return self.argmax(arms, self.scores(context, arms))

    def update(self, arm: int, context, reward: float) -> None:
        x = self._context(context)
        reward = self._reward(reward)
        self.rounds += 1
        if not x.any():
            return
        a_inv = self.A_inv[arm]
        u = a_inv @ x
        self.A_inv[arm] = a_inv - np.outer(u, u) / (1.0 + x @ u)
        self.A[arm] += np.outer(x, x)
        self.b[arm] += reward * x
        self.theta[arm] = self.A_inv[arm] @ self.b[arm]

    def snapshot(self) -> Dict[str, Any]:
        data = super().snapshot()
        data.update(theta=self.theta.tolist(), b=self.b.tolist())
        return data
