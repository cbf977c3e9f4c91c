"""
OSUB：单峰结构下的最优采样
"""
import math
from typing import Any, Dict, Optional

import numpy as np

from senweaver_bms.actions.graph import NeighborGraph, linear_neighbors
from senweaver_bms.bandit.base import BaseBandit

KL_TOLERANCE = 1e-9
_EPS = 1e-15


def bernoulli_kl(p: float, q: float) -> float:
    """
    伯努利分布的KL散度 d(p, q)
    """
    q = min(max(q, _EPS), 1.0 - _EPS)
    if p <= 0.0:
        return math.log(1.0 / (1.0 - q))
    if p >= 1.0:
        return math.log(1.0 / q)
    return p * math.log(p / q) + (1.0 - p) * math.log((1.0 - p) / (1.0 - q))


def exploration_budget(t: int, c: float = 0.0) -> float:
    """
    f(t) = ln t + c·ln ln t，t <= 1时为0
    """
    if t <= 1:
        return 0.0
    budget = math.log(t)
    if c and budget > 1.0:
        budget += c * math.log(budget)
    return budget


def kl_ucb_bound(mean: float, budget: float) -> float:
    """
    max{q ∈ [mean, 1] : d(mean, q) <= budget}，二分法求解

    Args:
        mean: 经验均值
        budget: 已除以拉臂次数的探索预算

    Returns:
        KL-UCB上界
    """
    mean = min(max(float(mean), 0.0), 1.0)
    if budget <= 0.0:
        return mean
    if mean >= 1.0:
        return 1.0
    low, high = mean, 1.0
    while high - low > KL_TOLERANCE:
        mid = (low + high) / 2.0
        if bernoulli_kl(mean, mid) <= budget:
            low = mid
        else:
            high = mid
    return low


def kl_ucb_index(mean: float, count: int, t: int, c: float = 0.0) -> float:
    """
    KL-UCB指数

    Args:
        mean: 经验均值
        count: 拉臂次数，至少为1
        t: 轮次
        c: f(t)中ln ln t的系数

    Returns:
        指数，位于[mean, 1]
    """
    if count < 1:
        raise ValueError("count至少为1")
    return kl_ucb_bound(mean, exploration_budget(t, c) / count)


class OsubBandit(BaseBandit):
    """
    OSUB

    每轮确定领导者L（经验均值最大），L当领导者的次数是γ+1的倍数时重选L，
    否则在L及其邻居中按KL-UCB指数选择
    """
    structured = True

    def __init__(self, n_arms: int, params: Optional[Dict[str, float]] = None,
                 rng: Optional[np.random.Generator] = None, dim: Optional[int] = None,
                 graph: Optional[NeighborGraph] = None):
        """
        初始化

        Args:
            n_arms: 臂数量
            params: 超参数，p为随机探索概率，kl_c为f(t)常数
            rng: 探索随机数流
            dim: 未使用
            graph: 臂索引上的邻接图，默认为链
        """
        super().__init__(n_arms, params, rng, dim)
        self.graph = graph if graph is not None else linear_neighbors(self.n_arms)
        if len(self.graph) != self.n_arms:
            raise ValueError(f"邻接图大小{len(self.graph)}与臂数量{self.n_arms}不一致")
        self.p = float(self.params.get("p", 0.0))
        self.kl_c = float(self.params.get("kl_c", 0.0))
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p必须在[0,1]内")
        self.gamma = self.graph.max_degree
        self.counts = np.zeros(self.n_arms, dtype=np.int64)
        self.means = np.zeros(self.n_arms)
        self.leader_counts = np.zeros(self.n_arms, dtype=np.int64)

    @property
    def t(self) -> int:
        return int(self.counts.sum())

    def leader(self, arms) -> int:
        return self.argmax(arms, self.means[arms])

    def select(self, context=None, allowed=None) -> int:
        arms = self._allowed(allowed)
        for arm in arms:
            if self.counts[arm] == 0:
                return arm
        if self.p > 0.0 and self.rng.random() < self.p:
            return self.uniform(arms)
        leader = self.leader(arms)
        self.leader_counts[leader] += 1
        if self.leader_counts[leader] % (self.gamma + 1) == 0:
            return leader
        allowed_set = set(arms)
        candidates = sorted({leader} | {n for n in self.graph.neighbors(leader) if n in allowed_set})
        t = self.t
        scores = np.array([kl_ucb_index(self.means[a], self.counts[a], t, self.kl_c) for a in candidates])
        return self.argmax(candidates, scores)

    def update(self, arm: int, context, reward: float) -> None:
        reward = self._reward(reward)
        self.counts[arm] += 1
        self.means[arm] += (reward - self.means[arm]) / self.counts[arm]
        self.rounds += 1

    def snapshot(self) -> Dict[str, Any]:
        data = super().snapshot()
        data.update(counts=self.counts.tolist(), means=self.means.tolist(),
                    leader_counts=self.leader_counts.tolist(), gamma=self.gamma)
        return data
