"""
合成赌博机环境
"""
from abc import ABC, abstractmethod
from typing import List, Optional, Sequence

import numpy as np

CONTEXT_DIM = 9


class SyntheticEnv(ABC):
    """
    合成环境基类，奖励位于[0,1]
    """
    kind = ''

    def __init__(self, n_arms: int, dim: Optional[int] = None):
        self.n_arms = n_arms
        self.dim = dim

    def reset(self) -> None:
        pass

    def context(self, t: int, rng: np.random.Generator) -> Optional[np.ndarray]:
        """
        第t轮的上下文，非上下文环境返回None
        """
        return None

    @abstractmethod
    def expected(self, x: Optional[np.ndarray], t: int) -> np.ndarray:
        """
        各臂的期望奖励
        """
        pass

    @abstractmethod
    def reward(self, arm: int, x: Optional[np.ndarray], t: int, rng: np.random.Generator) -> float:
        pass


class BernoulliEnv(SyntheticEnv):
    """
    伯努利多臂环境
    """
    kind = 'bernoulli'

    def __init__(self, means: Sequence[float]):
        super().__init__(len(means))
        self.means = np.asarray(means, dtype=float)
        if self.means.min() < 0.0 or self.means.max() > 1.0:
            raise ValueError("均值必须在[0,1]内")

    @classmethod
    def two_level(cls, k: int = 10, best: float = 0.9, rest: float = 0.5, best_arm: Optional[int] = None) -> 'BernoulliEnv':
        """
        一个最优臂，其余臂均值相同
        """
        means = [rest] * k
        means[k - 1 if best_arm is None else best_arm] = best
        return cls(means)

    def expected(self, x, t) -> np.ndarray:
        return self.means

    def reward(self, arm, x, t, rng) -> float:
        return float(rng.random() < self.means[arm])


class UnimodalChainEnv(BernoulliEnv):
    """
    链上均值单峰的伯努利环境
    """
    kind = 'unimodal'

    def __init__(self, means: Sequence[float]):
        super().__init__(means)
        peak = int(np.argmax(self.means))
        if np.any(np.diff(self.means[:peak + 1]) < 0) or np.any(np.diff(self.means[peak:]) > 0):
            raise ValueError("均值在链上不是单峰的")

    @classmethod
    def peaked(cls, k: int = 10, peak: int = 6, top: float = 0.9, step: float = 0.1) -> 'UnimodalChainEnv':
        return cls([max(0.0, top - step * abs(i - peak)) for i in range(k)])


class LinearContextEnv(SyntheticEnv):
    """
    线性上下文环境：x ~ U[0,1]^d，r = clip(xᵀθ*_a + U(-noise, noise), 0, 1)
    """
    kind = 'linear'

    def __init__(self, thetas: np.ndarray, noise: float = 0.02):
        thetas = np.atleast_2d(np.asarray(thetas, dtype=float))
        super().__init__(thetas.shape[0], thetas.shape[1])
        self.thetas = thetas
        self.noise = noise

    @classmethod
    def diagonal(cls, k: int = 3, dim: int = CONTEXT_DIM, scale: float = 0.9, base: float = 0.0,
                 noise: float = 0.02) -> 'LinearContextEnv':
        """
        臂a的权重集中在第a维，其余维共享一个小的基线
        """
        thetas = np.full((k, dim), base)
        for a in range(k):
            thetas[a, a] += scale
        return cls(thetas / max(1.0, thetas.sum(axis=1).max()), noise)

    def theta(self, t: int) -> np.ndarray:
        return self.thetas

    def context(self, t, rng) -> np.ndarray:
        return rng.random(self.dim)

    def expected(self, x, t) -> np.ndarray:
        return np.clip(self.theta(t) @ x, 0.0, 1.0)

    def reward(self, arm, x, t, rng) -> float:
        mean = float(self.theta(t)[arm] @ x)
        return float(np.clip(mean + rng.uniform(-self.noise, self.noise), 0.0, 1.0))


class PiecewiseLinearContextEnv(LinearContextEnv):
    """
    分段平稳的线性上下文环境，在变化点之间切换权重
    """
    kind = 'piecewise'

    def __init__(self, phases: List[np.ndarray], changepoints: Sequence[int], noise: float = 0.02):
        if len(phases) != len(changepoints) + 1:
            raise ValueError("阶段数必须比变化点多一个")
        super().__init__(phases[0], noise)
        self.phases = [np.atleast_2d(np.asarray(p, dtype=float)) for p in phases]
        self.changepoints = list(changepoints)

    @classmethod
    def rotating(cls, rounds: int = 20000, n_phases: int = 4, **kwargs) -> 'PiecewiseLinearContextEnv':
        """
        每个阶段把臂的权重循环移位一次
        """
        base = LinearContextEnv.diagonal(**kwargs)
        phases = [np.roll(base.thetas, shift, axis=0) for shift in range(n_phases)]
        step = rounds // n_phases
        return cls(phases, [step * (i + 1) for i in range(n_phases - 1)], base.noise)

    def theta(self, t: int) -> np.ndarray:
        phase = int(np.searchsorted(self.changepoints, t, side='right'))
        return self.phases[phase]


def make_env(kind: str, rounds: int = 20000) -> SyntheticEnv:
    """
    按名称构造默认环境

    Args:
        kind: bernoulli、unimodal、linear或piecewise
        rounds: 轮数，决定分段环境的变化点

    Returns:
        环境
    """
    if kind == 'bernoulli':
        return BernoulliEnv.two_level()
    if kind == 'unimodal':
        return UnimodalChainEnv.peaked()
    if kind == 'linear':
        return LinearContextEnv.diagonal()
    if kind == 'piecewise':
        return PiecewiseLinearContextEnv.rotating(rounds)
    raise ValueError(f"未知的合成环境: {kind}，可选 {ENV_KINDS}")


ENV_KINDS = ('bernoulli', 'unimodal', 'linear', 'piecewise')
