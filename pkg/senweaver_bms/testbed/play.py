"""
在合成环境上运行赌博机
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from joblib import Parallel, delayed

from senweaver_bms.actions.graph import linear_neighbors
from senweaver_bms.bandit.base import BaseBandit
from senweaver_bms.builder import AgentBuilder
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.algorithm import DefaultAlgorithm
from senweaver_bms.testbed.env import SyntheticEnv

logger = logging.getLogger(__name__)

AgentFactory = Callable[[SyntheticEnv, np.random.Generator], BaseBandit]


@dataclass
class PlayResult:
    """
    多个种子的合成实验结果
    """
    regret: np.ndarray  # [种子, 轮] 累计伪遗憾
    optimal: np.ndarray  # [种子, 轮] 是否选择了最优臂
    arms: np.ndarray = field(repr=False, default=None)  # [种子, 轮] 所选臂

    @property
    def mean_regret(self) -> np.ndarray:
        return self.regret.mean(axis=0)

    def final_regret(self) -> float:
        return float(self.regret[:, -1].mean())

    def optimal_rate(self, start: int = 0, end: Optional[int] = None) -> float:
        """
        [start, end)轮内选择最优臂的比例，种子平均
        """
        return float(self.optimal[:, start:end].mean())

    def window_rates(self, window: int = 1000) -> np.ndarray:
        """
        每个窗口的最优臂选择率
        """
        rounds = self.optimal.shape[1]
        return np.array([self.optimal_rate(s, min(s + window, rounds)) for s in range(0, rounds, window)])


def bandit_factory(algorithm: str, params: Optional[Dict[str, float]] = None,
                   architecture: str = 'sa') -> AgentFactory:
    """
    按算法名称构造智能体的工厂，超参数默认取该架构下的默认值

    Args:
        algorithm: 算法名称
        params: 超参数覆盖
        architecture: 取默认超参数的架构

    Returns:
        工厂函数
    """
    source = DefaultAlgorithm.get_source(algorithm)
    merged = source.defaults(architecture) if source else {}
    merged.update(params or {})
    bandit_class = AgentBuilder.bandit_class(algorithm)

    def factory(env: SyntheticEnv, rng: np.random.Generator) -> BaseBandit:
        kwargs = {}
        if bandit_class.structured:
            kwargs['graph'] = linear_neighbors(env.n_arms)
        return bandit_class(env.n_arms, merged, rng=rng, dim=env.dim, **kwargs)
    return factory


def play_one(env: SyntheticEnv, factory: AgentFactory, rounds: int, seed: int) -> Dict[str, np.ndarray]:
    """
    一个种子上运行rounds轮
    """
    streams = RandomStreams(seed)
    env_rng, reward_rng = streams.get('env/context'), streams.get('env/reward')
    agent = factory(env, streams.get('agent'))
    env.reset()
    regret = np.zeros(rounds)
    optimal = np.zeros(rounds, dtype=bool)
    arms = np.zeros(rounds, dtype=np.int64)
    total = 0.0
    for t in range(rounds):
        x = env.context(t, env_rng)
        arm = agent.select(x)
        mu = env.expected(x, t)
        best = mu.max()
        total += best - mu[arm]
        regret[t] = total
        optimal[t] = mu[arm] >= best
        arms[t] = arm
        agent.update(arm, x, env.reward(arm, x, t, reward_rng))
    return {"regret": regret, "optimal": optimal, "arms": arms}


def play(env: SyntheticEnv, factory: AgentFactory, rounds: int, seeds: Sequence[int],
         jobs: int = 1) -> PlayResult:
    """
    在多个种子上运行并汇总

    Args:
        env: 合成环境
        factory: 智能体工厂
        rounds: 每个种子的轮数
        seeds: 种子列表
        jobs: 并行进程数

    Returns:
        结果
    """
    seeds = list(seeds)
    if jobs == 1:
        runs = [play_one(env, factory, rounds, seed) for seed in seeds]
    else:
        runs = Parallel(n_jobs=jobs)(delayed(play_one)(env, factory, rounds, seed) for seed in seeds)
    logger.debug("%s: %d个种子 x %d轮", env.kind, len(seeds), rounds)
    return PlayResult(
        regret=np.vstack([run["regret"] for run in runs]),
        optimal=np.vstack([run["optimal"] for run in runs]),
        arms=np.vstack([run["arms"] for run in runs]),
    )
