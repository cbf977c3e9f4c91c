"""
基础赌博机
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.errors import ContractViolation, SelectionError


class BaseBandit(ABC):
    """
    基础赌博机

    统一的动作选择接口：select(context, allowed) -> arm；update(arm, context, reward)。
    非上下文算法忽略context
    """
    contextual = False
    structured = False  # 是否需要臂上的邻接图

    def __init__(self, n_arms: int, params: Optional[Dict[str, float]] = None,
                 rng: Optional[np.random.Generator] = None, dim: Optional[int] = None):
        """
        初始化

        Args:
            n_arms: 臂数量
            params: 超参数
            rng: 本智能体的探索随机数流
            dim: 上下文维度，仅上下文算法需要
        """
        if n_arms < 1:
            raise ContractViolation("臂数量至少为1")
        self.n_arms = int(n_arms)
        self.params = dict(params or {})
        self.rng = rng if rng is not None else RandomStreams.fresh(0, type(self).__name__)
        self.dim = dim
        self.rounds = 0

    @abstractmethod
    def select(self, context: Optional[np.ndarray] = None,
               allowed: Optional[Sequence[int]] = None) -> int:
        """
        选择一个臂

        Args:
            context: 上下文向量
            allowed: 本轮允许的臂索引，None表示全部

        Returns:
            臂索引
        """
        pass

    @abstractmethod
    def update(self, arm: int, context: Optional[np.ndarray], reward: float) -> None:
        """
        用观测到的奖励更新所选臂
        """
        pass

    def snapshot(self) -> Dict[str, Any]:
        """
        学到的状态，用于导出agents.json
        """
        return {"algorithm": type(self).__name__, "rounds": self.rounds, "params": self.params}

    def _allowed(self, allowed: Optional[Sequence[int]]) -> List[int]:
        if allowed is None:
            return list(range(self.n_arms))
        arms = sorted(set(int(a) for a in allowed))
        if not arms:
            raise SelectionError("可选臂集合为空")
        if arms[0] < 0 or arms[-1] >= self.n_arms:
            raise SelectionError(f"可选臂超出范围[0,{self.n_arms})")
        return arms

    def _context(self, context: Optional[np.ndarray]) -> np.ndarray:
        if context is None:
            raise ContractViolation(f"{type(self).__name__}需要上下文向量")
        x = np.asarray(context, dtype=float).reshape(-1)
        if x.shape[0] != self.dim:
            raise ContractViolation(f"上下文维度{x.shape[0]}与期望{self.dim}不一致")
        return x

    @staticmethod
    def _reward(reward: float) -> float:
        if not 0.0 <= reward <= 1.0:
            raise ContractViolation(f"奖励{reward}不在[0,1]内")
        return float(reward)

    @staticmethod
    def argmax(arms: List[int], scores: np.ndarray) -> int:
        """
        最大值对应的臂，并列时取最小索引（arms升序）
        """
        return arms[int(np.argmax(scores))]

    def uniform(self, arms: List[int]) -> int:
        return arms[int(self.rng.integers(len(arms)))]
