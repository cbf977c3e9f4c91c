"""
上下文构建
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from senweaver_bms.enums.architecture import AgentStage
from senweaver_bms.errors import ContractViolation
from senweaver_bms.model.action import BASIC_CHANNELS, ChannelAllocation


@dataclass(frozen=True)
class ContextFeatures:
    """
    周期开始时的一次快照，各决策阶段共用
    """
    occupancy: Tuple[float, ...]  # 每个基本信道的滑动窗口占用率
    busy: Tuple[int, ...]  # 瞬时忙闲标志
    queue_util: float  # 队列长度 / 队列容量

    @classmethod
    def idle(cls) -> 'ContextFeatures':
        n = len(BASIC_CHANNELS)
        return cls(occupancy=(0.0,) * n, busy=(0,) * n, queue_util=0.0)


def primary_encoding(primary: int) -> Tuple[int, ...]:
    return tuple(1 if c == primary else 0 for c in BASIC_CHANNELS)


def build_context(features: ContextFeatures, stage: AgentStage,
                  allocation: Optional[ChannelAllocation] = None,
                  primary: Optional[int] = None) -> np.ndarray:
    """
    按决策阶段组装上下文向量

    Args:
        features: 周期开始时的快照
        stage: 决策阶段
        allocation: 已选的工作信道，主信道与CW阶段需要
        primary: 已选的主信道，CW阶段需要

    Returns:
        SA与信道阶段9维，主信道阶段12维，CW阶段17维
    """
    parts = [features.occupancy, features.busy]
    if stage is not AgentStage.PRIMARY:
        parts.append((features.queue_util,))
    if stage in (AgentStage.PRIMARY, AgentStage.CW):
        if allocation is None:
            raise ContractViolation(f"{stage.value}阶段需要已选的工作信道")
        parts.append(allocation.encoding())
    if stage is AgentStage.CW:
        if primary is None:
            raise ContractViolation("cw阶段需要已选的主信道")
        parts.append(primary_encoding(primary))
    x = np.concatenate([np.asarray(part, dtype=float) for part in parts])
    if x.shape[0] != stage.context_dim:
        raise ContractViolation(f"{stage.value}阶段上下文维度{x.shape[0]}应为{stage.context_dim}")
    if x.min() < 0.0 or x.max() > 1.0:
        raise ContractViolation("上下文分量必须在[0,1]内")
    return x
