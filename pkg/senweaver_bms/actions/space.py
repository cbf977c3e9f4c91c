"""
动作空间

臂的顺序是固定的：UCB类算法按索引升序依次初始化
"""
from dataclasses import dataclass
from typing import Any, FrozenSet, List, Optional, Tuple

from cachetools import cached, LRUCache

from senweaver_bms.enums.architecture import AgentStage
from senweaver_bms.model.action import ALLOCATIONS, BASIC_CHANNELS, CW_LADDER, ActionTriple, ChannelAllocation


@dataclass(frozen=True)
class ActionSpace:
    """
    有序的臂集合
    """
    kind: AgentStage
    arms: Tuple[Any, ...]

    def __len__(self) -> int:
        return len(self.arms)

    def arm(self, index: int) -> Any:
        return self.arms[index]

    def index(self, arm: Any) -> int:
        return self.arms.index(arm)

    def labels(self) -> List[str]:
        """
        日志中使用的臂标签
        """
        labels = []
        for arm in self.arms:
            if isinstance(arm, ActionTriple):
                labels.append(f"{arm.label}/cw{arm.cw}")
            elif isinstance(arm, ChannelAllocation):
                labels.append(arm.label)
            elif self.kind is AgentStage.PRIMARY:
                labels.append(f"p{arm}")
            else:
                labels.append(f"cw{arm}")
        return labels


@cached(cache=LRUCache(maxsize=1))
def enumerate_joint() -> ActionSpace:
    """
    联合动作空间，按(分配编号, 主信道, CW索引)字典序排列，共84个臂
    """
    arms = tuple(
        ActionTriple(allocation, primary, cw)
        for allocation in ALLOCATIONS
        for primary in allocation.sorted_channels()
        for cw in CW_LADDER
    )
    return ActionSpace(AgentStage.SA, arms)


def channel_space() -> ActionSpace:
    return ActionSpace(AgentStage.CHANNEL, ALLOCATIONS)


def primary_space() -> ActionSpace:
    """
    主信道智能体的臂为4个基本信道，每轮按工作信道掩码
    """
    return ActionSpace(AgentStage.PRIMARY, BASIC_CHANNELS)


def cw_space() -> ActionSpace:
    return ActionSpace(AgentStage.CW, CW_LADDER)


def space_for(stage: AgentStage) -> ActionSpace:
    """
    根据决策阶段获取动作空间
    """
    return {
        AgentStage.SA: enumerate_joint,
        AgentStage.CHANNEL: channel_space,
        AgentStage.PRIMARY: primary_space,
        AgentStage.CW: cw_space,
    }[stage]()


def mask_primary(allocation: ChannelAllocation) -> FrozenSet[int]:
    """
    主信道必须属于工作信道
    """
    return allocation.channels


def allowed_primary_arms(allocation: Optional[ChannelAllocation]) -> List[int]:
    """
    主信道智能体在给定工作信道下允许的臂索引
    """
    if allocation is None:
        return list(range(len(BASIC_CHANNELS)))
    allowed = mask_primary(allocation)
    return [index for index, channel in enumerate(BASIC_CHANNELS) if channel in allowed]
