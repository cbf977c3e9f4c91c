"""
信道分配与动作三元组
"""
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

BASIC_CHANNELS: Tuple[int, ...] = (1, 2, 3, 4)
CW_LADDER: Tuple[int, ...] = tuple(2 ** (i + 4) for i in range(7))  # 16 .. 1024


@dataclass(frozen=True)
class ChannelAllocation:
    """
    工作信道：一组相邻的20 MHz基本信道
    """
    id: int  # 编号 1..7
    channels: FrozenSet[int]

    @property
    def width(self) -> int:
        return 20 * len(self.channels)

    @property
    def label(self) -> str:
        return f"#{self.id}"

    def primary_label(self, primary: int) -> str:
        """
        带主信道下标的标签，例如 #7_3；20 MHz分配不带下标
        """
        if len(self.channels) == 1:
            return self.label
        return f"#{self.id}_{primary}"

    def encoding(self) -> Tuple[int, ...]:
        """
        四个基本信道上的多热编码，例如 {1,2} -> (1,1,0,0)
        """
        return tuple(1 if c in self.channels else 0 for c in BASIC_CHANNELS)

    def sorted_channels(self) -> Tuple[int, ...]:
        return tuple(sorted(self.channels))

    def __repr__(self) -> str:
        return f"ChannelAllocation({self.label}={set(self.sorted_channels())})"


ALLOCATIONS: Tuple[ChannelAllocation, ...] = (
    ChannelAllocation(1, frozenset({1})),
    ChannelAllocation(2, frozenset({2})),
    ChannelAllocation(3, frozenset({3})),
    ChannelAllocation(4, frozenset({4})),
    ChannelAllocation(5, frozenset({1, 2})),
    ChannelAllocation(6, frozenset({3, 4})),
    ChannelAllocation(7, frozenset({1, 2, 3, 4})),
)


def allocation_by_id(allocation_id: int) -> ChannelAllocation:
    """
    根据编号获取信道分配
    """
    if not 1 <= allocation_id <= len(ALLOCATIONS):
        raise ValueError(f"未知的信道分配编号: {allocation_id}")
    return ALLOCATIONS[allocation_id - 1]


def allocation_of(channels) -> Optional[ChannelAllocation]:
    """
    根据信道集合查找信道分配，不合法时返回None
    """
    key = frozenset(channels)
    for allocation in ALLOCATIONS:
        if allocation.channels == key:
            return allocation
    return None


@dataclass(frozen=True)
class ActionTriple:
    """
    决策向量 (工作信道, 主信道, 竞争窗口)
    """
    channel: ChannelAllocation
    primary: int
    cw: int

    def __post_init__(self):
        if self.primary not in self.channel.channels:
            raise ValueError(f"主信道{self.primary}不在工作信道{self.channel.label}内")
        if self.cw not in CW_LADDER:
            raise ValueError(f"竞争窗口{self.cw}不在取值集合{CW_LADDER}内")

    @property
    def label(self) -> str:
        return self.channel.primary_label(self.primary)
