"""
信道绑定规则
"""
from typing import FrozenSet, Iterable, Optional

from senweaver_bms.enums.bonding_mode import BondingMode
from senweaver_bms.model.action import ALLOCATIONS, ChannelAllocation


def bonding_decision(mode: BondingMode, allocation: ChannelAllocation, primary: int,
                     idle: Iterable[int]) -> Optional[FrozenSet[int]]:
    """
    TXOP授予时决定发送信道

    Args:
        mode: SCB或DCB
        allocation: 工作信道
        primary: 主信道
        idle: PIFS内保持空闲的基本信道

    Returns:
        发送使用的信道集合；SCB下有次信道忙时返回None表示推迟
    """
    idle = frozenset(idle) | {primary}
    if mode is BondingMode.SCB:
        return allocation.channels if allocation.channels <= idle else None
    best = None
    for candidate in ALLOCATIONS:
        if primary not in candidate.channels:
            continue
        if not candidate.channels <= allocation.channels or not candidate.channels <= idle:
            continue
        if best is None or candidate.width > best.width:
            best = candidate
    return best.channels
