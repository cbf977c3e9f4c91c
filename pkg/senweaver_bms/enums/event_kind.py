"""
事件类型枚举
"""
from enum import Enum, auto


class EventKind(Enum):
    """
    离散事件类型
    """
    BACKOFF_EXPIRY = auto()  # 退避计数器到零
    FRAME_END = auto()  # 帧结束
    FRAME_START = auto()  # 帧交换中的后续帧开始
    ARRIVAL = auto()  # 数据包到达
    INTERVAL_SWITCH = auto()  # 负载区间切换
    CYCLE_TIMEOUT = auto()  # 学习周期超时
    TXOP_END = auto()  # 块确认结束，帧交换完成
