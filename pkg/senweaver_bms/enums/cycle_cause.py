"""
传输周期结束原因
"""
from enum import Enum


class CycleCause(Enum):
    """
    传输周期结束原因
    """
    ACKED = 'acked'  # 块确认完成
    TIMEOUT = 'timeout'  # 超过D_max仍未获得TXOP
