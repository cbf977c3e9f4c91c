"""
帧类型枚举
"""
from enum import Enum


class FrameKind(Enum):
    """
    帧类型
    """
    RTS = 'rts'
    CTS = 'cts'
    DATA = 'data'
    BACK = 'back'

    @property
    def is_control(self) -> bool:
        return self is not FrameKind.DATA
