"""
信道绑定模式枚举
"""
from enum import Enum


class BondingMode(Enum):
    """
    静态信道绑定(SCB)与动态信道绑定(DCB)
    """
    SCB = 'scb'  # 任一次信道忙则推迟
    DCB = 'dcb'  # 使用主信道及相邻的空闲次信道

    @classmethod
    def of(cls, name: str) -> 'BondingMode':
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"未知的信道绑定模式: {name}") from None
