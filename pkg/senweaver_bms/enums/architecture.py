"""
智能体架构枚举
"""
from enum import Enum
from typing import Tuple


class Architecture(Enum):
    """
    单智能体(SA)联合动作空间，或多智能体(MA)分解动作空间
    """
    SA = 'sa'
    MA = 'ma'

    @classmethod
    def of(cls, name: str) -> 'Architecture':
        """
        根据名称获取架构

        Args:
            name: 架构名称，大小写不敏感

        Returns:
            架构枚举
        """
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"未知的架构: {name}") from None

    def stages(self) -> Tuple['AgentStage', ...]:
        """
        返回该架构下智能体的决策顺序
        """
        if self is Architecture.SA:
            return (AgentStage.SA,)
        return (AgentStage.CHANNEL, AgentStage.PRIMARY, AgentStage.CW)


class AgentStage(Enum):
    """
    决策阶段，同时决定上下文的组成
    """
    SA = 'sa'
    CHANNEL = 'channel'
    PRIMARY = 'primary'
    CW = 'cw'

    @property
    def context_dim(self) -> int:
        """
        该阶段上下文向量的维度
        """
        return {
            AgentStage.SA: 9,
            AgentStage.CHANNEL: 9,
            AgentStage.PRIMARY: 12,
            AgentStage.CW: 17,
        }[self]
