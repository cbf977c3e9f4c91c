"""
节点角色枚举
"""
from enum import Enum


class NodeRole(Enum):
    """
    传统节点使用二进制指数退避；学习节点由智能体配置
    """
    LEGACY = 'legacy'
    LEARNER = 'learner'
