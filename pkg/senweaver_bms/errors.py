"""
异常定义
"""


class BmsError(Exception):
    """
    仿真器异常基类
    """


class SchedulingError(BmsError):
    """
    事件调度异常，例如事件时间早于当前时钟
    """


class SelectionError(BmsError):
    """
    动作选择异常，例如可选臂集合为空
    """


class ContractViolation(BmsError, ValueError):
    """
    调用约定被破坏，例如上下文维度不匹配或奖励超出[0,1]
    """


class ConfigError(BmsError, ValueError):
    """
    配置错误
    """
