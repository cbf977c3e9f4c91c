"""
枚举类型模块
"""

from senweaver_bms.enums.algorithm import AlgorithmSource, DefaultAlgorithm
from senweaver_bms.enums.architecture import Architecture, AgentStage
from senweaver_bms.enums.bonding_mode import BondingMode
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.enums.frame_kind import FrameKind
from senweaver_bms.enums.node_role import NodeRole
from senweaver_bms.enums.cycle_cause import CycleCause

__all__ = [
    'AlgorithmSource',
    'DefaultAlgorithm',
    'Architecture',
    'AgentStage',
    'BondingMode',
    'EventKind',
    'FrameKind',
    'NodeRole',
    'CycleCause'
]
