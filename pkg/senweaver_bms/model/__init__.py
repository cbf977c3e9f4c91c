"""
模型定义
"""

from senweaver_bms.model.action import ChannelAllocation, ActionTriple, ALLOCATIONS, CW_LADDER
from senweaver_bms.model.frame import FrameTx, MsduBatch
from senweaver_bms.model.cycle import TransmissionCycle
from senweaver_bms.model.record import RoundRow, IntervalSummary, TrialRecord
from senweaver_bms.model.report import ValidationReport

__all__ = [
    'ChannelAllocation',
    'ActionTriple',
    'ALLOCATIONS',
    'CW_LADDER',
    'FrameTx',
    'MsduBatch',
    'TransmissionCycle',
    'RoundRow',
    'IntervalSummary',
    'TrialRecord',
    'ValidationReport'
]
