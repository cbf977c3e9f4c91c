"""
指标与结果导出
"""

from senweaver_bms.metrics.fairness import jain_index
from senweaver_bms.metrics.selection import selection_frequency, optimal_rate
from senweaver_bms.metrics.collector import MetricsCollector, TIMELINE_BIN_US
from senweaver_bms.metrics.export import export, summarize, write_trial, write_summary, format_summary

__all__ = [
    'jain_index',
    'selection_frequency',
    'optimal_rate',
    'MetricsCollector',
    'TIMELINE_BIN_US',
    'export',
    'summarize',
    'write_trial',
    'write_summary',
    'format_summary'
]
