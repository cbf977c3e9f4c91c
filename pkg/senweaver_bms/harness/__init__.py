"""
智能体与学习节点的绑定
"""

from senweaver_bms.harness.context import ContextFeatures, build_context, primary_encoding
from senweaver_bms.harness.reward import compute_reward
from senweaver_bms.harness.binding import AgentBinding, Decision

__all__ = [
    'ContextFeatures',
    'build_context',
    'primary_encoding',
    'compute_reward',
    'AgentBinding',
    'Decision'
]
