"""
动作空间与邻接图
"""

from senweaver_bms.actions.space import (
    ActionSpace, enumerate_joint, channel_space, primary_space, cw_space,
    space_for, mask_primary, allowed_primary_arms
)
from senweaver_bms.actions.graph import (
    NeighborGraph, channel_neighbors, channel_graph, linear_neighbors, joint_neighbors, graph_for
)

__all__ = [
    'ActionSpace',
    'enumerate_joint',
    'channel_space',
    'primary_space',
    'cw_space',
    'space_for',
    'mask_primary',
    'allowed_primary_arms',
    'NeighborGraph',
    'channel_neighbors',
    'channel_graph',
    'linear_neighbors',
    'joint_neighbors',
    'graph_for'
]
