"""
OSUB邻接图
"""
from typing import Dict, FrozenSet, List

import networkx as nx
from cachetools import cached, LRUCache

from senweaver_bms.actions.space import enumerate_joint
from senweaver_bms.enums.architecture import AgentStage
from senweaver_bms.model.action import ALLOCATIONS, BASIC_CHANNELS, CW_LADDER, ChannelAllocation


class NeighborGraph:
    """
    臂索引上的无向图
    """

    def __init__(self, graph: nx.Graph):
        """
        初始化

        Args:
            graph: 节点为臂索引的networkx图
        """
        self.graph = graph
        self.vertices: List[int] = sorted(graph.nodes)
        self._adjacency: Dict[int, List[int]] = {v: sorted(graph.neighbors(v)) for v in self.vertices}
        self.max_degree = max((len(n) for n in self._adjacency.values()), default=0)

    def neighbors(self, vertex: int) -> List[int]:
        return self._adjacency[vertex]

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_connected(self.graph)

    def is_symmetric(self) -> bool:
        return all(u in self._adjacency[v] for u in self.vertices for v in self._adjacency[u])

    def __len__(self) -> int:
        return len(self.vertices)


def channel_neighbors(allocation: ChannelAllocation) -> FrozenSet[ChannelAllocation]:
    """
    与给定分配共享至少一个基本信道的其他分配
    """
    return frozenset(other for other in ALLOCATIONS
                     if other != allocation and other.channels & allocation.channels)


@cached(cache=LRUCache(maxsize=1))
def channel_graph() -> NeighborGraph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(ALLOCATIONS)))
    for index, allocation in enumerate(ALLOCATIONS):
        for other in channel_neighbors(allocation):
            graph.add_edge(index, ALLOCATIONS.index(other))
    return NeighborGraph(graph)


@cached(cache=LRUCache(maxsize=8))
def linear_neighbors(size: int) -> NeighborGraph:
    """
    链式拓扑，每个臂与相邻取值相连

    Args:
        size: 臂数量，主信道为4，CW为7

    Returns:
        邻接图
    """
    return NeighborGraph(nx.path_graph(size))


@cached(cache=LRUCache(maxsize=1))
def joint_neighbors() -> NeighborGraph:
    """
    联合动作图：共享信道、主信道与CW索引各相差不超过1
    """
    arms = enumerate_joint().arms
    graph = nx.Graph()
    graph.add_nodes_from(range(len(arms)))
    for i, a in enumerate(arms):
        for j in range(i + 1, len(arms)):
            b = arms[j]
            if not a.channel.channels & b.channel.channels:
                continue
            if abs(a.primary - b.primary) > 1:
                continue
            if abs(CW_LADDER.index(a.cw) - CW_LADDER.index(b.cw)) > 1:
                continue
            graph.add_edge(i, j)
    return NeighborGraph(graph)


def graph_for(stage: AgentStage) -> NeighborGraph:
    """
    根据决策阶段获取OSUB邻接图
    """
    if stage is AgentStage.SA:
        return joint_neighbors()
    if stage is AgentStage.CHANNEL:
        return channel_graph()
    if stage is AgentStage.PRIMARY:
        return linear_neighbors(len(BASIC_CHANNELS))
    return linear_neighbors(len(CW_LADDER))
