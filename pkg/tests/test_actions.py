"""
动作空间与邻接图测试用例
"""
import unittest

from senweaver_bms.actions import (
    channel_neighbors, channel_graph, enumerate_joint, graph_for, joint_neighbors,
    linear_neighbors, mask_primary, allowed_primary_arms, space_for
)
from senweaver_bms.enums.architecture import AgentStage
from senweaver_bms.model.action import (
    ALLOCATIONS, BASIC_CHANNELS, CW_LADDER, ActionTriple, allocation_by_id, allocation_of
)


class TestChannelAllocation(unittest.TestCase):
    """
    信道分配测试用例
    """

    def test_seven_allocations(self):
        self.assertEqual(len(ALLOCATIONS), 7)
        self.assertEqual([a.width for a in ALLOCATIONS], [20, 20, 20, 20, 40, 40, 80])
        self.assertEqual(allocation_by_id(6).channels, frozenset({3, 4}))
        self.assertIsNone(allocation_of({2, 3}))
        with self.assertRaises(ValueError):
            allocation_by_id(8)

    def test_labels_and_encoding(self):
        """
        测试标签与多热编码
        """
        full = allocation_by_id(7)
        self.assertEqual(full.label, '#7')
        self.assertEqual(full.primary_label(3), '#7_3')
        self.assertEqual(allocation_by_id(2).primary_label(2), '#2')
        self.assertEqual(allocation_by_id(5).encoding(), (1, 1, 0, 0))

    def test_invalid_triple(self):
        with self.assertRaises(ValueError):
            ActionTriple(allocation_by_id(6), 1, 16)
        with self.assertRaises(ValueError):
            ActionTriple(allocation_by_id(6), 3, 48)


class TestActionSpace(unittest.TestCase):
    """
    动作空间测试用例
    """

    def test_joint_space_bijection(self):
        """
        测试联合动作空间与穷举结果一一对应
        """
        expected = set()
        for allocation in ALLOCATIONS:
            for primary in BASIC_CHANNELS:
                for cw in CW_LADDER:
                    if primary in allocation.channels:
                        expected.add((allocation.id, primary, cw))
        arms = enumerate_joint().arms
        self.assertEqual(len(arms), 84)
        self.assertEqual(len(set(arms)), 84)
        self.assertEqual({(a.channel.id, a.primary, a.cw) for a in arms}, expected)

    def test_joint_order_is_lexicographic(self):
        arms = enumerate_joint().arms
        keys = [(a.channel.id, a.primary, CW_LADDER.index(a.cw)) for a in arms]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(enumerate_joint().labels()[0], '#1/cw16')

    def test_factorized_spaces(self):
        self.assertEqual(len(space_for(AgentStage.CHANNEL)), 7)
        self.assertEqual(len(space_for(AgentStage.PRIMARY)), 4)
        self.assertEqual(len(space_for(AgentStage.CW)), 7)
        self.assertEqual(space_for(AgentStage.CW).arms, (16, 32, 64, 128, 256, 512, 1024))

    def test_mask_primary(self):
        """
        测试主信道掩码
        """
        self.assertEqual(mask_primary(allocation_of({3, 4})), frozenset({3, 4}))
        self.assertEqual(mask_primary(allocation_of({2})), frozenset({2}))
        self.assertEqual(len(mask_primary(allocation_by_id(7))), 4)
        self.assertEqual(allowed_primary_arms(allocation_of({3, 4})), [2, 3])
        self.assertEqual(allowed_primary_arms(None), [0, 1, 2, 3])


class TestNeighborGraph(unittest.TestCase):
    """
    OSUB邻接图测试用例
    """

    def test_channel_neighbors(self):
        self.assertEqual({a.id for a in channel_neighbors(allocation_by_id(1))}, {5, 7})
        self.assertEqual({a.id for a in channel_neighbors(allocation_by_id(7))}, {1, 2, 3, 4, 5, 6})
        self.assertEqual({a.id for a in channel_neighbors(allocation_by_id(5))}, {1, 2, 7})

    def test_linear_chain(self):
        """
        测试CW链式拓扑
        """
        chain = linear_neighbors(len(CW_LADDER))
        self.assertEqual(chain.neighbors(CW_LADDER.index(64)), [CW_LADDER.index(32), CW_LADDER.index(128)])
        self.assertEqual(chain.neighbors(0), [1])
        self.assertEqual(chain.max_degree, 2)
        self.assertEqual(linear_neighbors(3).max_degree, 2)

    def test_joint_neighbors(self):
        arms = enumerate_joint().arms
        graph = joint_neighbors()
        a = arms.index(ActionTriple(allocation_of({1}), 1, 16))
        b = arms.index(ActionTriple(allocation_of({1, 2}), 1, 32))
        c = arms.index(ActionTriple(allocation_of({3, 4}), 3, 16))
        self.assertIn(b, graph.neighbors(a))
        self.assertNotIn(c, graph.neighbors(a))
        self.assertNotIn(a, graph.neighbors(a))

    def test_joint_degree_by_exhaustive_scan(self):
        """
        测试联合图最大度等于穷举计数
        """
        arms = enumerate_joint().arms
        degrees = []
        for i, u in enumerate(arms):
            degree = 0
            for j, v in enumerate(arms):
                if i != j and u.channel.channels & v.channel.channels \
                        and abs(u.primary - v.primary) <= 1 \
                        and abs(CW_LADDER.index(u.cw) - CW_LADDER.index(v.cw)) <= 1:
                    degree += 1
            degrees.append(degree)
        self.assertEqual(joint_neighbors().max_degree, max(degrees))

    def test_graphs_connected_and_symmetric(self):
        for stage in AgentStage:
            graph = graph_for(stage)
            self.assertEqual(len(graph), len(space_for(stage)))
            self.assertTrue(graph.is_connected(), stage)
            self.assertTrue(graph.is_symmetric(), stage)
        self.assertIs(channel_graph(), graph_for(AgentStage.CHANNEL))


if __name__ == '__main__':
    unittest.main()
