"""
信道接入测试用例
"""
import unittest
from types import SimpleNamespace
from unittest.mock import MagicMock, patch

import numpy as np

from senweaver_bms.config import MacConfig
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.bonding_mode import BondingMode
from senweaver_bms.enums.frame_kind import FrameKind
from senweaver_bms.harness.binding import Decision
from senweaver_bms.harness.reward import compute_reward
from senweaver_bms.mac import (
    BackoffProcess, LearnerStation, LegacyStation, TxopExchange, TxQueue, bonding_decision, next_cw
)
from senweaver_bms.medium.channel import Medium
from senweaver_bms.medium.phy import PhyProfile
from senweaver_bms.metrics.collector import MetricsCollector
from senweaver_bms.model.action import ActionTriple, allocation_of
from senweaver_bms.model.frame import FrameTx, MsduBatch


class FixedBinding:
    """
    每个周期给出固定动作的绑定
    """

    def __init__(self, channels, primary, cw=16):
        self.action = ActionTriple(allocation_of(channels), primary, cw)
        self.rewards = []
        self.durations = []

    def decide(self, features):
        return Decision(self.action)

    def learn(self, decision, reward):
        self.rewards.append(reward)

    def learn_from_duration(self, decision, d_ms, d_max_ms=10.0):
        self.durations.append(d_ms)
        reward = compute_reward(d_ms, d_max_ms)
        self.learn(decision, reward)
        return reward


def make_world(mac=None, duration_us=1_000_000):
    scheduler = EventScheduler()
    return SimpleNamespace(
        scheduler=scheduler,
        medium=Medium(scheduler, 100_000),
        phy=PhyProfile(),
        mac=mac or MacConfig(per=0.0),
        streams=RandomStreams(0),
        collector=MetricsCollector(0, 0, duration_us, duration_us, [1, 2], [1]),
        duration_us=duration_us,
    )


def common(world):
    return (world.scheduler, world.medium, world.phy, world.mac, world.streams, world.collector)


class TestBondingDecision(unittest.TestCase):
    """
    bonding_decision测试用例
    """

    def test_scb(self):
        full = allocation_of({1, 2, 3, 4})
        self.assertIsNone(bonding_decision(BondingMode.SCB, full, 1, {1, 3, 4}))
        self.assertEqual(bonding_decision(BondingMode.SCB, full, 1, {1, 2, 3, 4}), full.channels)

    def test_dcb_largest_valid_allocation(self):
        """
        测试DCB选择包含主信道的最大合法分配
        """
        full = allocation_of({1, 2, 3, 4})
        self.assertEqual(bonding_decision(BondingMode.DCB, full, 3, {2, 3, 4}), frozenset({3, 4}))
        self.assertEqual(bonding_decision(BondingMode.DCB, allocation_of({3, 4}), 3, {3}), frozenset({3}))
        self.assertEqual(bonding_decision(BondingMode.DCB, full, 2, {1, 2, 3, 4}), full.channels)

    def test_dcb_contains_primary(self):
        full = allocation_of({1, 2, 3, 4})
        rng = np.random.default_rng(2)
        for _ in range(100):
            idle = {c for c in (1, 2, 3, 4) if rng.random() < 0.5}
            primary = int(rng.integers(1, 5))
            channels = bonding_decision(BondingMode.DCB, full, primary, idle)
            self.assertIn(primary, channels)
            self.assertTrue(channels <= idle | {primary})


class TestNextCw(unittest.TestCase):
    """
    二进制指数退避测试用例
    """

    def test_rules(self):
        self.assertEqual(next_cw(256, True), 16)
        self.assertEqual(next_cw(1024, False), 1024)
        self.assertEqual(next_cw(16, False), 32)

    def test_trajectory_stays_on_ladder(self):
        cw = 16
        rng = np.random.default_rng(0)
        for _ in range(200):
            cw = next_cw(cw, bool(rng.random() < 0.3))
            self.assertIn(cw, (16, 32, 64, 128, 256, 512, 1024))


class TestTxQueue(unittest.TestCase):
    """
    TxQueue测试用例
    """

    def test_overflow(self):
        queue = TxQueue(2, bss=2)
        self.assertTrue(queue.push(0))
        self.assertTrue(queue.push(1))
        self.assertFalse(queue.push(2))
        self.assertEqual(queue.overflow, 1)
        self.assertEqual(queue.utilization, 1.0)

    def test_ampdu_fill(self):
        """
        测试50个1500 B MSDU中聚合43个
        """
        mac = MacConfig()
        queue = TxQueue(mac.queue_capacity, bss=1)
        for t in range(50):
            queue.push(t)
        packets = queue.take(mac.ampdu_limit)
        self.assertEqual(len(packets), 43)
        self.assertEqual(len(queue), 7)

    def test_requeue_keeps_order(self):
        queue = TxQueue(10, bss=1)
        for t in range(5):
            queue.push(t)
        packets = queue.take(3)
        queue.requeue(packets[1:])
        self.assertEqual(queue.take(10).arrivals.tolist(), [1, 2, 3, 4])

    def test_fill(self):
        queue = TxQueue(500, bss=1)
        queue.push(0)
        self.assertEqual(queue.fill(10), 499)
        self.assertEqual(len(queue), 500)

    def test_push_many_drops_latest(self):
        queue = TxQueue(3, bss=1)
        dropped = queue.push_many(np.array([5, 6, 7, 8, 9]))
        self.assertEqual(dropped.tolist(), [8, 9])
        self.assertEqual(queue.overflow, 2)
        self.assertEqual(queue.take(3).arrivals.tolist(), [5, 6, 7])

    def test_in_flight_occupies_capacity(self):
        """
        测试在途MSDU在块确认前仍占用队列容量
        """
        queue = TxQueue(4, bss=1)
        queue.push_many(np.arange(4))
        batch = queue.take(3)
        self.assertEqual((len(queue), queue.in_flight, queue.free), (1, 3, 0))
        self.assertFalse(queue.push(10))
        queue.release(len(batch))
        self.assertEqual(queue.free, 3)
        self.assertEqual(queue.fill(20), 3)


class TestBackoffProcess(unittest.TestCase):
    """
    BackoffProcess测试用例
    """

    def setUp(self):
        self.world = make_world()
        self.grants = []
        self.rng = MagicMock()
        self.backoff = BackoffProcess(1, self.world.scheduler, self.world.medium, self.rng,
                                      9, 34, self.grants.append)

    def test_zero_draw(self):
        self.rng.integers.return_value = 0
        self.backoff.start(1, 16, 0)
        self.world.scheduler.run_until(1000)
        self.assertEqual(self.grants, [34])

    def test_pause_and_resume(self):
        """
        测试抽到5，两个时隙后信道变忙，计数冻结在3，空闲DIFS后继续
        """
        self.rng.integers.return_value = 5
        self.backoff.start(1, 16, 0)
        busy_at = 34 + 2 * 9
        self.world.scheduler.run_until(busy_at)
        self.world.medium.begin_frame(FrameTx(frozenset({1}), busy_at, 100, 7, FrameKind.DATA))
        self.assertEqual(self.backoff.counter, 3)
        self.world.scheduler.run_until(1000)
        self.assertEqual(self.grants, [busy_at + 100 + 34 + 3 * 9])

    def test_secondary_activity_ignored(self):
        self.rng.integers.return_value = 5
        self.backoff.start(1, 16, 0)
        self.world.medium.begin_frame(FrameTx(frozenset({2}), 0, 500, 7))
        self.world.scheduler.run_until(1000)
        self.assertEqual(self.grants, [34 + 45])

    def test_stop(self):
        self.rng.integers.return_value = 1
        self.backoff.start(1, 16, 0)
        self.backoff.stop()
        self.world.scheduler.run_until(1000)
        self.assertEqual(self.grants, [])


class TestTxopExchange(unittest.TestCase):
    """
    TxopExchange测试用例
    """

    def setUp(self):
        self.station = SimpleNamespace(phy=PhyProfile(), node_id=1)
        self.packets = MsduBatch.fresh(np.zeros(10), 1500, 1)

    def test_frame_sequence(self):
        exchange = TxopExchange(self.station, frozenset({1, 2}), 100, self.packets)
        self.assertEqual([f.kind for f in exchange.frames],
                         [FrameKind.RTS, FrameKind.CTS, FrameKind.DATA, FrameKind.BACK])
        self.assertEqual(exchange.frames[1].start, 100 + 52 + 16)
        self.assertEqual(exchange.end - 100, self.station.phy.exchange_duration(10 * 1500 * 8, 40))

    def test_frame_sequence_without_rts_cts(self):
        """
        测试关闭RTS/CTS时只发送数据帧与块确认
        """
        exchange = TxopExchange(self.station, frozenset({1}), 100, self.packets, rts_cts=False)
        self.assertEqual([f.kind for f in exchange.frames], [FrameKind.DATA, FrameKind.BACK])
        self.assertIs(exchange.data, exchange.frames[0])
        self.assertEqual(exchange.data.start, 100)
        phy = self.station.phy
        self.assertEqual(exchange.end - 100,
                         exchange.data.duration + phy.sifs + phy.frame_duration(FrameKind.BACK))
        self.assertEqual(exchange.end - 100, phy.exchange_duration(10 * 1500 * 8, 20, rts_cts=False))
        self.assertEqual(phy.exchange_duration(10 * 1500 * 8, 20) - (exchange.end - 100),
                         52 + 16 + 44 + 16)

    def test_collision_fails_all_but_consumes_draws(self):
        """
        测试冲突时全部MPDU失败，随机数照常消耗
        """
        exchange = TxopExchange(self.station, frozenset({1}), 0, self.packets)
        exchange.data.collided = True
        rng, reference = RandomStreams.fresh(1, 'per'), RandomStreams.fresh(1, 'per')
        self.assertFalse(exchange.outcomes(rng, 0.1).any())
        reference.random(10)
        self.assertEqual(rng.random(), reference.random())

    def test_all_success_without_errors(self):
        exchange = TxopExchange(self.station, frozenset({1}), 0, self.packets)
        self.assertTrue(exchange.outcomes(RandomStreams.fresh(0, 'per'), 0.0).all())


class TestStations(unittest.TestCase):
    """
    传统节点与学习节点测试用例
    """

    def test_retry_limit_drop(self):
        """
        测试重试次数已达上限的MSDU再次失败后被丢弃
        """
        world = make_world()
        station = LegacyStation(2, 1, *common(world), arrivals=np.zeros(0, dtype=np.int64))
        station.queue.push(0)
        packets = station.queue.take(1)
        packets.retries[:] = 7
        exchange = TxopExchange(station, frozenset({1}), 0, packets)
        with patch.object(TxopExchange, 'outcomes', return_value=np.zeros(1, dtype=bool)):
            station.finish_txop(exchange, 500)
        self.assertEqual(len(station.queue), 0)
        self.assertEqual(station.cw, 32)
        self.assertEqual(world.collector.finish().drops[2], 1)

    def test_failed_mpdus_requeued(self):
        world = make_world()
        station = LegacyStation(2, 1, *common(world), arrivals=np.zeros(0, dtype=np.int64))
        for t in range(3):
            station.queue.push(t)
        packets = station.queue.take(3)
        exchange = TxopExchange(station, frozenset({1}), 0, packets)
        with patch.object(TxopExchange, 'outcomes', return_value=np.array([True, False, True])):
            station.finish_txop(exchange, 500)
        self.assertEqual(station.queue.take(5).retries.tolist(), [1])
        record = world.collector.finish()
        self.assertEqual(record.delivered_bits[2], 2 * 1500 * 8)
        self.assertEqual(station.cw, 16)

    def test_lazy_admission(self):
        world = make_world()
        station = LegacyStation(2, 1, *common(world), arrivals=np.array([10, 20, 3000]))
        station.admit(20)
        self.assertEqual(len(station.queue), 2)

    def test_arrivals_during_txop_count_against_in_flight(self):
        """
        测试TXOP期间到达的MSDU在块确认前入队：在途MSDU仍占容量，溢出按到达时刻记为丢包
        """
        world = make_world(mac=MacConfig(per=0.0, queue_capacity=5), duration_us=2_000_000)
        world.collector = MetricsCollector(0, 0, 2_000_000, 1_000_000, [1, 2], [1])
        station = LegacyStation(2, 1, *common(world),
                                arrivals=np.array([0, 0, 0, 100, 200, 1_000_300]))
        station.admit(0)
        exchange = TxopExchange(station, frozenset({1}), 0, station.queue.take(3))
        with patch.object(TxopExchange, 'outcomes', return_value=np.zeros(3, dtype=bool)):
            station.finish_txop(exchange, 1_000_500)
        self.assertEqual(len(station.queue), 5)
        self.assertEqual(station.queue.in_flight, 0)
        # 失败的三个回到队首
        self.assertEqual(station.queue.take(5).retries.tolist(), [1, 1, 1, 0, 0])
        drops = world.collector.finish().interval_rows(2)
        self.assertEqual([s.drops for s in drops], [0, 1])

    def test_airtime_sanity(self):
        """
        测试单个饱和学习节点的平均周期时长与闭式结果相差不超过2%
        """
        world = make_world()
        learner = LearnerStation(1, FixedBinding({1}, 1, 16), BondingMode.SCB, *common(world))
        learner.start(0)
        world.scheduler.run_until(world.duration_us)
        phy = world.phy
        expected = phy.difs + 7.5 * phy.slot + phy.exchange_duration(43 * 1500 * 8, 20)
        durations = [row.d_ms * 1000 for row in world.collector.rows]
        self.assertGreater(len(durations), 100)
        self.assertAlmostEqual(np.mean(durations) / expected, 1.0, delta=0.02)
        # 周期首尾相接
        starts = [row.time_us for row in world.collector.rows]
        for (start, d), following in zip(zip(starts, durations), starts[1:]):
            self.assertEqual(start + round(d), following)

    def test_timeout_cycle(self):
        world = make_world()
        binding = FixedBinding({1}, 1, 16)
        learner = LearnerStation(1, binding, BondingMode.SCB, *common(world))
        world.medium.begin_frame(FrameTx(frozenset({1}), 0, 15_000, 9))
        learner.start(0)
        world.scheduler.run_until(12_000)
        first = world.collector.rows[0]
        self.assertEqual(first.cause, 'timeout')
        self.assertEqual(first.d_ms, 10.0)
        self.assertEqual(binding.rewards[0], 0.0)

    def test_scb_defers_until_secondary_idle(self):
        """
        测试SCB在次信道忙时推迟，DCB只在主信道发送
        """
        for mode, transmit in ((BondingMode.SCB, '1-2'), (BondingMode.DCB, '1')):
            world = make_world()
            learner = LearnerStation(1, FixedBinding({1, 2}, 1, 16), mode, *common(world))
            world.medium.begin_frame(FrameTx(frozenset({2}), 0, 5_000, 9))
            learner.start(0)
            world.scheduler.run_until(9_000)
            first = world.collector.rows[0]
            self.assertEqual(first.transmit, transmit)
            self.assertEqual(first.cause, 'acked')
            if mode is BondingMode.SCB:
                self.assertGreater(first.d_ms * 1000, 5_000)
                self.assertGreater(first.attempts, 1)
            else:
                self.assertLess(first.d_ms * 1000, 5_000)
                self.assertEqual(first.attempts, 1)

    def test_reward_from_cycle_duration(self):
        world = make_world()
        binding = FixedBinding({1}, 1, 16)
        learner = LearnerStation(1, binding, BondingMode.SCB, *common(world))
        learner.start(0)
        world.scheduler.run_until(50_000)
        rows = world.collector.rows
        self.assertGreater(len(rows), 5)
        self.assertEqual(binding.durations, [row.d_ms for row in rows])
        self.assertEqual(binding.rewards, [row.reward for row in rows])
        self.assertEqual(rows[0].reward, compute_reward(rows[0].d_ms))

    def test_txop_takes_arrivals_during_backoff(self):
        """
        测试退避期间到达的MSDU在TXOP开始时一并聚合
        """
        world = make_world()
        learner = LearnerStation(1, FixedBinding({1}, 1, 16), BondingMode.SCB, *common(world),
                                 arrivals=np.array([0, 30, 500_000]))
        learner.start(0)
        world.scheduler.run_until(5_000)
        self.assertEqual(len(world.collector.rows), 1)
        self.assertEqual(world.collector.finish().delivered_bits[1], 2 * 1500 * 8)

    def test_airtime_without_rts_cts(self):
        world = make_world(mac=MacConfig(per=0.0, rts_cts=False))
        learner = LearnerStation(1, FixedBinding({1}, 1, 16), BondingMode.SCB, *common(world))
        learner.start(0)
        world.scheduler.run_until(world.duration_us)
        phy = world.phy
        expected = phy.difs + 7.5 * phy.slot + phy.exchange_duration(43 * 1500 * 8, 20, rts_cts=False)
        durations = [row.d_ms * 1000 for row in world.collector.rows]
        self.assertAlmostEqual(np.mean(durations) / expected, 1.0, delta=0.02)


if __name__ == '__main__':
    unittest.main()
