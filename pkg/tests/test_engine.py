"""
事件调度器与随机数流测试用例
"""
import unittest

import numpy as np

from senweaver_bms.engine.event import Event
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.errors import SchedulingError


class TestEventScheduler(unittest.TestCase):
    """
    EventScheduler测试用例
    """

    def setUp(self):
        self.scheduler = EventScheduler(trace=True)
        self.fired = []

    def _record(self, name):
        return lambda t: self.fired.append((t, name))

    def test_time_order(self):
        """
        测试按时间出队
        """
        self.scheduler.at(100, EventKind.ARRIVAL, 1, self._record('late'))
        self.scheduler.at(50, EventKind.ARRIVAL, 1, self._record('early'))
        self.scheduler.run_until(200)
        self.assertEqual(self.fired, [(50, 'early'), (100, 'late')])

    def test_insertion_order_on_equal_time(self):
        """
        测试同一时刻按插入顺序出队
        """
        for name in ('a', 'b', 'c'):
            self.scheduler.at(100, EventKind.FRAME_END, 1, self._record(name))
        self.scheduler.run_until(100)
        self.assertEqual([name for _, name in self.fired], ['a', 'b', 'c'])

    def test_cancel(self):
        handle = self.scheduler.at(10, EventKind.BACKOFF_EXPIRY, 1, self._record('x'))
        EventScheduler.cancel(handle)
        self.scheduler.run_until(100)
        self.assertEqual(self.fired, [])
        self.assertEqual(self.scheduler.pending(), 0)

    def test_past_event_rejected(self):
        self.scheduler.run_until(100)
        with self.assertRaises(SchedulingError):
            self.scheduler.at(99, EventKind.ARRIVAL, 1, self._record('x'))
        with self.assertRaises(SchedulingError):
            self.scheduler.schedule(Event(time=5))

    def test_run_until_empty_queue(self):
        """
        测试空队列运行到结束时刻
        """
        self.assertEqual(self.scheduler.run_until(60_000_000), 60_000_000)
        self.assertEqual(self.scheduler.now, 60_000_000)

    def test_future_event_left_unprocessed(self):
        self.scheduler.at(61_000_000, EventKind.INTERVAL_SWITCH, -1, self._record('x'))
        self.scheduler.run_until(60_000_000)
        self.assertEqual(self.fired, [])
        self.assertEqual(self.scheduler.pending(), 1)

    def test_run_until_backwards_rejected(self):
        self.scheduler.run_until(10)
        with self.assertRaises(SchedulingError):
            self.scheduler.run_until(5)

    def test_clock_monotone_and_trace(self):
        """
        测试事件中再调度事件时时钟单调
        """
        def chain(t):
            if t < 50:
                self.scheduler.after(7, EventKind.ARRIVAL, 2, chain)
        self.scheduler.at(0, EventKind.ARRIVAL, 2, chain)
        self.scheduler.run_until(100)
        times = [time for time, _, _ in self.scheduler.trace]
        self.assertEqual(times, sorted(times))
        self.assertEqual(times[-1], 56)
        self.assertEqual(self.scheduler.trace[0], (0, 'ARRIVAL', 2))


class TestRandomStreams(unittest.TestCase):
    """
    RandomStreams测试用例
    """

    def test_same_seed_same_label(self):
        a = RandomStreams(7).get('traffic').random(5)
        b = RandomStreams(7).get('traffic').random(5)
        np.testing.assert_array_equal(a, b)

    def test_labels_are_independent(self):
        """
        测试消费一个流不影响其他流
        """
        s1, s2 = RandomStreams(7), RandomStreams(7)
        s1.get('agent/bss1/sa').random(1000)
        np.testing.assert_array_equal(s1.get('traffic').random(5), s2.get('traffic').random(5))

    def test_distinct_seeds_and_labels(self):
        self.assertFalse(np.array_equal(RandomStreams(1).get('x').random(5), RandomStreams(2).get('x').random(5)))
        streams = RandomStreams(1)
        self.assertFalse(np.array_equal(streams.get('x').random(5), streams.get('y').random(5)))

    def test_get_returns_same_instance(self):
        streams = RandomStreams(3)
        self.assertIs(streams.get('per/bss1'), streams.get('per/bss1'))


if __name__ == '__main__':
    unittest.main()
