"""
仿真运行测试用例
"""
import unittest
from collections import Counter

import numpy as np
import pytest

from senweaver_bms.config import RunConfig
from senweaver_bms.metrics.export import rounds_frame
from senweaver_bms.simulation import Simulation, Trial


def short_config(**kwargs):
    flat = {'scenario.duration_s': 1.0, 'scenario.interval_s': 0.25}
    flat.update(kwargs.pop('flat', {}))
    return RunConfig.from_flat(flat, **kwargs)


class TestTrial(unittest.TestCase):
    """
    Trial测试用例
    """

    def test_identical_event_trace(self):
        """
        测试相同配置与种子得到完全相同的事件轨迹
        """
        config = short_config(algorithm='osub', seed=3)
        first, second = Trial(config, 0, trace=True), Trial(config, 0, trace=True)
        first.run()
        second.run()
        self.assertEqual(first.scheduler.trace, second.scheduler.trace)
        self.assertGreater(len(first.scheduler.trace), 1000)

    def test_interval_switches(self):
        trial = Trial(short_config(), 0)
        record = trial.run()
        self.assertEqual(trial.switches, [250_000, 500_000, 750_000])
        self.assertEqual(len(record.interval_rows(1)), 4)
        self.assertEqual(len(record.optimal_channels), 4)

    def test_sp_stations(self):
        trial = Trial(short_config(), 0)
        self.assertEqual(sorted(trial.stations), [1, 2, 3, 4, 5])
        record = trial.run()
        self.assertGreater(len(record.rows), 0)
        self.assertTrue(all(row.bss == 1 for row in record.rows))
        self.assertTrue(all(0.0 <= row.reward <= 1.0 for row in record.rows))
        self.assertIn('bss1', record.agents)

    def test_mp_dcb(self):
        """
        测试多学习者DCB：每个学习者都有轮次且发送信道包含主信道
        """
        config = short_config(flat={'scenario.name': 'mp'}, algorithm='erlb', architecture='ma', bonding='dcb')
        record = Trial(config, 0).run()
        self.assertEqual(sorted({row.bss for row in record.rows}), [1, 2, 3])
        for row in record.rows:
            if row.cause == 'acked':
                self.assertIn(str(row.primary), row.transmit.split('-'))
        self.assertEqual(set(record.agents['bss2']), {'channel', 'primary', 'cw'})

    def test_scb_transmits_whole_allocation(self):
        config = short_config(flat={'scenario.name': 'mp'}, algorithm='random')
        record = Trial(config, 1).run()
        for row in record.rows:
            if row.cause == 'acked':
                self.assertEqual(row.transmit.count('-') + 1, {'#5': 2, '#6': 2, '#7': 4}.get(row.alloc, 1))


class TestSimulation(unittest.TestCase):
    """
    Simulation测试用例
    """

    def test_parallel_matches_serial(self):
        config = short_config(algorithm='linucb', trials=2, seed=5)
        serial = Simulation(config).run_trials(jobs=1)
        parallel = Simulation(config).run_trials(jobs=2)
        for a, b in zip(serial, parallel):
            self.assertTrue(rounds_frame(a).equals(rounds_frame(b)))
            self.assertEqual(a.delivered_bits, b.delivered_bits)

    def test_trial_seeds(self):
        records = Simulation(short_config(algorithm='random', trials=2, seed=10)).run_trials()
        self.assertEqual([r.seed for r in records], [10, 11])


def mean_goodput(records, bss=1):
    return float(np.mean([r.goodput_mbps(bss) for r in records]))


def final_primary(record, bss, window=200):
    """
    试验最后window个周期中最常用的主信道
    """
    primaries = [row.primary for row in record.rows_of(bss)[-window:]]
    return Counter(primaries).most_common(1)[0][0]


@pytest.mark.slow
class TestSinglePlayerScb(unittest.TestCase):
    """
    单学习者SCB场景的定性结果，20次60秒试验
    """
    algorithms = ('linucb', 'ucb', 'osub', 'erlb')

    @classmethod
    def setUpClass(cls):
        cls.records = {}
        for algorithm in cls.algorithms + ('random',):
            config = RunConfig(algorithm=algorithm, architecture='sa', bonding='scb', trials=20, jobs=4)
            cls.records[algorithm] = Simulation(config).run_trials()

    def last_interval_rate(self, algorithm):
        return float(np.mean([r.interval_rows(1)[3].optimal_rate for r in self.records[algorithm]]))

    def test_linucb_tracks_optimal_channel(self):
        self.assertGreaterEqual(self.last_interval_rate('linucb'), 0.90)

    def test_linucb_tracks_better_than_ucb(self):
        self.assertGreater(self.last_interval_rate('linucb'), self.last_interval_rate('ucb'))

    def test_osub_lowest_goodput(self):
        """
        测试SCB下OSUB的平均有效吞吐量是四种学习算法中最低的
        """
        goodput = {algorithm: mean_goodput(self.records[algorithm]) for algorithm in self.algorithms}
        self.assertEqual(min(goodput, key=goodput.get), 'osub', goodput)

    def test_learning_beats_random(self):
        baseline = mean_goodput(self.records['random'])
        for algorithm in self.algorithms:
            with self.subTest(algorithm=algorithm):
                self.assertGreater(mean_goodput(self.records[algorithm]), baseline)


@pytest.mark.slow
class TestDynamicBonding(unittest.TestCase):
    """
    DCB场景的定性结果
    """

    def test_osub_gains_from_dcb(self):
        """
        测试单学习者场景下两种架构的OSUB在DCB下都比SCB有更高的有效吞吐量
        """
        for architecture in ('sa', 'ma'):
            goodput = {}
            for bonding in ('scb', 'dcb'):
                config = RunConfig(algorithm='osub', architecture=architecture, bonding=bonding,
                                   trials=10, jobs=4)
                goodput[bonding] = mean_goodput(Simulation(config).run_trials())
            with self.subTest(architecture=architecture):
                self.assertGreater(goodput['dcb'], goodput['scb'])

    def test_mp_learners_spread_primaries(self):
        """
        测试多学习者DCB下至少80%的试验结束时各学习者的主信道两两不同
        """
        config = RunConfig.from_flat({'scenario.name': 'mp'}, algorithm='erlb', architecture='ma',
                                     bonding='dcb', trials=10, jobs=4)
        records = Simulation(config).run_trials()
        distinct = 0
        for record in records:
            primaries = [final_primary(record, bss) for bss in record.learner_ids]
            distinct += len(set(primaries)) == len(primaries)
        self.assertGreaterEqual(distinct / len(records), 0.8)


if __name__ == '__main__':
    unittest.main()
