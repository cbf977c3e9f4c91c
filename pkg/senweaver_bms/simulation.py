"""
仿真运行
"""
import logging
import os
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from senweaver_bms.builder import AgentBuilder
from senweaver_bms.config import RunConfig
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.algorithm import DefaultAlgorithm
from senweaver_bms.enums.bonding_mode import BondingMode
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.errors import ConfigError
from senweaver_bms.mac.learner import LearnerStation
from senweaver_bms.mac.legacy import LegacyStation
from senweaver_bms.mac.station import Station
from senweaver_bms.medium.channel import Medium
from senweaver_bms.medium.phy import PhyProfile
from senweaver_bms.metrics.collector import MetricsCollector
from senweaver_bms.metrics.export import FLOAT_FORMAT, makedirs, export, write_summary
from senweaver_bms.model.record import TrialRecord
from senweaver_bms.scenario.presets import build_scenario
from senweaver_bms.scenario.traffic import generate_arrivals, reference_capacity
from senweaver_bms.testbed.env import make_env
from senweaver_bms.testbed.play import bandit_factory, play

logger = logging.getLogger(__name__)


class Trial:
    """
    一次试验：按场景创建节点并运行到结束时刻
    """

    def __init__(self, config: RunConfig, trial: int, trace: bool = False):
        """
        初始化

        Args:
            config: 运行配置
            trial: 试验编号，种子为 seed + trial
            trace: 是否记录事件轨迹
        """
        self.config = config
        self.trial = trial
        self.seed = config.trial_seed(trial)
        self.streams = RandomStreams(self.seed)
        self.scheduler = EventScheduler(trace=trace)
        self.phy = PhyProfile(config.phy)
        self.medium = Medium(self.scheduler, config.mac.window_us)
        self.spec = build_scenario(config, self.streams)
        scenario = config.scenario
        self.collector = MetricsCollector(
            trial, self.seed, scenario.duration_us, scenario.interval_us,
            [b.bss for b in self.spec.bss_list], [b.bss for b in self.spec.learners],
        )
        self.stations: Dict[int, Station] = {}
        self.switches: List[int] = []
        self._build_stations()

    def _build_stations(self) -> None:
        config = self.config
        scenario = config.scenario
        c_ref = reference_capacity(config.phy, config.mac)
        common = (self.scheduler, self.medium, self.phy, config.mac, self.streams, self.collector)
        bonding = BondingMode.of(config.bonding)
        for spec in self.spec.bss_list:
            arrivals = generate_arrivals(spec.traffic, scenario.duration_us, scenario.interval_us,
                                         c_ref, self.streams.get(f"traffic/bss{spec.bss}"))
            if spec.allocation is not None:
                station = LegacyStation(spec.bss, spec.primary, *common, arrivals=arrivals)
            else:
                binding = (AgentBuilder.builder()
                           .algorithm(config.algorithm)
                           .architecture(config.architecture)
                           .hyperparameters(config.hyper.get(config.algorithm, {}))
                           .streams(self.streams, spec.bss)
                           .build())
                station = LearnerStation(spec.bss, binding, bonding, *common, arrivals=arrivals)
                station.trial = self.trial
            self.stations[spec.bss] = station

    def _switch(self, now: int) -> None:
        self.switches.append(now)
        index = now // self.config.scenario.interval_us
        optimal = self.spec.optimal_channels[index] if index < len(self.spec.optimal_channels) else None
        logger.info("试验%d: t=%.0fs 进入区间%d，最优信道 %s", self.trial, now / 1e6, index, optimal)

    def run(self) -> TrialRecord:
        """
        运行试验

        Returns:
            试验记录
        """
        scenario = self.config.scenario
        for i in range(1, scenario.n_intervals):
            self.scheduler.at(i * scenario.interval_us, EventKind.INTERVAL_SWITCH, -1, self._switch)
        for station in self.stations.values():
            station.start(0)
        self.scheduler.run_until(scenario.duration_us)
        agents = {f"bss{b}": s.binding.snapshot() for b, s in self.stations.items()
                  if isinstance(s, LearnerStation)}
        record = self.collector.finish(self.spec.optimal_channels, self.spec.loads(), agents)
        logger.info("试验%d完成: 事件%d个, J=%.3f, %s", self.trial, self.scheduler.processed, record.fairness,
                    ", ".join(f"BSS{b}={record.goodput_mbps(b):.1f}Mbps" for b in record.bss_ids))
        return record


def run_trial(config: RunConfig, trial: int) -> TrialRecord:
    return Trial(config, trial).run()


class Simulation:
    """
    仿真门面：运行全部试验并导出结果
    """

    def __init__(self, config: RunConfig):
        self.config = config

    def run_trials(self, jobs: Optional[int] = None) -> List[TrialRecord]:
        """
        运行全部试验，并行与串行结果一致

        Args:
            jobs: 并行进程数，默认取配置

        Returns:
            按试验编号排序的记录
        """
        jobs = jobs or self.config.jobs
        trials = range(self.config.trials)
        logger.info("运行%d次试验: %s %s %s %s (jobs=%d)", self.config.trials, self.config.scenario.name,
                    self.config.algorithm, self.config.architecture, self.config.bonding, jobs)
        if jobs == 1:
            return [run_trial(self.config, k) for k in trials]
        return list(Parallel(n_jobs=jobs)(delayed(run_trial)(self.config, k) for k in trials))

    def run(self, output_dir: Optional[str] = None) -> Dict:
        """
        运行并写出结果

        Returns:
            汇总
        """
        records = self.run_trials()
        directory = output_dir or self.config.resolved_output_dir()
        return export(records, directory, self.config.to_flat(), self.config.plots)


def run_synthetic(config: RunConfig, output_dir: Optional[str] = None) -> Dict:
    """
    在合成环境上运行所选算法，写出regret.csv与summary.json

    scenario.name形如 synth:bernoulli；种子为 seed + k，k < trials

    Args:
        config: 运行配置
        output_dir: 输出目录，默认取配置

    Returns:
        汇总
    """
    kind = config.scenario.name.partition(':')[2]
    rounds = config.scenario.synth_rounds
    try:
        env = make_env(kind, rounds)
    except ValueError as e:
        raise ConfigError(str(e)) from e
    source = DefaultAlgorithm.get_source(config.algorithm)
    if source.contextual and env.dim is None:
        raise ConfigError(f"{source.title}需要上下文环境，{kind}没有上下文")
    factory = bandit_factory(config.algorithm, config.hyper.get(config.algorithm), config.architecture)
    seeds = [config.trial_seed(k) for k in range(config.trials)]
    result = play(env, factory, rounds, seeds, config.jobs)

    directory = makedirs(output_dir or config.resolved_output_dir())
    frame = pd.DataFrame({
        'round': np.arange(1, rounds + 1),
        'regret_mean': result.mean_regret,
        'regret_std': result.regret.std(axis=0),
        'optimal_rate': result.optimal.mean(axis=0),
    })
    frame.to_csv(os.path.join(directory, 'regret.csv'), index=False, float_format=FLOAT_FORMAT)
    summary = {
        "scenario": config.scenario.name,
        "algorithm": config.algorithm,
        "rounds": rounds,
        "seeds": seeds,
        "final_regret": result.final_regret(),
        "window_optimal_rates": result.window_rates().tolist(),
        "config": config.to_flat(),
    }
    logger.info("汇总已写出: %s", write_summary(summary, directory))
    return summary
