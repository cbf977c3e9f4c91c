"""
试验内的指标累计
"""
import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from senweaver_bms.metrics.fairness import jain_index
from senweaver_bms.metrics.selection import optimal_rate, selection_frequency
from senweaver_bms.model.record import IntervalSummary, RoundRow, TrialRecord

logger = logging.getLogger(__name__)

TIMELINE_BIN_US = 1_000_000


class MetricsCollector:
    """
    累计交付比特、时延、丢包与轮次日志，试验结束时生成TrialRecord
    """

    def __init__(self, trial: int, seed: int, duration_us: int, interval_us: int,
                 bss_ids: Sequence[int], learner_ids: Sequence[int]):
        """
        初始化

        Args:
            trial: 试验编号
            seed: 试验种子
            duration_us: 试验时长
            interval_us: 负载区间长度
            bss_ids: 全部BSS编号
            learner_ids: 学习BSS编号
        """
        self.trial = trial
        self.seed = seed
        self.duration_us = duration_us
        self.interval_us = interval_us
        self.bss_ids = list(bss_ids)
        self.learner_ids = list(learner_ids)
        self.n_intervals = max(1, -(-duration_us // interval_us))
        n_bins = max(1, -(-duration_us // TIMELINE_BIN_US))
        self._bits = {b: [0] * self.n_intervals for b in self.bss_ids}
        self._delays: Dict[int, List[List[float]]] = {b: [[] for _ in range(self.n_intervals)] for b in self.bss_ids}
        self._drops = {b: [0] * self.n_intervals for b in self.bss_ids}
        self._timeline = {b: [0] * n_bins for b in self.bss_ids}
        self.rows: List[RoundRow] = []

    def _interval(self, now: int) -> int:
        return min(now // self.interval_us, self.n_intervals - 1)

    def delivered(self, bss: int, now: int, bits: int, delays_us: Sequence[int]) -> None:
        """
        一次块确认交付的MSDU

        Args:
            bss: BSS编号
            now: 块确认结束时刻
            bits: 交付的总比特数
            delays_us: 每个MSDU从到达到确认的时延
        """
        if now > self.duration_us:
            return
        i = self._interval(now)
        self._bits[bss][i] += bits
        self._delays[bss][i].extend((np.asarray(delays_us, dtype=float) / 1000.0).tolist())
        self._timeline[bss][min(now // TIMELINE_BIN_US, len(self._timeline[bss]) - 1)] += bits

    def dropped(self, bss: int, now: int, count: int = 1) -> None:
        if now > self.duration_us or count <= 0:
            return
        self._drops[bss][self._interval(now)] += count

    def round(self, row: RoundRow) -> None:
        self.rows.append(row)

    def finish(self, optimal_channels: Optional[List[Optional[int]]] = None,
               loads: Optional[Dict[int, List[float]]] = None,
               agents: Optional[Dict[str, Any]] = None) -> TrialRecord:
        """
        生成试验记录

        Args:
            optimal_channels: 每个区间的最优信道（单学习者场景）
            loads: 传统BSS每个区间的负载
            agents: 各学习节点智能体的快照

        Returns:
            试验记录
        """
        optimal_channels = list(optimal_channels or [])
        record = TrialRecord(
            trial=self.trial, seed=self.seed, duration_us=self.duration_us,
            interval_us=self.interval_us, bss_ids=self.bss_ids, learner_ids=self.learner_ids,
            rows=self.rows, optimal_channels=optimal_channels, loads=dict(loads or {}),
            agents=dict(agents or {}),
        )
        for bss in self.bss_ids:
            record.delivered_bits[bss] = sum(self._bits[bss])
            record.drops[bss] = sum(self._drops[bss])
            record.timeline[bss] = list(self._timeline[bss])
            for i in range(self.n_intervals):
                start = i * self.interval_us
                duration = min(self.duration_us, start + self.interval_us) - start
                summary = IntervalSummary(
                    trial=self.trial, bss=bss, interval=i,
                    delivered_bits=self._bits[bss][i], duration_us=duration,
                    delays_ms=self._delays[bss][i], drops=self._drops[bss][i],
                )
                if bss in self.learner_ids:
                    rows = record.rows_of(bss, i)
                    summary.frequencies = selection_frequency(rows)
                    if i < len(optimal_channels):
                        summary.optimal_rate = optimal_rate(rows, optimal_channels[i])
                record.intervals.append(summary)
        total_drops = sum(record.drops.values())
        if total_drops:
            logger.warning("试验%d: 共丢弃%d个MSDU", self.trial, total_drops)
        record.fairness = jain_index([record.goodput_mbps(b) for b in self.bss_ids])
        return record
