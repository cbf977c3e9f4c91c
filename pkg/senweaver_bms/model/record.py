"""
试验记录模型
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

ROUND_COLUMNS = ['trial', 'time_us', 'bss', 'alloc', 'primary', 'cw', 'D_ms', 'reward', 'cause']


@dataclass
class RoundRow:
    """
    一个学习轮次的日志行
    """
    trial: int
    time_us: int  # 周期开始时间
    bss: int
    alloc: str  # 分配标签，例如 #5
    primary: int
    cw: int
    d_ms: float
    reward: float
    cause: str
    label: str = ''  # 带主信道下标的标签，例如 #5_1
    transmit: str = ''  # 实际发送的信道，例如 1-2
    attempts: int = 1  # 周期内的竞争次数，SCB每推迟一次加一
    contexts: Dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    def as_csv_row(self) -> List[Any]:
        return [self.trial, self.time_us, self.bss, self.alloc, self.primary,
                self.cw, self.d_ms, self.reward, self.cause]


@dataclass
class IntervalSummary:
    """
    一个BSS在一个负载区间内的汇总
    """
    trial: int
    bss: int
    interval: int
    delivered_bits: int
    duration_us: int
    delays_ms: List[float] = field(default_factory=list, repr=False)
    drops: int = 0
    frequencies: Dict[str, float] = field(default_factory=dict)
    optimal_rate: Optional[float] = None  # 选择区间最优信道的比例

    @property
    def goodput_mbps(self) -> float:
        # bit/us 即 Mbit/s
        return self.delivered_bits / self.duration_us if self.duration_us else 0.0

    @property
    def mean_delay_ms(self) -> float:
        return float(np.mean(self.delays_ms)) if self.delays_ms else float('nan')

    @property
    def delivered(self) -> int:
        return len(self.delays_ms)


@dataclass
class TrialRecord:
    """
    一次试验的完整记录
    """
    trial: int
    seed: int
    duration_us: int
    interval_us: int
    bss_ids: List[int]
    learner_ids: List[int]
    rows: List[RoundRow] = field(default_factory=list, repr=False)
    intervals: List[IntervalSummary] = field(default_factory=list, repr=False)
    delivered_bits: Dict[int, int] = field(default_factory=dict)
    drops: Dict[int, int] = field(default_factory=dict)
    timeline: Dict[int, List[int]] = field(default_factory=dict, repr=False)  # 每秒交付比特
    optimal_channels: List[Optional[int]] = field(default_factory=list)
    loads: Dict[int, List[float]] = field(default_factory=dict)
    agents: Dict[str, Any] = field(default_factory=dict, repr=False)
    fairness: float = 1.0

    def goodput_mbps(self, bss: int) -> float:
        """
        整个试验的平均有效吞吐量，Mbit/s
        """
        return self.delivered_bits.get(bss, 0) / self.duration_us

    def interval_rows(self, bss: int) -> List[IntervalSummary]:
        return [summary for summary in self.intervals if summary.bss == bss]

    def rows_of(self, bss: int, interval: Optional[int] = None) -> List[RoundRow]:
        """
        指定BSS（可选指定区间）的轮次日志
        """
        rows = [row for row in self.rows if row.bss == bss]
        if interval is None:
            return rows
        low, high = interval * self.interval_us, (interval + 1) * self.interval_us
        return [row for row in rows if low <= row.time_us < high]
