"""
业务模型
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from cachetools import cached, LRUCache

from senweaver_bms.config import MacConfig, PhyConfig
from senweaver_bms.enums.frame_kind import FrameKind
from senweaver_bms.medium.phy import PhyProfile

logger = logging.getLogger(__name__)

FULL_BUFFER = 'full-buffer'
VARIABLE_LOAD = 'variable-load'
MEAN_BACKOFF_SLOTS = 7.5  # CW=16时 E[U{0..15}]


@dataclass
class TrafficModel:
    """
    业务模型：满缓冲，或按区间变化负载的泊松到达
    """
    kind: str = FULL_BUFFER
    loads: List[float] = field(default_factory=list)  # 每个区间的负载比例
    msdu_bytes: int = 1500

    def __post_init__(self):
        if self.kind not in (FULL_BUFFER, VARIABLE_LOAD):
            raise ValueError(f"未知的业务类型: {self.kind}")
        for load in self.loads:
            if not 0.0 <= load <= 1.0:
                raise ValueError(f"负载{load}不在[0,1]内")

    @property
    def full_buffer(self) -> bool:
        return self.kind == FULL_BUFFER


@cached(cache=LRUCache(maxsize=16))
def reference_capacity(phy: PhyConfig = PhyConfig(), mac: MacConfig = MacConfig()) -> float:
    """
    单个饱和20 MHz BSS（CW=16）的有效吞吐量C_ref，bit/us

    Args:
        phy: PHY参数
        mac: MAC参数

    Returns:
        一个周期交付的期望比特数 / 期望周期时长
    """
    profile = PhyProfile(phy)
    bits = mac.ampdu_limit * mac.msdu_bytes * 8
    cycle = (profile.difs + MEAN_BACKOFF_SLOTS * profile.slot
             + profile.exchange_duration(bits, 20, mac.rts_cts))
    return bits * (1.0 - mac.per) / cycle


def generate_arrivals(model: TrafficModel, t_end: int, interval_us: int, c_ref: float,
                      rng: np.random.Generator) -> Optional[np.ndarray]:
    """
    生成MSDU到达时刻

    Args:
        model: 业务模型
        t_end: 结束时刻，微秒
        interval_us: 区间长度
        c_ref: 参考容量，bit/us
        rng: 业务随机数流

    Returns:
        升序的到达时刻；满缓冲返回None
    """
    if model.full_buffer:
        return None
    chunks = []
    for i, load in enumerate(model.loads):
        start = i * interval_us
        end = min(t_end, start + interval_us)
        if end <= start:
            break
        rate = load * c_ref / (8 * model.msdu_bytes)  # MSDU/us
        count = rng.poisson(rate * (end - start))
        chunks.append(np.sort(rng.integers(start, end, size=count)))
    if not chunks:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(chunks).astype(np.int64)


def sp_load_schedule(rng: np.random.Generator, n_intervals: int = 4, n_legacy: int = 4,
                     low: Tuple[float, float] = (0.10, 0.20),
                     high: Tuple[float, float] = (0.80, 0.90)) -> Tuple[np.ndarray, List[int]]:
    """
    单学习者场景的负载表：每个区间随机一个传统BSS降到低负载，其余保持高负载

    Args:
        rng: 试验的业务随机数流
        n_intervals: 区间数
        n_legacy: 传统BSS数
        low: 低负载范围
        high: 高负载范围

    Returns:
        (负载矩阵[传统BSS, 区间], 每个区间低负载BSS的下标)
    """
    loads = np.empty((n_legacy, n_intervals))
    underloaded = []
    for i in range(n_intervals):
        k = int(rng.integers(n_legacy))
        underloaded.append(k)
        loads[:, i] = rng.uniform(high[0], high[1], size=n_legacy)
        loads[k, i] = rng.uniform(low[0], low[1])
    return loads, underloaded
