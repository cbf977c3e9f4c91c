"""
节点基类
"""
import logging
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from senweaver_bms.config import MacConfig
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.enums.node_role import NodeRole
from senweaver_bms.mac.backoff import BackoffProcess
from senweaver_bms.mac.queue import TxQueue
from senweaver_bms.mac.txop import TxopExchange
from senweaver_bms.medium.channel import Medium
from senweaver_bms.medium.phy import PhyProfile
from senweaver_bms.metrics.collector import MetricsCollector

logger = logging.getLogger(__name__)


class Station(ABC):
    """
    一个BSS的发送端（AP）

    业务到达预先生成，在决策点惰性入队；arrivals为None表示满缓冲
    """
    role: NodeRole

    def __init__(self, bss: int, scheduler: EventScheduler, medium: Medium, phy: PhyProfile,
                 mac: MacConfig, streams: RandomStreams, collector: MetricsCollector,
                 arrivals: Optional[np.ndarray] = None):
        """
        初始化

        Args:
            bss: BSS编号，同时作为节点编号
            scheduler: 事件调度器
            medium: 介质
            phy: PHY参数
            mac: MAC参数
            streams: 试验的随机数流
            collector: 指标累计
            arrivals: 升序的MSDU到达时刻
        """
        self.bss = bss
        self.node_id = bss
        self.scheduler = scheduler
        self.medium = medium
        self.phy = phy
        self.mac = mac
        self.collector = collector
        self.queue = TxQueue(mac.queue_capacity, bss, mac.msdu_bytes)
        self.backoff = BackoffProcess(bss, scheduler, medium, streams.get(f"backoff/bss{bss}"),
                                      phy.slot, phy.difs, self.on_grant)
        self.per_rng = streams.get(f"per/bss{bss}")
        self.arrivals = arrivals
        self._next = 0
        self.txops = 0

    @property
    def full_buffer(self) -> bool:
        return self.arrivals is None

    def admit(self, now: int) -> None:
        """
        把到达时刻不晚于now的MSDU放入队列，溢出按到达时刻计为丢包

        在每次取出A-MPDU与块确认释放之前调用；两次调用之间队列只增不减，
        因此惰性入队与逐个到达入队的结果相同
        """
        if self.full_buffer:
            self.queue.fill(now)
            return
        stop = int(np.searchsorted(self.arrivals, now, side='right'))
        if stop > self._next:
            dropped = self.queue.push_many(self.arrivals[self._next:stop])
            self._next = stop
            for arrival in dropped.tolist():
                self.collector.dropped(self.bss, arrival)

    def wait_for_arrival(self) -> None:
        """
        队列为空时等待下一个到达
        """
        if self.arrivals is None or self._next >= len(self.arrivals):
            return
        self.scheduler.at(int(self.arrivals[self._next]), EventKind.ARRIVAL, self.node_id, self.start)

    def finish_txop(self, exchange: TxopExchange, now: int) -> None:
        """
        块确认结束：成功的MSDU出队并记录时延，失败的重试或在达到重试上限后丢弃
        """
        self.txops += 1
        self.admit(now)
        packets = exchange.packets
        self.queue.release(len(packets))
        outcomes = np.asarray(exchange.outcomes(self.per_rng, self.mac.per), dtype=bool)
        acked = packets[outcomes]
        if len(acked):
            self.collector.delivered(self.bss, now, acked.payload_bits, now - acked.arrivals)
        failed = packets[~outcomes]
        exhausted = failed.retries >= self.mac.retry_limit
        retry = failed[~exhausted]
        retry.retries += 1
        self.queue.requeue(retry)
        dropped = int(exhausted.sum())
        if dropped:
            self.collector.dropped(self.bss, now, dropped)
        self.after_txop(exchange, outcomes, now)

    @abstractmethod
    def start(self, now: int) -> None:
        """
        开始（或在有数据时继续）信道接入
        """
        pass

    @abstractmethod
    def on_grant(self, now: int) -> None:
        pass

    @abstractmethod
    def after_txop(self, exchange: TxopExchange, outcomes: np.ndarray, now: int) -> None:
        pass
