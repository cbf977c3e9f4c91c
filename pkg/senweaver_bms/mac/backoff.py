"""
退避过程
"""
import logging
from typing import Callable, Optional

import numpy as np

from senweaver_bms.engine.event import Event
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.medium.channel import ChannelListener, Medium

logger = logging.getLogger(__name__)


class BackoffProcess(ChannelListener):
    """
    主信道上的DCF退避

    计数器从U{0..CW-1}抽取；主信道空闲DIFS后每个空闲时隙减一，
    主信道变忙时暂停，再次空闲DIFS后继续；计数器为0时授予TXOP
    """

    def __init__(self, node_id: int, scheduler: EventScheduler, medium: Medium,
                 rng: np.random.Generator, slot_us: int, difs_us: int,
                 on_grant: Callable[[int], None]):
        """
        初始化

        Args:
            node_id: 节点编号，同时作为信道监听的键
            scheduler: 事件调度器
            medium: 介质
            rng: 退避随机数流
            slot_us: 时隙
            difs_us: DIFS
            on_grant: 授予TXOP时的回调，参数为当前时刻
        """
        self.node_id = node_id
        self.scheduler = scheduler
        self.medium = medium
        self.rng = rng
        self.slot = slot_us
        self.difs = difs_us
        self.on_grant = on_grant
        self.channel: Optional[int] = None
        self.counter = 0
        self.resume_at = 0
        self._expiry: Optional[Event] = None

    @property
    def active(self) -> bool:
        return self.channel is not None

    def start(self, channel: int, cw: int, now: int, fresh_difs: bool = False) -> int:
        """
        开始一次退避

        Args:
            channel: 主信道
            cw: 竞争窗口
            now: 当前时刻
            fresh_difs: 是否从now重新等待DIFS（SCB推迟后重新竞争）

        Returns:
            抽取的计数器
        """
        self.stop()
        self.channel = channel
        self.counter = int(self.rng.integers(cw))
        self.medium.subscribe(channel, self.node_id, self)
        if not self.medium.is_busy(channel):
            idle_since = now if fresh_difs else self.medium.idle_since(channel)
            self._arm(max(now, idle_since + self.difs))
        return self.counter

    def stop(self) -> None:
        EventScheduler.cancel(self._expiry)
        self._expiry = None
        if self.channel is not None:
            self.medium.unsubscribe(self.channel, self.node_id)
        self.channel = None

    def _arm(self, resume_at: int) -> None:
        self.resume_at = resume_at
        self._expiry = self.scheduler.at(resume_at + self.counter * self.slot,
                                         EventKind.BACKOFF_EXPIRY, self.node_id, self._expire)

    def _expire(self, now: int) -> None:
        self._expiry = None
        self.counter = 0
        self.stop()
        self.on_grant(now)

    def on_channel_busy(self, channel: int, now: int) -> None:
        if self._expiry is None:
            return
        if now >= self._expiry.time:
            # 同一时隙到期，照常发送
            return
        if now > self.resume_at:
            self.counter -= (now - self.resume_at) // self.slot
        EventScheduler.cancel(self._expiry)
        self._expiry = None

    def on_channel_idle(self, channel: int, now: int) -> None:
        if self._expiry is None and self.active:
            self._arm(now + self.difs)
