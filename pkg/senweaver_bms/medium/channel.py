"""
基本信道占用与滑动窗口统计
"""
import logging
from abc import ABC, abstractmethod
from collections import deque
from typing import Deque, Dict, FrozenSet, List, Tuple

from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.enums.frame_kind import FrameKind
from senweaver_bms.model.action import BASIC_CHANNELS
from senweaver_bms.model.frame import FrameTx

logger = logging.getLogger(__name__)


class ChannelListener(ABC):
    """
    信道忙闲变化的监听者（退避过程）
    """

    @abstractmethod
    def on_channel_busy(self, channel: int, now: int) -> None:
        pass

    @abstractmethod
    def on_channel_idle(self, channel: int, now: int) -> None:
        pass


class Medium:
    """
    四个20 MHz基本信道

    所有节点互相覆盖，载波侦听是理想的：任何帧都被所有节点侦听到
    """

    def __init__(self, scheduler: EventScheduler, window_us: int = 100_000,
                 channels: Tuple[int, ...] = BASIC_CHANNELS):
        """
        初始化

        Args:
            scheduler: 事件调度器
            window_us: 占用率滑动窗口长度
            channels: 基本信道编号
        """
        self.scheduler = scheduler
        self.window_us = int(window_us)
        self.channels = tuple(channels)
        self._busy: Dict[int, bool] = {c: False for c in self.channels}
        self._busy_until: Dict[int, int] = {c: 0 for c in self.channels}
        self._idle_since: Dict[int, int] = {c: 0 for c in self.channels}
        # 每个信道的忙区间 [start, end)，有序、不相交，最后一段可能尚未结束
        self._intervals: Dict[int, Deque[List[int]]] = {c: deque() for c in self.channels}
        # 各信道忙区间总长，随入队与剪枝增减
        self._busy_total: Dict[int, int] = {c: 0 for c in self.channels}
        self._listeners: Dict[int, Dict[int, ChannelListener]] = {c: {} for c in self.channels}
        self._active_data: List[FrameTx] = []
        self.frames = 0

    def subscribe(self, channel: int, key: int, listener: ChannelListener) -> None:
        self._listeners[channel][key] = listener

    def unsubscribe(self, channel: int, key: int) -> None:
        self._listeners[channel].pop(key, None)

    def begin_frame(self, tx: FrameTx) -> None:
        """
        帧开始占用信道

        重叠是允许的，冲突即为重叠；重叠的数据帧均被标记为collided

        Args:
            tx: 帧，start不早于当前时钟；晚于当前时钟时延后开始
        """
        if tx.duration <= 0:
            return
        now = self.scheduler.now
        if tx.start > now:
            self.scheduler.at(tx.start, EventKind.FRAME_START, tx.source,
                              lambda _t, frame=tx: self.begin_frame(frame))
            return
        end = tx.end
        self.frames += 1
        if tx.kind is FrameKind.DATA:
            self._active_data = [frame for frame in self._active_data if frame.end > now]
            for other in self._active_data:
                if other.source != tx.source and other.channels & tx.channels:
                    other.collided = True
                    tx.collided = True
            self._active_data.append(tx)
        extended = False
        for c in sorted(tx.channels):
            intervals = self._intervals[c]
            if intervals and intervals[-1][1] >= now:
                if end > intervals[-1][1]:
                    self._busy_total[c] += end - intervals[-1][1]
                    intervals[-1][1] = end
            else:
                intervals.append([now, end])
                self._busy_total[c] += end - now
            self._prune(c, now)
            was_idle = not self.is_busy(c)
            if end > self._busy_until[c]:
                self._busy_until[c] = end
                extended = True
            self._busy[c] = True
            if was_idle:
                for listener in list(self._listeners[c].values()):
                    listener.on_channel_busy(c, now)
        if extended:
            self.scheduler.at(end, EventKind.FRAME_END, tx.source,
                              lambda t, frame=tx: self._end_frame(frame, t))

    def _end_frame(self, tx: FrameTx, now: int) -> None:
        for c in sorted(tx.channels):
            if self._busy[c] and self._busy_until[c] <= now:
                self._busy[c] = False
                self._idle_since[c] = now
                for listener in list(self._listeners[c].values()):
                    listener.on_channel_idle(c, now)

    def _prune(self, channel: int, now: int) -> None:
        horizon = now - self.window_us
        intervals = self._intervals[channel]
        while intervals and intervals[0][1] <= horizon:
            low, high = intervals.popleft()
            self._busy_total[channel] -= high - low

    def is_busy(self, channel: int) -> bool:
        """
        当前时刻信道是否忙；在当前时刻结束的帧不算忙
        """
        return self._busy[channel] and self._busy_until[channel] > self.scheduler.now

    def busy_flags(self) -> Tuple[int, ...]:
        """
        各基本信道的瞬时忙闲标志
        """
        return tuple(1 if self.is_busy(c) else 0 for c in self.channels)

    def idle_since(self, channel: int) -> int:
        """
        信道最近一次转为空闲的时刻；忙时返回忙结束时刻
        """
        if self._busy[channel]:
            return self._busy_until[channel]
        return self._idle_since[channel]

    def idle_set(self, now: int, duration: int) -> FrozenSet[int]:
        """
        在[now - duration, now]内一直空闲的信道集合

        Args:
            now: 当前时刻
            duration: 空闲判定时长，例如PIFS

        Returns:
            信道集合
        """
        return frozenset(c for c in self.channels
                         if not self.is_busy(c) and now - self.idle_since(c) >= duration)

    def occupancy_ratio(self, channel: int, now: int) -> float:
        """
        滑动窗口内的信道占用率

        Args:
            channel: 基本信道
            now: 当前时刻

        Returns:
            [now - W, now]内忙时长 / min(now, W)；now为0时返回0
        """
        if now <= 0:
            return 0.0
        start = max(0, now - self.window_us)
        self._prune(channel, min(now, self.scheduler.now))
        intervals = self._intervals[channel]
        busy = self._busy_total[channel]
        # 总长减去窗口左侧与now之后的部分；区间有序不相交，两端各只需看少数几段
        for low, high in intervals:
            if low >= start:
                break
            busy -= min(high, start) - low
        for low, high in reversed(intervals):
            if high <= now:
                break
            busy -= high - max(low, now)
        return min(1.0, max(0, busy) / min(now, self.window_us))

    def occupancy(self, now: int) -> Tuple[float, ...]:
        return tuple(self.occupancy_ratio(c, now) for c in self.channels)
