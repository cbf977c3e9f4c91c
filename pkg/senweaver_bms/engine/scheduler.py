"""
事件调度器
"""
import heapq
import logging
from typing import Callable, List, Optional, Tuple

from senweaver_bms.engine.event import Event
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.errors import SchedulingError

logger = logging.getLogger(__name__)


class EventScheduler:
    """
    单线程事件调度器，时间单位为整数微秒
    """

    def __init__(self, trace: bool = False):
        """
        初始化

        Args:
            trace: 是否记录已处理事件的轨迹，用于确定性校验
        """
        self.now = 0
        # 堆元素为 (time, sequence, event)
        self._queue: List[Tuple[int, int, Event]] = []
        self._sequence = 0
        self.processed = 0
        self.trace: Optional[List[Tuple[int, str, int]]] = [] if trace else None

    def schedule(self, event: Event) -> Event:
        """
        调度事件

        Args:
            event: 事件，time不得早于当前时钟

        Returns:
            事件句柄
        """
        if event.time < self.now:
            raise SchedulingError(f"事件时间{event.time}早于当前时钟{self.now}")
        event.sequence = self._sequence
        self._sequence += 1
        heapq.heappush(self._queue, (event.time, event.sequence, event))
        return event

    def at(self, time: int, kind: EventKind, target: int,
           action: Callable[[int], None]) -> Event:
        """
        在指定时刻调度回调，回调参数为当前时钟
        """
        return self.schedule(Event(time=int(time), kind=kind, target=target, action=action))

    def after(self, delay: int, kind: EventKind, target: int,
              action: Callable[[int], None]) -> Event:
        return self.at(self.now + int(delay), kind, target, action)

    @staticmethod
    def cancel(handle: Optional[Event]) -> None:
        """
        取消事件，惰性删除
        """
        if handle is not None:
            handle.cancel()

    def run_until(self, t_end: int) -> int:
        """
        处理所有time <= t_end的事件

        Args:
            t_end: 结束时刻，微秒

        Returns:
            结束后的时钟，等于t_end
        """
        if t_end < self.now:
            raise SchedulingError(f"结束时刻{t_end}早于当前时钟{self.now}")
        queue = self._queue
        while queue and queue[0][0] <= t_end:
            event = heapq.heappop(queue)[2]
            if event.cancelled:
                continue
            self.now = event.time
            self.processed += 1
            if self.trace is not None:
                self.trace.append((event.time, event.kind.name, event.target))
            if event.action is not None:
                event.action(event.time)
        self.now = t_end
        logger.debug("run_until(%d): 处理事件%d个", t_end, self.processed)
        return self.now

    def pending(self) -> int:
        """
        队列中未取消的事件数
        """
        return sum(1 for _, _, event in self._queue if not event.cancelled)
