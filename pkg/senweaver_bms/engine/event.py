"""
事件定义
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

from senweaver_bms.enums.event_kind import EventKind


@dataclass(order=True)
class Event:
    """
    离散事件，按(time, sequence)字典序出队

    调度后返回的Event本身即为句柄，可用于取消
    """
    time: int  # 微秒
    sequence: int = 0  # 调度时由调度器分配
    kind: EventKind = field(default=EventKind.ARRIVAL, compare=False)
    target: int = field(default=-1, compare=False)  # 节点编号，-1表示全局
    action: Optional[Callable[[int], None]] = field(default=None, compare=False, repr=False)
    cancelled: bool = field(default=False, compare=False)

    def cancel(self) -> None:
        self.cancelled = True
