"""
传输周期
"""
from dataclasses import dataclass, field
from typing import List, Optional

from senweaver_bms.enums.cycle_cause import CycleCause
from senweaver_bms.model.action import ActionTriple


@dataclass
class TransmissionCycle:
    """
    一个学习轮次：从开始竞争到块确认结束或超时
    """
    start: int  # 微秒
    action: ActionTriple
    end: Optional[int] = None
    cause: Optional[CycleCause] = None
    d_max_us: int = 10_000
    transmit_channels: Optional[frozenset] = None  # 实际发送使用的信道
    attempts: int = 1  # 周期内的竞争次数
    mpdu_outcomes: List[bool] = field(default_factory=list)

    @property
    def duration_ms(self) -> float:
        """
        周期时长D，单位毫秒，上限D_max
        """
        if self.end is None:
            raise ValueError("周期尚未结束")
        return min(self.end - self.start, self.d_max_us) / 1000.0

    def close(self, end: int, cause: CycleCause) -> None:
        self.end = end
        self.cause = cause
