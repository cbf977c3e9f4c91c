"""
传统DCF节点
"""
import logging

import numpy as np

from senweaver_bms.enums.node_role import NodeRole
from senweaver_bms.mac.station import Station
from senweaver_bms.mac.txop import TxopExchange, execute_txop

logger = logging.getLogger(__name__)


class LegacyStation(Station):
    """
    固定在一个20 MHz信道上的传统AP

    失败（块确认中没有成功的MPDU）时CW加倍至上限，成功时复位到最小值；没有10 ms上限
    """
    role = NodeRole.LEGACY

    def __init__(self, bss: int, channel: int, *args, **kwargs):
        super().__init__(bss, *args, **kwargs)
        self.channel = channel
        self.channels = frozenset({channel})
        self.cw = self.mac.cw_min

    def start(self, now: int) -> None:
        self.admit(now)
        if self.queue:
            self.backoff.start(self.channel, self.cw, now)
        else:
            self.wait_for_arrival()

    def on_grant(self, now: int) -> None:
        execute_txop(self, self.channels, now)

    def after_txop(self, exchange: TxopExchange, outcomes: np.ndarray, now: int) -> None:
        self.cw = next_cw(self.cw, bool(outcomes.any()), self.mac.cw_min, self.mac.cw_max)
        self.start(now)


def next_cw(cw: int, success: bool, cw_min: int = 16, cw_max: int = 1024) -> int:
    """
    二进制指数退避
    """
    if success:
        return cw_min
    return min(2 * cw, cw_max)
