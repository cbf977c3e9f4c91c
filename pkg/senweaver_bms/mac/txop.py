"""
TXOP帧交换
"""
from typing import FrozenSet, List

import numpy as np

from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.enums.frame_kind import FrameKind
from senweaver_bms.model.frame import FrameTx, MsduBatch


class TxopExchange:
    """
    RTS-SIFS-CTS-SIFS-A-MPDU-SIFS-BACK；关闭RTS/CTS时为A-MPDU-SIFS-BACK

    各帧依次占用发送信道；数据帧与其他节点的数据帧重叠时全部MPDU失败，
    否则每个MPDU独立以PER失败
    """

    def __init__(self, station, channels: FrozenSet[int], start: int, packets: MsduBatch,
                 rts_cts: bool = True):
        self.station = station
        self.channels = frozenset(channels)
        self.start = start
        self.packets = packets
        phy = station.phy
        width = 20 * len(self.channels)
        kinds = [FrameKind.DATA, FrameKind.BACK]
        if rts_cts:
            kinds = [FrameKind.RTS, FrameKind.CTS] + kinds
        t = start
        self.frames: List[FrameTx] = []
        for kind in kinds:
            duration = phy.frame_duration(kind, packets.payload_bits, width)
            self.frames.append(FrameTx(self.channels, t, duration, station.node_id, kind))
            t += duration + phy.sifs
        self.end = self.frames[-1].end
        self._data = next(frame for frame in self.frames if frame.kind is FrameKind.DATA)

    @property
    def data(self) -> FrameTx:
        return self._data

    def outcomes(self, rng: np.random.Generator, per: float) -> np.ndarray:
        """
        每个MPDU是否被块确认
        """
        draws = rng.random(len(self.packets))
        if self.data.collided:
            return np.zeros(len(self.packets), dtype=bool)
        return draws >= per


def execute_txop(station, channels: FrozenSet[int], now: int) -> TxopExchange:
    """
    在发送信道上执行一次帧交换，块确认结束时回调station.finish_txop

    Args:
        station: 发送节点
        channels: 发送信道
        now: TXOP开始时刻

    Returns:
        帧交换
    """
    station.admit(now)
    packets = station.queue.take(station.mac.ampdu_limit)
    exchange = TxopExchange(station, channels, now, packets, station.mac.rts_cts)
    for frame in exchange.frames:
        station.medium.begin_frame(frame)
    station.scheduler.at(exchange.end, EventKind.TXOP_END, station.node_id,
                         lambda t, ex=exchange: station.finish_txop(ex, t))
    return exchange
