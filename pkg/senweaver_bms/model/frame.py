"""
帧与MSDU
"""
from dataclasses import dataclass, field
from typing import FrozenSet

import numpy as np

from senweaver_bms.enums.frame_kind import FrameKind


@dataclass
class FrameTx:
    """
    介质上的一次帧传输
    """
    channels: FrozenSet[int]  # 占用的基本信道
    start: int  # 微秒
    duration: int  # 微秒
    source: int  # 节点编号
    kind: FrameKind = FrameKind.DATA
    collided: bool = field(default=False, compare=False)  # 与其他数据帧重叠

    @property
    def end(self) -> int:
        return self.start + self.duration


@dataclass
class MsduBatch:
    """
    按队列顺序排列的一组MSDU，例如一个A-MPDU的内容

    每个MSDU一列：到达时间与失败次数
    """
    arrivals: np.ndarray  # int64，微秒
    retries: np.ndarray  # int64
    size: int  # 每个MSDU的字节数
    bss: int

    @classmethod
    def fresh(cls, arrivals, size: int, bss: int) -> 'MsduBatch':
        """
        新到达、尚未失败过的MSDU
        """
        arrivals = np.asarray(arrivals, dtype=np.int64).reshape(-1)
        return cls(arrivals, np.zeros(arrivals.shape[0], dtype=np.int64), size, bss)

    def __len__(self) -> int:
        return int(self.arrivals.shape[0])

    def __getitem__(self, index) -> 'MsduBatch':
        return MsduBatch(self.arrivals[index], self.retries[index], self.size, self.bss)

    @property
    def payload_bits(self) -> int:
        return len(self) * self.size * 8
