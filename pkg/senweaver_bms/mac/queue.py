"""
发送队列
"""
import numpy as np

from senweaver_bms.model.frame import MsduBatch


class TxQueue:
    """
    有界FIFO队列，溢出的MSDU被丢弃并计数

    队列内容以numpy数组保存；已取出但尚未块确认的MSDU（in_flight）仍占用容量，直到release
    """

    def __init__(self, capacity: int, bss: int, msdu_bytes: int = 1500):
        self.capacity = int(capacity)
        self.bss = bss
        self.msdu_bytes = msdu_bytes
        self._queued = MsduBatch.fresh([], msdu_bytes, bss)
        self.in_flight = 0
        self.overflow = 0

    def __len__(self) -> int:
        return len(self._queued)

    def __bool__(self) -> bool:
        return len(self._queued) > 0

    @property
    def utilization(self) -> float:
        return len(self._queued) / self.capacity

    @property
    def free(self) -> int:
        return self.capacity - len(self._queued) - self.in_flight

    def push(self, arrival: int) -> bool:
        """
        入队一个MSDU

        Returns:
            队列已满时返回False
        """
        return len(self.push_many(np.array([arrival], dtype=np.int64))) == 0

    def push_many(self, arrivals: np.ndarray) -> np.ndarray:
        """
        按到达顺序入队，放不下的部分被丢弃

        Args:
            arrivals: 升序的到达时间

        Returns:
            被丢弃的MSDU的到达时间
        """
        arrivals = np.asarray(arrivals, dtype=np.int64)
        accepted = min(max(0, self.free), arrivals.shape[0])
        if accepted:
            self._append(MsduBatch.fresh(arrivals[:accepted], self.msdu_bytes, self.bss))
        dropped = arrivals[accepted:]
        self.overflow += dropped.shape[0]
        return dropped

    def fill(self, now: int) -> int:
        """
        补满队列（满缓冲业务），返回补充的数量
        """
        added = max(0, self.free)
        if added:
            self._append(MsduBatch.fresh(np.full(added, now), self.msdu_bytes, self.bss))
        return added

    def take(self, limit: int) -> MsduBatch:
        """
        取出队首最多limit个MSDU组成A-MPDU
        """
        n = min(limit, len(self._queued))
        batch = self._queued[:n]
        self._queued = self._queued[n:]
        self.in_flight += n
        return batch

    def release(self, count: int) -> None:
        """
        块确认结束，释放count个在途MSDU占用的容量
        """
        self.in_flight = max(0, self.in_flight - count)

    def requeue(self, batch: MsduBatch) -> None:
        """
        失败的MSDU按原顺序放回队首
        """
        if len(batch):
            self._queued = _concat(batch, self._queued)

    def _append(self, batch: MsduBatch) -> None:
        self._queued = _concat(self._queued, batch)


def _concat(head: MsduBatch, tail: MsduBatch) -> MsduBatch:
    return MsduBatch(np.concatenate((head.arrivals, tail.arrivals)),
                     np.concatenate((head.retries, tail.retries)), head.size, head.bss)
