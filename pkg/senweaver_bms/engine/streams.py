"""
具名随机数流
"""
import zlib
from typing import Dict

import numpy as np


class RandomStreams:
    """
    由试验种子派生的具名随机数流

    每个随机消费者（业务、退避、误包、各智能体的探索）使用独立的流，
    修改某一消费者不会扰动其他消费者的抽样序列
    """

    def __init__(self, seed: int):
        """
        初始化

        Args:
            seed: 试验种子
        """
        self.seed = int(seed)
        self._streams: Dict[str, np.random.Generator] = {}

    def get(self, label: str) -> np.random.Generator:
        """
        获取指定标签的随机数流，同一标签在一次试验中返回同一实例

        Args:
            label: 流标签，例如 'traffic' 或 'agent/bss1/cw'

        Returns:
            numpy随机数生成器
        """
        stream = self._streams.get(label)
        if stream is None:
            stream = self.fresh(self.seed, label)
            self._streams[label] = stream
        return stream

    @staticmethod
    def fresh(seed: int, label: str) -> np.random.Generator:
        """
        构造一个新的随机数流，相同(seed, label)得到相同序列
        """
        sequence = np.random.SeedSequence(
            entropy=int(seed) & 0xFFFFFFFFFFFFFFFF,
            spawn_key=(zlib.crc32(label.encode('utf-8')),)
        )
        return np.random.Generator(np.random.PCG64(sequence))
