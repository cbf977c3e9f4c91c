"""
PHY时序与帧时长
"""
import math
from typing import Dict

from senweaver_bms.config import PhyConfig
from senweaver_bms.enums.frame_kind import FrameKind
from senweaver_bms.errors import ConfigError


class PhyProfile:
    """
    PHY参数视图，提供速率表与帧时长计算
    """

    def __init__(self, config: PhyConfig = None):
        """
        初始化

        Args:
            config: PHY配置，默认使用802.11ax 5 GHz默认值
        """
        self.config = config or PhyConfig()
        self._rates: Dict[int, float] = {
            20: self.config.rate_20,
            40: self.config.rate_40,
            80: self.config.rate_80,
        }
        self.slot = self.config.slot_us
        self.sifs = self.config.sifs_us
        self.difs = self.config.difs_us
        self.pifs = self.config.pifs_us

    def data_rate(self, width: int) -> float:
        """
        数据速率，bit/us

        Args:
            width: 带宽，MHz

        Returns:
            速率
        """
        try:
            return self._rates[width]
        except KeyError:
            raise ConfigError(f"不支持的带宽: {width} MHz") from None

    def frame_duration(self, kind: FrameKind, payload_bits: int = 0, width: int = 20) -> int:
        """
        帧时长

        Args:
            kind: 帧类型，控制帧使用固定时长
            payload_bits: 数据帧负载比特数
            width: 带宽，MHz

        Returns:
            时长，微秒
        """
        if kind is FrameKind.RTS:
            return self.config.rts_us
        if kind is FrameKind.CTS:
            return self.config.cts_us
        if kind is FrameKind.BACK:
            return self.config.back_us
        rate = self.data_rate(width)
        if payload_bits < 0:
            raise ValueError("payload_bits不能为负数")
        return self.config.preamble_us + math.ceil(payload_bits / rate)

    def exchange_duration(self, payload_bits: int, width: int, rts_cts: bool = True) -> int:
        """
        RTS-SIFS-CTS-SIFS-DATA-SIFS-BACK 完整帧交换时长；rts_cts为False时不含RTS与CTS
        """
        protection = self.config.rts_us + self.sifs + self.config.cts_us + self.sifs if rts_cts else 0
        return (protection + self.frame_duration(FrameKind.DATA, payload_bits, width)
                + self.sifs + self.config.back_us)
