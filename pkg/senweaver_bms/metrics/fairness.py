"""
Jain公平性指数
"""
import logging
from typing import Sequence

import numpy as np

logger = logging.getLogger(__name__)


def jain_index(goodputs: Sequence[float]) -> float:
    """
    J = (Σx)² / (n·Σx²)

    Args:
        goodputs: 各BSS的平均有效吞吐量

    Returns:
        指数，位于[1/n, 1]；全为0时按约定返回1并告警
    """
    x = np.asarray(list(goodputs), dtype=float)
    if x.size == 0:
        raise ValueError("jain_index需要至少一个值")
    if (x < 0).any():
        raise ValueError("吞吐量不能为负数")
    square_sum = float(np.sum(x * x))
    if square_sum == 0.0:
        logger.warning("所有吞吐量均为0，Jain指数按约定记为1")
        return 1.0
    return float(np.sum(x) ** 2 / (x.size * square_sum))
