"""
动作选择频率
"""
from collections import Counter
from typing import Dict, Iterable, Optional

from senweaver_bms.model.record import RoundRow


def selection_frequency(rows: Iterable[RoundRow], interval: Optional[int] = None,
                        interval_us: Optional[int] = None) -> Dict[str, float]:
    """
    各动作标签在周期中的占比

    Args:
        rows: 轮次日志
        interval: 区间编号，None表示全部
        interval_us: 区间长度，指定interval时必需

    Returns:
        标签 -> 占比，键按标签排序；没有周期时为空
    """
    if interval is not None:
        if not interval_us:
            raise ValueError("按区间统计时需要interval_us")
        low, high = interval * interval_us, (interval + 1) * interval_us
        rows = [row for row in rows if low <= row.time_us < high]
    counts = Counter(row.label or row.alloc for row in rows)
    total = sum(counts.values())
    if not total:
        return {}
    return {label: counts[label] / total for label in sorted(counts)}


def optimal_rate(rows: Iterable[RoundRow], channel: Optional[int]) -> Optional[float]:
    """
    选择给定20 MHz信道（分配#channel）的周期占比
    """
    rows = list(rows)
    if channel is None or not rows:
        return None
    target = f"#{channel}"
    return sum(1 for row in rows if row.alloc == target) / len(rows)
