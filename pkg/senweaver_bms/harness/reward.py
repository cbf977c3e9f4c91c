"""
奖励
"""


def compute_reward(d_ms: float, d_max_ms: float = 10.0, d_min_ms: float = 0.0) -> float:
    """
    r = clip((D_max - D) / (D_max - D_min), 0, 1)

    Args:
        d_ms: 周期时长，毫秒
        d_max_ms: 周期上限
        d_min_ms: 周期下限

    Returns:
        奖励
    """
    if d_ms < 0:
        raise ValueError("周期时长不能为负数")
    r = (d_max_ms - d_ms) / (d_max_ms - d_min_ms)
    return min(1.0, max(0.0, r))
