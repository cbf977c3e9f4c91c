"""
有效吞吐量时间线
"""
import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from senweaver_bms.metrics.collector import TIMELINE_BIN_US  # noqa: E402
from senweaver_bms.model.record import TrialRecord  # noqa: E402


def plot_timeline(record: TrialRecord, path: str) -> str:
    """
    每个BSS按1秒分箱的有效吞吐量，写为SVG

    Args:
        record: 试验记录
        path: 输出文件

    Returns:
        输出文件
    """
    fig, ax = plt.subplots(figsize=(8, 3.5))
    seconds = TIMELINE_BIN_US / 1_000_000
    for bss in record.bss_ids:
        bins = record.timeline.get(bss, [])
        x = [(i + 0.5) * seconds for i in range(len(bins))]
        y = [bits / TIMELINE_BIN_US for bits in bins]
        style = '-' if bss in record.learner_ids else ':'
        ax.plot(x, y, style, label=f"BSS{bss}")
    for i in range(1, -(-record.duration_us // record.interval_us)):
        ax.axvline(i * record.interval_us / 1_000_000, color='grey', linewidth=0.5)
    ax.set_xlabel('time [s]')
    ax.set_ylabel('goodput [Mbps]')
    ax.legend(loc='upper right', fontsize='small', ncol=len(record.bss_ids))
    fig.tight_layout()
    fig.savefig(path, format='svg')
    plt.close(fig)
    return path
