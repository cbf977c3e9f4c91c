"""
运行结果导出
"""
import json
import logging
import os
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from senweaver_bms.metrics.plot import plot_timeline
from senweaver_bms.model.record import ROUND_COLUMNS, TrialRecord

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6g"
INTERVAL_COLUMNS = ['trial', 'bss', 'interval', 'goodput_mbps', 'delivered_bits', 'delivered',
                    'mean_delay_ms', 'drops', 'optimal_rate', 'frequencies']
CONTEXT_COLUMNS = ['trial', 'time_us', 'bss', 'attempts', 'stage', 'context']


def _g(value: float) -> str:
    return FLOAT_FORMAT % value


def rounds_frame(record: TrialRecord) -> pd.DataFrame:
    return pd.DataFrame([row.as_csv_row() for row in record.rows], columns=ROUND_COLUMNS)


def intervals_frame(record: TrialRecord) -> pd.DataFrame:
    rows = []
    for summary in record.intervals:
        rows.append([
            summary.trial, summary.bss, summary.interval, summary.goodput_mbps,
            summary.delivered_bits, summary.delivered, summary.mean_delay_ms, summary.drops,
            summary.optimal_rate,
            ' '.join(f"{label}:{_g(share)}" for label, share in summary.frequencies.items()),
        ])
    return pd.DataFrame(rows, columns=INTERVAL_COLUMNS)


def contexts_frame(record: TrialRecord) -> pd.DataFrame:
    rows = []
    for row in record.rows:
        for stage, x in row.contexts.items():
            rows.append([row.trial, row.time_us, row.bss, row.attempts, stage,
                         ' '.join(_g(v) for v in x)])
    return pd.DataFrame(rows, columns=CONTEXT_COLUMNS)


def makedirs(path: str) -> str:
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as e:
        raise OSError(e.errno, f"无法创建输出目录: {e.strerror}", path) from e
    if not os.access(path, os.W_OK):
        raise OSError(13, "输出目录不可写", path)
    return path


def write_trial(record: TrialRecord, directory: str, plots: bool = False) -> str:
    """
    写出一次试验的结果

    Args:
        record: 试验记录
        directory: 运行输出目录
        plots: 是否输出SVG时间线

    Returns:
        试验目录 trial_XXX
    """
    path = makedirs(os.path.join(directory, f"trial_{record.trial:03d}"))
    rounds_frame(record).to_csv(os.path.join(path, 'rounds.csv'), index=False, float_format=FLOAT_FORMAT)
    intervals_frame(record).to_csv(os.path.join(path, 'intervals.csv'), index=False, float_format=FLOAT_FORMAT)
    contexts_frame(record).to_csv(os.path.join(path, 'contexts.csv'), index=False, float_format=FLOAT_FORMAT)
    with open(os.path.join(path, 'agents.json'), 'w', encoding='utf-8') as f:
        json.dump(record.agents, f, ensure_ascii=False)
    if plots:
        plot_timeline(record, os.path.join(path, 'goodput_timeline.svg'))
    return path


def _mean_std(values: List[float]) -> Dict[str, float]:
    x = np.asarray([v for v in values if v is not None and not np.isnan(v)], dtype=float)
    if x.size == 0:
        return {"mean": None, "std": None}
    return {"mean": float(x.mean()), "std": float(x.std())}


def summarize(records: List[TrialRecord], effective: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    跨试验汇总：每个BSS的有效吞吐量、时延、丢包与每区间统计的均值和标准差，以及Jain指数

    Args:
        records: 各次试验记录
        effective: 生效的扁平配置

    Returns:
        可JSON序列化的汇总
    """
    if not records:
        raise ValueError("没有试验记录")
    first = records[0]
    n_intervals = max(1, -(-first.duration_us // first.interval_us))
    bss_summary = {}
    for bss in first.bss_ids:
        entry: Dict[str, Any] = {
            "role": "learner" if bss in first.learner_ids else "legacy",
            "goodput_mbps": _mean_std([r.goodput_mbps(bss) for r in records]),
            "delay_ms": _mean_std([
                float(np.mean(np.concatenate([s.delays_ms for s in r.interval_rows(bss)])))
                if any(s.delays_ms for s in r.interval_rows(bss)) else float('nan')
                for r in records
            ]),
            "drops": _mean_std([r.drops.get(bss, 0) for r in records]),
            "intervals": [],
        }
        for i in range(n_intervals):
            summaries = [s for r in records for s in r.interval_rows(bss) if s.interval == i]
            interval = {
                "goodput_mbps": _mean_std([s.goodput_mbps for s in summaries]),
                "delay_ms": _mean_std([s.mean_delay_ms for s in summaries]),
            }
            if bss in first.learner_ids:
                interval["optimal_rate"] = _mean_std([s.optimal_rate for s in summaries])
            entry["intervals"].append(interval)
        bss_summary[str(bss)] = entry
    return {
        "trials": len(records),
        "seeds": [r.seed for r in records],
        "config": dict(effective or {}),
        "bss": bss_summary,
        "fairness": _mean_std([r.fairness for r in records]),
    }


def write_summary(summary: Dict[str, Any], directory: str) -> str:
    path = os.path.join(makedirs(directory), 'summary.json')
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(summary, f, ensure_ascii=False, indent=2, sort_keys=True)
    return path


def export(records: List[TrialRecord], directory: str, effective: Optional[Dict[str, Any]] = None,
           plots: bool = False) -> Dict[str, Any]:
    """
    写出全部试验与汇总

    Returns:
        汇总
    """
    for record in records:
        path = write_trial(record, directory, plots)
        logger.debug("试验%d已写出: %s", record.trial, path)
    summary = summarize(records, effective)
    logger.info("汇总已写出: %s", write_summary(summary, directory))
    return summary


def format_summary(summary: Dict[str, Any]) -> str:
    """
    打印用的汇总表
    """
    lines = [f"{'BSS':>4} {'role':>8} {'goodput [Mbps]':>20} {'delay [ms]':>18} {'drops':>10}"]
    for bss, entry in summary["bss"].items():
        goodput, delay = entry["goodput_mbps"], entry["delay_ms"]
        delay_text = "-" if delay["mean"] is None else f"{delay['mean']:.3f} ± {delay['std']:.3f}"
        lines.append(f"{bss:>4} {entry['role']:>8} {goodput['mean']:>11.2f} ± {goodput['std']:<6.2f} "
                     f"{delay_text:>18} {entry['drops']['mean']:>10.1f}")
    fairness = summary["fairness"]
    lines.append(f"J = {fairness['mean']:.3f} ± {fairness['std']:.3f} ({summary['trials']} trials)")
    return "\n".join(lines)
