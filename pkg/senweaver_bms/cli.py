"""
命令行入口
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from senweaver_bms.config import RunConfig, load_config, validate
from senweaver_bms.enums.algorithm import DefaultAlgorithm
from senweaver_bms.errors import ConfigError
from senweaver_bms.metrics.export import format_summary
from senweaver_bms.simulation import Simulation, run_synthetic

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='senweaver-bms', description='802.11信道绑定赌博机仿真')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, help_text in (('run', '运行试验并写出结果'), ('validate', '校验配置并打印生效配置')):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('--scenario', help='sp、mp或synth:<bernoulli|unimodal|linear|piecewise>')
        sub.add_argument('--algo', choices=DefaultAlgorithm.names())
        sub.add_argument('--arch', choices=('sa', 'ma'))
        sub.add_argument('--bonding', choices=('scb', 'dcb'))
        sub.add_argument('--trials', type=int)
        sub.add_argument('--seed', type=int)
        sub.add_argument('--config', help='YAML配置文件')
        sub.add_argument('--out', help='输出目录，默认取BMS_OUT_DIR或./bms_out')
        sub.add_argument('--plots', action='store_true', default=None, help='输出有效吞吐量时间线SVG')
        sub.add_argument('--jobs', type=int, help='并行进程数')
        sub.add_argument('-v', '--verbose', action='store_true')
    return parser


def _resolve(args: argparse.Namespace) -> Dict[str, Any]:
    """
    命令行 > 配置文件 > 默认值
    """
    flat = load_config(args.config)
    if args.scenario:
        flat['scenario.name'] = args.scenario
    overrides = {
        'algorithm': args.algo,
        'architecture': args.arch,
        'bonding': args.bonding,
        'trials': args.trials,
        'seed': args.seed,
        'output_dir': args.out,
        'plots': args.plots,
        'jobs': args.jobs,
    }
    return {'flat': flat, 'overrides': overrides}


def _run(args: argparse.Namespace) -> int:
    resolved = _resolve(args)
    config = RunConfig.from_flat(resolved['flat'], **resolved['overrides'])
    if config.scenario.name.startswith('synth:'):
        summary = run_synthetic(config)
        print(f"{summary['scenario']} {summary['algorithm']}: 最终遗憾 {summary['final_regret']:.2f}"
              f" ({len(summary['seeds'])} seeds x {summary['rounds']} rounds)")
        return 0
    summary = Simulation(config).run()
    print(format_summary(summary))
    return 0


def _validate(args: argparse.Namespace) -> int:
    resolved = _resolve(args)
    report = validate(resolved['flat'], **resolved['overrides'])
    print(report.render())
    return 0 if report.ok else 1


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行入口

    Returns:
        退出码：0成功，1校验有违规，2用法或配置错误
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        if args.command == 'validate':
            return _validate(args)
        return _run(args)
    except (ConfigError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
