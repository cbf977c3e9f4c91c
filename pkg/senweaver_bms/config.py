"""
RunConfig - 仿真运行配置
"""
import logging
import os
from dataclasses import dataclass, field, fields, asdict
from typing import Any, Dict, List, Optional, Tuple

import yaml

from senweaver_bms.enums.algorithm import DefaultAlgorithm
from senweaver_bms.errors import ConfigError
from senweaver_bms.model.action import BASIC_CHANNELS, CW_LADDER
from senweaver_bms.model.report import ValidationReport

logger = logging.getLogger(__name__)

OUT_DIR_ENV = "BMS_OUT_DIR"


@dataclass(frozen=True)
class PhyConfig:
    """
    PHY参数，默认值为5 GHz OFDM时序与802.11ax MCS11双流0.8us GI速率
    """
    slot_us: int = 9
    sifs_us: int = 16
    rate_20: float = 286.8  # bit/us
    rate_40: float = 573.5
    rate_80: float = 1201.0
    rts_us: int = 52
    cts_us: int = 44
    back_us: int = 50
    preamble_us: int = 40

    def __post_init__(self):
        for name in ('slot_us', 'sifs_us', 'rts_us', 'cts_us', 'back_us', 'preamble_us'):
            if getattr(self, name) < 0:
                raise ConfigError(f"phy.{name}不能为负数")
        if not 0 < self.rate_20 < self.rate_40 < self.rate_80:
            raise ConfigError("phy速率必须为正且随带宽严格递增")

    @property
    def difs_us(self) -> int:
        return self.sifs_us + 2 * self.slot_us

    @property
    def pifs_us(self) -> int:
        return self.sifs_us + self.slot_us


@dataclass(frozen=True)
class MacConfig:
    """
    MAC参数
    """
    per: float = 0.1  # 每个MPDU的误包率
    retry_limit: int = 7
    queue_capacity: int = 500
    ampdu_max_bytes: int = 65535
    msdu_bytes: int = 1500
    cw_min: int = 16
    cw_max: int = 1024
    d_max_ms: float = 10.0
    occupancy_window_ms: float = 100.0
    rts_cts: bool = True

    def __post_init__(self):
        if not 0.0 <= self.per < 1.0:
            raise ConfigError("mac.per必须在[0,1)内")
        if self.msdu_bytes <= 0 or self.msdu_bytes > self.ampdu_max_bytes:
            raise ConfigError("mac.msdu_bytes必须为正且不超过mac.ampdu_max_bytes")
        if self.queue_capacity <= 0:
            raise ConfigError("mac.queue_capacity必须为正")
        if self.cw_min > self.cw_max:
            raise ConfigError("mac.cw_min不能大于mac.cw_max")
        if self.d_max_ms <= 0:
            raise ConfigError("mac.d_max_ms必须为正")

    @property
    def d_max_us(self) -> int:
        return int(round(self.d_max_ms * 1000))

    @property
    def window_us(self) -> int:
        return int(round(self.occupancy_window_ms * 1000))

    @property
    def ampdu_limit(self) -> int:
        """
        一个A-MPDU最多聚合的MSDU数量
        """
        return self.ampdu_max_bytes // self.msdu_bytes


@dataclass(frozen=True)
class ScenarioConfig:
    """
    场景参数
    """
    name: str = 'sp'
    duration_s: float = 60.0
    interval_s: float = 15.0
    low_load_min: float = 0.10
    low_load_max: float = 0.20
    high_load_min: float = 0.80
    high_load_max: float = 0.90
    legacy_channels: Tuple[int, ...] = (1, 2, 3, 4)
    legacy_primaries: Tuple[int, ...] = ()  # 为空时主信道即所在信道
    learners: int = 3
    synth_rounds: int = 20000  # 合成环境的轮数

    def __post_init__(self):
        if self.duration_s <= 0 or self.interval_s <= 0:
            raise ConfigError("scenario.duration_s与scenario.interval_s必须为正")
        for low, high in ((self.low_load_min, self.low_load_max),
                          (self.high_load_min, self.high_load_max)):
            if not 0.0 <= low <= high <= 1.0:
                raise ConfigError("负载范围必须满足0 <= min <= max <= 1")
        if self.learners < 1:
            raise ConfigError("scenario.learners至少为1")
        if self.synth_rounds < 1:
            raise ConfigError("scenario.synth_rounds至少为1")

    @property
    def duration_us(self) -> int:
        return int(round(self.duration_s * 1_000_000))

    @property
    def interval_us(self) -> int:
        return int(round(self.interval_s * 1_000_000))

    @property
    def n_intervals(self) -> int:
        return max(1, -(-self.duration_us // self.interval_us))


RUN_KEYS = ('algorithm', 'architecture', 'bonding', 'trials', 'seed', 'output_dir', 'plots', 'jobs')
SECTIONS = {'phy': PhyConfig, 'mac': MacConfig, 'scenario': ScenarioConfig}
ARCHITECTURES = ('sa', 'ma')
BONDINGS = ('scb', 'dcb')


@dataclass
class RunConfig:
    """
    一次运行的完整配置
    """
    algorithm: str = 'linucb'
    architecture: str = 'sa'
    bonding: str = 'scb'
    trials: int = 20
    seed: int = 0
    output_dir: Optional[str] = None
    plots: bool = False
    jobs: int = 1
    phy: PhyConfig = field(default_factory=PhyConfig)
    mac: MacConfig = field(default_factory=MacConfig)
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    hyper: Dict[str, Dict[str, float]] = field(default_factory=dict)  # 超参数覆盖，例如 {'erlb': {'eta': 0.05}}

    def __post_init__(self):
        """
        初始化后的处理
        """
        self.algorithm = str(self.algorithm).lower()
        self.architecture = str(self.architecture).lower()
        self.bonding = str(self.bonding).lower()
        if DefaultAlgorithm.get_source(self.algorithm) is None:
            raise ConfigError(f"未知的算法: {self.algorithm}，可选 {DefaultAlgorithm.names()}")
        if self.architecture not in ARCHITECTURES:
            raise ConfigError(f"未知的架构: {self.architecture}，可选 {ARCHITECTURES}")
        if self.bonding not in BONDINGS:
            raise ConfigError(f"未知的信道绑定模式: {self.bonding}，可选 {BONDINGS}")
        if self.trials < 1:
            raise ConfigError("trials至少为1")

    def trial_seed(self, trial: int) -> int:
        """
        第k次试验使用 seed + k
        """
        return self.seed + trial

    def hyperparameters(self, algorithm: Optional[str] = None) -> Dict[str, float]:
        """
        合并默认超参数与覆盖值

        Args:
            algorithm: 算法名称，默认为本配置的算法

        Returns:
            生效的超参数
        """
        name = algorithm or self.algorithm
        source = DefaultAlgorithm.get_source(name)
        params = source.defaults(self.architecture) if source else {}
        params.update(self.hyper.get(name, {}))
        return params

    def resolved_output_dir(self) -> str:
        """
        输出目录，未配置时回退到环境变量BMS_OUT_DIR，再回退到 ./bms_out
        """
        return self.output_dir or os.environ.get(OUT_DIR_ENV) or 'bms_out'

    def to_flat(self) -> Dict[str, Any]:
        """
        导出为扁平的点分键配置
        """
        flat: Dict[str, Any] = {key: getattr(self, key) for key in RUN_KEYS}
        flat['output_dir'] = self.resolved_output_dir()
        for section in SECTIONS:
            for key, value in asdict(getattr(self, section)).items():
                flat[f"{section}.{key}"] = list(value) if isinstance(value, tuple) else value
        for key, value in self.hyperparameters().items():
            flat[f"{self.algorithm}.{key}"] = value
        return flat

    @classmethod
    def from_flat(cls, flat: Dict[str, Any], **overrides: Any) -> 'RunConfig':
        """
        从扁平的点分键配置构建，未知键抛出ConfigError

        Args:
            flat: 点分键配置
            **overrides: 优先级更高的顶层键，例如命令行参数，None值被忽略

        Returns:
            运行配置
        """
        violations = unknown_keys(flat)
        if violations:
            raise ConfigError("; ".join(violations))
        top: Dict[str, Any] = {}
        sections: Dict[str, Dict[str, Any]] = {name: {} for name in SECTIONS}
        hyper: Dict[str, Dict[str, float]] = {}
        for key, value in flat.items():
            head, _, tail = key.partition('.')
            if not tail:
                top[key] = value
            elif head in SECTIONS:
                sections[head][tail] = tuple(value) if isinstance(value, list) else value
            else:
                hyper.setdefault(head, {})[tail] = float(value)
        top.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return cls(
                phy=PhyConfig(**sections['phy']),
                mac=MacConfig(**sections['mac']),
                scenario=ScenarioConfig(**sections['scenario']),
                hyper=hyper,
                **top
            )
        except TypeError as e:
            raise ConfigError(f"配置值类型错误: {e}") from e


def flatten(data: Dict[str, Any], prefix: str = '') -> Dict[str, Any]:
    """
    将嵌套映射展开为点分键
    """
    flat: Dict[str, Any] = {}
    for key, value in (data or {}).items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


def load_config(path: Optional[str]) -> Dict[str, Any]:
    """
    读取YAML配置文件，返回扁平的点分键配置；path为空时返回空配置
    """
    if not path:
        return {}
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ConfigError(f"配置文件{path}的顶层必须是映射")
    return flatten(data)


def unknown_keys(flat: Dict[str, Any]) -> List[str]:
    """
    列出未知的配置键
    """
    violations = []
    section_fields = {name: {f.name for f in fields(kind)} for name, kind in SECTIONS.items()}
    for key in flat:
        head, _, tail = key.partition('.')
        if not tail:
            if key not in RUN_KEYS:
                violations.append(f"未知的配置键: {key}")
        elif head in section_fields:
            if tail not in section_fields[head]:
                violations.append(f"未知的配置键: {key}")
        else:
            source = DefaultAlgorithm.get_source(head)
            if source is None or tail not in source.sa_defaults:
                violations.append(f"未知的配置键: {key}")
    return violations


def validate(flat: Dict[str, Any], **overrides: Any) -> ValidationReport:
    """
    校验配置，违规项只在报告中列出，不抛异常

    Args:
        flat: 点分键配置，可以为空
        **overrides: 命令行覆盖的顶层键

    Returns:
        校验报告，effective为解析后的完整配置
    """
    report = ValidationReport()
    report.violations.extend(unknown_keys(flat))
    known = {key: value for key, value in flat.items() if not unknown_keys({key: value})}
    try:
        config = RunConfig.from_flat(known, **overrides)
    except ConfigError as e:
        report.violations.append(str(e))
        return report
    report.effective = config.to_flat()

    scenario = config.scenario
    if scenario.name not in ('sp', 'mp') and not scenario.name.startswith('synth:'):
        report.violations.append(f"scenario.name: 未知的场景{scenario.name}")
    for k, channel in enumerate(scenario.legacy_channels):
        if channel not in BASIC_CHANNELS:
            report.violations.append(f"scenario.legacy_channels[{k}]: {channel}不是基本信道")
    if scenario.legacy_primaries:
        if len(scenario.legacy_primaries) != len(scenario.legacy_channels):
            report.violations.append("scenario.legacy_primaries: 数量与legacy_channels不一致")
        for k, (channel, primary) in enumerate(zip(scenario.legacy_channels, scenario.legacy_primaries)):
            if primary != channel:
                report.violations.append(
                    f"scenario.legacy_primaries[{k}]: 主信道{primary}不在BSS{k + 2}的信道{{{channel}}}内")
    for key in ('cw_min', 'cw_max'):
        if getattr(config.mac, key) not in CW_LADDER:
            report.violations.append(f"mac.{key}: {getattr(config.mac, key)}不在{CW_LADDER}内")
    source = DefaultAlgorithm.get_source(config.algorithm)
    params = config.hyperparameters()
    for name in source.out_of_range(params):
        report.warnings.append(f"{source.name}.{name}={params[name]}超出调优范围{source.tuning_ranges[name]}")
    return report
