"""
实验场景
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from senweaver_bms.config import RunConfig
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.node_role import NodeRole
from senweaver_bms.errors import ConfigError
from senweaver_bms.model.action import ChannelAllocation, allocation_of
from senweaver_bms.scenario.traffic import TrafficModel, VARIABLE_LOAD, sp_load_schedule

logger = logging.getLogger(__name__)

PRESETS = ('sp', 'mp')


@dataclass
class BssSpec:
    """
    一个BSS的描述
    """
    bss: int
    role: NodeRole
    traffic: TrafficModel
    allocation: Optional[ChannelAllocation] = None  # 传统BSS固定的信道
    primary: Optional[int] = None


@dataclass
class ScenarioSpec:
    """
    场景：BSS列表与负载表
    """
    name: str
    bss_list: List[BssSpec] = field(default_factory=list)
    optimal_channels: List[Optional[int]] = field(default_factory=list)

    @property
    def learners(self) -> List[BssSpec]:
        return [spec for spec in self.bss_list if spec.role is NodeRole.LEARNER]

    @property
    def legacy(self) -> List[BssSpec]:
        return [spec for spec in self.bss_list if spec.role is NodeRole.LEGACY]

    def loads(self) -> Dict[int, List[float]]:
        return {spec.bss: list(spec.traffic.loads) for spec in self.legacy}


def build_scenario(config: RunConfig, streams: RandomStreams) -> ScenarioSpec:
    """
    根据配置构建场景

    sp：BSS1为满缓冲学习者，传统BSS k+2 固定在legacy_channels[k]；
    mp：scenario.learners个满缓冲学习者

    Args:
        config: 运行配置
        streams: 试验的随机数流，负载表使用traffic流

    Returns:
        场景
    """
    scenario = config.scenario
    msdu = config.mac.msdu_bytes
    if scenario.name == 'mp':
        bss_list = [BssSpec(b, NodeRole.LEARNER, TrafficModel(msdu_bytes=msdu))
                    for b in range(1, scenario.learners + 1)]
        return ScenarioSpec('mp', bss_list)
    if scenario.name != 'sp':
        raise ConfigError(f"未知的场景: {scenario.name}，可选 {PRESETS}")

    channels = list(scenario.legacy_channels)
    loads, underloaded = sp_load_schedule(
        streams.get('traffic'), scenario.n_intervals, len(channels),
        (scenario.low_load_min, scenario.low_load_max),
        (scenario.high_load_min, scenario.high_load_max),
    )
    bss_list = [BssSpec(1, NodeRole.LEARNER, TrafficModel(msdu_bytes=msdu))]
    primaries = list(scenario.legacy_primaries) or channels
    for k, channel in enumerate(channels):
        allocation = allocation_of({channel})
        if allocation is None:
            raise ConfigError(f"传统BSS信道{channel}不是基本信道")
        if k >= len(primaries) or primaries[k] not in allocation.channels:
            raise ConfigError(f"传统BSS{k + 2}的主信道不在信道{allocation.label}内")
        bss_list.append(BssSpec(
            bss=k + 2, role=NodeRole.LEGACY,
            traffic=TrafficModel(VARIABLE_LOAD, [float(x) for x in loads[k]], msdu),
            allocation=allocation, primary=primaries[k],
        ))
    optimal = [channels[k] for k in underloaded]
    logger.debug("sp负载表: 最优信道 %s", optimal)
    return ScenarioSpec('sp', bss_list, optimal)
