"""
智能体构建器
"""
import importlib
import logging
from typing import Dict, Optional, Type

from senweaver_bms.actions.graph import graph_for
from senweaver_bms.actions.space import space_for
from senweaver_bms.bandit.base import BaseBandit
from senweaver_bms.engine.streams import RandomStreams
from senweaver_bms.enums.algorithm import AlgorithmSource, DefaultAlgorithm
from senweaver_bms.enums.architecture import Architecture
from senweaver_bms.errors import ConfigError
from senweaver_bms.harness.binding import AgentBinding

logger = logging.getLogger(__name__)


class AgentBuilder:
    """
    智能体构建器
    支持链式调用，按算法名称动态加载bandit子模块中的实现类
    """

    def __init__(self):
        self._algorithm: Optional[str] = None
        self._architecture: Architecture = Architecture.SA
        self._hyperparameters: Dict[str, float] = {}
        self._streams: Optional[RandomStreams] = None
        self._bss: int = 1

    @classmethod
    def builder(cls) -> 'AgentBuilder':
        return cls()

    def algorithm(self, name: str) -> 'AgentBuilder':
        """
        设置算法

        Args:
            name: 算法名称，例如 linucb

        Returns:
            构建器实例
        """
        self._algorithm = name
        return self

    def architecture(self, architecture) -> 'AgentBuilder':
        self._architecture = architecture if isinstance(architecture, Architecture) else Architecture.of(architecture)
        return self

    def hyperparameters(self, params: Dict[str, float]) -> 'AgentBuilder':
        """
        设置超参数覆盖值，未设置的取该架构下的默认值
        """
        self._hyperparameters = dict(params or {})
        return self

    def streams(self, streams: RandomStreams, bss: int) -> 'AgentBuilder':
        """
        设置随机数流，每个智能体使用 agent/bss{k}/{stage} 流

        Args:
            streams: 试验的随机数流
            bss: 学习节点所在BSS编号

        Returns:
            构建器实例
        """
        self._streams = streams
        self._bss = bss
        return self

    def build(self) -> AgentBinding:
        """
        构建智能体绑定
        """
        if not self._algorithm:
            raise ConfigError("算法不能为空")
        source = self._get_source()
        bandit_class = self.bandit_class(self._algorithm)
        params = source.defaults(self._architecture.value)
        params.update(self._hyperparameters)
        for name in source.out_of_range(params):
            logger.warning("超参数%s.%s=%s超出调优范围%s", source.name, name, params[name], source.tuning_ranges[name])
        streams = self._streams or RandomStreams(0)
        agents = {}
        for stage in self._architecture.stages():
            kwargs = {}
            if bandit_class.structured:
                kwargs['graph'] = graph_for(stage)
            agents[stage] = bandit_class(
                len(space_for(stage)), params,
                rng=streams.get(f"agent/bss{self._bss}/{stage.value}"),
                dim=stage.context_dim, **kwargs
            )
        logger.debug("bss%d: %s %s智能体 %s", self._bss, source.title, self._architecture.value, params)
        return AgentBinding(self._architecture, source.name, agents)

    def _get_source(self) -> AlgorithmSource:
        source = DefaultAlgorithm.get_source(self._algorithm)
        if source is None:
            raise ConfigError(f"未知的算法: {self._algorithm}，可选 {DefaultAlgorithm.names()}")
        return source

    @staticmethod
    def bandit_class(algorithm: str) -> Type[BaseBandit]:
        """
        从 senweaver_bms.bandit.{name} 加载 {Name}Bandit 类

        Args:
            algorithm: 算法名称

        Returns:
            赌博机类
        """
        name = algorithm.lower()
        class_name = ''.join(part.title() for part in name.split('_')) + 'Bandit'
        try:
            module = importlib.import_module(f"senweaver_bms.bandit.{name}")
            return getattr(module, class_name)
        except (ImportError, AttributeError) as e:
            raise ConfigError(f"未找到算法实现类: {class_name}") from e
