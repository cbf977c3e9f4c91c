"""
赌博机算法枚举
"""
from typing import Dict, List, Optional, Tuple


class AlgorithmSource:
    """
    算法描述基类
    """
    def __init__(self, name: str, contextual: bool,
                 sa_defaults: Optional[Dict[str, float]] = None,
                 ma_defaults: Optional[Dict[str, float]] = None,
                 tuning_ranges: Optional[Dict[str, Tuple[float, float]]] = None,
                 title: Optional[str] = None):
        """
        初始化

        Args:
            name: 算法名称，同时是bandit子模块的名称
            contextual: 是否使用上下文
            sa_defaults: 单智能体架构下的默认超参数
            ma_defaults: 多智能体架构下的默认超参数
            tuning_ranges: 超参数调优范围，超出时仅告警
            title: 显示名称
        """
        self.name = name
        self.title = title or name
        self.contextual = contextual
        self.sa_defaults = dict(sa_defaults or {})
        self.ma_defaults = dict(ma_defaults or {})
        self.tuning_ranges = dict(tuning_ranges or {})

    def defaults(self, architecture: str) -> Dict[str, float]:
        """
        获取指定架构下的默认超参数

        Args:
            architecture: 'sa' 或 'ma'

        Returns:
            超参数字典的副本
        """
        if str(architecture).lower() == 'ma':
            return dict(self.ma_defaults)
        return dict(self.sa_defaults)

    def out_of_range(self, params: Dict[str, float]) -> List[str]:
        """
        返回超出调优范围的超参数名称
        """
        names = []
        for key, (low, high) in self.tuning_ranges.items():
            if key in params and not low <= params[key] <= high:
                names.append(key)
        return names

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"AlgorithmSource(name={self.name})"


class DefaultAlgorithm:
    """
    内置算法，默认超参数取自调优结果
    """
    UCB = AlgorithmSource(
        name="ucb",
        title="UCB",
        contextual=False,
        sa_defaults={"alpha": 1.09},
        ma_defaults={"alpha": 1.14},
        tuning_ranges={"alpha": (1.0, 10.0)}
    )

    OSUB = AlgorithmSource(
        name="osub",
        title="OSUB",
        contextual=False,
        sa_defaults={"p": 0.0, "kl_c": 0.0},
        ma_defaults={"p": 0.05, "kl_c": 0.0}
    )

    LINUCB = AlgorithmSource(
        name="linucb",
        title="LinUCB",
        contextual=True,
        sa_defaults={"alpha": 0.52},
        ma_defaults={"alpha": 0.50},
        tuning_ranges={"alpha": (0.2, 20.0)}
    )

    ERLB = AlgorithmSource(
        name="erlb",
        title="E-RLB",
        contextual=True,
        sa_defaults={"epsilon": 0.020, "eta": 0.086, "gamma": 0.87, "alpha_ema": 0.22, "eps_num": 1e-8},
        ma_defaults={"epsilon": 0.038, "eta": 0.069, "gamma": 0.79, "alpha_ema": 0.25, "eps_num": 1e-8},
        tuning_ranges={
            "epsilon": (0.01, 0.30),
            "eta": (1e-4, 1e-1),
            "gamma": (0.70, 0.99),
            "alpha_ema": (0.01, 0.30),
        }
    )

    RANDOM = AlgorithmSource(
        name="random",
        title="Random",
        contextual=False
    )

    @classmethod
    def get_source(cls, source_name: str) -> Optional[AlgorithmSource]:
        """
        获取算法描述

        Args:
            source_name: 算法名称

        Returns:
            算法描述对象，如果不存在则返回None
        """
        source_name = source_name.upper()
        try:
            source = getattr(cls, source_name)
        except (AttributeError, KeyError):
            return None
        return source if isinstance(source, AlgorithmSource) else None

    @classmethod
    def values(cls) -> List[AlgorithmSource]:
        """
        获取所有内置算法
        """
        return [getattr(cls, attr) for attr in dir(cls)
                if not attr.startswith('_') and isinstance(getattr(cls, attr), AlgorithmSource)]

    @classmethod
    def names(cls) -> List[str]:
        """
        获取所有内置算法名称
        """
        return sorted(source.name for source in cls.values())
