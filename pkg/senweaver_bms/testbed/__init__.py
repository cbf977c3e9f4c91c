"""
合成环境，脱离Wi-Fi仿真单独检验赌博机算法
"""

from senweaver_bms.testbed.env import (
    SyntheticEnv, BernoulliEnv, UnimodalChainEnv, LinearContextEnv, PiecewiseLinearContextEnv,
    make_env, ENV_KINDS, CONTEXT_DIM
)
from senweaver_bms.testbed.play import PlayResult, bandit_factory, play, play_one

__all__ = [
    'SyntheticEnv',
    'BernoulliEnv',
    'UnimodalChainEnv',
    'LinearContextEnv',
    'PiecewiseLinearContextEnv',
    'make_env',
    'ENV_KINDS',
    'CONTEXT_DIM',
    'PlayResult',
    'bandit_factory',
    'play',
    'play_one'
]
