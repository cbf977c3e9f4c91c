#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
多臂赌博机算法，每个模块对应一个算法
"""
from typing import List

from senweaver_bms.bandit.base import BaseBandit
from senweaver_bms.bandit.ucb import UcbBandit
from senweaver_bms.bandit.osub import OsubBandit, kl_ucb_index, kl_ucb_bound, exploration_budget
from senweaver_bms.bandit.linucb import LinucbBandit
from senweaver_bms.bandit.erlb import ErlbBandit
from senweaver_bms.bandit.random import RandomBandit

__all__: List[str] = [
    "BaseBandit",
    "UcbBandit",
    "OsubBandit",
    "LinucbBandit",
    "ErlbBandit",
    "RandomBandit",
    "kl_ucb_index",
    "kl_ucb_bound",
    "exploration_budget",
]
