"""
SenWeaver-BMS - 802.11信道绑定多臂赌博机仿真器
"""

from senweaver_bms.config import RunConfig, load_config, validate
from senweaver_bms.builder import AgentBuilder
from senweaver_bms.simulation import Simulation, Trial, run_trial, run_synthetic

__version__ = "0.1.0"
__author__ = "senweaver"

__all__ = ["RunConfig", "load_config", "validate", "AgentBuilder", "Simulation", "Trial", "run_trial", "run_synthetic"]
