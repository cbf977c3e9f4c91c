"""
业务模型与实验场景
"""

from senweaver_bms.scenario.traffic import (
    TrafficModel, FULL_BUFFER, VARIABLE_LOAD, reference_capacity, generate_arrivals, sp_load_schedule
)
from senweaver_bms.scenario.presets import BssSpec, ScenarioSpec, PRESETS, build_scenario

__all__ = [
    'TrafficModel',
    'FULL_BUFFER',
    'VARIABLE_LOAD',
    'reference_capacity',
    'generate_arrivals',
    'sp_load_schedule',
    'BssSpec',
    'ScenarioSpec',
    'PRESETS',
    'build_scenario'
]
