"""
离散事件引擎
"""

from senweaver_bms.engine.event import Event
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.engine.streams import RandomStreams

__all__ = [
    'Event',
    'EventScheduler',
    'RandomStreams'
]
