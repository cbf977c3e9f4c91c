"""
节点的信道接入
"""

from senweaver_bms.mac.queue import TxQueue
from senweaver_bms.mac.backoff import BackoffProcess
from senweaver_bms.mac.bonding import bonding_decision
from senweaver_bms.mac.txop import TxopExchange, execute_txop
from senweaver_bms.mac.station import Station
from senweaver_bms.mac.legacy import LegacyStation, next_cw
from senweaver_bms.mac.learner import LearnerStation

__all__ = [
    'TxQueue',
    'BackoffProcess',
    'bonding_decision',
    'TxopExchange',
    'execute_txop',
    'Station',
    'LegacyStation',
    'next_cw',
    'LearnerStation'
]
