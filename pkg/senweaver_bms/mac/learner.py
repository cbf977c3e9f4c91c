"""
学习节点的传输周期
"""
import logging
from typing import Optional

import numpy as np

from senweaver_bms.engine.event import Event
from senweaver_bms.engine.scheduler import EventScheduler
from senweaver_bms.enums.bonding_mode import BondingMode
from senweaver_bms.enums.cycle_cause import CycleCause
from senweaver_bms.enums.event_kind import EventKind
from senweaver_bms.enums.node_role import NodeRole
from senweaver_bms.harness.binding import AgentBinding, Decision
from senweaver_bms.harness.context import ContextFeatures
from senweaver_bms.mac.bonding import bonding_decision
from senweaver_bms.mac.station import Station
from senweaver_bms.mac.txop import TxopExchange, execute_txop
from senweaver_bms.model.cycle import TransmissionCycle
from senweaver_bms.model.record import RoundRow

logger = logging.getLogger(__name__)


class LearnerStation(Station):
    """
    学习AP

    每个传输周期：快照上下文、智能体决策、切换信道、以所选CW退避（不做BEB）、
    按SCB/DCB规则发送、由周期时长计算奖励并更新智能体。
    周期开始后10 ms仍未获得TXOP则超时，奖励为0
    """
    role = NodeRole.LEARNER

    def __init__(self, bss: int, binding: AgentBinding, bonding: BondingMode, *args, **kwargs):
        """
        初始化

        Args:
            bss: BSS编号
            binding: 智能体绑定
            bonding: 信道绑定模式
            *args: 见Station
            **kwargs: 见Station
        """
        super().__init__(bss, *args, **kwargs)
        self.binding = binding
        self.bonding = bonding
        self.trial = 0
        self.cycle: Optional[TransmissionCycle] = None
        self.decision: Optional[Decision] = None
        self._timeout: Optional[Event] = None
        self.cycles = 0

    def start(self, now: int) -> None:
        self.begin_cycle(now)

    def snapshot(self, now: int) -> ContextFeatures:
        return ContextFeatures(
            occupancy=self.medium.occupancy(now),
            busy=self.medium.busy_flags(),
            queue_util=min(1.0, self.queue.utilization),
        )

    def begin_cycle(self, now: int) -> None:
        """
        开始一个传输周期
        """
        self.admit(now)
        if not self.queue:
            self.wait_for_arrival()
            return
        self.decision = self.binding.decide(self.snapshot(now))
        action = self.decision.action
        self.cycle = TransmissionCycle(start=now, action=action, d_max_us=self.mac.d_max_us)
        self._timeout = self.scheduler.at(now + self.mac.d_max_us, EventKind.CYCLE_TIMEOUT,
                                          self.node_id, self.on_timeout)
        self.backoff.start(action.primary, action.cw, now)

    def on_grant(self, now: int) -> None:
        action = self.cycle.action
        idle = self.medium.idle_set(now, self.phy.pifs)
        channels = bonding_decision(self.bonding, action.channel, action.primary, idle)
        if channels is None:
            # SCB推迟：同一CW重新抽取退避
            self.cycle.attempts += 1
            self.backoff.start(action.primary, action.cw, now, fresh_difs=True)
            return
        EventScheduler.cancel(self._timeout)
        self._timeout = None
        self.cycle.transmit_channels = channels
        execute_txop(self, channels, now)

    def after_txop(self, exchange: TxopExchange, outcomes: np.ndarray, now: int) -> None:
        self.cycle.mpdu_outcomes = [bool(ok) for ok in outcomes]
        self.cycle.close(now, CycleCause.ACKED)
        self.finish_cycle(now)

    def on_timeout(self, now: int) -> None:
        self._timeout = None
        self.backoff.stop()
        self.cycle.close(now, CycleCause.TIMEOUT)
        self.finish_cycle(now)

    def finish_cycle(self, now: int) -> None:
        """
        计算奖励，更新智能体，记录日志，并立即开始下一个周期
        """
        cycle, decision = self.cycle, self.decision
        d_ms = cycle.duration_ms
        reward = self.binding.learn_from_duration(decision, d_ms, self.mac.d_max_ms)
        self.cycles += 1
        action = cycle.action
        transmit = cycle.transmit_channels or frozenset()
        self.collector.round(RoundRow(
            trial=self.trial, time_us=cycle.start, bss=self.bss,
            alloc=action.channel.label, primary=action.primary, cw=action.cw,
            d_ms=d_ms, reward=reward, cause=cycle.cause.value,
            label=action.label if self.bonding is BondingMode.DCB else action.channel.label,
            transmit='-'.join(str(c) for c in sorted(transmit)), attempts=cycle.attempts,
            contexts={stage.value: x for stage, x in decision.contexts.items()},
        ))
        logger.debug("bss%d 周期%d: %s cw=%d D=%.3fms r=%.3f %s", self.bss, self.cycles,
                     action.label, action.cw, d_ms, reward, cycle.cause.value)
        self.begin_cycle(now)
