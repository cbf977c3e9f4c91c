"""
智能体绑定：SA/MA编排
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict

import numpy as np

from senweaver_bms.actions.space import allowed_primary_arms, space_for
from senweaver_bms.bandit.base import BaseBandit
from senweaver_bms.enums.architecture import AgentStage, Architecture
from senweaver_bms.harness.context import ContextFeatures, build_context
from senweaver_bms.harness.reward import compute_reward
from senweaver_bms.model.action import ActionTriple

logger = logging.getLogger(__name__)


@dataclass
class Decision:
    """
    一个周期的决策结果，学习时原样回传
    """
    action: ActionTriple
    arms: Dict[AgentStage, int] = field(default_factory=dict)
    contexts: Dict[AgentStage, np.ndarray] = field(default_factory=dict)


class AgentBinding:
    """
    绑定到一个学习节点的智能体

    SA为单个智能体在84个联合动作上决策；MA为信道、主信道、CW三个智能体依次决策，
    后序智能体通过上下文中的编码看到前序决策
    """

    def __init__(self, architecture: Architecture, algorithm: str, agents: Dict[AgentStage, BaseBandit]):
        """
        初始化

        Args:
            architecture: 架构
            algorithm: 算法名称
            agents: 每个决策阶段的智能体
        """
        stages = architecture.stages()
        if tuple(agents) != stages:
            raise ValueError(f"{architecture.value}架构需要按顺序提供智能体: {[s.value for s in stages]}")
        self.architecture = architecture
        self.algorithm = algorithm
        self.agents = agents

    def decide(self, features: ContextFeatures) -> Decision:
        """
        选择本周期的动作三元组

        Args:
            features: 周期开始时的快照

        Returns:
            决策
        """
        if self.architecture is Architecture.SA:
            x = build_context(features, AgentStage.SA)
            arm = self.agents[AgentStage.SA].select(x)
            action = space_for(AgentStage.SA).arm(arm)
            return Decision(action, {AgentStage.SA: arm}, {AgentStage.SA: x})

        arms: Dict[AgentStage, int] = {}
        contexts: Dict[AgentStage, np.ndarray] = {}
        x = build_context(features, AgentStage.CHANNEL)
        arms[AgentStage.CHANNEL] = self.agents[AgentStage.CHANNEL].select(x)
        contexts[AgentStage.CHANNEL] = x
        allocation = space_for(AgentStage.CHANNEL).arm(arms[AgentStage.CHANNEL])

        x = build_context(features, AgentStage.PRIMARY, allocation)
        arms[AgentStage.PRIMARY] = self.agents[AgentStage.PRIMARY].select(x, allowed_primary_arms(allocation))
        contexts[AgentStage.PRIMARY] = x
        primary = space_for(AgentStage.PRIMARY).arm(arms[AgentStage.PRIMARY])

        x = build_context(features, AgentStage.CW, allocation, primary)
        arms[AgentStage.CW] = self.agents[AgentStage.CW].select(x)
        contexts[AgentStage.CW] = x
        cw = space_for(AgentStage.CW).arm(arms[AgentStage.CW])
        return Decision(ActionTriple(allocation, primary, cw), arms, contexts)

    def learn(self, decision: Decision, reward: float) -> None:
        """
        每个智能体用自己的上下文与相同的奖励更新一次
        """
        for stage, agent in self.agents.items():
            agent.update(decision.arms[stage], decision.contexts[stage], reward)

    def learn_from_duration(self, decision: Decision, d_ms: float, d_max_ms: float = 10.0) -> float:
        reward = compute_reward(d_ms, d_max_ms)
        self.learn(decision, reward)
        return reward

    def snapshot(self) -> Dict[str, Any]:
        return {stage.value: agent.snapshot() for stage, agent in self.agents.items()}
