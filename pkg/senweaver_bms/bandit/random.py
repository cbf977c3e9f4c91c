"""
均匀随机基线
"""
from senweaver_bms.bandit.base import BaseBandit


class RandomBandit(BaseBandit):
    """
    每轮在可选臂中均匀随机选择，不学习
    """

    def select(self, context=None, allowed=None) -> int:
        return self.uniform(self._allowed(allowed))

    def update(self, arm: int, context, reward: float) -> None:
        self._reward(reward)
        self.rounds += 1
