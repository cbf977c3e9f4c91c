"""
无线介质模块
"""

from senweaver_bms.medium.phy import PhyProfile
from senweaver_bms.medium.channel import Medium, ChannelListener

__all__ = [
    'PhyProfile',
    'Medium',
    'ChannelListener'
]
