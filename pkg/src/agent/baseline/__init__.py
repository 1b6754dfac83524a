"""
기준 봇 모음

무작위 생존, 생존 우선 사과 추적, 탐색 기반 봇과 사과 포위 래퍼를 제공합니다.
"""

from .greedy import GreedyBot
from .random_safe import RandomSafeBot
from .search_bots import AlphaBetaBot, IterativeDeepeningBot, MCTSBot
from .stall_guard import StallGuard

__all__ = [
    "RandomSafeBot",
    "GreedyBot",
    "IterativeDeepeningBot",
    "AlphaBetaBot",
    "MCTSBot",
    "StallGuard",
]
