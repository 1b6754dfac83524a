"""
토너먼트 패키지

라운드 로빈 대진, 결정 예산 감시가 포함된 매치 실행, 순위 집계를 제공합니다.
"""

from .manager import TournamentManager, TournamentResult, run_tournament
from .runner import bot_seeds, run_match
from .schedule import Pairing, schedule_round_robin
from .standings import Record, Standings, rank
from .watchdog import DecisionWatchdog

__all__ = [
    "Pairing",
    "schedule_round_robin",
    "Record",
    "Standings",
    "rank",
    "DecisionWatchdog",
    "run_match",
    "bot_seeds",
    "TournamentManager",
    "TournamentResult",
    "run_tournament",
]
