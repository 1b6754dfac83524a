"""
탐색 패키지

BFS/A*/Voronoi 격자 연산, 평가 함수, alpha-beta와 반복 심화, MCTS를 제공합니다.
"""

from .alphabeta import alphabeta, iterative_deepening, minimax_value
from .budget import BudgetTracker, SearchBudget, SearchStats
from .evaluation import DEFAULT_WEIGHTS, LOSS_SCORE, WIN_SCORE, EvalWeights, evaluate
from .grid import (
    UNREACHABLE,
    DistanceField,
    Ownership,
    astar_path,
    bfs_distances,
    flood_fill_count,
    voronoi_ownership,
)
from .mcts import mcts_decide

__all__ = [
    "UNREACHABLE",
    "DistanceField",
    "Ownership",
    "bfs_distances",
    "flood_fill_count",
    "voronoi_ownership",
    "astar_path",
    "EvalWeights",
    "DEFAULT_WEIGHTS",
    "WIN_SCORE",
    "LOSS_SCORE",
    "evaluate",
    "SearchBudget",
    "SearchStats",
    "BudgetTracker",
    "minimax_value",
    "alphabeta",
    "iterative_deepening",
    "mcts_decide",
]
