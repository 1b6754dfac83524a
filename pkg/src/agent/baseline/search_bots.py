"""
탐색 기반 봇: 반복 심화(IDS), 깊이 제한 alpha-beta, MCTS
"""

from typing import Optional

from ...engine.models import Direction
from ...engine.rng import SeededRandom
from ...search.alphabeta import MAX_DEPTH, iterative_deepening
from ...search.budget import SearchStats
from ...search.evaluation import DEFAULT_WEIGHTS, EvalWeights
from ...search.mcts import DEFAULT_EXPLORATION, DEFAULT_HORIZON, mcts_decide
from ..base.base_bot import BaseBot, BotView


class IterativeDeepeningBot(BaseBot):
    """예산이 허락하는 깊이까지 alpha-beta를 반복합니다."""

    kind = "ids"

    def __init__(
        self,
        name: Optional[str] = None,
        seed: int = 0,
        weights: EvalWeights = DEFAULT_WEIGHTS,
        max_depth: int = MAX_DEPTH,
    ):
        super().__init__(name, seed)
        self.weights = weights
        self.max_depth = max_depth
        self.last_stats = SearchStats()

    def decide(self, view: BotView) -> Direction:
        stats = SearchStats()
        tracker = view.search_budget().tracker()
        move = iterative_deepening(
            view.state, tracker, self.weights, view.me, self.max_depth, stats
        )
        self.nodes_used = tracker.used
        self.last_stats = stats
        return move


class AlphaBetaBot(IterativeDeepeningBot):
    """깊이 상한이 있는 반복 심화 alpha-beta"""

    kind = "alphabeta"

    def __init__(
        self,
        name: Optional[str] = None,
        seed: int = 0,
        weights: EvalWeights = DEFAULT_WEIGHTS,
        depth: int = 4,
    ):
        super().__init__(name, seed, weights, max_depth=depth)


class MCTSBot(BaseBot):
    kind = "mcts"

    def __init__(
        self,
        name: Optional[str] = None,
        seed: int = 0,
        weights: EvalWeights = DEFAULT_WEIGHTS,
        iterations: Optional[int] = None,
        horizon: int = DEFAULT_HORIZON,
        exploration: float = DEFAULT_EXPLORATION,
    ):
        super().__init__(name, seed)
        self.weights = weights
        self.iterations = iterations
        self.horizon = horizon
        self.exploration = exploration
        self.rng = SeededRandom(seed)

    def reset(self, seed: int) -> None:
        super().reset(seed)
        self.rng = SeededRandom(seed)

    def decide(self, view: BotView) -> Direction:
        tracker = view.search_budget(cap=self.iterations).tracker()
        move = mcts_decide(
            view.state,
            view.me,
            tracker,
            self.rng,
            self.weights,
            self.horizon,
            self.exploration,
        )
        self.nodes_used = tracker.used
        return move
