"""
게임 트리 탐색: 전수 minimax(검증용), alpha-beta, 반복 심화

동시 이동 게임을 paranoid 방식으로 순차화합니다. 최대화 측이 먼저 방향을 고르고,
최소화 측은 그 방향을 안 상태에서 응수하며, 두 방향이 정해지면 step을 한 번
적용합니다. 깊이 1은 step 한 번입니다.
"""

import math
from typing import Optional, Sequence, Tuple, Union

import structlog

from ..base.exceptions import BudgetExhausted
from ..engine.models import DIRECTIONS, WHITE, Direction, GameState
from ..engine.rules import ordered_survival_moves, step
from .budget import BudgetTracker, SearchBudget, SearchStats, as_tracker
from .evaluation import DEFAULT_WEIGHTS, EvalWeights, evaluate

logger = structlog.get_logger(__name__)

# 반복 심화의 기본 최대 깊이
MAX_DEPTH = 64


def _joint_step(
    state: GameState, perspective: int, mine: Direction, theirs: Direction
) -> GameState:
    if perspective == WHITE:
        return step(state, mine, theirs).next
    return step(state, theirs, mine).next


def minimax_value(
    state: GameState,
    depth: int,
    perspective: int = WHITE,
    weights: EvalWeights = DEFAULT_WEIGHTS,
    stats: Optional[SearchStats] = None,
) -> float:
    """가지치기 없는 전수 minimax 값 (alpha-beta 검증용 기준)"""
    stats = stats if stats is not None else SearchStats()

    def max_value(s: GameState, d: int) -> float:
        stats.nodes += 1
        if not s.is_running:
            return evaluate(s, perspective, weights)
        if d == 0:
            stats.horizon_leaves += 1
            return evaluate(s, perspective, weights)
        return max(min_value(s, d, m) for m in DIRECTIONS)

    def min_value(s: GameState, d: int, mine: Direction) -> float:
        stats.nodes += 1
        return min(
            max_value(_joint_step(s, perspective, mine, theirs), d - 1)
            for theirs in DIRECTIONS
        )

    if depth < 0:
        raise ValueError(f"depth must be non-negative: {depth}")
    return max_value(state, depth)


class _AlphaBetaSearch:
    """한 번의 탐색 동안 쓰는 작업 공간"""

    def __init__(
        self,
        perspective: int,
        weights: EvalWeights,
        tracker: BudgetTracker,
        stats: SearchStats,
    ):
        self.perspective = perspective
        self.weights = weights
        self.tracker = tracker
        self.stats = stats

    def _visit(self) -> None:
        self.tracker.charge()
        self.stats.nodes += 1

    def max_value(self, s: GameState, depth: int, alpha: float, beta: float) -> float:
        self._visit()
        if not s.is_running:
            return evaluate(s, self.perspective, self.weights)
        if depth == 0:
            self.stats.horizon_leaves += 1
            return evaluate(s, self.perspective, self.weights)
        value = -math.inf
        for mine in DIRECTIONS:
            value = max(value, self.min_value(s, depth, mine, alpha, beta))
            if value >= beta:
                return value
            alpha = max(alpha, value)
        return value

    def min_value(
        self, s: GameState, depth: int, mine: Direction, alpha: float, beta: float
    ) -> float:
        self._visit()
        value = math.inf
        for theirs in DIRECTIONS:
            child = _joint_step(s, self.perspective, mine, theirs)
            value = min(value, self.max_value(child, depth - 1, alpha, beta))
            if value <= alpha:
                return value
            beta = min(beta, value)
        return value


def alphabeta(
    state: GameState,
    depth: int,
    budget: Union[SearchBudget, BudgetTracker],
    weights: EvalWeights = DEFAULT_WEIGHTS,
    perspective: int = WHITE,
    root_moves: Optional[Sequence[Direction]] = None,
    stats: Optional[SearchStats] = None,
) -> Tuple[Direction, float]:
    """alpha-beta 탐색. 루트 값은 minimax_value와 같고, 동점이면 N, E, S, W 순서로 고릅니다.

    예산을 넘으면 BudgetExhausted를 발생시킵니다.
    """
    if not state.is_running:
        raise ValueError("alphabeta requires a running state")
    if depth < 1:
        raise ValueError(f"depth must be at least 1: {depth}")

    search = _AlphaBetaSearch(
        perspective,
        weights,
        as_tracker(budget),
        stats if stats is not None else SearchStats(),
    )
    candidates = tuple(root_moves) if root_moves else DIRECTIONS

    # 루트 노드
    search._visit()
    best_move = candidates[0]
    best_value = -math.inf
    for mine in candidates:
        # 동점 이동은 뒤에 와도 채택하지 않으므로 alpha를 그대로 전달해도 안전
        value = search.min_value(state, depth, mine, best_value, math.inf)
        if value > best_value:
            best_move, best_value = mine, value
    return best_move, best_value


def iterative_deepening(
    state: GameState,
    budget: Union[SearchBudget, BudgetTracker],
    weights: EvalWeights = DEFAULT_WEIGHTS,
    perspective: int = WHITE,
    max_depth: int = MAX_DEPTH,
    stats: Optional[SearchStats] = None,
) -> Direction:
    """깊이 1, 2, 3...으로 alpha-beta를 반복하고 마지막으로 완료된 깊이의 최선수를 반환합니다.

    생존 가능한 이동이 있으면 항상 그중 하나를 반환합니다.
    """
    legal = ordered_survival_moves(state, perspective)
    if not legal:
        return state.snakes[perspective].heading
    if len(legal) == 1:
        return legal[0]

    tracker = as_tracker(budget)
    stats = stats if stats is not None else SearchStats()
    best = legal[0]
    completed = 0
    for depth in range(1, max_depth + 1):
        depth_stats = SearchStats()
        try:
            move, _value = alphabeta(
                state, depth, tracker, weights, perspective, legal, depth_stats
            )
        except BudgetExhausted:
            stats.nodes += depth_stats.nodes
            stats.exhausted = True
            break
        stats.nodes += depth_stats.nodes
        stats.horizon_leaves += depth_stats.horizon_leaves
        best, completed = move, depth
        stats.depth = completed
        # 지평선에 닿은 잎이 없으면 트리 전체가 종료 상태로 해결됨
        if depth_stats.horizon_leaves == 0:
            break

    logger.debug(
        "반복 심화 완료",
        depth=completed,
        nodes=tracker.used,
        move=best.code,
    )
    return best
