"""
몬테카를로 트리 탐색 (UCT)

트리는 alpha-beta와 같은 순차화를 따릅니다. 내 노드에서 방향을 고르면 상대 노드가
되고, 상대 노드에서 응수를 고르면 step이 적용된 다음 내 노드가 됩니다.
롤아웃은 양쪽 모두 생존 가능한 이동 중 균등 무작위로 두며, horizon 틱에서 잘라
평가 함수의 부호로 점수를 매깁니다 (승 1, 무 0.5, 패 0).
"""

import math
from typing import List, Optional, Tuple, Union

import structlog

from ..engine.models import DIRECTIONS, WHITE, Direction, GameState
from ..engine.rng import SeededRandom
from ..engine.rules import ordered_survival_moves, step
from .budget import BudgetTracker, SearchBudget, SearchStats, as_tracker
from .evaluation import DEFAULT_WEIGHTS, EvalWeights, evaluate

logger = structlog.get_logger(__name__)

DEFAULT_HORIZON = 50
DEFAULT_EXPLORATION = math.sqrt(2)


class _Node:
    __slots__ = (
        "state",
        "pending",
        "move",
        "parent",
        "children",
        "untried",
        "visits",
        "reward",
    )

    def __init__(
        self,
        state: GameState,
        untried: Tuple[Direction, ...],
        pending: Optional[Direction] = None,
        move: Optional[Direction] = None,
        parent: Optional["_Node"] = None,
    ):
        self.state = state
        # 상대 노드일 때: 이미 정해진 내 방향
        self.pending = pending
        self.move = move
        self.parent = parent
        self.children: List[_Node] = []
        self.untried = list(untried)
        self.visits = 0
        # perspective 관점의 누적 보상
        self.reward = 0.0

    @property
    def is_opponent_turn(self) -> bool:
        return self.pending is not None


def rollout_moves(state: GameState, index: int) -> Tuple[Direction, ...]:
    """랜덤 플레이아웃 후보: 생존 가능한 이동, 없으면 네 방향 전부."""
    return ordered_survival_moves(state, index) or DIRECTIONS


def _outcome_reward(state: GameState, perspective: int) -> float:
    winner = state.outcome.winner
    if winner is None:
        return 0.5
    return 1.0 if winner == perspective else 0.0


class _Tree:
    def __init__(
        self,
        perspective: int,
        rng: SeededRandom,
        weights: EvalWeights,
        horizon: int,
        exploration: float,
    ):
        self.perspective = perspective
        self.opponent = 1 - perspective
        self.rng = rng
        self.weights = weights
        self.horizon = horizon
        self.exploration = exploration

    def joint(self, state: GameState, mine: Direction, theirs: Direction) -> GameState:
        if self.perspective == WHITE:
            return step(state, mine, theirs).next
        return step(state, theirs, mine).next

    def new_child(self, node: _Node, move: Direction) -> _Node:
        if node.is_opponent_turn:
            state = self.joint(node.state, node.pending, move)
            untried = (
                rollout_moves(state, self.perspective) if state.is_running else ()
            )
            child = _Node(state, untried, move=move, parent=node)
        else:
            child = _Node(
                node.state,
                rollout_moves(node.state, self.opponent),
                pending=move,
                move=move,
                parent=node,
            )
        node.children.append(child)
        return child

    def select(self, node: _Node) -> _Node:
        log_visits = math.log(node.visits)
        best, best_score = node.children[0], -math.inf
        for child in node.children:
            mean = child.reward / child.visits
            if node.is_opponent_turn:
                mean = 1.0 - mean
            score = mean + self.exploration * math.sqrt(log_visits / child.visits)
            if score > best_score:
                best, best_score = child, score
        return best

    def rollout(self, node: _Node) -> float:
        state = node.state
        if node.is_opponent_turn:
            theirs = self.rng.choice(rollout_moves(state, self.opponent))
            state = self.joint(state, node.pending, theirs)
        for _ in range(self.horizon):
            if not state.is_running:
                break
            mine = self.rng.choice(rollout_moves(state, self.perspective))
            theirs = self.rng.choice(rollout_moves(state, self.opponent))
            state = self.joint(state, mine, theirs)
        if not state.is_running:
            return _outcome_reward(state, self.perspective)
        score = evaluate(state, self.perspective, self.weights)
        if score > 0:
            return 1.0
        if score < 0:
            return 0.0
        return 0.5

    def iterate(self, root: _Node) -> None:
        node = root
        # 선택: 완전히 확장된 노드를 따라 내려감
        while not node.untried and node.children:
            node = self.select(node)
        # 확장
        if node.untried:
            node = self.new_child(node, node.untried.pop(0))
        # 시뮬레이션
        if not node.is_opponent_turn and not node.state.is_running:
            reward = _outcome_reward(node.state, self.perspective)
        else:
            reward = self.rollout(node)
        # 역전파
        while node is not None:
            node.visits += 1
            node.reward += reward
            node = node.parent


def mcts_decide(
    state: GameState,
    perspective: int,
    budget: Union[SearchBudget, BudgetTracker],
    rng: SeededRandom,
    weights: EvalWeights = DEFAULT_WEIGHTS,
    horizon: int = DEFAULT_HORIZON,
    exploration: float = DEFAULT_EXPLORATION,
    stats: Optional[SearchStats] = None,
) -> Direction:
    """UCT로 방향을 고릅니다. 루트 자식 중 방문 횟수가 가장 많은 방향을 반환합니다.

    logical 모드 예산은 반복 횟수입니다. 같은 상태, 예산, rng 시드면 결과가 같습니다.
    """
    legal = ordered_survival_moves(state, perspective)
    if not legal:
        return state.snakes[perspective].heading
    if len(legal) == 1:
        return legal[0]

    tracker = as_tracker(budget)
    stats = stats if stats is not None else SearchStats()
    tree = _Tree(perspective, rng, weights, horizon, exploration)
    root = _Node(state, legal)

    while not tracker.expired():
        tree.iterate(root)
        tracker.used += 1
        stats.nodes += 1

    if not root.children:
        return legal[0]
    best = root.children[0]
    for child in root.children[1:]:
        if child.visits > best.visits:
            best = child

    logger.debug(
        "MCTS 완료",
        iterations=root.visits,
        move=best.move.code,
        visits=best.visits,
    )
    return best.move
