"""
상태 평가 함수

길이 차이, 사과까지의 BFS 거리 차이, Voronoi 영역 차이의 가중합입니다.
종료 상태는 평가하지 않고 승/패 센티넬 또는 0을 반환합니다.
"""

import math
from dataclasses import dataclass

from ..base.exceptions import InvalidConfig
from ..engine.models import GameState
from .grid import UNREACHABLE, head_fields, ownership_from_fields

# 승리 센티넬 (유한값이므로 산술과 비교가 안전합니다)
WIN_SCORE = 1e9
LOSS_SCORE = -WIN_SCORE


@dataclass(frozen=True)
class EvalWeights:
    w_length: float = 10.0
    w_apple_distance: float = 1.0
    w_territory: float = 1.0

    def __post_init__(self):
        for name in ("w_length", "w_apple_distance", "w_territory"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidConfig(f"가중치는 유한해야 합니다: {name}={value}", name)

    def scaled(self, factor: float) -> "EvalWeights":
        return EvalWeights(
            self.w_length * factor,
            self.w_apple_distance * factor,
            self.w_territory * factor,
        )


DEFAULT_WEIGHTS = EvalWeights()


def terminal_score(state: GameState, perspective: int) -> float:
    winner = state.outcome.winner
    if winner is None:
        return 0.0
    return WIN_SCORE if winner == perspective else LOSS_SCORE


def evaluate(
    state: GameState, perspective: int, weights: EvalWeights = DEFAULT_WEIGHTS
) -> float:
    if not state.is_running:
        return terminal_score(state, perspective)

    opponent = 1 - perspective
    fields = head_fields(state)
    mine, theirs = fields[perspective], fields[opponent]

    length_term = len(state.snakes[perspective]) - len(state.snakes[opponent])

    apple_term = 0
    apple = state.apple.position
    if apple is not None:
        sentinel = state.width * state.height
        d_self = int(mine.array[apple.y, apple.x])
        d_opp = int(theirs.array[apple.y, apple.x])
        d_self = sentinel if d_self == UNREACHABLE else d_self
        d_opp = sentinel if d_opp == UNREACHABLE else d_opp
        apple_term = d_opp - d_self

    territory_term = ownership_from_fields(state, mine, theirs).margin

    return (
        weights.w_length * length_term
        + weights.w_apple_distance * apple_term
        + weights.w_territory * territory_term
    )
