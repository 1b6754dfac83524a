"""
게임 엔진 패키지

2인 동시 이동 Snake 규칙의 순수하고 결정적인 구현을 제공합니다.
"""

from .models import (
    BLUE,
    DIRECTIONS,
    WHITE,
    AppleState,
    Cause,
    Cell,
    Direction,
    GameState,
    MatchOutcome,
    Phase,
    Result,
    Snake,
    StepOutcome,
)
from .render import render_board
from .rng import ALGORITHM as RNG_ALGORITHM
from .rng import SeededRandom
from .rules import (
    advance_solo,
    compose_state,
    forfeit,
    free_cells,
    legal_survival_moves,
    new_match,
    ordered_survival_moves,
    spawn_apple,
    step,
    tick_apple,
)

__all__ = [
    "WHITE",
    "BLUE",
    "DIRECTIONS",
    "Direction",
    "Cell",
    "Snake",
    "AppleState",
    "GameState",
    "StepOutcome",
    "MatchOutcome",
    "Result",
    "Cause",
    "Phase",
    "SeededRandom",
    "RNG_ALGORITHM",
    "new_match",
    "step",
    "spawn_apple",
    "tick_apple",
    "legal_survival_moves",
    "ordered_survival_moves",
    "advance_solo",
    "forfeit",
    "free_cells",
    "compose_state",
    "render_board",
]
