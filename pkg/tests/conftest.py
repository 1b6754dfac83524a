"""
공통 테스트 픽스처

- 보드 구성 헬퍼 (compose_state 래퍼)
- 180도 회전 + 색 교환 거울상
- 스크립트/크래시/지연 봇
- 무작위 진행으로 얻는 실행 중 상태 샘플
"""

import time
from typing import Iterator, List, Optional, Sequence, Tuple

import pytest

from src.agent.base.base_bot import BaseBot, BotView
from src.base.config import MatchConfig
from src.engine.models import BLUE, WHITE, AppleState, Cell, Direction, GameState, Snake
from src.engine.rng import SeededRandom
from src.engine.rules import new_match, ordered_survival_moves, step

Layout = Sequence[Tuple[int, int]]

# 2x2 블록을 도는 길이 4 뱀의 이동 주기
TOP_LEFT_LOOP = [(0, 0), (0, 1), (1, 1), (1, 0)]
TOP_LEFT_CYCLE = [Direction.EAST, Direction.SOUTH, Direction.WEST, Direction.NORTH]


def bottom_right_loop(width: int, height: int) -> List[Tuple[int, int]]:
    x, y = width - 1, height - 1
    return [(x, y), (x, y - 1), (x - 1, y - 1), (x - 1, y)]


BOTTOM_RIGHT_CYCLE = [Direction.WEST, Direction.NORTH, Direction.EAST, Direction.SOUTH]


def mirror_state(state: GameState) -> GameState:
    """보드를 180도 회전하고 두 뱀의 색을 바꾼 상태"""
    width, height = state.width, state.height

    def rotate(cell: Cell) -> Cell:
        return Cell(width - 1 - cell.x, height - 1 - cell.y)

    snakes = tuple(
        Snake(tuple(rotate(c) for c in s.body), s.heading.opposite(), s.alive)
        for s in reversed(state.snakes)
    )
    apple = state.apple
    if apple.present:
        apple = AppleState(rotate(apple.position), apple.age)
    return GameState(
        config=state.config,
        snakes=snakes,
        apple=apple,
        scores=(state.scores[BLUE], state.scores[WHITE]),
        clock=state.clock,
        rng_state=state.rng_state,
        tick=state.tick,
        outcome=state.outcome,
    )


def random_states(
    config: MatchConfig, count: int, seed: int = 0, max_plies: int = 12
) -> Iterator[GameState]:
    """new_match에서 무작위 생존 이동으로 진행한 실행 중 상태들"""
    rng = SeededRandom(seed)
    produced = 0
    game = 0
    while produced < count:
        state = new_match(config, seed * 1_000 + game)
        game += 1
        for _ in range(rng.randbelow(max_plies + 1)):
            moves = [
                rng.choice(ordered_survival_moves(state, i) or (state.snakes[i].heading,))
                for i in (WHITE, BLUE)
            ]
            result = step(state, moves[WHITE], moves[BLUE])
            if result.terminal is not None:
                break
            state = result.next
        if state.is_running:
            produced += 1
            yield state


class ScriptedBot(BaseBot):
    """미리 정한 방향을 순환하며 반환하는 봇"""

    kind = "scripted"

    def __init__(self, moves: Sequence[Direction], name: Optional[str] = None):
        super().__init__(name)
        self.moves = list(moves)
        self.calls = 0

    def reset(self, seed: int) -> None:
        super().reset(seed)
        self.calls = 0

    def decide(self, view: BotView) -> Direction:
        move = self.moves[self.calls % len(self.moves)]
        self.calls += 1
        self.nodes_used = 1
        return move


class CrashingBot(BaseBot):
    kind = "crasher"

    def decide(self, view: BotView) -> Direction:
        raise RuntimeError("boom")


class ReversingBot(BaseBot):
    """진행 방향의 반대로 움직여 곧바로 자기 몸에 부딪히는 봇"""

    kind = "reverser"

    def decide(self, view: BotView) -> Direction:
        return view.snake.heading.opposite()


class SleepingBot(BaseBot):
    kind = "sleeper"

    def __init__(self, seconds: float, name: Optional[str] = None):
        super().__init__(name)
        self.seconds = seconds

    def decide(self, view: BotView) -> Direction:
        time.sleep(self.seconds)
        return view.snake.heading


@pytest.fixture
def board15() -> MatchConfig:
    return MatchConfig()


@pytest.fixture
def board5() -> MatchConfig:
    return MatchConfig(width=5, height=5)


@pytest.fixture
def board3() -> MatchConfig:
    return MatchConfig(width=3, height=3)
