"""
게임 엔진 도메인 타입

모든 상태는 불변(frozen) 값이며 스레드 간 공유가 안전합니다.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, NamedTuple, Optional, Tuple

from ..base.config import MatchConfig

WHITE = 0
BLUE = 1


class Direction(Enum):
    """이동 방향. 선언 순서(N, E, S, W)가 동점 처리 순서입니다."""

    NORTH = (0, -1)
    EAST = (1, 0)
    SOUTH = (0, 1)
    WEST = (-1, 0)

    @property
    def delta(self) -> Tuple[int, int]:
        return self.value

    @property
    def code(self) -> str:
        return self.name[0]

    def opposite(self) -> "Direction":
        return _OPPOSITES[self]

    @classmethod
    def from_code(cls, code: str) -> "Direction":
        return _BY_CODE[code.upper()]


_OPPOSITES = {
    Direction.NORTH: Direction.SOUTH,
    Direction.SOUTH: Direction.NORTH,
    Direction.EAST: Direction.WEST,
    Direction.WEST: Direction.EAST,
}
_BY_CODE = {d.code: d for d in Direction}

# 동점 처리 순서
DIRECTIONS: Tuple[Direction, ...] = tuple(Direction)


class Cell(NamedTuple):
    """보드 칸 (x: 열, y: 행, 0부터 시작)"""

    x: int
    y: int

    def shift(self, direction: Direction) -> "Cell":
        dx, dy = direction.value
        return Cell(self.x + dx, self.y + dy)

    def manhattan(self, other: "Cell") -> int:
        return abs(self.x - other.x) + abs(self.y - other.y)

    def neighbors(self) -> Tuple["Cell", ...]:
        return tuple(self.shift(d) for d in DIRECTIONS)

    def direction_to(self, other: "Cell") -> Optional[Direction]:
        """인접한 칸으로 가는 방향 (인접하지 않으면 None)"""
        for d in DIRECTIONS:
            if self.shift(d) == other:
                return d
        return None


@dataclass(frozen=True)
class Snake:
    """뱀: 머리부터 순서대로 정렬된 몸통, 진행 방향, 생존 여부"""

    body: Tuple[Cell, ...]
    heading: Direction
    alive: bool = True

    @property
    def head(self) -> Cell:
        return self.body[0]

    @property
    def tail(self) -> Cell:
        return self.body[-1]

    def __len__(self) -> int:
        return len(self.body)


@dataclass(frozen=True)
class AppleState:
    """사과 상태. position이 None이면 부재(Absent)."""

    position: Optional[Cell] = None
    age: int = 0

    @property
    def present(self) -> bool:
        return self.position is not None


ABSENT_APPLE = AppleState()


class Result(str, Enum):
    WHITE_WINS = "WhiteWins"
    BLUE_WINS = "BlueWins"
    DRAW = "Draw"

    @classmethod
    def win_for(cls, index: int) -> "Result":
        return cls.WHITE_WINS if index == WHITE else cls.BLUE_WINS


class Cause(str, Enum):
    OFF_BOARD = "OffBoard"
    SELF_COLLISION = "SelfCollision"
    OPPONENT_COLLISION = "OpponentCollision"
    HEAD_TO_HEAD = "HeadToHead"
    TIMEOUT = "Timeout"
    BOT_CRASH = "BotCrash"
    TIME_LIMIT = "TimeLimit"
    SIMULTANEOUS_LOSS = "SimultaneousLoss"


class Phase(str, Enum):
    RUNNING = "Running"
    FINISHED = "Finished"


@dataclass(frozen=True)
class MatchOutcome:
    """한 게임의 최종 결과"""

    result: Result
    cause: Cause
    final_scores: Tuple[int, int]

    @property
    def winner(self) -> Optional[int]:
        if self.result is Result.WHITE_WINS:
            return WHITE
        if self.result is Result.BLUE_WINS:
            return BLUE
        return None

    def score_line(self) -> str:
        return f"{self.final_scores[0]}-{self.final_scores[1]}"


@dataclass(frozen=True)
class GameState:
    """보드 전체 상황. snakes[0]은 white, snakes[1]은 blue."""

    config: MatchConfig
    snakes: Tuple[Snake, Snake]
    apple: AppleState
    scores: Tuple[int, int]
    clock: int
    rng_state: int
    tick: int = 0
    outcome: Optional[MatchOutcome] = None

    @property
    def width(self) -> int:
        return self.config.width

    @property
    def height(self) -> int:
        return self.config.height

    @property
    def phase(self) -> Phase:
        return Phase.RUNNING if self.outcome is None else Phase.FINISHED

    @property
    def is_running(self) -> bool:
        return self.outcome is None

    def in_bounds(self, cell: Cell) -> bool:
        return 0 <= cell.x < self.config.width and 0 <= cell.y < self.config.height

    def head(self, index: int) -> Cell:
        return self.snakes[index].body[0]

    @cached_property
    def occupied(self) -> FrozenSet[Cell]:
        """두 뱀의 몸통이 차지한 칸 집합"""
        return frozenset(self.snakes[0].body) | frozenset(self.snakes[1].body)

    @property
    def free_cell_count(self) -> int:
        return self.config.width * self.config.height - len(self.occupied)


@dataclass(frozen=True)
class StepOutcome:
    """step의 결과: 다음 상태와 (종료 시) 매치 결과"""

    next: GameState
    terminal: Optional[MatchOutcome] = None
