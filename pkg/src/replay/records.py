"""
리플레이 레코드 모델

한 줄에 하나의 JSON 객체(JSONL)로 저장합니다. 필드 선언 순서가 직렬화 순서이며
부동소수점 필드는 없습니다.
"""

from typing import Annotated, Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from ..engine.models import Cell, Direction, GameState, MatchOutcome
from ..engine.rng import ALGORITHM as RNG_ALGORITHM

FORMAT_VERSION = "snakes-replay/1"

MoveCode = Literal["N", "E", "S", "W"]
Side = Literal["white", "blue"]
SIDES: Tuple[Side, Side] = ("white", "blue")
Point = Tuple[int, int]


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True, frozen=True)


class Header(_Record):
    type: Literal["header"] = "header"
    version: str = Field(FORMAT_VERSION, description="포맷 버전")
    seed: int = Field(..., description="매치 시드")
    rng: str = Field(RNG_ALGORITHM, description="난수 생성기 알고리즘")
    white: str = Field(..., description="white 참가자")
    blue: str = Field(..., description="blue 참가자")
    config: Dict[str, Any] = Field(..., description="MatchConfig 필드")


class Tick(_Record):
    type: Literal["tick"] = "tick"
    tick: int = Field(..., ge=0, description="틱 인덱스 (0부터 연속)")
    white: MoveCode
    blue: MoveCode
    clock: int = Field(..., description="step 이후 시계")
    apple: Optional[Point] = Field(None, description="step 이후 사과 위치")
    scores: Point
    head_white: Point
    head_blue: Point

    @classmethod
    def from_step(
        cls, index: int, move_white: Direction, move_blue: Direction, state: GameState
    ) -> "Tick":
        apple = state.apple.position
        return cls(
            tick=index,
            white=move_white.code,
            blue=move_blue.code,
            clock=state.clock,
            apple=tuple(apple) if apple is not None else None,
            scores=state.scores,
            head_white=tuple(state.head(0)),
            head_blue=tuple(state.head(1)),
        )

    def moves(self) -> Tuple[Direction, Direction]:
        return Direction.from_code(self.white), Direction.from_code(self.blue)

    def matches(self, state: GameState) -> bool:
        """재시뮬레이션한 상태와 기록이 일치하는지"""
        apple = state.apple.position
        return (
            self.clock == state.clock
            and self.apple == (tuple(apple) if apple is not None else None)
            and self.scores == state.scores
            and Cell(*self.head_white) == state.head(0)
            and Cell(*self.head_blue) == state.head(1)
        )


class Terminal(_Record):
    type: Literal["terminal"] = "terminal"
    result: Literal["WhiteWins", "BlueWins", "Draw"]
    cause: Literal[
        "OffBoard",
        "SelfCollision",
        "OpponentCollision",
        "HeadToHead",
        "Timeout",
        "BotCrash",
        "TimeLimit",
        "SimultaneousLoss",
    ]
    scores: Point
    forfeited: Tuple[Side, ...] = Field((), description="몰수패한 쪽 (Timeout/BotCrash일 때만)")

    @classmethod
    def from_outcome(
        cls, outcome: MatchOutcome, forfeited: Sequence[int] = ()
    ) -> "Terminal":
        return cls(
            result=outcome.result.value,
            cause=outcome.cause.value,
            scores=outcome.final_scores,
            forfeited=tuple(SIDES[i] for i in sorted(forfeited)),
        )


ReplayRecord = Annotated[Union[Header, Tick, Terminal], Field(discriminator="type")]
ReplayLog = List[ReplayRecord]

record_adapter: TypeAdapter = TypeAdapter(ReplayRecord)
