"""
리플레이 검증

헤더의 설정과 시드로 매치를 다시 시작하고 기록된 이동을 엔진에 적용하면서 매 틱의
사과 위치, 점수, 시계, 머리 위치와 최종 결과를 비교합니다.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import structlog

from ..base.config import MatchConfig
from ..base.exceptions import SnakesError
from ..engine.models import Cause
from ..engine.rng import ALGORITHM as RNG_ALGORITHM
from ..engine.rules import forfeit, new_match, step
from .codec import check_structure
from .records import SIDES, Header, ReplayRecord, Terminal, Tick

logger = structlog.get_logger(__name__)

_FORFEIT_CAUSES = (Cause.TIMEOUT.value, Cause.BOT_CRASH.value)


@dataclass(frozen=True)
class Verdict:
    """검증 결과: Valid 또는 Diverges(tick)"""

    diverged_at: Optional[int] = None
    reason: str = ""

    @property
    def is_valid(self) -> bool:
        return self.diverged_at is None

    @classmethod
    def valid(cls) -> "Verdict":
        return cls()

    @classmethod
    def diverges(cls, tick: int, reason: str) -> "Verdict":
        return cls(tick, reason)

    def __str__(self) -> str:
        if self.is_valid:
            return "Valid"
        return f"Diverges at tick {self.diverged_at}"


def verify_replay(records: Sequence[ReplayRecord]) -> Verdict:
    try:
        check_structure(records)
    except SnakesError as e:
        return Verdict.diverges(0, e.message)

    header: Header = records[0]
    terminal: Terminal = records[-1]
    ticks: Sequence[Tick] = records[1:-1]

    if header.rng != RNG_ALGORITHM:
        return Verdict.diverges(0, f"지원하지 않는 난수 생성기: {header.rng}")
    try:
        config = MatchConfig.from_dict(header.config)
        state = new_match(config, header.seed)
    except (SnakesError, TypeError, ValueError) as e:
        return Verdict.diverges(0, f"헤더로 매치를 재구성할 수 없습니다: {e}")

    for record in ticks:
        if not state.is_running:
            return Verdict.diverges(record.tick, "종료 이후의 틱")
        elapsed = record.clock - state.clock
        if elapsed < 1 or (config.is_logical and elapsed != 1):
            return Verdict.diverges(record.tick, f"잘못된 시계 진행: {elapsed}")
        move_white, move_blue = record.moves()
        state = step(state, move_white, move_blue, elapsed).next
        if not record.matches(state):
            return Verdict.diverges(record.tick, "상태 불일치")

    last_tick = ticks[-1].tick if ticks else 0
    scores = tuple(terminal.scores)
    if state.is_running:
        # 몰수패: 기록된 쪽을 엔진 상태에 다시 적용한 뒤 결과 전체를 비교
        if terminal.cause not in _FORFEIT_CAUSES or not terminal.forfeited:
            return Verdict.diverges(last_tick, "몰수패 터미널 불일치")
        losers = [SIDES.index(side) for side in terminal.forfeited]
        state = forfeit(state, losers, Cause(terminal.cause))
    elif terminal.forfeited:
        return Verdict.diverges(last_tick, "종료된 매치에 몰수패 기록")

    outcome = state.outcome
    if (
        terminal.result != outcome.result.value
        or terminal.cause != outcome.cause.value
        or scores != outcome.final_scores
    ):
        logger.debug(
            "터미널 불일치",
            expected=(outcome.result.value, outcome.cause.value),
            found=(terminal.result, terminal.cause),
        )
        return Verdict.diverges(last_tick, "터미널 불일치")
    return Verdict.valid()
