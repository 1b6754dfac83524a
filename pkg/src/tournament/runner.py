"""
매치 실행기

매 틱 두 봇의 결정을 모아 엔진에 적용하고 리플레이 레코드를 남깁니다.

- logical 모드: decide를 현재 태스크에서 바로 호출하고, 소비한 노드 수가 결정
  예산을 넘으면 시간 초과로 처리합니다. 틱마다 이벤트 루프에 양보합니다.
- wall 모드: 두 결정을 감시자 아래에서 동시에 실행하고, 예산(ms)을 넘긴 봇은
  시간 초과로 집니다. 시계는 max(100ms, 느린 쪽의 결정 시간)만큼 진행합니다.

봇 예외나 잘못된 반환값은 BotCrash 몰수패입니다. 두 봇이 같은 틱에 모두 실패하면
무승부입니다.
"""

import asyncio
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import structlog

from ..agent.base.base_bot import BaseBot, BotView
from ..base.config import TICK_MS, ClockMode, MatchConfig
from ..base.exceptions import BotPanic, DecisionTimeout
from ..base.utils import derive_seed
from ..engine.models import BLUE, WHITE, Cause, Direction, GameState, MatchOutcome
from ..engine.rules import forfeit, new_match, step
from ..replay.records import Header, ReplayLog, Terminal, Tick
from ..search.budget import SearchBudget
from .watchdog import DecisionWatchdog

logger = structlog.get_logger(__name__)

TickCallback = Callable[[GameState], None]


@dataclass(frozen=True)
class Decision:
    move: Optional[Direction]
    failure: Optional[Cause] = None
    elapsed_ms: float = 0.0


def bot_seeds(match_seed: int) -> Tuple[int, int]:
    """매치 시드로부터 두 봇의 reset 시드를 파생합니다."""
    return derive_seed(match_seed, "white"), derive_seed(match_seed, "blue")


def _checked(bot: BaseBot, participant: str, view: BotView, move: object) -> Decision:
    if not isinstance(move, Direction):
        error = BotPanic(participant, TypeError(f"invalid move: {move!r}"))
        logger.warning("잘못된 결정", **error.to_dict())
        return Decision(None, Cause.BOT_CRASH)
    if view.budget.mode is ClockMode.LOGICAL and bot.nodes_used > view.budget.limit:
        logger.warning(
            "노드 예산 초과",
            participant=participant,
            nodes=bot.nodes_used,
            budget=view.budget.limit,
        )
        return Decision(None, Cause.TIMEOUT)
    return Decision(move)


def _decide_inline(bot: BaseBot, participant: str, view: BotView) -> Decision:
    try:
        move = bot.decide(view)
    except Exception as e:
        error = BotPanic(participant, e)
        logger.warning("봇 크래시", **error.to_dict())
        return Decision(None, Cause.BOT_CRASH)
    return _checked(bot, participant, view, move)


async def _decide_watched(
    bot: BaseBot, participant: str, view: BotView, watchdog: DecisionWatchdog
) -> Decision:
    try:
        move, elapsed_ms = await watchdog.run_with_timeout(
            participant, bot.decide, view, timeout_ms=view.budget.limit
        )
    except DecisionTimeout:
        return Decision(None, Cause.TIMEOUT)
    except Exception as e:
        error = BotPanic(participant, e)
        logger.warning("봇 크래시", **error.to_dict())
        return Decision(None, Cause.BOT_CRASH)
    decision = _checked(bot, participant, view, move)
    return Decision(decision.move, decision.failure, elapsed_ms)


async def _collect(
    bots: Sequence[BaseBot],
    names: Sequence[str],
    state: GameState,
    budget: SearchBudget,
    watchdog: DecisionWatchdog,
) -> List[Decision]:
    views = [BotView(state, i, budget) for i in (WHITE, BLUE)]
    if state.config.is_logical:
        return [_decide_inline(bots[i], names[i], views[i]) for i in (WHITE, BLUE)]
    return list(
        await asyncio.gather(
            *(_decide_watched(bots[i], names[i], views[i], watchdog) for i in (WHITE, BLUE))
        )
    )


def _forfeit_cause(failures: Sequence[Cause]) -> Cause:
    if all(c is Cause.TIMEOUT for c in failures):
        return Cause.TIMEOUT
    return Cause.BOT_CRASH


async def run_match(
    white: BaseBot,
    blue: BaseBot,
    config: MatchConfig,
    seed: int,
    names: Optional[Tuple[str, str]] = None,
    watchdog: Optional[DecisionWatchdog] = None,
    on_tick: Optional[TickCallback] = None,
    start: Optional[GameState] = None,
) -> Tuple[MatchOutcome, ReplayLog]:
    """한 매치를 끝까지 진행하고 (결과, 리플레이 레코드)를 반환합니다.

    start를 주면 new_match 대신 그 상태에서 시작합니다 (구성된 픽스처용).
    이 경우 리플레이는 헤더만으로 재시뮬레이션할 수 없습니다.
    """
    names = names or (white.name, blue.name)
    bots = (white, blue)
    watchdog = watchdog or DecisionWatchdog(config.decision_budget)
    log = logger.bind(white=names[WHITE], blue=names[BLUE], seed=seed)

    for bot, bot_seed in zip(bots, bot_seeds(seed)):
        bot.reset(bot_seed)

    state = start if start is not None else new_match(config, seed)
    budget = SearchBudget(config.clock_mode, config.decision_budget)
    records: ReplayLog = [
        Header(seed=seed, white=names[WHITE], blue=names[BLUE], config=config.to_dict())
    ]
    forfeited: List[int] = []
    if on_tick is not None:
        on_tick(state)

    while state.is_running:
        decisions = await _collect(bots, names, state, budget, watchdog)
        losers = [i for i, d in enumerate(decisions) if d.failure is not None]
        if losers:
            cause = _forfeit_cause([decisions[i].failure for i in losers])
            state = forfeit(state, losers, cause)
            forfeited = losers
            log.info("몰수패", losers=[names[i] for i in losers], cause=cause.value)
            break

        if config.is_logical:
            elapsed = 1
        else:
            elapsed = max(TICK_MS, round(max(d.elapsed_ms for d in decisions)))
        move_white, move_blue = decisions[WHITE].move, decisions[BLUE].move
        index = state.tick
        state = step(state, move_white, move_blue, elapsed).next
        records.append(Tick.from_step(index, move_white, move_blue, state))
        if on_tick is not None:
            on_tick(state)
        if config.is_logical:
            await asyncio.sleep(0)

    outcome = state.outcome
    records.append(Terminal.from_outcome(outcome, forfeited))
    log.info(
        "매치 종료",
        result=outcome.result.value,
        cause=outcome.cause.value,
        scores=outcome.score_line(),
        ticks=len(records) - 2,
    )
    return outcome, records
