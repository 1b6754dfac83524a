"""
토너먼트 관리자

대진표의 모든 매치를 (최대 parallel개씩 동시에) 실행하고, 매치마다 새 봇
인스턴스를 만들어 리플레이 파일을 쓰며, 끝나면 순위표(CSV, JSON)를 기록합니다.
봇 크래시는 해당 매치의 패배로만 기록되고 토너먼트는 중단되지 않습니다.
"""

import asyncio
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import structlog

from ..agent.base.base_bot import BaseBot
from ..base.config import MatchConfig, TournamentConfig
from ..base.exceptions import DuplicateParticipant
from ..base.middleware import MiddlewareManager
from ..base.utils import first_duplicate, format_duration
from ..engine.models import Cause, MatchOutcome
from ..replay.codec import write_replay_file
from .runner import run_match
from .schedule import Pairing, schedule_round_robin
from .standings import Standings

logger = structlog.get_logger(__name__)

BotFactory = Callable[[], BaseBot]
Entries = Union[Mapping[str, BotFactory], Sequence[Tuple[str, BotFactory]]]

STANDINGS_CSV = "standings.csv"
STANDINGS_JSON = "standings.json"


@dataclass
class TournamentResult:
    standings: Standings
    outcomes: List[MatchOutcome]
    pairings: List[Pairing]
    log_dir: Optional[Path] = None
    stats: Dict[str, Any] = field(default_factory=dict)


def _normalize_entries(entries: Entries) -> List[Tuple[str, BotFactory]]:
    items = list(entries.items()) if isinstance(entries, Mapping) else list(entries)
    duplicate = first_duplicate(name for name, _ in items)
    if duplicate is not None:
        raise DuplicateParticipant(duplicate)
    return items


class TournamentManager:
    """라운드 로빈 토너먼트 관리자"""

    def __init__(self, entries: Entries, config: TournamentConfig):
        self.entries = dict(_normalize_entries(entries))
        self.config = config
        self.pairings = schedule_round_robin(
            list(self.entries), config.repeats, config.match.base_seed
        )
        self.log_dir = Path(config.out_dir) if config.out_dir else None
        self.middleware = MiddlewareManager("tournament")
        self._play_match = self.middleware.apply_all("run_match")(self._play_match)
        logger.info(
            "토너먼트 준비",
            participants=len(self.entries),
            matches=len(self.pairings),
            parallel=config.parallel,
        )

    @property
    def match_config(self) -> MatchConfig:
        return self.config.match

    async def run(self) -> TournamentResult:
        """모든 매치를 실행하고 결과를 집계합니다."""
        loop = asyncio.get_running_loop()
        started = loop.time()
        semaphore = asyncio.Semaphore(self.config.parallel)
        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)

        async def guarded(pairing: Pairing) -> MatchOutcome:
            async with semaphore:
                return await self._play_match(pairing)

        outcomes = await asyncio.gather(*(guarded(p) for p in self.pairings))

        # 대진표 순서로 집계하므로 실행 순서와 무관
        standings = Standings(self.entries)
        for pairing, outcome in zip(self.pairings, outcomes, strict=True):
            standings.record_match(pairing.white, pairing.blue, outcome)

        if self.log_dir is not None:
            self._write_standings(standings)

        logger.info(
            "토너먼트 완료",
            matches=len(outcomes),
            duration=format_duration(loop.time() - started),
            leader=standings.rank()[0],
        )
        return TournamentResult(
            standings=standings,
            outcomes=list(outcomes),
            pairings=list(self.pairings),
            log_dir=self.log_dir,
            stats=self.get_stats(),
        )

    async def _play_match(self, pairing: Pairing) -> MatchOutcome:
        white = self.entries[pairing.white]()
        blue = self.entries[pairing.blue]()
        outcome, records = await run_match(
            white,
            blue,
            self.match_config,
            pairing.seed,
            names=(pairing.white, pairing.blue),
        )
        self.middleware.monitoring.record_event("matches_played")
        if outcome.cause in (Cause.TIMEOUT, Cause.BOT_CRASH):
            self.middleware.monitoring.record_event("forfeits")
            self.middleware.monitoring.record_event(
                "timeouts" if outcome.cause is Cause.TIMEOUT else "crashes"
            )
        if self.log_dir is not None:
            write_replay_file(self.log_dir / pairing.log_name, records)
        return outcome

    def _write_standings(self, standings: Standings) -> None:
        (self.log_dir / STANDINGS_CSV).write_text(standings.to_csv(), encoding="utf-8")
        summary = {
            "participants": list(self.entries),
            "repeats": self.config.repeats,
            "matches": len(self.pairings),
            "config": self.match_config.to_dict(),
            **standings.to_dict(),
        }
        (self.log_dir / STANDINGS_JSON).write_text(
            json.dumps(summary, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )

    def get_stats(self) -> Dict[str, Any]:
        """매치 수, 몰수패, 크래시 카운터와 미들웨어 통계"""
        events = self.middleware.monitoring.get_monitoring_stats()["events"]
        return {
            "matches_scheduled": len(self.pairings),
            "matches_played": events.get("matches_played", 0),
            "forfeits": events.get("forfeits", 0),
            "timeouts": events.get("timeouts", 0),
            "crashes": events.get("crashes", 0),
            "service": self.middleware.get_service_stats(),
        }


async def run_tournament(
    entries: Entries,
    repeats: int,
    config: MatchConfig,
    parallel: int = 1,
    out_dir: Optional[Union[str, Path]] = None,
) -> TournamentResult:
    """라운드 로빈 토너먼트를 실행합니다. 결과는 순위표, 대진표 순서의 매치 결과, 로그 디렉터리."""
    tournament_config = TournamentConfig(
        repeats=repeats,
        parallel=parallel,
        out_dir=str(out_dir) if out_dir is not None else None,
        match=config,
    )
    manager = TournamentManager(entries, tournament_config)
    return await manager.run()
