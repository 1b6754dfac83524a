"""
매치/토너먼트/로깅 설정 관리 모듈

모든 설정은 dataclass로 정의하며 `from_env`로 환경변수(`SNAKES_` 접두사)에서 로드할 수 있습니다.
"""

import logging
import os
import sys
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import structlog

from .exceptions import InvalidConfig

ENV_PREFIX = "SNAKES"


class ClockMode(str, Enum):
    """시계 모드: 실제 밀리초(wall) 또는 결정적 논리 틱(logical)"""

    WALL = "wall"
    LOGICAL = "logical"


class Ruleset(str, Enum):
    """대회 규칙 버전 (2020: 사과 만료 없음, 2021: 10초 후 사과 재배치)"""

    EDITION_2020 = "2020"
    EDITION_2021 = "2021"


# 1 논리 틱 = 100ms
TICK_MS = 100

# (match_limit, apple_ttl, decision_budget)
MODE_DEFAULTS: Dict[ClockMode, Tuple[int, int, int]] = {
    ClockMode.WALL: (180_000, 10_000, 1_000),
    ClockMode.LOGICAL: (1_800, 100, 20_000),
}


def _env(prefix: str, key: str) -> Optional[str]:
    env_prefix = f"{prefix}_" if prefix else ""
    return os.getenv(f"{env_prefix}{key}")


def parse_board(value: str) -> Tuple[int, int]:
    """`WxH` 형식의 보드 크기 문자열을 파싱합니다."""
    try:
        width, height = value.lower().split("x", 1)
        return int(width), int(height)
    except ValueError:
        raise InvalidConfig(f"보드 크기 형식이 잘못되었습니다: {value!r}", "board")


@dataclass(frozen=True)
class MatchConfig:
    """매치 설정

    제한값을 None으로 두면 clock_mode의 기본값으로 채워집니다.
    wall 모드의 단위는 밀리초, logical 모드의 단위는 틱(결정 예산은 탐색 노드 수)입니다.
    """

    width: int = 15
    height: int = 15
    initial_length: int = 3
    clock_mode: ClockMode = ClockMode.LOGICAL
    ruleset: Ruleset = Ruleset.EDITION_2021
    match_limit: Optional[int] = None
    apple_ttl: Optional[int] = None
    decision_budget: Optional[int] = None
    base_seed: int = 0

    def __post_init__(self):
        # 문자열로 넘어온 enum 값 정규화
        for key, enum_type in (("clock_mode", ClockMode), ("ruleset", Ruleset)):
            value = getattr(self, key)
            try:
                object.__setattr__(self, key, enum_type(value))
            except ValueError:
                raise InvalidConfig(f"{key} 값이 잘못되었습니다: {value!r}", key)

        limit, ttl, budget = MODE_DEFAULTS[self.clock_mode]
        if self.match_limit is None:
            object.__setattr__(self, "match_limit", limit)
        if self.ruleset is Ruleset.EDITION_2020:
            object.__setattr__(self, "apple_ttl", None)
        elif self.apple_ttl is None:
            object.__setattr__(self, "apple_ttl", ttl)
        if self.decision_budget is None:
            object.__setattr__(self, "decision_budget", budget)

        self.validate()

    def validate(self) -> None:
        """설정값을 검증합니다."""
        if self.width < 2 or self.height < 2:
            raise InvalidConfig(
                f"보드는 최소 2x2 이상이어야 합니다: {self.width}x{self.height}",
                "board",
            )
        if self.initial_length < 1:
            raise InvalidConfig(
                f"초기 길이는 1 이상이어야 합니다: {self.initial_length}",
                "initial_length",
            )
        for key in ("match_limit", "decision_budget"):
            if getattr(self, key) <= 0:
                raise InvalidConfig(f"{key}는 양수여야 합니다", key)
        if self.apple_ttl is not None and self.apple_ttl <= 0:
            raise InvalidConfig("apple_ttl은 양수여야 합니다", "apple_ttl")

    @property
    def is_logical(self) -> bool:
        return self.clock_mode is ClockMode.LOGICAL

    def with_overrides(self, **changes: Any) -> "MatchConfig":
        """일부 필드를 바꾼 새 설정을 반환합니다."""
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """리플레이 헤더용 딕셔너리 (필드 순서 고정)"""
        data = asdict(self)
        data["clock_mode"] = self.clock_mode.value
        data["ruleset"] = self.ruleset.value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MatchConfig":
        return cls(**data)

    @classmethod
    def from_env(cls, prefix: str = ENV_PREFIX) -> "MatchConfig":
        """환경변수에서 매치 설정을 로드합니다."""
        width, height = parse_board(_env(prefix, "BOARD") or "15x15")
        clock = _env(prefix, "CLOCK") or ClockMode.LOGICAL.value
        try:
            return cls(
                width=width,
                height=height,
                initial_length=int(_env(prefix, "LENGTH") or 3),
                clock_mode=ClockMode(clock),
                ruleset=Ruleset(_env(prefix, "RULESET") or Ruleset.EDITION_2021.value),
                base_seed=int(_env(prefix, "SEED") or 0),
            )
        except ValueError as e:
            raise InvalidConfig(f"환경변수 설정 오류: {e}")


@dataclass
class TournamentConfig:
    """토너먼트 설정"""

    repeats: int = 3
    parallel: int = 1
    out_dir: Optional[str] = None
    match: MatchConfig = field(default_factory=MatchConfig)

    def __post_init__(self):
        if self.repeats < 1:
            raise InvalidConfig(f"repeats는 1 이상이어야 합니다: {self.repeats}", "repeats")
        if self.parallel < 1:
            raise InvalidConfig(
                f"parallel은 1 이상이어야 합니다: {self.parallel}", "parallel"
            )

    @classmethod
    def from_env(cls, prefix: str = ENV_PREFIX) -> "TournamentConfig":
        """환경변수에서 토너먼트 설정을 로드합니다."""
        return cls(
            repeats=int(_env(prefix, "REPEATS") or 3),
            parallel=int(_env(prefix, "PARALLEL") or 1),
            out_dir=_env(prefix, "OUT_DIR"),
            match=MatchConfig.from_env(prefix),
        )


@dataclass
class LoggingConfig:
    """로깅 설정"""

    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    json_output: bool = False

    @classmethod
    def from_env(cls, prefix: str = ENV_PREFIX) -> "LoggingConfig":
        """환경변수에서 로깅 설정을 로드합니다."""
        return cls(
            level=_env(prefix, "LOG_LEVEL") or "WARNING",
            format=_env(prefix, "LOG_FORMAT") or cls.format,
            json_output=(_env(prefix, "LOG_JSON") or "false").lower() == "true",
        )


def configure_logging(config: Optional[LoggingConfig] = None) -> None:
    """stdlib logging과 structlog를 함께 설정합니다. 출력은 모두 stderr로 보냅니다."""
    config = config or LoggingConfig.from_env()
    level = getattr(logging, config.level.upper(), logging.WARNING)

    logging.basicConfig(level=level, format=config.format, stream=sys.stderr)

    renderer = (
        structlog.processors.JSONRenderer()
        if config.json_output
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
