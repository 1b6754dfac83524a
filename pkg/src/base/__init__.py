"""
공통 베이스 패키지

설정, 예외, 미들웨어, 유틸리티를 모든 모듈에 제공합니다.
"""

from .config import (
    ClockMode,
    LoggingConfig,
    MatchConfig,
    Ruleset,
    TournamentConfig,
    configure_logging,
    parse_board,
)
from .exceptions import (
    BoardFull,
    BotPanic,
    BudgetExhausted,
    DecisionTimeout,
    DuplicateParticipant,
    IllegalState,
    InvalidConfig,
    InvariantViolation,
    ParseError,
    SnakesError,
    UnknownKind,
    VersionMismatch,
)
from .middleware import (
    ErrorHandlingMiddleware,
    LoggingMiddleware,
    MiddlewareManager,
    MonitoringMiddleware,
)
from .utils import derive_seed, first_duplicate, format_duration

__all__ = [
    # 설정
    "ClockMode",
    "Ruleset",
    "MatchConfig",
    "TournamentConfig",
    "LoggingConfig",
    "configure_logging",
    "parse_board",
    # 예외
    "SnakesError",
    "InvalidConfig",
    "IllegalState",
    "BoardFull",
    "BudgetExhausted",
    "UnknownKind",
    "DuplicateParticipant",
    "BotPanic",
    "DecisionTimeout",
    "InvariantViolation",
    "ParseError",
    "VersionMismatch",
    # 미들웨어
    "MiddlewareManager",
    "LoggingMiddleware",
    "ErrorHandlingMiddleware",
    "MonitoringMiddleware",
    # 유틸리티
    "derive_seed",
    "format_duration",
    "first_duplicate",
]
