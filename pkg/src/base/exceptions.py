"""
Snakes 공통 예외 클래스

엔진, 탐색, 에이전트, 토너먼트, 리플레이 모듈에서 사용하는 표준화된 예외를 제공합니다.
"""

from typing import Any, Dict, Optional


class SnakesError(Exception):
    """Snakes 공통 예외"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message

    def to_dict(self) -> Dict[str, Any]:
        """예외를 딕셔너리로 변환"""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details,
        }


class InvalidConfig(SnakesError):
    """설정 관련 에러 (보드 크기, 초기 길이, 제한 시간 등)"""

    def __init__(self, message: str, config_key: Optional[str] = None):
        super().__init__(message, "INVALID_CONFIG", {"config_key": config_key})
        self.config_key = config_key


class IllegalState(SnakesError):
    """연산의 사전조건을 만족하지 않는 상태"""

    def __init__(self, message: str):
        super().__init__(message, "ILLEGAL_STATE")


class BoardFull(SnakesError):
    """사과를 놓을 빈 칸이 없음"""

    def __init__(self, message: str = "빈 칸이 없습니다"):
        super().__init__(message, "BOARD_FULL")


class BudgetExhausted(SnakesError):
    """탐색 예산(시간 또는 노드 수) 소진"""

    def __init__(self, message: str, nodes: Optional[int] = None):
        super().__init__(message, "BUDGET_EXHAUSTED", {"nodes": nodes})
        self.nodes = nodes


class UnknownKind(SnakesError):
    """등록되지 않은 에이전트 종류"""

    def __init__(self, kind: str, known: Optional[list] = None):
        super().__init__(
            f"알 수 없는 에이전트 종류: {kind}",
            "UNKNOWN_KIND",
            {"kind": kind, "known": list(known or [])},
        )
        self.kind = kind
        self.known = list(known or [])


class DuplicateParticipant(SnakesError):
    """토너먼트 참가자 식별자 중복"""

    def __init__(self, participant: str):
        super().__init__(
            f"중복된 참가자: {participant}",
            "DUPLICATE_PARTICIPANT",
            {"participant": participant},
        )
        self.participant = participant


class BotPanic(SnakesError):
    """봇의 decide 호출 중 예외 발생"""

    def __init__(self, participant: str, cause: Optional[BaseException] = None):
        super().__init__(
            f"봇 실행 실패: {participant} ({type(cause).__name__ if cause else 'unknown'})",
            "BOT_PANIC",
            {"participant": participant, "cause": repr(cause)},
        )
        self.participant = participant
        self.cause = cause


class DecisionTimeout(SnakesError):
    """결정 예산 초과 (감시자가 늦은 결정을 포기함)"""

    def __init__(self, participant: str, budget_ms: float):
        super().__init__(
            f"결정 시간 초과: {participant} ({budget_ms:.0f}ms)",
            "DECISION_TIMEOUT",
            {"participant": participant, "budget_ms": budget_ms},
        )
        self.participant = participant
        self.budget_ms = budget_ms


class InvariantViolation(SnakesError):
    """리플레이 레코드 순서/구조 불변식 위반"""

    def __init__(self, message: str):
        super().__init__(message, "INVARIANT_VIOLATION")


class ParseError(SnakesError):
    """리플레이 파싱 에러 (첫 번째 문제 라인 번호 포함)"""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}", "PARSE_ERROR", {"line": line})
        self.line = line


class VersionMismatch(SnakesError):
    """지원하지 않는 리플레이 포맷 버전"""

    def __init__(self, found: str, expected: str):
        super().__init__(
            f"리플레이 버전 불일치: {found} (지원: {expected})",
            "VERSION_MISMATCH",
            {"found": found, "expected": expected},
        )
        self.found = found
        self.expected = expected
