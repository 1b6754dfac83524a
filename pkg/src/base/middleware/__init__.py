"""
미들웨어 패키지

로깅, 에러 처리, 모니터링 미들웨어와 이를 묶는 관리자를 제공합니다.
"""

from .error_handling import ErrorHandlingMiddleware
from .logging import LoggingMiddleware
from .manager import MiddlewareManager
from .monitoring import MonitoringMiddleware

__all__ = [
    "ErrorHandlingMiddleware",
    "LoggingMiddleware",
    "MiddlewareManager",
    "MonitoringMiddleware",
]
