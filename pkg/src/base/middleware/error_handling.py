"""
에러 처리 미들웨어

에러 발생 시 일관된 분류와 로깅을 담당합니다. 예외는 항상 다시 발생시킵니다.
"""

import asyncio
import functools
from datetime import datetime
from typing import Any, Callable, Dict, List

import structlog

from ..exceptions import InvalidConfig, SnakesError


class ErrorHandlingMiddleware:
    """에러 처리 미들웨어"""

    def __init__(self, service_name: str):
        self.service_name = service_name
        self.logger = structlog.get_logger(f"snakes.error.{service_name}")
        self.error_history: List[Dict[str, Any]] = []

    def handle_errors(self, operation: str):
        """에러 처리 데코레이터"""

        def decorator(func: Callable):
            @functools.wraps(func)
            async def async_wrapper(*args, **kwargs):
                try:
                    return await func(*args, **kwargs)
                except Exception as e:
                    self._handle_error(operation, e)
                    raise

            @functools.wraps(func)
            def sync_wrapper(*args, **kwargs):
                try:
                    return func(*args, **kwargs)
                except Exception as e:
                    self._handle_error(operation, e)
                    raise

            if asyncio.iscoroutinefunction(func):
                return async_wrapper
            return sync_wrapper

        return decorator

    def _handle_error(self, operation: str, error: Exception) -> None:
        """에러 컨텍스트 기록 및 타입별 로깅"""
        error_context = {
            "operation": operation,
            "service": self.service_name,
            "error_type": type(error).__name__,
            "error_message": str(error),
            "timestamp": datetime.now().isoformat(),
        }
        if isinstance(error, SnakesError):
            error_context["error_code"] = error.error_code
        self.error_history.append(error_context)

        # 에러 타입별 처리
        if isinstance(error, (InvalidConfig, ValueError, TypeError)):
            self.logger.warning(f"입력값 검증 실패: {operation}", **error_context)
        elif isinstance(error, SnakesError):
            self.logger.error(f"도메인 에러: {operation}", **error_context)
        else:
            self.logger.critical(f"예상치 못한 오류: {operation}", **error_context)

    def get_error_summary(self) -> Dict[str, Any]:
        """에러 요약 정보 반환"""
        error_types: Dict[str, int] = {}
        for error in self.error_history:
            error_type = error["error_type"]
            error_types[error_type] = error_types.get(error_type, 0) + 1
        return {"total_errors": len(self.error_history), "error_types": error_types}
