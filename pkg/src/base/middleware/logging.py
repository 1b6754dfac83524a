"""
로깅 미들웨어

매치/토너먼트/검증 작업의 로깅과 소요시간 메트릭 수집을 담당합니다.
"""

import asyncio
import functools
import time
from dataclasses import dataclass
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

import structlog


@dataclass
class PerformanceMetrics:
    """성능 메트릭"""

    operation: str
    start_time: float
    duration: float
    success: bool
    error_message: Optional[str] = None


class LoggingMiddleware:
    """로깅 미들웨어"""

    def __init__(self, service_name: str):
        self.service_name = service_name
        self.logger = structlog.get_logger(f"snakes.{service_name}")
        self.metrics: List[PerformanceMetrics] = []

    def log_operation(self, operation: str):
        """작업 로깅 데코레이터"""

        def decorator(func: Callable):
            @functools.wraps(func)
            async def async_wrapper(*args, **kwargs):
                start_time = time.time()
                self.logger.debug(f"작업 시작: {operation}")
                try:
                    result = await func(*args, **kwargs)
                except Exception as e:
                    self._record_failure(operation, start_time, e)
                    raise
                self._record_success(operation, start_time)
                return result

            @functools.wraps(func)
            def sync_wrapper(*args, **kwargs):
                start_time = time.time()
                self.logger.debug(f"작업 시작: {operation}")
                try:
                    result = func(*args, **kwargs)
                except Exception as e:
                    self._record_failure(operation, start_time, e)
                    raise
                self._record_success(operation, start_time)
                return result

            if asyncio.iscoroutinefunction(func):
                return async_wrapper
            return sync_wrapper

        return decorator

    def _record_success(self, operation: str, start_time: float) -> None:
        duration = time.time() - start_time
        self.logger.debug(
            f"작업 완료: {operation} (소요시간: {duration:.3f}초)", duration=duration
        )
        self.metrics.append(
            PerformanceMetrics(operation, start_time, duration, success=True)
        )

    def _record_failure(
        self, operation: str, start_time: float, error: Exception
    ) -> None:
        duration = time.time() - start_time
        self.logger.error(
            f"작업 실패: {operation} (소요시간: {duration:.3f}초) - {error}",
            duration=duration,
            error=str(error),
        )
        self.metrics.append(
            PerformanceMetrics(
                operation, start_time, duration, success=False, error_message=str(error)
            )
        )

    def get_metrics_summary(self) -> Dict[str, Any]:
        """메트릭 요약 반환"""
        if not self.metrics:
            return {"service_name": self.service_name, "total_operations": 0}

        total = len(self.metrics)
        successful = len([m for m in self.metrics if m.success])
        durations = [m.duration for m in self.metrics]

        return {
            "service_name": self.service_name,
            "total_operations": total,
            "successful_operations": successful,
            "failed_operations": total - successful,
            "performance": {
                "average_duration": round(sum(durations) / total, 3),
                "max_duration": round(max(durations), 3),
                "min_duration": round(min(durations), 3),
            },
            "recent_operations": [
                {
                    "operation": m.operation,
                    "duration": round(m.duration, 3),
                    "success": m.success,
                    "timestamp": datetime.fromtimestamp(m.start_time).isoformat(),
                }
                for m in self.metrics[-10:]  # 최근 10개
            ],
        }
