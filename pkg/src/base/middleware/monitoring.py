"""
모니터링 미들웨어

작업 횟수와 에러 횟수, 그리고 도메인 이벤트(몰수패, 봇 크래시 등) 카운터를 관리합니다.
"""

import asyncio
import functools
import threading
from datetime import datetime
from typing import Any, Callable, Dict


class MonitoringMiddleware:
    """모니터링 미들웨어"""

    def __init__(self, service_name: str):
        self.service_name = service_name
        self.operation_counts: Dict[str, int] = {}
        self.error_counts: Dict[str, int] = {}
        self.event_counts: Dict[str, int] = {}
        self._lock = threading.Lock()

    def monitor_operation(self, operation: str):
        """작업 모니터링 데코레이터"""

        def decorator(func: Callable):
            @functools.wraps(func)
            async def async_wrapper(*args, **kwargs):
                self._bump(self.operation_counts, operation)
                try:
                    return await func(*args, **kwargs)
                except Exception:
                    self._bump(self.error_counts, operation)
                    raise

            @functools.wraps(func)
            def sync_wrapper(*args, **kwargs):
                self._bump(self.operation_counts, operation)
                try:
                    return func(*args, **kwargs)
                except Exception:
                    self._bump(self.error_counts, operation)
                    raise

            if asyncio.iscoroutinefunction(func):
                return async_wrapper
            return sync_wrapper

        return decorator

    def record_event(self, event: str) -> None:
        """도메인 이벤트 카운트 증가"""
        self._bump(self.event_counts, event)

    def _bump(self, counter: Dict[str, int], key: str) -> None:
        with self._lock:
            counter[key] = counter.get(key, 0) + 1

    def get_monitoring_stats(self) -> Dict[str, Any]:
        """모니터링 통계 반환"""
        total_operations = sum(self.operation_counts.values())
        total_errors = sum(self.error_counts.values())

        return {
            "service_name": self.service_name,
            "total_operations": total_operations,
            "total_errors": total_errors,
            "error_rate": (
                (total_errors / total_operations * 100) if total_operations > 0 else 0
            ),
            "operation_breakdown": self.operation_counts.copy(),
            "error_breakdown": self.error_counts.copy(),
            "events": self.event_counts.copy(),
            "timestamp": datetime.now().isoformat(),
        }
