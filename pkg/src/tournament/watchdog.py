"""
결정 시간 감시자

wall 모드에서 봇의 decide를 결정마다 새로 띄운 작업 스레드에서 실행하고 예산이
지나면 기다리지 않고 시간 초과로 처리합니다. 늦게 도착한 결과는 버려집니다.

예산 시계는 작업 스레드가 시작된 순간부터 잽니다. 다른 결정이 끝나기를 기다리는
시간은 예산에 포함되지 않습니다.
"""

import asyncio
import threading
import time
from typing import Any, Callable, Optional, Tuple

import structlog

from ..base.exceptions import DecisionTimeout

logger = structlog.get_logger(__name__)


def _resolve(
    future: asyncio.Future, value: Any = None, error: Optional[BaseException] = None
) -> None:
    if future.done():
        return
    if error is not None:
        future.set_exception(error)
    else:
        future.set_result(value)


class DecisionWatchdog:
    """타임아웃 관리자"""

    def __init__(self, default_timeout_ms: float = 1_000.0):
        self.default_timeout_ms = default_timeout_ms
        self.timeout_count = 0

    def _start_worker(
        self, participant: str, func: Callable[..., Any], args: Tuple[Any, ...]
    ) -> Tuple[asyncio.Future, asyncio.Future]:
        """(시작 시각, (결과, 경과 ms)) 두 future를 반환합니다."""
        loop = asyncio.get_running_loop()
        started = loop.create_future()
        finished = loop.create_future()

        def post(future: asyncio.Future, value: Any = None, error: Any = None) -> None:
            try:
                loop.call_soon_threadsafe(_resolve, future, value, error)
            except RuntimeError:
                # 이벤트 루프가 이미 닫힌 뒤 끝난 스레드
                pass

        def worker() -> None:
            begin = time.monotonic()
            post(started, begin)
            try:
                value = func(*args)
            except Exception as e:
                post(finished, error=e)
            else:
                post(finished, (value, (time.monotonic() - begin) * 1000.0))

        threading.Thread(target=worker, name=f"decide-{participant}", daemon=True).start()
        return started, finished

    async def run_with_timeout(
        self,
        participant: str,
        func: Callable[..., Any],
        *args: Any,
        timeout_ms: float | None = None,
    ) -> Tuple[Any, float]:
        """func(*args)를 전용 스레드에서 실행하고 (결과, 경과 ms)를 반환합니다."""
        timeout_ms = timeout_ms or self.default_timeout_ms
        started, finished = self._start_worker(participant, func, args)
        begin = await started
        remaining = timeout_ms / 1000.0 - (time.monotonic() - begin)
        try:
            return await asyncio.wait_for(finished, timeout=max(remaining, 0.0))
        except asyncio.TimeoutError:
            self.timeout_count += 1
            logger.warning("결정 시간 초과", participant=participant, budget_ms=timeout_ms)
            raise DecisionTimeout(participant, timeout_ms)

    def get_timeout_count(self) -> int:
        return self.timeout_count

    def reset_timeout_count(self) -> None:
        self.timeout_count = 0
