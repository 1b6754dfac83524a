"""
탐색 예산

wall 모드는 밀리초 마감, logical 모드는 노드(또는 MCTS 반복) 수 제한입니다.
"""

import time
from dataclasses import dataclass
from typing import Optional, Union

from ..base.config import ClockMode
from ..base.exceptions import BudgetExhausted

# wall 모드에서 시계를 확인하는 노드 간격
_WALL_CHECK_INTERVAL = 32


@dataclass(frozen=True)
class SearchBudget:
    """탐색 예산: mode에 따라 limit은 밀리초 또는 노드 수"""

    mode: ClockMode
    limit: int

    @classmethod
    def nodes(cls, limit: int) -> "SearchBudget":
        return cls(ClockMode.LOGICAL, limit)

    @classmethod
    def millis(cls, limit: int) -> "SearchBudget":
        return cls(ClockMode.WALL, limit)

    def tracker(self) -> "BudgetTracker":
        return BudgetTracker(self)


@dataclass
class SearchStats:
    """방문 노드 수, 지평선(깊이 0) 잎 노드 수, 반복 심화가 완료한 깊이"""

    nodes: int = 0
    horizon_leaves: int = 0
    depth: int = 0
    exhausted: bool = False


class BudgetTracker:
    """예산 소비를 추적하는 작업 공간. 인스턴스마다 독립적입니다."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.used = 0
        self._deadline: Optional[float] = None
        if budget.mode is ClockMode.WALL:
            self._deadline = time.monotonic() + budget.limit / 1000.0

    def charge(self, amount: int = 1) -> None:
        """노드를 소비합니다. 예산을 넘으면 BudgetExhausted."""
        self.used += amount
        if self._deadline is None:
            if self.used > self.budget.limit:
                self.used = self.budget.limit
                raise BudgetExhausted("노드 예산 소진", self.used)
        elif self.used % _WALL_CHECK_INTERVAL == 0 and self.expired():
            raise BudgetExhausted("시간 예산 소진", self.used)

    def expired(self) -> bool:
        if self._deadline is None:
            return self.used >= self.budget.limit
        return time.monotonic() >= self._deadline

    @property
    def remaining(self) -> int:
        if self._deadline is None:
            return max(0, self.budget.limit - self.used)
        return max(0, int((self._deadline - time.monotonic()) * 1000))


def as_tracker(budget: Union[SearchBudget, BudgetTracker]) -> BudgetTracker:
    if isinstance(budget, BudgetTracker):
        return budget
    return budget.tracker()
