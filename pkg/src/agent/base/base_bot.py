"""
봇 기본 클래스

모든 봇이 상속받는 기본 클래스와 봇에게 전달되는 읽기 전용 뷰입니다.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, ClassVar, Dict, Optional

import structlog

from ...base.config import ClockMode
from ...engine.models import Direction, GameState, Snake
from ...search.budget import SearchBudget

# wall 모드에서 탐색에 쓰는 예산 비율 (나머지는 감시자 여유분)
WALL_BUDGET_FRACTION = 0.8


@dataclass(frozen=True)
class BotView:
    """봇이 보는 스냅샷: 전체 상태, 자기 뱀 인덱스, 남은 결정 예산"""

    state: GameState
    me: int
    budget: SearchBudget

    @property
    def snake(self) -> Snake:
        return self.state.snakes[self.me]

    @property
    def opponent(self) -> Snake:
        return self.state.snakes[1 - self.me]

    def search_budget(self, cap: Optional[int] = None) -> SearchBudget:
        """탐색 루틴에 넘길 예산. wall 모드는 여유분을 남기고, cap이 있으면 노드 수를 제한합니다."""
        if self.budget.mode is ClockMode.WALL:
            return SearchBudget.millis(max(1, int(self.budget.limit * WALL_BUDGET_FRACTION)))
        limit = self.budget.limit if cap is None else min(cap, self.budget.limit)
        return SearchBudget.nodes(limit)


class BaseBot(ABC):
    """봇 기본 클래스

    decide는 전역 함수(total)여야 합니다. 어떤 상태에서도 네 방향 중 하나를 반환합니다.
    """

    kind: ClassVar[str] = "bot"

    def __init__(self, name: Optional[str] = None, seed: int = 0):
        self.name = name or self.kind
        self.seed = seed
        # 마지막 decide에서 소비한 노드(또는 반복) 수
        self.nodes_used = 0
        self.logger = structlog.get_logger(f"bot.{self.name}")

    @abstractmethod
    def decide(self, view: BotView) -> Direction:
        """방향 결정 (하위 클래스에서 구현)"""

    def reset(self, seed: int) -> None:
        """매치 시작 시 호출됩니다. 내부 상태와 난수 시드를 초기화합니다."""
        self.seed = seed
        self.nodes_used = 0

    def describe(self) -> Dict[str, Any]:
        return {"name": self.name, "kind": self.kind, "seed": self.seed}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
