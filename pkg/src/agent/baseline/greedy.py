"""
생존 우선 사과 추적 봇

A* 경로로 사과를 쫓되, 경로 끝에서 몸 길이만큼의 공간이 남지 않거나 첫 이동 후
생존 가능한 이동이 없으면 포기하고 도달 가능 면적이 가장 큰 방향을 고릅니다.
"""

from typing import Optional, Tuple

from ...engine.models import Direction, GameState
from ...engine.rules import advance_solo, legal_survival_moves, ordered_survival_moves
from ...search.grid import astar_path, flood_fill_count
from ..base.base_bot import BaseBot, BotView


class GreedyBot(BaseBot):
    kind = "greedy"

    def decide(self, view: BotView) -> Direction:
        self.nodes_used = 0
        state, me = view.state, view.me
        legal = ordered_survival_moves(state, me)
        if not legal:
            return view.snake.heading

        chase = self._chase_move(state, me, legal)
        if chase is not None:
            return chase
        return self._max_area_move(state, me, legal)

    def _chase_move(
        self, state: GameState, me: int, legal: Tuple[Direction, ...]
    ) -> Optional[Direction]:
        apple = state.apple.position
        if apple is None:
            return None
        head = state.head(me)
        path = astar_path(state, head, apple)
        self.nodes_used += 1
        if not path:
            return None
        first = head.direction_to(path[0])
        if first not in legal:
            return None
        if not legal_survival_moves(advance_solo(state, me, first), me):
            return None

        # 경로를 끝까지 따라간 뒤에도 몸 길이 이상의 공간이 남는지 확인
        walked = state
        for cell in path:
            direction = walked.head(me).direction_to(cell)
            walked = advance_solo(walked, me, direction)
        area = flood_fill_count(walked, walked.head(me))
        self.nodes_used += 1
        if area < len(walked.snakes[me]):
            self.logger.debug("사과 추적 포기", area=area, length=len(walked.snakes[me]))
            return None
        return first

    def _max_area_move(
        self, state: GameState, me: int, legal: Tuple[Direction, ...]
    ) -> Direction:
        best, best_area = legal[0], -1
        for direction in legal:
            moved = advance_solo(state, me, direction)
            area = flood_fill_count(moved, moved.head(me))
            self.nodes_used += 1
            if area > best_area:
                best, best_area = direction, area
        return best
