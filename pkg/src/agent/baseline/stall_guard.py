"""
사과 포위(stalling) 래퍼

점수가 앞서 있으면 사과 옆이나 주변을 도는 닫힌 궤도를 따라 움직여 상대가 사과를
먹지 못하게 하고, 시간 제한까지 점수를 지킵니다. 궤도를 찾지 못하면 감싼 봇에게
결정을 위임합니다.

궤도 후보는 사과를 둘러싸거나 사과와 인접한 직사각형의 둘레입니다. 사과 칸은
둘레에 포함되지 않고, 머리는 둘레 위에 있어야 하며, 둘레 길이는 max(4, 몸 길이)
이상이어야 합니다. 상대가 제자리에 있다고 가정하고 한 바퀴를 시뮬레이션해서
매 걸음이 생존 가능한 궤도만 사용합니다.
"""

from typing import Iterator, List, Optional, Tuple

from ...engine.models import DIRECTIONS, Cell, Direction, GameState
from ...engine.rules import advance_solo, legal_survival_moves
from ..base.base_bot import BaseBot, BotView

# 한 번의 결정에서 시뮬레이션할 최대 후보 궤도 수
MAX_ORBIT_CANDIDATES = 16

Orbit = Tuple[Cell, ...]


def rectangle_perimeter(x0: int, y0: int, x1: int, y1: int) -> Orbit:
    """직사각형 둘레를 시계 방향 순서로 반환합니다 (x0 < x1, y0 < y1)."""
    cells: List[Cell] = [Cell(x, y0) for x in range(x0, x1 + 1)]
    cells += [Cell(x1, y) for y in range(y0 + 1, y1 + 1)]
    cells += [Cell(x, y1) for x in range(x1 - 1, x0 - 1, -1)]
    cells += [Cell(x0, y) for y in range(y1 - 1, y0, -1)]
    return tuple(cells)


def _guards_apple(apple: Cell, x0: int, y0: int, x1: int, y1: int) -> bool:
    inside_x = x0 <= apple.x <= x1
    inside_y = y0 <= apple.y <= y1
    if inside_x and inside_y:
        # 둘레 위면 제외, 내부면 포위
        return x0 < apple.x < x1 and y0 < apple.y < y1
    if inside_y and apple.x in (x0 - 1, x1 + 1):
        return True
    return inside_x and apple.y in (y0 - 1, y1 + 1)


def orbit_guards(orbit: Orbit, apple: Cell) -> bool:
    """궤도(직사각형 둘레)가 사과를 둘러싸거나 사과와 인접해 있는지 확인합니다."""
    xs = [cell.x for cell in orbit]
    ys = [cell.y for cell in orbit]
    return _guards_apple(apple, min(xs), min(ys), max(xs), max(ys))


def candidate_orbits(state: GameState, me: int) -> Iterator[Orbit]:
    """둘레가 짧은 순서로 후보 궤도를 생성합니다."""
    apple = state.apple.position
    if apple is None:
        return
    head = state.head(me)
    min_length = max(4, len(state.snakes[me]))
    found = []
    for x0 in range(0, min(head.x, apple.x + 1) + 1):
        for x1 in range(max(head.x, apple.x - 1, x0 + 1), state.width):
            for y0 in range(0, min(head.y, apple.y + 1) + 1):
                for y1 in range(max(head.y, apple.y - 1, y0 + 1), state.height):
                    on_perimeter = head.x in (x0, x1) or head.y in (y0, y1)
                    if not on_perimeter:
                        continue
                    perimeter = 2 * (x1 - x0 + y1 - y0)
                    if perimeter < min_length:
                        continue
                    if not _guards_apple(apple, x0, y0, x1, y1):
                        continue
                    found.append((perimeter, y0, x0, y1, x1))
    found.sort()
    for _, y0, x0, y1, x1 in found:
        yield rectangle_perimeter(x0, y0, x1, y1)


def lap_is_survivable(state: GameState, me: int, orbit: Orbit, forward: bool) -> bool:
    """상대가 제자리에 있다고 가정하고 궤도를 한 바퀴 돌 수 있는지 확인합니다."""
    size = len(orbit)
    index = orbit.index(state.head(me))
    offset = 1 if forward else -1
    current = state
    for _ in range(size):
        index = (index + offset) % size
        direction = current.head(me).direction_to(orbit[index])
        if direction is None or direction not in legal_survival_moves(current, me):
            return False
        current = advance_solo(current, me, direction)
    return True


def _orbit_directions(head: Cell, orbit: Orbit) -> List[Tuple[Direction, bool]]:
    index = orbit.index(head)
    nexts = (
        (head.direction_to(orbit[(index + 1) % len(orbit)]), True),
        (head.direction_to(orbit[(index - 1) % len(orbit)]), False),
    )
    return sorted(nexts, key=lambda item: DIRECTIONS.index(item[0]))


class StallGuard(BaseBot):
    """점수가 앞서면 사과 주변을 돌고, 아니면 감싼 봇에게 위임합니다."""

    kind = "stall"

    def __init__(self, inner: BaseBot):
        super().__init__(inner.name, inner.seed)
        self.inner = inner
        self.orbit: Optional[Orbit] = None

    def reset(self, seed: int) -> None:
        super().reset(seed)
        self.inner.reset(seed)
        self.orbit = None

    def describe(self):
        info = self.inner.describe()
        info["stall"] = True
        return info

    def decide(self, view: BotView) -> Direction:
        move = self._stall_move(view.state, view.me)
        if move is not None:
            self.nodes_used = 1
            return move
        self.orbit = None
        move = self.inner.decide(view)
        self.nodes_used = self.inner.nodes_used
        return move

    def _stall_move(self, state: GameState, me: int) -> Optional[Direction]:
        if state.scores[me] <= state.scores[1 - me] or not state.apple.present:
            return None
        head = state.head(me)

        candidates: List[Orbit] = []
        if self.orbit is not None and head in self.orbit:
            # 사과가 옮겨졌으면 기존 궤도는 더 이상 유효하지 않음
            if orbit_guards(self.orbit, state.apple.position):
                candidates.append(self.orbit)
        for orbit in candidate_orbits(state, me):
            if len(candidates) >= MAX_ORBIT_CANDIDATES:
                break
            candidates.append(orbit)

        for orbit in candidates:
            for direction, forward in _orbit_directions(head, orbit):
                if lap_is_survivable(state, me, orbit, forward):
                    if orbit != self.orbit:
                        self.logger.debug("궤도 선택", size=len(orbit), head=tuple(head))
                    self.orbit = orbit
                    return direction
        return None
