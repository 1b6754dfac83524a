"""
격자 탐색 기본 연산: BFS 거리장, 도달 가능 면적, Voronoi 영역, A* 경로

칸은 평탄화된 인덱스(y * width + x)로 다루고, 결과는 numpy 배열로 반환합니다.
"""

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Collection, Iterable, List, Optional, Tuple, Union

import numpy as np

from ..engine.models import Cell, GameState

UNREACHABLE = -1

# 차단 칸: 집합(컬렉션) 또는 판정 함수. None이면 두 뱀의 현재 몸통.
Blocked = Union[Collection[Cell], Callable[[Cell], bool], None]


@lru_cache(maxsize=32)
def _neighbor_table(width: int, height: int) -> Tuple[Tuple[int, ...], ...]:
    """인덱스별 이웃 인덱스 (N, E, S, W 순서)"""
    table = []
    for y in range(height):
        for x in range(width):
            adj = []
            if y > 0:
                adj.append((y - 1) * width + x)
            if x < width - 1:
                adj.append(y * width + x + 1)
            if y < height - 1:
                adj.append((y + 1) * width + x)
            if x > 0:
                adj.append(y * width + x - 1)
            table.append(tuple(adj))
    return tuple(table)


class DistanceField:
    """소스 집합으로부터의 칸별 최단 거리. 도달 불가는 UNREACHABLE(-1)."""

    def __init__(self, distances: np.ndarray):
        self.array = distances

    @property
    def width(self) -> int:
        return self.array.shape[1]

    @property
    def height(self) -> int:
        return self.array.shape[0]

    def distance(self, cell: Cell) -> Optional[int]:
        if not (0 <= cell.x < self.width and 0 <= cell.y < self.height):
            return None
        value = int(self.array[cell.y, cell.x])
        return None if value == UNREACHABLE else value

    def __getitem__(self, cell: Cell) -> Optional[int]:
        return self.distance(cell)

    def reachable(self) -> np.ndarray:
        return self.array != UNREACHABLE

    def reachable_count(self) -> int:
        return int(np.count_nonzero(self.reachable()))


def _blocked_mask(state: GameState, blocked: Blocked) -> List[bool]:
    width, height = state.width, state.height
    mask = [False] * (width * height)
    if blocked is None:
        blocked = state.occupied
    if callable(blocked):
        for y in range(height):
            for x in range(width):
                if blocked(Cell(x, y)):
                    mask[y * width + x] = True
        return mask
    for cell in blocked:
        if 0 <= cell.x < width and 0 <= cell.y < height:
            mask[cell.y * width + cell.x] = True
    return mask


def _bfs(
    width: int, height: int, sources: Iterable[Cell], mask: List[bool]
) -> List[int]:
    neighbors = _neighbor_table(width, height)
    dist = [UNREACHABLE] * (width * height)
    queue = deque()
    for cell in sources:
        if not (0 <= cell.x < width and 0 <= cell.y < height):
            continue
        index = cell.y * width + cell.x
        if dist[index] == UNREACHABLE:
            dist[index] = 0
            queue.append(index)
    while queue:
        current = queue.popleft()
        next_distance = dist[current] + 1
        for n in neighbors[current]:
            if dist[n] == UNREACHABLE and not mask[n]:
                dist[n] = next_distance
                queue.append(n)
    return dist


def _as_field(dist: List[int], width: int, height: int) -> DistanceField:
    return DistanceField(np.asarray(dist, dtype=np.int32).reshape(height, width))


def bfs_distances(
    state: GameState, sources: Iterable[Cell], blocked: Blocked = None
) -> DistanceField:
    """4-이웃 최단 거리. 소스 칸은 차단 여부와 무관하게 거리 0입니다."""
    mask = _blocked_mask(state, blocked)
    dist = _bfs(state.width, state.height, sources, mask)
    return _as_field(dist, state.width, state.height)


def flood_fill_count(state: GameState, start: Cell, blocked: Blocked = None) -> int:
    """start에서 도달 가능한 칸 수 (start 자신 제외)"""
    field = bfs_distances(state, [start], blocked)
    return field.reachable_count() - 1


@dataclass(frozen=True)
class Ownership:
    """빈 칸의 소유 분할: 내 머리가 더 가까운 칸, 상대가 더 가까운 칸, 나머지"""

    owned_self: int
    owned_opponent: int
    contested: int

    @property
    def total(self) -> int:
        return self.owned_self + self.owned_opponent + self.contested

    @property
    def margin(self) -> int:
        return self.owned_self - self.owned_opponent


def head_fields(state: GameState) -> Tuple[DistanceField, DistanceField]:
    """두 머리에서 시작하는 거리장 (두 몸통 모두 차단)"""
    width, height = state.width, state.height
    mask = _blocked_mask(state, None)
    fields = tuple(
        _as_field(_bfs(width, height, [state.head(i)], mask), width, height)
        for i in (0, 1)
    )
    return fields[0], fields[1]


def ownership_from_fields(
    state: GameState, mine: DistanceField, theirs: DistanceField
) -> Ownership:
    empty = np.ones((state.height, state.width), dtype=bool)
    for cell in state.occupied:
        empty[cell.y, cell.x] = False
    d_self, d_opp = mine.array, theirs.array
    self_reach = d_self != UNREACHABLE
    opp_reach = d_opp != UNREACHABLE
    self_closer = self_reach & (~opp_reach | (d_self < d_opp))
    opp_closer = opp_reach & (~self_reach | (d_opp < d_self))
    owned_self = int(np.count_nonzero(empty & self_closer))
    owned_opp = int(np.count_nonzero(empty & opp_closer))
    contested = int(np.count_nonzero(empty)) - owned_self - owned_opp
    return Ownership(owned_self, owned_opp, contested)


def voronoi_ownership(state: GameState, perspective: int) -> Ownership:
    """빈 칸을 더 가까운 머리에 배정합니다. 동거리나 양쪽 모두 도달 불가는 contested."""
    fields = head_fields(state)
    return ownership_from_fields(state, fields[perspective], fields[1 - perspective])


def astar_path(
    state: GameState, start: Cell, goal: Cell, blocked: Blocked = None
) -> Optional[Tuple[Cell, ...]]:
    """맨해튼 휴리스틱 A* 최단 경로 (start 제외, goal 포함). 도달 불가면 None.

    blocked를 생략하면 두 뱀의 현재 몸통을 피합니다 (start 자신은 예외).
    """
    if not (state.in_bounds(start) and state.in_bounds(goal)):
        return None
    if start == goal:
        return ()
    width = state.width
    mask = _blocked_mask(state, blocked)
    goal_index = goal.y * width + goal.x
    if mask[goal_index]:
        return None

    neighbors = _neighbor_table(width, state.height)
    start_index = start.y * width + start.x

    def heuristic(index: int) -> int:
        return abs(index % width - goal.x) + abs(index // width - goal.y)

    counter = itertools.count()
    frontier = [(heuristic(start_index), 0, next(counter), start_index)]
    best = {start_index: 0}
    parent = {start_index: -1}
    while frontier:
        _, cost, _, current = heapq.heappop(frontier)
        if current == goal_index:
            break
        if cost > best[current]:
            continue
        for n in neighbors[current]:
            if mask[n]:
                continue
            new_cost = cost + 1
            if new_cost < best.get(n, new_cost + 1):
                best[n] = new_cost
                parent[n] = current
                heapq.heappush(
                    frontier, (new_cost + heuristic(n), new_cost, next(counter), n)
                )
    else:
        return None

    path = []
    index = goal_index
    while index != start_index:
        path.append(Cell(index % width, index // width))
        index = parent[index]
    return tuple(reversed(path))
