"""텍스트 보드 덤프 (`--trace`용)"""

from .models import BLUE, WHITE, GameState

_MARKS = {WHITE: ("W", "w"), BLUE: ("B", "b")}


def render_board(state: GameState) -> str:
    """W/B는 머리, w/b는 몸통, @는 사과, .은 빈 칸"""
    grid = [["."] * state.width for _ in range(state.height)]
    apple = state.apple.position
    if apple is not None:
        grid[apple.y][apple.x] = "@"
    for index, snake in enumerate(state.snakes):
        head_mark, body_mark = _MARKS[index]
        for i, cell in enumerate(snake.body):
            if state.in_bounds(cell):
                grid[cell.y][cell.x] = head_mark if i == 0 else body_mark

    header = (
        f"tick={state.tick} clock={state.clock} "
        f"scores={state.scores[WHITE]}-{state.scores[BLUE]}"
    )
    if apple is not None:
        header += f" apple=({apple.x},{apple.y}) age={state.apple.age}"
    return "\n".join([header] + ["".join(row) for row in grid])
