"""
게임 규칙: 매치 생성, 동시 이동 전이, 사과 생성/만료, 생존 가능한 이동 계산

모든 함수는 부작용이 없는 순수 함수입니다 (상태 -> 새 상태).
"""

from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Set, Tuple

from ..base.config import MatchConfig
from ..base.exceptions import BoardFull, IllegalState, InvalidConfig
from . import rng
from .models import (
    ABSENT_APPLE,
    BLUE,
    DIRECTIONS,
    WHITE,
    AppleState,
    Cause,
    Cell,
    Direction,
    GameState,
    MatchOutcome,
    Result,
    Snake,
    StepOutcome,
)

# 한 뱀이 여러 이유로 동시에 지는 경우 보고할 원인의 우선순위
_CAUSE_PRIORITY = (
    Cause.OFF_BOARD,
    Cause.SELF_COLLISION,
    Cause.OPPONENT_COLLISION,
    Cause.HEAD_TO_HEAD,
)


def _start_column(width: int) -> int:
    return min(2, (width - 1) // 2 - 1)


def new_match(config: MatchConfig, seed: int) -> GameState:
    """점대칭으로 배치된 두 뱀과 사과 하나로 매치를 시작합니다.

    white는 왼쪽 열에 세로로 놓이고 동쪽을 향하며, blue는 보드 중심에 대해
    180도 회전한 위치에서 서쪽을 향합니다.
    """
    length = config.initial_length
    if config.width < 5 or config.height < 5:
        raise InvalidConfig(
            f"매치 시작에는 5x5 이상의 보드가 필요합니다: {config.width}x{config.height}",
            "board",
        )
    if length > config.height or 2 * length + 1 > config.width * config.height:
        raise InvalidConfig(
            f"{config.width}x{config.height} 보드에 길이 {length}의 뱀 두 마리를 놓을 수 없습니다",
            "initial_length",
        )

    x = _start_column(config.width)
    top = (config.height - length) // 2
    white_body = tuple(Cell(x, top + i) for i in range(length))
    blue_body = tuple(_rotate(c, config) for c in white_body)

    state = GameState(
        config=config,
        snakes=(
            Snake(white_body, Direction.EAST),
            Snake(blue_body, Direction.WEST),
        ),
        apple=ABSENT_APPLE,
        scores=(0, 0),
        clock=0,
        rng_state=rng.seed_state(seed),
    )
    return spawn_apple(state)


def _rotate(cell: Cell, config: MatchConfig) -> Cell:
    return Cell(config.width - 1 - cell.x, config.height - 1 - cell.y)


def compose_state(
    config: MatchConfig,
    white: Sequence[Tuple[int, int]],
    blue: Sequence[Tuple[int, int]],
    apple: Optional[Tuple[int, int]] = None,
    headings: Optional[Tuple[Direction, Direction]] = None,
    scores: Optional[Tuple[int, int]] = None,
    seed: int = 0,
    clock: int = 0,
    apple_age: int = 0,
) -> GameState:
    """임의의 배치로 상태를 구성합니다 (테스트 픽스처, 분석용).

    heading을 생략하면 목(두 번째 칸)에서 머리로 향하는 방향을 사용하고, 점수를
    생략하면 `길이 - initial_length`로 계산합니다.
    """
    bodies = (tuple(Cell(*c) for c in white), tuple(Cell(*c) for c in blue))
    snakes = []
    for index, body in enumerate(bodies):
        heading = headings[index] if headings else _infer_heading(body)
        snakes.append(Snake(body, heading))

    if scores is None:
        scores = tuple(max(0, len(b) - config.initial_length) for b in bodies)

    state = GameState(
        config=config,
        snakes=(snakes[WHITE], snakes[BLUE]),
        apple=AppleState(Cell(*apple), apple_age) if apple else ABSENT_APPLE,
        scores=scores,
        clock=clock,
        rng_state=rng.seed_state(seed),
        tick=clock if config.is_logical else 0,
    )
    _check_layout(state)
    return state


def _infer_heading(body: Tuple[Cell, ...]) -> Direction:
    if len(body) >= 2:
        direction = body[1].direction_to(body[0])
        if direction is not None:
            return direction
    return Direction.EAST


def _check_layout(state: GameState) -> None:
    seen: Set[Cell] = set()
    for snake in state.snakes:
        if not snake.body:
            raise InvalidConfig("뱀의 몸통이 비어 있습니다", "body")
        for prev, cell in zip(snake.body, snake.body[1:]):
            if prev.manhattan(cell) != 1:
                raise InvalidConfig(f"몸통이 연결되어 있지 않습니다: {prev} {cell}", "body")
        for cell in snake.body:
            if not state.in_bounds(cell) or cell in seen:
                raise InvalidConfig(f"잘못된 몸통 칸: {cell}", "body")
            seen.add(cell)
    apple = state.apple.position
    if apple is not None and (not state.in_bounds(apple) or apple in seen):
        raise InvalidConfig(f"잘못된 사과 위치: {apple}", "apple")


def free_cells(state: GameState) -> Tuple[Cell, ...]:
    """두 뱀이 차지하지 않은 칸 (행 우선 순서)"""
    occupied = state.occupied
    return tuple(
        cell
        for y in range(state.height)
        for x in range(state.width)
        if (cell := Cell(x, y)) not in occupied
    )


def spawn_apple(state: GameState) -> GameState:
    """빈 칸 중 하나에 균등 확률로 사과를 놓습니다 (state.rng_state 사용)."""
    if state.apple.present:
        raise IllegalState("사과가 이미 존재합니다")
    candidates = free_cells(state)
    if not candidates:
        raise BoardFull()
    index, next_rng = rng.randbelow(state.rng_state, len(candidates))
    return _replace(state, apple=AppleState(candidates[index], 0), rng_state=next_rng)


def _try_spawn(state: GameState) -> GameState:
    try:
        return spawn_apple(state)
    except BoardFull:
        # 사과 없이 진행하고 다음 step에서 재시도
        return state


def tick_apple(state: GameState, elapsed: int = 1) -> GameState:
    """사과 나이를 증가시키고, TTL에 도달하면 다른 빈 칸으로 재배치합니다."""
    if not state.is_running:
        raise IllegalState("종료된 매치입니다")
    apple = state.apple
    if not apple.present:
        return state
    age = apple.age + elapsed
    ttl = state.config.apple_ttl
    if ttl is not None and age >= ttl:
        return _try_spawn(_replace(state, apple=ABSENT_APPLE))
    return _replace(state, apple=AppleState(apple.position, age))


def _post_move_body(
    snake: Snake, new_head: Cell, grows: bool
) -> Tuple[Cell, ...]:
    if grows:
        return (new_head,) + snake.body
    return (new_head,) + snake.body[:-1]


def step(
    state: GameState,
    move_white: Direction,
    move_blue: Direction,
    elapsed: int = 1,
) -> StepOutcome:
    """두 뱀을 동시에 한 칸씩 이동시킵니다.

    순서: (0) 사과가 없으면 재생성 (1) 새 머리 계산 (2) 이동 후 몸통 계산
    (꼬리는 사과를 먹지 않는 한 비워짐) (3) 패배 판정 (4) 동시 패배는 무승부
    (5) 먹은 뱀 성장/득점 (6) 시계 진행 및 시간 제한 판정.
    """
    if not state.is_running:
        raise IllegalState("종료된 매치에는 step을 적용할 수 없습니다")
    if elapsed < 1:
        raise IllegalState(f"elapsed는 1 이상이어야 합니다: {elapsed}")

    if not state.apple.present:
        state = _try_spawn(state)

    moves = (move_white, move_blue)
    snakes = state.snakes
    apple = state.apple.position
    heads = (snakes[WHITE].head, snakes[BLUE].head)
    new_heads = (heads[WHITE].shift(moves[WHITE]), heads[BLUE].shift(moves[BLUE]))
    eats = (new_heads[WHITE] == apple, new_heads[BLUE] == apple)
    post = (
        _post_move_body(snakes[WHITE], new_heads[WHITE], eats[WHITE]),
        _post_move_body(snakes[BLUE], new_heads[BLUE], eats[BLUE]),
    )

    swap = new_heads[WHITE] == heads[BLUE] and new_heads[BLUE] == heads[WHITE]
    head_to_head = new_heads[WHITE] == new_heads[BLUE] or swap

    causes: Tuple[Set[Cause], Set[Cause]] = (set(), set())
    for i in (WHITE, BLUE):
        j = 1 - i
        head = new_heads[i]
        if not state.in_bounds(head):
            causes[i].add(Cause.OFF_BOARD)
            continue
        if head in post[i][1:]:
            causes[i].add(Cause.SELF_COLLISION)
        if not swap and head in post[j][1:]:
            causes[i].add(Cause.OPPONENT_COLLISION)

    if head_to_head:
        lengths = (len(snakes[WHITE]), len(snakes[BLUE]))
        if lengths[WHITE] >= lengths[BLUE]:
            causes[BLUE].add(Cause.HEAD_TO_HEAD)
        if lengths[BLUE] >= lengths[WHITE]:
            causes[WHITE].add(Cause.HEAD_TO_HEAD)

    losers = tuple(i for i in (WHITE, BLUE) if causes[i])

    new_snakes = []
    scores = list(state.scores)
    apple_state = state.apple
    for i in (WHITE, BLUE):
        if i in losers:
            new_snakes.append(Snake(snakes[i].body, snakes[i].heading, alive=False))
            continue
        new_snakes.append(Snake(post[i], moves[i]))
        if eats[i]:
            scores[i] += 1
            apple_state = ABSENT_APPLE

    clock = min(state.clock + elapsed, state.config.match_limit)
    next_state = _replace(
        state,
        snakes=(new_snakes[WHITE], new_snakes[BLUE]),
        apple=apple_state,
        scores=(scores[WHITE], scores[BLUE]),
        clock=clock,
        tick=state.tick + 1,
    )

    if losers:
        outcome = _collision_outcome(losers, causes, next_state.scores)
        return _finish(next_state, outcome)

    # 시계가 제한에서 잘린 경우 실제로 진행된 만큼만 사과 나이를 올림
    next_state = tick_apple(next_state, clock - state.clock)

    if next_state.clock >= next_state.config.match_limit:
        outcome = _time_limit_outcome(next_state.scores)
        return _finish(next_state, outcome)

    return StepOutcome(next_state)


def _primary_cause(causes: Set[Cause]) -> Cause:
    return next(c for c in _CAUSE_PRIORITY if c in causes)


def _collision_outcome(
    losers: Tuple[int, ...],
    causes: Tuple[Set[Cause], Set[Cause]],
    scores: Tuple[int, int],
) -> MatchOutcome:
    if len(losers) == 2:
        if causes[WHITE] == {Cause.HEAD_TO_HEAD} == causes[BLUE]:
            return MatchOutcome(Result.DRAW, Cause.HEAD_TO_HEAD, scores)
        return MatchOutcome(Result.DRAW, Cause.SIMULTANEOUS_LOSS, scores)
    loser = losers[0]
    return MatchOutcome(Result.win_for(1 - loser), _primary_cause(causes[loser]), scores)


def _time_limit_outcome(scores: Tuple[int, int]) -> MatchOutcome:
    if scores[WHITE] > scores[BLUE]:
        result = Result.WHITE_WINS
    elif scores[BLUE] > scores[WHITE]:
        result = Result.BLUE_WINS
    else:
        result = Result.DRAW
    return MatchOutcome(result, Cause.TIME_LIMIT, scores)


def _finish(state: GameState, outcome: MatchOutcome) -> StepOutcome:
    finished = _replace(state, outcome=outcome)
    return StepOutcome(finished, outcome)


def forfeit(state: GameState, losers: Iterable[int], cause: Cause) -> GameState:
    """시간 초과나 봇 크래시로 인한 몰수패 상태를 만듭니다. 두 뱀 모두 지면 무승부."""
    if not state.is_running:
        raise IllegalState("이미 종료된 매치입니다")
    losing = frozenset(losers)
    if not losing:
        raise IllegalState("몰수패 대상이 없습니다")
    if len(losing) == 2:
        result = Result.DRAW
    else:
        (loser,) = losing
        result = Result.win_for(1 - loser)
    snakes = tuple(
        Snake(s.body, s.heading, alive=i not in losing)
        for i, s in enumerate(state.snakes)
    )
    return _replace(
        state,
        snakes=snakes,
        outcome=MatchOutcome(result, cause, state.scores),
    )


def legal_survival_moves(state: GameState, snake_index: int) -> FrozenSet[Direction]:
    """상대가 제자리에 있다고 가정할 때 즉시 죽지 않는 방향 집합"""
    return frozenset(ordered_survival_moves(state, snake_index))


def ordered_survival_moves(
    state: GameState, snake_index: int
) -> Tuple[Direction, ...]:
    """legal_survival_moves를 동점 처리 순서(N, E, S, W)로 반환합니다."""
    me = state.snakes[snake_index]
    other = state.snakes[1 - snake_index]
    apple = state.apple.position
    moves = []
    for d in DIRECTIONS:
        head = me.head.shift(d)
        if not state.in_bounds(head):
            continue
        own = me.body if head == apple else me.body[:-1]
        if head in own or head in other.body:
            continue
        moves.append(d)
    return tuple(moves)


def advance_solo(state: GameState, snake_index: int, direction: Direction) -> GameState:
    """한 뱀만 이동시킨 가상 상태 (상대는 제자리, RNG/시계는 그대로).

    사과를 먹으면 성장하고 사과는 부재가 됩니다. 합법성 검사는 호출자의 책임입니다.
    """
    me = state.snakes[snake_index]
    head = me.head.shift(direction)
    grows = head == state.apple.position
    moved = Snake(_post_move_body(me, head, grows), direction)
    snakes = list(state.snakes)
    snakes[snake_index] = moved
    scores = list(state.scores)
    apple = state.apple
    if grows:
        scores[snake_index] += 1
        apple = ABSENT_APPLE
    return _replace(
        state, snakes=(snakes[WHITE], snakes[BLUE]), apple=apple, scores=tuple(scores)
    )


def _replace(state: GameState, **changes) -> GameState:
    fields: Dict[str, object] = {
        "config": state.config,
        "snakes": state.snakes,
        "apple": state.apple,
        "scores": state.scores,
        "clock": state.clock,
        "rng_state": state.rng_state,
        "tick": state.tick,
        "outcome": state.outcome,
    }
    fields.update(changes)
    return GameState(**fields)
