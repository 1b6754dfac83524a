"""엔진 전이 규칙 테스트: 시작 배치, 충돌 판정, 성장, 시간 제한, 몰수패"""

import pytest
from conftest import mirror_state, random_states

from src.base.config import ClockMode, MatchConfig
from src.base.exceptions import IllegalState, InvalidConfig
from src.engine.models import (
    BLUE,
    WHITE,
    Cause,
    Cell,
    Direction,
    Phase,
    Result,
)
from src.engine.rules import (
    advance_solo,
    compose_state,
    forfeit,
    legal_survival_moves,
    new_match,
    ordered_survival_moves,
    step,
)

N, E, S, W = Direction.NORTH, Direction.EAST, Direction.SOUTH, Direction.WEST

# 머리가 자기 몸에 완전히 둘러싸인 길이 9 나선
SPIRAL = [(5, 5), (5, 6), (4, 6), (4, 5), (4, 4), (5, 4), (6, 4), (6, 5), (6, 6)]


class TestNewMatch:
    def test_default_layout(self, board15):
        state = new_match(board15, 42)
        white, blue = state.snakes
        assert white.body == (Cell(2, 6), Cell(2, 7), Cell(2, 8))
        assert blue.body == (Cell(12, 8), Cell(12, 7), Cell(12, 6))
        assert white.heading is E
        assert blue.heading is W
        assert state.scores == (0, 0)
        assert state.clock == 0
        assert state.phase is Phase.RUNNING

    def test_single_apple_on_free_cell(self, board15):
        for seed in range(50):
            state = new_match(board15, seed)
            assert state.apple.present
            assert state.apple.age == 0
            assert state.apple.position not in state.occupied
            assert state.in_bounds(state.apple.position)

    def test_point_symmetric(self, board15):
        state = new_match(board15, 1)
        assert mirror_state(state).snakes == state.snakes

    def test_deterministic(self, board15):
        assert new_match(board15, 7) == new_match(board15, 7)

    def test_snake_too_long_for_board(self):
        with pytest.raises(InvalidConfig):
            new_match(MatchConfig(width=5, height=5, initial_length=12), 0)

    def test_board_too_small(self, board3):
        with pytest.raises(InvalidConfig):
            new_match(board3, 0)


class TestCollisions:
    def test_off_board(self, board15):
        state = compose_state(
            board15,
            white=[(10, 3), (10, 4), (10, 5)],
            blue=[(0, 7), (1, 7), (2, 7)],
            apple=(5, 12),
        )
        result = step(state, N, W)
        assert result.terminal is not None
        assert result.terminal.result is Result.WHITE_WINS
        assert result.terminal.cause is Cause.OFF_BOARD
        assert not result.next.snakes[BLUE].alive
        assert result.next.snakes[WHITE].alive

    def test_self_collision(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (6, 5), (6, 6), (5, 6), (4, 6)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 0),
        )
        result = step(state, S, N)
        assert result.terminal.result is Result.BLUE_WINS
        assert result.terminal.cause is Cause.SELF_COLLISION

    def test_opponent_collision(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(6, 4), (6, 5), (6, 6)],
            apple=(0, 14),
        )
        result = step(state, E, N)
        assert result.terminal.result is Result.BLUE_WINS
        assert result.terminal.cause is Cause.OPPONENT_COLLISION

    def test_entering_vacating_tail_is_safe(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(7, 4), (6, 4), (6, 5)],
            apple=(0, 14),
        )
        # blue의 꼬리 (6,5)는 이번 틱에 비워짐
        result = step(state, E, N)
        assert result.terminal is None
        assert result.next.head(WHITE) == Cell(6, 5)

    def test_reversal_is_self_collision(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 0),
        )
        result = step(state, W, N)
        assert result.terminal.result is Result.BLUE_WINS
        assert result.terminal.cause is Cause.SELF_COLLISION

    def test_head_to_head_equal_lengths_draw(self, board15):
        state = compose_state(
            board15,
            white=[(6, 7), (5, 7), (4, 7), (3, 7)],
            blue=[(8, 7), (9, 7), (10, 7), (11, 7)],
            apple=(0, 0),
        )
        result = step(state, E, W)
        assert result.terminal.result is Result.DRAW
        assert result.terminal.cause is Cause.HEAD_TO_HEAD

    def test_head_to_head_longer_wins(self, board15):
        state = compose_state(
            board15,
            white=[(6, 7), (5, 7), (4, 7), (3, 7), (2, 7)],
            blue=[(8, 7), (9, 7), (10, 7)],
            apple=(0, 0),
        )
        result = step(state, E, W)
        assert result.terminal.result is Result.WHITE_WINS
        assert result.terminal.cause is Cause.HEAD_TO_HEAD

    def test_head_swap_counts_as_head_to_head(self, board15):
        state = compose_state(
            board15,
            white=[(7, 7), (6, 7), (5, 7)],
            blue=[(8, 7), (9, 7), (10, 7)],
            apple=(0, 0),
        )
        result = step(state, E, W)
        assert result.terminal.result is Result.DRAW
        assert result.terminal.cause is Cause.HEAD_TO_HEAD

    def test_simultaneous_loss(self, board15):
        state = compose_state(
            board15,
            white=[(0, 3), (1, 3), (2, 3)],
            blue=[(14, 10), (13, 10), (12, 10)],
            apple=(7, 7),
        )
        result = step(state, W, E)
        assert result.terminal.result is Result.DRAW
        assert result.terminal.cause is Cause.SIMULTANEOUS_LOSS

    def test_mirrored_outcome_swaps_winner(self, board15):
        for state in random_states(board15, 40, seed=3, max_plies=20):
            # 사과 재생성 위치는 거울상이 아니므로 사과가 있는 상태만 비교
            if not state.apple.present:
                continue
            for mw in Direction:
                for mb in Direction:
                    original = step(state, mw, mb)
                    mirrored = step(mirror_state(state), mb.opposite(), mw.opposite())
                    assert (original.terminal is None) == (mirrored.terminal is None)
                    if original.terminal is None:
                        assert mirror_state(original.next).snakes == mirrored.next.snakes
                        continue
                    assert mirrored.terminal.cause is original.terminal.cause
                    winner = original.terminal.winner
                    expected = None if winner is None else 1 - winner
                    assert mirrored.terminal.winner == expected


class TestGrowth:
    def test_eating_grows_and_scores(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(6, 5),
        )
        after = step(state, E, N).next
        assert after.scores == (1, 0)
        assert len(after.snakes[WHITE]) == 4
        assert after.snakes[WHITE].tail == Cell(3, 5)
        assert not after.apple.present

    def test_apple_respawns_on_next_step(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(6, 5),
        )
        after = step(step(state, E, N).next, E, N).next
        assert after.apple.present
        assert after.apple.position not in after.occupied

    def test_length_tracks_score(self, board15):
        for state in random_states(board15, 30, seed=11, max_plies=40):
            for i in (WHITE, BLUE):
                assert len(state.snakes[i]) == board15.initial_length + state.scores[i]


class TestClock:
    def test_time_limit_decides_by_score(self):
        config = MatchConfig(match_limit=10)
        state = compose_state(
            config,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 14),
            scores=(3, 1),
            clock=9,
        )
        result = step(state, E, N)
        assert result.terminal.result is Result.WHITE_WINS
        assert result.terminal.cause is Cause.TIME_LIMIT
        assert result.terminal.final_scores == (3, 1)

    def test_time_limit_equal_scores_draw(self):
        config = MatchConfig(match_limit=10)
        state = compose_state(
            config,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 14),
            scores=(2, 2),
            clock=9,
        )
        result = step(state, E, N)
        assert result.terminal.result is Result.DRAW
        assert result.terminal.cause is Cause.TIME_LIMIT

    def test_wall_clock_is_clamped_to_limit(self):
        config = MatchConfig(clock_mode=ClockMode.WALL)
        state = compose_state(
            config,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 14),
            clock=config.match_limit - 50,
        )
        result = step(state, E, N, elapsed=100)
        assert result.next.clock == config.match_limit
        assert result.terminal.cause is Cause.TIME_LIMIT

    def test_tick_counts_steps(self, board15):
        state = new_match(board15, 0)
        after = step(state, E, W).next
        assert (after.tick, after.clock) == (1, 1)

    def test_step_after_finish_is_illegal(self, board15):
        state = compose_state(
            board15,
            white=[(0, 3), (1, 3), (2, 3)],
            blue=[(14, 10), (13, 10), (12, 10)],
            apple=(7, 7),
        )
        finished = step(state, W, E).next
        with pytest.raises(IllegalState):
            step(finished, N, N)

    def test_nonpositive_elapsed_rejected(self, board15):
        with pytest.raises(IllegalState):
            step(new_match(board15, 0), E, W, elapsed=0)


class TestForfeit:
    def test_single_loser(self, board15):
        state = new_match(board15, 0)
        done = forfeit(state, [BLUE], Cause.TIMEOUT)
        assert done.outcome.result is Result.WHITE_WINS
        assert done.outcome.cause is Cause.TIMEOUT
        assert not done.snakes[BLUE].alive

    def test_both_lose_is_draw(self, board15):
        done = forfeit(new_match(board15, 0), [WHITE, BLUE], Cause.BOT_CRASH)
        assert done.outcome.result is Result.DRAW

    def test_requires_running_state(self, board15):
        done = forfeit(new_match(board15, 0), [WHITE], Cause.BOT_CRASH)
        with pytest.raises(IllegalState):
            forfeit(done, [BLUE], Cause.BOT_CRASH)


class TestSurvivalMoves:
    def test_open_board(self, board15):
        state = compose_state(
            board15,
            white=[(7, 7), (6, 7), (5, 7)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 0),
        )
        assert legal_survival_moves(state, WHITE) == {N, E, S}

    def test_corner_along_wall(self, board15):
        state = compose_state(
            board15,
            white=[(0, 0), (0, 1), (0, 2)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(7, 7),
        )
        assert legal_survival_moves(state, WHITE) == {E}

    def test_enclosed_head(self, board15):
        state = compose_state(
            board15,
            white=SPIRAL,
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 0),
        )
        assert legal_survival_moves(state, WHITE) == frozenset()

    def test_tail_is_free_unless_eating(self, board15):
        # 2x2를 도는 길이 4 뱀: 꼬리 칸으로만 나갈 수 있음
        looping = compose_state(
            board15,
            white=[(0, 0), (0, 1), (1, 1), (1, 0)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(7, 7),
        )
        assert E in legal_survival_moves(looping, WHITE)

    def test_ordered_in_tie_order(self, board15):
        state = compose_state(
            board15,
            white=[(7, 7), (7, 8), (7, 9)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(0, 0),
        )
        assert ordered_survival_moves(state, WHITE) == (N, E, W)

    def test_survival_moves_never_lose_alone(self, board15):
        for state in random_states(board15, 30, seed=5, max_plies=30):
            for i in (WHITE, BLUE):
                for move in legal_survival_moves(state, i):
                    moved = advance_solo(state, i, move)
                    head = moved.head(i)
                    assert moved.in_bounds(head)
                    assert head not in moved.snakes[i].body[1:]
                    assert head not in moved.snakes[1 - i].body


class TestAdvanceSolo:
    def test_opponent_and_rng_unchanged(self, board15):
        state = new_match(board15, 3)
        moved = advance_solo(state, WHITE, E)
        assert moved.snakes[BLUE] == state.snakes[BLUE]
        assert moved.rng_state == state.rng_state
        assert moved.clock == state.clock
        assert moved.head(WHITE) == Cell(3, 6)

    def test_eating_grows(self, board15):
        state = compose_state(
            board15,
            white=[(5, 5), (4, 5), (3, 5)],
            blue=[(12, 12), (12, 13), (12, 14)],
            apple=(6, 5),
        )
        moved = advance_solo(state, WHITE, E)
        assert len(moved.snakes[WHITE]) == 4
        assert moved.scores == (1, 0)
        assert not moved.apple.present
