"""게임 트리 탐색 테스트: minimax 기준값, alpha-beta, 반복 심화, MCTS"""

import pytest
from conftest import random_states

from src.base.exceptions import BudgetExhausted
from src.engine.models import BLUE, DIRECTIONS, WHITE, Cause, Direction
from src.engine.rng import SeededRandom
from src.engine.rules import compose_state, forfeit, new_match, ordered_survival_moves
from src.search.alphabeta import alphabeta, iterative_deepening, minimax_value
from src.search.budget import SearchBudget, SearchStats
from src.search.evaluation import LOSS_SCORE, WIN_SCORE, evaluate
from src.search.mcts import mcts_decide, rollout_moves

N, E, S, W = Direction.NORTH, Direction.EAST, Direction.SOUTH, Direction.WEST

UNLIMITED = SearchBudget.nodes(10**9)

# white가 북쪽으로 가면 blue는 어떤 응수를 해도 진다
FORCED_WIN = dict(
    white=[(1, 1), (2, 1), (3, 1), (4, 1)],
    blue=[(0, 0), (0, 1), (0, 2)],
    apple=(4, 4),
)

SPIRAL = [(5, 5), (5, 6), (4, 6), (4, 5), (4, 4), (5, 4), (6, 4), (6, 5), (6, 6)]


def _oracle_check(config, count, seed, depths):
    for i, state in enumerate(random_states(config, count, seed=seed, max_plies=6)):
        depth = depths[i % len(depths)]
        oracle_stats, pruned_stats = SearchStats(), SearchStats()
        expected = minimax_value(state, depth, stats=oracle_stats)
        _, value = alphabeta(state, depth, UNLIMITED, stats=pruned_stats)
        assert value == expected
        assert pruned_stats.nodes <= oracle_stats.nodes


class TestMinimax:
    def test_depth_zero_is_evaluation(self, board15):
        state = new_match(board15, 4)
        assert minimax_value(state, 0) == evaluate(state, WHITE)

    def test_forced_win(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        assert minimax_value(state, 1) == WIN_SCORE

    def test_forced_loss(self, board15):
        state = compose_state(board15, white=SPIRAL, blue=[(12, 12), (12, 13), (12, 14)])
        assert minimax_value(state, 1) == LOSS_SCORE

    def test_negative_depth_rejected(self, board15):
        with pytest.raises(ValueError):
            minimax_value(new_match(board15, 0), -1)


class TestAlphaBeta:
    def test_equals_minimax(self, board5):
        _oracle_check(board5, 12, seed=21, depths=[1, 2, 3])

    @pytest.mark.slow
    def test_equals_minimax_full(self, board5):
        _oracle_check(board5, 200, seed=22, depths=[1, 2, 3, 4])

    def test_finds_forced_win(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        assert alphabeta(state, 1, UNLIMITED) == (N, WIN_SCORE)
        move, value = alphabeta(state, 3, UNLIMITED)
        assert (move, value) == (N, WIN_SCORE)

    def test_deterministic(self, board5):
        for state in random_states(board5, 5, seed=23, max_plies=6):
            assert alphabeta(state, 2, UNLIMITED) == alphabeta(state, 2, UNLIMITED)

    def test_root_moves_restrict_choice(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        move, _ = alphabeta(state, 1, UNLIMITED, root_moves=[S])
        assert move is S

    def test_budget_exhausted(self, board15):
        with pytest.raises(BudgetExhausted):
            alphabeta(new_match(board15, 0), 3, SearchBudget.nodes(5))

    def test_rejects_finished_state(self, board15):
        done = forfeit(new_match(board15, 0), [WHITE], Cause.BOT_CRASH)
        with pytest.raises(ValueError):
            alphabeta(done, 1, UNLIMITED)

    def test_rejects_zero_depth(self, board15):
        with pytest.raises(ValueError):
            alphabeta(new_match(board15, 0), 0, UNLIMITED)


class TestIterativeDeepening:
    def test_zero_budget_returns_legal_move(self, board15):
        state = new_match(board15, 0)
        move = iterative_deepening(state, SearchBudget.nodes(0))
        assert move in ordered_survival_moves(state, WHITE)

    def test_matches_fixed_depth_search(self, board5):
        for state in random_states(board5, 6, seed=24, max_plies=6):
            legal = ordered_survival_moves(state, WHITE)
            if len(legal) < 2:
                continue
            expected, _ = alphabeta(state, 2, UNLIMITED, root_moves=legal)
            assert iterative_deepening(state, UNLIMITED, max_depth=2) == expected

    def test_budget_is_respected(self, board15):
        tracker = SearchBudget.nodes(500).tracker()
        iterative_deepening(new_match(board15, 1), tracker)
        assert 0 < tracker.used <= 500

    def test_single_legal_move(self, board15):
        state = compose_state(
            board15, white=[(0, 0), (0, 1), (0, 2)], blue=[(12, 12), (12, 13), (12, 14)]
        )
        stats = SearchStats()
        assert iterative_deepening(state, UNLIMITED, stats=stats) is E
        assert stats.nodes == 0

    def test_no_legal_move_keeps_heading(self, board15):
        state = compose_state(board15, white=SPIRAL, blue=[(12, 12), (12, 13), (12, 14)])
        assert iterative_deepening(state, UNLIMITED) is state.snakes[WHITE].heading

    def test_finds_forced_win(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        assert iterative_deepening(state, SearchBudget.nodes(2_000)) is N


class TestMcts:
    def test_rollout_moves_are_survival_moves(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        assert rollout_moves(state, WHITE) == (N, S)

    def test_rollout_moves_fall_back_to_all_directions(self, board5):
        # blue는 벽, 자기 몸, white 머리에 막혀 생존 가능한 이동이 없음
        state = compose_state(
            board5, white=[(1, 0), (2, 0), (3, 0)], blue=[(0, 0), (0, 1), (0, 2)], apple=(4, 4)
        )
        assert ordered_survival_moves(state, BLUE) == ()
        assert rollout_moves(state, BLUE) == DIRECTIONS

    def test_finds_forced_win(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        for seed in range(20):
            move = mcts_decide(state, WHITE, SearchBudget.nodes(300), SeededRandom(seed))
            assert move is N

    @pytest.mark.slow
    def test_finds_forced_win_full(self, board5):
        state = compose_state(board5, **FORCED_WIN)
        hits = sum(
            mcts_decide(state, WHITE, SearchBudget.nodes(2_000), SeededRandom(seed)) is N
            for seed in range(100)
        )
        assert hits >= 95

    def test_deterministic_for_seed(self, board15):
        for state in random_states(board15, 5, seed=25, max_plies=10):
            first = mcts_decide(state, WHITE, SearchBudget.nodes(100), SeededRandom(3))
            second = mcts_decide(state, WHITE, SearchBudget.nodes(100), SeededRandom(3))
            assert first is second

    def test_spends_exact_iteration_budget(self, board15):
        tracker = SearchBudget.nodes(64).tracker()
        stats = SearchStats()
        mcts_decide(new_match(board15, 2), WHITE, tracker, SeededRandom(0), stats=stats)
        assert tracker.used == 64
        assert stats.nodes == 64

    def test_returns_legal_move(self, board15):
        for state in random_states(board15, 10, seed=26, max_plies=20):
            legal = ordered_survival_moves(state, WHITE)
            move = mcts_decide(state, WHITE, SearchBudget.nodes(40), SeededRandom(1))
            if legal:
                assert move in legal

    def test_single_legal_move(self, board15):
        state = compose_state(
            board15, white=[(0, 0), (0, 1), (0, 2)], blue=[(12, 12), (12, 13), (12, 14)]
        )
        assert mcts_decide(state, WHITE, SearchBudget.nodes(0), SeededRandom(0)) is E

    def test_no_legal_move_keeps_heading(self, board15):
        state = compose_state(board15, white=SPIRAL, blue=[(12, 12), (12, 13), (12, 14)])
        move = mcts_decide(state, WHITE, SearchBudget.nodes(50), SeededRandom(0))
        assert move is state.snakes[WHITE].heading
