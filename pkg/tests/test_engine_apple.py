"""사과 생성/만료와 난수 생성기 테스트"""

from collections import Counter

import pytest
from conftest import (
    BOTTOM_RIGHT_CYCLE,
    TOP_LEFT_CYCLE,
    TOP_LEFT_LOOP,
    bottom_right_loop,
)
from scipy import stats

from src.base.config import MatchConfig, Ruleset
from src.base.exceptions import BoardFull, IllegalState
from src.engine import rng
from src.engine.models import WHITE, AppleState, Cell
from src.engine.rng import SeededRandom
from src.engine.rules import compose_state, free_cells, spawn_apple, step, tick_apple

SPAWN_SAMPLES = 10_000


def _orbiting_state(config: MatchConfig, seed: int):
    """두 뱀이 각자의 2x2 블록을 돌기만 하는 상태 (사과를 먹을 수 없음)"""
    state = compose_state(
        config,
        white=TOP_LEFT_LOOP,
        blue=bottom_right_loop(config.width, config.height),
        seed=seed,
    )
    return spawn_apple(state)


class TestRng:
    def test_same_seed_same_sequence(self):
        a, b = SeededRandom(5), SeededRandom(5)
        assert [a.randbelow(100) for _ in range(50)] == [b.randbelow(100) for _ in range(50)]

    def test_state_is_never_zero(self):
        assert all(rng.seed_state(s) != 0 for s in range(1_000))

    def test_randbelow_range(self):
        generator = SeededRandom(1)
        values = {generator.randbelow(7) for _ in range(500)}
        assert values == set(range(7))

    def test_randbelow_rejects_empty_range(self):
        with pytest.raises(ValueError):
            rng.randbelow(rng.seed_state(0), 0)

    def test_random_unit_interval(self):
        generator = SeededRandom(9)
        assert all(0.0 <= generator.random() < 1.0 for _ in range(1_000))


class TestSpawnApple:
    def test_single_free_cell(self, board3):
        state = compose_state(
            board3,
            white=[(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1), (0, 2)],
            blue=[(1, 2)],
        )
        assert spawn_apple(state).apple.position == Cell(2, 2)

    def test_full_board(self, board3):
        state = compose_state(
            board3,
            white=[(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1), (0, 2)],
            blue=[(1, 2), (2, 2)],
        )
        assert free_cells(state) == ()
        with pytest.raises(BoardFull):
            spawn_apple(state)

    def test_existing_apple_rejected(self, board15):
        state = _orbiting_state(board15, 0)
        with pytest.raises(IllegalState):
            spawn_apple(state)

    def test_uniform_over_free_cells(self, board15):
        counts = Counter()
        for seed in range(SPAWN_SAMPLES):
            state = compose_state(board15, white=[(0, 0)], blue=[(14, 14)], seed=seed)
            counts[spawn_apple(state).apple.position] += 1

        cells = free_cells(compose_state(board15, white=[(0, 0)], blue=[(14, 14)]))
        assert set(counts) <= set(cells)
        expected = SPAWN_SAMPLES / len(cells)
        chi_square = sum((counts[c] - expected) ** 2 / expected for c in cells)
        assert chi_square < stats.chi2.ppf(0.999, df=len(cells) - 1)


class TestAppleTtl:
    def test_relocates_exactly_at_ttl(self, board15):
        ttl = board15.apple_ttl
        for seed in range(100):
            state = _orbiting_state(board15, seed)
            position = state.apple.position
            for k in range(1, ttl + 1):
                move = TOP_LEFT_CYCLE[(k - 1) % 4], BOTTOM_RIGHT_CYCLE[(k - 1) % 4]
                state = step(state, *move).next
                assert state.is_running
                if k < ttl:
                    assert state.apple == AppleState(position, k)
            assert state.apple.age == 0
            assert state.apple.position not in state.occupied

    def test_no_expiry_in_2020_ruleset(self):
        config = MatchConfig(ruleset=Ruleset.EDITION_2020)
        assert config.apple_ttl is None
        state = _orbiting_state(config, 3)
        position = state.apple.position
        for k in range(250):
            state = step(state, TOP_LEFT_CYCLE[k % 4], BOTTOM_RIGHT_CYCLE[k % 4]).next
        assert state.apple == AppleState(position, 250)

    def test_tick_apple_ages(self, board15):
        state = compose_state(
            board15, white=TOP_LEFT_LOOP, blue=[(14, 14)], apple=(7, 7), apple_age=50
        )
        aged = tick_apple(state, 1)
        assert aged.apple == AppleState(Cell(7, 7), 51)
        assert aged.snakes[WHITE] == state.snakes[WHITE]

    def test_tick_apple_without_apple_is_noop(self, board15):
        state = compose_state(board15, white=TOP_LEFT_LOOP, blue=[(14, 14)])
        assert tick_apple(state, 5) == state
