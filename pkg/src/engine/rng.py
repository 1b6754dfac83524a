"""
이식 가능한 결정적 난수 생성기

xorshift64* 생성기와 splitmix64 시딩을 사용합니다. 상태는 64비트 정수 하나이며
GameState에 그대로 저장되므로 리플레이가 플랫폼에 무관하게 재현됩니다.
"""

from typing import Sequence, Tuple, TypeVar

MASK64 = (1 << 64) - 1
ALGORITHM = "xorshift64*/splitmix64"

T = TypeVar("T")


def _splitmix64(value: int) -> int:
    z = (value + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def seed_state(seed: int) -> int:
    """시드로부터 초기 상태를 만듭니다. 상태 0은 xorshift의 고정점이므로 피합니다."""
    state = _splitmix64(seed & MASK64)
    return state or 0x9E3779B97F4A7C15


def next_u64(state: int) -> Tuple[int, int]:
    """(64비트 난수, 다음 상태)"""
    x = state
    x ^= x >> 12
    x ^= (x << 25) & MASK64
    x ^= x >> 27
    return (x * 0x2545F4914F6CDD1D) & MASK64, x


def randbelow(state: int, n: int) -> Tuple[int, int]:
    """[0, n) 범위의 균등 난수와 다음 상태. 거절 샘플링으로 편향을 없앱니다."""
    if n <= 0:
        raise ValueError(f"n must be positive: {n}")
    limit = ((1 << 64) // n) * n
    while True:
        value, state = next_u64(state)
        if value < limit:
            return value % n, state


class SeededRandom:
    """에이전트용 가변 래퍼 (MCTS 롤아웃, 무작위 봇)"""

    def __init__(self, seed: int = 0):
        self.state = seed_state(seed)

    def randbelow(self, n: int) -> int:
        value, self.state = randbelow(self.state, n)
        return value

    def choice(self, items: Sequence[T]) -> T:
        if not items:
            raise IndexError("cannot choose from an empty sequence")
        return items[self.randbelow(len(items))]

    def random(self) -> float:
        value, self.state = next_u64(self.state)
        return (value >> 11) / float(1 << 53)
