"""생존 가능한 이동 중 하나를 균등하게 고르는 기준 봇"""

from ...engine.models import Direction
from ...engine.rng import SeededRandom
from ...engine.rules import ordered_survival_moves
from ..base.base_bot import BaseBot, BotView


class RandomSafeBot(BaseBot):
    kind = "randomsafe"

    def __init__(self, name=None, seed: int = 0):
        super().__init__(name, seed)
        self.rng = SeededRandom(seed)

    def reset(self, seed: int) -> None:
        super().reset(seed)
        self.rng = SeededRandom(seed)

    def decide(self, view: BotView) -> Direction:
        self.nodes_used = 1
        moves = ordered_survival_moves(view.state, view.me)
        if not moves:
            return view.snake.heading
        return self.rng.choice(moves)
