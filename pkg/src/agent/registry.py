"""
에이전트 레지스트리

`name[:key=value,...]` 형식의 에이전트 사양을 파싱하고 봇을 생성합니다.

    alphabeta:depth=6,name=ab6
    mcts:iters=5000,seed=3
    greedy:stall=true
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional

from ..base.exceptions import InvalidConfig, UnknownKind
from ..search.evaluation import EvalWeights
from .base.base_bot import BaseBot
from .baseline.greedy import GreedyBot
from .baseline.random_safe import RandomSafeBot
from .baseline.search_bots import AlphaBetaBot, IterativeDeepeningBot, MCTSBot
from .baseline.stall_guard import StallGuard

KIND_DESCRIPTIONS: Dict[str, str] = {
    "randomsafe": "생존 가능한 이동 중 무작위 선택",
    "greedy": "A* 사과 추적 + 도달 면적 최대화 생존 우선",
    "ids": "반복 심화 alpha-beta (깊이 무제한)",
    "alphabeta": "깊이 상한 alpha-beta (depth=N, 기본 4)",
    "mcts": "UCT 몬테카를로 트리 탐색 (iters=N, horizon=N)",
}

_ALIASES = {
    "random": "randomsafe",
    "random_safe": "randomsafe",
    "greedybfs": "greedy",
    "greedy_bfs": "greedy",
    "iterative_deepening": "ids",
    "ab": "alphabeta",
}

# 옵션 이름 -> 값 변환 함수
_OPTION_TYPES: Dict[str, Callable[[str], Any]] = {
    "name": str,
    "seed": int,
    "stall": lambda v: v.lower() in ("1", "true", "yes", "on"),
    "depth": int,
    "iters": int,
    "horizon": int,
    "w_length": float,
    "w_apple": float,
    "w_territory": float,
}


@dataclass(frozen=True)
class AgentSpec:
    """파싱된 에이전트 사양"""

    kind: str
    options: Mapping[str, Any] = field(default_factory=dict)

    @property
    def participant(self) -> str:
        """토너먼트 참가자 식별자 (name 옵션, 없으면 종류 이름)"""
        return self.options.get("name") or self.kind

    def build(self) -> BaseBot:
        return make_agent(self.kind, self.options)


def known_kinds() -> List[str]:
    return list(KIND_DESCRIPTIONS)


def registry_listing() -> str:
    """CLI 도움말용 에이전트 목록"""
    lines = ["available agents:"]
    for kind, description in KIND_DESCRIPTIONS.items():
        lines.append(f"  {kind:<10} {description}")
    return "\n".join(lines)


def _normalize_kind(kind: str) -> str:
    key = kind.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in KIND_DESCRIPTIONS:
        raise UnknownKind(kind, known_kinds())
    return key


def parse_agent_spec(text: str) -> AgentSpec:
    """`name[:key=value,...]` 문자열을 파싱합니다."""
    kind_part, _, option_part = text.strip().partition(":")
    kind = _normalize_kind(kind_part)
    options: Dict[str, Any] = {}
    for item in filter(None, (p.strip() for p in option_part.split(","))):
        key, sep, raw = item.partition("=")
        key = key.strip().lower()
        if not sep:
            raise InvalidConfig(f"옵션 형식은 key=value 입니다: {item!r}", key)
        if key not in _OPTION_TYPES:
            raise InvalidConfig(f"알 수 없는 옵션: {key}", key)
        try:
            options[key] = _OPTION_TYPES[key](raw.strip())
        except ValueError:
            raise InvalidConfig(f"옵션 값이 잘못되었습니다: {key}={raw!r}", key)
    return AgentSpec(kind, options)


def _weights(options: Mapping[str, Any]) -> EvalWeights:
    defaults = EvalWeights()
    return EvalWeights(
        w_length=options.get("w_length", defaults.w_length),
        w_apple_distance=options.get("w_apple", defaults.w_apple_distance),
        w_territory=options.get("w_territory", defaults.w_territory),
    )


def make_agent(kind: str, options: Optional[Mapping[str, Any]] = None) -> BaseBot:
    """종류와 옵션으로 봇을 생성합니다. stall=true면 StallGuard로 감쌉니다."""
    options = dict(options or {})
    kind = _normalize_kind(kind)
    name = options.get("name")
    seed = options.get("seed", 0)

    for key in ("depth", "iters", "horizon"):
        if key in options and options[key] < 1:
            raise InvalidConfig(f"{key}는 1 이상이어야 합니다", key)

    bot: BaseBot
    if kind == "randomsafe":
        bot = RandomSafeBot(name, seed)
    elif kind == "greedy":
        bot = GreedyBot(name, seed)
    elif kind == "ids":
        bot = IterativeDeepeningBot(name, seed, _weights(options))
    elif kind == "alphabeta":
        bot = AlphaBetaBot(name, seed, _weights(options), depth=options.get("depth", 4))
    else:
        bot = MCTSBot(
            name,
            seed,
            _weights(options),
            iterations=options.get("iters"),
            horizon=options.get("horizon", 50),
        )

    if options.get("stall"):
        bot = StallGuard(bot)
    return bot
