"""
에이전트 모듈

봇 인터페이스, 기준 봇, 에이전트 레지스트리를 제공합니다.
"""

from .base import BaseBot, BotView
from .baseline import (
    AlphaBetaBot,
    GreedyBot,
    IterativeDeepeningBot,
    MCTSBot,
    RandomSafeBot,
    StallGuard,
)
from .registry import (
    KIND_DESCRIPTIONS,
    AgentSpec,
    known_kinds,
    make_agent,
    parse_agent_spec,
    registry_listing,
)

__all__ = [
    "BaseBot",
    "BotView",
    "RandomSafeBot",
    "GreedyBot",
    "IterativeDeepeningBot",
    "AlphaBetaBot",
    "MCTSBot",
    "StallGuard",
    "AgentSpec",
    "KIND_DESCRIPTIONS",
    "known_kinds",
    "make_agent",
    "parse_agent_spec",
    "registry_listing",
]
