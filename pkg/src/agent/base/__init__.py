"""
봇 기본 클래스

모든 봇이 사용하는 인터페이스와 읽기 전용 뷰를 제공합니다.
"""

from .base_bot import BaseBot, BotView

__all__ = ["BaseBot", "BotView"]
