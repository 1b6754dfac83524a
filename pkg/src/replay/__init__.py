"""
리플레이 패키지

매치 로그(JSONL)의 레코드 모델, 인코딩/디코딩, 재시뮬레이션 검증을 제공합니다.
"""

from .codec import (
    read_replay,
    read_replay_file,
    write_replay,
    write_replay_file,
)
from .records import (
    FORMAT_VERSION,
    Header,
    ReplayLog,
    ReplayRecord,
    Terminal,
    Tick,
)
from .verify import Verdict, verify_replay

__all__ = [
    "FORMAT_VERSION",
    "Header",
    "Tick",
    "Terminal",
    "ReplayRecord",
    "ReplayLog",
    "write_replay",
    "read_replay",
    "write_replay_file",
    "read_replay_file",
    "Verdict",
    "verify_replay",
]
