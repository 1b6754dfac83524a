"""
공통 유틸리티 함수

시드 파생, 시간/비율 포맷팅 등 여러 모듈에서 재사용하는 함수들을 제공합니다.
"""

import hashlib
from typing import Iterable

MASK64 = (1 << 64) - 1


def derive_seed(base_seed: int, *parts: object) -> int:
    """기준 시드와 식별자들로부터 64비트 시드를 파생합니다.

    Python 내장 hash()는 프로세스마다 달라지므로 사용하지 않습니다.
    """
    key_data = "|".join([str(base_seed & MASK64)] + [str(p) for p in parts])
    digest = hashlib.blake2b(key_data.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def format_duration(seconds: float) -> str:
    """지속 시간을 읽기 쉬운 형태로 포맷팅"""
    if seconds < 1:
        return f"{seconds * 1000:.1f}ms"
    elif seconds < 60:
        return f"{seconds:.2f}s"
    elif seconds < 3600:
        return f"{seconds / 60:.1f}min"
    else:
        return f"{seconds / 3600:.1f}h"


def first_duplicate(items: Iterable[str]) -> str | None:
    """처음으로 중복된 항목을 반환합니다. 없으면 None."""
    seen = set()
    for item in items:
        if item in seen:
            return item
        seen.add(item)
    return None
