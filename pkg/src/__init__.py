"""Snakes AI Arena: src package initializer.

- 안전한 최소 부트스트랩(무거운 사이드이펙트 없음)
- .env가 있으면 자동 로드(이미 설정된 환경변수는 덮어쓰지 않음)
"""

from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv

# 패키지/프로젝트 경로 상수
PACKAGE_ROOT: Path = Path(__file__).resolve().parent
PROJECT_ROOT: Path = PACKAGE_ROOT.parent

# override=False: 이미 환경에 있는 값은 덮어쓰지 않음
load_dotenv(dotenv_path=PROJECT_ROOT / ".env", override=False)

# 패키지 버전 (환경변수로 덮어쓰기 가능)
__version__ = os.getenv("SNAKES_VERSION", "0.1.0")

__all__ = [
    "PACKAGE_ROOT",
    "PROJECT_ROOT",
    "__version__",
]
