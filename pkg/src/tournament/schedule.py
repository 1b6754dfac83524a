"""
라운드 로빈 일정

모든 참가자 쌍이 repeats번씩 만납니다. 쌍마다의 시드는 (기준 시드, 정렬된 쌍,
반복 인덱스)로부터 파생되므로 참가자를 추가해도 기존 쌍의 게임은 바뀌지 않습니다.
"""

import itertools
import re
from dataclasses import dataclass
from typing import List, Sequence

from ..base.exceptions import DuplicateParticipant, InvalidConfig
from ..base.utils import derive_seed, first_duplicate

_UNSAFE_CHARS = re.compile(r"[^A-Za-z0-9_.-]")


@dataclass(frozen=True)
class Pairing:
    participant_a: str
    participant_b: str
    repeat_index: int
    seed: int

    @property
    def white(self) -> str:
        """짝수 반복에서는 a가 white, 홀수 반복에서는 b가 white"""
        return self.participant_a if self.repeat_index % 2 == 0 else self.participant_b

    @property
    def blue(self) -> str:
        return self.participant_b if self.repeat_index % 2 == 0 else self.participant_a

    @property
    def match_id(self) -> str:
        a = _UNSAFE_CHARS.sub("_", self.participant_a)
        b = _UNSAFE_CHARS.sub("_", self.participant_b)
        return f"{a}_vs_{b}_r{self.repeat_index}"

    @property
    def log_name(self) -> str:
        return f"{self.match_id}.jsonl"


def pairing_seed(base_seed: int, a: str, b: str, repeat_index: int) -> int:
    first, second = sorted((a, b))
    return derive_seed(base_seed, first, second, repeat_index)


def schedule_round_robin(
    participants: Sequence[str], repeats: int, base_seed: int = 0
) -> List[Pairing]:
    """C(n, 2) * repeats개의 대진을 만듭니다."""
    duplicate = first_duplicate(participants)
    if duplicate is not None:
        raise DuplicateParticipant(duplicate)
    if len(participants) < 2:
        raise InvalidConfig("참가자는 2명 이상이어야 합니다", "participants")
    if repeats < 1:
        raise InvalidConfig(f"repeats는 1 이상이어야 합니다: {repeats}", "repeats")

    pairings = []
    for a, b in itertools.combinations(sorted(participants), 2):
        for k in range(repeats):
            pairings.append(Pairing(a, b, k, pairing_seed(base_seed, a, b, k)))
    return pairings
