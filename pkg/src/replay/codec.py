"""
리플레이 인코딩/디코딩

레코드를 UTF-8 JSONL 바이트열로 쓰고 읽습니다. 같은 레코드는 항상 같은 바이트가
됩니다.
"""

from pathlib import Path
from typing import Iterable, List, Sequence, Union

from pydantic import ValidationError

from ..base.exceptions import InvariantViolation, ParseError, VersionMismatch
from .records import FORMAT_VERSION, Header, ReplayRecord, Terminal, Tick, record_adapter


def check_structure(records: Sequence[ReplayRecord]) -> None:
    """헤더 하나(처음), 터미널 하나(마지막), 0부터 연속된 틱 인덱스"""
    if len(records) < 2:
        raise InvariantViolation("리플레이에는 헤더와 터미널이 필요합니다")
    if not isinstance(records[0], Header):
        raise InvariantViolation("첫 레코드는 헤더여야 합니다")
    if not isinstance(records[-1], Terminal):
        raise InvariantViolation("마지막 레코드는 터미널이어야 합니다")
    for expected, record in enumerate(records[1:-1]):
        if not isinstance(record, Tick):
            raise InvariantViolation(f"중간 레코드는 틱이어야 합니다: {record.type}")
        if record.tick != expected:
            raise InvariantViolation(
                f"틱 인덱스가 연속적이지 않습니다: {record.tick} (기대값 {expected})"
            )


def encode_record(record: ReplayRecord) -> bytes:
    return record.model_dump_json().encode("utf-8") + b"\n"


def write_replay(records: Sequence[ReplayRecord]) -> bytes:
    check_structure(records)
    return b"".join(encode_record(r) for r in records)


def _decode_line(line: bytes, number: int) -> ReplayRecord:
    try:
        return record_adapter.validate_json(line)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(p) for p in first.get("loc", ()))
        raise ParseError(number, f"{location}: {first.get('msg', 'invalid record')}")


def read_replay(data: Union[bytes, str]) -> List[ReplayRecord]:
    """바이트열을 파싱합니다. 문제가 있으면 첫 번째 문제 라인 번호로 ParseError."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    if not lines:
        raise ParseError(1, "빈 리플레이")

    records: List[ReplayRecord] = []
    for number, line in enumerate(lines, start=1):
        if records and isinstance(records[-1], Terminal):
            raise ParseError(number, "터미널 뒤에 레코드가 있습니다")
        record = _decode_line(line, number)
        if number == 1:
            if not isinstance(record, Header):
                raise ParseError(number, "첫 레코드는 헤더여야 합니다")
            if record.version != FORMAT_VERSION:
                raise VersionMismatch(record.version, FORMAT_VERSION)
        elif isinstance(record, Header):
            raise ParseError(number, "헤더가 두 번 나타났습니다")
        elif isinstance(record, Tick) and record.tick != number - 2:
            raise ParseError(number, f"틱 인덱스 {record.tick} (기대값 {number - 2})")
        records.append(record)

    if not isinstance(records[-1], Terminal):
        raise ParseError(len(lines) + 1, "터미널 레코드가 없습니다")
    return records


def write_replay_file(path: Union[str, Path], records: Iterable[ReplayRecord]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(write_replay(list(records)))
    return path


def read_replay_file(path: Union[str, Path]) -> List[ReplayRecord]:
    return read_replay(Path(path).read_bytes())
