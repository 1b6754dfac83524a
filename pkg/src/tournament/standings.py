"""
순위표

승수 내림차순, 무승부 수 내림차순, 식별자 오름차순으로 정렬합니다.
경기가 없는 참가자는 맨 아래에 둡니다.
"""

import csv
import io
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, List, Optional

from ..engine.models import MatchOutcome

CSV_FIELDS = ("rank", "participant", "wins", "draws", "losses", "games")


@dataclass
class Record:
    wins: int = 0
    draws: int = 0
    losses: int = 0

    @property
    def games(self) -> int:
        return self.wins + self.draws + self.losses


class Standings:
    """참가자별 승/무/패 집계"""

    def __init__(self, participants: Iterable[str] = ()):
        self.records: Dict[str, Record] = {}
        for name in participants:
            self.add_participant(name)

    def add_participant(self, name: str) -> Record:
        return self.records.setdefault(name, Record())

    def __getitem__(self, name: str) -> Record:
        return self.records[name]

    def __contains__(self, name: str) -> bool:
        return name in self.records

    def record_match(self, white: str, blue: str, outcome: MatchOutcome) -> None:
        names = (white, blue)
        records = [self.add_participant(n) for n in names]
        winner: Optional[int] = outcome.winner
        if winner is None:
            for r in records:
                r.draws += 1
            return
        records[winner].wins += 1
        records[1 - winner].losses += 1

    def merge(self, other: "Standings") -> "Standings":
        """두 집계를 합친 새 순위표 (순서 무관)"""
        merged = Standings(self.records)
        for source in (self, other):
            for name, rec in source.records.items():
                target = merged.add_participant(name)
                target.wins += rec.wins
                target.draws += rec.draws
                target.losses += rec.losses
        return merged

    def rank(self) -> List[str]:
        return rank(self)

    def rows(self) -> List[Dict[str, Any]]:
        rows = []
        for position, name in enumerate(self.rank(), start=1):
            rec = self.records[name]
            rows.append(
                {
                    "rank": position,
                    "participant": name,
                    "wins": rec.wins,
                    "draws": rec.draws,
                    "losses": rec.losses,
                    "games": rec.games,
                }
            )
        return rows

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        return buffer.getvalue()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "standings": self.rows(),
            "totals": asdict(self.totals()),
        }

    def totals(self) -> Record:
        total = Record()
        for rec in self.records.values():
            total.wins += rec.wins
            total.draws += rec.draws
            total.losses += rec.losses
        return total

    def format_table(self) -> str:
        """CLI 출력용 순위표"""
        lines = [f"{'rank':>4}  {'participant':<20} {'W':>4} {'D':>4} {'L':>4} {'G':>4}"]
        for row in self.rows():
            lines.append(
                f"{row['rank']:>4}  {row['participant']:<20} {row['wins']:>4} "
                f"{row['draws']:>4} {row['losses']:>4} {row['games']:>4}"
            )
        return "\n".join(lines)


def rank(standings: Standings) -> List[str]:
    """승수, 무승부 수(내림차순), 식별자(오름차순) 순. 경기 수 0은 맨 아래."""

    def key(name: str):
        rec = standings.records[name]
        return (rec.games == 0, -rec.wins, -rec.draws, name)

    return sorted(standings.records, key=key)
