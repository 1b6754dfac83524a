"""
Snakes 명령줄 진입점

    snakes match --white greedy --blue randomsafe --seed 7 --clock logical
    snakes tournament --agents randomsafe,greedy,alphabeta:depth=3 --repeats 3 --out runs/t1
    snakes verify runs/t1

종료 코드: 0 성공, 1 검증 실패, 2 사용법/설정 오류
"""

import argparse
import asyncio
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import structlog

from .agent.registry import AgentSpec, parse_agent_spec, registry_listing
from .base.config import (
    ENV_PREFIX,
    ClockMode,
    LoggingConfig,
    MatchConfig,
    Ruleset,
    configure_logging,
    parse_board,
)
from .base.exceptions import (
    InvalidConfig,
    ParseError,
    SnakesError,
    UnknownKind,
    VersionMismatch,
)
from .engine.render import render_board
from .engine.rules import new_match
from .replay.codec import read_replay_file, write_replay_file
from .replay.verify import verify_replay
from .tournament.manager import run_tournament
from .tournament.runner import run_match

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

DEFAULT_MATCH_OUT = "runs/matches"
DEFAULT_TOURNAMENT_OUT = "runs/tournament"


def _env_default(key: str, fallback: str) -> str:
    return os.getenv(f"{ENV_PREFIX}_{key}") or fallback


def _default_seed() -> int:
    value = os.getenv(f"{ENV_PREFIX}_SEED")
    try:
        return int(value) if value else 0
    except ValueError:
        raise InvalidConfig(f"{ENV_PREFIX}_SEED 값이 정수가 아닙니다: {value!r}", "seed")


def _add_match_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--board", default=_env_default("BOARD", "15x15"), help="보드 크기 WxH (기본 15x15)"
    )
    parser.add_argument(
        "--length", type=int, default=_env_default("LENGTH", "3"), help="초기 뱀 길이"
    )
    parser.add_argument("--seed", type=int, default=None, help=f"기준 시드 (기본 ${ENV_PREFIX}_SEED)")
    parser.add_argument(
        "--clock",
        choices=[m.value for m in ClockMode],
        default=_env_default("CLOCK", ClockMode.LOGICAL.value),
        help="시계 모드",
    )
    parser.add_argument(
        "--ruleset",
        choices=[r.value for r in Ruleset],
        default=_env_default("RULESET", Ruleset.EDITION_2021.value),
        help="규칙 버전 (2020: 사과 만료 없음)",
    )
    parser.add_argument(
        "--budget", type=int, default=None, help="결정 예산 (wall: ms, logical: 노드 수)"
    )
    parser.add_argument(
        "--match-limit", type=int, default=None, help="매치 제한 (wall: ms, logical: 틱)"
    )
    parser.add_argument(
        "--apple-ttl", type=int, default=None, help="사과 재배치 시간 (wall: ms, logical: 틱)"
    )


def _match_config(args: argparse.Namespace, seed: int) -> MatchConfig:
    width, height = parse_board(args.board)
    return MatchConfig(
        width=width,
        height=height,
        initial_length=args.length,
        clock_mode=args.clock,
        ruleset=args.ruleset,
        match_limit=args.match_limit,
        apple_ttl=args.apple_ttl,
        decision_budget=args.budget,
        base_seed=seed,
    )


def _usage_error(error: SnakesError) -> int:
    print(f"error: {error.message}", file=sys.stderr)
    if isinstance(error, UnknownKind):
        print(registry_listing(), file=sys.stderr)
    return EXIT_USAGE


def split_agent_specs(values: Sequence[str]) -> List[str]:
    """쉼표로 구분된 사양 목록을 나눕니다. `key=value` 조각은 앞 사양의 옵션으로 붙입니다."""
    specs: List[str] = []
    for value in values:
        for piece in filter(None, (p.strip() for p in value.split(","))):
            if "=" in piece and ":" not in piece and specs:
                specs[-1] += f",{piece}"
            else:
                specs.append(piece)
    return specs


def cmd_match(args: argparse.Namespace) -> int:
    """매치 한 판을 실행하고 결과 요약과 리플레이 경로를 출력합니다."""
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        white_spec = parse_agent_spec(args.white)
        blue_spec = parse_agent_spec(args.blue)
        config = _match_config(args, seed)
        new_match(config, seed)
        white, blue = white_spec.build(), blue_spec.build()
    except SnakesError as e:
        return _usage_error(e)

    names = (white_spec.participant, blue_spec.participant)
    on_tick = (lambda state: print(render_board(state) + "\n")) if args.trace else None
    outcome, records = asyncio.run(
        run_match(
            white,
            blue,
            config,
            seed,
            names=names,
            on_tick=on_tick,
        )
    )

    path = Path(args.out) / f"{names[0]}_vs_{names[1]}_seed{seed}.jsonl"
    write_replay_file(path, records)
    print(
        f"white={names[0]} blue={names[1]} result={outcome.result.value} "
        f"cause={outcome.cause.value} scores={outcome.score_line()} "
        f"ticks={len(records) - 2}"
    )
    print(f"replay: {path}")
    return EXIT_OK


def cmd_tournament(args: argparse.Namespace) -> int:
    """라운드 로빈 토너먼트를 실행하고 순위표를 출력합니다."""
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        specs: List[AgentSpec] = [
            parse_agent_spec(s) for s in split_agent_specs(args.agents)
        ]
        if len(specs) < 2:
            raise InvalidConfig("에이전트가 2개 이상 필요합니다", "agents")
        config = _match_config(args, seed)
        new_match(config, seed)
        for spec in specs:
            spec.build()
        entries = [(spec.participant, spec.build) for spec in specs]
        result = asyncio.run(
            run_tournament(
                entries,
                repeats=args.repeats,
                config=config,
                parallel=args.parallel,
                out_dir=args.out,
            )
        )
    except SnakesError as e:
        return _usage_error(e)

    print(result.standings.format_table())
    print(f"matches: {len(result.outcomes)}")
    print(f"standings: {Path(args.out) / 'standings.csv'}")
    return EXIT_OK


def _replay_paths(targets: Sequence[str]) -> List[Path]:
    paths: List[Path] = []
    for target in targets:
        path = Path(target)
        if path.is_dir():
            paths.extend(sorted(path.glob("*.jsonl")))
        elif path.is_file():
            paths.append(path)
        else:
            raise InvalidConfig(f"파일을 찾을 수 없습니다: {target}", "path")
    return paths


def cmd_verify(args: argparse.Namespace) -> int:
    """리플레이 파일(또는 디렉터리)을 재시뮬레이션으로 검증합니다."""
    try:
        paths = _replay_paths(args.paths)
    except SnakesError as e:
        return _usage_error(e)

    valid = 0
    for path in paths:
        try:
            verdict = verify_replay(read_replay_file(path))
            line = str(verdict)
            ok = verdict.is_valid
        except ParseError as e:
            line, ok = f"ParseError at line {e.line}", False
        except VersionMismatch as e:
            line, ok = f"VersionMismatch {e.found}", False
        valid += ok
        print(f"{path}: {line}")

    invalid = len(paths) - valid
    print(f"verified {len(paths)} files: {valid} valid, {invalid} invalid")
    return EXIT_OK if invalid == 0 else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snakes", description="Snakes AI 매치/토너먼트 실행기")
    parser.add_argument("--log-level", default=None, help="로그 레벨 (기본 WARNING)")
    parser.add_argument("--json-logs", action="store_true", help="JSON 형식 로그")
    sub = parser.add_subparsers(dest="command", required=True)

    match = sub.add_parser("match", help="매치 한 판 실행")
    match.add_argument("--white", required=True, help="white 에이전트 사양")
    match.add_argument("--blue", required=True, help="blue 에이전트 사양")
    _add_match_options(match)
    match.add_argument("--out", default=DEFAULT_MATCH_OUT, help="리플레이 디렉터리")
    match.add_argument("--trace", action="store_true", help="틱마다 보드 출력")
    match.set_defaults(handler=cmd_match)

    tournament = sub.add_parser("tournament", help="라운드 로빈 토너먼트")
    tournament.add_argument(
        "--agents", nargs="+", required=True, help="에이전트 사양 목록 (쉼표 구분)"
    )
    _add_match_options(tournament)
    tournament.add_argument(
        "--repeats", type=int, default=_env_default("REPEATS", "3"), help="쌍별 반복 횟수"
    )
    tournament.add_argument(
        "--parallel",
        type=int,
        default=_env_default("PARALLEL", "1"),
        help="동시 실행 매치 수",
    )
    tournament.add_argument(
        "--out", default=_env_default("OUT_DIR", DEFAULT_TOURNAMENT_OUT), help="출력 디렉터리"
    )
    tournament.set_defaults(handler=cmd_tournament)

    verify = sub.add_parser("verify", help="리플레이 검증")
    verify.add_argument("paths", nargs="+", help="리플레이 파일 또는 디렉터리")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """메인 함수"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging_config = LoggingConfig.from_env()
    if args.log_level:
        logging_config.level = args.log_level
    if args.json_logs:
        logging_config.json_output = True
    configure_logging(logging_config)

    try:
        return args.handler(args)
    except KeyboardInterrupt:
        logger.info("사용자에 의해 중단되었습니다.")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
