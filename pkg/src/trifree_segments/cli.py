import argparse
import sys
from pathlib import Path
from typing import Sequence

from loguru import logger as _root_logger
from packaging.version import InvalidVersion

from . import init_logger
from .config import ModuleConfig, load_config
from .construction import augment_tilde, build, sizes
from .exceptions import (
    ConstructionInvariantViolation,
    InvalidBudget,
    InvalidK,
    ParseError,
    TooLarge,
)
from .family_io import RenderOptions, emit_family, parse_family, render_svg
from .geometry import Rect, to_rational
from .graph import (
    IntersectionGraph,
    Verdict,
    chromatic_number,
    clique_number,
    export_dimacs,
    greedy_coloring,
    intersection_graph,
    is_critical,
    is_k_colorable,
    parse_dimacs,
)
from .verification import heaviest_probe, verify_construction

# 退出码
EXIT_OK = 0
EXIT_USAGE = 2  # 参数或输入文件有误
EXIT_VERIFY_FAILED = 3  # 校验未通过
EXIT_ASSERT_FAILED = 4  # --assert-eq 断言不成立
EXIT_BUDGET = 5  # 时间预算耗尽

DEFAULT_CONFIG_PATH = "trifree_config.toml"
DIMACS_SUFFIXES = (".dimacs", ".col")


class UsageError(Exception):
    """命令行参数或输入内容有误（退出码2）"""


def _setup_logging(level: str):
    _root_logger.remove()
    _root_logger.add(sys.stderr, level=level)
    init_logger(_root_logger)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"无法读取文件 {path}: {e}") from e


def _write_text(path: str, text: str):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"无法写入文件 {path}: {e}") from e


def _load_graph(path: str) -> IntersectionGraph:
    """按后缀读取DIMACS文件或线段族文件"""
    text = _read_text(path)
    if path.lower().endswith(DIMACS_SUFFIXES):
        return parse_dimacs(text)
    return intersection_graph(parse_family(text).segments)


def _budget(args: argparse.Namespace, config: ModuleConfig) -> float:
    return config.solver.budget if args.budget is None else args.budget


def _workers(args: argparse.Namespace, config: ModuleConfig) -> int:
    return config.solver.workers if args.workers is None else args.workers


def cmd_sizes(args: argparse.Namespace, config: ModuleConfig) -> int:
    table = sizes(args.K)
    print("k s_k p_k tilde")
    for i in range(1, table.k + 1):
        print(f"{i} {table.s[i - 1]} {table.p[i - 1]} {table.tilde_size(i)}")
    return EXIT_OK


def cmd_build(args: argparse.Namespace, config: ModuleConfig) -> int:
    values = args.rect if args.rect is not None else config.build.rect
    try:
        rect = Rect(*(to_rational(v) for v in values))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"非法的构造矩形 {values}: {e}") from e

    family = build(args.k, rect)
    if args.tilde:
        family = augment_tilde(family)
    _write_text(args.output, emit_family(family))
    print(f"segments={len(family.segments)} probes={len(family.probes)} tilde={str(family.tilde).lower()}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: ModuleConfig) -> int:
    family = parse_family(_read_text(args.file))
    report = verify_construction(
        family,
        args.level,
        max_lemma_segments=config.verification.lemma_max_segments,
        triangle_limit=config.solver.exhaustive_triangle_limit,
    )
    sys.stdout.write(report.render_lines())

    if family.probes:
        coloring = greedy_coloring(intersection_graph(family.segments))
        colors = {s.id: coloring.colors[i] for i, s in enumerate(family.segments)}
        probe_id, used = heaviest_probe(family, colors)
        print(f"HEAVIEST probe={probe_id} colors={used} palette={coloring.palette}")

    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_graph(args: argparse.Namespace, config: ModuleConfig) -> int:
    g = intersection_graph(parse_family(_read_text(args.file)).segments)
    _write_text(args.dimacs, export_dimacs(g))
    print(f"vertices={g.n} edges={g.edge_count}")
    return EXIT_OK


def cmd_chi(args: argparse.Namespace, config: ModuleConfig) -> int:
    g = _load_graph(args.file)
    workers = _workers(args, config)
    result = chromatic_number(
        g,
        budget=_budget(args, config),
        workers=workers,
        check_interval=config.solver.check_interval,
    )
    print(f"omega={clique_number(g)}")
    if result.exact:
        print(f"chi={result.value}")
    else:
        print(f"chi=[{result.lower},{result.upper}]")
    print(f"deterministic={str(workers <= 1).lower()}")

    if args.assert_eq is not None:
        if not result.lower <= args.assert_eq <= result.upper:
            print(f"ASSERT chi={args.assert_eq} FAIL")
            return EXIT_ASSERT_FAILED
        if not result.exact:
            return EXIT_BUDGET
        print(f"ASSERT chi={args.assert_eq} PASS")
    elif not result.exact:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_critical(args: argparse.Namespace, config: ModuleConfig) -> int:
    g = _load_graph(args.file)
    budget = _budget(args, config)
    workers = _workers(args, config)

    # 前置条件：图本身不可k-染色
    whole = is_k_colorable(
        g, args.k, budget=budget, workers=workers, check_interval=config.solver.check_interval
    )
    if whole.verdict is Verdict.Unknown:
        print(f"CHECK not-{args.k}-colorable UNKNOWN")
        return EXIT_BUDGET
    print(f"CHECK not-{args.k}-colorable {'PASS' if whole.verdict is Verdict.No else 'FAIL'}")

    report = is_critical(
        g, args.k, budget=budget, workers=workers, check_interval=config.solver.check_interval
    )
    done = sum(v is Verdict.Yes for v in report.verdicts)
    failing = report.failing_vertices()
    status = "PASS" if report.critical else ("UNKNOWN" if not report.complete else "FAIL")
    line = f"CHECK deletions {status} {done}/{g.n}"
    if failing:
        line += f" failing={','.join(map(str, failing))}"
    print(line)

    if whole.verdict is Verdict.Yes or (report.complete and not report.critical):
        return EXIT_VERIFY_FAILED
    if not report.complete:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_render(args: argparse.Namespace, config: ModuleConfig) -> int:
    family = parse_family(_read_text(args.file))
    rc = config.render
    options = RenderOptions(
        show_probes=args.show_probes,
        show_roots=args.show_roots,
        stroke_scale=rc.stroke_scale if args.stroke_scale is None else args.stroke_scale,
        highlight_diagonals=args.highlight_diagonals,
        canvas_width=rc.canvas_width,
        canvas_height=rc.canvas_height,
        significant_digits=rc.significant_digits,
        segment_color=rc.segment_color,
        diagonal_color=rc.diagonal_color,
        probe_color=rc.probe_color,
        root_color=rc.root_color,
    )
    _write_text(args.output, render_svg(family, options))
    return EXIT_OK


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"不是数字: {text}") from e
    if not value > 0:
        raise argparse.ArgumentTypeError(f"必须为正数: {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"不是整数: {text}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"必须为正整数: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree-segments",
        description="无三角形、高色数的线段族：构造、校验、染色与绘图",
    )
    parser.add_argument("--config", default=DEFAULT_CONFIG_PATH, help="TOML配置文件路径")
    parser.add_argument("-v", "--verbose", action="store_true", help="输出DEBUG级别日志")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_sizes = subparsers.add_parser("sizes", help="输出 s_i, p_i 与增广族规模")
    p_sizes.add_argument("K", type=_positive_int)
    p_sizes.set_defaults(func=cmd_sizes)

    p_build = subparsers.add_parser("build", help="构建 (S_k, P_k) 并写入线段族文件")
    p_build.add_argument("-k", type=_positive_int, required=True)
    p_build.add_argument("--rect", nargs=4, metavar=("X0", "Y0", "X1", "Y1"), default=None)
    p_build.add_argument("--tilde", action="store_true", help="输出增广族 S̃_k")
    p_build.add_argument("-o", "--output", required=True)
    p_build.set_defaults(func=cmd_build)

    p_verify = subparsers.add_parser("verify", help="校验线段族文件")
    p_verify.add_argument("file")
    p_verify.add_argument("--level", choices=("axioms", "full"), default="axioms")
    p_verify.set_defaults(func=cmd_verify)

    p_graph = subparsers.add_parser("graph", help="导出相交图（DIMACS）")
    p_graph.add_argument("file")
    p_graph.add_argument("--dimacs", required=True)
    p_graph.set_defaults(func=cmd_graph)

    p_chi = subparsers.add_parser("chi", help="计算色数")
    p_chi.add_argument("file", help="线段族文件或 .dimacs/.col 文件")
    p_chi.add_argument("--budget", type=_positive_float, default=None, help="时间预算（秒）")
    p_chi.add_argument("--assert-eq", type=int, default=None, dest="assert_eq")
    p_chi.add_argument("--workers", type=_positive_int, default=None)
    p_chi.set_defaults(func=cmd_chi)

    p_critical = subparsers.add_parser("critical", help="检查 (k+1)-临界性")
    p_critical.add_argument("file", help="线段族文件或 .dimacs/.col 文件")
    p_critical.add_argument("-k", type=int, required=True)
    p_critical.add_argument("--budget", type=_positive_float, default=None, help="时间预算（秒）")
    p_critical.add_argument("--workers", type=_positive_int, default=None)
    p_critical.set_defaults(func=cmd_critical)

    p_render = subparsers.add_parser("render", help="渲染为SVG")
    p_render.add_argument("file")
    p_render.add_argument("-o", "--output", required=True)
    p_render.add_argument("--show-probes", action="store_true")
    p_render.add_argument("--show-roots", action="store_true")
    p_render.add_argument("--highlight-diagonals", action="store_true")
    p_render.add_argument("--stroke-scale", type=_positive_float, default=None)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    _setup_logging("DEBUG" if args.verbose else "INFO")
    try:
        config = load_config(args.config)
    except (KeyError, ValueError, InvalidVersion) as e:
        _root_logger.error(f"配置文件加载失败: {e}")
        return EXIT_USAGE
    if not args.verbose:
        _setup_logging(config.logging.level)

    try:
        return args.func(args, config)
    except (UsageError, ParseError, InvalidK, InvalidBudget, TooLarge) as e:
        _root_logger.error(str(e))
        return EXIT_USAGE
    except ConstructionInvariantViolation as e:
        _root_logger.error(f"构造不变量被破坏: {e}")
        return EXIT_VERIFY_FAILED
    except ValueError as e:
        # 非规范有理数、非法线段或矩形等输入错误
        _root_logger.error(f"输入内容有误: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
