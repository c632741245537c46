from collections import defaultdict
from itertools import combinations

from .. import _logger as logger
from ..construction import Construction, augment_tilde, build, sizes
from ..construction.sizes import check_k
from ..exceptions import TooLarge
from ..geometry import (
    PierceStatus,
    Point,
    Probe,
    Segment,
    format_rational,
    intersection_point,
    meets_left_boundary,
    min_x_in_band,
    point_on_segment,
    rect_interior_disjoint,
    segment_pierces_probe,
    segments_intersect,
)
from ..graph import intersection_graph, is_triangle_free
from ..graph.intersection import EXHAUSTIVE_TRIANGLE_LIMIT
from .partitions import iter_proper_partitions
from .report import VerificationReport

# 引理性质穷举检查允许的最大线段数（k <= 3）
LEMMA_MAX_SEGMENTS = 13


def _fmt_point(pt: Point) -> str:
    return f"({format_rational(pt.x)},{format_rational(pt.y)})"


def _geometric_pierced(c: Construction, probe: Probe) -> list[int]:
    """由几何重新计算探针贯穿的线段（不使用构造记录）"""
    return [
        s.id
        for s in c.segments
        if segment_pierces_probe(s, probe).status is PierceStatus.Pierces
    ]


def _expected_counts(c: Construction) -> tuple[int, int] | None:
    """
    按c.k计算应有的(线段数, 探针数)
    p_k = 2^(2^(k-1)-1) 增长极快：k超过实际规模的位数时必然不符，直接返回None
    """
    if c.k > max(len(c.segments), len(c.probes), 1).bit_length() + 2:
        return None
    table = sizes(c.k)
    if c.tilde:
        return table.s_k + table.p_k, 0
    return table.s_k, table.p_k


def _size_mismatch(c: Construction) -> str | None:
    """规模与k相符时返回None，否则返回反例描述"""
    expected = _expected_counts(c)
    n, m = len(c.segments), len(c.probes)
    if expected is None:
        return f"k={c.k} segments={n} probes={m} too-few-for-k"
    if (n, m) != expected:
        return f"k={c.k} segments={n}/{expected[0]} probes={m}/{expected[1]}"
    return None


def verify_family_size(c: Construction) -> VerificationReport:
    """线段数与探针数必须符合递推表（增广族为 s_k + p_k 条线段、无探针）"""
    mismatch = _size_mismatch(c)
    return VerificationReport().add(
        "family-size",
        mismatch is None,
        mismatch or f"k={c.k} segments={len(c.segments)} probes={len(c.probes)}",
    )


def verify_probe_axioms(c: Construction) -> VerificationReport:
    """
    逐一检查探针定义的四个条件、贯穿列表与根
    """
    report = VerificationReport()
    rect = c.rect

    outside = next(
        (s for s in c.segments if not (rect.contains_strictly(s.p) and rect.contains_strictly(s.q))),
        None,
    )
    report.add(
        "segments-inside",
        outside is None,
        f"segment={outside.id}" if outside else f"segments={len(c.segments)}",
    )

    failures: dict[str, str] = {}

    def fail(name: str, witness: str):
        failures.setdefault(name, witness)

    for probe in c.probes:
        r = probe.rect
        if not (
            rect.x0 < r.x0 < rect.x1
            and rect.y0 < r.y0 < r.y1 < rect.y1
            and r.x1 == rect.x1
        ):
            fail("condition-1", f"probe={probe.id}")

        meeting: list[Segment] = []
        pierced: list[int] = []
        for s in c.segments:
            if meets_left_boundary(s, r):
                fail("condition-2", f"probe={probe.id} segment={s.id}")
            if r.contains(s.p) or r.contains(s.q):
                fail("condition-3", f"probe={probe.id} segment={s.id}")
            outcome = segment_pierces_probe(s, probe)
            if outcome.status is not PierceStatus.Misses:
                meeting.append(s)
            if outcome.status is PierceStatus.Pierces:
                pierced.append(s.id)
            elif outcome.status is PierceStatus.Violates:
                fail("pierced-lists", f"probe={probe.id} segment={s.id} reason={outcome.reason}")

        for s, t in combinations(meeting, 2):
            if segments_intersect(s, t):
                fail("condition-4", f"probe={probe.id} segments={s.id},{t.id}")
                break

        if sorted(pierced) != sorted(probe.pierced):
            fail("pierced-lists", f"probe={probe.id} recorded={list(probe.pierced)} actual={pierced}")

        blocking = next((s for s in c.segments if not rect_interior_disjoint(s, probe.root)), None)
        if blocking is not None:
            fail("root-disjoint", f"probe={probe.id} segment={blocking.id}")

        # 根的右边界必须恰好碰到某条线段（无相交线段时延伸到R的右边界）
        lefts = [x for s in meeting if (x := min_x_in_band(s, r)) is not None]
        expected = min(lefts) if lefts else r.x1
        if probe.root.x1 != expected:
            fail(
                "root-maximal",
                f"probe={probe.id} root.x1={format_rational(probe.root.x1)} "
                f"expected={format_rational(expected)}",
            )

    for name in (
        "condition-1",
        "condition-2",
        "condition-3",
        "condition-4",
        "pierced-lists",
        "root-disjoint",
        "root-maximal",
    ):
        report.add(name, name not in failures, failures.get(name, f"probes={len(c.probes)}"))
    return report


def verify_disjoint_probes(c: Construction) -> VerificationReport:
    """探针两两不交，以及更强的纵向区间两两不交"""
    report = VerificationReport()

    overlap = None
    for a, b in combinations(c.probes, 2):
        ra, rb = a.rect, b.rect
        if ra.x0 <= rb.x1 and rb.x0 <= ra.x1 and ra.y0 <= rb.y1 and rb.y0 <= ra.y1:
            overlap = (a.id, b.id)
            break
    report.add(
        "probes-disjoint",
        overlap is None,
        f"probes={overlap[0]},{overlap[1]}" if overlap else f"probes={len(c.probes)}",
    )

    band_overlap = None
    ordered = sorted(c.probes, key=lambda p: (p.rect.y0, p.id))
    for a, b in zip(ordered, ordered[1:]):
        if not a.rect.y1 < b.rect.y0:
            band_overlap = (a.id, b.id)
            break
    report.add(
        "probe-bands-disjoint",
        band_overlap is None,
        f"probes={band_overlap[0]},{band_overlap[1]}" if band_overlap else "",
    )
    return report


def verify_general_position(segments: list[Segment] | tuple[Segment, ...]) -> VerificationReport:
    """
    一般位置：相交的线段对只在彼此内部横截相交，且不存在三线共点
    """
    report = VerificationReport()
    endpoint_touch = None
    improper = None
    crossings: dict[Point, set[int]] = defaultdict(set)

    for s, t in combinations(segments, 2):
        if not segments_intersect(s, t):
            continue
        for a, b in ((s, t), (t, s)):
            for end in (a.p, a.q):
                if endpoint_touch is None and point_on_segment(b, end):
                    endpoint_touch = f"segments={a.id},{b.id} point={_fmt_point(end)}"
        point = intersection_point(s, t)
        if point is None:
            if improper is None:
                improper = f"segments={s.id},{t.id} overlap"
            continue
        crossings[point].update((s.id, t.id))

    concurrent = next(((pt, ids) for pt, ids in crossings.items() if len(ids) >= 3), None)

    report.add("endpoints-clear", endpoint_touch is None, endpoint_touch or "")
    report.add("proper-crossings", improper is None, improper or f"crossings={len(crossings)}")
    report.add(
        "no-concurrency",
        concurrent is None,
        f"point={_fmt_point(concurrent[0])} segments={','.join(map(str, sorted(concurrent[1])))}"
        if concurrent
        else "",
    )
    return report


def verify_lemma_property(c: Construction, max_segments: int = LEMMA_MAX_SEGMENTS) -> VerificationReport:
    """
    穷举S_k的全部合法染色划分，检查每一个划分下都存在某个探针，
    其贯穿的线段至少落在k个不同的块中
    """
    n = len(c.segments)
    mismatch = _size_mismatch(c)
    if mismatch is not None:
        return VerificationReport().add("lemma-property", False, mismatch)
    if n > max_segments:
        logger.error(f"线段数 {n} 超过引理性质穷举上限 {max_segments}")
        raise TooLarge(n, max_segments)

    g = intersection_graph(c.segments)
    index = {s.id: i for i, s in enumerate(c.segments)}
    probe_sets = [[index[sid] for sid in _geometric_pierced(c, probe)] for probe in c.probes]
    k = c.k

    def settled(blocks: list[int], _i: int) -> bool:
        for vertices in probe_sets:
            if len({blocks[v] for v in vertices if blocks[v] != -1}) >= k:
                return True
        return False

    counterexample = next(iter_proper_partitions(g.neighbor_masks, settled), None)
    report = VerificationReport()
    if counterexample is None:
        report.add("lemma-property", True, f"k={k} segments={n} probes={len(c.probes)}")
    else:
        witness = ",".join(map(str, counterexample))
        report.add("lemma-property", False, f"k={k} partition={witness}")
    return report


def verify_size_bounds(max_k: int) -> VerificationReport:
    """
    检查 p_k = 2^(2^(k-1)-1) <= s_k <= 2^(2^(k-1)) - 1 与 |S̃_k| = s_k + p_k
    小规模时（k <= 3）以实际构造的增广族规模交叉验证
    """
    check_k(max_k)
    table = sizes(max_k)
    report = VerificationReport()
    for i in range(1, max_k + 1):
        s_i, p_i = table.s[i - 1], table.p[i - 1]
        exponent = 2 ** (i - 1)
        report.add(f"closed-form-p[k={i}]", p_i == 2 ** (exponent - 1), f"p={p_i}")
        report.add(f"p-le-s[k={i}]", p_i <= s_i, f"s={s_i}")
        report.add(f"s-upper[k={i}]", s_i <= 2**exponent - 1, f"s={s_i}")
        if i <= 3:
            built = len(augment_tilde(build(i)).segments)
            report.add(f"tilde-size[k={i}]", built == table.tilde_size(i), f"size={built}")
    return report


def heaviest_probe(c: Construction, colors: dict[int, int]) -> tuple[int, int]:
    """
    对S_k的一个染色（线段id -> 颜色），返回其在贯穿线段上使用颜色最多的探针
    :return: (探针id, 颜色数)
    """
    best = (-1, 0)
    for probe in c.probes:
        used = len({colors[sid] for sid in _geometric_pierced(c, probe)})
        if used > best[1]:
            best = (probe.id, used)
    return best


def verify_construction(
    c: Construction,
    level: str = "axioms",
    max_lemma_segments: int = LEMMA_MAX_SEGMENTS,
    triangle_limit: int = EXHAUSTIVE_TRIANGLE_LIMIT,
) -> VerificationReport:
    """
    组合校验
    :param level: "axioms"（探针条件、探针不交、一般位置）或 "full"（另加无三角形与引理性质）
    :param triangle_limit: 无三角形检查使用穷举三元组的最大顶点数
    """
    if level not in ("axioms", "full"):
        raise ValueError(f"未知的校验级别: {level}")

    report = VerificationReport()
    report.extend(verify_family_size(c))
    report.extend(verify_probe_axioms(c))
    report.extend(verify_disjoint_probes(c))
    report.extend(verify_general_position(c.segments))

    if level == "full":
        check = is_triangle_free(intersection_graph(c.segments), exhaustive_limit=triangle_limit)
        report.add(
            "triangle-free",
            check.triangle_free,
            f"triangle={check.witness}" if check.witness else f"method={check.method}",
        )
        if not c.tilde and report.overall:
            tilde_check = is_triangle_free(
                intersection_graph(augment_tilde(c).segments), exhaustive_limit=triangle_limit
            )
            report.add(
                "tilde-triangle-free",
                tilde_check.triangle_free,
                f"triangle={tilde_check.witness}" if tilde_check.witness else "",
            )
        if not c.tilde and len(c.segments) <= max_lemma_segments:
            report.extend(verify_lemma_property(c, max_lemma_segments))
        elif not c.tilde:
            logger.warning(f"线段数 {len(c.segments)} 超过穷举上限，跳过引理性质检查")

    if report.overall:
        logger.success(f"校验通过（{level}）：共 {len(report.checks)} 项")
    else:
        logger.warning(f"校验失败（{level}）：{len(report.failures())} 项未通过")
    return report
