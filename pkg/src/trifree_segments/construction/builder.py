from dataclasses import dataclass

from .. import _logger as logger
from ..exceptions import ConstructionInvariantViolation, DegenerateRect, EmptyRoot
from ..geometry import (
    PierceStatus,
    Probe,
    ProbeKind,
    Rect,
    Segment,
    min_x_in_band,
    segment_pierces_probe,
    x_at_y,
)
from .sizes import check_k, sizes

DEFAULT_RECT = Rect(0, 0, 1, 1)


@dataclass(frozen=True)
class Construction:
    """
    第k层构造：矩形R内的线段族S_k与探针族P_k
    tilde为True时表示增广族（只有线段，没有探针）
    """

    k: int
    rect: Rect
    segments: tuple[Segment, ...]
    probes: tuple[Probe, ...] = ()
    tilde: bool = False

    def segment_by_id(self, segment_id: int) -> Segment:
        for segment in self.segments:
            if segment.id == segment_id:
                return segment
        raise KeyError(f"线段 {segment_id} 不存在")

    def pierced_segments(self, probe: Probe) -> list[Segment]:
        return [self.segment_by_id(sid) for sid in probe.pierced]

    @property
    def tree(self) -> dict[str, dict[int, tuple[int, ...]]]:
        """
        递归树溯源：线段id -> 副本路径，探针id -> (P序号, Q序号)链
        """
        return {
            "segments": {s.id: s.path for s in self.segments},
            "probes": {p.id: p.lineage for p in self.probes},
        }


def root_of(band: Rect, segments: list[Segment] | tuple[Segment, ...]) -> Rect:
    """
    计算探针的根：[x0, c']×[y0, y1]
    c' 为与带状区域相交的线段在带内的最小横坐标（无相交线段时为 band.x1）
    :param band: 探针矩形（右边界即外层矩形的右边界）
    :param segments: 线段族
    :return: 根矩形
    """
    c = band.x1
    for segment in segments:
        left = min_x_in_band(segment, band)
        if left is not None and left < c:
            c = left
    if c <= band.x0:
        logger.error(f"探针 [{band.x0}, {band.x1}]×[{band.y0}, {band.y1}] 的根为空")
        raise EmptyRoot(band.x0, c)
    return Rect(band.x0, band.y0, c, band.y1)


def _check_pierced(probe_rect: Rect, expected: list[Segment], missed: list[Segment]):
    for segment in expected:
        outcome = segment_pierces_probe(segment, probe_rect)
        if outcome.status is not PierceStatus.Pierces:
            raise ConstructionInvariantViolation(
                "探针未能贯穿应贯穿的线段",
                f"segment={segment.id}, status={outcome.status.value}, reason={outcome.reason}",
            )
    for segment in missed:
        outcome = segment_pierces_probe(segment, probe_rect)
        if outcome.status is not PierceStatus.Misses:
            raise ConstructionInvariantViolation(
                "探针触及了应避开的线段",
                f"segment={segment.id}, status={outcome.status.value}",
            )


def make_probe_pair(
    q: Probe,
    d_q: Segment,
    inner: list[Segment],
    outer: list[Segment],
    rect: Rect,
) -> tuple[Probe, Probe]:
    """
    为子探针Q生成下探针L_Q与上探针U_Q（均延伸至rect的右边界）
    :param q: 子副本中的探针Q
    :param d_q: Q的对角线
    :param inner: 被Q贯穿的子副本线段 S_P(Q)
    :param outer: 被外层探针P贯穿的线段 S(P)
    :param rect: 外层构造矩形R
    :return: (L_Q, U_Q)，pierced按线段id排序
    """
    if not inner:
        raise ConstructionInvariantViolation("子探针没有贯穿任何线段", f"probe={q.id}")

    a_q, c_q = q.rect.x0, q.rect.x1
    yb, yt = q.rect.y0, q.rect.y1
    w_q, h_q = q.rect.width, q.rect.height

    # 下探针：紧贴Q的底边，且位于对角线右侧
    x_min = min(x_at_y(s, yb) for s in inner)
    delta = min(h_q / 8, (x_min - a_q) * h_q / (4 * w_q))
    a_lower = (x_at_y(d_q, yb + 2 * delta) + x_min) / 2
    lower_rect = Rect(a_lower, yb + delta, rect.x1, yb + 2 * delta)

    # 上探针：紧贴Q的顶边，且位于子副本线段右侧
    x_max = max(x_at_y(s, yt) for s in inner)
    delta_up = min(h_q / 8, (c_q - x_max) * h_q / (4 * w_q))
    a_upper = (x_max + x_at_y(d_q, yt - 2 * delta_up)) / 2
    upper_rect = Rect(a_upper, yt - 2 * delta_up, rect.x1, yt - delta_up)

    _check_pierced(lower_rect, inner + outer, [d_q])
    _check_pierced(upper_rect, [d_q] + outer, inner)
    if not lower_rect.y1 < upper_rect.y0:
        raise ConstructionInvariantViolation("上下探针相交", f"probe={q.id}")

    lower_set = inner + outer
    upper_set = [d_q] + outer
    lower = Probe(
        rect=lower_rect,
        root=root_of(lower_rect, lower_set),
        kind=ProbeKind.Lower,
        pierced=tuple(sorted(s.id for s in lower_set)),
    )
    upper = Probe(
        rect=upper_rect,
        root=root_of(upper_rect, upper_set),
        kind=ProbeKind.Upper,
        pierced=tuple(sorted(s.id for s in upper_set)),
    )
    return lower, upper


class ConstructionBuilder:
    """
    构造器：按归纳步骤生成 (S_k, P_k)
    """

    def __init__(self):
        self.__k: int = 1
        self.__rect: Rect = DEFAULT_RECT
        self.__cross_check: bool = True

    def set_level(self, k: int) -> "ConstructionBuilder":
        """
        设置层数k
        :param k: 层数（k >= 1）
        :return: ConstructionBuilder对象
        """
        self.__k = check_k(k)
        return self

    def set_rect(self, rect: Rect) -> "ConstructionBuilder":
        """
        设置构造矩形R
        :param rect: 正面积的轴对齐矩形
        :return: ConstructionBuilder对象
        """
        if not isinstance(rect, Rect):
            raise DegenerateRect(rect)
        self.__rect = rect
        return self

    def set_cross_check(self, enabled: bool = True) -> "ConstructionBuilder":
        """
        设置是否在每一层对全部探针重新计算贯穿集合
        :param enabled: 是否启用（默认为True）
        :return: ConstructionBuilder对象
        """
        self.__cross_check = enabled
        return self

    def build(self) -> Construction:
        """
        构建Construction对象
        :return: Construction对象
        """
        construction = self._build(self.__k, self.__rect)
        table = sizes(self.__k)
        if len(construction.segments) != table.s_k or len(construction.probes) != table.p_k:
            raise ConstructionInvariantViolation(
                "构造规模与递推表不符",
                f"segments={len(construction.segments)}/{table.s_k}, "
                f"probes={len(construction.probes)}/{table.p_k}",
            )
        logger.info(
            f"已构建 k={self.__k}: {len(construction.segments)} 条线段, "
            f"{len(construction.probes)} 个探针"
        )
        return construction

    def _build(self, k: int, rect: Rect) -> Construction:
        if k == 1:
            return self._build_base(rect)

        launch = self._build(k - 1, rect)
        segments: list[Segment] = [s.renumbered(s.id, (0,)) for s in launch.segments]
        probes: list[Probe] = []

        for i, probe in enumerate(launch.probes):
            # 子副本放在探针根的居中半尺寸子矩形内
            child = self._build(k - 1, probe.root.centered_half())
            offset = len(segments)
            segments.extend(s.renumbered(offset + s.id, (i + 1,)) for s in child.segments)
            outer = [segments[sid] for sid in probe.pierced]

            for j, q in enumerate(child.probes):
                q = q.renumbered(q.id, segment_offset=offset)
                d_q = Segment.diagonal_of(q.rect, id=len(segments), path=(i + 1, j + 1))
                segments.append(d_q)
                inner = [segments[sid] for sid in q.pierced]
                lower, upper = make_probe_pair(q, d_q, inner, outer, rect)
                probes.append(lower.renumbered(len(probes), lineage=(i, j) + q.lineage))
                probes.append(upper.renumbered(len(probes), lineage=(i, j) + q.lineage))

        construction = Construction(k=k, rect=rect, segments=tuple(segments), probes=tuple(probes))
        if self.__cross_check:
            _cross_check(construction)
        logger.debug(f"第{k}层: {len(segments)} 条线段, {len(probes)} 个探针")
        return construction

    @staticmethod
    def _build_base(rect: Rect) -> Construction:
        inner = rect.centered_half()
        p, q = inner.diagonal_points()
        segment = Segment(p, q, id=0)

        y_mid = (rect.y0 + rect.y1) / 2
        half_band = rect.height / 16
        band = Rect(rect.x0 + rect.width / 3, y_mid - half_band, rect.x1, y_mid + half_band)
        _check_pierced(band, [segment], [])

        probe = Probe(rect=band, root=root_of(band, [segment]), pierced=(0,))
        return Construction(k=1, rect=rect, segments=(segment,), probes=(probe,))


def _cross_check(construction: Construction):
    """用几何重新计算每个探针的贯穿集合，并与记录比对"""
    for probe in construction.probes:
        pierced = []
        for segment in construction.segments:
            outcome = segment_pierces_probe(segment, probe)
            if outcome.status is PierceStatus.Violates:
                raise ConstructionInvariantViolation(
                    "线段违反探针条件",
                    f"probe={probe.id}, segment={segment.id}, reason={outcome.reason}",
                )
            if outcome.status is PierceStatus.Pierces:
                pierced.append(segment.id)
        if tuple(pierced) != probe.pierced:
            raise ConstructionInvariantViolation(
                "探针的贯穿集合与几何不符", f"probe={probe.id}"
            )


def build(k: int, rect: Rect | None = None) -> Construction:
    """
    构建 (S_k, P_k)
    :param k: 层数（k >= 1）
    :param rect: 构造矩形（默认为[0,1]×[0,1]）
    :return: Construction
    """
    builder = ConstructionBuilder().set_level(k)
    if rect is not None:
        builder.set_rect(rect)
    return builder.build()

