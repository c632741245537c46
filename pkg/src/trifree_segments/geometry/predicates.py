from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..exceptions import OutOfRange
from .primitives import Point, Probe, Rect, Segment


class PierceStatus(Enum):
    Misses = "misses"  # 与探针矩形不相交
    Pierces = "pierces"  # 穿过探针的上下两条边
    Violates = "violates"  # 相交但违反探针条件


# Violates 的原因
REASON_ENDPOINT_INSIDE = "endpoint-inside"
REASON_LEFT_BOUNDARY = "left-boundary"
REASON_NOT_CROSSING = "not-crossing"


@dataclass(frozen=True, slots=True)
class PierceOutcome:
    status: PierceStatus
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.status is PierceStatus.Pierces


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """
    三点方向：叉积 (q-p)×(r-p) 的符号
    :return: +1 逆时针，0 共线，-1 顺时针
    """
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def _on_segment(s: Segment, pt: Point) -> bool:
    """已知pt与s共线时，判断pt是否落在s的包围盒内"""
    return (
        min(s.p.x, s.q.x) <= pt.x <= max(s.p.x, s.q.x)
        and min(s.p.y, s.q.y) <= pt.y <= max(s.p.y, s.q.y)
    )


def point_on_segment(s: Segment, pt: Point) -> bool:
    return orientation(s.p, s.q, pt) == 0 and _on_segment(s, pt)


def segments_intersect(s: Segment, t: Segment) -> bool:
    """
    判断两条闭线段是否有公共点（含端点接触与共线重叠）
    """
    # 包围盒快速排除
    if (
        max(s.p.x, s.q.x) < min(t.p.x, t.q.x)
        or max(t.p.x, t.q.x) < min(s.p.x, s.q.x)
        or max(s.p.y, s.q.y) < min(t.p.y, t.q.y)
        or max(t.p.y, t.q.y) < min(s.p.y, s.q.y)
    ):
        return False

    d1 = orientation(t.p, t.q, s.p)
    d2 = orientation(t.p, t.q, s.q)
    d3 = orientation(s.p, s.q, t.p)
    d4 = orientation(s.p, s.q, t.q)

    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    return (
        (d1 == 0 and _on_segment(t, s.p))
        or (d2 == 0 and _on_segment(t, s.q))
        or (d3 == 0 and _on_segment(s, t.p))
        or (d4 == 0 and _on_segment(s, t.q))
    )


def intersection_point(s: Segment, t: Segment) -> Point | None:
    """
    两条不平行线段所在直线的交点（仅当交点在两条线段上时返回）
    平行或共线时返回None
    """
    rx, ry = s.q.x - s.p.x, s.q.y - s.p.y
    ux, uy = t.q.x - t.p.x, t.q.y - t.p.y
    denom = rx * uy - ry * ux
    if denom == 0:
        return None
    wx, wy = t.p.x - s.p.x, t.p.y - s.p.y
    a = (wx * uy - wy * ux) / denom
    b = (wx * ry - wy * rx) / denom
    if not (0 <= a <= 1 and 0 <= b <= 1):
        return None
    return Point(s.p.x + a * rx, s.p.y + a * ry)


def x_at_y(s: Segment, y: Fraction) -> Fraction:
    """
    线段上纵坐标为y的点的横坐标
    :param s: 线段
    :param y: 纵坐标（需满足 s.p.y <= y <= s.q.y）
    :return: 精确横坐标
    """
    if not (s.p.y <= y <= s.q.y):
        raise OutOfRange(y, s.id)
    return s.p.x + (y - s.p.y) * (s.q.x - s.p.x) / (s.q.y - s.p.y)


def y_at_x(s: Segment, x: Fraction) -> Fraction:
    if not (s.p.x <= x <= s.q.x):
        raise OutOfRange(x, s.id)
    return s.p.y + (x - s.p.x) * (s.q.y - s.p.y) / (s.q.x - s.p.x)


def clip_to_rect(s: Segment, r: Rect) -> tuple[Point, Point] | None:
    """
    Liang-Barsky裁剪：线段与闭矩形的交（精确）
    :return: 交集子线段的两个端点（按参数顺序），不相交时返回None
    """
    dx = s.q.x - s.p.x
    dy = s.q.y - s.p.y
    t0, t1 = Fraction(0), Fraction(1)
    for pk, qk in (
        (-dx, s.p.x - r.x0),
        (dx, r.x1 - s.p.x),
        (-dy, s.p.y - r.y0),
        (dy, r.y1 - s.p.y),
    ):
        if pk == 0:
            if qk < 0:
                return None
            continue
        t = qk / pk
        if pk < 0:
            if t > t1:
                return None
            t0 = max(t0, t)
        else:
            if t < t0:
                return None
            t1 = min(t1, t)
    return (
        Point(s.p.x + t0 * dx, s.p.y + t0 * dy),
        Point(s.p.x + t1 * dx, s.p.y + t1 * dy),
    )


def meets_left_boundary(s: Segment, r: Rect) -> bool:
    """线段是否与矩形的左边界 {x0}×[y0,y1] 相交"""
    if not (s.p.x <= r.x0 <= s.q.x):
        return False
    return r.y0 <= y_at_x(s, r.x0) <= r.y1


def segment_pierces_probe(s: Segment, probe: Probe | Rect) -> PierceOutcome:
    """
    判断线段与探针矩形的关系
    Pierces: 线段在 x > rect.x0 处穿过上下两条水平边
    Misses: 与闭矩形不相交
    Violates: 相交，但碰到左边界、端点落在闭矩形内或未贯穿
    """
    rect = probe.rect if isinstance(probe, Probe) else probe

    if clip_to_rect(s, rect) is None:
        return PierceOutcome(PierceStatus.Misses)
    if rect.contains(s.p) or rect.contains(s.q):
        return PierceOutcome(PierceStatus.Violates, REASON_ENDPOINT_INSIDE)
    if meets_left_boundary(s, rect):
        return PierceOutcome(PierceStatus.Violates, REASON_LEFT_BOUNDARY)

    if s.p.y < rect.y0 and rect.y1 < s.q.y:
        xb = x_at_y(s, rect.y0)
        xt = x_at_y(s, rect.y1)
        if rect.x0 < xb <= rect.x1 and rect.x0 < xt <= rect.x1:
            return PierceOutcome(PierceStatus.Pierces)
    return PierceOutcome(PierceStatus.Violates, REASON_NOT_CROSSING)


def rect_interior_disjoint(s: Segment, r: Rect) -> bool:
    """
    线段是否与开矩形不相交（允许接触边界）
    正斜率线段不会沿边界延伸，因此与闭矩形的交为单点时只触及边界
    """
    clipped = clip_to_rect(s, r)
    if clipped is None:
        return True
    return clipped[0] == clipped[1]


def min_x_in_band(s: Segment, r: Rect) -> Fraction | None:
    """线段与闭矩形之交的最小横坐标；不相交时返回None"""
    clipped = clip_to_rect(s, r)
    if clipped is None:
        return None
    return min(clipped[0].x, clipped[1].x)
