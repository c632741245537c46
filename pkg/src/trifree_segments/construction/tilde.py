from .. import _logger as logger
from ..exceptions import ConstructionInvariantViolation
from ..geometry import Point, Segment, SegmentRole, segments_intersect, x_at_y
from .builder import Construction


def augment_tilde(c: Construction) -> Construction:
    """
    生成增广族：S_k 加上每个顶层探针的对角线
    对角线从探针左下角出发，右端点收缩到被贯穿线段顶边交点与R右边界的中点，
    从而严格位于R内部，且只与被贯穿的线段相交
    :param c: 合法的Construction（非增广族）
    :return: 只含线段的增广族
    """
    if c.tilde:
        raise ValueError("该线段族已经是增广族")

    segments = list(c.segments)
    next_id = max((s.id for s in segments), default=-1) + 1

    for probe in c.probes:
        pierced = c.pierced_segments(probe)
        top = probe.rect.y1
        if pierced:
            x_top = max(x_at_y(s, top) for s in pierced)
        else:
            x_top = probe.rect.x0
        x_end = (x_top + c.rect.x1) / 2

        diagonal = Segment(
            Point(probe.rect.x0, probe.rect.y0),
            Point(x_end, top),
            id=next_id,
            role=SegmentRole.Diagonal,
            path=(probe.id,),
        )
        expected = set(probe.pierced)
        for other in segments:
            if segments_intersect(diagonal, other) != (other.id in expected):
                logger.error(f"探针 {probe.id} 的对角线与线段 {other.id} 的相交关系不符")
                raise ConstructionInvariantViolation(
                    "增广对角线与未被贯穿的线段相交或错过了被贯穿的线段",
                    f"probe={probe.id}, segment={other.id}",
                )
        segments.append(diagonal)
        next_id += 1

    logger.info(f"已生成增广族 k={c.k}: {len(segments)} 条线段")
    return Construction(k=c.k, rect=c.rect, segments=tuple(segments), probes=(), tilde=True)
