from .primitives import (
    Point,
    Probe,
    ProbeKind,
    Rational,
    Rect,
    Segment,
    SegmentRole,
    format_rational,
    parse_rational,
    to_rational,
)
from .predicates import (
    PierceOutcome,
    PierceStatus,
    clip_to_rect,
    intersection_point,
    meets_left_boundary,
    min_x_in_band,
    orientation,
    point_on_segment,
    rect_interior_disjoint,
    segment_pierces_probe,
    segments_intersect,
    x_at_y,
    y_at_x,
)

__all__ = [
    "Point",
    "Probe",
    "ProbeKind",
    "Rational",
    "Rect",
    "Segment",
    "SegmentRole",
    "format_rational",
    "parse_rational",
    "to_rational",
    "PierceOutcome",
    "PierceStatus",
    "clip_to_rect",
    "intersection_point",
    "meets_left_boundary",
    "min_x_in_band",
    "orientation",
    "point_on_segment",
    "rect_interior_disjoint",
    "segment_pierces_probe",
    "segments_intersect",
    "x_at_y",
    "y_at_x",
]
