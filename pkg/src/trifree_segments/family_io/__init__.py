from .family_file import (
    SCHEMA_VERSION,
    FamilyFile,
    ProbeRecord,
    RectRecord,
    SegmentRecord,
    emit_family,
    from_family_file,
    parse_family,
    to_family_file,
)
from .svg import RenderOptions, render_svg

__all__ = [
    "SCHEMA_VERSION",
    "FamilyFile",
    "ProbeRecord",
    "RectRecord",
    "SegmentRecord",
    "emit_family",
    "from_family_file",
    "parse_family",
    "to_family_file",
    "RenderOptions",
    "render_svg",
]
