import json
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, ValidationError

from .. import _logger as logger
from ..construction import Construction
from ..exceptions import DegenerateRect, InvalidSegment, ParseError
from ..geometry import (
    Point,
    Probe,
    ProbeKind,
    Rect,
    Segment,
    SegmentRole,
    format_rational,
    parse_rational,
)

SCHEMA_VERSION = 1  # 当前的线段族文件格式版本


class PointRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    x: StrictStr  # 规范有理数文本
    y: StrictStr


class RectRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    x0: StrictStr
    y0: StrictStr
    x1: StrictStr
    y1: StrictStr


class SegmentRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: StrictInt
    role: Literal["base", "diagonal"]
    path: list[StrictInt]  # 递归树中的副本路径
    p: PointRecord  # 左下端点
    q: PointRecord  # 右上端点


class ProbeRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: StrictInt
    kind: Literal["base", "lower", "upper"]
    rect: RectRecord
    root: RectRecord
    pierced: list[StrictInt]  # 被贯穿的线段id
    lineage: list[StrictInt]  # (P序号, Q序号)


class FamilyFile(BaseModel):
    """
    线段族文件（JSON）
    字段顺序即输出顺序，有理数一律以 "num/den" 字符串保存
    """

    model_config = ConfigDict(extra="forbid")

    schema_version: StrictInt
    k: StrictInt = Field(ge=1)
    tilde: bool
    rect: RectRecord
    segments: list[SegmentRecord]
    probes: list[ProbeRecord]


def _point_record(pt: Point) -> PointRecord:
    return PointRecord(x=format_rational(pt.x), y=format_rational(pt.y))


def _rect_record(r: Rect) -> RectRecord:
    return RectRecord(
        x0=format_rational(r.x0),
        y0=format_rational(r.y0),
        x1=format_rational(r.x1),
        y1=format_rational(r.y1),
    )


def _to_point(record: PointRecord) -> Point:
    return Point(parse_rational(record.x), parse_rational(record.y))


def _to_rect(record: RectRecord, field: str) -> Rect:
    x0, y0, x1, y1 = (parse_rational(v) for v in (record.x0, record.y0, record.x1, record.y1))
    try:
        return Rect(x0, y0, x1, y1)
    except DegenerateRect as e:
        raise ParseError(str(e), field=field) from e


def _to_segment(record: SegmentRecord, index: int) -> Segment:
    p, q = _to_point(record.p), _to_point(record.q)
    try:
        return Segment(p, q, id=record.id, role=SegmentRole(record.role), path=tuple(record.path))
    except InvalidSegment as e:
        raise ParseError(str(e), field=f"segments.{index}") from e


def to_family_file(c: Construction) -> FamilyFile:
    return FamilyFile(
        schema_version=SCHEMA_VERSION,
        k=c.k,
        tilde=c.tilde,
        rect=_rect_record(c.rect),
        segments=[
            SegmentRecord(
                id=s.id,
                role=s.role.value,
                path=list(s.path),
                p=_point_record(s.p),
                q=_point_record(s.q),
            )
            for s in c.segments
        ],
        probes=[
            ProbeRecord(
                id=probe.id,
                kind=probe.kind.value,
                rect=_rect_record(probe.rect),
                root=_rect_record(probe.root),
                pierced=list(probe.pierced),
                lineage=list(probe.lineage),
            )
            for probe in c.probes
        ],
    )


def from_family_file(family: FamilyFile) -> Construction:
    """
    将文件模型还原为Construction
    非规范的有理数文本（如 "2/4"、"1/-3"）抛出ValueError
    """
    if family.schema_version != SCHEMA_VERSION:
        raise ParseError(
            f"不支持的文件格式版本 {family.schema_version}（当前版本为 {SCHEMA_VERSION}）",
            field="schema_version",
        )
    if family.tilde and family.probes:
        raise ParseError("增广族不应包含探针", field="probes")

    segments = tuple(_to_segment(record, index) for index, record in enumerate(family.segments))
    known = {s.id for s in segments}
    if len(known) != len(segments):
        raise ParseError("线段id重复", field="segments")

    probes = []
    for index, record in enumerate(family.probes):
        missing = [sid for sid in record.pierced if sid not in known]
        if missing:
            raise ParseError(f"探针引用了不存在的线段 {missing}", field=f"probes.{index}.pierced")
        rect = _to_rect(record.rect, f"probes.{index}.rect")
        root = _to_rect(record.root, f"probes.{index}.root")
        try:
            probe = Probe(
                rect=rect,
                root=root,
                kind=ProbeKind(record.kind),
                id=record.id,
                pierced=tuple(record.pierced),
                lineage=tuple(record.lineage),
            )
        except ValueError as e:
            raise ParseError(str(e), field=f"probes.{index}.root") from e
        probes.append(probe)

    return Construction(
        k=family.k,
        rect=_to_rect(family.rect, "rect"),
        segments=segments,
        probes=tuple(probes),
        tilde=family.tilde,
    )


def emit_family(c: Construction) -> str:
    """
    以规范形式输出线段族：固定字段顺序，两空格缩进，以换行结尾
    """
    data = to_family_file(c).model_dump(mode="json")
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def parse_family(text: str) -> Construction:
    """
    解析线段族文件（emit_family的逆）
    :param text: 文件内容
    :return: Construction
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        logger.error(f"线段族文件不是合法的JSON：第{e.lineno}行第{e.colno}列 {e.msg}")
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e

    try:
        family = FamilyFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        logger.error(f"线段族文件字段 '{field}' 不合法：{first['msg']}")
        raise ParseError(first["msg"], field=field) from e

    return from_family_file(family)
