import re
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from ..exceptions import DegenerateRect, InvalidSegment

# 所有坐标均为精确有理数（规范形式由Fraction维护：分母为正且分子分母互素）
type Rational = Fraction

_RATIONAL_PATTERN = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def to_rational(value: Fraction | int | str) -> Fraction:
    """
    将整数/字符串/Fraction转换为精确有理数（拒绝浮点数）
    :param value: 输入值
    :return: Fraction
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"坐标必须是精确有理数，不接受 {type(value).__name__}")
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """
    解析规范形式的有理数字符串（"n" 或 "n/d"，最简且分母为正）
    :param text: 有理数字符串
    :return: Fraction
    """
    if not isinstance(text, str) or not _RATIONAL_PATTERN.match(text):
        raise ValueError(f"'{text}' 不是合法的有理数表示")
    value = Fraction(text)
    if format_rational(value) != text:
        raise ValueError(f"'{text}' 不是最简形式（应为 '{format_rational(value)}'）")
    return value


def format_rational(value: Fraction) -> str:
    """规范文本形式：整数写作 n，其余写作 n/d"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class SegmentRole(Enum):
    Base = "base"  # 某个S_1副本中的基础线段
    Diagonal = "diagonal"  # 探针的对角线D_Q


class ProbeKind(Enum):
    BaseProbe = "base"  # k=1时的探针
    Lower = "lower"  # 下探针L_Q
    Upper = "upper"  # 上探针U_Q


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))


@dataclass(frozen=True, slots=True)
class Rect:
    """闭矩形 [x0,x1]×[y0,y1]"""

    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    def __post_init__(self):
        for name in ("x0", "y0", "x1", "y1"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise DegenerateRect((self.x0, self.y0, self.x1, self.y1))

    @property
    def width(self) -> Fraction:
        return self.x1 - self.x0

    @property
    def height(self) -> Fraction:
        return self.y1 - self.y0

    def contains(self, pt: Point) -> bool:
        """点是否位于闭矩形内（含边界）"""
        return self.x0 <= pt.x <= self.x1 and self.y0 <= pt.y <= self.y1

    def contains_strictly(self, pt: Point) -> bool:
        """点是否位于开矩形内"""
        return self.x0 < pt.x < self.x1 and self.y0 < pt.y < self.y1

    def centered_half(self) -> "Rect":
        """居中的半尺寸子矩形"""
        qw = self.width / 4
        qh = self.height / 4
        return Rect(self.x0 + qw, self.y0 + qh, self.x1 - qw, self.y1 - qh)

    def diagonal_points(self) -> tuple[Point, Point]:
        """左下角与右上角"""
        return Point(self.x0, self.y0), Point(self.x1, self.y1)


@dataclass(frozen=True, slots=True)
class Segment:
    """
    严格正斜率的闭线段
    p为左下端点，q为右上端点；path记录其所在副本在递归树中的位置
    """

    p: Point
    q: Point
    id: int = 0
    role: SegmentRole = SegmentRole.Base
    path: tuple[int, ...] = ()

    def __post_init__(self):
        if not (self.p.x < self.q.x and self.p.y < self.q.y):
            raise InvalidSegment(self.p, self.q)
        object.__setattr__(self, "path", tuple(self.path))

    @classmethod
    def between(
        cls,
        x0: Fraction | int | str,
        y0: Fraction | int | str,
        x1: Fraction | int | str,
        y1: Fraction | int | str,
        **kwargs,
    ) -> "Segment":
        return cls(Point(x0, y0), Point(x1, y1), **kwargs)

    @classmethod
    def diagonal_of(cls, rect: Rect, **kwargs) -> "Segment":
        """矩形从左下角到右上角的对角线"""
        p, q = rect.diagonal_points()
        return cls(p, q, role=SegmentRole.Diagonal, **kwargs)

    def renumbered(self, new_id: int, path_prefix: tuple[int, ...] = ()) -> "Segment":
        return replace(self, id=new_id, path=path_prefix + self.path)


@dataclass(frozen=True, slots=True)
class Probe:
    """
    探针：从构造矩形右边界伸入的细长矩形
    root为其根（左对齐、与所有线段内部不交的最大子矩形）
    lineage记录生成该探针的(P序号, Q序号)链
    """

    rect: Rect
    root: Rect
    kind: ProbeKind = ProbeKind.BaseProbe
    id: int = 0
    pierced: tuple[int, ...] = ()
    lineage: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pierced", tuple(self.pierced))
        object.__setattr__(self, "lineage", tuple(self.lineage))
        if not (
            self.root.x0 == self.rect.x0
            and self.root.y0 == self.rect.y0
            and self.root.y1 == self.rect.y1
            and self.root.x1 <= self.rect.x1
        ):
            raise ValueError(f"探针 {self.id} 的根不是其左对齐的子矩形")

    def renumbered(
        self, new_id: int, segment_offset: int = 0, lineage: tuple[int, ...] | None = None
    ) -> "Probe":
        return replace(
            self,
            id=new_id,
            pierced=tuple(sid + segment_offset for sid in self.pierced),
            lineage=self.lineage if lineage is None else lineage,
        )
