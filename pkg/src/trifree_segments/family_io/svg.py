import xml.etree.ElementTree as ET
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from ..construction import Construction
from ..geometry import Rect, SegmentRole

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass
class RenderOptions:
    show_probes: bool = False  # 绘制探针轮廓
    show_roots: bool = False  # 以阴影绘制探针的根
    stroke_scale: float = 1.0  # 线宽倍数
    highlight_diagonals: bool = False  # 对角线使用第二种颜色
    canvas_width: int = 800  # 画布宽度（px）
    canvas_height: int = 800  # 画布高度（px）
    significant_digits: int = 12  # 坐标显示的有效数字
    segment_color: str = "#1f3a93"
    diagonal_color: str = "#c0392b"
    probe_color: str = "#7f8c8d"
    root_color: str = "#f4d03f"


class _Canvas:
    """把构造矩形映射到画布（y轴向下翻转）"""

    def __init__(self, rect: Rect, options: RenderOptions):
        self.rect = rect
        self.options = options
        self.sx = Fraction(options.canvas_width) / rect.width
        self.sy = Fraction(options.canvas_height) / rect.height

    def num(self, value: Fraction) -> str:
        # 仅用于显示的十进制近似
        with localcontext() as ctx:
            ctx.prec = self.options.significant_digits
            d = Decimal(value.numerator) / Decimal(value.denominator)
        text = f"{d.normalize():f}"
        return "0" if text == "-0" else text

    def x(self, value: Fraction) -> str:
        return self.num((value - self.rect.x0) * self.sx)

    def y(self, value: Fraction) -> str:
        return self.num((self.rect.y1 - value) * self.sy)

    def rect_attrs(self, r: Rect) -> dict[str, str]:
        return {
            "x": self.x(r.x0),
            "y": self.y(r.y1),
            "width": self.num(r.width * self.sx),
            "height": self.num(r.height * self.sy),
        }


def render_svg(family: Construction, options: RenderOptions | None = None) -> str:
    """
    将线段族渲染为SVG 1.1文本
    每条线段对应一个line元素；探针为class="probe"的矩形，根为class="root"的阴影矩形
    """
    options = options or RenderOptions()
    canvas = _Canvas(family.rect, options)
    width = str(options.canvas_width)
    height = str(options.canvas_height)
    stroke = canvas.num(Fraction(options.stroke_scale) * 2)

    svg = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=width,
        height=height,
        viewBox=f"0 0 {width} {height}",
    )
    kind = "增广族" if family.tilde else "线段族"
    ET.SubElement(svg, "title").text = f"{kind} k={family.k}: {len(family.segments)} segments"

    ET.SubElement(
        svg,
        "rect",
        {"class": "frame", "fill": "none", "stroke": "#000000", "stroke-width": stroke},
        **canvas.rect_attrs(family.rect),
    )

    if options.show_roots:
        group = ET.SubElement(svg, "g", {"id": "roots"})
        for probe in family.probes:
            ET.SubElement(
                group,
                "rect",
                {"class": "root", "fill": options.root_color, "fill-opacity": "0.5", "stroke": "none"},
                **canvas.rect_attrs(probe.root),
            )

    if options.show_probes:
        group = ET.SubElement(svg, "g", {"id": "probes"})
        for probe in family.probes:
            ET.SubElement(
                group,
                "rect",
                {
                    "class": "probe",
                    "data-id": str(probe.id),
                    "data-kind": probe.kind.value,
                    "fill": "none",
                    "stroke": options.probe_color,
                    "stroke-width": stroke,
                },
                **canvas.rect_attrs(probe.rect),
            )

    group = ET.SubElement(svg, "g", {"id": "segments", "stroke-linecap": "round"})
    for s in family.segments:
        diagonal = options.highlight_diagonals and s.role is SegmentRole.Diagonal
        ET.SubElement(
            group,
            "line",
            {
                "class": s.role.value,
                "data-id": str(s.id),
                "stroke": options.diagonal_color if diagonal else options.segment_color,
                "stroke-width": stroke,
            },
            x1=canvas.x(s.p.x),
            y1=canvas.y(s.p.y),
            x2=canvas.x(s.q.x),
            y2=canvas.y(s.q.y),
        )

    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"
