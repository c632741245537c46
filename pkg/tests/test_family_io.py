import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from src.trifree_segments.construction import augment_tilde, build
from src.trifree_segments.exceptions import ParseError
from src.trifree_segments.family_io import RenderOptions, emit_family, parse_family, render_svg
from src.trifree_segments.graph import export_dimacs, intersection_graph

GOLDEN = Path(__file__).parent / "golden"
NS = {"svg": "http://www.w3.org/2000/svg"}


def golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")


class TestEmitFamily:
    def test_level_one_matches_golden(self):
        assert emit_family(build(1)) == golden("family_k1.json")

    def test_golden_round_trip(self):
        text = golden("family_k1.json")
        assert emit_family(parse_family(text)) == text

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_round_trip_is_identity(self, k):
        c = build(k)
        text = emit_family(c)
        parsed = parse_family(text)
        assert parsed == c
        assert emit_family(parsed) == text

    def test_deterministic(self):
        assert emit_family(build(3)) == emit_family(build(3))

    def test_tilde_family_has_no_probes(self):
        t = augment_tilde(build(2))
        data = json.loads(emit_family(t))
        assert data["tilde"] is True
        assert data["probes"] == []
        assert parse_family(emit_family(t)) == t

    def test_tilde_level_two_graph_matches_golden(self):
        text = emit_family(augment_tilde(build(2)))
        assert export_dimacs(intersection_graph(parse_family(text).segments)) == golden("tilde_k2.dimacs")

    def test_newline_terminated(self):
        assert emit_family(build(2)).endswith("}\n")


class TestParseFamily:
    def _edited(self, edit) -> str:
        data = json.loads(golden("family_k1.json"))
        edit(data)
        return json.dumps(data, indent=2)

    @pytest.mark.parametrize("value", ["2/4", "1/-3", "0.25"])
    def test_non_canonical_rational(self, value):
        text = self._edited(lambda d: d["segments"][0]["p"].update(x=value))
        with pytest.raises(ValueError) as exc:
            parse_family(text)
        assert not isinstance(exc.value, ParseError)

    def test_truncated_file(self):
        text = golden("family_k1.json")
        with pytest.raises(ParseError) as exc:
            parse_family(text[: len(text) // 2])
        assert exc.value.line is not None

    def test_missing_field(self):
        text = self._edited(lambda d: d["segments"][0].pop("q"))
        with pytest.raises(ParseError) as exc:
            parse_family(text)
        assert exc.value.field == "segments.0.q"

    def test_wrong_type(self):
        text = self._edited(lambda d: d.update(k="one"))
        with pytest.raises(ParseError) as exc:
            parse_family(text)
        assert exc.value.field == "k"

    def test_unknown_schema_version(self):
        text = self._edited(lambda d: d.update(schema_version=2))
        with pytest.raises(ParseError) as exc:
            parse_family(text)
        assert exc.value.field == "schema_version"

    @pytest.mark.parametrize(
        "edit, field",
        [
            (lambda d: d["segments"][0].update(q={"x": "3/4", "y": "1/8"}), "segments.0"),
            (lambda d: d["probes"][0]["rect"].update(x0="1"), "probes.0.rect"),
            (lambda d: d["probes"][0]["root"].update(y0="1/2"), "probes.0.root"),
            (lambda d: d["rect"].update(x1="0"), "rect"),
        ],
    )
    def test_invalid_geometry_reports_field(self, edit, field):
        with pytest.raises(ParseError) as exc:
            parse_family(self._edited(edit))
        assert exc.value.field == field

    def test_dangling_pierced_reference(self):
        text = self._edited(lambda d: d["probes"][0].update(pierced=[5]))
        with pytest.raises(ParseError):
            parse_family(text)


class TestRenderSvg:
    def _parse(self, text: str) -> ET.Element:
        return ET.fromstring(text.encode("utf-8"))

    def test_level_two_with_probes(self):
        root = self._parse(render_svg(build(2), RenderOptions(show_probes=True)))
        assert len(root.findall(".//svg:line", NS)) == 3
        assert len(root.findall(".//svg:rect[@class='probe']", NS)) == 2
        assert root.findall(".//svg:rect[@class='root']", NS) == []

    def test_level_one_with_probes_and_roots(self):
        root = self._parse(render_svg(build(1), RenderOptions(show_probes=True, show_roots=True)))
        assert len(root.findall(".//svg:line", NS)) == 1
        assert len(root.findall(".//svg:rect[@class='probe']", NS)) == 1
        assert len(root.findall(".//svg:rect[@class='root']", NS)) == 1

    def test_tilde_family_draws_lines_only(self):
        root = self._parse(render_svg(augment_tilde(build(2)), RenderOptions(show_probes=True, show_roots=True)))
        assert len(root.findall(".//svg:line", NS)) == 5
        assert root.findall(".//svg:rect[@class='probe']", NS) == []
        assert root.findall(".//svg:rect[@class='root']", NS) == []

    def test_coordinates_are_flipped_decimals(self):
        root = self._parse(render_svg(build(1), RenderOptions(show_probes=True)))
        assert root.get("viewBox") == "0 0 800 800"
        line = root.find(".//svg:line", NS)
        assert (line.get("x1"), line.get("y1"), line.get("x2"), line.get("y2")) == ("200", "600", "600", "200")
        probe = root.find(".//svg:rect[@class='probe']", NS)
        assert probe.get("x") == "266.666666667"

    def test_highlight_diagonals(self):
        options = RenderOptions(highlight_diagonals=True)
        root = self._parse(render_svg(augment_tilde(build(1)), options))
        strokes = [line.get("stroke") for line in root.findall(".//svg:line", NS)]
        assert strokes == [options.segment_color, options.diagonal_color]

    def test_line_count_matches_segments(self):
        c = build(3)
        root = self._parse(render_svg(c))
        assert len(root.findall(".//svg:line", NS)) == len(c.segments)
