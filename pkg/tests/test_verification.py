import random
from dataclasses import replace
from fractions import Fraction

import pytest

from src.trifree_segments.construction import Construction, augment_tilde, build
from src.trifree_segments.exceptions import InvalidK, TooLarge
from src.trifree_segments.geometry import Point, Rect, Segment
from src.trifree_segments.graph import IntersectionGraph, greedy_coloring, intersection_graph
from src.trifree_segments.verification import (
    VerificationReport,
    count_proper_partitions,
    heaviest_probe,
    iter_proper_partitions,
    verify_construction,
    verify_disjoint_probes,
    verify_family_size,
    verify_general_position,
    verify_lemma_property,
    verify_probe_axioms,
    verify_size_bounds,
)

F = Fraction


def seg(x0, y0, x1, y1, sid) -> Segment:
    return Segment.between(F(x0), F(y0), F(x1), F(y1), id=sid)


def with_segment(c: Construction, segment: Segment) -> Construction:
    segments = tuple(segment if s.id == segment.id else s for s in c.segments)
    return replace(c, segments=segments)


def all_set_partitions(items: list[int]) -> list[list[list[int]]]:
    """不做任何剪枝地列出全部集合划分（首元素插入已有块或单独成块）"""
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    result = []
    for partition in all_set_partitions(rest):
        for i in range(len(partition)):
            result.append(partition[:i] + [[first] + partition[i]] + partition[i + 1 :])
        result.append([[first]] + partition)
    return result


class TestReport:
    def test_empty_report_passes(self):
        report = VerificationReport()
        assert report.overall
        assert report.render_lines() == ""

    def test_render_lines(self):
        report = VerificationReport().add("a", True, "n=1").add("b", False)
        assert report.render_lines() == "CHECK a PASS n=1\nCHECK b FAIL\n"
        assert not report.overall
        assert [check.name for check in report.failures()] == ["b"]
        assert "a" in report and report["b"].passed is False


class TestProbeAxioms:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_built_families_pass(self, k):
        report = verify_probe_axioms(build(k))
        assert report.overall, report.render_lines()

    def test_endpoint_moved_into_probe(self):
        c = with_segment(build(1), seg(F(1, 4), F(1, 4), F(1, 2), F(1, 2), 0))
        report = verify_probe_axioms(c)
        assert not report["condition-3"].passed
        assert report["condition-3"].witness == "probe=0 segment=0"
        assert not report["pierced-lists"].passed

    def test_segment_through_left_boundary(self):
        c = with_segment(build(1), seg(F(1, 4), F(3, 8), F(1, 2), F(5, 8), 0))
        report = verify_probe_axioms(c)
        assert not report["condition-2"].passed
        assert report["condition-3"].passed

    def test_crossing_pierced_segments(self):
        c = build(1)
        extra = seg(F(1, 2), F(1, 4), F(5, 8), F(3, 4), 1)
        c = replace(c, segments=c.segments + (extra,))
        report = verify_probe_axioms(c)
        assert not report["condition-4"].passed
        assert report["condition-4"].witness == "probe=0 segments=0,1"

    def test_root_not_maximal(self):
        c = build(1)
        probe = c.probes[0]
        shrunk = replace(probe, root=replace(probe.root, x1=F(2, 5)))
        report = verify_probe_axioms(replace(c, probes=(shrunk,)))
        assert report["root-disjoint"].passed
        assert not report["root-maximal"].passed


class TestDisjointProbes:
    def test_built_family_passes(self):
        assert verify_disjoint_probes(build(3)).overall

    def test_overlapping_probes(self):
        c = build(2)
        lower, upper = c.probes
        moved = replace(upper, rect=lower.rect, root=lower.root)
        report = verify_disjoint_probes(replace(c, probes=(lower, moved)))
        assert not report["probes-disjoint"].passed
        assert not report["probe-bands-disjoint"].passed


class TestGeneralPosition:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_built_families_pass(self, k):
        assert verify_general_position(augment_tilde(build(k)).segments).overall

    def test_three_segments_through_one_point(self):
        segments = [seg(0, 0, 2, 2, 0), seg(0, F(1, 2), 2, F(3, 2), 1), seg(F(1, 2), 0, F(3, 2), 2, 2)]
        report = verify_general_position(segments)
        assert not report["no-concurrency"].passed
        assert report["no-concurrency"].witness.startswith("point=(1,1)")

    def test_touching_endpoints(self):
        report = verify_general_position([seg(0, 0, 1, 1, 0), seg(1, 1, 2, 3, 1)])
        assert not report["endpoints-clear"].passed

    def test_collinear_overlap(self):
        report = verify_general_position([seg(0, 0, 2, 2, 0), seg(1, 1, 3, 3, 1)])
        assert not report["proper-crossings"].passed


class TestPartitions:
    @pytest.mark.parametrize("n, bell", [(0, 1), (1, 1), (3, 5), (4, 15), (6, 203)])
    def test_edgeless_graphs_give_bell_numbers(self, n, bell):
        assert count_proper_partitions([0] * n) == bell

    def test_triangle_has_one_partition(self):
        assert count_proper_partitions([0b110, 0b101, 0b011]) == 1

    def test_five_cycle(self):
        g = IntersectionGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert count_proper_partitions(g.neighbor_masks) == 11

    def test_agrees_with_unpruned_enumeration(self):
        rng = random.Random(2024)
        for _ in range(100):
            n = rng.randint(1, 8)
            density = rng.choice((0.1, 0.3, 0.5, 0.7))
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
            g = IntersectionGraph.from_edges(n, edges)
            expected = sum(
                1
                for partition in all_set_partitions(list(range(n)))
                if not any(u in block and v in block for block in partition for u, v in edges)
            )
            sequences = list(iter_proper_partitions(g.neighbor_masks))
            assert len(set(sequences)) == len(sequences)
            assert len(sequences) == expected == count_proper_partitions(g.neighbor_masks), edges

    def test_sequences_are_restricted_growth(self):
        for blocks in iter_proper_partitions([0] * 4):
            assert blocks[0] == 0
            for i in range(1, len(blocks)):
                assert blocks[i] <= max(blocks[:i]) + 1

    def test_settled_prunes_subtrees(self):
        every = list(iter_proper_partitions([0] * 3))
        kept = list(iter_proper_partitions([0] * 3, settled=lambda blocks, i: i >= 2 and blocks[1] == 1))
        assert all(b[1] == 0 for b in kept)
        assert len(kept) < len(every)


class TestLemmaProperty:
    @pytest.mark.parametrize("k", [1, 2])
    def test_small_levels(self, k):
        assert verify_lemma_property(build(k)).overall

    @pytest.mark.slow
    def test_level_three(self):
        report = verify_lemma_property(build(3))
        assert report.overall
        assert report["lemma-property"].witness == "k=3 segments=13 probes=8"

    def test_probes_piercing_nothing_give_counterexample(self):
        c = build(2)
        band = Rect(F(1, 3), F(15, 16), 1, F(31, 32))
        probes = tuple(replace(p, rect=band, root=band, pierced=()) for p in c.probes)
        report = verify_lemma_property(replace(c, probes=probes))
        assert not report.overall
        assert report["lemma-property"].witness.startswith("k=2 partition=")

    def test_counts_must_match_level(self):
        report = verify_lemma_property(replace(build(2), probes=()))
        assert not report.overall
        assert report["lemma-property"].witness == "k=2 segments=3/3 probes=0/2"

    def test_too_large(self):
        with pytest.raises(TooLarge):
            verify_lemma_property(build(3), max_segments=12)

    @pytest.mark.parametrize("k", [2, 3])
    def test_heaviest_probe_of_greedy_coloring(self, k):
        c = build(k)
        coloring = greedy_coloring(intersection_graph(c.segments))
        colors = {s.id: coloring.colors[i] for i, s in enumerate(c.segments)}
        probe_id, used = heaviest_probe(c, colors)
        assert 0 <= probe_id < len(c.probes)
        assert used >= k


class TestSizeBounds:
    def test_closed_form_up_to_twelve(self):
        report = verify_size_bounds(12)
        assert report.overall
        assert "closed-form-p[k=12]" in report
        assert report["tilde-size[k=3]"].witness == "size=21"
        assert "tilde-size[k=4]" not in report

    def test_invalid_k(self):
        with pytest.raises(InvalidK):
            verify_size_bounds(0)


class TestFamilySize:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_built_families_pass(self, k):
        assert verify_family_size(build(k)).overall
        assert verify_family_size(augment_tilde(build(k))).overall

    def test_relabelled_level(self):
        report = verify_family_size(replace(build(3), k=2))
        assert report["family-size"].witness == "k=2 segments=13/3 probes=8/2"

    def test_level_far_beyond_size(self):
        report = verify_family_size(replace(build(2), k=40))
        assert not report.overall
        assert report["family-size"].witness.endswith("too-few-for-k")


class TestVerifyConstruction:
    @pytest.mark.parametrize("k", [1, 2])
    def test_full_level(self, k):
        report = verify_construction(build(k), "full")
        assert report.overall, report.render_lines()
        assert "lemma-property" in report
        assert "tilde-triangle-free" in report
        assert report["family-size"].passed

    @pytest.mark.slow
    def test_full_level_three(self):
        assert verify_construction(build(3), "full").overall

    @pytest.mark.slow
    def test_axioms_level_four(self):
        report = verify_construction(build(4), "axioms")
        assert report.overall
        assert "lemma-property" not in report

    def test_tilde_family(self):
        report = verify_construction(augment_tilde(build(2)), "full")
        assert report.overall
        assert "lemma-property" not in report

    def test_tampered_family_fails(self):
        c = with_segment(build(1), seg(F(1, 4), F(1, 4), F(1, 2), F(1, 2), 0))
        report = verify_construction(c, "full")
        assert not report.overall
        assert "tilde-triangle-free" not in report

    def test_tampered_level_and_probes(self):
        c = build(3)
        report = verify_construction(replace(c, k=1, probes=c.probes[:1]), "full")
        assert not report.overall
        assert not report["family-size"].passed
        assert not report["lemma-property"].passed

    def test_triangle_limit_selects_method(self):
        assert verify_construction(build(2), "full")["triangle-free"].witness == "method=exhaustive"
        report = verify_construction(build(2), "full", triangle_limit=1)
        assert report.overall
        assert report["triangle-free"].witness == "method=neighborhood"

    def test_unknown_level(self):
        with pytest.raises(ValueError):
            verify_construction(build(1), "everything")
