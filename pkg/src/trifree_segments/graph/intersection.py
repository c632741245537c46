from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .. import _logger as logger
from ..geometry import Segment, segments_intersect
from ..utils import iter_bits

# 超过该顶点数时改用邻域求交法检测三角形
EXHAUSTIVE_TRIANGLE_LIMIT = 5000


@dataclass(frozen=True)
class VertexLabel:
    segment_id: int  # 线段id
    role: str = "base"  # 线段角色
    path: tuple[int, ...] = ()  # 递归树中的副本路径


@dataclass(frozen=True)
class IntersectionGraph:
    """
    交图：对称、无自环的布尔邻接矩阵
    """

    n: int
    labels: tuple[VertexLabel, ...]
    adjacency: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.labels) != self.n or len(self.adjacency) != self.n:
            raise ValueError("顶点数与标签/邻接矩阵的规模不一致")
        for u, row in enumerate(self.adjacency):
            if len(row) != self.n:
                raise ValueError(f"邻接矩阵第{u}行长度不正确")
            if row[u]:
                raise ValueError(f"顶点 {u} 存在自环")
            for v in range(u + 1, self.n):
                if row[v] != self.adjacency[v][u]:
                    raise ValueError(f"邻接矩阵在 ({u}, {v}) 处不对称")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[VertexLabel, ...] | None = None,
    ) -> "IntersectionGraph":
        """
        由边表构造图（标签缺省时以顶点序号作为线段id）
        """
        matrix = [[False] * n for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"顶点 {u} 存在自环")
            matrix[u][v] = matrix[v][u] = True
        if labels is None:
            labels = tuple(VertexLabel(segment_id=i) for i in range(n))
        return cls(n=n, labels=labels, adjacency=tuple(tuple(row) for row in matrix))

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """每个顶点的邻居位掩码"""
        masks = []
        for row in self.adjacency:
            mask = 0
            for v, adjacent in enumerate(row):
                if adjacent:
                    mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.neighbor_masks[v]))

    def degree(self, v: int) -> int:
        return self.neighbor_masks[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """按字典序排列的边 (u, v)，u < v"""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adjacency[u][v]
        ]

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.neighbor_masks) // 2

    def induced(self, vertices: Iterable[int]) -> "IntersectionGraph":
        """由给定顶点（保持顺序）诱导的子图"""
        keep = list(vertices)
        return IntersectionGraph(
            n=len(keep),
            labels=tuple(self.labels[v] for v in keep),
            adjacency=tuple(tuple(self.adjacency[u][v] for v in keep) for u in keep),
        )

    def without(self, vertex: int) -> "IntersectionGraph":
        """删除一个顶点后的子图"""
        return self.induced(v for v in range(self.n) if v != vertex)


@dataclass(frozen=True)
class TriangleCheck:
    triangle_free: bool
    witness: tuple[int, int, int] | None = None  # 三角形的三个顶点
    method: str = "exhaustive"

    def __bool__(self) -> bool:
        return self.triangle_free


def intersection_graph(segments: list[Segment] | tuple[Segment, ...]) -> IntersectionGraph:
    """
    计算线段族的交图
    :param segments: 线段列表（顶点顺序与列表顺序一致）
    :return: IntersectionGraph
    """
    n = len(segments)
    matrix = [[False] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if segments_intersect(segments[u], segments[v]):
                matrix[u][v] = matrix[v][u] = True
    labels = tuple(VertexLabel(s.id, s.role.value, s.path) for s in segments)
    graph = IntersectionGraph(n=n, labels=labels, adjacency=tuple(tuple(row) for row in matrix))
    logger.debug(f"交图: {n} 个顶点, {graph.edge_count} 条边")
    return graph


def is_triangle_free(
    g: IntersectionGraph,
    method: str = "auto",
    exhaustive_limit: int = EXHAUSTIVE_TRIANGLE_LIMIT,
) -> TriangleCheck:
    """
    检测图中是否存在三角形
    :param g: 图
    :param method: "exhaustive"（逐一检查三元组）、"neighborhood"（邻域求交）或 "auto"
    :param exhaustive_limit: auto模式下使用穷举法的最大顶点数
    :return: TriangleCheck（失败时附带三角形）
    """
    if method == "auto":
        method = "exhaustive" if g.n <= exhaustive_limit else "neighborhood"

    if method == "exhaustive":
        adj = g.adjacency
        for u in range(g.n):
            row_u = adj[u]
            for v in range(u + 1, g.n):
                if not row_u[v]:
                    continue
                row_v = adj[v]
                for w in range(v + 1, g.n):
                    if row_u[w] and row_v[w]:
                        return TriangleCheck(False, (u, v, w), method)
        return TriangleCheck(True, None, method)

    if method == "neighborhood":
        masks = g.neighbor_masks
        for u in range(g.n):
            for v in iter_bits(masks[u] >> (u + 1)):
                v += u + 1
                common = masks[u] & masks[v] & ~((1 << (v + 1)) - 1)
                if common:
                    w = (common & -common).bit_length() - 1
                    return TriangleCheck(False, (u, v, w), method)
        return TriangleCheck(True, None, method)

    raise ValueError(f"未知的三角形检测方法: {method}")


def greedy_clique(g: IntersectionGraph) -> list[int]:
    """
    贪心求一个极大团：从度数最大的顶点出发，每次加入度数最大的公共邻居
    """
    masks = g.neighbor_masks
    candidates = (1 << g.n) - 1
    clique: list[int] = []
    while candidates:
        v = max(iter_bits(candidates), key=lambda x: (masks[x].bit_count(), -x))
        clique.append(v)
        candidates &= masks[v]
    return clique


def clique_number(g: IntersectionGraph) -> int:
    """
    精确的团数ω（位集分支定界）
    """
    masks = g.neighbor_masks
    best = len(greedy_clique(g))

    def expand(size: int, candidates: int):
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = candidates.bit_length() - 1
            expand(size + 1, candidates & masks[v])
            candidates &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best
