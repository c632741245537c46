from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from multiprocessing import Manager
from dataclasses import dataclass
from enum import Enum

from .. import _logger as logger
from ..utils import Deadline, StopFlag, iter_bits
from .intersection import IntersectionGraph, clique_number, greedy_clique


class Verdict(Enum):
    Yes = "yes"  # 找到了合法染色
    No = "no"  # 穷举搜索证明不存在
    Unknown = "unknown"  # 时间预算耗尽


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]  # 每个顶点的颜色编号（从0开始）
    palette: int  # 颜色数

    def is_proper(self, g: IntersectionGraph) -> bool:
        if len(self.colors) != g.n:
            return False
        if any(not 0 <= c < self.palette for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


@dataclass(frozen=True)
class ColorabilityResult:
    verdict: Verdict
    coloring: Coloring | None = None
    deterministic: bool = True  # 单进程搜索时返回的染色是规范顺序下找到的那一个
    nodes: int = 0  # 搜索树节点数


@dataclass(frozen=True)
class ChromaticResult:
    lower: int  # 已证明的下界
    upper: int  # 已证明的上界（附带染色）
    coloring: Coloring | None = None

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    verdicts: tuple[Verdict, ...]  # 删除第v个顶点后的k-可染色判定

    @property
    def critical(self) -> bool:
        return all(v is Verdict.Yes for v in self.verdicts)

    @property
    def complete(self) -> bool:
        return all(v is not Verdict.Unknown for v in self.verdicts)

    def failing_vertices(self) -> list[int]:
        return [i for i, v in enumerate(self.verdicts) if v is Verdict.No]


class _BudgetExhausted(Exception):
    pass


class _DsaturSearch:
    """
    DSATUR顺序的回溯搜索（单个连通分量，局部编号）
    """

    def __init__(self, masks: list[int], k: int, deadline: Deadline):
        self.n: int = len(masks)
        self.masks: list[int] = masks
        self.k: int = k
        self.deadline: Deadline = deadline
        self.colors: list[int] = [-1] * self.n
        self.degree: list[int] = [m.bit_count() for m in masks]
        self.forbid: list[list[int]] = [[0] * k for _ in range(self.n)]  # 邻居中各颜色的计数
        self.saturation: list[int] = [0] * self.n
        self.nodes: int = 0

    def assign(self, v: int, c: int):
        self.colors[v] = c
        for u in iter_bits(self.masks[v]):
            if self.forbid[u][c] == 0:
                self.saturation[u] += 1
            self.forbid[u][c] += 1

    def unassign(self, v: int, c: int):
        self.colors[v] = -1
        for u in iter_bits(self.masks[v]):
            self.forbid[u][c] -= 1
            if self.forbid[u][c] == 0:
                self.saturation[u] -= 1

    def select(self) -> int | None:
        """饱和度最大，其次度数最大，再次编号最小"""
        best, best_key = None, None
        for v in range(self.n):
            if self.colors[v] != -1:
                continue
            key = (self.saturation[v], self.degree[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def candidates(self, v: int, used: int) -> list[int]:
        # 新颜色只按首次出现顺序引入
        return [c for c in range(min(used + 1, self.k)) if self.forbid[v][c] == 0]

    def search(self, used: int) -> bool:
        v = self.select()
        if v is None:
            return True
        if self.saturation[v] >= self.k:
            return False
        self.nodes += 1
        if self.deadline.expired():
            raise _BudgetExhausted()
        for c in self.candidates(v, used):
            self.assign(v, c)
            if self.search(max(used, c + 1)):
                return True
            self.unassign(v, c)
        return False


def _components(masks: tuple[int, ...]) -> list[list[int]]:
    n = len(masks)
    seen = 0
    components = []
    for start in range(n):
        if seen >> start & 1:
            continue
        component = 1 << start
        frontier = component
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= masks[v]
            frontier = grow & ~component
            component |= grow
        seen |= component
        components.append(list(iter_bits(component)))
    return components


def _local_masks(masks: tuple[int, ...], vertices: list[int]) -> list[int]:
    index = {v: i for i, v in enumerate(vertices)}
    local = []
    for v in vertices:
        mask = 0
        for u in iter_bits(masks[v]):
            mask |= 1 << index[u]
        local.append(mask)
    return local


def _prepare(masks: list[int], k: int, deadline: Deadline) -> tuple[_DsaturSearch, int] | None:
    """
    固定一个贪心极大团的颜色（对称性破除）；团大于k时返回None
    """
    sub = IntersectionGraph.from_edges(
        len(masks),
        [(u, v) for u in range(len(masks)) for v in iter_bits(masks[u]) if u < v],
    )
    clique = greedy_clique(sub)
    if len(clique) > k:
        return None
    search = _DsaturSearch(masks, k, deadline)
    for c, v in enumerate(clique):
        search.assign(v, c)
    return search, len(clique)


def _solve_subproblem(
    masks: list[int],
    k: int,
    prefix: list[tuple[int, int]],
    used: int,
    budget: float | None,
    check_interval: int = 2048,
    stop: StopFlag | None = None,
) -> tuple[Verdict, list[int] | None, int]:
    """工作进程入口：在给定的部分染色下继续搜索（stop置位后尽快返回Unknown）"""
    search = _DsaturSearch(masks, k, Deadline(budget, check_interval, stop))
    for v, c in prefix:
        search.assign(v, c)
    try:
        if search.search(used):
            return Verdict.Yes, search.colors, search.nodes
        return Verdict.No, None, search.nodes
    except _BudgetExhausted:
        return Verdict.Unknown, None, search.nodes


def _split(search: _DsaturSearch, used: int, depth: int) -> tuple[list, list[int] | None]:
    """
    沿DSATUR顺序展开前depth层，返回子问题列表 [(prefix, used)]；
    若展开过程中已得到完整染色，则直接返回该染色
    """
    frontier: list[tuple[list[tuple[int, int]], int]] = []
    prefix: list[tuple[int, int]] = []

    def expand(used: int, level: int) -> list[int] | None:
        v = search.select()
        if v is None:
            return list(search.colors)
        if search.saturation[v] >= search.k:
            return None
        if level == depth:
            frontier.append((list(prefix), used))
            return None
        for c in search.candidates(v, used):
            search.assign(v, c)
            prefix.append((v, c))
            found = expand(max(used, c + 1), level + 1)
            prefix.pop()
            search.unassign(v, c)
            if found is not None:
                return found
        return None

    base = [(v, c) for v, c in enumerate(search.colors) if c != -1]
    found = expand(used, 0)
    return [(base + p, u) for p, u in frontier], found


def _solve_component(
    masks: list[int], k: int, deadline: Deadline, workers: int
) -> tuple[Verdict, list[int] | None, int]:
    prepared = _prepare(masks, k, deadline)
    if prepared is None:
        return Verdict.No, None, 0
    search, used = prepared

    if workers <= 1 or len(masks) < 16:
        try:
            if search.search(used):
                return Verdict.Yes, search.colors, search.nodes
            return Verdict.No, None, search.nodes
        except _BudgetExhausted:
            return Verdict.Unknown, None, search.nodes

    subproblems, found = _split(search, used, depth=max(2, workers.bit_length() + 1))
    if found is not None:
        return Verdict.Yes, found, 0
    if not subproblems:
        return Verdict.No, None, 0

    verdict, colors, nodes = Verdict.No, None, 0
    with Manager() as manager:
        stop = manager.Event()
        pool = ProcessPoolExecutor(max_workers=workers)
        try:
            pending = {
                pool.submit(
                    _solve_subproblem,
                    masks,
                    k,
                    prefix,
                    sub_used,
                    deadline.remaining(),
                    deadline.check_interval,
                    stop,
                )
                for prefix, sub_used in subproblems
            }
            while pending and verdict is not Verdict.Yes:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for future in done:
                    sub_verdict, sub_colors, sub_nodes = future.result()
                    nodes += sub_nodes
                    if sub_verdict is Verdict.Yes:
                        verdict, colors = Verdict.Yes, sub_colors
                    elif sub_verdict is Verdict.Unknown and verdict is Verdict.No:
                        verdict = Verdict.Unknown
        finally:
            # 已有结论（或出错）时通知仍在运行的子搜索退出，未开始的直接取消
            stop.set()
            pool.shutdown(wait=True, cancel_futures=True)
    return verdict, colors, nodes


def _is_k_colorable(
    g: IntersectionGraph, k: int, deadline: Deadline, workers: int = 1
) -> ColorabilityResult:
    if k < 0:
        raise ValueError(f"颜色数不能为负: {k}")
    if g.n == 0:
        return ColorabilityResult(Verdict.Yes, Coloring((), k))
    if k == 0:
        return ColorabilityResult(Verdict.No)

    colors = [-1] * g.n
    total_nodes = 0
    unknown = False
    for component in _components(g.neighbor_masks):
        if len(component) == 1:
            colors[component[0]] = 0
            continue
        verdict, local_colors, nodes = _solve_component(
            _local_masks(g.neighbor_masks, component), k, deadline, workers
        )
        total_nodes += nodes
        if verdict is Verdict.No:
            logger.trace(f"{k}-染色不存在，搜索节点数 {total_nodes}")
            return ColorabilityResult(Verdict.No, nodes=total_nodes)
        if verdict is Verdict.Unknown:
            unknown = True
            continue
        for local, v in enumerate(component):
            colors[v] = local_colors[local]

    if unknown:
        logger.warning(f"{k}-可染色判定在预算内未完成，搜索节点数 {total_nodes}")
        return ColorabilityResult(Verdict.Unknown, nodes=total_nodes)

    coloring = Coloring(tuple(colors), k)
    if not coloring.is_proper(g):
        raise RuntimeError("搜索返回了不合法的染色")
    return ColorabilityResult(
        Verdict.Yes, coloring, deterministic=workers <= 1, nodes=total_nodes
    )


def is_k_colorable(
    g: IntersectionGraph,
    k: int,
    budget: float | None = None,
    workers: int = 1,
    check_interval: int = 2048,
) -> ColorabilityResult:
    """
    判定图是否k-可染色
    :param g: 图
    :param k: 颜色数（k >= 0）
    :param budget: 墙钟时间预算（秒，None为不限时）
    :param workers: 并行进程数（>1时返回的染色不保证是规范顺序下的那一个）
    :param check_interval: 两次读取时钟之间的搜索节点数
    :return: ColorabilityResult
    """
    return _is_k_colorable(g, k, Deadline(budget, check_interval), workers)


def greedy_coloring(g: IntersectionGraph) -> Coloring:
    """DSATUR贪心染色（上界）"""
    search = _DsaturSearch(list(g.neighbor_masks), max(g.n, 1), Deadline(None))
    used = 0
    while (v := search.select()) is not None:
        c = next(c for c in range(search.k) if search.forbid[v][c] == 0)
        search.assign(v, c)
        used = max(used, c + 1)
    return Coloring(tuple(search.colors), used)


def chromatic_number(
    g: IntersectionGraph,
    budget: float | None = None,
    workers: int = 1,
    check_interval: int = 2048,
) -> ChromaticResult:
    """
    计算色数：下界取团数，上界取DSATUR贪心，然后自上而下逐个判定
    预算耗尽时返回已证明的区间
    """
    deadline = Deadline(budget, check_interval)
    if g.n == 0:
        return ChromaticResult(0, 0, Coloring((), 0))

    lower = clique_number(g)
    best = greedy_coloring(g)
    upper = best.palette

    for k in range(upper - 1, lower - 1, -1):
        result = _is_k_colorable(g, k, deadline, workers)
        if result.verdict is Verdict.Yes:
            upper, best = k, result.coloring
        elif result.verdict is Verdict.No:
            lower = k + 1
            break
        else:
            break

    if lower == upper:
        logger.info(f"色数 = {upper}")
    else:
        logger.warning(f"预算耗尽，色数位于区间 [{lower}, {upper}]")
    return ChromaticResult(lower, upper, best)


def is_critical(
    g: IntersectionGraph,
    k: int,
    budget: float | None = None,
    workers: int = 1,
    check_interval: int = 2048,
) -> CriticalityReport:
    """
    判定 (k+1)-临界性：删除任一顶点后图均为k-可染色
    （前置条件：已知色数为k+1）
    """
    deadline = Deadline(budget, check_interval)
    verdicts = []
    for v in range(g.n):
        if deadline.expired_now():
            verdicts.append(Verdict.Unknown)
            continue
        verdicts.append(_is_k_colorable(g.without(v), k, deadline, workers).verdict)
    report = CriticalityReport(k=k, verdicts=tuple(verdicts))
    logger.info(
        f"临界性检查 k={k}: {'通过' if report.critical else '未通过'}"
        f"（{sum(v is Verdict.Yes for v in verdicts)}/{g.n} 个删除子图可{k}-染色）"
    )
    return report
