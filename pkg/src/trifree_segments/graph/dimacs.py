from ..exceptions import ParseError
from .intersection import IntersectionGraph


def export_dimacs(g: IntersectionGraph) -> str:
    """
    导出规范的DIMACS边格式：首行 "p edge n m"，随后每条边一行 "e u v"
    顶点从1开始编号，u < v，按字典序排列，文本以换行结尾
    """
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> IntersectionGraph:
    """
    读取DIMACS边格式（忽略 "c" 注释行与空行）
    :param text: 文件内容
    :return: IntersectionGraph（标签为顶点序号）
    """
    n: int | None = None
    m: int | None = None
    edges: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("重复的问题行", line=lineno)
            if len(tokens) != 4 or tokens[1].lower() not in ("edge", "col"):
                raise ParseError(f"未知的问题行: {line}", line=lineno)
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError as e:
                raise ParseError(f"顶点数/边数不是整数: {line}", line=lineno) from e
            if n < 0 or m < 0:
                raise ParseError(f"顶点数/边数不能为负: {line}", line=lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("边出现在问题行之前", line=lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except (IndexError, ValueError) as e:
                raise ParseError(f"无法解析的边: {line}", line=lineno) from e
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise ParseError(f"非法的边: {line}", line=lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"未知的行格式: {line}", line=lineno)

    if n is None:
        raise ParseError("缺少问题行 'p edge n m'")
    if m != len(edges):
        raise ParseError(f"声明的边数 {m} 与实际边数 {len(edges)} 不符")
    return IntersectionGraph.from_edges(n, sorted(edges))
