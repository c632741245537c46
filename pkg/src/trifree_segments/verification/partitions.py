from typing import Callable, Iterator

from ..utils import iter_bits

# settled(blocks, i) 为真时跳过以当前前缀开头的全部划分（blocks[i:] 尚未赋值，为 -1）
type SettledPredicate = Callable[[list[int], int], bool]


def iter_proper_partitions(
    masks: list[int] | tuple[int, ...],
    settled: SettledPredicate | None = None,
) -> Iterator[tuple[int, ...]]:
    """
    按受限增长序列枚举图的所有合法染色划分（不计颜色重命名）
    序列a满足 a[0] = 0, a[i] <= max(a[:i]) + 1，且相邻顶点的块号不同
    :param masks: 每个顶点的邻居位掩码
    :param settled: 前缀剪枝谓词（可选）
    """
    n = len(masks)
    blocks = [-1] * n
    earlier = [masks[i] & ((1 << i) - 1) for i in range(n)]

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if settled is not None and settled(blocks, i):
            return
        if i == n:
            yield tuple(blocks)
            return
        taken = {blocks[u] for u in iter_bits(earlier[i])}
        for b in range(used + 1):
            if b in taken:
                continue
            blocks[i] = b
            yield from extend(i + 1, max(used, b + 1))
        blocks[i] = -1

    yield from extend(0, 0)


def count_proper_partitions(masks: list[int] | tuple[int, ...]) -> int:
    return sum(1 for _ in iter_proper_partitions(masks))
