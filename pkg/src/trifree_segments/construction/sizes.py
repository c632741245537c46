from dataclasses import dataclass

from .. import _logger as logger
from ..exceptions import InvalidK


@dataclass(frozen=True)
class SizeTable:
    """
    线段数s_i与探针数p_i的递推表（i = 1..k）
    s_1 = p_1 = 1, s_{i+1} = (p_i+1)s_i + p_i^2, p_{i+1} = 2p_i^2
    """

    k: int
    s: tuple[int, ...]
    p: tuple[int, ...]

    @property
    def s_k(self) -> int:
        return self.s[-1]

    @property
    def p_k(self) -> int:
        return self.p[-1]

    def tilde_size(self, i: int) -> int:
        """增广族的大小 s_i + p_i"""
        return self.s[i - 1] + self.p[i - 1]


def check_k(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        logger.error(f"非法的层数k: {k}")
        raise InvalidK(k)
    return k


def sizes(k: int) -> SizeTable:
    """
    计算递推表（任意精度整数）
    :param k: 层数（k >= 1）
    :return: SizeTable
    """
    check_k(k)
    s, p = [1], [1]
    for _ in range(k - 1):
        s.append((p[-1] + 1) * s[-1] + p[-1] ** 2)
        p.append(2 * p[-1] ** 2)
    return SizeTable(k=k, s=tuple(s), p=tuple(p))
