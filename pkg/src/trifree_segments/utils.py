import math
import time
from typing import Iterator, Protocol

from .exceptions import InvalidBudget


def iter_bits(mask: int) -> Iterator[int]:
    """
    按从低到高的顺序遍历位掩码中为1的位
    :param mask: 位掩码
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def check_budget(budget: float | None) -> float | None:
    """
    校验时间预算（秒）；None表示不限时
    """
    if budget is None:
        return None
    if isinstance(budget, bool) or not isinstance(budget, (int, float)):
        raise InvalidBudget(budget)
    if math.isnan(budget) or budget <= 0:
        raise InvalidBudget(budget)
    return float(budget)


class StopFlag(Protocol):
    def is_set(self) -> bool: ...


class Deadline:
    """
    墙钟截止时间，每隔check_interval次调用才真正读取一次时钟
    stop被置位时同样视为到期（用于让并行的子搜索提前退出）
    """

    def __init__(
        self, budget: float | None, check_interval: int = 2048, stop: StopFlag | None = None
    ):
        self.budget: float | None = check_budget(budget)
        """时间预算（秒）"""

        self.check_interval: int = max(1, check_interval)
        """两次读取时钟之间的调用次数"""

        self.stop: StopFlag | None = stop
        """外部停止标志（可跨进程共享）"""

        self._start = time.monotonic()
        self._counter = 0
        self._expired = False

    def remaining(self) -> float | None:
        """剩余时间（秒）；不限时返回None"""
        if self.budget is None:
            return None
        return max(0.0, self.budget - (time.monotonic() - self._start))

    def _poll(self) -> bool:
        if self.stop is not None and self.stop.is_set():
            return True
        return self.budget is not None and time.monotonic() - self._start >= self.budget

    def expired(self) -> bool:
        if self._expired:
            return True
        if self.budget is None and self.stop is None:
            return False
        self._counter += 1
        if self._counter >= self.check_interval:
            self._counter = 0
            self._expired = self._poll()
        return self._expired

    def expired_now(self) -> bool:
        """立即读取时钟判断是否超时"""
        self._expired = self._expired or self._poll()
        return self._expired
