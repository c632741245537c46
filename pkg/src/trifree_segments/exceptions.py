from typing import Any


class OutOfRange(ValueError):
    """查询的y坐标超出线段的y范围"""

    def __init__(self, y: Any, segment_id: int | None = None):
        super().__init__(y, segment_id)
        self.y = y
        self.segment_id = segment_id

    def __str__(self):
        return f"y={self.y} 不在线段 {self.segment_id} 的y范围内"


class InvalidSegment(ValueError):
    """线段必须具有严格正斜率（p在左下，q在右上）"""

    def __init__(self, p: Any, q: Any):
        super().__init__(p, q)
        self.p = p
        self.q = q

    def __str__(self):
        return f"线段端点 {self.p} -> {self.q} 不满足严格正斜率"


class DegenerateRect(ValueError):
    """矩形面积必须为正"""

    def __init__(self, rect: Any):
        super().__init__(rect)
        self.rect = rect

    def __str__(self):
        return f"矩形 {self.rect} 的面积不为正"


class InvalidK(ValueError):
    """构造层数k必须为正整数"""

    def __init__(self, k: Any):
        super().__init__(k)
        self.k = k

    def __str__(self):
        return f"k必须是不小于1的整数，当前为: {self.k}"


class EmptyRoot(Exception):
    """探针的根宽度不为正，通常意味着调用方违反了前置条件"""

    def __init__(self, x0: Any, c: Any):
        super().__init__(x0, c)
        self.x0 = x0
        self.c = c

    def __str__(self):
        return f"探针的根为空：右边界 {self.c} 不大于左边界 {self.x0}"


class ConstructionInvariantViolation(Exception):
    """构造过程的内部校验失败（这意味着实现存在缺陷）"""

    def __init__(self, message: str, detail: Any = None):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def __str__(self):
        if self.detail is not None:
            return f"{self.message}（{self.detail}）"
        return self.message


class InvalidBudget(ValueError):
    """搜索时间预算必须为正数"""

    def __init__(self, budget: Any):
        super().__init__(budget)
        self.budget = budget

    def __str__(self):
        return f"时间预算必须为正数（秒），当前为: {self.budget}"


class TooLarge(ValueError):
    """实例规模超过穷举上限"""

    def __init__(self, size: int, limit: int):
        super().__init__(size, limit)
        self.size = size
        self.limit = limit

    def __str__(self):
        return f"线段数 {self.size} 超过穷举上限 {self.limit}"


class ParseError(ValueError):
    """文件解析错误，附带行列或字段位置"""

    def __init__(
        self,
        message: str | None = None,
        line: int | None = None,
        column: int | None = None,
        field: str | None = None,
    ):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.field = field

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"第{self.line}行")
        if self.column is not None:
            where.append(f"第{self.column}列")
        if self.field is not None:
            where.append(f"字段 '{self.field}'")
        prefix = "，".join(where)
        message = self.message or "文件格式不正确"
        return f"{prefix}：{message}" if prefix else message
