from dataclasses import dataclass, field

from packaging.version import Version

NEWEST_VER = "0.1.0"  # 当前支持的最新版本


@dataclass
class BuildConfig:
    rect: tuple[str, str, str, str] = ("0", "0", "1", "1")  # 默认构造矩形 (x0, y0, x1, y1)，规范有理数文本


@dataclass
class SolverConfig:
    budget: float = 60.0  # 染色搜索的墙钟时间预算（单位：秒）
    workers: int = 1  # 并行搜索的进程数（1为单进程，结果可复现）
    exhaustive_triangle_limit: int = 5000  # 无三角形检查使用穷举三元组的最大顶点数
    check_interval: int = 2048  # 两次读取时钟之间的搜索节点数


@dataclass
class VerificationConfig:
    lemma_max_segments: int = 13  # 引理性质穷举检查允许的最大线段数


@dataclass
class RenderConfig:
    canvas_width: int = 800  # 画布宽度（px）
    canvas_height: int = 800  # 画布高度（px）
    stroke_scale: float = 1.0  # 线宽倍数
    significant_digits: int = 12  # 坐标显示的有效数字
    segment_color: str = "#1f3a93"  # 线段颜色
    diagonal_color: str = "#c0392b"  # 对角线颜色（highlight_diagonals时使用）
    probe_color: str = "#7f8c8d"  # 探针轮廓颜色
    root_color: str = "#f4d03f"  # 根的填充颜色


@dataclass
class LoggingConfig:
    level: str = "INFO"  # 命令行的日志级别


@dataclass
class ModuleConfig:
    INNER_VERSION: Version | None = None  # 配置文件版本

    build: BuildConfig = field(default_factory=lambda: BuildConfig())  # 构造配置
    solver: SolverConfig = field(default_factory=lambda: SolverConfig())  # 求解器配置
    verification: VerificationConfig = field(
        default_factory=lambda: VerificationConfig()
    )  # 校验配置
    render: RenderConfig = field(default_factory=lambda: RenderConfig())  # 渲染配置
    logging: LoggingConfig = field(default_factory=lambda: LoggingConfig())  # 日志配置
