import os
from typing import Any, Callable, Dict

import tomli
from packaging import version
from packaging.specifiers import SpecifierSet
from packaging.version import InvalidVersion, Version

from .. import _logger as logger
from ..geometry import parse_rational
from .config import NEWEST_VER, ModuleConfig

_LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


def _get_config_version(toml: Dict) -> Version:
    """提取配置文件的 SpecifierSet 版本数据
    Args:
        toml[dict]: 输入的配置文件字典
    Returns:
        Version
    """

    if "inner" in toml and "version" in toml["inner"]:
        config_version: str = toml["inner"]["version"]
    else:
        config_version = "0.0.0"  # 默认版本

    try:
        ver = version.parse(config_version)
    except InvalidVersion as e:
        logger.error(
            "配置文件中 inner段 的 version 键是错误的版本描述\n"
            f"请检查配置文件，当前 version 键: {config_version}\n"
            f"错误信息: {e}"
        )
        raise InvalidVersion("配置文件中 inner段 的 version 键是错误的版本描述\n") from e

    return ver


def _apply(section: str, values: Dict, target: Any, checks: Dict[str, Callable[[Any], bool]]):
    """把配置段中的键逐一写入目标数据类，未知键抛出KeyError，类型不符抛出ValueError"""
    for key, value in values.items():
        if key not in checks:
            logger.error(f"配置段 '{section}' 中存在未知的键 '{key}'，请检查配置文件。")
            raise KeyError(f"配置段 '{section}' 中存在未知的键 '{key}'，请检查配置文件。")
        if not checks[key](value):
            logger.error(f"配置项 '{section}.{key}' 的值 {value!r} 不合法，请检查配置文件。")
            raise ValueError(f"配置项 '{section}.{key}' 的值 {value!r} 不合法，请检查配置文件。")
        setattr(target, key, value)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_positive_int(value: Any) -> bool:
    return _is_int(value) and value > 0


def _is_positive_number(value: Any) -> bool:
    return (_is_int(value) or isinstance(value, float)) and value > 0


def _is_color(value: Any) -> bool:
    return isinstance(value, str) and value.strip() != ""


def _build(parent: Dict, config: ModuleConfig):
    build_config = parent.get("build")
    rect = build_config.get("rect")
    if rect is not None:
        try:
            x0, y0, x1, y1 = (parse_rational(str(v)) for v in rect)
        except ValueError as e:
            logger.error(f"配置项 'build.rect' 的值 {rect!r} 不合法，应为四个规范有理数。")
            raise ValueError(f"配置项 'build.rect' 的值 {rect!r} 不合法，应为四个规范有理数。") from e
        if not (x0 < x1 and y0 < y1):
            logger.error(f"配置项 'build.rect' 描述的矩形面积不为正: {rect!r}")
            raise ValueError(f"配置项 'build.rect' 描述的矩形面积不为正: {rect!r}")
        config.build.rect = tuple(str(v) for v in rect)
    _apply("build", {k: v for k, v in build_config.items() if k != "rect"}, config.build, {})


def _solver(parent: Dict, config: ModuleConfig):
    _apply(
        "solver",
        parent.get("solver"),
        config.solver,
        {
            "budget": _is_positive_number,
            "workers": _is_positive_int,
            "exhaustive_triangle_limit": _is_positive_int,
            "check_interval": _is_positive_int,
        },
    )
    config.solver.budget = float(config.solver.budget)


def _verification(parent: Dict, config: ModuleConfig):
    _apply(
        "verification",
        parent.get("verification"),
        config.verification,
        {"lemma_max_segments": _is_positive_int},
    )


def _render(parent: Dict, config: ModuleConfig):
    _apply(
        "render",
        parent.get("render"),
        config.render,
        {
            "canvas_width": _is_positive_int,
            "canvas_height": _is_positive_int,
            "stroke_scale": _is_positive_number,
            "significant_digits": _is_positive_int,
            "segment_color": _is_color,
            "diagonal_color": _is_color,
            "probe_color": _is_color,
            "root_color": _is_color,
        },
    )


def _logging(parent: Dict, config: ModuleConfig):
    _apply(
        "logging",
        parent.get("logging"),
        config.logging,
        {"level": lambda v: isinstance(v, str) and v.upper() in _LOG_LEVELS},
    )
    config.logging.level = config.logging.level.upper()


def load_config(config_path: str) -> ModuleConfig:
    """从TOML配置文件加载配置（文件不存在时返回默认配置）"""
    config = ModuleConfig()

    include_configs: Dict[str, Dict[str, Any]] = {
        "build": {"func": _build, "support": ">=0.0.0"},
        "solver": {"func": _solver, "support": ">=0.0.0"},
        "verification": {"func": _verification, "support": ">=0.0.0"},
        "render": {"func": _render, "support": ">=0.1.0"},
        "logging": {"func": _logging, "support": ">=0.0.0"},
    }

    if os.path.exists(config_path):
        with open(config_path, "rb") as f:
            try:
                toml_dict = tomli.load(f)
            except tomli.TOMLDecodeError as e:
                logger.critical(f"配置文件 {config_path} 填写有误：{e}")
                raise ValueError(f"配置文件 {config_path} 填写有误：{e}") from e

        # 获取配置文件版本
        config.INNER_VERSION = _get_config_version(toml_dict)

        # 检查版本
        if config.INNER_VERSION > Version(NEWEST_VER):
            logger.warning(
                f"当前配置文件版本 {config.INNER_VERSION} 高于支持的最新版本 {NEWEST_VER}，可能导致异常，建议更新依赖。"
            )

        for key in toml_dict:
            if key != "inner" and key not in include_configs:
                logger.error(f"配置文件中存在未知的配置段: '{key}'")
                raise KeyError(f"配置文件中存在未知的配置段: '{key}'")

        # 如果在配置中找到了需要的项，调用对应项的闭包函数处理
        for key in include_configs:
            if key not in toml_dict:
                continue
            group_specifier_set: SpecifierSet = SpecifierSet(include_configs[key]["support"])

            # 检查配置文件版本是否在支持范围内
            if config.INNER_VERSION in group_specifier_set:
                (include_configs[key]["func"])(toml_dict, config)
            else:
                logger.error(
                    f"配置文件中的 '{key}' 字段的版本 ({config.INNER_VERSION}) 不在支持范围内。\n"
                    f"当前程序仅支持以下版本范围: {group_specifier_set}"
                )
                raise InvalidVersion(f"当前程序仅支持以下版本范围: {group_specifier_set}")

        logger.success(f"成功加载配置文件: {config_path}")
    else:
        logger.debug(f"配置文件 {config_path} 不存在，使用默认配置")

    return config
