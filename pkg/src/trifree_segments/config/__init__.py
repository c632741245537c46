from .config import (
    NEWEST_VER,
    BuildConfig,
    LoggingConfig,
    ModuleConfig,
    RenderConfig,
    SolverConfig,
    VerificationConfig,
)
from .parser import load_config

__all__ = [
    "NEWEST_VER",
    "BuildConfig",
    "LoggingConfig",
    "ModuleConfig",
    "RenderConfig",
    "SolverConfig",
    "VerificationConfig",
    "load_config",
]
