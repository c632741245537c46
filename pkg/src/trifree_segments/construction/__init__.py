from .builder import (
    DEFAULT_RECT,
    Construction,
    ConstructionBuilder,
    build,
    make_probe_pair,
    root_of,
)
from .sizes import SizeTable, sizes
from .tilde import augment_tilde

__all__ = [
    "DEFAULT_RECT",
    "Construction",
    "ConstructionBuilder",
    "build",
    "make_probe_pair",
    "root_of",
    "SizeTable",
    "sizes",
    "augment_tilde",
]
