from .checks import (
    LEMMA_MAX_SEGMENTS,
    heaviest_probe,
    verify_construction,
    verify_disjoint_probes,
    verify_family_size,
    verify_general_position,
    verify_lemma_property,
    verify_probe_axioms,
    verify_size_bounds,
)
from .partitions import count_proper_partitions, iter_proper_partitions
from .report import CheckResult, VerificationReport

__all__ = [
    "LEMMA_MAX_SEGMENTS",
    "heaviest_probe",
    "verify_construction",
    "verify_disjoint_probes",
    "verify_family_size",
    "verify_general_position",
    "verify_lemma_property",
    "verify_probe_axioms",
    "verify_size_bounds",
    "count_proper_partitions",
    "iter_proper_partitions",
    "CheckResult",
    "VerificationReport",
]
