"""Exact combinatorics of order-preserving partial transformations on a chain.

Counting, exact rational image-size distributions, canonical ranking and
unranking, and exact-uniform seeded sampling for the monoids of
order-preserving partial (PO), full (O), and injective partial (POI)
transformations of {1..n}, all verifiable against a brute-force oracle.
"""

from .counting import IdentityCheck, binomial, count_cell, count_family, count_stratum, verify_identity
from .distributions import (
    DistributionTable,
    HypergeometricParams,
    conditional_moments,
    conditional_pmf,
    degenerate_pmf,
    hypergeometric_moments,
    hypergeometric_pmf,
    image_size_moments,
    image_size_pmf,
    mixture_pmf,
)
from .oracle import CountTable, enumerate_family, tabulate_counts
from .ranking import Decomposition, decompose, rank, reconstruct, subset_rank, subset_unrank, unrank
from .sampling import SampleReport, monte_carlo_report, sample_chunked, sample_uniform
from .transform import (
    Family,
    PartialTransformation,
    classify,
    compose,
    from_payload,
    identity_map,
    make_partial_map,
    null_map,
    to_payload,
)
from .verify import CheckResult, cross_check, run_verification

__version__ = "0.1.0"

__all__ = [
    "Family",
    "PartialTransformation",
    "classify",
    "compose",
    "make_partial_map",
    "null_map",
    "identity_map",
    "to_payload",
    "from_payload",
    "binomial",
    "count_stratum",
    "count_cell",
    "count_family",
    "verify_identity",
    "IdentityCheck",
    "CountTable",
    "enumerate_family",
    "tabulate_counts",
    "HypergeometricParams",
    "DistributionTable",
    "hypergeometric_pmf",
    "hypergeometric_moments",
    "degenerate_pmf",
    "conditional_pmf",
    "conditional_moments",
    "image_size_pmf",
    "image_size_moments",
    "mixture_pmf",
    "Decomposition",
    "decompose",
    "reconstruct",
    "rank",
    "unrank",
    "subset_rank",
    "subset_unrank",
    "SampleReport",
    "sample_uniform",
    "sample_chunked",
    "monte_carlo_report",
    "CheckResult",
    "cross_check",
    "run_verification",
    "__version__",
]
