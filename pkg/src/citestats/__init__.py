"""citestats: citation-corpus analytics.

Computes the classical bibliometric statistics (windowed impact factors,
h/g/m indices, citation-age profiles) together with the uncertainty and
misranking diagnostics usually left out: the exact probability that a
random article from the lower-impact venue matches the higher one,
year-over-year impact-factor variability, self-citation fractions, and
divergence of institutional scoring rules from citation records.
"""

__version__ = "0.1.0"

from .author_metrics import (
    AuthorRecord,
    CitationHistogram,
    author_record,
    citation_histogram,
    g_index,
    h_index,
    m_index,
)
from .compare import (
    ComparisonResult,
    EmpiricalDistribution,
    LogNormalFit,
    journal_distribution,
    lognormal_fit,
    mean,
    prob_at_least,
)
from .corpus import (
    KINDS,
    SUBSTANTIVE_KINDS,
    CitationEdge,
    Corpus,
    PaperRecord,
    ValidationReport,
    citations_to,
    corpus_to_jsonl,
    iter_records,
    load_corpus,
    record_to_json,
    validate,
    write_corpus,
)
from .errors import (
    CitationStatsError,
    DuplicateIdError,
    InsufficientDataError,
    PolicyError,
    RecordError,
    SynthConfigError,
    UnknownIdError,
)
from .journal_metrics import (
    IFQuery,
    IFResult,
    VariabilityResult,
    citation_age_profile,
    if_variability,
    impact_factor,
    self_citation_fraction,
    window_coverage,
)
from .policy import (
    DivergenceResult,
    PolicyScore,
    TierTable,
    build_tiers,
    divergence,
    score_example1,
    score_example2,
    score_example3,
)
from .synth import (
    JournalSpec,
    ReplicateRun,
    SynthConfig,
    config_from_json,
    config_to_json,
    derived_seed,
    generate,
    math_calibrated_config,
    replicate,
    sample_citation_counts,
    volatility_config,
    zero_inflated_pair,
)

__all__ = [
    "__version__",
    "AuthorRecord",
    "CitationEdge",
    "CitationHistogram",
    "CitationStatsError",
    "ComparisonResult",
    "Corpus",
    "DivergenceResult",
    "DuplicateIdError",
    "EmpiricalDistribution",
    "IFQuery",
    "IFResult",
    "InsufficientDataError",
    "JournalSpec",
    "KINDS",
    "LogNormalFit",
    "PaperRecord",
    "PolicyError",
    "PolicyScore",
    "RecordError",
    "ReplicateRun",
    "SUBSTANTIVE_KINDS",
    "SynthConfig",
    "SynthConfigError",
    "TierTable",
    "UnknownIdError",
    "ValidationReport",
    "VariabilityResult",
    "author_record",
    "build_tiers",
    "citation_age_profile",
    "citation_histogram",
    "citations_to",
    "config_from_json",
    "config_to_json",
    "corpus_to_jsonl",
    "derived_seed",
    "divergence",
    "g_index",
    "generate",
    "h_index",
    "if_variability",
    "impact_factor",
    "iter_records",
    "journal_distribution",
    "load_corpus",
    "lognormal_fit",
    "m_index",
    "math_calibrated_config",
    "mean",
    "prob_at_least",
    "record_to_json",
    "replicate",
    "sample_citation_counts",
    "score_example1",
    "score_example2",
    "score_example3",
    "self_citation_fraction",
    "validate",
    "volatility_config",
    "window_coverage",
    "write_corpus",
    "zero_inflated_pair",
]
