"""Institutional scoring rules and their divergence from citation counts.

Implements three scoring rules in active institutional use (flat points
for indexed-journal publication, tercile points for five selected papers,
author-share-weighted impact factors) plus a rank-correlation diagnostic
for how far such scores drift from the citation record they stand in for.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .corpus import Corpus, PaperRecord
from .errors import InsufficientDataError, PolicyError
from .journal_metrics import (
    DEFAULT_DENOMINATOR_POLICY,
    DEFAULT_SELF_CITATION_POLICY,
    IFQuery,
    impact_factor,
)

TIER_NAMES = ("top", "middle", "bottom")
UNINDEXED = "unindexed"

TIER_POINTS = {"top": 3, "middle": 2, "bottom": 1, UNINDEXED: 0}

CORE_POINTS = 15
INDEXED_POINTS = 10


@dataclass(frozen=True)
class TierTable:
    """Tercile partition of journals by impact factor.

    Journals with undefined impact factors are ``unindexed``.  Boundary
    ties break by journal id, lexicographically; ``ranking`` records the
    defined-IF ordering actually used (best first).
    """

    tiers: Mapping[str, str]
    census_year: int
    window_w: int
    ranking: tuple[tuple[str, Fraction], ...]

    def __post_init__(self):
        object.__setattr__(self, "tiers", MappingProxyType(dict(self.tiers)))

    def tier_of(self, journal_id: str) -> str:
        """Tier for a journal; journals outside the table are unindexed."""
        return self.tiers.get(journal_id, UNINDEXED)


def build_tiers(
    corpus: Corpus,
    census_year: int,
    window_w: int = 2,
    *,
    denominator_policy: str = DEFAULT_DENOMINATOR_POLICY,
    self_citation_policy: str = DEFAULT_SELF_CITATION_POLICY,
) -> TierTable:
    """Rank every corpus journal by impact factor and split into thirds.

    Tier sizes differ by at most one; when the count is not divisible by
    three the better tiers take the extra journals.
    """
    defined: list[tuple[str, Fraction]] = []
    unindexed: list[str] = []
    for journal_id in sorted(corpus.journal_papers):
        result = impact_factor(
            corpus,
            IFQuery(
                journal_id=journal_id,
                census_year=census_year,
                window_w=window_w,
                denominator_policy=denominator_policy,
                self_citation_policy=self_citation_policy,
            ),
        )
        if result.is_defined:
            defined.append((journal_id, result.value))
        else:
            unindexed.append(journal_id)
    if len(defined) < 3:
        raise InsufficientDataError(
            f"tier table needs >= 3 journals with defined impact factors, "
            f"got {len(defined)}"
        )
    defined.sort(key=lambda item: (-item[1], item[0]))
    base, remainder = divmod(len(defined), 3)
    sizes = [base + (1 if i < remainder else 0) for i in range(3)]
    tiers: dict[str, str] = {}
    position = 0
    for name, size in zip(TIER_NAMES, sizes):
        for journal_id, _ in defined[position : position + size]:
            tiers[journal_id] = name
        position += size
    for journal_id in unindexed:
        tiers[journal_id] = UNINDEXED
    return TierTable(
        tiers=tiers,
        census_year=census_year,
        window_w=window_w,
        ranking=tuple(defined),
    )


@dataclass(frozen=True, slots=True)
class PolicyScore:
    """A rule's score for one subject, with its per-paper breakdown."""

    subject_id: str
    rule: str
    score: Fraction
    breakdown: tuple[tuple[str, Fraction], ...]

    def __post_init__(self):
        total = sum((points for _, points in self.breakdown), Fraction(0))
        if total != self.score:
            raise ValueError(
                f"score {self.score} does not equal breakdown sum {total}"
            )


def _score(subject_id: str, rule: str, breakdown: list[tuple[str, Fraction]]) -> PolicyScore:
    return PolicyScore(
        subject_id=subject_id,
        rule=rule,
        score=sum((points for _, points in breakdown), Fraction(0)),
        breakdown=tuple(breakdown),
    )


def score_example1(
    papers: Iterable[PaperRecord],
    core_journals: Iterable[str],
    indexed_journals: Iterable[str],
    subject_id: str = "paper-set",
) -> PolicyScore:
    """Flat points per publication: 15 for a core-list journal, 10 for any
    other indexed journal, 0 otherwise.  The two lists must be disjoint."""
    core = frozenset(core_journals)
    indexed = frozenset(indexed_journals)
    overlap = core & indexed
    if overlap:
        raise PolicyError(
            f"core and indexed journal lists overlap: {sorted(overlap)}"
        )
    breakdown = []
    for paper in papers:
        if paper.journal_id in core:
            points = CORE_POINTS
        elif paper.journal_id in indexed:
            points = INDEXED_POINTS
        else:
            points = 0
        breakdown.append((paper.id, Fraction(points)))
    return _score(subject_id, "example1", breakdown)


def score_example2(
    papers: Sequence[PaperRecord],
    tiers: TierTable,
    subject_id: str = "paper-set",
) -> PolicyScore:
    """Tercile points for exactly five selected papers: 3 / 2 / 1 for
    top / middle / bottom tier journals, 0 for unindexed ones."""
    if len(papers) != 5:
        raise PolicyError(f"rule scores exactly 5 papers, got {len(papers)}")
    breakdown = [
        (paper.id, Fraction(TIER_POINTS[tiers.tier_of(paper.journal_id)]))
        for paper in papers
    ]
    return _score(subject_id, "example2", breakdown)


def score_example3(
    papers: Iterable[PaperRecord],
    impact_factors: Mapping[str, Fraction | None],
    subject_id: str = "paper-set",
) -> PolicyScore:
    """Author-share-weighted impact factors: each paper contributes
    ``(1 / author count) * IF(journal)``."""
    breakdown = []
    for paper in papers:
        if not paper.author_ids:
            raise PolicyError(f"paper {paper.id!r} has no authors")
        value = impact_factors.get(paper.journal_id)
        if value is None:
            raise PolicyError(
                f"journal {paper.journal_id!r} has no defined impact factor"
            )
        breakdown.append(
            (paper.id, Fraction(1, len(paper.author_ids)) * Fraction(value))
        )
    return _score(subject_id, "example3", breakdown)


@dataclass(frozen=True, slots=True)
class DivergenceResult:
    """Kendall tau-b between two rankings plus the discordant-pair share.

    ``kendall_tau`` is ``None`` when one ranking is entirely tied (the
    tie-corrected denominator vanishes).
    """

    kendall_tau: float | None
    discordant_fraction: Fraction
    concordant_pairs: int
    discordant_pairs: int
    n_subjects: int


def divergence(
    ranking_a: Mapping[str, object], ranking_b: Mapping[str, object]
) -> DivergenceResult:
    """Tie-aware rank correlation between two scorings of the same subjects.

    Inputs map subject id to a comparable score (higher ranks better).
    Tau-b is used because citation-count rankings carry heavy ties.
    """
    if set(ranking_a) != set(ranking_b):
        raise PolicyError("rankings must cover the same subjects")
    subjects = sorted(ranking_a)
    n = len(subjects)
    if n < 2:
        raise PolicyError("divergence needs at least 2 subjects")
    concordant = 0
    discordant = 0
    ties_a = 0
    ties_b = 0
    for i in range(n):
        for j in range(i + 1, n):
            da = (ranking_a[subjects[i]] > ranking_a[subjects[j]]) - (
                ranking_a[subjects[i]] < ranking_a[subjects[j]]
            )
            db = (ranking_b[subjects[i]] > ranking_b[subjects[j]]) - (
                ranking_b[subjects[i]] < ranking_b[subjects[j]]
            )
            if da == 0:
                ties_a += 1
            if db == 0:
                ties_b += 1
            if da != 0 and db != 0:
                if da == db:
                    concordant += 1
                else:
                    discordant += 1
    total_pairs = n * (n - 1) // 2
    denominator = math.sqrt((total_pairs - ties_a) * (total_pairs - ties_b))
    tau = (concordant - discordant) / denominator if denominator > 0 else None
    return DivergenceResult(
        kendall_tau=tau,
        discordant_fraction=Fraction(discordant, total_pairs),
        concordant_pairs=concordant,
        discordant_pairs=discordant,
        n_subjects=n,
    )
