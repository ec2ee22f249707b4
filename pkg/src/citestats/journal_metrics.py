"""Journal-level statistics.

Windowed impact factors with explicit denominator and self-citation
policies, citation-age profiles, window coverage, year-over-year
variability, and self-citation fractions.  Ratios are exact
:class:`fractions.Fraction` values; an undefined statistic (empty window,
no received citations) is ``None``, never coerced to zero.
"""

from __future__ import annotations

import warnings
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .corpus import YEAR_MIN, Corpus
from .errors import InsufficientDataError, UnknownIdError

DENOMINATOR_POLICIES = ("substantive-only", "all-items")
SELF_CITATION_POLICIES = ("include", "exclude-same-journal")

DEFAULT_DENOMINATOR_POLICY = "substantive-only"
DEFAULT_SELF_CITATION_POLICY = "include"


@dataclass(frozen=True, slots=True)
class IFQuery:
    """Impact-factor query.

    ``census_year`` is the single citing (source) year; the window covers
    target years ``census_year - window_w`` .. ``census_year - 1``.
    """

    journal_id: str
    census_year: int
    window_w: int = 2
    denominator_policy: str = DEFAULT_DENOMINATOR_POLICY
    self_citation_policy: str = DEFAULT_SELF_CITATION_POLICY

    def __post_init__(self):
        if self.window_w < 1:
            raise ValueError("window_w must be >= 1")
        if self.census_year - self.window_w < YEAR_MIN:
            raise ValueError(
                f"window would start before {YEAR_MIN} "
                f"(census_year={self.census_year}, window_w={self.window_w})"
            )
        if self.denominator_policy not in DENOMINATOR_POLICIES:
            raise ValueError(f"unknown denominator policy {self.denominator_policy!r}")
        if self.self_citation_policy not in SELF_CITATION_POLICIES:
            raise ValueError(
                f"unknown self-citation policy {self.self_citation_policy!r}"
            )

    @property
    def window_years(self) -> range:
        return range(self.census_year - self.window_w, self.census_year)


@dataclass(frozen=True, slots=True)
class IFResult:
    """Impact factor with its provenance.

    ``value`` is ``numerator / denominator`` as an exact fraction, or
    ``None`` when the journal published nothing countable in the window.
    The numerator counts citations from census-year papers of *every* kind;
    ``citing_kinds`` records that choice.
    """

    numerator: int
    denominator: int
    query: IFQuery
    citing_kinds: str = "all-kinds"

    @property
    def is_defined(self) -> bool:
        return self.denominator > 0

    @property
    def value(self) -> Fraction | None:
        if self.denominator == 0:
            return None
        return Fraction(self.numerator, self.denominator)


def _require_journal(corpus: Corpus, journal_id: str) -> tuple[str, ...]:
    try:
        return corpus.journal_papers[journal_id]
    except KeyError:
        raise UnknownIdError(f"unknown journal {journal_id!r}") from None


def impact_factor(corpus: Corpus, query: IFQuery) -> IFResult:
    """Average citations from census-year papers to the journal's window items.

    The window never contains books (a journal publishes none; book citations
    are kept for author metrics only).  Under ``substantive-only`` the
    denominator counts research articles and reviews, yet citations received
    by the journal's letters and editorials still enter the numerator; under
    ``all-items`` every non-book window item is counted.  Under
    ``exclude-same-journal`` citations whose citing paper appears in the same
    journal are dropped from the numerator.
    """
    paper_ids = _require_journal(corpus, query.journal_id)
    window = frozenset(query.window_years)
    numerator = 0
    denominator = 0
    for pid in paper_ids:
        paper = corpus.papers[pid]
        if paper.year not in window or paper.kind == "book":
            continue
        if query.denominator_policy == "all-items" or paper.is_substantive:
            denominator += 1
        for edge in corpus.incoming_edges(pid):
            if edge.citing_year != query.census_year:
                continue
            if (
                query.self_citation_policy == "exclude-same-journal"
                and corpus.papers[edge.citing_id].journal_id == query.journal_id
            ):
                continue
            numerator += 1
    return IFResult(numerator=numerator, denominator=denominator, query=query)


def citation_age_profile(
    corpus: Corpus, census_year: int, journal_id: str | None = None
) -> Counter:
    """Histogram of citation age over all edges whose citing year is
    ``census_year``; a journal filter restricts the cited side."""
    if journal_id is not None:
        _require_journal(corpus, journal_id)
    if not any(p.year == census_year for p in corpus.papers.values()):
        warnings.warn(
            f"no papers published in census year {census_year}; "
            "age profile is empty",
            stacklevel=2,
        )
        return Counter()
    profile: Counter = Counter()
    for edge in corpus.edges:
        if edge.citing_year != census_year:
            continue
        if (
            journal_id is not None
            and corpus.papers[edge.cited_id].journal_id != journal_id
        ):
            continue
        profile[edge.age] += 1
    return profile


def window_coverage(
    corpus: Corpus, journal_id: str, census_year: int, window_w: int
) -> Fraction | None:
    """Fraction of the journal's census-year citations whose cited year falls
    inside the impact-factor window; ``None`` when it receives none."""
    if window_w < 1:
        raise ValueError("window_w must be >= 1")
    paper_ids = _require_journal(corpus, journal_id)
    lo, hi = census_year - window_w, census_year - 1
    received = 0
    inside = 0
    for pid in paper_ids:
        for edge in corpus.incoming_edges(pid):
            if edge.citing_year != census_year:
                continue
            received += 1
            if lo <= edge.cited_year <= hi:
                inside += 1
    if received == 0:
        return None
    return Fraction(inside, received)


@dataclass(frozen=True, slots=True)
class VariabilityResult:
    """Year-over-year impact-factor variability.

    ``mean_abs_relative_change`` averages ``|IF(y+1) - IF(y)| / IF(y)`` over
    consecutive census years.  Pairs with a zero or undefined base are
    skipped and counted, not averaged in.
    """

    journal_id: str
    window_w: int
    impact_factors: Mapping[int, Fraction | None]
    mean_abs_relative_change: Fraction
    pairs_used: int
    zero_base_pairs_skipped: int
    undefined_pairs_skipped: int


def if_variability(
    corpus: Corpus,
    journal_id: str,
    start_year: int,
    end_year: int,
    window_w: int = 2,
    *,
    denominator_policy: str = DEFAULT_DENOMINATOR_POLICY,
    self_citation_policy: str = DEFAULT_SELF_CITATION_POLICY,
) -> VariabilityResult:
    """Mean absolute relative change of the impact factor over census years
    ``start_year`` .. ``end_year``."""
    if end_year <= start_year:
        raise InsufficientDataError(
            "variability needs at least two census years "
            f"(got {start_year}..{end_year})"
        )
    values: dict[int, Fraction | None] = {}
    for year in range(start_year, end_year + 1):
        query = IFQuery(
            journal_id=journal_id,
            census_year=year,
            window_w=window_w,
            denominator_policy=denominator_policy,
            self_citation_policy=self_citation_policy,
        )
        values[year] = impact_factor(corpus, query).value
    if sum(1 for v in values.values() if v is not None) < 2:
        raise InsufficientDataError(
            f"journal {journal_id!r}: fewer than 2 defined impact factors "
            f"in {start_year}..{end_year}"
        )
    changes: list[Fraction] = []
    zero_skipped = 0
    undefined_skipped = 0
    for year in range(start_year, end_year):
        base, nxt = values[year], values[year + 1]
        if base is None or nxt is None:
            undefined_skipped += 1
        elif base == 0:
            zero_skipped += 1
        else:
            changes.append(abs(nxt - base) / base)
    if not changes:
        raise InsufficientDataError(
            f"journal {journal_id!r}: no usable consecutive year pairs "
            f"in {start_year}..{end_year} "
            f"(zero-base skipped: {zero_skipped}, undefined: {undefined_skipped})"
        )
    mean_change = sum(changes, Fraction(0)) / len(changes)
    return VariabilityResult(
        journal_id=journal_id,
        window_w=window_w,
        impact_factors=values,
        mean_abs_relative_change=mean_change,
        pairs_used=len(changes),
        zero_base_pairs_skipped=zero_skipped,
        undefined_pairs_skipped=undefined_skipped,
    )


def self_citation_fraction(
    corpus: Corpus, journal_id: str, window_w: int | None = None
) -> Fraction | None:
    """Fraction of the journal's received citations whose citing paper is in
    the same journal.

    When ``window_w`` is given only citations aged 1..``window_w`` years
    (cited item published in the ``window_w`` years preceding the citing
    paper) are considered.  ``None`` when no citations qualify.
    """
    if window_w is not None and window_w < 1:
        raise ValueError("window_w must be >= 1")
    paper_ids = _require_journal(corpus, journal_id)
    received = 0
    internal = 0
    for pid in paper_ids:
        for edge in corpus.incoming_edges(pid):
            if window_w is not None and not 1 <= edge.age <= window_w:
                continue
            received += 1
            if corpus.papers[edge.citing_id].journal_id == journal_id:
                internal += 1
    if received == 0:
        return None
    return Fraction(internal, received)
