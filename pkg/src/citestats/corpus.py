"""Citation corpus: data model, JSON-lines ingestion, validation.

A corpus is an immutable collection of :class:`PaperRecord` objects with
citation edges materialized for every reference that resolves to another
paper in the corpus.  References pointing outside the corpus are *counted*
(``unresolved_reference_count``) rather than dropped silently, so coverage
gaps in the underlying database stay visible in every downstream statistic.

Input format (JSON lines, one record per line)::

    {"id": "p1", "journal": "jnl-a", "year": 2005, "kind": "research-article",
     "authors": ["au-1"], "references": ["p0"]}

``kind`` is one of ``research-article``, ``review``, ``letter``,
``editorial``, ``book``.  Unknown fields are rejected in strict mode and
ignored with a warning otherwise.
"""

from __future__ import annotations

import json
import warnings
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import IO, Any, Union

from .errors import DuplicateIdError, RecordError, UnknownIdError

KINDS = frozenset({"research-article", "review", "letter", "editorial", "book"})

#: Kinds counted as citable items in journal denominators.
SUBSTANTIVE_KINDS = frozenset({"research-article", "review"})

YEAR_MIN = 1800
YEAR_MAX = 2100

_RECORD_FIELDS = ("id", "journal", "year", "kind", "authors", "references")


@dataclass(frozen=True, slots=True)
class PaperRecord:
    """One published item: journal, year, kind, authors, outgoing references."""

    id: str
    journal_id: str
    year: int
    kind: str
    author_ids: tuple[str, ...] = ()
    reference_ids: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "author_ids", tuple(self.author_ids))
        object.__setattr__(self, "reference_ids", tuple(self.reference_ids))
        if not self.id or not isinstance(self.id, str):
            raise ValueError("paper id must be a nonempty string")
        if not self.journal_id or not isinstance(self.journal_id, str):
            raise ValueError(f"paper {self.id!r}: journal must be a nonempty string")
        if isinstance(self.year, bool) or not isinstance(self.year, int):
            raise ValueError(f"paper {self.id!r}: year must be an integer")
        if not YEAR_MIN <= self.year <= YEAR_MAX:
            raise ValueError(
                f"paper {self.id!r}: year {self.year} outside [{YEAR_MIN}, {YEAR_MAX}]"
            )
        if self.kind not in KINDS:
            raise ValueError(
                f"paper {self.id!r}: kind {self.kind!r} not one of {sorted(KINDS)}"
            )
        if len(set(self.reference_ids)) != len(self.reference_ids):
            raise ValueError(f"paper {self.id!r}: duplicate reference ids")
        if self.id in self.reference_ids:
            raise ValueError(f"paper {self.id!r}: paper references itself")

    @property
    def is_substantive(self) -> bool:
        return self.kind in SUBSTANTIVE_KINDS


@dataclass(frozen=True, slots=True)
class CitationEdge:
    """One resolved citation: ``citing_id`` (published in ``citing_year``)
    cites ``cited_id`` (published in ``cited_year``)."""

    citing_id: str
    cited_id: str
    citing_year: int
    cited_year: int

    @property
    def age(self) -> int:
        """Citation age; negative for in-press anomalies."""
        return self.citing_year - self.cited_year


class Corpus:
    """Immutable, indexed collection of papers and their citation edges.

    Construct with :meth:`from_records` or :func:`load_corpus`.  Safe for
    concurrent read access: all exposed containers are read-only views.
    """

    __slots__ = (
        "_papers",
        "_edges",
        "_incoming",
        "_journal_papers",
        "_author_papers",
        "_unresolved",
    )

    def __init__(self, *args, **kwargs):
        raise TypeError("use Corpus.from_records() or load_corpus()")

    @classmethod
    def from_records(cls, records: Iterable[PaperRecord]) -> "Corpus":
        """Build a corpus, materializing edges for in-corpus references only."""
        papers: dict[str, PaperRecord] = {}
        for record in records:
            if record.id in papers:
                raise DuplicateIdError(f"duplicate paper id {record.id!r}")
            papers[record.id] = record

        edges: list[CitationEdge] = []
        incoming: dict[str, list[CitationEdge]] = {pid: [] for pid in papers}
        journal_papers: dict[str, list[str]] = {}
        author_papers: dict[str, list[str]] = {}
        unresolved = 0
        for record in papers.values():
            journal_papers.setdefault(record.journal_id, []).append(record.id)
            for author_id in record.author_ids:
                author_papers.setdefault(author_id, []).append(record.id)
            for ref in record.reference_ids:
                target = papers.get(ref)
                if target is None:
                    unresolved += 1
                    continue
                edge = CitationEdge(record.id, ref, record.year, target.year)
                edges.append(edge)
                incoming[ref].append(edge)

        corpus = object.__new__(cls)
        corpus._papers = MappingProxyType(papers)
        corpus._edges = tuple(edges)
        corpus._incoming = MappingProxyType(
            {pid: tuple(lst) for pid, lst in incoming.items()}
        )
        corpus._journal_papers = MappingProxyType(
            {jid: tuple(lst) for jid, lst in journal_papers.items()}
        )
        corpus._author_papers = MappingProxyType(
            {aid: tuple(lst) for aid, lst in author_papers.items()}
        )
        corpus._unresolved = unresolved
        return corpus

    @property
    def papers(self) -> Mapping[str, PaperRecord]:
        return self._papers

    @property
    def edges(self) -> tuple[CitationEdge, ...]:
        return self._edges

    @property
    def journal_papers(self) -> Mapping[str, tuple[str, ...]]:
        """Journal id -> ids of every paper published in that journal."""
        return self._journal_papers

    @property
    def author_papers(self) -> Mapping[str, tuple[str, ...]]:
        """Author id -> ids of every paper listing that author."""
        return self._author_papers

    @property
    def unresolved_reference_count(self) -> int:
        return self._unresolved

    def paper(self, paper_id: str) -> PaperRecord:
        try:
            return self._papers[paper_id]
        except KeyError:
            raise UnknownIdError(f"unknown paper id {paper_id!r}") from None

    def incoming_edges(self, paper_id: str) -> tuple[CitationEdge, ...]:
        """Edges citing the given paper."""
        try:
            return self._incoming[paper_id]
        except KeyError:
            raise UnknownIdError(f"unknown paper id {paper_id!r}") from None

    def __len__(self) -> int:
        return len(self._papers)

    def __repr__(self) -> str:
        return (
            f"<Corpus papers={len(self._papers)} edges={len(self._edges)} "
            f"journals={len(self._journal_papers)} "
            f"unresolved={self._unresolved}>"
        )


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Counts of data anomalies; reporting only, never mutates the corpus."""

    paper_count: int
    edge_count: int
    unresolved_references: int
    negative_age_edges: int
    papers_without_authors: int

    @property
    def is_clean(self) -> bool:
        return (
            self.unresolved_references == 0
            and self.negative_age_edges == 0
            and self.papers_without_authors == 0
        )

    def to_dict(self) -> dict[str, int]:
        return {
            "paper_count": self.paper_count,
            "edge_count": self.edge_count,
            "unresolved_references": self.unresolved_references,
            "negative_age_edges": self.negative_age_edges,
            "papers_without_authors": self.papers_without_authors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def validate(corpus: Corpus) -> ValidationReport:
    """Tally unresolved references, negative-age edges, authorless papers."""
    return ValidationReport(
        paper_count=len(corpus.papers),
        edge_count=len(corpus.edges),
        unresolved_references=corpus.unresolved_reference_count,
        negative_age_edges=sum(1 for e in corpus.edges if e.age < 0),
        papers_without_authors=sum(
            1 for p in corpus.papers.values() if not p.author_ids
        ),
    )


def citations_to(
    corpus: Corpus, paper_id: str, citing_years: Iterable[int] | None = None
) -> int:
    """Number of in-corpus citations to a paper, optionally restricted to
    citing (source) years."""
    edges = corpus.incoming_edges(paper_id)
    if citing_years is None:
        return len(edges)
    years = frozenset(citing_years)
    return sum(1 for e in edges if e.citing_year in years)


def _record_from_obj(obj: Any, line_number: int, strict: bool, warned: set) -> PaperRecord:
    if not isinstance(obj, Mapping):
        raise RecordError(
            f"line {line_number}: record must be a JSON object", line_number
        )
    missing = [f for f in _RECORD_FIELDS if f not in obj]
    if missing:
        raise RecordError(
            f"line {line_number}: missing field(s) {', '.join(missing)}", line_number
        )
    unknown = sorted(set(obj) - set(_RECORD_FIELDS))
    if unknown:
        if strict:
            raise RecordError(
                f"line {line_number}: unknown field(s) {', '.join(unknown)}",
                line_number,
            )
        for name in unknown:
            if name not in warned:
                warned.add(name)
                warnings.warn(
                    f"ignoring unknown record field {name!r} "
                    f"(first seen on line {line_number})",
                    stacklevel=3,
                )
    for field, value in (("authors", obj["authors"]), ("references", obj["references"])):
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise RecordError(
                f"line {line_number}: {field!r} must be an array of strings",
                line_number,
            )
    try:
        return PaperRecord(
            id=obj["id"],
            journal_id=obj["journal"],
            year=obj["year"],
            kind=obj["kind"],
            author_ids=tuple(obj["authors"]),
            reference_ids=tuple(obj["references"]),
        )
    except ValueError as exc:
        raise RecordError(f"line {line_number}: {exc}", line_number) from exc


def iter_records(
    source: Iterable[Union[str, bytes, Mapping, PaperRecord]], strict: bool = False
) -> Iterator[PaperRecord]:
    """Yield :class:`PaperRecord` from JSON lines, dicts or ready-made records.

    Blank lines are skipped.  Malformed items raise :class:`RecordError`
    carrying the 1-based line number.
    """
    warned: set = set()
    for line_number, item in enumerate(source, 1):
        if isinstance(item, PaperRecord):
            yield item
            continue
        if isinstance(item, (str, bytes)):
            if not item.strip():
                continue
            try:
                obj = json.loads(item)
            except json.JSONDecodeError as exc:
                raise RecordError(
                    f"line {line_number}: invalid JSON ({exc.msg})", line_number
                ) from exc
            yield _record_from_obj(obj, line_number, strict, warned)
            continue
        yield _record_from_obj(item, line_number, strict, warned)


def load_corpus(
    source: Union[str, Path, IO[str], Iterable], strict: bool = False
) -> Corpus:
    """Load a corpus from a JSON-lines path, open file or record iterable."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as handle:
            return Corpus.from_records(iter_records(handle, strict=strict))
    return Corpus.from_records(iter_records(source, strict=strict))


def record_to_json(record: PaperRecord) -> str:
    """Serialize one record to its canonical (byte-stable) JSON line."""
    return json.dumps(
        {
            "id": record.id,
            "journal": record.journal_id,
            "year": record.year,
            "kind": record.kind,
            "authors": list(record.author_ids),
            "references": list(record.reference_ids),
        },
        separators=(",", ":"),
        ensure_ascii=False,
    )


def corpus_to_jsonl(corpus: Corpus) -> str:
    """Canonical JSON-lines serialization; round-trips through load_corpus."""
    return "".join(record_to_json(p) + "\n" for p in corpus.papers.values())


def write_corpus(corpus: Corpus, target: Union[str, Path, IO[str]]) -> None:
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8") as handle:
            handle.write(corpus_to_jsonl(corpus))
    else:
        target.write(corpus_to_jsonl(corpus))
