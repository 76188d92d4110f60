"""Universal-competencies catalog, compliance mapping, and resource budget.

A competency catalog lists m competencies (the shipped default carries the
32-item Council of Europe cross-disciplinary set). A compliance matrix marks
with 0/1 which competency applies to which enterprise process. Activating
competency mappings costs money; the budget gate checks that cost against an
available limit. Finally, the mapping can be projected onto a process series
to produce the "universal competencies" management-mode series.

All types are immutable values and all operations are pure.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from enum import Enum
from math import fsum
from pathlib import Path

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateId,
    GapInIds,
    NonBinaryEntry,
    NonFiniteValue,
    ParseError,
)
from .process_model import ProcessSeries

_DEFAULT_CATALOG_RESOURCE = "universal_competencies_32.tsv"


@dataclass(frozen=True)
class Competency:
    """One catalog entry: a 1-based id and an opaque description string."""

    id: int
    description: str

    def __post_init__(self) -> None:
        if self.id < 1:
            raise GapInIds(f"competency id must be >= 1, got {self.id}")
        if not self.description:
            raise ParseError(f"competency {self.id} has an empty description")


@dataclass(frozen=True)
class CompetencyCatalog:
    """Ordered list of competencies with ids exactly 1..m."""

    competencies: tuple[Competency, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.competencies)
        object.__setattr__(self, "competencies", entries)
        if not entries:
            raise GapInIds("catalog must contain at least one competency")
        ids = [c.id for c in entries]
        seen: set[int] = set()
        for c in entries:
            if c.id in seen:
                raise DuplicateId(f"competency id {c.id} occurs more than once")
            seen.add(c.id)
        if ids != list(range(1, len(ids) + 1)):
            raise GapInIds(f"ids must be exactly 1..{len(ids)}, got {ids}")

    @property
    def m(self) -> int:
        return len(self.competencies)

    def description(self, competency_id: int) -> str:
        return self.competencies[competency_id - 1].description


@dataclass(frozen=True)
class ComplianceMatrix:
    """Binary m x n matrix: entry (i, j) is 1 when competency i applies to process j."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, copy=True)
        if arr.ndim != 2:
            raise DimensionMismatch(
                f"compliance matrix must be 2-d, got {arr.ndim} dimension(s)"
            )
        if not np.isin(arr, (0, 1)).all():
            raise NonBinaryEntry("compliance entries must all be 0 or 1")
        arr = arr.astype(np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def m(self) -> int:
        """Competency count (rows)."""
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        """Process count (columns)."""
        return self.entries.shape[1]

    def active_competencies(self) -> np.ndarray:
        """Boolean vector: competency i has at least one mapped process."""
        return self.entries.any(axis=1)

    def coverage_counts(self) -> np.ndarray:
        """Per-process count of competencies mapped to it (column sums)."""
        return self.entries.sum(axis=0)


@dataclass(frozen=True)
class ResourceBudget:
    """Available resource limit and per-competency activation costs (thousand rubles)."""

    limit_c: float
    cost_per_competency: tuple[float, ...]

    def __post_init__(self) -> None:
        limit = float(self.limit_c)
        if not np.isfinite(limit) or limit < 0:
            raise NonFiniteValue(f"budget limit must be finite and >= 0, got {limit}")
        object.__setattr__(self, "limit_c", limit)
        costs = tuple(float(c) for c in self.cost_per_competency)
        for i, c in enumerate(costs, start=1):
            if not np.isfinite(c) or c < 0:
                raise NonFiniteValue(f"cost for competency {i} must be finite and >= 0, got {c}")
        object.__setattr__(self, "cost_per_competency", costs)


@dataclass(frozen=True)
class BudgetCheck:
    """Outcome of the budget gate: the computed cost, the limit, and the verdict."""

    accepted: bool
    cost: float
    limit: float


class DerivationRule(str, Enum):
    """How the compliance matrix projects a process series into competency mode.

    ``MASK`` (coverage-mask): a process variable is copied through when at
    least one competency maps to it, and zeroed otherwise.
    ``WEIGHT`` (coverage-weight): each variable is scaled by the number of
    competencies mapped to it.
    """

    MASK = "mask"
    WEIGHT = "weight"


def load_catalog(source: str | Path) -> CompetencyCatalog:
    """Load a competency catalog from a tab-separated document.

    Format: one ``id<TAB>description`` entry per line, ids contiguous from 1,
    UTF-8. Blank lines and lines starting with ``#`` are skipped.

    Raises
    ------
    ParseError
        Malformed line (wrong field count, non-integer id, empty description).
    DuplicateId, GapInIds
        Ids are not exactly 1..m.
    """
    text = Path(source).read_text(encoding="utf-8")
    return parse_catalog(text)


def parse_catalog(text: str) -> CompetencyCatalog:
    """Parse catalog TSV text; see :func:`load_catalog` for the format."""
    entries: list[Competency] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(
                f"expected 'id<TAB>description', got {len(parts)} field(s)", line=lineno
            )
        id_token, description = parts
        try:
            cid = int(id_token)
        except ValueError:
            raise ParseError(f"competency id {id_token!r} is not an integer", line=lineno)
        if not description.strip():
            raise ParseError("empty description", line=lineno)
        entries.append(Competency(id=cid, description=description.strip()))
    if not entries:
        raise ParseError("catalog document contains no entries")
    ids = [c.id for c in entries]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise DuplicateId(f"competency id {dup} occurs more than once")
    if sorted(ids) != list(range(1, len(ids) + 1)):
        raise GapInIds(f"ids must be exactly 1..{len(ids)}, got {sorted(ids)}")
    entries.sort(key=lambda c: c.id)
    return CompetencyCatalog(competencies=tuple(entries))


def default_catalog() -> CompetencyCatalog:
    """The shipped 32-entry universal-competencies catalog."""
    ref = importlib.resources.files("ucindex") / "data" / _DEFAULT_CATALOG_RESOURCE
    return parse_catalog(ref.read_text(encoding="utf-8"))


def mapping_cost(matrix: ComplianceMatrix, budget: ResourceBudget) -> float:
    """Total activation cost of the mapping.

    A competency is active when its row has at least one 1; the cost is the
    sum of ``cost_per_competency`` over active competencies.

    Raises
    ------
    DimensionMismatch
        If the cost vector length differs from the matrix row count.
    """
    if len(budget.cost_per_competency) != matrix.m:
        raise DimensionMismatch(
            f"{len(budget.cost_per_competency)} costs for {matrix.m} competencies"
        )
    active = matrix.active_competencies()
    return fsum(c for c, a in zip(budget.cost_per_competency, active) if a)


def check_budget(matrix: ComplianceMatrix, budget: ResourceBudget) -> BudgetCheck:
    """Gate the mapping against the resource limit (non-strict: cost == limit passes)."""
    cost = mapping_cost(matrix, budget)
    return BudgetCheck(accepted=cost <= budget.limit_c, cost=cost, limit=budget.limit_c)


def derive_mode_series(
    series: ProcessSeries,
    matrix: ComplianceMatrix,
    rule: DerivationRule | str = DerivationRule.MASK,
) -> ProcessSeries:
    """Project a process series into competency mode under an explicit rule.

    The source series is never modified. Which rule was used should be
    echoed in any downstream report metadata; see :class:`DerivationRule`
    for the two rules.

    Raises
    ------
    DimensionMismatch
        If the matrix process count differs from the series variable count.
    """
    rule = DerivationRule(rule)
    if matrix.n != series.n:
        raise DimensionMismatch(
            f"compliance matrix covers {matrix.n} processes, series has {series.n}"
        )
    counts = matrix.coverage_counts().astype(float)
    if rule is DerivationRule.MASK:
        factors = (counts > 0).astype(float)
    else:
        factors = counts
    values = series.values * factors[:, np.newaxis]
    return ProcessSeries(values=values, variable_labels=series.variable_labels)
