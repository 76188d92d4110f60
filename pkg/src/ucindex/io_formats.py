"""Flat-file formats: series CSV, compliance CSV, costs CSV, scenario JSON, fixture.

All files are UTF-8 with LF line endings and a ``.`` decimal separator
regardless of locale. Lines starting with ``#`` are metadata comments and
are skipped by every reader. Numeric series values are written with
``repr`` precision so a write/read round trip reproduces them exactly.
Writers go through a write-temp-then-rename step so a crash never leaves a
half-written file behind.

Formats:

* ``series.csv`` -- header ``t,<var1>,...,<varn>``; one row per period with
  t consecutive from 1.
* ``compliance.csv`` -- header ``competency_id,<p1>,...,<pn>``; one row per
  competency (ids consecutive from 1) of literal ``0``/``1`` tokens.
* ``costs.csv`` -- header ``competency_id,cost``; one row per competency.
* ``catalog.tsv`` -- ``id<TAB>description`` (see competencies module).
* ``scenario.json`` -- flat keys t_max, n, seed, base_level, noise_scale,
  event_effect plus an ``events`` list of {period, kind, role, count}.
* scalar CSV -- header ``t,basic,universal_competencies``; per-period
  indicator scalars, as written by the plot-data emitter.
"""

from __future__ import annotations

import importlib.resources
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .competencies import ComplianceMatrix
from .errors import (
    NonBinaryEntry,
    NonMonotonicTime,
    ParseError,
    RaggedRow,
)
from .process_model import ProcessSeries, TimeAxis
from .scenario import Scenario, ScenarioEvent

_FIXTURE_RESOURCE = "mode_comparison_57.csv"

_SCENARIO_KEYS = {"t_max", "n", "seed", "base_level", "noise_scale", "event_effect", "events"}
_EVENT_KEYS = {"period", "kind", "role", "count"}


def atomic_write_text(path: str | Path, text: str) -> None:
    """Write text to ``path`` via a temporary file and an atomic rename."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8", newline="")
    os.replace(tmp, path)


def _data_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based physical line numbers."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        out.append((lineno, raw))
    return out


def read_series_csv(path: str | Path) -> tuple[TimeAxis, ProcessSeries]:
    """Read a process series file.

    Raises
    ------
    ParseError
        Missing/invalid header or unparseable number (with line number).
    NonMonotonicTime
        Period column is not 1, 2, 3, ... in order.
    RaggedRow
        A row's field count differs from the header's.
    """
    lines = _data_lines(Path(path).read_text(encoding="utf-8"))
    if not lines:
        raise ParseError(f"{path}: no header row found")
    header_lineno, header = lines[0]
    fields = header.split(",")
    if fields[0].strip() != "t" or len(fields) < 2:
        raise ParseError("header must be 't,<var1>,...,<varn>'", line=header_lineno)
    labels = tuple(f.strip() for f in fields[1:])
    n = len(labels)

    columns: list[list[float]] = []
    for row_index, (lineno, raw) in enumerate(lines[1:]):
        parts = raw.split(",")
        if len(parts) != n + 1:
            raise RaggedRow(
                f"expected {n + 1} fields, got {len(parts)}", line=lineno
            )
        try:
            t = int(parts[0])
        except ValueError:
            raise ParseError(f"period index {parts[0]!r} is not an integer", line=lineno)
        if t != row_index + 1:
            raise NonMonotonicTime(
                f"expected period {row_index + 1}, got {t} "
                "(periods must be consecutive from 1)",
                line=lineno,
            )
        try:
            columns.append([float(p) for p in parts[1:]])
        except ValueError:
            bad = next(p for p in parts[1:] if not _is_float(p))
            raise ParseError(f"value {bad!r} is not a number", line=lineno)
    if not columns:
        raise ParseError(f"{path}: no data rows")

    values = np.array(columns).T  # rows were periods; store variables x periods
    series = ProcessSeries(values=values, variable_labels=labels)
    return TimeAxis(t_max=series.t_max), series


def _is_float(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def write_series_csv(
    path: str | Path,
    series: ProcessSeries,
    metadata: dict[str, str] | None = None,
) -> None:
    """Write a process series at full (round-trip exact) precision.

    ``metadata`` entries become leading ``# key=value`` comment lines in the
    given order.
    """
    for label in series.variable_labels:
        if "," in label or "\n" in label or "#" in label:
            raise ParseError(f"variable label {label!r} contains a reserved character")
    out: list[str] = []
    for key, value in (metadata or {}).items():
        out.append(f"# {key}={value}")
    out.append("t," + ",".join(series.variable_labels))
    for t in range(1, series.t_max + 1):
        row = series.values[:, t - 1]
        out.append(f"{t}," + ",".join(repr(float(x)) for x in row))
    atomic_write_text(path, "\n".join(out) + "\n")


def read_compliance_csv(path: str | Path) -> ComplianceMatrix:
    """Read a 0/1 compliance matrix.

    Tokens must be exactly ``0`` or ``1``; anything else (including ``0.0``)
    is rejected.

    Raises
    ------
    ParseError, RaggedRow, NonBinaryEntry
    """
    lines = _data_lines(Path(path).read_text(encoding="utf-8"))
    if not lines:
        raise ParseError(f"{path}: no header row found")
    header_lineno, header = lines[0]
    fields = header.split(",")
    if fields[0].strip() != "competency_id" or len(fields) < 2:
        raise ParseError(
            "header must be 'competency_id,<p1>,...,<pn>'", line=header_lineno
        )
    n = len(fields) - 1

    rows: list[list[int]] = []
    for row_index, (lineno, raw) in enumerate(lines[1:]):
        parts = raw.split(",")
        if len(parts) != n + 1:
            raise RaggedRow(f"expected {n + 1} fields, got {len(parts)}", line=lineno)
        try:
            cid = int(parts[0])
        except ValueError:
            raise ParseError(f"competency id {parts[0]!r} is not an integer", line=lineno)
        if cid != row_index + 1:
            raise ParseError(
                f"expected competency id {row_index + 1}, got {cid} "
                "(ids must be consecutive from 1)",
                line=lineno,
            )
        row = []
        for token in parts[1:]:
            token = token.strip()
            if token not in ("0", "1"):
                raise NonBinaryEntry(
                    f"entry {token!r} is not a literal 0 or 1", line=lineno
                )
            row.append(int(token))
        rows.append(row)
    if not rows:
        raise ParseError(f"{path}: no data rows")
    return ComplianceMatrix(entries=np.array(rows))


def read_costs_csv(path: str | Path) -> tuple[float, ...]:
    """Read per-competency activation costs (header ``competency_id,cost``)."""
    lines = _data_lines(Path(path).read_text(encoding="utf-8"))
    if not lines:
        raise ParseError(f"{path}: no header row found")
    header_lineno, header = lines[0]
    if [f.strip() for f in header.split(",")] != ["competency_id", "cost"]:
        raise ParseError("header must be 'competency_id,cost'", line=header_lineno)
    costs: list[float] = []
    for row_index, (lineno, raw) in enumerate(lines[1:]):
        parts = raw.split(",")
        if len(parts) != 2:
            raise RaggedRow(f"expected 2 fields, got {len(parts)}", line=lineno)
        try:
            cid = int(parts[0])
        except ValueError:
            raise ParseError(f"competency id {parts[0]!r} is not an integer", line=lineno)
        if cid != row_index + 1:
            raise ParseError(
                f"expected competency id {row_index + 1}, got {cid}", line=lineno
            )
        try:
            costs.append(float(parts[1]))
        except ValueError:
            raise ParseError(f"cost {parts[1]!r} is not a number", line=lineno)
    if not costs:
        raise ParseError(f"{path}: no data rows")
    return tuple(costs)


def read_scalar_csv(path: str | Path) -> tuple[tuple[int, ...], np.ndarray, np.ndarray]:
    """Read per-period scalar pairs (header ``t,basic,universal_competencies``).

    Returns the period indices and the two scalar columns. Periods must be
    consecutive; they need not start at 1 (reports may begin after warmup).
    """
    lines = _data_lines(Path(path).read_text(encoding="utf-8"))
    if not lines:
        raise ParseError(f"{path}: no header row found")
    header_lineno, header = lines[0]
    fields = [f.strip() for f in header.split(",")]
    if len(fields) < 3 or fields[0] != "t":
        raise ParseError(
            "header must be 't,basic,universal_competencies'", line=header_lineno
        )
    periods: list[int] = []
    basic: list[float] = []
    competency: list[float] = []
    for lineno, raw in lines[1:]:
        parts = raw.split(",")
        if len(parts) != len(fields):
            raise RaggedRow(f"expected {len(fields)} fields, got {len(parts)}", line=lineno)
        try:
            t = int(parts[0])
            b = float(parts[1])
            c = float(parts[2])
        except ValueError:
            raise ParseError(f"unparseable row {raw!r}", line=lineno)
        if periods and t != periods[-1] + 1:
            raise NonMonotonicTime(
                f"expected period {periods[-1] + 1}, got {t}", line=lineno
            )
        periods.append(t)
        basic.append(b)
        competency.append(c)
    if not periods:
        raise ParseError(f"{path}: no data rows")
    return tuple(periods), np.array(basic), np.array(competency)


def read_scenario_json(path: str | Path) -> Scenario:
    """Read a scenario document; unknown keys are rejected to catch typos."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    unknown = set(doc) - _SCENARIO_KEYS
    if unknown:
        raise ParseError(f"{path}: unknown scenario keys {sorted(unknown)}")
    missing = {"t_max", "n", "seed"} - set(doc)
    if missing:
        raise ParseError(f"{path}: missing required keys {sorted(missing)}")
    events = []
    for idx, entry in enumerate(doc.get("events", [])):
        if not isinstance(entry, dict):
            raise ParseError(f"{path}: events[{idx}] must be an object")
        unknown = set(entry) - _EVENT_KEYS
        if unknown:
            raise ParseError(f"{path}: events[{idx}] has unknown keys {sorted(unknown)}")
        missing = _EVENT_KEYS - set(entry)
        if missing:
            raise ParseError(f"{path}: events[{idx}] missing keys {sorted(missing)}")
        events.append(
            ScenarioEvent(
                period=int(entry["period"]),
                kind=str(entry["kind"]),
                role=str(entry["role"]),
                count=int(entry["count"]),
            )
        )
    return Scenario(
        t_max=int(doc["t_max"]),
        n=int(doc["n"]),
        seed=int(doc["seed"]),
        base_level=float(doc.get("base_level", 100.0)),
        noise_scale=float(doc.get("noise_scale", 5.0)),
        event_effect=float(doc.get("event_effect", 1.25)),
        events=tuple(events),
    )


def write_scenario_json(path: str | Path, scenario: Scenario) -> None:
    doc = {
        "t_max": scenario.t_max,
        "n": scenario.n,
        "seed": scenario.seed,
        "base_level": scenario.base_level,
        "noise_scale": scenario.noise_scale,
        "event_effect": scenario.event_effect,
        "events": [
            {
                "period": e.period,
                "kind": e.kind.value,
                "role": e.role,
                "count": e.count,
            }
            for e in scenario.events
        ],
    }
    atomic_write_text(path, json.dumps(doc, indent=2) + "\n")


@dataclass(frozen=True)
class ModeFixture:
    """The shipped 57-period reference table of per-period indicator scalars.

    Values are stored as printed at two decimals, including the per-row
    delta column with its published rounding artifacts, so comparisons
    against this fixture use a +/-0.02 band. ``declared totals`` are the
    table's own footer values.
    """

    periods: tuple[int, ...]
    basic: tuple[float, ...]
    competency: tuple[float, ...]
    delta_printed: tuple[float, ...]
    declared_total_basic: float
    declared_total_competency: float
    declared_total_delta: float


def load_mode_fixture(path: str | Path | None = None) -> ModeFixture:
    """Load the reference mode-comparison fixture (the shipped one by default)."""
    if path is None:
        ref = importlib.resources.files("ucindex") / "data" / _FIXTURE_RESOURCE
        text = ref.read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")

    declared: dict[str, float] = {}
    for raw in text.splitlines():
        stripped = raw.strip()
        if stripped.startswith("#") and "=" in stripped:
            key, _, value = stripped.lstrip("# ").partition("=")
            if key.startswith("declared_total_"):
                declared[key] = float(value)

    lines = _data_lines(text)
    if not lines:
        raise ParseError("fixture has no header row")
    header_lineno, header = lines[0]
    if [f.strip() for f in header.split(",")] != [
        "t",
        "basic",
        "universal_competencies",
        "delta",
    ]:
        raise ParseError(
            "fixture header must be 't,basic,universal_competencies,delta'",
            line=header_lineno,
        )
    periods: list[int] = []
    basic: list[float] = []
    competency: list[float] = []
    delta: list[float] = []
    for lineno, raw in lines[1:]:
        parts = raw.split(",")
        if len(parts) != 4:
            raise RaggedRow(f"expected 4 fields, got {len(parts)}", line=lineno)
        try:
            periods.append(int(parts[0]))
            basic.append(float(parts[1]))
            competency.append(float(parts[2]))
            delta.append(float(parts[3]))
        except ValueError:
            raise ParseError(f"unparseable fixture row {raw!r}", line=lineno)
    for key in ("declared_total_basic", "declared_total_competency", "declared_total_delta"):
        if key not in declared:
            raise ParseError(f"fixture is missing the '# {key}=' comment")
    return ModeFixture(
        periods=tuple(periods),
        basic=tuple(basic),
        competency=tuple(competency),
        delta_printed=tuple(delta),
        declared_total_basic=declared["declared_total_basic"],
        declared_total_competency=declared["declared_total_competency"],
        declared_total_delta=declared["declared_total_delta"],
    )
