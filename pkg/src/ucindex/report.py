"""Mode-comparison report and plot-data emitters.

Reports are deterministic: identical comparisons render to byte-identical
documents. Numbers in the table body are printed at two decimals; the CSV
variant repeats every value at full round-trip precision in extra columns.
A metadata block (fixed key order, no timestamps unless explicitly stamped)
is appended as comment lines so a report is self-describing.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from math import fsum
from pathlib import Path

from ._version import __version__
from .errors import DimensionMismatch
from .indicator import INDICATOR_UNIT, ModeComparison, scalar_per_period
from .io_formats import atomic_write_text


class ReportFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"


@dataclass(frozen=True)
class ReportTable:
    """Renderable mode-comparison table: per-period rows, a totals footer, metadata.

    Rows hold full-precision values; rounding happens only at render time.
    The footer must equal the column sums of the rows (1e-9 relative).
    """

    rows: tuple[tuple[int, float, float, float], ...]
    footer: tuple[float, float, float]
    metadata: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        object.__setattr__(self, "metadata", tuple(tuple(m) for m in self.metadata))
        for col, declared in enumerate(self.footer, start=1):
            column_sum = fsum(row[col] for row in self.rows)
            if abs(declared - column_sum) > 1e-9 * max(1.0, abs(column_sum)):
                raise DimensionMismatch(
                    f"footer value {declared} differs from column sum {column_sum}"
                )


def build_report_table(
    comparison: ModeComparison,
    derivation: str | None = None,
    stamp: bool = False,
) -> ReportTable:
    """Assemble the report table for a comparison.

    ``derivation`` names the rule used to derive the competency series from
    a compliance matrix, when one was used; it is echoed in the metadata so
    the report is auditable.
    """
    basic_scalars = scalar_per_period(comparison.basic)
    competency_scalars = scalar_per_period(comparison.competency)
    rows = tuple(
        (t, float(b), float(c), float(d))
        for t, b, c, d in zip(
            comparison.periods,
            basic_scalars,
            competency_scalars,
            comparison.delta_per_period,
        )
    )
    footer = (
        comparison.basic.total,
        comparison.competency.total,
        comparison.delta_total,
    )

    config = comparison.basic.config
    if config is None:
        window_k, standardize, warmup = "none", "n/a", "n/a"
    else:
        window_k = str(config.k)
        standardize = "true" if config.standardize else "false"
        warmup = config.warmup.value
    first_defined = comparison.periods[0]
    excluded = "none" if first_defined <= 1 else f"1..{first_defined - 1}"

    metadata = [
        ("tool", f"ucindex {__version__}"),
        ("mode_basic", comparison.basic.mode_label),
        ("mode_competency", comparison.competency.mode_label),
        ("window_k", window_k),
        ("standardize", standardize),
        ("warmup", warmup),
        ("warmup_excluded", excluded),
        ("derivation", derivation if derivation else "none"),
        ("unit", INDICATOR_UNIT),
    ]
    if stamp:
        now = datetime.now(timezone.utc).replace(microsecond=0)
        metadata.append(("generated", now.isoformat()))
    return ReportTable(rows=rows, footer=footer, metadata=tuple(metadata))


def _fmt2(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def render_report(table: ReportTable, fmt: ReportFormat | str = ReportFormat.TABLE) -> str:
    """Render a report table to text; see module docstring for the two formats."""
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.CSV:
        return _render_csv(table)
    return _render_text(table)


def _render_text(table: ReportTable) -> str:
    header = ("t", "V_basic", "V_universal", "dV")
    body = [
        (str(t), _fmt2(b), _fmt2(c), _fmt2(d)) for t, b, c, d in table.rows
    ]
    footer = ("Total", _fmt2(table.footer[0]), _fmt2(table.footer[1]), _fmt2(table.footer[2]))
    widths = [
        max(len(header[col]), len(footer[col]), *(len(row[col]) for row in body))
        for col in range(4)
    ]
    lines = ["  ".join(cell.rjust(widths[col]) for col, cell in enumerate(header))]
    for row in body:
        lines.append("  ".join(cell.rjust(widths[col]) for col, cell in enumerate(row)))
    lines.append("  ".join(cell.rjust(widths[col]) for col, cell in enumerate(footer)))
    for key, value in table.metadata:
        lines.append(f"# {key}={value}")
    return "\n".join(lines) + "\n"


def _render_csv(table: ReportTable) -> str:
    lines = [
        "t,basic,universal_competencies,delta,"
        "basic_full,universal_competencies_full,delta_full"
    ]
    for t, b, c, d in table.rows:
        lines.append(
            f"{t},{_fmt2(b)},{_fmt2(c)},{_fmt2(d)},{b!r},{c!r},{d!r}"
        )
    tb, tc, td = table.footer
    lines.append(f"total,{_fmt2(tb)},{_fmt2(tc)},{_fmt2(td)},{tb!r},{tc!r},{td!r}")
    for key, value in table.metadata:
        lines.append(f"# {key}={value}")
    return "\n".join(lines) + "\n"


def emit_report(
    comparison: ModeComparison,
    fmt: ReportFormat | str = ReportFormat.TABLE,
    derivation: str | None = None,
    stamp: bool = False,
) -> str:
    """Build and render the comparison report in one step."""
    return render_report(build_report_table(comparison, derivation=derivation, stamp=stamp), fmt)


def emit_plot_data(comparison: ModeComparison, path: str | Path) -> None:
    """Write per-period scalars as a bare three-column full-precision CSV.

    Output is header ``t,basic,universal_competencies`` plus one row per
    defined period; byte-identical for identical input, and readable back
    through the scalar-CSV reader for re-reporting.
    """
    basic_scalars = scalar_per_period(comparison.basic)
    competency_scalars = scalar_per_period(comparison.competency)
    lines = ["t,basic,universal_competencies"]
    for t, b, c in zip(comparison.periods, basic_scalars, competency_scalars):
        lines.append(f"{t},{float(b)!r},{float(c)!r}")
    atomic_write_text(path, "\n".join(lines) + "\n")
