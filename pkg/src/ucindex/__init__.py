"""Integral correlation indicators over enterprise process time series.

The package models an enterprise as a multivariate process series, overlays
a competency-compliance mapping under a resource budget, computes
lag-window Gram-correlation matrices and per-period integral indicators,
and compares the basic management mode against the universal-competencies
mode. See the README for the CLI and file formats.
"""

from ._version import __version__
from .competencies import (
    BudgetCheck,
    Competency,
    CompetencyCatalog,
    ComplianceMatrix,
    DerivationRule,
    ResourceBudget,
    check_budget,
    default_catalog,
    derive_mode_series,
    load_catalog,
    mapping_cost,
    parse_catalog,
)
from .errors import (
    BadWindow,
    ConfigMismatch,
    DimensionMismatch,
    DuplicateId,
    GapInIds,
    InvalidScenario,
    NegativeIndicator,
    NonBinaryEntry,
    NonFiniteValue,
    NonMonotonicTime,
    ParseError,
    RaggedRow,
    SeriesTooShort,
    UcindexError,
    WindowOutOfRange,
)
from .indicator import (
    INDICATOR_UNIT,
    GramCorrelationMatrix,
    IndicatorSeries,
    ModeComparison,
    Warmup,
    WindowConfig,
    compare_modes,
    correlation_matrix,
    gram_matrix,
    gram_matrix_bruteforce,
    indicator_series,
    ingest_precomputed,
    row_indicator,
    scalar_per_period,
    standardize_window,
)
from .io_formats import (
    ModeFixture,
    load_mode_fixture,
    read_compliance_csv,
    read_costs_csv,
    read_scalar_csv,
    read_scenario_json,
    read_series_csv,
    write_scenario_json,
    write_series_csv,
)
from .process_model import (
    ProcessSeries,
    ProcessSystem,
    TimeAxis,
    build_process_system,
    slice_window,
)
from .report import (
    ReportFormat,
    ReportTable,
    build_report_table,
    emit_plot_data,
    emit_report,
    render_report,
)
from .scenario import (
    NOISE_ALGORITHM,
    EventKind,
    Scenario,
    ScenarioEvent,
    generate_series,
    reference_scenario,
    role_blocks,
)

__all__ = [
    "__version__",
    # process model
    "TimeAxis",
    "ProcessSeries",
    "ProcessSystem",
    "build_process_system",
    "slice_window",
    # competencies
    "Competency",
    "CompetencyCatalog",
    "ComplianceMatrix",
    "ResourceBudget",
    "BudgetCheck",
    "DerivationRule",
    "load_catalog",
    "parse_catalog",
    "default_catalog",
    "mapping_cost",
    "check_budget",
    "derive_mode_series",
    # indicator engine
    "WindowConfig",
    "Warmup",
    "GramCorrelationMatrix",
    "IndicatorSeries",
    "ModeComparison",
    "INDICATOR_UNIT",
    "gram_matrix",
    "gram_matrix_bruteforce",
    "standardize_window",
    "row_indicator",
    "correlation_matrix",
    "indicator_series",
    "scalar_per_period",
    "ingest_precomputed",
    "compare_modes",
    # scenario
    "Scenario",
    "ScenarioEvent",
    "EventKind",
    "NOISE_ALGORITHM",
    "generate_series",
    "reference_scenario",
    "role_blocks",
    # io
    "read_series_csv",
    "write_series_csv",
    "read_compliance_csv",
    "read_costs_csv",
    "read_scalar_csv",
    "read_scenario_json",
    "write_scenario_json",
    "ModeFixture",
    "load_mode_fixture",
    # report
    "ReportFormat",
    "ReportTable",
    "build_report_table",
    "render_report",
    "emit_report",
    "emit_plot_data",
    # errors
    "UcindexError",
    "DimensionMismatch",
    "NonFiniteValue",
    "WindowOutOfRange",
    "BadWindow",
    "SeriesTooShort",
    "ConfigMismatch",
    "NegativeIndicator",
    "InvalidScenario",
    "ParseError",
    "NonMonotonicTime",
    "RaggedRow",
    "NonBinaryEntry",
    "DuplicateId",
    "GapInIds",
]
