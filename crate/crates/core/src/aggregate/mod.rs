//! Grouped and diachronic aggregation of document metrics, and report files.

mod accumulate;
mod period;
mod report;

pub use accumulate::{
    aggregate, monthly_rows, monthly_series, quantile, AggregateRow, Aggregator, GroupBy, GroupStats, MonthlyRow,
    Weighting, AGGREGATE_HEADER, MONTHLY_HEADER, SMALL_SAMPLE_MAX,
};
pub use period::{Period, PeriodScheme, OTHER_PERIOD};
pub use report::{emit_reports, plot_series, render, ReportFormat, Reports, MANUAL_CLASS};
