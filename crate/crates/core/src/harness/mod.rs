//! Experiment driver: the per-run loop, grid execution, aggregation and
//! CSV output.

mod config;
mod output;
mod run;

pub use config::{ExperimentConfig, Overrides};
pub use output::{
    emit_outputs, emit_snapshots, manifest_text, raw_rows, read_raw_csv, snapshot_file_name, summarize,
    write_raw_csv, write_snapshot_csv, write_summary_csv, OutputPaths, RawRow, SummaryRow,
};
pub use run::{run_experiment, run_single, CellFailure, EnvMeasurement, ExperimentResult, RunRecord, SnapshotRecord};
