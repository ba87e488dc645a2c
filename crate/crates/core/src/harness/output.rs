use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::ExperimentConfig;
use super::run::{EnvMeasurement, RunRecord, SnapshotRecord};
use crate::error::{Error, Result};
use crate::metrics::{wilcoxon_ranksum, Direction};

const ALPHA: f64 = 0.05;

/// Row of the per-environment CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawRow {
    pub problem: String,
    pub strategy: String,
    pub seed: u64,
    #[serde(rename = "tau_T")]
    pub tau_t: u64,
    #[serde(rename = "n_T")]
    pub n_t: u64,
    pub env_index: usize,
    pub t: f64,
    pub igd: f64,
    pub hvd: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub problem: String,
    pub strategy: String,
    pub migd_mean: f64,
    /// Empty with fewer than two runs.
    pub migd_std: Option<f64>,
    pub mhvd_mean: f64,
    pub mhvd_std: Option<f64>,
    pub best_migd: bool,
    /// `‡` focal significantly better, `†` no significant difference, `-`
    /// focal significantly worse, `n/a` too few runs; empty on the focal row.
    pub significance_vs_focal: String,
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Config(format!("{}: {other:?}", path.display())),
    }
}

pub fn raw_rows(records: &[RunRecord]) -> Vec<RawRow> {
    records
        .iter()
        .flat_map(|r| {
            r.per_env.iter().map(move |e| RawRow {
                problem: r.problem.clone(),
                strategy: r.strategy.clone(),
                seed: r.seed,
                tau_t: r.tau_t,
                n_t: r.n_t,
                env_index: e.env_index,
                t: e.t,
                igd: e.igd,
                hvd: e.hvd,
            })
        })
        .collect()
}

pub fn write_raw_csv<W: Write>(out: W, records: &[RunRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in raw_rows(records) {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Rebuilds run records (without wall time or change history) from raw rows.
pub fn read_raw_csv<R: Read>(input: R) -> csv::Result<Vec<RunRecord>> {
    let mut grouped: Vec<RunRecord> = Vec::new();
    for row in csv::Reader::from_reader(input).deserialize() {
        let row: RawRow = row?;
        let same_run = grouped.last().is_some_and(|r| {
            r.problem == row.problem
                && r.strategy == row.strategy
                && r.seed == row.seed
                && r.tau_t == row.tau_t
                && r.n_t == row.n_t
        });
        if !same_run {
            grouped.push(RunRecord {
                problem: row.problem.clone(),
                strategy: row.strategy.clone(),
                seed: row.seed,
                tau_t: row.tau_t,
                n_t: row.n_t,
                per_env: Vec::new(),
                migd: 0.0,
                mhvd: 0.0,
                change_generations: Vec::new(),
                snapshots: Vec::new(),
                wall_time_ms: 0,
            });
        }
        grouped.last_mut().expect("pushed above").per_env.push(EnvMeasurement {
            env_index: row.env_index,
            t: row.t,
            igd: row.igd,
            hvd: row.hvd,
        });
    }
    for r in &mut grouped {
        let n = r.per_env.len() as f64;
        r.migd = r.per_env.iter().map(|e| e.igd).sum::<f64>() / n;
        r.mhvd = r.per_env.iter().map(|e| e.hvd).sum::<f64>() / n;
    }
    Ok(grouped)
}

fn mean_std(values: &[f64]) -> (f64, Option<f64>) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = (values.len() >= 2).then(|| {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    });
    (mean, std)
}

/// Mean and sample deviation of MIGD/MHVD per (problem, strategy), the
/// best-MIGD marker per problem, and rank-sum tests of `focal` against every
/// other strategy. Rows follow first appearance in `records`.
pub fn summarize(records: &[RunRecord], focal: &str) -> Vec<SummaryRow> {
    let mut order: Vec<(String, String)> = Vec::new();
    let mut cells: BTreeMap<(String, String), (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for r in records {
        let key = (r.problem.clone(), r.strategy.clone());
        let cell = cells.entry(key.clone()).or_insert_with(|| {
            order.push(key);
            (Vec::new(), Vec::new())
        });
        cell.0.push(r.migd);
        cell.1.push(r.mhvd);
    }

    let mut rows: Vec<SummaryRow> = order
        .iter()
        .map(|key| {
            let (migds, mhvds) = &cells[key];
            let (migd_mean, migd_std) = mean_std(migds);
            let (mhvd_mean, mhvd_std) = mean_std(mhvds);
            SummaryRow {
                problem: key.0.clone(),
                strategy: key.1.clone(),
                migd_mean,
                migd_std,
                mhvd_mean,
                mhvd_std,
                best_migd: false,
                significance_vs_focal: String::new(),
            }
        })
        .collect();

    let problems: Vec<String> = order.iter().map(|k| k.0.clone()).fold(Vec::new(), |mut acc, p| {
        if !acc.contains(&p) {
            acc.push(p);
        }
        acc
    });
    for problem in problems {
        let idx: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].problem == problem).collect();
        let best = idx
            .iter()
            .copied()
            .min_by(|&a, &b| rows[a].migd_mean.total_cmp(&rows[b].migd_mean))
            .expect("problem has rows");
        rows[best].best_migd = true;
        if idx.len() < 2 {
            continue;
        }
        let focal_key = (problem.clone(), focal.to_string());
        let focal_migd = cells
            .iter()
            .find(|(k, _)| k.0 == focal_key.0 && k.1.eq_ignore_ascii_case(&focal_key.1))
            .map(|(_, v)| v.0.clone());
        for &i in &idx {
            if rows[i].strategy.eq_ignore_ascii_case(focal) {
                continue;
            }
            let other = &cells[&(problem.clone(), rows[i].strategy.clone())].0;
            rows[i].significance_vs_focal = match &focal_migd {
                None => "n/a".into(),
                Some(f) => match wilcoxon_ranksum(f, other, ALPHA) {
                    Err(_) => "n/a".into(),
                    Ok(test) if !test.significant => "†".into(),
                    Ok(test) if test.direction == Direction::FirstSmaller => "‡".into(),
                    Ok(_) => "-".into(),
                },
            };
        }
    }
    rows
}

pub fn write_summary_csv<W: Write>(out: W, rows: &[SummaryRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// `kind,f1,..,fm` with population rows first, then the true-front sample.
pub fn write_snapshot_csv<W: Write>(out: W, snap: &SnapshotRecord) -> csv::Result<()> {
    let m = snap
        .population
        .first()
        .or(snap.pf.first())
        .map_or(0, Vec::len);
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["kind".to_string()];
    header.extend((1..=m).map(|k| format!("f{k}")));
    w.write_record(&header)?;
    for (kind, rows) in [("pop", &snap.population), ("pf", &snap.pf)] {
        for f in rows {
            let mut record = vec![kind.to_string()];
            record.extend(f.iter().map(|v| v.to_string()));
            w.write_record(&record)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn snapshot_file_name(snap: &SnapshotRecord) -> String {
    format!(
        "{}_{}_seed{}_env{}.csv",
        snap.problem, snap.strategy, snap.seed, snap.env_index
    )
}

/// The config file that reproduces a run, with provenance comments.
pub fn manifest_text(config: &ExperimentConfig) -> Result<String> {
    let seeds: Vec<String> = (0..config.runs)
        .map(|r| config.base_seed.wrapping_add(r).to_string())
        .collect();
    Ok(format!(
        "# {} {}\n# seeds: {}\n# total_generations: {}\n{}",
        env!("CARGO_PKG_NAME"),
        env!("CARGO_PKG_VERSION"),
        seeds.join(","),
        config.total_generations(),
        config.to_toml()?
    ))
}

/// Paths written by [`emit_outputs`].
#[derive(Debug, Clone, PartialEq)]
pub struct OutputPaths {
    pub raw: PathBuf,
    pub summary: PathBuf,
    pub manifest: PathBuf,
    pub snapshots: Vec<PathBuf>,
}

fn write_file(path: &Path, fill: impl FnOnce(&mut Vec<u8>) -> csv::Result<()>) -> Result<()> {
    let mut buf = Vec::new();
    fill(&mut buf).map_err(|e| csv_err(path, e))?;
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

/// Writes `raw.csv`, `summary.csv`, `manifest.toml` and one file per
/// snapshot under `snapshots/`.
pub fn emit_outputs(
    records: &[RunRecord],
    summary: &[SummaryRow],
    config: &ExperimentConfig,
) -> Result<OutputPaths> {
    let dir = &config.output_dir;
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let paths = OutputPaths {
        raw: dir.join("raw.csv"),
        summary: dir.join("summary.csv"),
        manifest: dir.join("manifest.toml"),
        snapshots: Vec::new(),
    };
    write_file(&paths.raw, |b| write_raw_csv(b, records))?;
    write_file(&paths.summary, |b| write_summary_csv(b, summary))?;
    fs::write(&paths.manifest, manifest_text(config)?).map_err(|e| Error::io(&paths.manifest, e))?;
    let snapshots = emit_snapshots(records, dir)?;
    Ok(OutputPaths { snapshots, ..paths })
}

/// Writes every snapshot of `records` under `dir/snapshots/`.
pub fn emit_snapshots(records: &[RunRecord], dir: &Path) -> Result<Vec<PathBuf>> {
    let snaps: Vec<&SnapshotRecord> = records.iter().flat_map(|r| &r.snapshots).collect();
    if snaps.is_empty() {
        return Ok(Vec::new());
    }
    let snap_dir = dir.join("snapshots");
    fs::create_dir_all(&snap_dir).map_err(|e| Error::io(&snap_dir, e))?;
    snaps
        .into_iter()
        .map(|s| {
            let path = snap_dir.join(snapshot_file_name(s));
            write_file(&path, |b| write_snapshot_csv(b, s))?;
            Ok(path)
        })
        .collect()
}
