//! Single solves, parameter sweeps, CSV and plot-script output.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::{RunConfig, SweepParameter};
use crate::error::{Error, Result};
use crate::model::{ModeIndex, ShellConfig};
use crate::solver::{find_critical_force, CriticalForceResult, ModeEntry, ModeStatus};

pub const CSV_HEADER: &str = "sweep_param,sweep_value,n_star,m_star,p1b_pa,p1b_over_E1,status";

/// Process exit status for an error: 2 configuration, 3 nothing excitable,
/// 4 singular or no positive force, 5 numerical self-check failure.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config { .. }
        | Error::InvalidParameter { .. }
        | Error::MaterialReciprocity { .. }
        | Error::InvalidPoisson { .. }
        | Error::NonPositiveProfile { .. }
        | Error::Domain { .. } => 2,
        Error::AllModesNonExcitable | Error::NonExcitable { .. } => 3,
        Error::SingularSystem { .. } | Error::NoPositiveCriticalForce => 4,
        Error::QuadratureConvergence { .. } => 5,
    }
}

/// Short status label used in the CSV.
pub fn status_label(err: &Error) -> &'static str {
    match err {
        Error::AllModesNonExcitable | Error::NonExcitable { .. } => "non_excitable",
        Error::NoPositiveCriticalForce => "no_positive_force",
        Error::SingularSystem { .. } => "singular",
        Error::QuadratureConvergence { .. } => "quadrature",
        _ => "invalid",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaskEntry {
    pub n: u32,
    pub m: u32,
    pub excitable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub argmin: ModeIndex,
    pub p1b_pa: f64,
    pub p1b_over_e1: f64,
    /// Characteristic time T (s).
    pub time: f64,
    pub modes: Vec<ModeEntry>,
    pub excitability: Vec<MaskEntry>,
}

impl SolveReport {
    fn new(result: CriticalForceResult, e1: f64) -> Self {
        let excitability = result
            .table
            .iter()
            .map(|e| MaskEntry {
                n: e.mode.n,
                m: e.mode.m,
                excitable: e.status != ModeStatus::NonExcitable,
            })
            .collect();
        Self {
            argmin: result.argmin,
            p1b_pa: result.p1b,
            p1b_over_e1: result.p1b / e1,
            time: result.time,
            modes: result.table,
            excitability,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary with the per-mode table.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "T = {:.6e} s", self.time);
        let _ = writeln!(s, "{:>3} {:>3} {:>14} {:>14} {:>16}  status", "n", "m", "alpha11", "alpha22", "p1 [Pa]");
        for e in &self.modes {
            let p1 = e.p1.map_or_else(|| "-".to_string(), |p| format!("{p:.6e}"));
            let _ = writeln!(
                s,
                "{:>3} {:>3} {:>14.6e} {:>14.6e} {:>16}  {}",
                e.mode.n,
                e.mode.m,
                e.alphas.alpha11,
                e.alphas.alpha22,
                p1,
                e.status.as_str()
            );
        }
        let _ = writeln!(
            s,
            "critical mode n={} m={}: p1b = {:.6e} Pa, p1b/E1 = {:.6e}",
            self.argmin.n, self.argmin.m, self.p1b_pa, self.p1b_over_e1
        );
        s
    }
}

pub fn run_single(run: &RunConfig) -> Result<SolveReport> {
    run.validate()?;
    let result = find_critical_force(&run.shell, &run.search)?;
    Ok(SolveReport::new(result, run.shell.material.e1))
}

/// The shell with one sweep parameter set to `value`, re-validated.
pub fn apply_sweep_value(shell: &ShellConfig, parameter: SweepParameter, value: f64) -> Result<ShellConfig> {
    let mut c = shell.clone();
    match parameter {
        SweepParameter::RingCount => {
            if value < 0.0 || value.fract() != 0.0 {
                return Err(Error::invalid("ring_count", format!("must be a non-negative integer, got {value}")));
            }
            c = c.with_ring_count(value as usize);
        }
        SweepParameter::Sigma => c.rings.iter_mut().for_each(|r| r.modulus.slope = value),
        SweepParameter::Tau => c.rings.iter_mut().for_each(|r| r.density.slope = value),
        SweepParameter::ModulusRatio => {
            let m = &mut c.material;
            m.e1 = value * m.e2;
            m.nu2 = m.nu1 / value;
        }
        SweepParameter::Winkler => c.foundation.winkler = value,
        SweepParameter::Pasternak => c.foundation.pasternak = value,
        SweepParameter::Gamma => c.damage.gamma = value,
        SweepParameter::Rheologic => c.damage.rheologic = value,
    }
    c.validate()?;
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: f64,
    pub n_star: Option<u32>,
    pub m_star: Option<u32>,
    pub p1b_pa: Option<f64>,
    pub p1b_over_e1: Option<f64>,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub parameter: SweepParameter,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        let num = |v: Option<f64>| v.map(|x| format!("{x:.11e}")).unwrap_or_default();
        let int = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{}",
                self.parameter,
                r.value,
                int(r.n_star),
                int(r.m_star),
                num(r.p1b_pa),
                num(r.p1b_over_e1),
                r.status
            );
        }
        s
    }
}

fn sweep_row(run: &RunConfig, parameter: SweepParameter, value: f64) -> SweepRow {
    let failed = |e: &Error| SweepRow {
        value,
        n_star: None,
        m_star: None,
        p1b_pa: None,
        p1b_over_e1: None,
        status: status_label(e).to_string(),
    };
    let shell = match apply_sweep_value(&run.shell, parameter, value) {
        Ok(s) => s,
        Err(e) => return failed(&e),
    };
    match find_critical_force(&shell, &run.search) {
        Ok(r) => SweepRow {
            value,
            n_star: Some(r.argmin.n),
            m_star: Some(r.argmin.m),
            p1b_pa: Some(r.p1b),
            p1b_over_e1: Some(r.p1b / shell.material.e1),
            status: "ok".to_string(),
        },
        Err(e) => failed(&e),
    }
}

/// One row per sweep value, in input order. Rows that fail keep going and
/// record the failure in the status column.
pub fn run_sweep(run: &RunConfig) -> Result<SweepTable> {
    run.validate()?;
    let spec = run.sweep.as_ref().ok_or_else(|| Error::Config {
        path: "sweep".into(),
        message: "a [sweep] section is required".into(),
    })?;
    let rows = spec
        .values
        .par_iter()
        .map(|&v| sweep_row(run, spec.parameter, v))
        .collect();
    Ok(SweepTable {
        parameter: spec.parameter,
        rows,
    })
}

/// A matplotlib script that renders `csv_path` to a PNG beside it.
pub fn plot_script(csv_path: &Path, parameter: SweepParameter) -> String {
    let csv = csv_path.display().to_string().replace('\\', "\\\\").replace('"', "\\\"");
    format!(
        r#"import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "{csv}"
xs, ys = [], []
with open(path, newline="") as fh:
    for row in csv.DictReader(fh):
        if row["status"] == "ok":
            xs.append(float(row["sweep_value"]))
            ys.append(float(row["p1b_over_E1"]))

fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(xs, ys, "o-")
ax.set_xlabel("{parameter}")
ax.set_ylabel("p1b / E1")
ax.grid(True, alpha=0.3)
fig.tight_layout()
out = path.rsplit(".", 1)[0] + ".png"
fig.savefig(out, dpi=150)
print(out)
"#
    )
}
