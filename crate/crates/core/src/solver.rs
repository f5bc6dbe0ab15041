//! Stationarity system, per-mode critical force and the search over modes.

// Negated comparisons are deliberate: NaN must take the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{
    assemble_closed_form, axial_closure_factor, pulsation_bracket, quadrant_factor, ActionQuadraticForm,
};
use crate::damage::characteristic_time;
use crate::error::{Error, Result};
use crate::model::{Loading, ModeIndex, ShellConfig, ShellGeometry};

/// Relative floor for |det L| (against scale³) and |C₃₃| (against scale²).
pub const SINGULAR_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModalAmplitudes {
    pub u0: f64,
    pub theta0: f64,
    pub w0: f64,
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Cramer's rule with a determinant floor of `SINGULAR_FLOOR · scale³`,
/// where scale is the largest |m_ij|.
pub fn cramer_solve(m: [[f64; 3]; 3], rhs: [f64; 3]) -> Result<[f64; 3]> {
    let scale = m.iter().flatten().fold(0.0f64, |a, v| a.max(v.abs()));
    let det = det3(&m);
    let floor = SINGULAR_FLOOR * scale.powi(3);
    if !(det.abs() > floor) {
        return Err(Error::SingularSystem {
            what: "det L",
            value: det.abs(),
            floor,
        });
    }
    let mut x = [0.0; 3];
    for (col, xi) in x.iter_mut().enumerate() {
        let mut mc = m;
        for row in 0..3 {
            mc[row][col] = rhs[row];
        }
        *xi = det3(&mc) / det;
    }
    Ok(x)
}

/// Gaussian elimination with partial pivoting; an independent check on
/// [`cramer_solve`].
#[allow(clippy::needless_range_loop)]
pub fn gaussian_elimination(m: [[f64; 3]; 3], rhs: [f64; 3]) -> Result<[f64; 3]> {
    let mut a = [[0.0; 4]; 3];
    for i in 0..3 {
        a[i][..3].copy_from_slice(&m[i]);
        a[i][3] = rhs[i];
    }
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    for col in 0..3 {
        let piv = (col..3)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, piv);
        let p = a[col][col];
        if !(p.abs() > SINGULAR_FLOOR * scale) {
            return Err(Error::SingularSystem {
                what: "pivot",
                value: p.abs(),
                floor: SINGULAR_FLOOR * scale,
            });
        }
        for row in col + 1..3 {
            let f = a[row][col] / p;
            for c in col..4 {
                a[row][c] -= f * a[col][c];
            }
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|j| a[i][j] * x[j]).sum();
        x[i] = (a[i][3] - s) / a[i][i];
    }
    Ok(x)
}

/// Solve `L q = (0, 0, φ̃*)`.
pub fn solve_modal(form: &ActionQuadraticForm) -> Result<ModalAmplitudes> {
    let [u0, theta0, w0] = cramer_solve(form.matrix(), [0.0, 0.0, form.phi_star])?;
    Ok(ModalAmplitudes { u0, theta0, w0 })
}

/// (u, ϑ, w) at (x, φ, t) for the solved amplitudes.
pub fn reconstruct_displacements(
    amps: &ModalAmplitudes,
    mode: ModeIndex,
    geom: &ShellGeometry,
    omega: f64,
    x: f64,
    phi: f64,
    t: f64,
) -> Result<[f64; 3]> {
    if !(0.0..=geom.length).contains(&x) {
        return Err(Error::Domain {
            value: x,
            lo: 0.0,
            hi: geom.length,
        });
    }
    let k = mode.axial_wavenumber(geom.length);
    let (sn, cn) = (mode.n as f64 * phi).sin_cos();
    let (sx, cx) = (k * x).sin_cos();
    let st = (omega * t).sin();
    Ok([amps.u0 * cn * cx * st, amps.theta0 * sn * sx * st, amps.w0 * cn * sx * st])
}

/// φ̃* = α₁₁p₀ + α₂₂p₁.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaCoefficients {
    pub alpha11: f64,
    pub alpha22: f64,
}

pub fn alpha_coefficients(mode: ModeIndex, geom: &ShellGeometry, loading: &Loading, time: f64) -> AlphaCoefficients {
    let k = mode.axial_wavenumber(geom.length);
    let n = mode.n as f64;
    let spatial = axial_closure_factor(mode) * quadrant_factor(mode) / (n * k);
    if spatial == 0.0 {
        return AlphaCoefficients { alpha11: 0.0, alpha22: 0.0 };
    }
    let w = loading.omega;
    AlphaCoefficients {
        alpha11: 4.0 * spatial / w * ((w * time).cos() - 1.0),
        alpha22: -2.0 * spatial * pulsation_bracket(w, loading.omega1, time),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeStatus {
    Critical,
    NonPositive,
    NonExcitable,
    Singular,
}

impl ModeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeStatus::Critical => "critical",
            ModeStatus::NonPositive => "non_positive",
            ModeStatus::NonExcitable => "non_excitable",
            ModeStatus::Singular => "singular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeEntry {
    pub mode: ModeIndex,
    pub p1: Option<f64>,
    pub status: ModeStatus,
    pub alphas: AlphaCoefficients,
}

/// Pulsation amplitude p₁ that brings the mode to the target deflection:
/// p₁ = Δ·w₀/(α₂₂C₃₃) − α₁₁p₀/α₂₂ with Δ = det L and C₃₃ = l₁₁l₂₂ − l₁₂².
pub fn critical_force_for_mode(config: &ShellConfig, mode: ModeIndex, time: f64) -> Result<ModeEntry> {
    let alphas = alpha_coefficients(mode, &config.geometry, &config.loading, time);
    let entry = |p1, status| ModeEntry { mode, p1, status, alphas };
    if alphas.alpha22 == 0.0 {
        return Ok(entry(None, ModeStatus::NonExcitable));
    }
    let form = assemble_closed_form(config, mode, time)?;
    let scale = form.scale();
    let c33 = form.l11 * form.l22 - form.l12 * form.l12;
    let det = det3(&form.matrix());
    if !(c33.abs() > SINGULAR_FLOOR * scale * scale) || !(det.abs() > SINGULAR_FLOOR * scale.powi(3)) {
        return Ok(entry(None, ModeStatus::Singular));
    }
    let l = &config.loading;
    let p1 = det * l.w0_target / (alphas.alpha22 * c33) - alphas.alpha11 * l.p0 / alphas.alpha22;
    let status = if p1 > 0.0 { ModeStatus::Critical } else { ModeStatus::NonPositive };
    Ok(entry(Some(p1), status))
}

/// Mode search rectangle: n ∈ [n_min, n_max] × m̄ ∈ m_values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeSearch {
    pub n_min: u32,
    pub n_max: u32,
    pub m_values: Vec<u32>,
}

impl Default for ModeSearch {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 12,
            m_values: vec![1, 3, 5, 7],
        }
    }
}

impl ModeSearch {
    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_max < self.n_min {
            return Err(Error::invalid("search.n", format!("need 1 <= n_min <= n_max, got [{}, {}]", self.n_min, self.n_max)));
        }
        if self.m_values.is_empty() || self.m_values.contains(&0) {
            return Err(Error::invalid("search.m_values", "need a non-empty list of m >= 1"));
        }
        Ok(())
    }

    /// Modes in (n, m̄) lexicographic order, duplicates removed.
    pub fn modes(&self) -> Vec<ModeIndex> {
        let mut ms = self.m_values.clone();
        ms.sort_unstable();
        ms.dedup();
        (self.n_min..=self.n_max)
            .flat_map(|n| ms.iter().map(move |&m| ModeIndex { n, m }))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalForceResult {
    pub time: f64,
    pub table: Vec<ModeEntry>,
    pub argmin: ModeIndex,
    pub p1b: f64,
}

/// Smallest positive p₁ over the search rectangle; ties go to the smaller
/// n, then the smaller m̄.
pub fn find_critical_force(config: &ShellConfig, search: &ModeSearch) -> Result<CriticalForceResult> {
    config.validate()?;
    search.validate()?;
    let time = characteristic_time(config.loading.omega, config.damage.cycles)?;
    let table: Vec<ModeEntry> = search
        .modes()
        .par_iter()
        .map(|&mode| critical_force_for_mode(config, mode, time))
        .collect::<Result<_>>()?;

    if table.iter().all(|e| e.status == ModeStatus::NonExcitable) {
        return Err(Error::AllModesNonExcitable);
    }
    let mut best: Option<(ModeIndex, f64)> = None;
    for e in &table {
        if let (ModeStatus::Critical, Some(p)) = (e.status, e.p1) {
            if best.is_none_or(|(_, b)| p < b) {
                best = Some((e.mode, p));
            }
        }
    }
    let (argmin, p1b) = best.ok_or(Error::NoPositiveCriticalForce)?;
    Ok(CriticalForceResult { time, table, argmin, p1b })
}
