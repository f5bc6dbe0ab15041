//! Built-in oracle suites, run by `check` and by the self-check example.
//!
//! `Fast` covers the material constants, the profile integrals, the 3×3
//! solver and the time factors. `Full` adds the action Hessian against the
//! space–time quadrature and the exact degenerate reductions.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{
    assemble_breakdown, assemble_by_quadrature, assemble_closed_form, finite_difference_form, time_factors,
    ActionBreakdown,
};
use crate::damage::characteristic_time;
use crate::model::{
    stiffness_coefficients, DamageModel, InhomogeneityLaw, ModeIndex, RingStiffener, RodStiffener, ShellConfig,
};
use crate::quadrature::{
    ring_profile_integrals, ring_profile_integrals_by_quadrature, rod_profile_integrals,
    rod_profile_integrals_by_quadrature, QuadratureSpec,
};
use crate::solver::{cramer_solve, gaussian_elimination};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckLevel {
    Fast,
    Full,
}

/// Deliberate faults, to confirm the suites catch them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Negate b₁₂ before the material checks.
    FlipB12,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for i in &self.items {
            let tag = if i.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "[{tag}] {:<40} {:>8.3}s  {}", i.name, i.seconds, i.detail);
        }
        let _ = writeln!(s, "{}", if self.passed() { "self-check passed" } else { "self-check FAILED" });
        s
    }
}

fn timed(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> CheckItem {
    let start = Instant::now();
    let outcome = f();
    let seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => CheckItem { name, passed: true, detail, seconds },
        Err(detail) => CheckItem { name, passed: false, detail, seconds },
    }
}

fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

/// Reference shell made homogeneous (all slopes 0), undamaged, with a
/// purely static foundation (A = 0), and a nonzero load so φ̃* is tested.
pub fn oracle_config() -> ShellConfig {
    let mut cfg = ShellConfig::reference();
    cfg.damage = DamageModel::undamaged();
    cfg.foundation.kernel_amplitude = 0.0;
    let flat = |l: &mut InhomogeneityLaw| l.slope = 0.0;
    for rod in &mut cfg.rods {
        flat(&mut rod.modulus);
        flat(&mut rod.shear);
        flat(&mut rod.density);
    }
    for ring in &mut cfg.rings {
        flat(&mut ring.modulus);
        flat(&mut ring.shear);
        flat(&mut ring.density);
    }
    cfg.loading.p0 = 2.0e3;
    cfg.loading.p1 = 5.0e3;
    cfg
}

fn stiffness_check(fault: Fault) -> Result<String, String> {
    let mut b = stiffness_coefficients(&ShellConfig::reference().material).map_err(|e| e.to_string())?;
    if fault == Fault::FlipB12 {
        b.b12 = -b.b12;
    }
    let m = ShellConfig::reference().material;
    let (via_b11, via_b22) = (m.nu2 * b.b11, m.nu1 * b.b22);
    if rel(b.b12, via_b11) > 1e-12 || rel(b.b12, via_b22) > 1e-12 {
        return Err(format!(
            "reciprocity b12 = nu2*b11 = nu1*b22 violated: b12 = {:e}, nu2*b11 = {via_b11:e}, nu1*b22 = {via_b22:e}",
            b.b12
        ));
    }
    if !b.is_positive_definite() {
        return Err("stiffness matrix not positive definite".into());
    }
    Ok("b12 reciprocal, stiffness positive definite".into())
}

fn random_law(rng: &mut ChaCha8Rng, span: f64) -> InhomogeneityLaw {
    InhomogeneityLaw {
        base: 10f64.powf(rng.gen_range(0.0..10.0)),
        slope: rng.gen_range(-0.9..3.0),
        span,
    }
}

/// `cases` random linear-law rods and rings; returns the worst relative
/// deviation between closed-form and adaptive integrals.
pub fn integral_oracle(cases: usize, seed: u64) -> crate::Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = QuadratureSpec {
        rel_tol: 1e-12,
        abs_tol: 1e-300,
        max_depth: 50,
    };
    let mut worst = 0.0f64;
    let reference = ShellConfig::reference();
    for _ in 0..cases {
        let length = rng.gen_range(0.1..5.0);
        let mut geom = reference.geometry;
        geom.length = length;
        let mode = ModeIndex::new(rng.gen_range(1..=12), rng.gen_range(1..=9))?;
        let rod = RodStiffener {
            modulus: random_law(&mut rng, length),
            shear: random_law(&mut rng, length),
            density: random_law(&mut rng, length),
            ..reference.rods[0]
        };
        let ring = RingStiffener {
            modulus: random_law(&mut rng, 2.0 * PI),
            shear: random_law(&mut rng, 2.0 * PI),
            density: random_law(&mut rng, 2.0 * PI),
            ..reference.rings[0]
        };
        let a = rod_profile_integrals(&rod, &geom, mode);
        let b = rod_profile_integrals_by_quadrature(&rod, &geom, mode, &spec)?;
        let c = ring_profile_integrals(&ring, mode);
        let d = ring_profile_integrals_by_quadrature(&ring, mode, &spec)?;
        for (x, y) in [
            (a.i1, b.i1),
            (a.i2, b.i2),
            (a.i3, b.i3),
            (a.i4, b.i4),
            (a.i5, b.i5),
            (c.i6, d.i6),
            (c.i7, d.i7),
            (c.i8, d.i8),
            (c.i9, d.i9),
        ] {
            worst = worst.max(rel(x, y));
        }
    }
    Ok(worst)
}

/// Worst normwise relative gap between Cramer and elimination on random
/// systems with entries in [-1, 1].
pub fn solver_oracle(systems: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < systems {
        let mut m = [[0.0; 3]; 3];
        for row in &mut m {
            for v in row.iter_mut() {
                *v = rng.gen_range(-1.0..1.0);
            }
        }
        let rhs = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let (Ok(x), Ok(y)) = (cramer_solve(m, rhs), gaussian_elimination(m, rhs)) else {
            continue;
        };
        let norm = y.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let gap = x.iter().zip(&y).fold(0.0f64, |a, (p, q)| a.max((p - q).abs()));
        worst = worst.max(gap / norm);
        done += 1;
    }
    worst
}

/// Worst |S₋ + S₊ − T| / T over random (ω, T).
pub fn time_factor_identity(samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let omega = 10f64.powf(rng.gen_range(-3.0..4.0));
            let time = 10f64.powf(rng.gen_range(-6.0..2.0));
            let tf = time_factors(omega, time);
            ((tf.s_minus + tf.s_plus) - time).abs() / time
        })
        .fold(0.0, f64::max)
}

/// Largest deviation of the finite-difference Hessian of the quadrature
/// action from the closed form, each entry measured against
/// sqrt(l_ii·l_jj); also the relative φ̃* deviation.
pub fn hessian_oracle(config: &ShellConfig, mode: ModeIndex, time: f64, step: f64) -> crate::Result<(f64, f64)> {
    let closed = assemble_closed_form(config, mode, time)?;
    let fd = finite_difference_form(|q| assemble_by_quadrature(config, mode, time, q), step)?;
    let (a, b) = (closed.matrix(), fd.matrix());
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let scale = (a[i][i] * a[j][j]).abs().sqrt();
            worst = worst.max((a[i][j] - b[i][j]).abs() / scale);
        }
    }
    Ok((worst, rel(closed.phi_star, fd.phi_star)))
}

/// Exact (bitwise) degenerate reductions of the assembly; returns the
/// names of those that fail.
pub fn degenerate_reductions(config: &ShellConfig, mode: ModeIndex, time: f64) -> crate::Result<Vec<&'static str>> {
    let full = assemble_breakdown(config, mode, time)?;
    let mut failed = Vec::new();

    let no_rings = assemble_closed_form(&config.with_ring_count(0), mode, time)?;
    if no_rings != (ActionBreakdown { rings: vec![], ..full.clone() }).total() {
        failed.push("no rings equals rods-only assembly");
    }
    let no_rods = assemble_closed_form(&config.with_rod_count(0), mode, time)?;
    if no_rods != (ActionBreakdown { rods: vec![], ..full.clone() }).total() {
        failed.push("no rods equals rings-only assembly");
    }

    let mut dormant = config.clone();
    dormant.damage = DamageModel {
        gamma: 0.0,
        recovery: 0.5,
        rheologic: 0.7,
        cycles: 3,
        aux: [1e5, -2e5, 3e5, 4e5, -5e5, 6e5],
    };
    let mut undamaged = config.clone();
    undamaged.damage = DamageModel::undamaged();
    let dormant_b = assemble_breakdown(&dormant, mode, time)?;
    if dormant_b.damage != Default::default()
        || dormant_b.total() != assemble_closed_form(&undamaged, mode, time)?
    {
        failed.push("gamma = 0 equals the undamaged assembly");
    }

    let mut still = config.clone();
    still.foundation.kernel_amplitude = 0.0;
    if assemble_breakdown(&still, mode, time)?.medium != Default::default() {
        failed.push("A = 0 zeroes the medium block");
    }
    Ok(failed)
}

pub fn self_check(level: CheckLevel, fault: Fault) -> CheckReport {
    let mut items = vec![
        timed("stiffness reciprocity", || stiffness_check(fault)),
        timed("profile integrals vs quadrature", || {
            let worst = integral_oracle(50, 11).map_err(|e| e.to_string())?;
            if worst <= 1e-10 {
                Ok(format!("50 cases, worst rel {worst:.2e}"))
            } else {
                Err(format!("closed-form integrals off by {worst:.2e} (> 1e-10)"))
            }
        }),
        timed("Cramer vs elimination", || {
            let worst = solver_oracle(200, 12);
            if worst <= 1e-12 {
                Ok(format!("200 systems, worst rel {worst:.2e}"))
            } else {
                Err(format!("Cramer deviates from elimination by {worst:.2e} (> 1e-12)"))
            }
        }),
        timed("time factor identity", || {
            let worst = time_factor_identity(1000, 13);
            if worst <= 1e-14 {
                Ok(format!("1000 samples, worst rel {worst:.2e}"))
            } else {
                Err(format!("S- + S+ != T by {worst:.2e}"))
            }
        }),
    ];
    if level == CheckLevel::Full {
        let config = oracle_config();
        let time = characteristic_time(config.loading.omega, config.damage.cycles).expect("valid reference");
        items.push(timed("action Hessian vs quadrature", || {
            let mut out = Vec::new();
            for mode in [ModeIndex { n: 5, m: 1 }, ModeIndex { n: 2, m: 3 }] {
                let (h, p) = hessian_oracle(&config, mode, time, 1e-6).map_err(|e| e.to_string())?;
                if h > 1e-6 || p > 1e-6 {
                    return Err(format!("mode ({}, {}): Hessian {h:.2e}, phi* {p:.2e} (> 1e-6)", mode.n, mode.m));
                }
                out.push(format!("({},{}) {h:.1e}/{p:.1e}", mode.n, mode.m));
            }
            Ok(out.join(", "))
        }));
        items.push(timed("degenerate reductions", || {
            let reference = ShellConfig::reference();
            let failed = degenerate_reductions(&reference, ModeIndex { n: 5, m: 1 }, time).map_err(|e| e.to_string())?;
            if failed.is_empty() {
                Ok("rings, rods, damage, medium".into())
            } else {
                Err(failed.join("; "))
            }
        }));
    }
    CheckReport { items }
}
