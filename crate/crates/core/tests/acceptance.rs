//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stiffshell::action::{
    assemble_breakdown, assemble_by_quadrature, assemble_closed_form, finite_difference_form, load_functional,
    time_factors, ActionBreakdown, ActionQuadraticForm,
};
use stiffshell::config::{canonical_echo, parse_config, RunConfig, SweepParameter, SweepSpec};
use stiffshell::damage::characteristic_time;
use stiffshell::quadrature::*;
use stiffshell::selfcheck::oracle_config;
use stiffshell::solver::{cramer_solve, gaussian_elimination};
use stiffshell::sweep::run_sweep;
use stiffshell::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

fn within_time(start: Instant, limit: f64, detail: String) -> Outcome {
    let secs = start.elapsed().as_secs_f64();
    if secs < limit {
        Ok(format!("{detail}, {secs:.2}s"))
    } else {
        Err(format!("{detail}, but took {secs:.2}s (limit {limit}s)"))
    }
}

fn law(rng: &mut ChaCha8Rng, span: f64) -> InhomogeneityLaw {
    InhomogeneityLaw {
        base: 10f64.powf(rng.gen_range(-1.0..11.0)),
        slope: rng.gen_range(-0.95..4.0),
        span,
    }
}

fn integrals_match_quadrature() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let spec = QuadratureSpec {
        rel_tol: 1e-13,
        abs_tol: 1e-300,
        max_depth: 50,
    };
    let reference = ShellConfig::reference();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let mut geom = reference.geometry;
        geom.length = rng.gen_range(0.05..10.0);
        let mode = ModeIndex::new(rng.gen_range(1..=16), rng.gen_range(1..=11)).unwrap();
        let rod = RodStiffener {
            modulus: law(&mut rng, geom.length),
            shear: law(&mut rng, geom.length),
            density: law(&mut rng, geom.length),
            ..reference.rods[0]
        };
        let ring = RingStiffener {
            modulus: law(&mut rng, 2.0 * PI),
            shear: law(&mut rng, 2.0 * PI),
            density: law(&mut rng, 2.0 * PI),
            ..reference.rings[0]
        };
        let a = rod_profile_integrals(&rod, &geom, mode);
        let b = rod_profile_integrals_by_quadrature(&rod, &geom, mode, &spec).map_err(|e| e.to_string())?;
        let c = ring_profile_integrals(&ring, mode);
        let d = ring_profile_integrals_by_quadrature(&ring, mode, &spec).map_err(|e| e.to_string())?;
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
    let detail = format!("200 cases, worst rel {worst:.2e}");
    if worst > 1e-10 {
        return Err(detail);
    }
    within_time(start, 5.0, detail)
}

fn action_matches_space_time_quadrature() -> Outcome {
    let start = Instant::now();
    let cfg = oracle_config();
    let t = characteristic_time(cfg.loading.omega, cfg.damage.cycles).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut worst_w, mut worst_l) = (0.0f64, 0.0f64);
    for mode in [ModeIndex { n: 5, m: 1 }, ModeIndex { n: 1, m: 1 }, ModeIndex { n: 6, m: 3 }] {
        let closed = assemble_closed_form(&cfg, mode, t).map_err(|e| e.to_string())?;
        let w = |q| assemble_by_quadrature(&cfg, mode, t, q);
        for _ in 0..20 {
            let q = [
                rng.gen_range(-1e-4..1e-4),
                rng.gen_range(-1e-4..1e-4),
                rng.gen_range(-1e-4..1e-4),
            ];
            worst_w = worst_w.max(rel(closed.action(q), w(q).map_err(|e| e.to_string())?));
        }
        let fd = finite_difference_form(w, 1e-6).map_err(|e| e.to_string())?;
        for (a, b) in closed.coefficients().iter().zip(fd.coefficients()) {
            worst_l = worst_l.max(rel(*a, b));
        }
        worst_l = worst_l.max(rel(closed.phi_star, fd.phi_star));
    }
    let detail = format!("3 modes x 20 amplitudes, W rel {worst_w:.2e}, Hessian/phi* rel {worst_l:.2e}");
    if worst_w > 1e-6 || worst_l > 1e-6 {
        return Err(detail);
    }
    within_time(start, 60.0, detail)
}

fn cramer_matches_elimination() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let mut m = [[0.0; 3]; 3];
        for row in &mut m {
            for v in row.iter_mut() {
                *v = rng.gen_range(-1.0..1.0);
            }
        }
        let b = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let x = cramer_solve(m, b).map_err(|e| e.to_string())?;
        let y = gaussian_elimination(m, b).map_err(|e| e.to_string())?;
        let norm = y.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        worst = worst.max(x.iter().zip(&y).fold(0.0f64, |a, (p, q)| a.max((p - q).abs())) / norm);
    }
    let detail = format!("1000 systems, worst normwise rel {worst:.2e}");
    if worst > 1e-12 {
        return Err(detail);
    }
    within_time(start, 1.0, detail)
}

fn uncoupled_modes_have_no_load() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for _ in 0..100 {
        let mut cfg = ShellConfig::reference();
        cfg.geometry.radius = rng.gen_range(0.05..2.0);
        cfg.geometry.length = rng.gen_range(0.1..10.0);
        cfg.loading.p0 = rng.gen_range(-1e6..1e6);
        cfg.loading.p1 = rng.gen_range(-1e6..1e6);
        cfg.loading.omega = rng.gen_range(1.0..1e3);
        cfg.loading.omega1 = cfg.loading.omega * rng.gen_range(1.1..5.0);
        cfg = cfg.with_ring_count(rng.gen_range(0..8)).with_rod_count(rng.gen_range(0..8));
        for rod in &mut cfg.rods {
            rod.modulus.span = cfg.geometry.length;
            rod.shear.span = cfg.geometry.length;
            rod.density.span = cfg.geometry.length;
        }
        let t = rng.gen_range(1e-3..1.0);
        for n in 1..=16u32 {
            for m in 1..=8u32 {
                if m % 2 == 1 && n % 4 != 0 {
                    continue;
                }
                let mode = ModeIndex { n, m };
                let phi = load_functional(mode, &cfg.geometry, &cfg.loading, t).map_err(|e| e.to_string())?;
                let assembled = assemble_closed_form(&cfg, mode, t).map_err(|e| e.to_string())?.phi_star;
                if phi != 0.0 || assembled != 0.0 {
                    return Err(format!("mode ({n},{m}) has phi* = {phi:e}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} uncoupled modes over 100 configurations, all exactly 0"))
}

fn force_grows_with_ring_count() -> Outcome {
    let start = Instant::now();
    let run = RunConfig {
        sweep: Some(SweepSpec {
            parameter: SweepParameter::RingCount,
            values: vec![2.0, 4.0, 6.0, 8.0, 10.0],
        }),
        ..RunConfig::reference()
    };
    let table = run_sweep(&run).map_err(|e| e.to_string())?;
    let p: Vec<f64> = table
        .rows
        .iter()
        .map(|r| r.p1b_pa.ok_or_else(|| format!("row {} failed: {}", r.value, r.status)))
        .collect::<std::result::Result<_, _>>()?;
    let shown: Vec<String> = p.iter().map(|v| format!("{v:.4e}")).collect();
    let detail = format!("p1b = [{}]", shown.join(", "));
    if !p.windows(2).all(|w| w[1] >= w[0]) {
        return Err(detail);
    }
    within_time(start, 60.0, detail)
}

fn degenerate_reductions_are_exact() -> Outcome {
    let cfg = ShellConfig::reference();
    let t = characteristic_time(cfg.loading.omega, 1).unwrap();
    let err = |e: Error| e.to_string();
    let zero = ActionQuadraticForm::default();
    for mode in [ModeIndex { n: 5, m: 1 }, ModeIndex { n: 2, m: 3 }, ModeIndex { n: 7, m: 2 }] {
        let full = assemble_breakdown(&cfg, mode, t).map_err(err)?;
        let rods_only = ActionBreakdown { rings: vec![], ..full.clone() }.total();
        if assemble_closed_form(&cfg.with_ring_count(0), mode, t).map_err(err)? != rods_only {
            return Err(format!("mode {mode:?}: zero rings differs from rods-only"));
        }
        let rings_only = ActionBreakdown { rods: vec![], ..full.clone() }.total();
        if assemble_closed_form(&cfg.with_rod_count(0), mode, t).map_err(err)? != rings_only {
            return Err(format!("mode {mode:?}: zero rods differs from rings-only"));
        }
        let mut dormant = cfg.clone();
        dormant.damage = DamageModel {
            gamma: 0.0,
            recovery: 0.3,
            rheologic: 2.0,
            cycles: 4,
            aux: [1e6, 2e6, -3e6, 4e6, 5e6, -6e6],
        };
        let d = assemble_breakdown(&dormant, mode, t).map_err(err)?;
        if d.damage != zero || d.total() != full.total() {
            return Err(format!("mode {mode:?}: gamma = 0 differs from undamaged"));
        }
        let mut still = cfg.clone();
        still.foundation.kernel_amplitude = 0.0;
        if assemble_breakdown(&still, mode, t).map_err(err)?.medium != zero {
            return Err(format!("mode {mode:?}: A = 0 leaves a medium block"));
        }
    }
    Ok("no rings, no rods, gamma = 0, A = 0 on 3 modes, bitwise".into())
}

fn time_factors_sum_to_interval() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let omega = 10f64.powf(rng.gen_range(-4.0..5.0));
        let time = 10f64.powf(rng.gen_range(-7.0..3.0));
        let tf = time_factors(omega, time);
        worst = worst.max(((tf.s_minus + tf.s_plus) - time).abs() / time);
    }
    let detail = format!("10^4 samples, worst rel {worst:.2e}");
    if worst <= 1e-14 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn configs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn sweeps_repeat_and_echo_round_trips() -> Outcome {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(configs_dir()).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        if path.extension().is_some_and(|e| e == "toml") {
            files.push(path);
        }
    }
    files.sort();
    let mut sweeps = 0;
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let run = parse_config(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let echo = canonical_echo(&run).map_err(|e| e.to_string())?;
        if parse_config(&echo).map_err(|e| e.to_string())? != run {
            return Err(format!("{}: echo does not round-trip", path.display()));
        }
        if canonical_echo(&parse_config(&echo).unwrap()).unwrap() != echo {
            return Err(format!("{}: echo is not a fixed point", path.display()));
        }
        if run.sweep.is_some() {
            let first = run_sweep(&parse_config(&text).unwrap()).map_err(|e| e.to_string())?.to_csv();
            let second = run_sweep(&parse_config(&text).unwrap()).map_err(|e| e.to_string())?.to_csv();
            let from_echo = run_sweep(&parse_config(&echo).unwrap()).map_err(|e| e.to_string())?.to_csv();
            if first != second || first != from_echo {
                return Err(format!("{}: sweep output differs between runs", path.display()));
            }
            sweeps += 1;
        }
    }
    if sweeps == 0 {
        return Err("no sweep configs found".into());
    }
    Ok(format!("{} configs round-trip, {sweeps} sweeps byte-identical", files.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("integrals: closed form vs adaptive quadrature", integrals_match_quadrature),
        ("action: quadratic form vs space-time quadrature", action_matches_space_time_quadrature),
        ("solver: Cramer vs elimination", cramer_matches_elimination),
        ("excitability: uncoupled modes carry no load", uncoupled_modes_have_no_load),
        ("trend: critical force vs ring count", force_grows_with_ring_count),
        ("degenerate reductions", degenerate_reductions_are_exact),
        ("time factors: S- + S+ = T", time_factors_sum_to_interval),
        ("determinism and config echo", sweeps_repeat_and_echo_round_trips),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("acceptance {} [{tag}] {name}: {detail}", i + 1);
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
