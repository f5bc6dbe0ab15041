//! Brute-force evaluation of the action by composite Gauss–Legendre
//! quadrature over (t, x, φ). Shares nothing with the closed-form blocks
//! except the ansatz itself; damage corrections are not modelled here.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::ActionQuadraticForm;
use crate::error::{Error, Result};
use crate::model::{stiffness_coefficients, ModeIndex, ShellConfig, StiffnessCoefficients};
use crate::quadrature::GaussLegendre;

const ORDER: usize = 10;
const CONVERGENCE_TOL: f64 = 1e-9;

/// Displacements and the derivatives the energy densities need, at one
/// point of space–time.
#[derive(Debug, Clone, Copy)]
struct Sample {
    u_x: f64,
    u_p: f64,
    u_pp: f64,
    u_t: f64,
    th_x: f64,
    th_xx: f64,
    th_p: f64,
    th_t: f64,
    w: f64,
    w_x: f64,
    w_xx: f64,
    w_pp: f64,
    w_xp: f64,
    w_t: f64,
    w_pt: f64,
    w_xt: f64,
}

#[derive(Debug, Clone, Copy)]
struct Ansatz {
    q: [f64; 3],
    k: f64,
    n: f64,
    omega: f64,
}

impl Ansatz {
    /// `ang = (cos nφ, sin nφ)`, `ax = (cos kx, sin kx)`, `tm = (sin ωt, cos ωt)`.
    #[inline]
    fn at(&self, ang: (f64, f64), ax: (f64, f64), tm: (f64, f64)) -> Sample {
        let [u0, t0, w0] = self.q;
        let (k, n, om) = (self.k, self.n, self.omega);
        let (cn, sn) = ang;
        let (cx, sx) = ax;
        let (st, ct) = tm;
        let w = w0 * cn * sx * st;
        Sample {
            u_x: -k * u0 * cn * sx * st,
            u_p: -n * u0 * sn * cx * st,
            u_pp: -n * n * u0 * cn * cx * st,
            u_t: om * u0 * cn * cx * ct,
            th_x: k * t0 * sn * cx * st,
            th_xx: -k * k * t0 * sn * sx * st,
            th_p: n * t0 * cn * sx * st,
            th_t: om * t0 * sn * sx * ct,
            w,
            w_x: k * w0 * cn * cx * st,
            w_xx: -k * k * w,
            w_pp: -n * n * w,
            w_xp: -n * k * w0 * sn * cx * st,
            w_t: om * w0 * cn * sx * ct,
            w_pt: -n * om * w0 * sn * sx * ct,
            w_xt: k * om * w0 * cn * cx * ct,
        }
    }
}

struct Grid {
    /// (x, weight, cos kx, sin kx)
    xs: Vec<(f64, f64, f64, f64)>,
    /// (φ, weight, cos nφ, sin nφ) over [0, 2π]
    ps: Vec<(f64, f64, f64, f64)>,
    /// same over [0, π/4], for the load
    load_ps: Vec<(f64, f64, f64, f64)>,
}

impl Grid {
    fn new(gl: &GaussLegendre, mode: ModeIndex, length: f64, refine: usize) -> Self {
        let k = mode.axial_wavenumber(length);
        let n = mode.n as f64;
        let tag = |q: f64| move |(s, w): (f64, f64)| (s, w, (q * s).cos(), (q * s).sin());
        let xp = refine * (2 * mode.m as usize + 4);
        let pp = refine * (2 * mode.n as usize + 4);
        Self {
            xs: gl.points(0.0, length, xp).into_iter().map(tag(k)).collect(),
            ps: gl.points(0.0, 2.0 * PI, pp).into_iter().map(tag(n)).collect(),
            load_ps: gl
                .points(0.0, 0.25 * PI, refine * (mode.n as usize / 4 + 2))
                .into_iter()
                .map(tag(n))
                .collect(),
        }
    }
}

struct Integrand<'a> {
    cfg: &'a ShellConfig,
    b: StiffnessCoefficients,
    ansatz: Ansatz,
    rod_angles: Vec<(f64, f64)>,
    ring_axials: Vec<(f64, f64)>,
}

impl<'a> Integrand<'a> {
    fn new(cfg: &'a ShellConfig, mode: ModeIndex, q: [f64; 3]) -> Result<Self> {
        let b = stiffness_coefficients(&cfg.material)?;
        let k = mode.axial_wavenumber(cfg.geometry.length);
        let n = mode.n as f64;
        Ok(Self {
            cfg,
            b,
            ansatz: Ansatz {
                q,
                k,
                n,
                omega: cfg.loading.omega,
            },
            rod_angles: cfg.rods.iter().map(|r| ((n * r.position).cos(), (n * r.position).sin())).collect(),
            ring_axials: cfg.rings.iter().map(|r| ((k * r.position).cos(), (k * r.position).sin())).collect(),
        })
    }

    fn shell(&self, p: &Sample) -> f64 {
        let g = &self.cfg.geometry;
        let (r, h) = (g.radius, g.thickness);
        let b = &self.b;
        let e11 = p.u_x;
        let e22 = (p.th_p + p.w) / r;
        let e12 = p.th_x + p.u_p / r;
        let k11 = p.w_xx;
        let k22 = p.w_pp / (r * r);
        let k12 = -2.0 * p.w_xp / r;
        let quad = |a: f64, c: f64, s: f64| b.b11 * a * a + 2.0 * b.b12 * a * c + b.b22 * c * c + b.b66 * s * s;
        let d = h * h * h / 12.0;
        let pot = 0.5 * r * r * (h * quad(e11, e22, e12) + d * quad(k11, k22, k12));
        let kin = self.cfg.material.density * h * (p.u_t * p.u_t + p.th_t * p.th_t + p.w_t * p.w_t);
        pot + kin
    }

    fn foundation(&self, p: &Sample) -> f64 {
        let f = &self.cfg.foundation;
        let r = self.cfg.geometry.radius;
        r * (f.winkler * p.w * p.w - f.pasternak * p.w * (p.w_xx + p.w_pp / (r * r)))
    }

    /// Shell, static foundation, rods and rings integrated over space at
    /// one time instant.
    fn spatial(&self, grid: &Grid, tm: (f64, f64)) -> f64 {
        let r = self.cfg.geometry.radius;
        let mut surface = 0.0;
        for &(_, wx, cx, sx) in &grid.xs {
            let mut row = 0.0;
            for &(_, wp, cn, sn) in &grid.ps {
                let p = self.ansatz.at((cn, sn), (cx, sx), tm);
                row += wp * (self.shell(&p) + self.foundation(&p));
            }
            surface += wx * row;
        }

        let mut rods = 0.0;
        for (rod, &ang) in self.cfg.rods.iter().zip(&self.rod_angles) {
            for &(x, wx, cx, sx) in &grid.xs {
                let p = self.ansatz.at(ang, (cx, sx), tm);
                let (e, g, rho) = (rod.modulus.value_at(x), rod.shear.value_at(x), rod.density.value_at(x));
                let twist_x = (p.th_x - p.w_xp) / r;
                let twist_t = (p.th_t - p.w_pt) / r;
                let pot = 0.5
                    * (e * (rod.area * p.u_x * p.u_x + rod.inertia_y * p.w_xx * p.w_xx + rod.inertia_z * p.th_xx * p.th_xx)
                        + g * rod.torsion * twist_x * twist_x);
                let kin = rho * (rod.area * (p.u_t * p.u_t + p.th_t * p.th_t + p.w_t * p.w_t) + rod.torsion * twist_t * twist_t);
                rods += wx * (pot + kin);
            }
        }

        let mut rings = 0.0;
        for (ring, &ax) in self.cfg.rings.iter().zip(&self.ring_axials) {
            for &(phi, wp, cn, sn) in &grid.ps {
                let p = self.ansatz.at((cn, sn), ax, tm);
                let (e, g, rho) = (
                    ring.modulus.value_at(phi),
                    ring.shear.value_at(phi),
                    ring.density.value_at(phi),
                );
                let twist = -p.w_x;
                let twist_p = -p.w_xp;
                let twist_t = -p.w_xt;
                let hoop = (p.th_p + p.w) / r;
                let in_plane = (p.w_pp + p.w) / (r * r);
                let out_of_plane = p.u_pp / (r * r) - twist / r;
                let torsion = (twist_p + p.u_p / r) / r;
                let pot = 0.5
                    * (e * (ring.area * hoop * hoop
                        + ring.inertia_x * in_plane * in_plane
                        + ring.inertia_z * out_of_plane * out_of_plane)
                        + g * ring.torsion * torsion * torsion);
                let kin = rho * (ring.area * (p.u_t * p.u_t + p.th_t * p.th_t + p.w_t * p.w_t) + ring.torsion * twist_t * twist_t);
                rings += wp * r * (pot + kin);
            }
        }
        surface + rods + rings
    }

    /// 4∫₀ˡ∫₀^{π/4} w dφ dx at one instant.
    fn load_moment(&self, grid: &Grid, tm: (f64, f64)) -> f64 {
        let mut acc = 0.0;
        for &(_, wx, cx, sx) in &grid.xs {
            for &(_, wp, cn, sn) in &grid.load_ps {
                acc += wx * wp * self.ansatz.at((cn, sn), (cx, sx), tm).w;
            }
        }
        4.0 * acc
    }

    /// R∫∫ (w₀ cos nφ sin kx)² dx dφ.
    fn medium_spatial(&self, grid: &Grid) -> f64 {
        let w0 = self.ansatz.q[2];
        let mut acc = 0.0;
        for &(_, wx, _, sx) in &grid.xs {
            for &(_, wp, cn, _) in &grid.ps {
                let w = w0 * cn * sx;
                acc += wx * wp * w * w;
            }
        }
        self.cfg.geometry.radius * acc
    }
}

fn time_panels(omega: f64, omega1: f64, time: f64) -> usize {
    let band = omega + omega1.abs();
    2 * (band * time / PI).ceil() as usize + 2
}

/// ∫₀ᵀ sin ωt ∫₀ᵗ e^{−ψ(t−τ)} sin ωτ dτ dt by nested composite Gauss–Legendre.
pub fn hereditary_time_integral_by_quadrature(omega: f64, decay: f64, time: f64) -> f64 {
    let gl = GaussLegendre::new(12);
    let panels = |span: f64| 2 * (omega * span / PI).ceil() as usize + 2 + (decay * span).ceil() as usize;
    gl.points(0.0, time, panels(time))
        .into_iter()
        .map(|(t, wt)| {
            let inner = gl.integrate(|tau| (-decay * (t - tau)).exp() * (omega * tau).sin(), 0.0, t, panels(t));
            wt * (omega * t).sin() * inner
        })
        .sum()
}

/// The action W(q) for amplitudes `q = (u₀, ϑ₀, w₀)`, integrated over
/// t ∈ [0, T], x ∈ [0, l], φ ∈ [0, 2π].
///
/// Fails with [`Error::QuadratureConvergence`] when a spatial slice
/// evaluated on a twice finer grid disagrees by more than 1e-9 relative.
pub fn assemble_by_quadrature(config: &ShellConfig, mode: ModeIndex, time: f64, q: [f64; 3]) -> Result<f64> {
    config.validate()?;
    ModeIndex::new(mode.n, mode.m)?;
    if !(time.is_finite() && time > 0.0) {
        return Err(Error::invalid("time", format!("T must be > 0, got {time}")));
    }
    let gl = GaussLegendre::new(ORDER);
    let integrand = Integrand::new(config, mode, q)?;
    let grid = Grid::new(&gl, mode, config.geometry.length, 1);
    let loading = &config.loading;
    let omega = loading.omega;

    let slice_t = 0.37 * time;
    let tm = ((omega * slice_t).sin(), (omega * slice_t).cos());
    let coarse = integrand.spatial(&grid, tm);
    let fine = integrand.spatial(&Grid::new(&gl, mode, config.geometry.length, 2), tm);
    let error = (coarse - fine).abs();
    if error > CONVERGENCE_TOL * fine.abs().max(f64::MIN_POSITIVE) {
        return Err(Error::QuadratureConvergence { a: 0.0, b: time, error });
    }

    let nodes = gl.points(0.0, time, time_panels(omega, loading.omega1, time));
    let parts: Vec<f64> = nodes
        .par_iter()
        .map(|&(t, wt)| {
            let tm = ((omega * t).sin(), (omega * t).cos());
            let pressure = loading.p0 + loading.p1 * (loading.omega1 * t).sin();
            wt * (integrand.spatial(&grid, tm) + pressure * integrand.load_moment(&grid, tm))
        })
        .collect();
    let mut total: f64 = parts.iter().sum();

    let f = &config.foundation;
    if f.kernel_amplitude != 0.0 {
        total -= f.kernel_amplitude
            * integrand.medium_spatial(&grid)
            * hereditary_time_integral_by_quadrature(omega, f.kernel_decay, time);
    }
    Ok(total)
}

/// Recover `L` and φ̃* from any action functional by central differences
/// with step `h`. Exact (up to rounding) when `action` is a quadratic.
#[allow(clippy::needless_range_loop)]
pub fn finite_difference_form<F>(action: F, h: f64) -> Result<ActionQuadraticForm>
where
    F: Fn([f64; 3]) -> Result<f64>,
{
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::invalid("h", "finite-difference step must be > 0"));
    }
    let e = |i: usize, s: f64| {
        let mut q = [0.0; 3];
        q[i] = s * h;
        q
    };
    let pair = |i: usize, si: f64, j: usize, sj: f64| {
        let mut q = [0.0; 3];
        q[i] = si * h;
        q[j] = sj * h;
        q
    };
    let w0 = action([0.0; 3])?;
    let mut m = [[0.0; 3]; 3];
    let mut plus3 = 0.0;
    let mut minus3 = 0.0;
    for i in 0..3 {
        let (p, n) = (action(e(i, 1.0))?, action(e(i, -1.0))?);
        m[i][i] = (p + n - 2.0 * w0) / (2.0 * h * h);
        if i == 2 {
            plus3 = p;
            minus3 = n;
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let v = (action(pair(i, 1.0, j, 1.0))? - action(pair(i, 1.0, j, -1.0))? - action(pair(i, -1.0, j, 1.0))?
            + action(pair(i, -1.0, j, -1.0))?)
            / (8.0 * h * h);
        m[i][j] = v;
        m[j][i] = v;
    }
    Ok(ActionQuadraticForm::from_matrix(m, (plus3 - minus3) / (2.0 * h)))
}
