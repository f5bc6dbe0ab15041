//! Numerical integration and the stiffener profile integrals I₁–I₉.
//!
//! [`integrate`] is a globally adaptive Gauss–Kronrod (7/15) scheme with
//! interval bisection. [`GaussLegendre`] is a fixed composite rule used by
//! the space–time action oracle, where the integrand is a trigonometric
//! polynomial of known bandwidth.

// Negated comparisons are deliberate: NaN must take the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{InhomogeneityLaw, ModeIndex, RingStiffener, RodStiffener, ShellGeometry};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_depth: 40,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::invalid("quadrature.tolerance", "tolerances must be > 0"));
        }
        if self.max_depth == 0 {
            return Err(Error::invalid("quadrature.max_depth", "must be >= 1"));
        }
        Ok(())
    }
}

// Kronrod nodes and weights, tabulated to more digits than f64 holds.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, depth: u32) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut fv = [(0.0, 0.0); 7];
    for (j, &x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, (f1, f2)) in fv.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    // QUADPACK error rescaling
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Panel {
        a,
        b,
        value,
        error,
        depth,
    }
}

/// Adaptive integral of `f` over `[a, b]`.
///
/// Panels are bisected largest-error-first until the summed error estimate
/// is below `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::invalid("integrate", format!("need finite a < b, got [{a}, {b}]")));
    }
    let mut panels = vec![gauss_kronrod_15(&f, a, b, 0)];
    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if !total.is_finite() {
            return Err(Error::QuadratureConvergence { a, b, error });
        }
        if error <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            return Ok(total);
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        if p.depth >= spec.max_depth {
            return Err(Error::QuadratureConvergence { a, b, error });
        }
        let mid = 0.5 * (p.a + p.b);
        panels.push(gauss_kronrod_15(&f, p.a, mid, p.depth + 1));
        panels.push(gauss_kronrod_15(&f, mid, p.b, p.depth + 1));
    }
}

/// Composite Gauss–Legendre rule: `panels` equal sub-intervals with an
/// `order`-point rule on each.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be >= 1");
        if order == 1 {
            return Self {
                nodes: vec![0.0],
                weights: vec![2.0],
            };
        }
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            // Tricomi initial guess, then Newton on P_n.
            let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=order {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Abscissae and weights of the composite rule on `[a, b]`.
    pub fn points(&self, a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
        let h = (b - a) / panels as f64;
        let mut out = Vec::with_capacity(panels * self.nodes.len());
        for p in 0..panels {
            let lo = a + p as f64 * h;
            let c = lo + 0.5 * h;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                out.push((c + 0.5 * h * x, 0.5 * h * w));
            }
        }
        out
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, panels: usize) -> f64 {
        self.points(a, b, panels).into_iter().map(|(x, w)| w * f(x)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigWeight {
    Cos2,
    Sin2,
}

impl TrigWeight {
    #[inline]
    fn at(self, q: f64, s: f64) -> f64 {
        match self {
            TrigWeight::Cos2 => (q * s).cos().powi(2),
            TrigWeight::Sin2 => (q * s).sin().powi(2),
        }
    }
}

/// Exact ∫₀^span law(s)·weight(q s) ds for a linear law.
pub fn linear_law_trig_integral(law: &InhomogeneityLaw, q: f64, weight: TrigWeight) -> f64 {
    let s = law.span;
    let sin2 = (2.0 * q * s).sin();
    let cos2m1 = (2.0 * q * s).cos() - 1.0;
    let sign = match weight {
        TrigWeight::Cos2 => 1.0,
        TrigWeight::Sin2 => -1.0,
    };
    let zeroth = 0.5 * s + sign * sin2 / (4.0 * q);
    let first = 0.25 * s * s + sign * (s * sin2 / (4.0 * q) + cos2m1 / (8.0 * q * q));
    law.base * (zeroth + law.slope / s * first)
}

fn profile_trig_integral<F: Fn(f64) -> f64>(
    profile: F,
    span: f64,
    q: f64,
    weight: TrigWeight,
    spec: &QuadratureSpec,
) -> Result<f64> {
    integrate(|s| profile(s) * weight.at(q, s), 0.0, span, spec)
}

/// Rod integrals over x ∈ [0, l] with argument k = m̄π/l.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RodIntegrals {
    /// I₁ = ∫Ẽ cos² kx
    pub i1: f64,
    /// I₂ = ∫Ẽ sin² kx
    pub i2: f64,
    /// I₃ = ∫G̃ sin² kx
    pub i3: f64,
    /// I₄ = ∫ρ̃ cos² kx
    pub i4: f64,
    /// I₅ = ∫ρ̃ sin² kx
    pub i5: f64,
    /// ∫G̃ cos² kx, the torsion-rate companion of I₃.
    pub g_cos2: f64,
}

impl RodIntegrals {
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            i1: c * self.i1,
            i2: c * self.i2,
            i3: c * self.i3,
            i4: c * self.i4,
            i5: c * self.i5,
            g_cos2: c * self.g_cos2,
        }
    }
}

/// Ring integrals over φ ∈ [0, 2π] with argument n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingIntegrals {
    /// I₆ = ∫Ẽ cos² nφ
    pub i6: f64,
    /// I₇ = ∫ρ̃ cos² nφ
    pub i7: f64,
    /// I₈ = ∫ρ̃ sin² nφ
    pub i8: f64,
    /// I₉ = ∫G̃ sin² nφ
    pub i9: f64,
    /// ∫Ẽ sin² nφ, the sum-rule companion of I₆.
    pub e_sin2: f64,
}

pub fn rod_profile_integrals(rod: &RodStiffener, geom: &ShellGeometry, mode: ModeIndex) -> RodIntegrals {
    let k = mode.axial_wavenumber(geom.length);
    use TrigWeight::*;
    RodIntegrals {
        i1: linear_law_trig_integral(&rod.modulus, k, Cos2),
        i2: linear_law_trig_integral(&rod.modulus, k, Sin2),
        i3: linear_law_trig_integral(&rod.shear, k, Sin2),
        i4: linear_law_trig_integral(&rod.density, k, Cos2),
        i5: linear_law_trig_integral(&rod.density, k, Sin2),
        g_cos2: linear_law_trig_integral(&rod.shear, k, Cos2),
    }
}

/// Rod integrals for arbitrary modulus, shear and density profiles on [0, length].
pub fn rod_integrals_for_profiles<E, G, D>(
    modulus: E,
    shear: G,
    density: D,
    length: f64,
    mode: ModeIndex,
    spec: &QuadratureSpec,
) -> Result<RodIntegrals>
where
    E: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let k = mode.axial_wavenumber(length);
    use TrigWeight::*;
    Ok(RodIntegrals {
        i1: profile_trig_integral(&modulus, length, k, Cos2, spec)?,
        i2: profile_trig_integral(&modulus, length, k, Sin2, spec)?,
        i3: profile_trig_integral(&shear, length, k, Sin2, spec)?,
        i4: profile_trig_integral(&density, length, k, Cos2, spec)?,
        i5: profile_trig_integral(&density, length, k, Sin2, spec)?,
        g_cos2: profile_trig_integral(&shear, length, k, Cos2, spec)?,
    })
}

pub fn rod_profile_integrals_by_quadrature(
    rod: &RodStiffener,
    geom: &ShellGeometry,
    mode: ModeIndex,
    spec: &QuadratureSpec,
) -> Result<RodIntegrals> {
    rod_integrals_for_profiles(
        |x| rod.modulus.value_at(x),
        |x| rod.shear.value_at(x),
        |x| rod.density.value_at(x),
        geom.length,
        mode,
        spec,
    )
}

pub fn ring_profile_integrals(ring: &RingStiffener, mode: ModeIndex) -> RingIntegrals {
    let n = mode.n as f64;
    use TrigWeight::*;
    RingIntegrals {
        i6: linear_law_trig_integral(&ring.modulus, n, Cos2),
        i7: linear_law_trig_integral(&ring.density, n, Cos2),
        i8: linear_law_trig_integral(&ring.density, n, Sin2),
        i9: linear_law_trig_integral(&ring.shear, n, Sin2),
        e_sin2: linear_law_trig_integral(&ring.modulus, n, Sin2),
    }
}

pub fn ring_integrals_for_profiles<E, G, D>(
    modulus: E,
    shear: G,
    density: D,
    mode: ModeIndex,
    spec: &QuadratureSpec,
) -> Result<RingIntegrals>
where
    E: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let n = mode.n as f64;
    let span = 2.0 * PI;
    use TrigWeight::*;
    Ok(RingIntegrals {
        i6: profile_trig_integral(&modulus, span, n, Cos2, spec)?,
        i7: profile_trig_integral(&density, span, n, Cos2, spec)?,
        i8: profile_trig_integral(&density, span, n, Sin2, spec)?,
        i9: profile_trig_integral(&shear, span, n, Sin2, spec)?,
        e_sin2: profile_trig_integral(&modulus, span, n, Sin2, spec)?,
    })
}

pub fn ring_profile_integrals_by_quadrature(
    ring: &RingStiffener,
    mode: ModeIndex,
    spec: &QuadratureSpec,
) -> Result<RingIntegrals> {
    ring_integrals_for_profiles(
        |p| ring.modulus.value_at(p),
        |p| ring.shear.value_at(p),
        |p| ring.density.value_at(p),
        mode,
        spec,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ShellConfig;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn integrate_examples() {
        let spec = QuadratureSpec::default();
        assert!((integrate(|_| 1.0, 0.0, 1.0, &spec).unwrap() - 1.0).abs() < 1e-14);
        // antiderivative x/2 + sin(2πx)/(4π)
        let v = integrate(|x| (PI * x).cos().powi(2), 0.0, 1.0, &spec).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
        // x/2 integrates to 1/4, oscillatory part vanishes over full periods
        let v = integrate(|x| x * (2.0 * PI * x).cos().powi(2), 0.0, 1.0, &spec).unwrap();
        assert!((v - 0.25).abs() < 1e-12);
    }

    #[test]
    fn integrate_reports_non_convergence() {
        let spec = QuadratureSpec {
            max_depth: 2,
            ..QuadratureSpec::default()
        };
        let r = integrate(|x| (1.0 / x.max(1e-300)).sqrt(), 0.0, 1.0, &spec);
        assert!(matches!(r, Err(Error::QuadratureConvergence { .. })));
        assert!(integrate(|x| x, 1.0, 0.0, &spec).is_err());
    }

    #[test]
    fn gauss_legendre_is_exact_for_polynomials() {
        for order in 1..=12 {
            let gl = GaussLegendre::new(order);
            let deg = 2 * order - 1;
            let v = gl.integrate(|x| x.powi(deg as i32) + 1.0, -1.0, 1.0, 1);
            // odd power integrates to 0 on [-1,1]
            assert!((v - 2.0).abs() < 1e-13, "order {order}: {v}");
            let even = gl.integrate(|x| x.powi(deg as i32 - 1), 0.0, 1.0, 3);
            assert!((even - 1.0 / deg as f64).abs() < 1e-13, "order {order}");
        }
    }

    #[test]
    fn homogeneous_rod_and_ring_constants() {
        let mut cfg = ShellConfig::reference();
        let l = cfg.geometry.length;
        let mut rod = cfg.rods[0];
        rod.modulus.slope = 0.0;
        let mut ring = cfg.rings[0];
        ring.modulus.slope = 0.0;
        cfg.rods[0] = rod;
        for m in 1..=6 {
            for n in 1..=6 {
                let mode = ModeIndex { n, m };
                let r = rod_profile_integrals(&rod, &cfg.geometry, mode);
                assert!(rel(r.i1, rod.modulus.base * l / 2.0) < 1e-13);
                assert!(rel(r.i2, rod.modulus.base * l / 2.0) < 1e-13);
                let g = ring_profile_integrals(&ring, mode);
                assert!(rel(g.i6, PI * ring.modulus.base) < 1e-13);
            }
        }
    }

    #[test]
    fn linear_law_examples() {
        let cfg = ShellConfig::reference();
        let l = cfg.geometry.length;
        let rod = cfg.rods[0];
        let ring = cfg.rings[0];
        let spec = QuadratureSpec::default();
        for (n, m) in [(1, 1), (3, 2), (7, 5)] {
            let mode = ModeIndex { n, m };
            let r = rod_profile_integrals(&rod, &cfg.geometry, mode);
            // ∫₀ˡ x cos²(m̄πx/l) dx = l²/4
            assert!(rel(r.i1, 0.6 * rod.modulus.base * l) < 1e-13);
            assert!(rel(r.i4, rod.density.base * l * 2.4 / 4.0) < 1e-13);
            let q = rod_profile_integrals_by_quadrature(&rod, &cfg.geometry, mode, &spec).unwrap();
            assert!(rel(q.i1, r.i1) < 1e-10);
            let g = ring_profile_integrals(&ring, mode);
            // ∫₀²π φ cos² nφ dφ = π²
            assert!(rel(g.i6, 1.2 * PI * ring.modulus.base) < 1e-13);
            assert!(rel(g.i8, PI * ring.density.base * 1.2) < 1e-13);
            let gq = ring_profile_integrals_by_quadrature(&ring, mode, &spec).unwrap();
            assert!(rel(gq.i6, g.i6) < 1e-10);
        }
    }

    #[test]
    fn sum_rules() {
        let cfg = ShellConfig::reference();
        let rod = cfg.rods[0];
        let ring = cfg.rings[0];
        for (n, m) in [(1, 1), (4, 3), (12, 7)] {
            let mode = ModeIndex { n, m };
            let r = rod_profile_integrals(&rod, &cfg.geometry, mode);
            assert!(rel(r.i1 + r.i2, rod.modulus.total()) < 1e-12);
            assert!(rel(r.i3 + r.g_cos2, rod.shear.total()) < 1e-12);
            let g = ring_profile_integrals(&ring, mode);
            assert!(rel(g.i6 + g.e_sin2, ring.modulus.total()) < 1e-12);
            assert!(rel(g.i7 + g.i8, ring.density.total()) < 1e-12);
        }
    }

    #[test]
    fn non_integer_frequency_agrees_with_quadrature() {
        let law = InhomogeneityLaw::new(2.5, 0.7, 1.3).unwrap();
        let spec = QuadratureSpec::default();
        for q in [0.37, 1.9, 11.1] {
            for w in [TrigWeight::Cos2, TrigWeight::Sin2] {
                let exact = linear_law_trig_integral(&law, q, w);
                let num = profile_trig_integral(|s| law.value_at(s), law.span, q, w, &spec).unwrap();
                assert!(rel(num, exact) < 1e-10, "q={q} {w:?}");
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn integrals_are_linear_in_base(base in 1.0f64..1e10, c in 0.1f64..10.0,
                                            slope in -0.9f64..2.0, n in 1u32..12, m in 1u32..12) {
                let cfg = ShellConfig::reference();
                let mut rod = cfg.rods[0];
                rod.modulus = InhomogeneityLaw::new(base, slope, cfg.geometry.length).unwrap();
                rod.shear = rod.modulus;
                rod.density = rod.modulus;
                let mode = ModeIndex { n, m };
                let a = rod_profile_integrals(&rod, &cfg.geometry, mode);
                rod.modulus = rod.modulus.scaled(c);
                rod.shear = rod.shear.scaled(c);
                rod.density = rod.density.scaled(c);
                let b = rod_profile_integrals(&rod, &cfg.geometry, mode);
                let s = a.scaled(c);
                for (x, y) in [(b.i1, s.i1), (b.i2, s.i2), (b.i3, s.i3), (b.i4, s.i4), (b.i5, s.i5)] {
                    prop_assert!((x - y).abs() <= 1e-12 * y.abs());
                }
            }
        }
    }
}
