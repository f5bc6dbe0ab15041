//! The Hamilton action over [0, T] as a quadratic form in the modal
//! amplitudes (u₀, ϑ₀, w₀) plus a load term linear in w₀.
//!
//! Two independent routes are provided:
//!
//! * [`assemble_closed_form`] builds the coefficients l_ij analytically,
//!   block by block (shell, rods, rings, foundation, hereditary medium,
//!   damage corrections).
//! * [`assemble_by_quadrature`] integrates the energy densities of the shell,
//!   the stiffeners, the foundation and the load numerically over
//!   x ∈ [0, l], φ ∈ [0, 2π], t ∈ [0, T] for a given amplitude vector.
//!
//! Convention: `W(q) = qᵀLq + φ̃*·w₀` with `l_ii` the coefficient of `q_i²`
//! and `l_ij` (i ≠ j) half the coefficient of `q_i q_j`. The stationarity
//! system solved downstream is `L q = (0, 0, φ̃*)`.

mod closed_form;
mod oracle;

pub use closed_form::{
    assemble_breakdown, assemble_closed_form, damage_block, foundation_block, medium_block, ring_block, rod_block,
    shell_block, ActionBreakdown,
};
pub use oracle::{assemble_by_quadrature, finite_difference_form, hereditary_time_integral_by_quadrature};

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};
use crate::model::{FoundationModel, Loading, ModeIndex, ShellGeometry};

/// ∫₀ᵀ sin²ωt dt and ∫₀ᵀ cos²ωt dt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeFactors {
    pub s_minus: f64,
    pub s_plus: f64,
}

/// S₋ = T/2 − sin(2ωT)/(4ω), S₊ = T/2 + sin(2ωT)/(4ω).
///
/// S₋ is evaluated as (T/2)(1 − sinc 2ωT) with a series near 0 so it never
/// rounds below zero; S₊ = T − S₋.
pub fn time_factors(omega: f64, time: f64) -> TimeFactors {
    let y = 2.0 * omega * time;
    let one_minus_sinc = if y.abs() < 1e-2 {
        let y2 = y * y;
        y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0 * (1.0 - y2 / 72.0)))
    } else {
        1.0 - y.sin() / y
    };
    let s_minus = 0.5 * time * one_minus_sinc;
    TimeFactors {
        s_minus,
        s_plus: time - s_minus,
    }
}

/// Upper triangle of the symmetric 3×3 coefficient matrix and the load
/// functional φ̃*.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ActionQuadraticForm {
    pub l11: f64,
    pub l12: f64,
    pub l13: f64,
    pub l22: f64,
    pub l23: f64,
    pub l33: f64,
    pub phi_star: f64,
}

impl ActionQuadraticForm {
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        [
            [self.l11, self.l12, self.l13],
            [self.l12, self.l22, self.l23],
            [self.l13, self.l23, self.l33],
        ]
    }

    pub fn from_matrix(m: [[f64; 3]; 3], phi_star: f64) -> Self {
        Self {
            l11: m[0][0],
            l12: 0.5 * (m[0][1] + m[1][0]),
            l13: 0.5 * (m[0][2] + m[2][0]),
            l22: m[1][1],
            l23: 0.5 * (m[1][2] + m[2][1]),
            l33: m[2][2],
            phi_star,
        }
    }

    pub fn coefficients(&self) -> [f64; 6] {
        [self.l11, self.l12, self.l13, self.l22, self.l23, self.l33]
    }

    /// Largest coefficient magnitude.
    pub fn scale(&self) -> f64 {
        self.coefficients().iter().fold(0.0f64, |a, c| a.max(c.abs()))
    }

    /// qᵀLq.
    pub fn quadratic(&self, q: [f64; 3]) -> f64 {
        let [u, v, w] = q;
        self.l11 * u * u
            + self.l22 * v * v
            + self.l33 * w * w
            + 2.0 * (self.l12 * u * v + self.l13 * u * w + self.l23 * v * w)
    }

    /// qᵀLq + φ̃*·w₀.
    pub fn action(&self, q: [f64; 3]) -> f64 {
        self.quadratic(q) + self.phi_star * q[2]
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            l11: c * self.l11,
            l12: c * self.l12,
            l13: c * self.l13,
            l22: c * self.l22,
            l23: c * self.l23,
            l33: c * self.l33,
            phi_star: c * self.phi_star,
        }
    }
}

impl Add for ActionQuadraticForm {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self {
            l11: self.l11 + o.l11,
            l12: self.l12 + o.l12,
            l13: self.l13 + o.l13,
            l22: self.l22 + o.l22,
            l23: self.l23 + o.l23,
            l33: self.l33 + o.l33,
            phi_star: self.phi_star + o.phi_star,
        }
    }
}

impl AddAssign for ActionQuadraticForm {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

/// w₀² coefficient magnitude contributed by the hereditary medium
/// reaction ∫₀ᵗ A e^{−ψ(t−τ)} w(τ) dτ; it enters l₃₃ with a minus sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumTimeBlock {
    pub value: f64,
}

/// H(ω, ψ, T) = ∫₀ᵀ sin ωt ∫₀ᵗ e^{−ψ(t−τ)} sin ωτ dτ dt in closed form.
pub fn hereditary_time_integral(omega: f64, decay: f64, time: f64) -> f64 {
    let denom = omega * omega + decay * decay;
    let tf = time_factors(omega, time);
    let (s, c) = (omega * time).sin_cos();
    let damped = (omega - (-decay * time).exp() * (decay * s + omega * c)) / denom;
    (decay * tf.s_minus - 0.5 * s * s + omega * damped) / denom
}

/// A·(πRl/2)·H(ω, ψ, T).
pub fn medium_time_block(foundation: &FoundationModel, omega: f64, time: f64, geom: &ShellGeometry) -> MediumTimeBlock {
    if foundation.kernel_amplitude == 0.0 {
        return MediumTimeBlock { value: 0.0 };
    }
    let spatial = 0.5 * PI * geom.radius * geom.length;
    MediumTimeBlock {
        value: foundation.kernel_amplitude * spatial * hereditary_time_integral(omega, foundation.kernel_decay, time),
    }
}

/// cos(m̄π) − 1, exact.
pub fn axial_closure_factor(mode: ModeIndex) -> f64 {
    if mode.m.is_multiple_of(2) {
        0.0
    } else {
        -2.0
    }
}

/// sin(nπ/4), exact zeros at multiples of 4.
pub fn quadrant_factor(mode: ModeIndex) -> f64 {
    match mode.n % 8 {
        0 | 4 => 0.0,
        1 | 3 => FRAC_1_SQRT_2,
        2 => 1.0,
        5 | 7 => -FRAC_1_SQRT_2,
        6 => -1.0,
        _ => unreachable!(),
    }
}

/// sin((ω−ω₁)T)/(ω−ω₁) − sin((ω+ω₁)T)/(ω+ω₁).
pub fn pulsation_bracket(omega: f64, omega1: f64, time: f64) -> f64 {
    let (dm, dp) = (omega - omega1, omega + omega1);
    (dm * time).sin() / dm - (dp * time).sin() / dp
}

/// φ̃* = −(4/nk)(cos kL − 1) sin(nπ/4) · ∫₀ᵀ p(t) sin ωt dt with
/// p = p₀ + p₁ sin ω₁t.
pub fn load_functional(mode: ModeIndex, geom: &ShellGeometry, loading: &Loading, time: f64) -> Result<f64> {
    let (w, w1) = (loading.omega, loading.omega1);
    if (w - w1).abs() <= 1e-12 * w || (w + w1).abs() <= 1e-12 * w {
        return Err(Error::invalid("loading.omega1", "omega1 = +/-omega is not allowed"));
    }
    let k = mode.axial_wavenumber(geom.length);
    let n = mode.n as f64;
    let spatial = -4.0 / (n * k) * axial_closure_factor(mode) * quadrant_factor(mode);
    let temporal = loading.p0 * (1.0 - (w * time).cos()) / w + 0.5 * loading.p1 * pulsation_bracket(w, w1, time);
    Ok(spatial * temporal)
}
