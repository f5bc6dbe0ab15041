//! Closed-form coefficients of the action, one block per energy source.
//!
//! Displacements follow the modal ansatz
//!
//! ```text
//! u = u₀ cos nφ cos kx sin ωt
//! ϑ = ϑ₀ sin nφ sin kx sin ωt
//! w = w₀ cos nφ sin kx sin ωt
//! ```
//!
//! so every potential term carries S₋ = ∫sin²ωt and every kinetic term
//! ω²S₊ = ω²∫cos²ωt.

use std::f64::consts::PI;

use super::{load_functional, medium_time_block, time_factors, ActionQuadraticForm, TimeFactors};
use crate::damage::damage_modulation;
use crate::error::{Error, Result};
use crate::model::{
    stiffness_coefficients, DamageModel, FoundationModel, ModeIndex, RingStiffener, RodStiffener, ShellConfig,
    ShellGeometry, StiffnessCoefficients,
};
use crate::quadrature::{ring_profile_integrals, rod_profile_integrals, RingIntegrals, RodIntegrals};

/// Shell membrane + bending energy (measure ½R² dx dφ) and shell inertia
/// (measure ρ₀h dx dφ).
pub fn shell_block(
    geom: &ShellGeometry,
    b: &StiffnessCoefficients,
    density: f64,
    mode: ModeIndex,
    tf: TimeFactors,
    omega: f64,
) -> ActionQuadraticForm {
    let (r, l, h) = (geom.radius, geom.length, geom.thickness);
    let k = mode.axial_wavenumber(l);
    let n = mode.n as f64;
    let (k2, n2, r2) = (k * k, n * n, r * r);
    let d = h * h * h / 12.0;

    let pot = 0.25 * PI * l * r2 * tf.s_minus;
    let inertia = density * h * omega * omega * 0.5 * PI * l * tf.s_plus;

    let bending = d * (b.b11 * k2 * k2 + 2.0 * b.b12 * k2 * n2 / r2 + b.b22 * n2 * n2 / (r2 * r2) + 4.0 * b.b66 * n2 * k2 / r2);

    ActionQuadraticForm {
        l11: pot * h * (b.b11 * k2 + b.b66 * n2 / r2) + inertia,
        l22: pot * h * (b.b22 * n2 / r2 + b.b66 * k2) + inertia,
        l33: pot * (h * b.b22 / r2 + bending) + inertia,
        l12: -pot * h * (k * n / r) * (b.b12 + b.b66),
        l13: -pot * h * k * b.b12 / r,
        l23: pot * h * b.b22 * n / r2,
        phi_star: 0.0,
    }
}

/// One longitudinal rod at φᵢ: axial stretching, two bending planes and
/// torsion of the twist angle (ϑ − ∂w/∂φ)/R, plus rod inertia.
pub fn rod_block(
    rod: &RodStiffener,
    geom: &ShellGeometry,
    mode: ModeIndex,
    tf: TimeFactors,
    omega: f64,
    ints: &RodIntegrals,
) -> ActionQuadraticForm {
    let r = geom.radius;
    let k = mode.axial_wavenumber(geom.length);
    let n = mode.n as f64;
    let (s, c) = (n * rod.position).sin_cos();
    let (s2, c2) = (s * s, c * c);
    let (k2, r2) = (k * k, r * r);
    let w2 = omega * omega;
    let (sm, sp) = (tf.s_minus, tf.s_plus);

    let twist_pot = 0.5 * rod.torsion * k2 / r2 * ints.g_cos2 * s2 * sm;
    let twist_kin = w2 * rod.torsion * ints.i5 * s2 / r2 * sp;

    ActionQuadraticForm {
        l11: 0.5 * rod.area * k2 * ints.i2 * c2 * sm + w2 * rod.area * ints.i4 * c2 * sp,
        l22: 0.5 * rod.inertia_z * k2 * k2 * ints.i2 * s2 * sm + twist_pot + w2 * rod.area * ints.i5 * s2 * sp + twist_kin,
        l33: 0.5 * rod.inertia_y * k2 * k2 * ints.i2 * c2 * sm
            + n * n * twist_pot
            + w2 * rod.area * ints.i5 * c2 * sp
            + n * n * twist_kin,
        l23: n * (twist_pot + twist_kin),
        l12: 0.0,
        l13: 0.0,
        phi_star: 0.0,
    }
}

/// One ring at xⱼ: hoop stretching, in-plane and out-of-plane bending,
/// torsion of the twist angle −∂w/∂x, plus ring inertia.
pub fn ring_block(
    ring: &RingStiffener,
    geom: &ShellGeometry,
    mode: ModeIndex,
    tf: TimeFactors,
    omega: f64,
    ints: &RingIntegrals,
) -> ActionQuadraticForm {
    let r = geom.radius;
    let k = mode.axial_wavenumber(geom.length);
    let n = mode.n as f64;
    let (s, c) = (k * ring.position).sin_cos();
    let (s2, c2) = (s * s, c * c);
    let (k2, n2, r2) = (k * k, n * n, r * r);
    let w2 = omega * omega;
    let pot = 0.5 * r * tf.s_minus;
    let kin = r * w2 * tf.s_plus;

    let out_of_plane = ring.inertia_z * ints.i6 * c2;
    let torsion = ring.torsion * ints.i9 * c2;
    let in_plane = ring.inertia_x * ints.i6 * s2 * (1.0 - n2).powi(2) / (r2 * r2);

    ActionQuadraticForm {
        l11: pot * (out_of_plane * n2 + torsion) * n2 / (r2 * r2) + kin * ring.area * ints.i7 * c2,
        l22: pot * ring.area * ints.i6 * s2 * n2 / r2 + kin * ring.area * ints.i8 * s2,
        l33: pot * (ring.area * ints.i6 * s2 / r2 + in_plane + (out_of_plane + torsion * n2) * k2 / r2)
            + kin * (ring.area * ints.i7 * s2 + ring.torsion * k2 * ints.i7 * c2),
        l12: 0.0,
        l13: -pot * (out_of_plane + torsion) * n2 * k / (r2 * r),
        l23: pot * ring.area * ints.i6 * s2 * n / r2,
        phi_star: 0.0,
    }
}

/// Winkler + Pasternak reaction: (πRl/2)(k_g + k_p(k² + n²/R²))·S₋ on l₃₃.
pub fn foundation_block(
    foundation: &FoundationModel,
    geom: &ShellGeometry,
    mode: ModeIndex,
    tf: TimeFactors,
) -> ActionQuadraticForm {
    let k = mode.axial_wavenumber(geom.length);
    let n = mode.n as f64;
    let r = geom.radius;
    let stiffness = foundation.winkler + foundation.pasternak * (k * k + n * n / (r * r));
    ActionQuadraticForm {
        l33: 0.5 * PI * r * geom.length * stiffness * tf.s_minus,
        ..Default::default()
    }
}

/// Hereditary part of the medium reaction; subtracts from l₃₃.
pub fn medium_block(foundation: &FoundationModel, geom: &ShellGeometry, omega: f64, time: f64) -> ActionQuadraticForm {
    ActionQuadraticForm {
        l33: -medium_time_block(foundation, omega, time, geom).value,
        ..Default::default()
    }
}

/// Damage corrections proportional to γ·F(T), including the auxiliary
/// coefficients T₁..T₆, inside the πlhR²/4 prefactor.
pub fn damage_block(
    damage: &DamageModel,
    b: &StiffnessCoefficients,
    geom: &ShellGeometry,
    mode: ModeIndex,
    omega: f64,
    time: f64,
) -> Result<ActionQuadraticForm> {
    let gamma = damage.effective_gamma();
    if gamma == 0.0 {
        return Ok(ActionQuadraticForm::default());
    }
    let f = damage_modulation(omega, time, damage.rheologic)?;
    let (r, l, h) = (geom.radius, geom.length, geom.thickness);
    let k = mode.axial_wavenumber(l);
    let n = mode.n as f64;
    let [t1, t2, t3, t4, t5, t6] = damage.aux;
    let (h2, h3, h4) = (h * h, h * h * h, h * h * h * h);
    let (n2, k2, r2) = (n * n, k * k, r * r);
    let lin = gamma * h * f / omega;
    let cubic = gamma * h3 * f / (16.0 * omega);

    let uu = -lin * t1 + cubic * t1;
    let vv = -lin * t2 + cubic * t2;
    let ww = -lin * (t3 - t4 - h3 * n2 * k2 * b.b66 / (4.0 * r2))
        + cubic * (t3 + t4 + 4.0 * h3 * n2 * k2 * b.b66 / (9.0 * r2));
    let uv = 2.0 * n * k / r * gamma * h2 / omega * f * (b.b11 * b.b12 + b.b11 * b.b22)
        - gamma * h4 / (16.0 * omega) * f * 2.0 * n * k / r * (b.b11 * b.b12 + b.b12 * b.b22 + b.b66 * b.b66);
    let uw = -2.0 * n * gamma * h2 / (r * omega) * f * (b.b12 * t3 + b.b22 * t4 + h * k2 * b.b66 * b.b66 / (2.0 * r))
        + n * gamma * h4 / (8.0 * r * omega) * f * (b.b12 * t5 + b.b22 * t6);

    let pre = 0.25 * PI * l * h * r2;
    Ok(ActionQuadraticForm {
        l11: pre * uu,
        l22: pre * vv,
        l33: pre * ww,
        l12: 0.5 * pre * uv,
        l13: 0.5 * pre * uw,
        l23: 0.0,
        phi_star: 0.0,
    })
}

/// Every contribution kept separate; [`ActionBreakdown::total`] sums them
/// in a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionBreakdown {
    pub shell: ActionQuadraticForm,
    pub foundation: ActionQuadraticForm,
    pub medium: ActionQuadraticForm,
    pub damage: ActionQuadraticForm,
    pub rods: Vec<ActionQuadraticForm>,
    pub rings: Vec<ActionQuadraticForm>,
    pub phi_star: f64,
}

impl ActionBreakdown {
    pub fn total(&self) -> ActionQuadraticForm {
        let mut acc = self.shell + self.foundation + self.medium + self.damage;
        for rod in &self.rods {
            acc += *rod;
        }
        for ring in &self.rings {
            acc += *ring;
        }
        acc.phi_star = self.phi_star;
        acc
    }
}

pub fn assemble_breakdown(config: &ShellConfig, mode: ModeIndex, time: f64) -> Result<ActionBreakdown> {
    config.validate()?;
    ModeIndex::new(mode.n, mode.m)?;
    if !(time.is_finite() && time > 0.0) {
        return Err(Error::invalid("time", format!("T must be > 0, got {time}")));
    }
    let geom = &config.geometry;
    let omega = config.loading.omega;
    let b = stiffness_coefficients(&config.material)?;
    let tf = time_factors(omega, time);

    let rods = config
        .rods
        .iter()
        .map(|rod| rod_block(rod, geom, mode, tf, omega, &rod_profile_integrals(rod, geom, mode)))
        .collect();
    let rings = config
        .rings
        .iter()
        .map(|ring| ring_block(ring, geom, mode, tf, omega, &ring_profile_integrals(ring, mode)))
        .collect();

    Ok(ActionBreakdown {
        shell: shell_block(geom, &b, config.material.density, mode, tf, omega),
        foundation: foundation_block(&config.foundation, geom, mode, tf),
        medium: medium_block(&config.foundation, geom, omega, time),
        damage: damage_block(&config.damage, &b, geom, mode, omega, time)?,
        rods,
        rings,
        phi_star: load_functional(mode, geom, &config.loading, time)?,
    })
}

pub fn assemble_closed_form(config: &ShellConfig, mode: ModeIndex, time: f64) -> Result<ActionQuadraticForm> {
    Ok(assemble_breakdown(config, mode, time)?.total())
}
