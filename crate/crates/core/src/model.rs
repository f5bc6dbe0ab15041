//! Problem statement: shell geometry, orthotropic material, stiffener sets,
//! foundation, damage and loading, plus the two elementary material
//! computations (membrane stiffness coefficients and inhomogeneity laws).
//!
//! All quantities are SI: metres, pascals, kg/m³, rad/s.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Thin-shell limit on h/R.
pub const MAX_THICKNESS_RATIO: f64 = 0.2;

/// Relative tolerance on ν₂E₁ = ν₁E₂.
pub const RECIPROCITY_TOL: f64 = 1e-9;

fn require_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be finite and > 0, got {value}")))
    }
}

fn require_non_negative(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be finite and >= 0, got {value}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShellGeometry {
    pub radius: f64,
    pub length: f64,
    pub thickness: f64,
}

impl ShellGeometry {
    pub fn new(radius: f64, length: f64, thickness: f64) -> Result<Self> {
        let g = Self {
            radius,
            length,
            thickness,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("radius", self.radius)?;
        require_positive("length", self.length)?;
        require_positive("thickness", self.thickness)?;
        if self.thickness / self.radius >= MAX_THICKNESS_RATIO {
            return Err(Error::invalid(
                "thickness",
                format!(
                    "h/R = {} is outside the thin-shell regime (< {MAX_THICKNESS_RATIO})",
                    self.thickness / self.radius
                ),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthotropicMaterial {
    /// Axial modulus E₁.
    pub e1: f64,
    /// Circumferential modulus E₂.
    pub e2: f64,
    pub nu1: f64,
    pub nu2: f64,
    pub shear_modulus: f64,
    pub density: f64,
}

impl OrthotropicMaterial {
    pub fn new(e1: f64, e2: f64, nu1: f64, nu2: f64, shear_modulus: f64, density: f64) -> Result<Self> {
        let m = Self {
            e1,
            e2,
            nu1,
            nu2,
            shear_modulus,
            density,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("e1", self.e1)?;
        require_positive("e2", self.e2)?;
        require_positive("shear_modulus", self.shear_modulus)?;
        require_positive("density", self.density)?;
        let product = self.nu1 * self.nu2;
        if !product.is_finite() || !(0.0..1.0).contains(&product) {
            return Err(Error::InvalidPoisson { product });
        }
        let lhs = self.nu2 * self.e1;
        let rhs = self.nu1 * self.e2;
        if (lhs - rhs).abs() > RECIPROCITY_TOL * lhs.abs().max(rhs.abs()) {
            return Err(Error::MaterialReciprocity { lhs, rhs });
        }
        Ok(())
    }
}

/// Membrane stiffness coefficients of the orthotropic shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StiffnessCoefficients {
    pub b11: f64,
    pub b22: f64,
    pub b12: f64,
    pub b66: f64,
}

impl StiffnessCoefficients {
    pub fn is_positive_definite(&self) -> bool {
        self.b11 > 0.0 && self.b22 > 0.0 && self.b66 > 0.0 && self.b12 * self.b12 < self.b11 * self.b22
    }
}

/// b₁₁ = E₁/(1−ν₁ν₂), b₂₂ = E₂/(1−ν₁ν₂), b₆₆ = G and b₁₂ from both
/// ν₂E₁/(1−ν₁ν₂) and ν₁E₂/(1−ν₁ν₂), which must agree.
pub fn stiffness_coefficients(material: &OrthotropicMaterial) -> Result<StiffnessCoefficients> {
    material.validate()?;
    let denom = 1.0 - material.nu1 * material.nu2;
    let b12_axial = material.nu2 * material.e1 / denom;
    let b12_hoop = material.nu1 * material.e2 / denom;
    if (b12_axial - b12_hoop).abs() > RECIPROCITY_TOL * b12_axial.abs().max(b12_hoop.abs()) {
        return Err(Error::MaterialReciprocity {
            lhs: material.nu2 * material.e1,
            rhs: material.nu1 * material.e2,
        });
    }
    Ok(StiffnessCoefficients {
        b11: material.e1 / denom,
        b22: material.e2 / denom,
        b12: 0.5 * (b12_axial + b12_hoop),
        b66: material.shear_modulus,
    })
}

/// Linear profile `base · (1 + slope · s / span)` on `[0, span]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InhomogeneityLaw {
    pub base: f64,
    pub slope: f64,
    pub span: f64,
}

impl InhomogeneityLaw {
    pub fn new(base: f64, slope: f64, span: f64) -> Result<Self> {
        let law = Self { base, slope, span };
        law.validate()?;
        Ok(law)
    }

    pub fn constant(base: f64, span: f64) -> Result<Self> {
        Self::new(base, 0.0, span)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("law.base", self.base)?;
        require_positive("law.span", self.span)?;
        if !self.slope.is_finite() || self.slope <= -1.0 {
            return Err(Error::NonPositiveProfile { slope: self.slope });
        }
        Ok(())
    }

    /// Checked evaluation; `s` must lie in `[0, span]`.
    pub fn evaluate(&self, s: f64) -> Result<f64> {
        if !(0.0..=self.span).contains(&s) {
            return Err(Error::Domain {
                value: s,
                lo: 0.0,
                hi: self.span,
            });
        }
        Ok(self.value_at(s))
    }

    #[inline]
    pub fn value_at(&self, s: f64) -> f64 {
        self.base * (1.0 + self.slope * s / self.span)
    }

    /// ∫₀^span of the law.
    pub fn total(&self) -> f64 {
        self.base * self.span * (1.0 + 0.5 * self.slope)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            base: self.base * factor,
            ..*self
        }
    }
}

/// Longitudinal rod attached along the generatrix at angle `position`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RodStiffener {
    pub area: f64,
    pub inertia_y: f64,
    pub inertia_z: f64,
    pub torsion: f64,
    /// Ẽ(x) on [0, l].
    pub modulus: InhomogeneityLaw,
    /// G̃(x) on [0, l].
    pub shear: InhomogeneityLaw,
    /// ρ̃(x) on [0, l].
    pub density: InhomogeneityLaw,
    /// Angular position φᵢ in [0, 2π).
    pub position: f64,
}

impl RodStiffener {
    pub fn validate(&self, length: f64) -> Result<()> {
        require_positive("rod.area", self.area)?;
        require_positive("rod.inertia_y", self.inertia_y)?;
        require_positive("rod.inertia_z", self.inertia_z)?;
        require_positive("rod.torsion", self.torsion)?;
        for law in [&self.modulus, &self.shear, &self.density] {
            law.validate()?;
            if (law.span - length).abs() > 1e-12 * length {
                return Err(Error::invalid("rod.law.span", "rod laws must span the shell length"));
            }
        }
        if !(0.0..2.0 * PI).contains(&self.position) {
            return Err(Error::invalid("rod.position", format!("{} not in [0, 2pi)", self.position)));
        }
        Ok(())
    }

    /// `count` copies of `template` at φᵢ = 2πi/count, i = 0..count.
    pub fn equally_spaced(template: &RodStiffener, count: usize) -> Vec<RodStiffener> {
        (0..count)
            .map(|i| RodStiffener {
                position: 2.0 * PI * i as f64 / count as f64,
                ..*template
            })
            .collect()
    }
}

/// Circumferential ring attached at axial station `position`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RingStiffener {
    pub area: f64,
    /// In-plane bending (radial deflection) moment of inertia.
    pub inertia_x: f64,
    /// Out-of-plane bending (axial deflection) moment of inertia.
    pub inertia_z: f64,
    pub torsion: f64,
    /// Ẽ(φ) on [0, 2π].
    pub modulus: InhomogeneityLaw,
    /// G̃(φ) on [0, 2π].
    pub shear: InhomogeneityLaw,
    /// ρ̃(φ) on [0, 2π].
    pub density: InhomogeneityLaw,
    /// Axial station xⱼ in (0, l).
    pub position: f64,
}

impl RingStiffener {
    pub fn validate(&self, length: f64) -> Result<()> {
        require_positive("ring.area", self.area)?;
        require_positive("ring.inertia_x", self.inertia_x)?;
        require_positive("ring.inertia_z", self.inertia_z)?;
        require_positive("ring.torsion", self.torsion)?;
        for law in [&self.modulus, &self.shear, &self.density] {
            law.validate()?;
            if (law.span - 2.0 * PI).abs() > 1e-12 {
                return Err(Error::invalid("ring.law.span", "ring laws must span 2pi"));
            }
        }
        if !(self.position > 0.0 && self.position < length) {
            return Err(Error::invalid("ring.position", format!("{} not in (0, l)", self.position)));
        }
        Ok(())
    }

    /// `count` copies of `template` at xⱼ = l·j/(count+1), j = 1..=count.
    pub fn equally_spaced(template: &RingStiffener, count: usize, length: f64) -> Vec<RingStiffener> {
        (1..=count)
            .map(|j| RingStiffener {
                position: length * j as f64 / (count + 1) as f64,
                ..*template
            })
            .collect()
    }
}

/// Winkler/Pasternak foundation with an exponential hereditary kernel
/// Γ(t) = A·e^{−ψt}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoundationModel {
    pub winkler: f64,
    pub pasternak: f64,
    pub kernel_amplitude: f64,
    pub kernel_decay: f64,
}

impl FoundationModel {
    pub fn none() -> Self {
        Self {
            winkler: 0.0,
            pasternak: 0.0,
            kernel_amplitude: 0.0,
            kernel_decay: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        require_non_negative("foundation.winkler", self.winkler)?;
        require_non_negative("foundation.pasternak", self.pasternak)?;
        require_non_negative("foundation.kernel_amplitude", self.kernel_amplitude)?;
        require_non_negative("foundation.kernel_decay", self.kernel_decay)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DamageModel {
    /// Constant damage kernel γ.
    pub gamma: f64,
    /// Recovery level f ∈ [0, 1] (1 = no recovery).
    pub recovery: f64,
    /// Rheologic coefficient R_l in F(T).
    pub rheologic: f64,
    pub cycles: u32,
    /// Auxiliary coefficients T₁..T₆.
    pub aux: [f64; 6],
}

impl DamageModel {
    pub fn undamaged() -> Self {
        Self {
            gamma: 0.0,
            recovery: 1.0,
            rheologic: 0.0,
            cycles: 1,
            aux: [0.0; 6],
        }
    }

    pub fn validate(&self) -> Result<()> {
        require_non_negative("damage.gamma", self.gamma)?;
        if !(0.0..=1.0).contains(&self.recovery) {
            return Err(Error::invalid("damage.recovery", format!("{} not in [0, 1]", self.recovery)));
        }
        if !self.rheologic.is_finite() {
            return Err(Error::invalid("damage.rheologic", "must be finite"));
        }
        if self.cycles == 0 {
            return Err(Error::invalid("damage.cycles", "must be >= 1"));
        }
        if self.aux.iter().any(|t| !t.is_finite()) {
            return Err(Error::invalid("damage.aux", "must be finite"));
        }
        Ok(())
    }

    /// Kernel weighted by the recovery schedule: γ·(f·(N_c−1)+1)/N_c.
    pub fn effective_gamma(&self) -> f64 {
        let n = self.cycles as f64;
        self.gamma * (self.recovery * (n - 1.0) + 1.0) / n
    }
}

/// p = p₀ + p₁ sin ω₁t acting on a response at frequency ω.
///
/// `p1` is a trial amplitude used when the load functional is evaluated
/// directly; the critical-force search solves for p₁ and ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Loading {
    pub p0: f64,
    pub p1: f64,
    pub omega: f64,
    pub omega1: f64,
    pub w0_target: f64,
}

impl Loading {
    pub fn validate(&self) -> Result<()> {
        if !self.p0.is_finite() {
            return Err(Error::invalid("loading.p0", "must be finite"));
        }
        if !self.p1.is_finite() {
            return Err(Error::invalid("loading.p1", "must be finite"));
        }
        require_positive("loading.omega", self.omega)?;
        if !self.omega1.is_finite() {
            return Err(Error::invalid("loading.omega1", "must be finite"));
        }
        let tol = 1e-12 * self.omega;
        if (self.omega1 - self.omega).abs() <= tol || (self.omega1 + self.omega).abs() <= tol {
            return Err(Error::invalid("loading.omega1", "omega1 = +/-omega is not allowed"));
        }
        require_positive("loading.w0_target", self.w0_target)
    }
}

/// Circumferential wave number n and axial half-wave count m̄.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeIndex {
    pub n: u32,
    pub m: u32,
}

impl ModeIndex {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::invalid("mode", format!("n={n}, m={m}: both must be >= 1")));
        }
        Ok(Self { n, m })
    }

    /// k = m̄π/l.
    pub fn axial_wavenumber(&self, length: f64) -> f64 {
        self.m as f64 * PI / length
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShellConfig {
    pub geometry: ShellGeometry,
    pub material: OrthotropicMaterial,
    pub rods: Vec<RodStiffener>,
    pub rings: Vec<RingStiffener>,
    pub foundation: FoundationModel,
    pub damage: DamageModel,
    pub loading: Loading,
}

impl ShellConfig {
    pub fn validate(&self) -> Result<()> {
        self.geometry.validate()?;
        self.material.validate()?;
        stiffness_coefficients(&self.material)?;
        let l = self.geometry.length;
        for rod in &self.rods {
            rod.validate(l)?;
        }
        if self.rods.windows(2).any(|w| w[1].position <= w[0].position) {
            return Err(Error::invalid("rods.positions", "must be strictly increasing"));
        }
        for ring in &self.rings {
            ring.validate(l)?;
        }
        if self.rings.windows(2).any(|w| w[1].position <= w[0].position) {
            return Err(Error::invalid("rings.positions", "must be strictly increasing"));
        }
        self.foundation.validate()?;
        self.damage.validate()?;
        self.loading.validate()
    }

    /// Parameter set of the reference study: R = 160 mm, l = 800 mm,
    /// h = 0.45 mm, ν₁ = 0.11, ν₂ = 0.19, Ẽ₀ = 6.67 GPa, ρ = 7800 kg/m³,
    /// σ = μ = τ = 0.4, k_g = 10⁶ N/m³, k_p = 10⁴ N/m, A = 0.1615,
    /// ψ = 0.05, ω = 100 rad/s, ω₁ = 2ω, w₀ = 0.1 mm; four rods and four
    /// rings, undamaged.
    pub fn reference() -> Self {
        let geometry = ShellGeometry {
            radius: 0.160,
            length: 0.800,
            thickness: 0.45e-3,
        };
        let (nu1, nu2) = (0.11, 0.19);
        let e1 = 6.67e9;
        let material = OrthotropicMaterial {
            e1,
            e2: e1 * nu2 / nu1,
            nu1,
            nu2,
            shear_modulus: 3.5e9,
            density: 7800.0,
        };
        let l = geometry.length;
        let two_pi = 2.0 * PI;
        let rod = RodStiffener {
            area: 5.2e-6,
            inertia_y: 1.3e-12,
            inertia_z: 1.3e-12,
            torsion: 0.23e-12,
            modulus: InhomogeneityLaw { base: 6.67e9, slope: 0.4, span: l },
            shear: InhomogeneityLaw { base: 3.5e9, slope: 0.4, span: l },
            density: InhomogeneityLaw { base: 7800.0, slope: 0.4, span: l },
            position: 0.0,
        };
        let ring = RingStiffener {
            area: 5.2e-6,
            inertia_x: 19.9e-12,
            inertia_z: 19.9e-12,
            torsion: 0.48e-12,
            modulus: InhomogeneityLaw { base: 6.67e9, slope: 0.4, span: two_pi },
            shear: InhomogeneityLaw { base: 3.5e9, slope: 0.4, span: two_pi },
            density: InhomogeneityLaw { base: 7800.0, slope: 0.4, span: two_pi },
            position: 0.5 * l,
        };
        Self {
            geometry,
            material,
            rods: RodStiffener::equally_spaced(&rod, 4),
            rings: RingStiffener::equally_spaced(&ring, 4, l),
            foundation: FoundationModel {
                winkler: 1e6,
                pasternak: 1e4,
                kernel_amplitude: 0.1615,
                kernel_decay: 0.05,
            },
            damage: DamageModel::undamaged(),
            loading: Loading {
                p0: 0.0,
                p1: 0.0,
                omega: 100.0,
                omega1: 200.0,
                w0_target: 1e-4,
            },
        }
    }

    /// Replace the ring set by `count` equally spaced copies of the first
    /// ring (or of the reference ring when there are none).
    pub fn with_ring_count(&self, count: usize) -> Self {
        let template = self
            .rings
            .first()
            .copied()
            .unwrap_or_else(|| Self::reference().rings[0]);
        Self {
            rings: RingStiffener::equally_spaced(&template, count, self.geometry.length),
            ..self.clone()
        }
    }

    pub fn with_rod_count(&self, count: usize) -> Self {
        let template = self.rods.first().copied().unwrap_or_else(|| {
            let mut rod = Self::reference().rods[0];
            let l = self.geometry.length;
            rod.modulus.span = l;
            rod.shear.span = l;
            rod.density.span = l;
            rod
        });
        Self {
            rods: RodStiffener::equally_spaced(&template, count),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn isotropic_decoupled_limit() {
        let m = OrthotropicMaterial::new(3.0e9, 3.0e9, 0.0, 0.0, 1.1e9, 1000.0).unwrap();
        let b = stiffness_coefficients(&m).unwrap();
        assert_eq!(b, StiffnessCoefficients { b11: 3.0e9, b22: 3.0e9, b12: 0.0, b66: 1.1e9 });
    }

    #[test]
    fn orthotropic_hand_values() {
        let m = OrthotropicMaterial {
            e1: 2.0e9,
            e2: 1.0e9,
            nu1: 0.2,
            nu2: 0.1,
            shear_modulus: 0.5e9,
            density: 1.0,
        };
        let b = stiffness_coefficients(&m).unwrap();
        // 1/(1 - 0.02) = 1/0.98
        assert!(rel(b.b11, 2.0e9 / 0.98) < 1e-15);
        assert!(rel(b.b11, 2.0408163e9) < 1e-7);
        assert!(rel(b.b22, 1.0204082e9) < 1e-7);
        assert!(rel(b.b12, 2.0408163e8) < 1e-7);
        assert_eq!(b.b66, 0.5e9);
    }

    #[test]
    fn reciprocity_violation_is_rejected() {
        let m = OrthotropicMaterial {
            e1: 2.0e9,
            e2: 1.0e9,
            nu1: 0.2,
            nu2: 0.3,
            shear_modulus: 0.5e9,
            density: 1.0,
        };
        assert!(matches!(stiffness_coefficients(&m), Err(Error::MaterialReciprocity { .. })));
    }

    #[test]
    fn poisson_product_at_one_is_rejected() {
        let m = OrthotropicMaterial {
            e1: 1.0e9,
            e2: 1.0e9,
            nu1: 1.0,
            nu2: 1.0,
            shear_modulus: 0.5e9,
            density: 1.0,
        };
        assert!(matches!(stiffness_coefficients(&m), Err(Error::InvalidPoisson { .. })));
    }

    #[test]
    fn law_values() {
        let ring = InhomogeneityLaw::new(6.67e9, 0.4, 2.0 * PI).unwrap();
        assert_eq!(ring.evaluate(0.0).unwrap(), 6.67e9);
        let unit = InhomogeneityLaw::new(1.0, 0.4, 2.0 * PI).unwrap();
        assert!((unit.evaluate(2.0 * PI).unwrap() - 1.4).abs() < 1e-15);
        let flat = InhomogeneityLaw::new(1.0, 0.0, 0.8).unwrap();
        for s in [0.0, 0.1, 0.4, 0.8] {
            assert_eq!(flat.evaluate(s).unwrap(), 1.0);
        }
    }

    #[test]
    fn law_rejects_bad_input() {
        assert!(matches!(
            InhomogeneityLaw::new(1.0, -1.0, 1.0),
            Err(Error::NonPositiveProfile { .. })
        ));
        let law = InhomogeneityLaw::new(1.0, 0.5, 1.0).unwrap();
        assert!(matches!(law.evaluate(1.5), Err(Error::Domain { .. })));
        assert!(matches!(law.evaluate(-0.1), Err(Error::Domain { .. })));
    }

    #[test]
    fn thick_shell_is_rejected() {
        assert!(ShellGeometry::new(0.1, 1.0, 0.0201).is_err());
        assert!(ShellGeometry::new(0.1, 1.0, 0.019).is_ok());
    }

    #[test]
    fn loading_rejects_resonant_load_frequency() {
        let mut load = ShellConfig::reference().loading;
        load.omega1 = load.omega;
        assert!(load.validate().is_err());
        load.omega1 = -load.omega;
        assert!(load.validate().is_err());
    }

    #[test]
    fn reference_config_is_valid_and_placed_uniformly() {
        let cfg = ShellConfig::reference();
        cfg.validate().unwrap();
        assert_eq!(cfg.rods.len(), 4);
        assert!((cfg.rods[1].position - PI / 2.0).abs() < 1e-15);
        assert!((cfg.rings[0].position - 0.16).abs() < 1e-15);
        assert_eq!(cfg.with_ring_count(0).rings.len(), 0);
        cfg.with_ring_count(10).validate().unwrap();
    }

    #[test]
    fn effective_gamma_collapses_recovery() {
        let mut d = DamageModel::undamaged();
        d.gamma = 2.0;
        d.cycles = 3;
        d.recovery = 0.5;
        // (0.5 * 2 + 1) / 3
        assert!((d.effective_gamma() - 2.0 * 2.0 / 3.0).abs() < 1e-15);
        d.recovery = 1.0;
        assert_eq!(d.effective_gamma(), 2.0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn membrane_stiffness_is_positive_definite(
                e1 in 1e6f64..1e12,
                e2 in 1e6f64..1e12,
                nu1 in 0.0f64..0.95,
                g in 1e6f64..1e12,
            ) {
                // pick nu2 from reciprocity and keep nu1*nu2 < 1
                let nu2 = nu1 * e2 / e1;
                prop_assume!(nu1 * nu2 < 0.999);
                let m = OrthotropicMaterial::new(e1, e2, nu1, nu2, g, 1.0).unwrap();
                let b = stiffness_coefficients(&m).unwrap();
                prop_assert!(b.is_positive_definite());
            }

            #[test]
            fn law_is_affine(base in 1e-3f64..1e10, slope in -0.99f64..5.0, span in 0.01f64..10.0,
                             a in 0.0f64..1.0, b in 0.0f64..1.0) {
                let law = InhomogeneityLaw::new(base, slope, span).unwrap();
                let (s1, s2) = (a * span, b * span);
                let lhs = law.value_at(s1) + law.value_at(s2);
                let rhs = 2.0 * law.value_at(0.5 * (s1 + s2));
                prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
            }

            #[test]
            fn zero_slope_is_constant(base in 1e-3f64..1e10, span in 0.01f64..10.0) {
                let law = InhomogeneityLaw::constant(base, span).unwrap();
                for i in 0..64 {
                    let s = (span * i as f64 / 63.0).min(span);
                    prop_assert_eq!(law.evaluate(s).unwrap(), base);
                }
            }
        }
    }
}
