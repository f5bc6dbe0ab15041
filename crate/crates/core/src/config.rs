//! TOML run configuration: unit-suffixed quantities, validation with field
//! paths, and a canonical echo that parses back to the same [`RunConfig`].
//!
//! Quantities are either bare SI numbers or strings such as `"160 mm"`,
//! `"7.8 g/cm3"`, `"6.67 GPa"`. The unit must match the dimension of the key.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    stiffness_coefficients, DamageModel, FoundationModel, InhomogeneityLaw, Loading, OrthotropicMaterial,
    RingStiffener, RodStiffener, ShellConfig, ShellGeometry,
};
use crate::solver::ModeSearch;

fn config_err(path: impl Into<String>, message: impl fmt::Display) -> Error {
    Error::Config {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Length,
    Area,
    SecondMoment,
    Pressure,
    Density,
    Frequency,
    Subgrade,
    Membrane,
    Angle,
    Rate,
    Kernel,
}

impl Dimension {
    fn units(self) -> &'static [(&'static str, f64)] {
        match self {
            Dimension::Length => &[("m", 1.0), ("cm", 1e-2), ("mm", 1e-3)],
            Dimension::Area => &[("m2", 1.0), ("cm2", 1e-4), ("mm2", 1e-6)],
            Dimension::SecondMoment => &[("m4", 1.0), ("cm4", 1e-8), ("mm4", 1e-12)],
            Dimension::Pressure => &[
                ("Pa", 1.0),
                ("kPa", 1e3),
                ("MPa", 1e6),
                ("GPa", 1e9),
                ("N/m2", 1.0),
                ("N/mm2", 1e6),
            ],
            Dimension::Density => &[("kg/m3", 1.0), ("g/cm3", 1e3)],
            Dimension::Frequency => &[("rad/s", 1.0), ("Hz", 2.0 * PI)],
            Dimension::Subgrade => &[("N/m3", 1.0), ("kN/m3", 1e3), ("MN/m3", 1e6)],
            Dimension::Membrane => &[("N/m", 1.0), ("kN/m", 1e3)],
            Dimension::Angle => &[("rad", 1.0), ("deg", PI / 180.0)],
            Dimension::Rate => &[("1/s", 1.0)],
            Dimension::Kernel => &[("N/m3/s", 1.0)],
        }
    }
}

/// A bare SI number or a `"<value> <unit>"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Number(f64),
    Text(String),
}

impl From<f64> for Quantity {
    fn from(v: f64) -> Self {
        Quantity::Number(v)
    }
}

impl Quantity {
    /// Convert to SI, checking the unit against `dim`.
    pub fn to_si(&self, path: &str, dim: Dimension) -> Result<f64> {
        let value = match self {
            Quantity::Number(v) => *v,
            Quantity::Text(s) => {
                let s = s.trim();
                let split = s
                    .find(|c: char| c.is_whitespace())
                    .ok_or_else(|| config_err(path, format!("expected \"<number> <unit>\", got {s:?}")))?;
                let (num, unit) = (&s[..split], s[split..].trim());
                let num: f64 = num
                    .parse()
                    .map_err(|_| config_err(path, format!("cannot parse number {num:?}")))?;
                let factor = dim
                    .units()
                    .iter()
                    .find(|(u, _)| *u == unit)
                    .map(|(_, f)| *f)
                    .ok_or_else(|| {
                        let allowed: Vec<_> = dim.units().iter().map(|(u, _)| *u).collect();
                        config_err(path, format!("unit {unit:?} not allowed here (expected one of {allowed:?})"))
                    })?;
                num * factor
            }
        };
        if !value.is_finite() {
            return Err(config_err(path, "value must be finite"));
        }
        Ok(value)
    }
}

fn finite(path: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(config_err(path, "value must be finite"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryDoc {
    radius: Quantity,
    length: Quantity,
    thickness: Quantity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MaterialDoc {
    e1: Quantity,
    /// Defaults to E₁ν₂/ν₁.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    e2: Option<Quantity>,
    nu1: f64,
    nu2: f64,
    shear_modulus: Quantity,
    density: Quantity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RodsDoc {
    count: usize,
    area: Quantity,
    inertia_y: Quantity,
    inertia_z: Quantity,
    torsion: Quantity,
    modulus: Quantity,
    shear: Quantity,
    density: Quantity,
    #[serde(default)]
    modulus_slope: f64,
    #[serde(default)]
    shear_slope: f64,
    #[serde(default)]
    density_slope: f64,
    /// Angles φᵢ; equally spaced from 0 when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    positions: Option<Vec<Quantity>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingsDoc {
    count: usize,
    area: Quantity,
    inertia_x: Quantity,
    inertia_z: Quantity,
    torsion: Quantity,
    modulus: Quantity,
    shear: Quantity,
    density: Quantity,
    #[serde(default)]
    modulus_slope: f64,
    #[serde(default)]
    shear_slope: f64,
    #[serde(default)]
    density_slope: f64,
    /// Axial stations xⱼ; l·j/(count+1) when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    positions: Option<Vec<Quantity>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FoundationDoc {
    winkler: Quantity,
    pasternak: Quantity,
    #[serde(default = "zero_quantity")]
    kernel_amplitude: Quantity,
    #[serde(default = "zero_quantity")]
    kernel_decay: Quantity,
}

fn zero_quantity() -> Quantity {
    Quantity::Number(0.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DamageDoc {
    gamma: f64,
    #[serde(default = "one")]
    recovery: f64,
    #[serde(default)]
    rheologic: f64,
    #[serde(default = "one_cycle")]
    cycles: u32,
    #[serde(default)]
    aux: [f64; 6],
}

fn one() -> f64 {
    1.0
}

fn one_cycle() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LoadingDoc {
    #[serde(default = "zero_quantity")]
    p0: Quantity,
    #[serde(default = "zero_quantity")]
    p1: Quantity,
    omega: Quantity,
    omega1: Quantity,
    w0_target: Quantity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchDoc {
    #[serde(default = "default_n_min")]
    n_min: u32,
    #[serde(default = "default_n_max")]
    n_max: u32,
    #[serde(default = "default_m_values")]
    m_values: Vec<u32>,
}

fn default_n_min() -> u32 {
    ModeSearch::default().n_min
}

fn default_n_max() -> u32 {
    ModeSearch::default().n_max
}

fn default_m_values() -> Vec<u32> {
    ModeSearch::default().m_values
}

/// Parameters a sweep may vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParameter {
    /// Number of equally spaced rings k₂.
    #[serde(rename = "ring_count")]
    RingCount,
    /// Slope of the ring modulus law.
    #[serde(rename = "sigma")]
    Sigma,
    /// Slope of the ring density law.
    #[serde(rename = "tau")]
    Tau,
    /// E₁/E₂ at fixed E₂ and ν₁.
    #[serde(rename = "modulus_ratio")]
    ModulusRatio,
    #[serde(rename = "winkler")]
    Winkler,
    #[serde(rename = "pasternak")]
    Pasternak,
    #[serde(rename = "gamma")]
    Gamma,
    /// Rheologic coefficient R_l.
    #[serde(rename = "R_l")]
    Rheologic,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::RingCount => "ring_count",
            SweepParameter::Sigma => "sigma",
            SweepParameter::Tau => "tau",
            SweepParameter::ModulusRatio => "modulus_ratio",
            SweepParameter::Winkler => "winkler",
            SweepParameter::Pasternak => "pasternak",
            SweepParameter::Gamma => "gamma",
            SweepParameter::Rheologic => "R_l",
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(config_err("sweep.values", "need at least one value"));
        }
        for (i, v) in self.values.iter().enumerate() {
            finite(&format!("sweep.values[{i}]"), *v)?;
            if self.parameter == SweepParameter::RingCount && (*v < 0.0 || v.fract() != 0.0) {
                return Err(config_err(
                    format!("sweep.values[{i}]"),
                    format!("ring_count must be a non-negative integer, got {v}"),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plot_script: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    geometry: GeometryDoc,
    material: MaterialDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rods: Option<RodsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rings: Option<RingsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    foundation: Option<FoundationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    damage: Option<DamageDoc>,
    loading: LoadingDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    search: Option<SearchDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sweep: Option<SweepSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<OutputSpec>,
}

/// Everything a `solve`, `sweep` or example run needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub shell: ShellConfig,
    pub search: ModeSearch,
    pub sweep: Option<SweepSpec>,
    pub output: OutputSpec,
}

impl RunConfig {
    /// Reference shell with the default mode search and no sweep.
    pub fn reference() -> Self {
        Self {
            shell: ShellConfig::reference(),
            search: ModeSearch::default(),
            sweep: None,
            output: OutputSpec::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate_shell(&self.shell)?;
        self.search.validate().map_err(|e| config_err("search", e))?;
        if let Some(s) = &self.sweep {
            s.validate()?;
        }
        Ok(())
    }
}

fn validate_shell(c: &ShellConfig) -> Result<()> {
    let wrap = |path: &'static str| move |e: Error| config_err(path, e);
    c.geometry.validate().map_err(wrap("geometry"))?;
    c.material.validate().map_err(wrap("material"))?;
    stiffness_coefficients(&c.material).map_err(wrap("material"))?;
    for rod in &c.rods {
        rod.validate(c.geometry.length).map_err(wrap("rods"))?;
    }
    for ring in &c.rings {
        ring.validate(c.geometry.length).map_err(wrap("rings"))?;
    }
    c.foundation.validate().map_err(wrap("foundation"))?;
    c.damage.validate().map_err(wrap("damage"))?;
    c.loading.validate().map_err(wrap("loading"))?;
    c.validate().map_err(wrap("config"))
}

fn law(path: &str, base: &Quantity, dim: Dimension, slope: f64, span: f64) -> Result<InhomogeneityLaw> {
    Ok(InhomogeneityLaw {
        base: base.to_si(path, dim)?,
        slope: finite(&format!("{path}_slope"), slope)?,
        span,
    })
}

fn positions(path: &str, given: &Option<Vec<Quantity>>, count: usize, dim: Dimension) -> Result<Option<Vec<f64>>> {
    let Some(list) = given else { return Ok(None) };
    if list.len() != count {
        return Err(config_err(path, format!("{} positions given for count = {count}", list.len())));
    }
    list.iter()
        .enumerate()
        .map(|(i, q)| q.to_si(&format!("{path}[{i}]"), dim))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

impl Document {
    fn into_run_config(self) -> Result<RunConfig> {
        use Dimension::*;
        let g = &self.geometry;
        let geometry = ShellGeometry {
            radius: g.radius.to_si("geometry.radius", Length)?,
            length: g.length.to_si("geometry.length", Length)?,
            thickness: g.thickness.to_si("geometry.thickness", Length)?,
        };
        let l = geometry.length;

        let m = &self.material;
        let e1 = m.e1.to_si("material.e1", Pressure)?;
        let nu1 = finite("material.nu1", m.nu1)?;
        let nu2 = finite("material.nu2", m.nu2)?;
        let e2 = match &m.e2 {
            Some(q) => q.to_si("material.e2", Pressure)?,
            None if nu1 != 0.0 => e1 * nu2 / nu1,
            None => return Err(config_err("material.e2", "required when nu1 = 0")),
        };
        let material = OrthotropicMaterial {
            e1,
            e2,
            nu1,
            nu2,
            shear_modulus: m.shear_modulus.to_si("material.shear_modulus", Pressure)?,
            density: m.density.to_si("material.density", Density)?,
        };

        let rods = match &self.rods {
            None => Vec::new(),
            Some(r) => {
                let template = RodStiffener {
                    area: r.area.to_si("rods.area", Area)?,
                    inertia_y: r.inertia_y.to_si("rods.inertia_y", SecondMoment)?,
                    inertia_z: r.inertia_z.to_si("rods.inertia_z", SecondMoment)?,
                    torsion: r.torsion.to_si("rods.torsion", SecondMoment)?,
                    modulus: law("rods.modulus", &r.modulus, Pressure, r.modulus_slope, l)?,
                    shear: law("rods.shear", &r.shear, Pressure, r.shear_slope, l)?,
                    density: law("rods.density", &r.density, Density, r.density_slope, l)?,
                    position: 0.0,
                };
                match positions("rods.positions", &r.positions, r.count, Angle)? {
                    Some(ps) => ps.into_iter().map(|position| RodStiffener { position, ..template }).collect(),
                    None => RodStiffener::equally_spaced(&template, r.count),
                }
            }
        };

        let rings = match &self.rings {
            None => Vec::new(),
            Some(r) => {
                let span = 2.0 * PI;
                let template = RingStiffener {
                    area: r.area.to_si("rings.area", Area)?,
                    inertia_x: r.inertia_x.to_si("rings.inertia_x", SecondMoment)?,
                    inertia_z: r.inertia_z.to_si("rings.inertia_z", SecondMoment)?,
                    torsion: r.torsion.to_si("rings.torsion", SecondMoment)?,
                    modulus: law("rings.modulus", &r.modulus, Pressure, r.modulus_slope, span)?,
                    shear: law("rings.shear", &r.shear, Pressure, r.shear_slope, span)?,
                    density: law("rings.density", &r.density, Density, r.density_slope, span)?,
                    position: 0.0,
                };
                match positions("rings.positions", &r.positions, r.count, Length)? {
                    Some(ps) => ps.into_iter().map(|position| RingStiffener { position, ..template }).collect(),
                    None => RingStiffener::equally_spaced(&template, r.count, l),
                }
            }
        };

        let foundation = match &self.foundation {
            None => FoundationModel::none(),
            Some(f) => FoundationModel {
                winkler: f.winkler.to_si("foundation.winkler", Subgrade)?,
                pasternak: f.pasternak.to_si("foundation.pasternak", Membrane)?,
                kernel_amplitude: f.kernel_amplitude.to_si("foundation.kernel_amplitude", Kernel)?,
                kernel_decay: f.kernel_decay.to_si("foundation.kernel_decay", Rate)?,
            },
        };

        let damage = match &self.damage {
            None => DamageModel::undamaged(),
            Some(d) => {
                finite("damage.gamma", d.gamma)?;
                finite("damage.recovery", d.recovery)?;
                finite("damage.rheologic", d.rheologic)?;
                for (i, a) in d.aux.iter().enumerate() {
                    finite(&format!("damage.aux[{i}]"), *a)?;
                }
                DamageModel {
                    gamma: d.gamma,
                    recovery: d.recovery,
                    rheologic: d.rheologic,
                    cycles: d.cycles,
                    aux: d.aux,
                }
            }
        };

        let ld = &self.loading;
        let loading = Loading {
            p0: ld.p0.to_si("loading.p0", Pressure)?,
            p1: ld.p1.to_si("loading.p1", Pressure)?,
            omega: ld.omega.to_si("loading.omega", Frequency)?,
            omega1: ld.omega1.to_si("loading.omega1", Frequency)?,
            w0_target: ld.w0_target.to_si("loading.w0_target", Length)?,
        };

        let search = match self.search {
            None => ModeSearch::default(),
            Some(s) => ModeSearch {
                n_min: s.n_min,
                n_max: s.n_max,
                m_values: s.m_values,
            },
        };

        let run = RunConfig {
            shell: ShellConfig {
                geometry,
                material,
                rods,
                rings,
                foundation,
                damage,
                loading,
            },
            search,
            sweep: self.sweep,
            output: self.output.unwrap_or_default(),
        };
        run.validate()?;
        Ok(run)
    }

    fn from_run_config(run: &RunConfig) -> Result<Self> {
        let c = &run.shell;
        let q = Quantity::Number;
        let uniform_rods = c.rods.windows(2).all(|w| RodStiffener { position: 0.0, ..w[0] } == RodStiffener { position: 0.0, ..w[1] });
        let uniform_rings =
            c.rings.windows(2).all(|w| RingStiffener { position: 0.0, ..w[0] } == RingStiffener { position: 0.0, ..w[1] });
        if !uniform_rods || !uniform_rings {
            return Err(Error::invalid("stiffeners", "the document format needs identical stiffeners within each set"));
        }
        let l = c.geometry.length;
        if c.rods.iter().any(|r| [r.modulus.span, r.shear.span, r.density.span] != [l; 3])
            || c.rings.iter().any(|r| [r.modulus.span, r.shear.span, r.density.span] != [2.0 * PI; 3])
        {
            return Err(Error::invalid("stiffeners", "law spans must be l for rods and 2*pi for rings"));
        }
        let rods = c.rods.first().map(|r| RodsDoc {
            count: c.rods.len(),
            area: q(r.area),
            inertia_y: q(r.inertia_y),
            inertia_z: q(r.inertia_z),
            torsion: q(r.torsion),
            modulus: q(r.modulus.base),
            shear: q(r.shear.base),
            density: q(r.density.base),
            modulus_slope: r.modulus.slope,
            shear_slope: r.shear.slope,
            density_slope: r.density.slope,
            positions: Some(c.rods.iter().map(|r| q(r.position)).collect()),
        });
        let rings = c.rings.first().map(|r| RingsDoc {
            count: c.rings.len(),
            area: q(r.area),
            inertia_x: q(r.inertia_x),
            inertia_z: q(r.inertia_z),
            torsion: q(r.torsion),
            modulus: q(r.modulus.base),
            shear: q(r.shear.base),
            density: q(r.density.base),
            modulus_slope: r.modulus.slope,
            shear_slope: r.shear.slope,
            density_slope: r.density.slope,
            positions: Some(c.rings.iter().map(|r| q(r.position)).collect()),
        });
        let f = &c.foundation;
        let d = &c.damage;
        let ld = &c.loading;
        Ok(Document {
            geometry: GeometryDoc {
                radius: q(c.geometry.radius),
                length: q(l),
                thickness: q(c.geometry.thickness),
            },
            material: MaterialDoc {
                e1: q(c.material.e1),
                e2: Some(q(c.material.e2)),
                nu1: c.material.nu1,
                nu2: c.material.nu2,
                shear_modulus: q(c.material.shear_modulus),
                density: q(c.material.density),
            },
            rods,
            rings,
            foundation: Some(FoundationDoc {
                winkler: q(f.winkler),
                pasternak: q(f.pasternak),
                kernel_amplitude: q(f.kernel_amplitude),
                kernel_decay: q(f.kernel_decay),
            }),
            damage: Some(DamageDoc {
                gamma: d.gamma,
                recovery: d.recovery,
                rheologic: d.rheologic,
                cycles: d.cycles,
                aux: d.aux,
            }),
            loading: LoadingDoc {
                p0: q(ld.p0),
                p1: q(ld.p1),
                omega: q(ld.omega),
                omega1: q(ld.omega1),
                w0_target: q(ld.w0_target),
            },
            search: Some(SearchDoc {
                n_min: run.search.n_min,
                n_max: run.search.n_max,
                m_values: run.search.m_values.clone(),
            }),
            sweep: run.sweep.clone(),
            output: if run.output == OutputSpec::default() {
                None
            } else {
                Some(run.output.clone())
            },
        })
    }
}

/// Parse and validate a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let doc: Document = toml::from_str(text).map_err(|e| {
        let message = e.message().to_string();
        let location = e
            .span()
            .map(|s| {
                let line = text[..s.start.min(text.len())].matches('\n').count() + 1;
                format!(" (line {line})")
            })
            .unwrap_or_default();
        config_err("document", format!("{message}{location}"))
    })?;
    doc.into_run_config()
}

pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| config_err(path.display().to_string(), e))?;
    parse_config(&text)
}

/// Canonical document: bare SI numbers, explicit stiffener positions, every
/// section present. `parse_config(&canonical_echo(c)?) == c`.
pub fn canonical_echo(run: &RunConfig) -> Result<String> {
    let doc = Document::from_run_config(run)?;
    toml::to_string(&doc).map_err(|e| config_err("echo", e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
[geometry]
radius = "160 mm"
length = "800 mm"
thickness = "0.45 mm"

[material]
e1 = "6.67 GPa"
nu1 = 0.11
nu2 = 0.19
shear_modulus = "3.5 GPa"
density = "7.8 g/cm3"

[rods]
count = 4
area = "5.2 mm2"
inertia_y = "1.3 mm4"
inertia_z = "1.3 mm4"
torsion = "0.23 mm4"
modulus = "6.67 GPa"
shear = "3.5 GPa"
density = "7.8 g/cm3"
modulus_slope = 0.4
shear_slope = 0.4
density_slope = 0.4

[rings]
count = 4
area = "5.2 mm2"
inertia_x = "19.9 mm4"
inertia_z = "19.9 mm4"
torsion = "0.48 mm4"
modulus = "6.67 GPa"
shear = "3.5 GPa"
density = "7.8 g/cm3"
modulus_slope = 0.4
shear_slope = 0.4
density_slope = 0.4

[foundation]
winkler = "1e6 N/m3"
pasternak = "1e4 N/m"
kernel_amplitude = 0.1615
kernel_decay = "0.05 1/s"

[loading]
omega = "100 rad/s"
omega1 = "200 rad/s"
w0_target = "0.1 mm"
"#;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
    }

    #[test]
    fn minimal_document_converts_units() {
        let run = parse_config(MINIMAL).unwrap();
        let c = &run.shell;
        assert_eq!(c.material.density, 7800.0);
        assert!(close(c.geometry.thickness, 0.45e-3));
        assert!(close(c.rods[0].inertia_y, 1.3e-12));
        assert!(close(c.loading.w0_target, 1e-4));
        assert_eq!(c.rings.len(), 4);
        assert_eq!(run.search, ModeSearch::default());
        let reference = ShellConfig::reference();
        assert!(close(c.material.e2, reference.material.e2));
        assert!(close(c.rings[2].position, reference.rings[2].position));
    }

    #[test]
    fn missing_thickness_is_named() {
        let text = MINIMAL.replace("thickness = \"0.45 mm\"\n", "");
        let err = parse_config(&text).unwrap_err();
        assert!(err.to_string().contains("thickness"), "{err}");
    }

    #[test]
    fn poisson_violation_carries_section() {
        let text = MINIMAL.replace("nu1 = 0.11", "nu1 = 6.0");
        let err = parse_config(&text).unwrap_err();
        match err {
            Error::Config { path, message } => {
                assert_eq!(path, "material");
                assert!(message.contains("Poisson"), "{message}");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn unknown_keys_and_wrong_units_are_rejected() {
        let err = parse_config(&MINIMAL.replace("[loading]", "[loading]\nfrequency = 3")).unwrap_err();
        assert!(err.to_string().contains("frequency"), "{err}");
        let err = parse_config(&MINIMAL.replace("\"160 mm\"", "\"160 GPa\"")).unwrap_err();
        assert!(matches!(&err, Error::Config { path, .. } if path == "geometry.radius"), "{err}");
    }

    #[test]
    fn hertz_converts_to_angular_frequency() {
        let q = Quantity::Text("50 Hz".into());
        assert!(close(q.to_si("f", Dimension::Frequency).unwrap(), 100.0 * PI));
        assert!(Quantity::Text("50Hz".into()).to_si("f", Dimension::Frequency).is_err());
    }

    #[test]
    fn echo_round_trips() {
        let mut run = parse_config(MINIMAL).unwrap();
        run.sweep = Some(SweepSpec {
            parameter: SweepParameter::Rheologic,
            values: vec![0.0, 0.25, 1.0 / 3.0],
        });
        run.output.csv = Some("out.csv".into());
        run.shell.damage.gamma = 1e-9;
        run.shell.damage.aux = [0.1, -2.0, 3.3e5, 0.0, 1.0 / 7.0, 9.0];
        let text = canonical_echo(&run).unwrap();
        assert_eq!(parse_config(&text).unwrap(), run);
        let bare = RunConfig::reference();
        assert_eq!(parse_config(&canonical_echo(&bare).unwrap()).unwrap(), bare);
    }

    #[test]
    fn ring_count_sweep_needs_integers() {
        let text = format!("{MINIMAL}\n[sweep]\nparameter = \"ring_count\"\nvalues = [2, 4.5]\n");
        assert!(parse_config(&text).is_err());
        let text = format!("{MINIMAL}\n[sweep]\nparameter = \"ring_count\"\nvalues = [2, 4]\n");
        assert_eq!(parse_config(&text).unwrap().sweep.unwrap().values, vec![2.0, 4.0]);
    }
}
