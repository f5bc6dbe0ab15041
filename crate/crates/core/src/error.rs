use thiserror::Error;

/// Everything that can go wrong between reading a configuration and
/// reporting a critical force.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("material reciprocity violated: nu2*E1 = {lhs:e}, nu1*E2 = {rhs:e}")]
    MaterialReciprocity { lhs: f64, rhs: f64 },

    #[error("invalid Poisson ratios: nu1*nu2 = {product} must lie in [0, 1)")]
    InvalidPoisson { product: f64 },

    #[error("inhomogeneity slope {slope} makes the profile non-positive (need slope > -1)")]
    NonPositiveProfile { slope: f64 },

    #[error("coordinate {value} outside the domain [{lo}, {hi}]")]
    Domain { value: f64, lo: f64, hi: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("adaptive quadrature did not converge on [{a}, {b}] (estimated error {error:e})")]
    QuadratureConvergence { a: f64, b: f64, error: f64 },

    #[error("singular stationarity system: |{what}| = {value:e} below floor {floor:e}")]
    SingularSystem {
        what: &'static str,
        value: f64,
        floor: f64,
    },

    #[error("mode (n={n}, m={m}) does not couple to the pulsating load")]
    NonExcitable { n: u32, m: u32 },

    #[error("no mode in the search range couples to the pulsating load")]
    AllModesNonExcitable,

    #[error("no excitable mode produced a positive critical force")]
    NoPositiveCriticalForce,

    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },
}

impl Error {
    pub(crate) fn invalid(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
