//! Critical pulsating load of a stiffened, orthotropic cylindrical shell on
//! a viscoelastic foundation, from a Ritz-type reduction of the Hamilton
//! action to a 3×3 stationarity system per mode.

pub mod action;
pub mod config;
pub mod damage;
pub mod error;
pub mod model;
pub mod quadrature;
pub mod selfcheck;
pub mod solver;
pub mod sweep;

pub use error::{Error, Result};
pub use model::*;
