//! Exact verification kernel for the genus-2 Kummer quartic: sigma-series
//! and hyperelliptic ℘-functions, Gauss metrics on two charts, their
//! curvature, and the double-sphere specialization.

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod inversion;
pub mod sigma;
pub mod sphere;
pub mod tensor;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
