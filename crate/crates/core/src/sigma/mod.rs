//! The genus-2 sigma chart: sigma expansion, ℘-functions, Kummer quartic,
//! Gauss metric and Ricci fingerprints.

pub mod chart;
pub mod kummer;
pub mod rational;
pub mod series;
pub mod wp;

pub use chart::{RicciHat, SeriesCheck, SigmaChart};
pub use kummer::KummerVariant;
pub use rational::{SigmaField, SigmaRational};
pub use series::{build_sigma, LambdaMode, SigmaLevel, SigmaSeries};
