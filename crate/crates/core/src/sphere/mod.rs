//! The double-sphere specialization: tetrad constants, Fresnel's surface,
//! Einstein checks on the sphere and the Chern number.

pub mod checks;
pub mod chern;
pub mod fresnel;
pub mod goepel;
pub mod metrics;
