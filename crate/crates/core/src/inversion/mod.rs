//! Chart B: the Kummer surface through symmetric functions of two points
//! on the curve, evaluated exactly at rational points.

pub mod chart;
pub mod jet;
pub mod quadext;

pub use chart::{ChartBPoint, FloatKind, FloatPoint};
pub use jet::{Jet, JetScalar};
pub use quadext::{QuadCtx, QuadExt, QuadOp};
