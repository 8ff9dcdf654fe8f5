pub mod bernoulli;
pub mod clausen;
pub mod error;
pub mod lseries;
pub mod numerics;
pub mod polylog;
pub mod quadrature;
pub mod relations;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::{Angle, Complex, PrecisionContext, Real};
pub use rug;
