//! Secant defectivity, osculating spaces, Schubert calculus and point blow-ups
//! of Grassmannians, quadrics and projective spaces.

pub mod birational;
pub mod bounds;
mod comb;
mod error;
pub mod oracle;
pub mod plucker_index;
pub mod schubert;

pub use error::{Error, Result};
