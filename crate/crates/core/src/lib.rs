//! Choquet, Shilkret and Sugeno integrals on unipolar and bipolar scales.
//!
//! The crate is organised bottom-up:
//!
//! - [`model`]: scales, score vectors, coalitions, capacities, measures and bi-capacities.
//! - [`bipolar_ops`]: the symmetric maximum and the bipolar maximum operators.
//! - [`unipolar`]: classical integrals with their negative and symmetric variants.
//! - [`bipolar`]: bipolar Choquet, Shilkret and Sugeno integrals (neutral, right, left).
//! - [`axioms`]: executable axioms, seeded input generators and carrier elicitation.
//! - [`io`] and [`cli`]: carrier/alternative file formats and the command surface.

pub mod axioms;
pub mod bipolar;
pub mod bipolar_ops;
pub mod cli;
mod error;
pub mod io;
pub mod model;
pub mod unipolar;

pub use error::Error;
pub use model::{BiCapacity, Capacity, Coalition, Interval, Measure, ScoreVector, SignedCoalition};

/// Tolerance for comparing computed (not stored) quantities.
pub const EPS: f64 = 1e-9;
