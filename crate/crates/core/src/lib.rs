//! Dimensions of secant varieties of varieties of reducible hypersurfaces.
//!
//! The [`predictor`] module evaluates closed-form predictions from partition data,
//! [`series`] holds the Hilbert-series arithmetic those predictions are built on,
//! and [`oracle`] recomputes the same dimensions from scratch by ranking Terracini
//! matrices over a prime field. [`workbench`] joins the two into sweeps.

pub mod combinatorics;
pub mod error;
pub mod oracle;
pub mod predictor;
pub mod series;
pub mod workbench;

pub use combinatorics::{binom, Partition, ProblemInstance};
pub use error::{Error, Result};
