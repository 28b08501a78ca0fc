//! Semisimplified representation categories of the supergroups Gl(m|1) and
//! Sl(m|1).
//!
//! The symbolic side (`weights`, `indecomposables`, `quotient`, `ds`) works
//! with labels of indecomposable modules; the `oracle` module builds the
//! same modules as explicit matrices over Q for small m and checks the
//! symbolic rules against them.

pub mod checks;
pub mod cli;
pub mod ds;
pub mod error;
pub mod gl_tensor;
pub mod indecomposables;
pub mod oracle;
pub mod quotient;
pub mod weights;

pub use error::{Error, Result};
pub use gl_tensor::{Bipartition, Partition, RationalWeight};
pub use indecomposables::{BlockId, IndecompLabel, Kind};
pub use weights::{Weight, WeightDiagram};
