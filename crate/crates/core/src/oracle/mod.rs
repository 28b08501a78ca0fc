//! Exact matrix-level ground truth for gl(m|1), m ≤ 3.

pub mod decompose;
pub mod ds;
pub mod gt;
pub mod induced;
pub mod labels;
pub mod linalg;
pub mod module;

pub use decompose::decompose_tensor;
pub use ds::{ds_matrix, ds_sigma_matrix};
pub use induced::{antikac_module, build_l0, irreducible, kac_module};
pub use labels::module_of_label;
pub use module::{SparseMat, SuperModule};
