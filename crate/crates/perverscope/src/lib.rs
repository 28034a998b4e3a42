//! Exact computation with perverse sheaves on finite simplicial complexes.
//!
//! The pipeline: a simplicial complex and a GM perversity determine a finite
//! quiver algebra whose module category realizes the perverse sheaves. The
//! crate builds that algebra exactly (over the rationals or a prime field),
//! resolves modules by projective covers, computes hypercohomology, Ext
//! groups, and global dimension, and runs the highest-weight and
//! link-vanishing diagnostics.

pub mod algebra;
pub mod error;
pub mod field;
pub mod graded;
pub mod matrix;
pub mod perversity;
pub mod sample;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::{FieldSpec, Fp, Rat, Scalar};
pub use graded::GradedDims;

/// Matrix over the rationals, the default field.
pub type QMatrix = matrix::Matrix<Rat>;
/// Matrix over a prime field.
pub type FpMatrix = matrix::Matrix<Fp>;
