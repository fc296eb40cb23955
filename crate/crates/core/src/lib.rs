//! Exact Hochschild and cyclic (co)homology of finite-dimensional algebras
//! given by structure constants, and decision procedures for symmetry of
//! Hochschild extensions `T(A, alpha)`.
//!
//! All arithmetic is exact, over the rationals or a prime field; see [`field`].

pub mod algebra;
pub mod complexes;
pub mod corpus;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod linalg;
pub mod pencil;
pub mod quiver;
pub mod symmetry;
pub mod tensor;

pub use algebra::{Algebra, Bimodule};
pub use complexes::{Cochain, Limits, TildeForm};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp, PrimeField, Rationals};
pub use linalg::Matrix;
pub use symmetry::{ExtensionProblem, Method, SymmetryCertificate, Verdict, Witness};
