pub mod automorphism;
pub mod cli;
pub mod congruence;
pub mod deg2;
pub mod error;
pub mod forms;
pub mod hqclass;
pub mod maps;
pub mod monomial;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod veronese;

pub use error::{Error, Result};
pub use forms::{HermitianForm, Inertia};
pub use maps::{Hyperquadric, RationalMap};
pub use matrix::MatrixK;
pub use scalar::FieldElement;
