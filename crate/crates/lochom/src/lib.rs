//! Exact-arithmetic local cohomology and homological algebra over monomial
//! rings, finely Z^n-graded so every graded piece is a finite-dimensional
//! vector space computed with exact linear algebra.

pub mod complex;
pub mod error;
pub mod field;
pub mod findim;
pub mod graded;
pub mod koszul;
pub mod matrix;
pub mod monomial;
pub mod taylor;
pub mod zp;

pub use complex::{DegreeTable, GradedComplex};
pub use error::Error;
pub use field::{FieldElem, FieldSpec};
pub use graded::{DegreeBox, ModuleDescriptor, PolyMatrix, Summand};
pub use matrix::ExactMatrix;
pub use monomial::{Monomial, MonomialIdeal, RingSpec};
