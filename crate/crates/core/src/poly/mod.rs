//! Exact integer Laurent polynomials and matrices over them.

mod bivariate;
mod laurent;
mod matrix;

pub use bivariate::LaurentST;
pub use laurent::{Laurent, LaurentA, LaurentS, QuarterLaurentT};
pub use matrix::STMatrix;
