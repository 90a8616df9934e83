//! Exact scalars, linear combinations, tagged elements and generic bialgebra machinery.

pub mod bialgebra;
pub mod element;
pub mod lincomb;
pub mod scalar;

pub use bialgebra::GradedBialgebra;
pub use element::{AnyElement, Basis, BasisKey, Element, Space, Tensor2, Tensor3};
pub use lincomb::LinComb;
pub use scalar::{QParam, Scalar};
