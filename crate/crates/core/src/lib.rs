//! Exact computation in the Hopf algebras of partition diagrams `ParSym` and
//! `ParQSym`, together with `QSym`, `NSym`, the shuffle algebra and the maps
//! between them.

pub mod algebra;
pub mod checks;
pub mod classical;
pub mod composition;
pub mod diagram;
pub mod error;
pub mod morphisms;
pub mod parqsym;
pub mod parsym;

pub use algebra::{AnyElement, Basis, Element, GradedBialgebra, LinComb, QParam, Scalar, Space};
pub use composition::Composition;
pub use diagram::{AtomDecomposition, Connective, Diagram, Node, Row};
pub use error::{Error, Result};
