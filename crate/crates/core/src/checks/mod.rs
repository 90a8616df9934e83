//! Verification of structural claims: closure of subspaces, gradings,
//! filtrations, the coradical filtration and primitives.

mod closure;
mod grading;
pub mod linalg;
mod primitives;
mod report;
mod suites;

pub use closure::{check_coproduct_closure, check_product_closure, diagrams_upto, Predicate};
pub use grading::{coradical_degree, expected_grading, filtration_report, grading_report, GradingId};
pub use primitives::{primitive_basis, primitive_space, verify_strict_grading};
pub use report::{label, label2, CheckReport, Counterexample, Parameters, Status, TRUNCATION_NOTE};
pub use suites::{
    bases_suite, duality_suite, filtration_suite, grading_suite, hopf_suite, morphism_suite, run_suite,
    subalgebra_suite, Suite, SuiteConfig, EXHAUSTIVE_ORDER,
};
