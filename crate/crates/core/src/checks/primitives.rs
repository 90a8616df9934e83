//! Primitive elements of `ParQSym` by exact kernel computation.

use super::linalg::{kernel, supported_on};
use super::report::{label, CheckReport, Counterexample};
use crate::algebra::bialgebra;
use crate::algebra::LinComb;
use crate::diagram::{enumerate_diagrams, Diagram};
use crate::parqsym::ParQSymM;

/// The `⊗`-irreducible diagrams of the given order; empty for order 0.
pub fn primitive_basis(order: usize) -> Vec<Diagram> {
    if order == 0 {
        return Vec::new();
    }
    enumerate_diagrams(order).into_iter().filter(|d| d.length() == 1).collect()
}

/// A basis of the primitive elements of `ParQSym` in the given order, in the `M` basis.
pub fn primitive_space(order: usize) -> Vec<LinComb<Diagram>> {
    if order == 0 {
        return Vec::new();
    }
    let images: Vec<(Diagram, LinComb<(Diagram, Diagram)>)> = enumerate_diagrams(order)
        .into_iter()
        .map(|d| {
            let red = bialgebra::reduced_coproduct(&ParQSymM, &LinComb::basis(d.clone()));
            (d, red)
        })
        .collect();
    kernel(&images)
}

/// The primitive space of each order `1..=max_order` equals the span of the
/// `⊗`-irreducible diagrams.
pub fn verify_strict_grading(max_order: usize) -> CheckReport {
    let mut report = CheckReport::new("strict-grading", max_order, Vec::new());
    for n in 1..=max_order {
        let irreducible = primitive_basis(n);
        for d in &irreducible {
            let red = bialgebra::reduced_coproduct(&ParQSymM, &LinComb::basis(d.clone()));
            report.expect(red.is_zero(), || Counterexample::new("irreducible is primitive", vec![label("M", d)], "nonzero reduced coproduct"));
        }
        let space = primitive_space(n);
        for v in &space {
            report.expect(supported_on(v, |d: &Diagram| d.length() == 1), || {
                Counterexample::new("primitive lies in irreducible span", vec![format!("order {n}")], format!("{v:?}"))
            });
        }
        report.expect(space.len() == irreducible.len(), || {
            Counterexample::new(
                "dim P = #irreducibles",
                vec![format!("order {n}")],
                format!("kernel dimension {}, irreducibles {}", space.len(), irreducible.len()),
            )
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(primitive_basis(1).len(), 2);
        assert_eq!(primitive_basis(2).len(), 11);
        assert_eq!(primitive_space(2).len(), 11);
        assert!(verify_strict_grading(2).passed());
    }
}
