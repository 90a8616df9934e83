//! Closure of predicate-defined spans under products and coproducts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::report::{label, label2, CheckReport, Counterexample};
use crate::algebra::{LinComb, Space};
use crate::diagram::{enumerate_diagrams, Diagram};
use crate::error::{Error, Result};
use crate::{parqsym, parsym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Planar,
    Propagation0,
    IsolatedUpper,
    Matching,
    PerfectMatching,
    Permuting,
    PartialPermutation,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::Planar,
        Predicate::Propagation0,
        Predicate::IsolatedUpper,
        Predicate::Matching,
        Predicate::PerfectMatching,
        Predicate::Permuting,
        Predicate::PartialPermutation,
    ];

    /// Predicates whose span is claimed to be a Hopf subalgebra of `ParQSym`.
    pub const HOPF: [Predicate; 3] = [Predicate::Planar, Predicate::Propagation0, Predicate::IsolatedUpper];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Planar => "planar",
            Predicate::Propagation0 => "propagation0",
            Predicate::IsolatedUpper => "isolated_upper",
            Predicate::Matching => "matching",
            Predicate::PerfectMatching => "perfect_matching",
            Predicate::Permuting => "permuting",
            Predicate::PartialPermutation => "partial_permutation",
        }
    }

    pub fn holds(self, d: &Diagram) -> bool {
        match self {
            Predicate::Planar => d.is_planar(),
            Predicate::Propagation0 => d.propagation_number() == 0,
            other => {
                let c = d.classify();
                match other {
                    Predicate::IsolatedUpper => c.isolated_upper,
                    Predicate::Matching => c.matching,
                    Predicate::PerfectMatching => c.perfect_matching,
                    Predicate::Permuting => c.permuting,
                    _ => c.partial_permutation,
                }
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('-', "_");
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == t)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

pub(crate) fn prefix(space: Space) -> &'static str {
    if space == Space::ParSym {
        "H"
    } else {
        "M"
    }
}

pub(crate) fn space_product(space: Space) -> Result<fn(&Diagram, &Diagram) -> LinComb<Diagram>> {
    match space {
        Space::ParQSym => Ok(parqsym::mul_m),
        Space::ParSym => Ok(parsym::mul_h),
        other => Err(Error::MetadataMismatch(format!("{other} is not a diagram space"))),
    }
}

pub(crate) fn space_coproduct(space: Space) -> Result<fn(&Diagram) -> LinComb<(Diagram, Diagram)>> {
    match space {
        Space::ParQSym => Ok(parqsym::comul_m),
        Space::ParSym => Ok(parsym::comul_h),
        other => Err(Error::MetadataMismatch(format!("{other} is not a diagram space"))),
    }
}

/// All diagrams of order `0..=max_order`, grouped by order.
pub fn diagrams_upto(max_order: usize) -> Vec<Vec<Diagram>> {
    (0..=max_order).map(enumerate_diagrams).collect()
}

/// Ordered pairs of diagrams with total order at most `max_order`.
pub(crate) fn pairs_upto(by_order: &[Vec<Diagram>]) -> Vec<(&Diagram, &Diagram)> {
    let max = by_order.len().saturating_sub(1);
    let mut out = Vec::new();
    for i in 0..=max {
        for j in 0..=max - i {
            for a in &by_order[i] {
                for b in &by_order[j] {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

/// Every tensor factor in the coproduct of a predicate diagram satisfies the predicate.
pub fn check_coproduct_closure(space: Space, predicate: Predicate, max_order: usize) -> Result<CheckReport> {
    let comul = space_coproduct(space)?;
    let p = prefix(space);
    let mut report = CheckReport::new(format!("coproduct-closure/{space}/{predicate}"), max_order, Vec::new());
    for d in diagrams_upto(max_order).iter().flatten().filter(|d| predicate.holds(d)) {
        report.case();
        if let Some(((a, b), _)) = comul(d).iter().find(|((a, b), _)| !predicate.holds(a) || !predicate.holds(b)) {
            report.fail(Counterexample::new("coproduct", vec![label(p, d)], label2(p, a, b)));
        }
    }
    Ok(report)
}

/// Every term in the product of two predicate diagrams satisfies the predicate.
pub fn check_product_closure(space: Space, predicate: Predicate, max_order: usize) -> Result<CheckReport> {
    let mul = space_product(space)?;
    let p = prefix(space);
    let mut report = CheckReport::new(format!("product-closure/{space}/{predicate}"), max_order, Vec::new());
    let by_order: Vec<Vec<Diagram>> = diagrams_upto(max_order)
        .into_iter()
        .map(|ds| ds.into_iter().filter(|d| predicate.holds(d)).collect())
        .collect();
    for (a, b) in pairs_upto(&by_order) {
        report.case();
        if let Some((t, _)) = mul(a, b).iter().find(|(t, _)| !predicate.holds(t)) {
            report.fail(Counterexample::new("product", vec![label(p, a), label(p, b)], label(p, t)));
        }
    }
    Ok(report)
}
