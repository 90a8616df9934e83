//! Deconcatenation bases built from a weight function on diagrams.
//!
//! Given `f`, the family `Q_π = Σ_{π≤ρ} f(π,ρ) M_ρ` is a basis whose coproduct
//! splits `Q_π` at every `⊗`-cut, provided `f` does not vanish on irreducibles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{LinComb, QParam, Scalar};
use crate::diagram::{enumerate_diagrams, Diagram};
use crate::error::{Error, Result};

/// A scalar function on non-empty diagrams.
#[derive(Clone)]
pub struct WeightFunction {
    f: Arc<dyn Fn(&Diagram) -> Scalar + Send + Sync>,
}

impl WeightFunction {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&Diagram) -> Scalar + Send + Sync + 'static,
    {
        WeightFunction { f: Arc::new(f) }
    }

    pub fn constant(c: Scalar) -> Self {
        WeightFunction::new(move |_| c.clone())
    }

    /// The weight `r = q + 1` behind the `η^(q)` basis.
    pub fn eta_q(q: &QParam) -> Self {
        WeightFunction::constant(q.r())
    }

    pub fn eval(&self, d: &Diagram) -> Scalar {
        (self.f)(d)
    }

    /// Fails on the first non-empty `⊗`-irreducible diagram of order `≤ max_order` where `f` vanishes.
    pub fn check_nonsingular(&self, max_order: usize) -> Result<()> {
        for k in 1..=max_order {
            for d in enumerate_diagrams(k) {
                if d.length() == 1 && self.eval(&d).is_zero() {
                    return Err(Error::SingularWeight(d.to_string()));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("WeightFunction")
    }
}

/// The pieces `π_ρ^(1), …, π_ρ^(l(ρ))` of `π` lying under the `⊗`-factors of `ρ`.
pub fn pieces_along(pi: &Diagram, rho: &Diagram) -> Result<Vec<Diagram>> {
    if !pi.refines(rho) {
        return Err(Error::NotRefining(pi.to_string(), rho.to_string()));
    }
    let mut pieces = Vec::new();
    let mut lo = 1;
    for factor in rho.tensor_factors() {
        let hi = lo + factor.order() - 1;
        pieces.push(pi.restrict(lo, hi));
        lo = hi + 1;
    }
    Ok(pieces)
}

/// `f(π,ρ) = Π_i f(π_ρ^(i))`, with `f(∅,∅) = 1`.
pub fn extend_weight(f: &WeightFunction, pi: &Diagram, rho: &Diagram) -> Result<Scalar> {
    Ok(pieces_along(pi, rho)?.iter().map(|p| f.eval(p)).product())
}

/// Conversion tables between the `M` basis and the family `Q` defined by a weight.
#[derive(Clone, Debug)]
pub struct DeconcatBasis {
    pub max_order: usize,
    /// `Q_π` in the `M` basis.
    pub forward: BTreeMap<Diagram, LinComb<Diagram>>,
    /// `M_π` in the `Q` basis.
    pub backward: BTreeMap<Diagram, LinComb<Diagram>>,
    /// The dual weight `g` solving `Σ_{π≤ρ} f(π,ρ) g(ρ) = [l(π)=1]`.
    pub dual_weight: BTreeMap<Diagram, Scalar>,
}

struct DualSolver<'a> {
    f: &'a WeightFunction,
    memo: HashMap<Diagram, Scalar>,
}

impl DualSolver<'_> {
    fn g(&mut self, pi: &Diagram) -> Scalar {
        if let Some(v) = self.memo.get(pi) {
            return v.clone();
        }
        let mut rhs = if pi.length() == 1 { Scalar::one() } else { Scalar::zero() };
        for rho in pi.coarsenings() {
            if rho != *pi {
                let w = extend_weight(self.f, pi, &rho).expect("coarsening");
                if !w.is_zero() {
                    rhs -= w * self.g(&rho);
                }
            }
        }
        let diag = extend_weight(self.f, pi, pi).expect("reflexive");
        let value = rhs / diag;
        self.memo.insert(pi.clone(), value.clone());
        value
    }

    fn g_pair(&mut self, pi: &Diagram, rho: &Diagram) -> Scalar {
        pieces_along(pi, rho).expect("coarsening").iter().map(|p| self.g(p)).product()
    }
}

/// Builds both conversion tables for every diagram of order `≤ max_order`.
pub fn deconcat_basis_pair(f: &WeightFunction, max_order: usize) -> Result<DeconcatBasis> {
    f.check_nonsingular(max_order)?;
    let mut solver = DualSolver { f, memo: HashMap::new() };
    let mut forward = BTreeMap::new();
    let mut backward = BTreeMap::new();
    for k in 0..=max_order {
        for pi in enumerate_diagrams(k) {
            let coarse = pi.coarsenings();
            let mut fw = LinComb::zero();
            let mut bw = LinComb::zero();
            for rho in &coarse {
                fw.add_term(rho.clone(), extend_weight(f, &pi, rho)?);
                bw.add_term(rho.clone(), solver.g_pair(&pi, rho));
            }
            forward.insert(pi.clone(), fw);
            backward.insert(pi, bw);
        }
    }
    let dual_weight = solver.memo.into_iter().collect();
    Ok(DeconcatBasis { max_order, forward, backward, dual_weight })
}

impl DeconcatBasis {
    pub fn q_to_m(&self, terms: &LinComb<Diagram>) -> LinComb<Diagram> {
        terms.map_linear(|d| self.forward[d].clone())
    }

    pub fn m_to_q(&self, terms: &LinComb<Diagram>) -> LinComb<Diagram> {
        terms.map_linear(|d| self.backward[d].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};
    use crate::parqsym::{eta_q_to_m, m_to_eta_q};

    #[test]
    fn extended_weight_examples() {
        let two = WeightFunction::constant(int(2));
        let t = Diagram::dot().tensor(&Diagram::bar());
        let b = Diagram::dot().bullet(&Diagram::bar());
        assert_eq!(extend_weight(&two, &t, &t).unwrap(), int(4));
        assert_eq!(extend_weight(&two, &t, &b).unwrap(), int(2));
        assert!(matches!(extend_weight(&two, &b, &t), Err(Error::NotRefining(_, _))));
        assert_eq!(extend_weight(&two, &Diagram::empty(), &Diagram::empty()).unwrap(), int(1));
    }

    #[test]
    fn constant_two_gives_eta() {
        let q = QParam::one();
        let tables = deconcat_basis_pair(&WeightFunction::constant(int(2)), 2).unwrap();
        for (d, fw) in &tables.forward {
            assert_eq!(*fw, eta_q_to_m(d, &q));
            assert_eq!(tables.backward[d], m_to_eta_q(d, &q));
        }
        assert_eq!(tables.dual_weight[&Diagram::dot()], frac(1, 2));
    }

    #[test]
    fn singular_weight_rejected() {
        let f = WeightFunction::new(|d: &Diagram| if *d == Diagram::bar() { int(0) } else { int(1) });
        assert!(matches!(deconcat_basis_pair(&f, 2), Err(Error::SingularWeight(_))));
    }
}
