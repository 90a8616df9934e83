//! `ParSym`: the `H` basis with `H_ρ H_σ = H_{ρ⊗σ}` and the bullet-cut coproduct,
//! plus the `R` and `κ^(q)` bases.

use std::collections::BTreeSet;

use num_traits::One;

use crate::algebra::bialgebra::{self, GradedBialgebra};
use crate::algebra::scalar::{pow, sign, Scalar};
use crate::algebra::{Basis, Element, LinComb, QParam, Space, Tensor2};
use crate::composition::Composition;
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// `ParSym` on the `H` basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParSymH;

impl GradedBialgebra for ParSymH {
    type Key = Diagram;

    fn grade(&self, key: &Diagram) -> usize {
        key.order()
    }

    fn unit(&self) -> Diagram {
        Diagram::empty()
    }

    fn product(&self, a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
        mul_h(a, b)
    }

    fn coproduct(&self, a: &Diagram) -> LinComb<(Diagram, Diagram)> {
        comul_h(a)
    }
}

pub fn mul_h(a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
    LinComb::basis(a.tensor(b))
}

fn comul_irreducible(sigma: &Diagram) -> LinComb<(Diagram, Diagram)> {
    let mut out = LinComb::zero();
    out.add_term((Diagram::empty(), sigma.clone()), Scalar::one());
    out.add_term((sigma.clone(), Diagram::empty()), Scalar::one());
    for cut in sigma.bullet_cuts() {
        let pair = sigma.bullet_split(cut).expect("cut comes from bullet_cuts");
        out.add_term(pair, Scalar::one());
    }
    out
}

/// `ΔH_π = ΔH_{π₁} ⋯ ΔH_{π_l}` over the `⊗`-irreducible factors.
pub fn comul_h(d: &Diagram) -> LinComb<(Diagram, Diagram)> {
    let mut acc = LinComb::basis((Diagram::empty(), Diagram::empty()));
    for factor in d.tensor_factors() {
        acc = bialgebra::mul_tensor2(&ParSymH, &acc, &comul_irreducible(&factor));
    }
    acc
}

/// `R_π R_σ = R_{π⊗σ} + R_{π•σ}`, with `R_∅` the unit.
pub fn mul_r(a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
    if a.is_empty() || b.is_empty() {
        return LinComb::basis(a.tensor(b));
    }
    let mut out = LinComb::basis(a.tensor(b));
    out.add_term(a.bullet(b), Scalar::one());
    out
}

/// `κ_π κ_ρ = κ_{π⊗ρ}`
pub fn mul_kappa(a: &Diagram, b: &Diagram, _q: &QParam) -> LinComb<Diagram> {
    LinComb::basis(a.tensor(b))
}

fn length_diff(a: &Diagram, b: &Diagram) -> i64 {
    a.length() as i64 - b.length() as i64
}

/// `R_π = Σ_{π≤σ} (−1)^{l(σ)−l(π)} H_σ`
pub fn r_to_h(d: &Diagram) -> LinComb<Diagram> {
    d.coarsenings().into_iter().map(|s| {
        let c = sign(length_diff(&s, d));
        (s, c)
    }).collect()
}

/// `H_π = Σ_{π≤σ} R_σ`
pub fn h_to_r(d: &Diagram) -> LinComb<Diagram> {
    d.coarsenings().into_iter().map(|s| (s, Scalar::one())).collect()
}

/// `κ_π = Σ_{σ≤π} (−1)^{l(σ)−l(π)} r^{−l(σ)} H_σ`
pub fn kappa_to_h(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    let r = q.r();
    d.refinements()
        .into_iter()
        .map(|s| {
            let c = sign(length_diff(&s, d)) * pow(&r, -(s.length() as i64));
            (s, c)
        })
        .collect()
}

/// `H_π = r^{l(π)} Σ_{σ≤π} κ_σ`
pub fn h_to_kappa(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    let c = pow(&q.r(), d.length() as i64);
    d.refinements().into_iter().map(|s| (s, c.clone())).collect()
}

/// `R_π = r Σ_{π∼ρ} (−1)^{|S(ρ)∖S(π)|+l(ρ)−l(π)} q^{|S(ρ)∩S(π)|} κ_ρ`
pub fn r_to_kappa(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    if d.is_empty() {
        return LinComb::basis(Diagram::empty());
    }
    let sp = d.s_set();
    d.similar_class()
        .into_iter()
        .map(|rho| {
            let sr = rho.s_set();
            let e = sr.difference(&sp).count() as i64 + length_diff(&rho, d);
            let c = q.r() * sign(e) * pow(q.q(), sr.intersection(&sp).count() as i64);
            (rho, c)
        })
        .collect()
}

/// `κ_π = r^{−n} Σ_{π∼ρ} (−1)^{|S(π)∖S(ρ)|+l(ρ)−l(π)} q^{|[n−1]∖(S(ρ)∪S(π))|} R_ρ`
pub fn kappa_to_r(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    if d.is_empty() {
        return LinComb::basis(Diagram::empty());
    }
    let n = d.atom_count();
    let sp = d.s_set();
    d.similar_class()
        .into_iter()
        .map(|rho| {
            let sr = rho.s_set();
            let e = sp.difference(&sr).count() as i64 + length_diff(&rho, d);
            let union: BTreeSet<usize> = sr.union(&sp).copied().collect();
            let free = (n - 1 - union.len()) as i64;
            let c = pow(&q.r(), -(n as i64)) * sign(e) * pow(q.q(), free);
            (rho, c)
        })
        .collect()
}

/// `Δκ_{π(n)}` from the closed formula over composition pairs, in the `κ` basis.
pub fn comul_kappa_line(n: usize, q: &QParam) -> LinComb<(Diagram, Diagram)> {
    if n == 0 {
        return LinComb::basis((Diagram::empty(), Diagram::empty()));
    }
    let mut out = LinComb::zero();
    let minus_q = -q.q().clone();
    let q_minus_one = q.q() - Scalar::one();
    for i in 0..=n {
        for beta in Composition::all_of_size(i) {
            for gamma in Composition::all_of_size(n - i) {
                let (lb, lg) = (beta.len() as i64, gamma.len() as i64);
                if (lb - lg).abs() > 1 {
                    continue;
                }
                let mut c = pow(&minus_q, lb.max(lg) - 1);
                if lb == lg {
                    c *= &q_minus_one;
                }
                out.add_term((Diagram::pi_of_composition(&beta), Diagram::pi_of_composition(&gamma)), c);
            }
        }
    }
    out
}

fn require_parsym(x: &Element<Diagram>) -> Result<()> {
    if x.space != Space::ParSym {
        return Err(Error::MetadataMismatch(format!("expected parsym, got {}", x.space)));
    }
    Ok(())
}

fn q_of(basis: Basis, q: Option<&QParam>) -> Result<&QParam> {
    q.ok_or_else(|| Error::MissingQ(basis.to_string()))
}

/// Expands a combination given in `basis` into the `H` basis.
pub fn terms_to_h(terms: &LinComb<Diagram>, basis: Basis, q: Option<&QParam>) -> Result<LinComb<Diagram>> {
    Ok(match basis {
        Basis::H => terms.clone(),
        Basis::R => terms.map_linear(r_to_h),
        Basis::KQ => {
            let q = q_of(basis, q)?;
            terms.map_linear(|d| kappa_to_h(d, q))
        }
        other => {
            return Err(Error::IllegalBasis { space: "parsym".into(), basis: other.to_string() })
        }
    })
}

/// Rewrites an `H`-basis combination in `basis`.
pub fn terms_from_h(terms: &LinComb<Diagram>, basis: Basis, q: Option<&QParam>) -> Result<LinComb<Diagram>> {
    Ok(match basis {
        Basis::H => terms.clone(),
        Basis::R => terms.map_linear(h_to_r),
        Basis::KQ => {
            let q = q_of(basis, q)?;
            terms.map_linear(|d| h_to_kappa(d, q))
        }
        other => {
            return Err(Error::IllegalBasis { space: "parsym".into(), basis: other.to_string() })
        }
    })
}

pub fn to_h(x: &Element<Diagram>) -> Result<LinComb<Diagram>> {
    require_parsym(x)?;
    terms_to_h(&x.terms, x.basis, x.q.as_ref())
}

/// Converts between `H`, `R` and `κ^(q)`.
pub fn convert(x: &Element<Diagram>, basis: Basis, q: Option<QParam>) -> Result<Element<Diagram>> {
    require_parsym(x)?;
    let target = Element::<Diagram>::new(Space::ParSym, basis, q, LinComb::zero())?;
    if x.basis == target.basis && x.q == target.q {
        return Ok(x.clone());
    }
    let terms = match (x.basis, target.basis) {
        (Basis::R, Basis::KQ) => {
            let q = target.q.as_ref().expect("KQ carries q");
            x.terms.map_linear(|d| r_to_kappa(d, q))
        }
        (Basis::KQ, Basis::R) => {
            let q = x.q.as_ref().expect("KQ carries q");
            x.terms.map_linear(|d| kappa_to_r(d, q))
        }
        _ => terms_from_h(&to_h(x)?, target.basis, target.q.as_ref())?,
    };
    Ok(target.with_terms(terms))
}

fn from_h_like(x: &Element<Diagram>, terms: &LinComb<Diagram>) -> Result<Element<Diagram>> {
    Ok(x.with_terms(terms_from_h(terms, x.basis, x.q.as_ref())?))
}

pub fn product(x: &Element<Diagram>, y: &Element<Diagram>) -> Result<Element<Diagram>> {
    x.same_meta(y)?;
    let p = bialgebra::mul(&ParSymH, &to_h(x)?, &to_h(y)?);
    from_h_like(x, &p)
}

pub fn coproduct(x: &Element<Diagram>) -> Result<Tensor2<Diagram>> {
    let d = bialgebra::comul(&ParSymH, &to_h(x)?);
    let q = x.q.as_ref();
    let terms = d.map_linear(|(a, b)| {
        let left = terms_from_h(&LinComb::basis(a.clone()), x.basis, q).expect("basis checked");
        let right = terms_from_h(&LinComb::basis(b.clone()), x.basis, q).expect("basis checked");
        left.tensor(&right)
    });
    Ok(x.with_terms(terms))
}

pub fn antipode(x: &Element<Diagram>) -> Result<Element<Diagram>> {
    let s = bialgebra::takeuchi_antipode(&ParSymH, &to_h(x)?)?;
    from_h_like(x, &s)
}

pub fn counit(x: &Element<Diagram>) -> Result<Scalar> {
    Ok(bialgebra::counit(&ParSymH, &to_h(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn dot() -> Diagram {
        Diagram::dot()
    }

    fn bar() -> Diagram {
        Diagram::bar()
    }

    fn e1() -> Diagram {
        d("[[1],[2],[4],[3,-1,-2],[-3,-4]]")
    }

    fn pair(a: &Diagram, b: &Diagram) -> (Diagram, Diagram) {
        (a.clone(), b.clone())
    }

    #[test]
    fn h_product() {
        assert_eq!(mul_h(&dot(), &bar()), LinComb::basis(dot().tensor(&bar())));
        assert_eq!(mul_h(&Diagram::empty(), &e1()), LinComb::basis(e1()));
    }

    #[test]
    fn h_coproduct_examples() {
        let e = Diagram::empty();
        let db = dot().bullet(&bar());
        let mut expected = LinComb::zero();
        expected.add_term(pair(&e, &db), int(1));
        expected.add_term(pair(&dot(), &bar()), int(1));
        expected.add_term(pair(&db, &e), int(1));
        assert_eq!(comul_h(&db), expected);

        let dd = dot().tensor(&dot());
        let mut expected = LinComb::zero();
        expected.add_term(pair(&e, &dd), int(1));
        expected.add_term(pair(&dot(), &dot()), int(2));
        expected.add_term(pair(&dd, &e), int(1));
        assert_eq!(comul_h(&dd), expected);

        assert_eq!(comul_h(&e1()).len(), 4);
        assert_eq!(comul_h(&e), LinComb::basis(pair(&e, &e)));
    }

    #[test]
    fn r_basis() {
        let t = dot().tensor(&bar());
        let b = dot().bullet(&bar());
        let mut expected = LinComb::basis(t.clone());
        expected.add_term(b.clone(), int(-1));
        assert_eq!(r_to_h(&t), expected);
        let mut expected = LinComb::basis(t.clone());
        expected.add_term(b.clone(), int(1));
        assert_eq!(h_to_r(&t), expected);
        assert_eq!(mul_r(&dot(), &bar()), expected);
    }

    #[test]
    fn kappa_basis() {
        let q = QParam::one();
        let b = dot().bullet(&bar());
        let mut expected = LinComb::term(b.clone(), frac(1, 2));
        expected.add_term(dot().tensor(&bar()), frac(-1, 4));
        assert_eq!(kappa_to_h(&b, &q), expected);
        let k = kappa_to_h(&dot(), &q).bilinear(&kappa_to_h(&bar(), &q), mul_h);
        assert_eq!(k, kappa_to_h(&dot().tensor(&bar()), &q));
    }

    #[test]
    fn kappa_line_small() {
        let q = QParam::new(int(2)).unwrap();
        let line = comul_kappa_line(1, &q);
        let mut expected = LinComb::zero();
        expected.add_term(pair(&Diagram::empty(), &dot()), int(1));
        expected.add_term(pair(&dot(), &Diagram::empty()), int(1));
        assert_eq!(line, expected);
    }

    #[test]
    fn takeuchi_examples() {
        let b = dot().bullet(&bar());
        let s = bialgebra::takeuchi_antipode(&ParSymH, &LinComb::basis(b.clone())).unwrap();
        let mut expected = LinComb::term(b, int(-1));
        expected.add_term(dot().tensor(&bar()), int(1));
        assert_eq!(s, expected);
        let s = bialgebra::takeuchi_antipode(&ParSymH, &LinComb::basis(dot())).unwrap();
        assert_eq!(s, LinComb::term(dot(), int(-1)));
    }

    #[test]
    fn element_wrappers() {
        let r = |x: Diagram| Element::basis_element(Space::ParSym, Basis::R, None, x).unwrap();
        let p = product(&r(dot()), &r(bar())).unwrap();
        assert_eq!(p.terms, mul_r(&dot(), &bar()));
        let h = Element::basis_element(Space::ParSym, Basis::H, None, e1()).unwrap();
        assert_eq!(counit(&h).unwrap(), int(0));
        let back = convert(&convert(&h, Basis::KQ, Some(QParam::one())).unwrap(), Basis::H, None).unwrap();
        assert_eq!(back, h);
    }
}
