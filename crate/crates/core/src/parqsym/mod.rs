//! `ParQSym`: the graded dual of `ParSym`. The `M` basis has the quasi-shuffle
//! product and the deconcatenation coproduct over `⊗`-irreducible factors.

mod antipode;
mod bases;
mod deconcat;

pub use antipode::{antipode_inverse_m_explicit, antipode_m_explicit};
pub use bases::{
    comul_l, eta_q_to_l, eta_q_to_m, l_to_eta_q, l_to_m, m_to_eta_q, m_to_l, mul_eta, mul_eta_q, mul_l,
};
pub use deconcat::{deconcat_basis_pair, extend_weight, pieces_along, DeconcatBasis, WeightFunction};

use num_traits::{One, Zero};

use crate::algebra::bialgebra::{self, GradedBialgebra};
use crate::algebra::{Basis, Element, LinComb, QParam, Scalar, Space, Tensor2};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// `ParQSym` on the `M` basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParQSymM;

impl GradedBialgebra for ParQSymM {
    type Key = Diagram;

    fn grade(&self, key: &Diagram) -> usize {
        key.order()
    }

    fn unit(&self) -> Diagram {
        Diagram::empty()
    }

    fn product(&self, a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
        mul_m(a, b)
    }

    fn coproduct(&self, a: &Diagram) -> LinComb<(Diagram, Diagram)> {
        comul_m(a)
    }
}

pub(crate) fn tensor_all<'a, I: IntoIterator<Item = &'a Diagram>>(parts: I) -> Diagram {
    parts.into_iter().fold(Diagram::empty(), |acc, d| acc.tensor(d))
}

/// Deconcatenation: one term per split of the `⊗`-factor sequence.
pub fn comul_m(d: &Diagram) -> LinComb<(Diagram, Diagram)> {
    let factors = d.tensor_factors();
    (0..=factors.len())
        .map(|i| ((tensor_all(&factors[..i]), tensor_all(&factors[i..])), Scalar::one()))
        .collect()
}

fn quasi_shuffle(rho: &[Diagram], sigma: &[Diagram], prefix: Diagram, out: &mut LinComb<Diagram>) {
    match (rho.split_first(), sigma.split_first()) {
        (None, None) => out.add_term(prefix, Scalar::one()),
        (Some((r, rs)), None) => out.add_term(prefix.tensor(&tensor_all(std::iter::once(r).chain(rs))), Scalar::one()),
        (None, Some((s, ss))) => out.add_term(prefix.tensor(&tensor_all(std::iter::once(s).chain(ss))), Scalar::one()),
        (Some((r, rs)), Some((s, ss))) => {
            quasi_shuffle(rs, sigma, prefix.tensor(r), out);
            quasi_shuffle(rho, ss, prefix.tensor(s), out);
            quasi_shuffle(rs, ss, prefix.tensor(&r.bullet(s)), out);
        }
    }
}

/// The quasi-shuffle product `M_ρ ⋆ M_σ`: padded pairs of factor sequences,
/// columns joined by `•` and then by `⊗`.
pub fn mul_m(a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
    let mut out = LinComb::zero();
    quasi_shuffle(&a.tensor_factors(), &b.tensor_factors(), Diagram::empty(), &mut out);
    out
}

fn require_parqsym(x: &Element<Diagram>) -> Result<()> {
    if x.space != Space::ParQSym {
        return Err(Error::MetadataMismatch(format!("expected parqsym, got {}", x.space)));
    }
    Ok(())
}

fn q_of(basis: Basis, q: Option<&QParam>) -> Result<&QParam> {
    q.ok_or_else(|| Error::MissingQ(basis.to_string()))
}

/// Expands a combination given in `basis` into the `M` basis.
pub fn terms_to_m(terms: &LinComb<Diagram>, basis: Basis, q: Option<&QParam>) -> Result<LinComb<Diagram>> {
    Ok(match basis {
        Basis::M => terms.clone(),
        Basis::L => terms.map_linear(l_to_m),
        Basis::ETA | Basis::ETAQ => {
            let q = if basis == Basis::ETA { QParam::one() } else { q_of(basis, q)?.clone() };
            terms.map_linear(|d| eta_q_to_m(d, &q))
        }
        other => {
            return Err(Error::IllegalBasis { space: "parqsym".into(), basis: other.to_string() })
        }
    })
}

/// Rewrites an `M`-basis combination in `basis`.
pub fn terms_from_m(terms: &LinComb<Diagram>, basis: Basis, q: Option<&QParam>) -> Result<LinComb<Diagram>> {
    Ok(match basis {
        Basis::M => terms.clone(),
        Basis::L => terms.map_linear(m_to_l),
        Basis::ETA | Basis::ETAQ => {
            let q = if basis == Basis::ETA { QParam::one() } else { q_of(basis, q)?.clone() };
            terms.map_linear(|d| m_to_eta_q(d, &q))
        }
        other => {
            return Err(Error::IllegalBasis { space: "parqsym".into(), basis: other.to_string() })
        }
    })
}

pub fn to_m(x: &Element<Diagram>) -> Result<LinComb<Diagram>> {
    require_parqsym(x)?;
    terms_to_m(&x.terms, x.basis, x.q.as_ref())
}

/// Converts between `M`, `L`, `η` and `η^(q)`; `L ↔ η^(q)` uses the direct formulas.
pub fn convert(x: &Element<Diagram>, basis: Basis, q: Option<QParam>) -> Result<Element<Diagram>> {
    require_parqsym(x)?;
    let target = Element::<Diagram>::new(Space::ParQSym, basis, q, LinComb::zero())?;
    if x.basis == target.basis && x.q == target.q {
        return Ok(x.clone());
    }
    let terms = match (x.basis, target.basis) {
        (Basis::L, Basis::ETAQ) => {
            let q = target.q.as_ref().expect("ETAQ carries q");
            x.terms.map_linear(|d| l_to_eta_q(d, q))
        }
        (Basis::ETAQ, Basis::L) => {
            let q = x.q.as_ref().expect("ETAQ carries q");
            x.terms.map_linear(|d| eta_q_to_l(d, q))
        }
        _ => terms_from_m(&to_m(x)?, target.basis, target.q.as_ref())?,
    };
    Ok(target.with_terms(terms))
}

fn from_m_like(x: &Element<Diagram>, terms: &LinComb<Diagram>) -> Result<Element<Diagram>> {
    Ok(x.with_terms(terms_from_m(terms, x.basis, x.q.as_ref())?))
}

pub fn product(x: &Element<Diagram>, y: &Element<Diagram>) -> Result<Element<Diagram>> {
    x.same_meta(y)?;
    let p = bialgebra::mul(&ParQSymM, &to_m(x)?, &to_m(y)?);
    from_m_like(x, &p)
}

pub fn coproduct(x: &Element<Diagram>) -> Result<Tensor2<Diagram>> {
    let d = bialgebra::comul(&ParQSymM, &to_m(x)?);
    let q = x.q.as_ref();
    let terms = d.map_linear(|(a, b)| {
        let left = terms_from_m(&LinComb::basis(a.clone()), x.basis, q).expect("basis checked");
        let right = terms_from_m(&LinComb::basis(b.clone()), x.basis, q).expect("basis checked");
        left.tensor(&right)
    });
    Ok(x.with_terms(terms))
}

pub fn antipode(x: &Element<Diagram>) -> Result<Element<Diagram>> {
    let s = bialgebra::takeuchi_antipode(&ParQSymM, &to_m(x)?)?;
    from_m_like(x, &s)
}

pub fn counit(x: &Element<Diagram>) -> Result<Scalar> {
    Ok(bialgebra::counit(&ParQSymM, &to_m(x)?))
}

/// `ζ(M_π) = 1` when `π` is `⊗`-irreducible (including `∅`), else 0.
pub fn zeta_key(d: &Diagram) -> Scalar {
    if d.length() <= 1 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn zeta(x: &Element<Diagram>) -> Result<Scalar> {
    Ok(to_m(x)?.eval(zeta_key))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn dot() -> Diagram {
        Diagram::dot()
    }

    fn bar() -> Diagram {
        Diagram::bar()
    }

    fn e1() -> Diagram {
        "[[1],[2],[4],[3,-1,-2],[-3,-4]]".parse().unwrap()
    }

    #[test]
    fn deconcatenation() {
        let e = Diagram::empty();
        let t = dot().tensor(&bar());
        let c = comul_m(&t);
        assert_eq!(c.len(), 3);
        assert_eq!(c.coeff(&(dot(), bar())), int(1));
        assert_eq!(comul_m(&e1()).len(), 2);
        assert_eq!(comul_m(&e), LinComb::basis((e.clone(), e)));
    }

    #[test]
    fn quasi_shuffle_examples() {
        let mut expected = LinComb::basis(dot().tensor(&bar()));
        expected.add_term(bar().tensor(&dot()), int(1));
        expected.add_term(dot().bullet(&bar()), int(1));
        assert_eq!(mul_m(&dot(), &bar()), expected);

        let mut expected = LinComb::term(dot().tensor(&dot()), int(2));
        expected.add_term(dot().bullet(&dot()), int(1));
        assert_eq!(mul_m(&dot(), &dot()), expected);

        assert_eq!(mul_m(&Diagram::empty(), &e1()), LinComb::basis(e1()));
    }

    #[test]
    fn takeuchi_examples() {
        let t = dot().tensor(&bar());
        let s = bialgebra::takeuchi_antipode(&ParQSymM, &LinComb::basis(t)).unwrap();
        let mut expected = LinComb::basis(bar().tensor(&dot()));
        expected.add_term(dot().bullet(&bar()), int(1));
        assert_eq!(s, expected);
        let red = bialgebra::reduced_coproduct(&ParQSymM, &LinComb::basis(dot().tensor(&bar())));
        assert_eq!(red, LinComb::basis((dot(), bar())));
        assert!(bialgebra::reduced_coproduct(&ParQSymM, &LinComb::basis(dot())).is_zero());
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_key(&dot().bullet(&bar())), int(1));
        assert_eq!(zeta_key(&dot().tensor(&bar())), int(0));
        assert_eq!(zeta_key(&Diagram::empty()), int(1));
    }

    #[test]
    fn wrapper_examples() {
        let l = |d: Diagram| Element::basis_element(Space::ParQSym, Basis::L, None, d).unwrap();
        let p = product(&l(dot()), &l(bar())).unwrap();
        let mut expected = LinComb::basis(dot().bullet(&bar()));
        expected.add_term(bar().tensor(&dot()), int(1));
        assert_eq!(p.terms, expected);
        assert_eq!(counit(&l(Diagram::empty())).unwrap(), int(1));
        assert_eq!(counit(&l(dot())).unwrap(), int(0));

        let eta = Element::basis_element(Space::ParQSym, Basis::ETA, None, dot().tensor(&bar())).unwrap();
        let c = coproduct(&eta).unwrap();
        assert_eq!(c.terms.len(), 3);
        assert_eq!(c.terms.coeff(&(dot(), bar())), int(1));
    }
}
