//! The pairing `⟨ParQSym, ParSym⟩` and the maps `Ψ_PQ`, `Φ`, `Φ_PS`, `η_ParQSym`.

use num_traits::Zero;

use crate::algebra::scalar::{int, sign};
use crate::algebra::{Basis, Element, LinComb, Scalar, Space};
use crate::classical;
use crate::composition::Composition;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::{parqsym, parsym};

/// `⟨M_ρ, H_π⟩ = δ_{ρ,π}` on raw combinations.
pub fn pair_mh(m: &LinComb<Diagram>, h: &LinComb<Diagram>) -> Scalar {
    let (small, large) = if m.len() <= h.len() { (m, h) } else { (h, m) };
    small.eval(|k| large.coeff(k))
}

/// The pairing extended to tensor squares.
pub fn pair_mh2(m: &LinComb<(Diagram, Diagram)>, h: &LinComb<(Diagram, Diagram)>) -> Scalar {
    let (small, large) = if m.len() <= h.len() { (m, h) } else { (h, m) };
    small.eval(|k| large.coeff(k))
}

pub fn pair(x: &Element<Diagram>, y: &Element<Diagram>) -> Result<Scalar> {
    if x.space != Space::ParQSym || y.space != Space::ParSym {
        return Err(Error::MetadataMismatch(format!(
            "pairing takes (parqsym, parsym), got ({}, {})",
            x.space, y.space
        )));
    }
    if let (Some(a), Some(b)) = (&x.q, &y.q) {
        if a != b {
            return Err(Error::MetadataMismatch(format!("q = {a} vs q = {b}")));
        }
    }
    Ok(pair_mh(&parqsym::to_m(x)?, &parsym::to_h(y)?))
}

/// `Ψ_PQ(M_ρ) = M_{α_ρ}`
pub fn psi_pq_terms(m: &LinComb<Diagram>) -> LinComb<Composition> {
    m.map_keys(Diagram::alpha_of)
}

pub fn psi_pq(x: &Element<Diagram>) -> Result<Element<Composition>> {
    let m = parqsym::to_m(x)?;
    Element::new(Space::QSym, Basis::Natural, None, psi_pq_terms(&m))
}

/// `Φ(H_α) = H_{π_α}`
pub fn phi_terms(h: &LinComb<Composition>) -> LinComb<Diagram> {
    h.map_keys(Diagram::pi_of_composition)
}

pub fn phi(x: &Element<Composition>) -> Result<Element<Diagram>> {
    if x.space != Space::NSym {
        return Err(Error::MetadataMismatch(format!("phi takes nsym, got {}", x.space)));
    }
    Element::new(Space::ParSym, Basis::H, None, phi_terms(&x.terms))
}

/// `Φ_PS(M_ρ) = Σ_{α_ρ≤β} (−1)^{l(α_ρ)−l(β)} Π_i lp(α_ρ^(i)) x_β`
pub fn phi_ps_key(d: &Diagram) -> LinComb<Composition> {
    let alpha = d.alpha_of();
    alpha
        .coarsenings()
        .into_iter()
        .map(|beta| {
            let pieces = alpha.split_along(&beta).expect("coarsening");
            let weight: Scalar = pieces.iter().map(|p| int(p.lp() as i64)).product();
            let c = sign(alpha.len() as i64 - beta.len() as i64) * weight;
            (beta, c)
        })
        .collect()
}

pub fn phi_ps_terms(m: &LinComb<Diagram>) -> LinComb<Composition> {
    m.map_linear(phi_ps_key)
}

pub fn phi_ps(x: &Element<Diagram>) -> Result<Element<Composition>> {
    let m = parqsym::to_m(x)?;
    Element::new(Space::Sh, Basis::Natural, None, phi_ps_terms(&m))
}

/// `η_ParQSym = η ∘ Ψ_PQ` on a basis key.
pub fn eta_parqsym_key(d: &Diagram) -> Scalar {
    if d.is_empty() {
        return Scalar::zero();
    }
    classical::eta_char_key(&d.alpha_of())
}

pub fn eta_parqsym(x: &Element<Diagram>) -> Result<Scalar> {
    Ok(parqsym::to_m(x)?.eval(eta_parqsym_key))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QParam;

    fn dot() -> Diagram {
        Diagram::dot()
    }

    fn bar() -> Diagram {
        Diagram::bar()
    }

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn e1() -> Diagram {
        "[[1],[2],[4],[3,-1,-2],[-3,-4]]".parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        let m = Element::basis_element(Space::ParQSym, Basis::M, None, e1()).unwrap();
        let h = Element::basis_element(Space::ParSym, Basis::H, None, e1()).unwrap();
        assert_eq!(pair(&m, &h).unwrap(), int(1));
        let l = Element::basis_element(Space::ParQSym, Basis::L, None, dot().tensor(&bar())).unwrap();
        let r = Element::basis_element(Space::ParSym, Basis::R, None, dot().bullet(&bar())).unwrap();
        assert_eq!(pair(&l, &r).unwrap(), int(0));
        let q = Some(QParam::new(int(2)).unwrap());
        let eta = Element::basis_element(Space::ParQSym, Basis::ETAQ, q.clone(), dot()).unwrap();
        let kappa = Element::basis_element(Space::ParSym, Basis::KQ, q, dot()).unwrap();
        assert_eq!(pair(&eta, &kappa).unwrap(), int(1));
        assert!(pair(&h, &m).is_err());
    }

    #[test]
    fn psi_and_phi() {
        assert_eq!(psi_pq_terms(&LinComb::basis(dot().bullet(&bar()))), LinComb::basis(c(&[2])));
        assert_eq!(psi_pq_terms(&LinComb::basis(dot().tensor(&bar()))), LinComb::basis(c(&[1, 1])));
        assert_eq!(psi_pq_terms(&LinComb::basis(Diagram::empty())), LinComb::basis(c(&[])));
        let two: Diagram = "[[1],[2],[-1,-2]]".parse().unwrap();
        assert_eq!(phi_terms(&LinComb::basis(c(&[2]))), LinComb::basis(two.clone()));
        assert_eq!(phi_terms(&LinComb::basis(c(&[2, 1]))), LinComb::basis(two.tensor(&dot())));
        assert_eq!(phi_terms(&LinComb::basis(c(&[]))), LinComb::basis(Diagram::empty()));
    }

    #[test]
    fn phi_ps_examples() {
        assert_eq!(phi_ps_key(&dot()), LinComb::basis(c(&[1])));
        let mut expected = LinComb::basis(c(&[1, 1]));
        expected.add_term(c(&[2]), int(-1));
        assert_eq!(phi_ps_key(&dot().tensor(&bar())), expected);
        assert_eq!(phi_ps_key(&Diagram::empty()), LinComb::basis(c(&[])));
        assert_eq!(phi_ps_key(&dot().bullet(&bar())), LinComb::term(c(&[2]), int(2)));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_parqsym_key(&dot().tensor(&bar())), int(-1));
        assert_eq!(eta_parqsym_key(&e1()), int(4));
        assert_eq!(eta_parqsym_key(&Diagram::empty()), int(0));
    }
}
