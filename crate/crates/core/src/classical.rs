//! `QSym` on the monomial basis, `NSym` on the complete basis and the shuffle
//! algebra `Sh`, all keyed by compositions.

use num_traits::{One, Zero};

use crate::algebra::bialgebra::{self, GradedBialgebra};
use crate::algebra::scalar::{int, sign};
use crate::algebra::{Element, LinComb, Scalar, Space, Tensor2};
use crate::composition::Composition;
use crate::error::{Error, Result};

fn comp(parts: Vec<usize>) -> Composition {
    Composition::new_unchecked(parts)
}

fn deconcatenate(a: &Composition) -> LinComb<(Composition, Composition)> {
    let p = a.parts();
    (0..=p.len()).map(|i| ((comp(p[..i].to_vec()), comp(p[i..].to_vec())), Scalar::one())).collect()
}

fn shuffle_into(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, overlap: bool, out: &mut LinComb<Composition>) {
    match (a.split_first(), b.split_first()) {
        (None, None) => out.add_term(comp(prefix.clone()), Scalar::one()),
        (Some(_), None) | (None, Some(_)) => {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.add_term(comp(w), Scalar::one());
        }
        (Some((&x, xs)), Some((&y, ys))) => {
            prefix.push(x);
            shuffle_into(xs, b, prefix, overlap, out);
            prefix.pop();
            prefix.push(y);
            shuffle_into(a, ys, prefix, overlap, out);
            prefix.pop();
            if overlap {
                prefix.push(x + y);
                shuffle_into(xs, ys, prefix, overlap, out);
                prefix.pop();
            }
        }
    }
}

/// Quasi-shuffle (overlapping shuffle) of compositions.
pub fn qsym_mul(a: &Composition, b: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    shuffle_into(a.parts(), b.parts(), &mut Vec::new(), true, &mut out);
    out
}

pub fn qsym_comul(a: &Composition) -> LinComb<(Composition, Composition)> {
    deconcatenate(a)
}

pub fn nsym_mul(a: &Composition, b: &Composition) -> LinComb<Composition> {
    LinComb::basis(a.concat(b))
}

/// `ΔH_n = Σ_{i+j=n} H_i ⊗ H_j`, extended multiplicatively.
pub fn nsym_comul(a: &Composition) -> LinComb<(Composition, Composition)> {
    let mut acc = LinComb::basis((Composition::empty(), Composition::empty()));
    for &n in a.parts() {
        let part: LinComb<(Composition, Composition)> = (0..=n)
            .map(|i| {
                let left = if i == 0 { comp(vec![]) } else { comp(vec![i]) };
                let right = if i == n { comp(vec![]) } else { comp(vec![n - i]) };
                ((left, right), Scalar::one())
            })
            .collect();
        acc = bialgebra::mul_tensor2(&NSymH, &acc, &part);
    }
    acc
}

/// Plain shuffle of compositions as words.
pub fn sh_mul(a: &Composition, b: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    shuffle_into(a.parts(), b.parts(), &mut Vec::new(), false, &mut out);
    out
}

pub fn sh_comul(a: &Composition) -> LinComb<(Composition, Composition)> {
    deconcatenate(a)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct QSymM;

#[derive(Clone, Copy, Debug, Default)]
pub struct NSymH;

#[derive(Clone, Copy, Debug, Default)]
pub struct ShX;

macro_rules! composition_bialgebra {
    ($ty:ty, $mul:path, $comul:path) => {
        impl GradedBialgebra for $ty {
            type Key = Composition;

            fn grade(&self, key: &Composition) -> usize {
                key.size()
            }

            fn unit(&self) -> Composition {
                Composition::empty()
            }

            fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
                $mul(a, b)
            }

            fn coproduct(&self, a: &Composition) -> LinComb<(Composition, Composition)> {
                $comul(a)
            }
        }
    };
}

composition_bialgebra!(QSymM, qsym_mul, qsym_comul);
composition_bialgebra!(NSymH, nsym_mul, nsym_comul);
composition_bialgebra!(ShX, sh_mul, sh_comul);

/// `ζ_QSym(M_α) = 1` for `α = ()` or `α = (n)`.
pub fn zeta_qsym_key(a: &Composition) -> Scalar {
    if a.len() <= 1 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `η(M_α) = (−1)^{l(α)−1} lp(α)`, and `η(M_()) = 0`.
pub fn eta_char_key(a: &Composition) -> Scalar {
    if a.is_empty() {
        return Scalar::zero();
    }
    sign(a.len() as i64 - 1) * int(a.lp() as i64)
}

/// `ξ_s(x_α) = 1` when `l(α) = 1`.
pub fn xi_s_key(a: &Composition) -> Scalar {
    if a.len() == 1 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn require(x: &Element<Composition>, space: Space) -> Result<()> {
    if x.space != space {
        return Err(Error::MetadataMismatch(format!("expected {space}, got {}", x.space)));
    }
    Ok(())
}

pub fn zeta_qsym(x: &Element<Composition>) -> Result<Scalar> {
    require(x, Space::QSym)?;
    Ok(x.terms.eval(zeta_qsym_key))
}

pub fn eta_char(x: &Element<Composition>) -> Result<Scalar> {
    require(x, Space::QSym)?;
    Ok(x.terms.eval(eta_char_key))
}

pub fn xi_s(x: &Element<Composition>) -> Result<Scalar> {
    require(x, Space::Sh)?;
    Ok(x.terms.eval(xi_s_key))
}

fn with_handle<T>(
    space: Space,
    qsym: impl FnOnce(&QSymM) -> T,
    nsym: impl FnOnce(&NSymH) -> T,
    sh: impl FnOnce(&ShX) -> T,
) -> Result<T> {
    match space {
        Space::QSym => Ok(qsym(&QSymM)),
        Space::NSym => Ok(nsym(&NSymH)),
        Space::Sh => Ok(sh(&ShX)),
        other => Err(Error::MetadataMismatch(format!("{other} is not keyed by compositions"))),
    }
}

pub fn product(x: &Element<Composition>, y: &Element<Composition>) -> Result<Element<Composition>> {
    x.same_meta(y)?;
    let (a, b) = (&x.terms, &y.terms);
    let terms = with_handle(
        x.space,
        |h| bialgebra::mul(h, a, b),
        |h| bialgebra::mul(h, a, b),
        |h| bialgebra::mul(h, a, b),
    )?;
    Ok(x.with_terms(terms))
}

pub fn coproduct(x: &Element<Composition>) -> Result<Tensor2<Composition>> {
    let a = &x.terms;
    let terms = with_handle(x.space, |h| bialgebra::comul(h, a), |h| bialgebra::comul(h, a), |h| bialgebra::comul(h, a))?;
    Ok(x.with_terms(terms))
}

pub fn antipode(x: &Element<Composition>) -> Result<Element<Composition>> {
    let a = &x.terms;
    let terms = with_handle(
        x.space,
        |h| bialgebra::takeuchi_antipode(h, a),
        |h| bialgebra::takeuchi_antipode(h, a),
        |h| bialgebra::takeuchi_antipode(h, a),
    )??;
    Ok(x.with_terms(terms))
}

pub fn counit(x: &Element<Composition>) -> Result<Scalar> {
    with_handle(x.space, |_| (), |_| (), |_| ())?;
    Ok(x.terms.coeff(&Composition::empty()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn qsym_examples() {
        let mut expected = LinComb::term(c(&[1, 1]), int(2));
        expected.add_term(c(&[2]), int(1));
        assert_eq!(qsym_mul(&c(&[1]), &c(&[1])), expected);
        assert_eq!(qsym_comul(&c(&[2, 1])).len(), 3);
        assert_eq!(qsym_mul(&c(&[]), &c(&[2, 1])), LinComb::basis(c(&[2, 1])));
    }

    #[test]
    fn nsym_examples() {
        assert_eq!(nsym_mul(&c(&[2]), &c(&[1])), LinComb::basis(c(&[2, 1])));
        let d = nsym_comul(&c(&[2]));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(c(&[1]), c(&[1]))), int(1));
        assert_eq!(nsym_comul(&c(&[])), LinComb::basis((c(&[]), c(&[]))));
    }

    #[test]
    fn sh_examples() {
        let mut expected = LinComb::basis(c(&[1, 2]));
        expected.add_term(c(&[2, 1]), int(1));
        assert_eq!(sh_mul(&c(&[1]), &c(&[2])), expected);
        assert_eq!(sh_comul(&c(&[1, 2])).len(), 3);
        let mut x = LinComb::basis(c(&[3]));
        x.add_term(c(&[1, 2]), int(-1));
        assert_eq!(x.eval(xi_s_key), int(1));
    }

    #[test]
    fn characters() {
        assert_eq!(zeta_qsym_key(&c(&[3])), int(1));
        assert_eq!(eta_char_key(&c(&[1, 1])), int(-1));
        assert_eq!(eta_char_key(&c(&[])), int(0));
    }

    #[test]
    fn antipodes() {
        for n in 0..4 {
            for a in Composition::all_of_size(n) {
                bialgebra::check_key_axioms(&QSymM, &a).unwrap();
                bialgebra::check_key_axioms(&NSymH, &a).unwrap();
                bialgebra::check_key_axioms(&ShX, &a).unwrap();
            }
        }
    }
}
