//! Connected graded bialgebras given on a basis, and the operations every such
//! algebra gets for free: extended products, reduced coproducts and the antipode.

use num_traits::{One, Zero};

use super::lincomb::LinComb;
use super::scalar::{sign, Scalar};
use crate::error::{Error, Result};

/// A connected graded bialgebra with structure maps given on basis keys.
pub trait GradedBialgebra {
    type Key: Ord + Clone + std::fmt::Debug;

    fn grade(&self, key: &Self::Key) -> usize;
    fn unit(&self) -> Self::Key;
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
    fn coproduct(&self, a: &Self::Key) -> LinComb<(Self::Key, Self::Key)>;

    fn counit(&self, a: &Self::Key) -> Scalar {
        if *a == self.unit() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

type Pair<H> = (<H as GradedBialgebra>::Key, <H as GradedBialgebra>::Key);
type Triple<H> = (<H as GradedBialgebra>::Key, <H as GradedBialgebra>::Key, <H as GradedBialgebra>::Key);

pub fn mul<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>, y: &LinComb<H::Key>) -> LinComb<H::Key> {
    x.bilinear(y, |a, b| h.product(a, b))
}

pub fn comul<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>) -> LinComb<Pair<H>> {
    x.map_linear(|k| h.coproduct(k))
}

pub fn counit<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>) -> Scalar {
    x.eval(|k| h.counit(k))
}

pub fn unit<H: GradedBialgebra>(h: &H) -> LinComb<H::Key> {
    LinComb::basis(h.unit())
}

/// Product in `H ⊗ H`.
pub fn mul_tensor2<H: GradedBialgebra>(h: &H, x: &LinComb<Pair<H>>, y: &LinComb<Pair<H>>) -> LinComb<Pair<H>> {
    x.bilinear(y, |(a1, a2), (b1, b2)| h.product(a1, b1).tensor(&h.product(a2, b2)))
}

/// `k ↦ k − ε(k)·1`
fn project<H: GradedBialgebra>(h: &H, k: &H::Key) -> LinComb<H::Key> {
    let mut out = LinComb::basis(k.clone());
    let e = h.counit(k);
    out.add_term(h.unit(), -e);
    out
}

/// `(id − uε) ⊗ (id − uε)` applied to `Δx`.
pub fn reduced_coproduct<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>) -> LinComb<Pair<H>> {
    comul(h, x).map_linear(|(a, b)| project(h, a).tensor(&project(h, b)))
}

/// Multiplies out a word of keys.
fn mul_word<H: GradedBialgebra>(h: &H, word: &[H::Key]) -> LinComb<H::Key> {
    let mut acc = unit(h);
    for k in word {
        acc = acc.map_linear(|a| h.product(a, k));
    }
    acc
}

/// One more application of the reduced coproduct, on the last tensor factor.
fn extend_reduced<H: GradedBialgebra>(h: &H, words: &LinComb<Vec<H::Key>>) -> LinComb<Vec<H::Key>> {
    words.map_linear(|w| {
        let (last, init) = w.split_last().expect("words are non-empty");
        reduced_coproduct(h, &LinComb::basis(last.clone())).map_keys(|(a, b)| {
            let mut next = init.to_vec();
            next.push(a.clone());
            next.push(b.clone());
            next
        })
    })
}

/// The `n`-fold iterated reduced coproduct, as words of length `n + 1`.
pub fn iterated_reduced_coproduct<H: GradedBialgebra>(
    h: &H,
    x: &LinComb<H::Key>,
    n: usize,
) -> LinComb<Vec<H::Key>> {
    let mut words = x.map_linear(|k| project(h, k).map_keys(|a| vec![a.clone()]));
    for _ in 0..n {
        words = extend_reduced(h, &words);
    }
    words
}

/// `S(x) = Σ_{k≥0} (−1)^k m^{(k−1)} (id − uε)^{⊗k} Δ^{(k−1)} x`.
pub fn takeuchi_antipode<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>) -> Result<LinComb<H::Key>> {
    let bound = x.keys().map(|k| h.grade(k)).max().unwrap_or(0) + 1;
    let mut result = LinComb::term(h.unit(), counit(h, x));
    let mut words = iterated_reduced_coproduct(h, x, 0);
    let mut k = 1;
    while !words.is_zero() {
        if k > bound {
            return Err(Error::NonTerminating(bound));
        }
        let s = sign(k as i64);
        for (w, c) in &words {
            result.add_scaled(&mul_word(h, w), &(&s * c));
        }
        words = extend_reduced(h, &words);
        k += 1;
    }
    Ok(result)
}

/// Smallest `n` such that the `n`-fold iterated reduced coproduct vanishes;
/// here the 0-fold map is `id − uε`.
pub fn coradical_degree<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>) -> usize {
    let mut words = iterated_reduced_coproduct(h, x, 0);
    let mut n = 0;
    while !words.is_zero() {
        words = extend_reduced(h, &words);
        n += 1;
    }
    n
}

/// `(Δ⊗id)Δx` and `(id⊗Δ)Δx`.
pub fn coassociativity_sides<H: GradedBialgebra>(
    h: &H,
    x: &LinComb<H::Key>,
) -> (LinComb<Triple<H>>, LinComb<Triple<H>>) {
    let d = comul(h, x);
    let left = d.map_linear(|(a, b)| h.coproduct(a).map_keys(|(a1, a2)| (a1.clone(), a2.clone(), b.clone())));
    let right = d.map_linear(|(a, b)| h.coproduct(b).map_keys(|(b1, b2)| (a.clone(), b1.clone(), b2.clone())));
    (left, right)
}

/// A violated axiom, described for reports.
pub type Violation = String;

pub fn check_associativity<H: GradedBialgebra>(h: &H, a: &H::Key, b: &H::Key, c: &H::Key) -> std::result::Result<(), Violation> {
    let (la, lb, lc) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()), LinComb::basis(c.clone()));
    let left = mul(h, &mul(h, &la, &lb), &lc);
    let right = mul(h, &la, &mul(h, &lb, &lc));
    if left == right {
        Ok(())
    } else {
        Err(format!("associativity fails on ({a:?}, {b:?}, {c:?})"))
    }
}

pub fn check_coassociativity<H: GradedBialgebra>(h: &H, a: &H::Key) -> std::result::Result<(), Violation> {
    let (l, r) = coassociativity_sides(h, &LinComb::basis(a.clone()));
    if l == r {
        Ok(())
    } else {
        Err(format!("coassociativity fails on {a:?}"))
    }
}

pub fn check_counit<H: GradedBialgebra>(h: &H, a: &H::Key) -> std::result::Result<(), Violation> {
    let d = h.coproduct(a);
    let left: LinComb<H::Key> = d.map_linear(|(x, y)| LinComb::term(y.clone(), h.counit(x)));
    let right: LinComb<H::Key> = d.map_linear(|(x, y)| LinComb::term(x.clone(), h.counit(y)));
    let id = LinComb::basis(a.clone());
    if left == id && right == id {
        Ok(())
    } else {
        Err(format!("counit law fails on {a:?}"))
    }
}

pub fn check_unit<H: GradedBialgebra>(h: &H, a: &H::Key) -> std::result::Result<(), Violation> {
    let u = h.unit();
    let id = LinComb::basis(a.clone());
    if h.product(&u, a) == id && h.product(a, &u) == id {
        Ok(())
    } else {
        Err(format!("unit law fails on {a:?}"))
    }
}

/// `Δ(ab) = Δ(a)Δ(b)`
pub fn check_compatibility<H: GradedBialgebra>(h: &H, a: &H::Key, b: &H::Key) -> std::result::Result<(), Violation> {
    let left = comul(h, &h.product(a, b));
    let right = mul_tensor2(h, &h.coproduct(a), &h.coproduct(b));
    if left == right {
        Ok(())
    } else {
        Err(format!("Δ(ab) ≠ Δ(a)Δ(b) on ({a:?}, {b:?})"))
    }
}

/// `m(S⊗id)Δ = uε = m(id⊗S)Δ` for a given antipode.
pub fn check_antipode_with<H, S>(h: &H, a: &H::Key, mut s: S) -> std::result::Result<(), Violation>
where
    H: GradedBialgebra,
    S: FnMut(&H::Key) -> LinComb<H::Key>,
{
    let d = h.coproduct(a);
    let expected = LinComb::term(h.unit(), h.counit(a));
    let left = d.map_linear(|(x, y)| mul(h, &s(x), &LinComb::basis(y.clone())));
    let right = d.map_linear(|(x, y)| mul(h, &LinComb::basis(x.clone()), &s(y)));
    if left == expected && right == expected {
        Ok(())
    } else {
        Err(format!("antipode axiom fails on {a:?}"))
    }
}

pub fn check_antipode<H: GradedBialgebra>(h: &H, a: &H::Key) -> std::result::Result<(), Violation> {
    let mut failure = None;
    let res = check_antipode_with(h, a, |k| {
        takeuchi_antipode(h, &LinComb::basis(k.clone())).unwrap_or_else(|e| {
            failure = Some(e.to_string());
            LinComb::zero()
        })
    });
    match failure {
        Some(e) => Err(e),
        None => res,
    }
}

/// Runs every single-key axiom on `a`.
pub fn check_key_axioms<H: GradedBialgebra>(h: &H, a: &H::Key) -> std::result::Result<(), Violation> {
    check_unit(h, a)?;
    check_coassociativity(h, a)?;
    check_counit(h, a)?;
    check_antipode(h, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    /// The tensor algebra on one primitive generator of degree 1 (a polynomial ring).
    struct Poly;

    impl GradedBialgebra for Poly {
        type Key = usize;

        fn grade(&self, k: &usize) -> usize {
            *k
        }

        fn unit(&self) -> usize {
            0
        }

        fn product(&self, a: &usize, b: &usize) -> LinComb<usize> {
            LinComb::basis(a + b)
        }

        /// `Δ x^n = Σ C(n,i) x^i ⊗ x^{n−i}`
        fn coproduct(&self, a: &usize) -> LinComb<(usize, usize)> {
            let mut out = LinComb::zero();
            let mut binom = 1i64;
            for i in 0..=*a {
                out.add_term((i, a - i), int(binom));
                binom = binom * (*a - i) as i64 / (i as i64 + 1);
            }
            out
        }
    }

    #[test]
    fn polynomial_antipode() {
        for n in 0..5 {
            let s = takeuchi_antipode(&Poly, &LinComb::basis(n)).unwrap();
            assert_eq!(s, LinComb::term(n, sign(n as i64)));
            check_key_axioms(&Poly, &n).unwrap();
        }
    }

    #[test]
    fn reduced_coproduct_of_generator() {
        assert!(reduced_coproduct(&Poly, &LinComb::basis(1)).is_zero());
        assert!(reduced_coproduct(&Poly, &LinComb::basis(0)).is_zero());
        assert_eq!(reduced_coproduct(&Poly, &LinComb::basis(2)), LinComb::term((1, 1), int(2)));
        assert_eq!(coradical_degree(&Poly, &LinComb::basis(3)), 3);
    }
}
