//! The `L`, `η` and `η^(q)` bases of `ParQSym`.

use std::collections::BTreeSet;

use num_traits::One;

use crate::algebra::scalar::{pow, sign};
use crate::algebra::{LinComb, QParam, Scalar};
use crate::diagram::{Connective, Diagram};

/// All ways to interleave words of lengths `a` and `b`; `true` marks a letter of the first word.
pub(crate) fn interleavings(a: usize, b: usize) -> Vec<Vec<bool>> {
    if a == 0 {
        return vec![vec![false; b]];
    }
    if b == 0 {
        return vec![vec![true; a]];
    }
    let mut out = Vec::new();
    for mut rest in interleavings(a - 1, b) {
        rest.insert(0, true);
        out.push(rest);
    }
    for mut rest in interleavings(a, b - 1) {
        rest.insert(0, false);
        out.push(rest);
    }
    out
}

fn s_diff(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> i64 {
    a.difference(b).count() as i64
}

/// `L_π = Σ_{σ≤π} M_σ`
pub fn l_to_m(d: &Diagram) -> LinComb<Diagram> {
    d.refinements().into_iter().map(|s| (s, Scalar::one())).collect()
}

/// `M_π = Σ_{σ≤π} (−1)^{|S(σ)∖S(π)|} L_σ`
pub fn m_to_l(d: &Diagram) -> LinComb<Diagram> {
    let sp = d.s_set();
    d.refinements()
        .into_iter()
        .map(|s| {
            let c = sign(s_diff(&s.s_set(), &sp));
            (s, c)
        })
        .collect()
}

/// `η^(q)_π = Σ_{π≤σ} r^{l(σ)} M_σ`
pub fn eta_q_to_m(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    let r = q.r();
    d.coarsenings()
        .into_iter()
        .map(|s| {
            let c = pow(&r, s.length() as i64);
            (s, c)
        })
        .collect()
}

/// `M_π = r^{−l(π)} Σ_{π≤σ} (−1)^{l(π)−l(σ)} η^(q)_σ`
pub fn m_to_eta_q(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    let scale = pow(&q.r(), -(d.length() as i64));
    d.coarsenings()
        .into_iter()
        .map(|s| {
            let c = &scale * sign(d.length() as i64 - s.length() as i64);
            (s, c)
        })
        .collect()
}

/// `η^(q)_π = r Σ_{ρ∼π} (−1)^{|S(ρ)∖S(π)|} q^{|S(ρ)∩S(π)|} L_ρ`
pub fn eta_q_to_l(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    if d.is_empty() {
        return LinComb::basis(Diagram::empty());
    }
    let sp = d.s_set();
    d.similar_class()
        .into_iter()
        .map(|rho| {
            let sr = rho.s_set();
            let c = q.r() * sign(s_diff(&sr, &sp)) * pow(q.q(), sr.intersection(&sp).count() as i64);
            (rho, c)
        })
        .collect()
}

/// `L_π = r^{−n} Σ_{ρ∼π} (−1)^{|S(π)∖S(ρ)|} q^{|[n−1]∖(S(ρ)∪S(π))|} η^(q)_ρ`
pub fn l_to_eta_q(d: &Diagram, q: &QParam) -> LinComb<Diagram> {
    if d.is_empty() {
        return LinComb::basis(Diagram::empty());
    }
    let n = d.atom_count();
    let sp = d.s_set();
    d.similar_class()
        .into_iter()
        .map(|rho| {
            let sr = rho.s_set();
            let free = (n - 1 - sr.union(&sp).count()) as i64;
            let c = pow(&q.r(), -(n as i64)) * sign(s_diff(&sp, &sr)) * pow(q.q(), free);
            (rho, c)
        })
        .collect()
}

/// `ΔL_π`: one term per split of the atom word, including both trivial ones.
pub fn comul_l(d: &Diagram) -> LinComb<(Diagram, Diagram)> {
    let word = d.atoms();
    let n = word.atoms.len();
    let build = |lo: usize, hi: usize| -> Diagram {
        let atoms: Vec<&Diagram> = word.atoms[lo..hi].iter().collect();
        let conns = if hi > lo { &word.connectives[lo..hi - 1] } else { &[][..] };
        crate::diagram::assemble_refs(&atoms, conns)
    };
    (0..=n).map(|i| ((build(0, i), build(i, n)), Scalar::one())).collect()
}

/// `L_ρ L_σ`: shuffles of the atom words; a `ρ`-letter followed by a `σ`-letter is
/// joined by `•`, the reverse by `⊗`, and letters of one word keep their connective.
pub fn mul_l(a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
    let wa = a.atoms();
    let wb = b.atoms();
    let mut out = LinComb::zero();
    for shuffle in interleavings(wa.atoms.len(), wb.atoms.len()) {
        let (mut i, mut j) = (0, 0);
        let mut atoms = Vec::with_capacity(shuffle.len());
        let mut conns = Vec::with_capacity(shuffle.len());
        let mut prev: Option<bool> = None;
        for &from_a in &shuffle {
            if let Some(p) = prev {
                conns.push(match (p, from_a) {
                    (true, true) => wa.connectives[i - 1],
                    (false, false) => wb.connectives[j - 1],
                    (true, false) => Connective::Bullet,
                    (false, true) => Connective::Tensor,
                });
            }
            if from_a {
                atoms.push(&wa.atoms[i]);
                i += 1;
            } else {
                atoms.push(&wb.atoms[j]);
                j += 1;
            }
            prev = Some(from_a);
        }
        out.add_term(crate::diagram::assemble_refs(&atoms, &conns), Scalar::one());
    }
    out
}

/// `η^(q)_ρ ⋆ η^(q)_σ`: shuffles of the `⊗`-factor sequences with an optional `•`
/// at each change of word, weighted `(−1)^{n₂+n₃}(−q)^{n₂}` where `n₂`/`n₃` count
/// the `•` placed after a `ρ`-letter/`σ`-letter.
pub fn mul_eta_q(a: &Diagram, b: &Diagram, q: &QParam) -> LinComb<Diagram> {
    let fa = a.tensor_factors();
    let fb = b.tensor_factors();
    let minus_q = -q.q().clone();
    let mut out = LinComb::zero();
    for shuffle in interleavings(fa.len(), fb.len()) {
        let (mut i, mut j) = (0, 0);
        let mut letters = Vec::with_capacity(shuffle.len());
        for &from_a in &shuffle {
            if from_a {
                letters.push(&fa[i]);
                i += 1;
            } else {
                letters.push(&fb[j]);
                j += 1;
            }
        }
        let switches: Vec<usize> = (1..shuffle.len()).filter(|&p| shuffle[p - 1] != shuffle[p]).collect();
        for mask in 0u64..(1u64 << switches.len()) {
            let mut conns = vec![Connective::Tensor; shuffle.len().saturating_sub(1)];
            let (mut n2, mut n3) = (0i64, 0i64);
            for (bit, &p) in switches.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    conns[p - 1] = Connective::Bullet;
                    if shuffle[p - 1] {
                        n2 += 1;
                    } else {
                        n3 += 1;
                    }
                }
            }
            let c = sign(n2 + n3) * pow(&minus_q, n2);
            out.add_term(crate::diagram::assemble_refs(&letters, &conns), c);
        }
    }
    out
}

/// `η_ρ ⋆ η_σ`, the case `q = 1`.
pub fn mul_eta(a: &Diagram, b: &Diagram) -> LinComb<Diagram> {
    mul_eta_q(a, b, &QParam::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};

    fn dot() -> Diagram {
        Diagram::dot()
    }

    fn bar() -> Diagram {
        Diagram::bar()
    }

    #[test]
    fn interleaving_counts() {
        assert_eq!(interleavings(2, 2).len(), 6);
        assert_eq!(interleavings(0, 3).len(), 1);
    }

    #[test]
    fn l_examples() {
        let mut expected = LinComb::basis(dot().bullet(&bar()));
        expected.add_term(dot().tensor(&bar()), int(1));
        assert_eq!(l_to_m(&dot().bullet(&bar())), expected);

        let mut expected = LinComb::basis(dot().bullet(&bar()));
        expected.add_term(bar().tensor(&dot()), int(1));
        assert_eq!(mul_l(&dot(), &bar()), expected);
        assert_eq!(mul_l(&Diagram::empty(), &bar()), LinComb::basis(bar()));
    }

    #[test]
    fn l_coproduct() {
        let db = dot().bullet(&bar());
        let c = comul_l(&db);
        assert_eq!(c.len(), 3);
        assert_eq!(c.coeff(&(dot(), bar())), int(1));
        assert_eq!(comul_l(&dot()).len(), 2);
        let e1: Diagram = "[[1],[2],[4],[3,-1,-2],[-3,-4]]".parse().unwrap();
        assert_eq!(comul_l(&e1).len(), 4);
    }

    #[test]
    fn eta_examples() {
        let q = QParam::one();
        let t = dot().tensor(&bar());
        let b = dot().bullet(&bar());
        let mut expected = LinComb::term(t.clone(), frac(1, 4));
        expected.add_term(b.clone(), frac(-1, 4));
        assert_eq!(m_to_eta_q(&t, &q), expected);
        let mut expected = LinComb::term(t.clone(), int(4));
        expected.add_term(b.clone(), int(2));
        assert_eq!(eta_q_to_m(&t, &q), expected);
    }

    #[test]
    fn eta_products() {
        let mut expected = LinComb::basis(dot().tensor(&bar()));
        expected.add_term(dot().bullet(&bar()), int(1));
        expected.add_term(bar().tensor(&dot()), int(1));
        expected.add_term(bar().bullet(&dot()), int(-1));
        assert_eq!(mul_eta(&dot(), &bar()), expected);

        let q = QParam::new(int(3)).unwrap();
        let mut expected = LinComb::basis(dot().tensor(&bar()));
        expected.add_term(dot().bullet(&bar()), int(3));
        expected.add_term(bar().tensor(&dot()), int(1));
        expected.add_term(bar().bullet(&dot()), int(-1));
        assert_eq!(mul_eta_q(&dot(), &bar(), &q), expected);
        assert_eq!(mul_eta_q(&Diagram::empty(), &bar(), &q), LinComb::basis(bar()));
    }
}
