//! The refinement order on diagrams sharing an atom word.

use super::factor::{assemble_word, Connective};
use super::Diagram;

impl Diagram {
    /// `π ∼ σ`: the same sequence of atoms.
    pub fn similar(&self, other: &Diagram) -> bool {
        self.atoms().atoms == other.atoms().atoms
    }

    /// `self ≤ other`: similar, and every `⊗` of `other` is a `⊗` of `self`.
    pub fn refines(&self, other: &Diagram) -> bool {
        let a = self.atoms();
        let b = other.atoms();
        a.atoms == b.atoms && b.s_set().is_subset(&a.s_set())
    }

    /// Every diagram obtained by turning some `from` connectives into `to`.
    fn flips(&self, from: Connective, to: Connective) -> Vec<Diagram> {
        let word = self.atoms();
        let positions: Vec<usize> = word
            .connectives
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == from)
            .map(|(i, _)| i)
            .collect();
        let mut out = Vec::with_capacity(1 << positions.len());
        for mask in 0u64..(1u64 << positions.len()) {
            let mut conns = word.connectives.clone();
            for (bit, &p) in positions.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    conns[p] = to;
                }
            }
            out.push(assemble_word(&word.atoms, &conns));
        }
        out.sort();
        out
    }

    /// All `σ` with `self ≤ σ`, sorted.
    pub fn coarsenings(&self) -> Vec<Diagram> {
        self.flips(Connective::Tensor, Connective::Bullet)
    }

    /// All `σ` with `σ ≤ self`, sorted.
    pub fn refinements(&self) -> Vec<Diagram> {
        self.flips(Connective::Bullet, Connective::Tensor)
    }

    /// All diagrams similar to `self`.
    pub fn similar_class(&self) -> Vec<Diagram> {
        let word = self.atoms();
        let n = word.connectives.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            let conns: Vec<Connective> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { Connective::Tensor } else { Connective::Bullet })
                .collect();
            out.push(assemble_word(&word.atoms, &conns));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> Diagram {
        "[[1],[2],[4],[3,-1,-2],[-3,-4]]".parse().unwrap()
    }

    #[test]
    fn refines_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert!(dot.tensor(&bar).refines(&dot.bullet(&bar)));
        assert!(!dot.bullet(&bar).refines(&dot.tensor(&bar)));
        assert!(!dot.similar(&bar));
        assert!(Diagram::empty().refines(&Diagram::empty()));
        assert!(!Diagram::empty().refines(&dot));
    }

    #[test]
    fn coarsening_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        let mut expected = vec![dot.tensor(&bar), dot.bullet(&bar)];
        expected.sort();
        assert_eq!(dot.tensor(&bar).coarsenings(), expected);
        assert_eq!(e1().refinements().len(), 4);
        assert_eq!(dot.coarsenings(), vec![dot.clone()]);
        assert_eq!(e1().coarsenings(), vec![e1()]);
    }

    #[test]
    fn similar_class_contains_all() {
        let class = e1().similar_class();
        assert_eq!(class.len(), 4);
        assert!(class.iter().all(|d| d.similar(&e1())));
    }
}
