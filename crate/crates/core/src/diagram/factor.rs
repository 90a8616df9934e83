//! The horizontal product `⊗`, the bottom-join product `•`, and the unique
//! factorizations of a diagram into irreducible pieces.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Diagram, Node};
use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Connective {
    Tensor,
    Bullet,
}

/// A diagram written as a `⊗`/`•` word in atoms (diagrams irreducible under both products).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AtomDecomposition {
    pub atoms: Vec<Diagram>,
    pub connectives: Vec<Connective>,
}

impl AtomDecomposition {
    pub fn new(atoms: Vec<Diagram>, connectives: Vec<Connective>) -> Self {
        AtomDecomposition { atoms, connectives }
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Positions (1-based) of the `⊗` connectives.
    pub fn s_set(&self) -> BTreeSet<usize> {
        self.connectives
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Connective::Tensor)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Number of `⊗`-irreducible factors.
    pub fn length(&self) -> usize {
        if self.atoms.is_empty() {
            0
        } else {
            1 + self.connectives.iter().filter(|c| **c == Connective::Tensor).count()
        }
    }

    /// Left fold of the atoms under the recorded connectives.
    pub fn assemble(&self) -> Result<Diagram> {
        if self.atoms.is_empty() {
            return if self.connectives.is_empty() {
                Ok(Diagram::empty())
            } else {
                Err(Error::InvalidDecomposition("connectives without atoms".into()))
            };
        }
        if self.connectives.len() + 1 != self.atoms.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} atoms need {} connectives, got {}",
                self.atoms.len(),
                self.atoms.len() - 1,
                self.connectives.len()
            )));
        }
        if self.atoms.iter().any(Diagram::is_empty) {
            return Err(Error::InvalidDecomposition("empty atom".into()));
        }
        Ok(assemble_word(&self.atoms, &self.connectives))
    }
}

/// Joins non-empty diagrams with the given connectives without validation.
pub(crate) fn assemble_word(atoms: &[Diagram], connectives: &[Connective]) -> Diagram {
    let refs: Vec<&Diagram> = atoms.iter().collect();
    assemble_refs(&refs, connectives)
}

pub(crate) fn assemble_refs(atoms: &[&Diagram], connectives: &[Connective]) -> Diagram {
    let mut iter = atoms.iter();
    let Some(first) = iter.next() else {
        return Diagram::empty();
    };
    let mut acc = (*first).clone();
    for (atom, conn) in iter.zip(connectives) {
        acc = match conn {
            Connective::Tensor => acc.tensor(atom),
            Connective::Bullet => acc.bullet(atom),
        };
    }
    acc
}

impl Diagram {
    /// `self ⊗ other`: `other` placed to the right of `self`.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let offset = self.order as u32;
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().map(|b| b.iter().map(|n| n.shifted(offset)).collect()));
        // Every block of `other` starts after every block of `self`, so order is preserved.
        Diagram { order: self.order + other.order, blocks }
    }

    /// `self • other`: juxtaposition joining the bottom-right node of `self` to the
    /// bottom-left node of `other`.
    pub fn bullet(&self, other: &Diagram) -> Diagram {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let joined = self.tensor(other);
        let left = Node::bottom(self.order as u32);
        let right = Node::bottom(self.order as u32 + 1);
        let mut blocks = joined.blocks;
        let li = blocks.iter().position(|b| b.contains(&left)).expect("node present");
        let ri = blocks.iter().position(|b| b.contains(&right)).expect("node present");
        let moved = blocks.remove(ri);
        let li = if ri < li { li - 1 } else { li };
        blocks[li].extend(moved);
        blocks[li].sort_unstable();
        Diagram::from_sorted_blocks(joined.order, blocks)
    }

    /// For each cut position `1..k-1`, the blocks with nodes on both sides.
    fn crossing_counts(&self) -> Vec<(usize, Option<usize>)> {
        let k = self.order;
        let mut counts = vec![(0usize, None); k.saturating_sub(1)];
        for (bi, block) in self.blocks.iter().enumerate() {
            let lo = block.iter().map(|n| n.column).min().unwrap_or(0) as usize;
            let hi = block.iter().map(|n| n.column).max().unwrap_or(0) as usize;
            for cut in lo..hi {
                let entry = &mut counts[cut - 1];
                entry.0 += 1;
                entry.1 = Some(bi);
            }
        }
        counts
    }

    /// Positions `i` where no block meets both columns `1..=i` and `i+1..=k`.
    pub fn tensor_cuts(&self) -> Vec<usize> {
        self.crossing_counts()
            .iter()
            .enumerate()
            .filter(|(_, (count, _))| *count == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Positions `i` where exactly one block crosses and it contains bottom nodes `i` and `i+1`.
    pub fn bullet_cuts(&self) -> Vec<usize> {
        self.crossing_counts()
            .iter()
            .enumerate()
            .filter_map(|(i, (count, block))| {
                let cut = i + 1;
                let block = &self.blocks[(*block)?];
                let ok = *count == 1
                    && block.contains(&Node::bottom(cut as u32))
                    && block.contains(&Node::bottom(cut as u32 + 1));
                ok.then_some(cut)
            })
            .collect()
    }

    /// Restriction to columns `lo..=hi`, relabelled to start at column 1.
    /// Only meaningful when `lo - 1` and `hi` are tensor or bullet cuts.
    pub(crate) fn restrict(&self, lo: usize, hi: usize) -> Diagram {
        if hi < lo {
            return Diagram::empty();
        }
        let offset = lo as u32 - 1;
        let blocks: Vec<Vec<Node>> = self
            .blocks
            .iter()
            .filter_map(|b| {
                let part: Vec<Node> = b
                    .iter()
                    .filter(|n| (lo as u32..=hi as u32).contains(&n.column))
                    .map(|n| Node { column: n.column - offset, row: n.row })
                    .collect();
                (!part.is_empty()).then_some(part)
            })
            .collect();
        Diagram::from_sorted_blocks(hi + 1 - lo, blocks)
    }

    fn split_at_cuts(&self, cuts: &[usize]) -> Vec<Diagram> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        let mut lo = 1;
        for &cut in cuts {
            pieces.push(self.restrict(lo, cut));
            lo = cut + 1;
        }
        pieces.push(self.restrict(lo, self.order));
        pieces
    }

    /// The maximal factorization `π₁ ⊗ ⋯ ⊗ π_l` into non-empty `⊗`-irreducibles.
    pub fn tensor_factors(&self) -> Vec<Diagram> {
        self.split_at_cuts(&self.tensor_cuts())
    }

    /// Splits `self = ρ • σ` at the bullet cut `i`.
    pub fn bullet_split(&self, i: usize) -> Result<(Diagram, Diagram)> {
        if !self.bullet_cuts().contains(&i) {
            return Err(Error::InvalidCut(i));
        }
        Ok((self.restrict(1, i), self.restrict(i + 1, self.order)))
    }

    /// The unique word in atoms: tensor factors first, then each factor split at all its bullet cuts.
    pub fn atoms(&self) -> AtomDecomposition {
        let mut atoms = Vec::new();
        let mut connectives = Vec::new();
        for (fi, factor) in self.tensor_factors().into_iter().enumerate() {
            if fi > 0 {
                connectives.push(Connective::Tensor);
            }
            let cuts = factor.bullet_cuts();
            for (pi, piece) in factor.split_at_cuts(&cuts).into_iter().enumerate() {
                if pi > 0 {
                    connectives.push(Connective::Bullet);
                }
                atoms.push(piece);
            }
        }
        AtomDecomposition { atoms, connectives }
    }

    /// Number of `⊗`-irreducible factors; `l(∅) = 0`.
    pub fn length(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.tensor_cuts().len() + 1
        }
    }

    /// Positions of `⊗` in the atom word.
    pub fn s_set(&self) -> BTreeSet<usize> {
        self.atoms().s_set()
    }

    /// Number of atoms in the atom word.
    pub fn atom_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        self.tensor_factors().iter().map(|f| f.bullet_cuts().len() + 1).sum()
    }

    pub fn is_tensor_irreducible(&self) -> bool {
        self.length() <= 1
    }

    pub fn is_bullet_irreducible(&self) -> bool {
        self.bullet_cuts().is_empty()
    }

    /// `π_α = π_(α₁) ⊗ ⋯ ⊗ π_(α_p)`.
    pub fn pi_of_composition(alpha: &Composition) -> Diagram {
        alpha.parts().iter().fold(Diagram::empty(), |acc, &n| acc.tensor(&Diagram::pi_line(n)))
    }

    /// Orders of the `⊗`-irreducible factors.
    pub fn alpha_of(&self) -> Composition {
        Composition::new_unchecked(self.tensor_factors().iter().map(Diagram::order).collect())
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn e1() -> Diagram {
        d("[[1],[2],[4],[3,-1,-2],[-3,-4]]")
    }

    fn d2() -> Diagram {
        d("[[1],[2,-3],[3],[4],[-1],[-2],[-4]]")
    }

    #[test]
    fn tensor_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert_eq!(dot.tensor(&bar), d("[[1],[-1],[2,-2]]"));
        assert_eq!(Diagram::empty().tensor(&e1()), e1());
        assert_eq!(e1().tensor(&Diagram::empty()), e1());
        assert_eq!(dot.tensor(&dot), d("[[1],[-1],[2],[-2]]"));
    }

    #[test]
    fn bullet_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert_eq!(dot.bullet(&bar), d("[[1],[-1,2,-2]]"));
        assert_eq!(dot.bullet(&dot), d("[[1],[2],[-1,-2]]"));
        assert_eq!(Diagram::empty().bullet(&bar), bar);
        assert_eq!(bar.bullet(&Diagram::empty()), bar);
    }

    #[test]
    fn cut_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert_eq!(dot.tensor(&bar).tensor_cuts(), vec![1]);
        assert!(e1().tensor_cuts().is_empty());
        assert_eq!(d2().tensor_cuts(), vec![1, 3]);
        assert_eq!(e1().bullet_cuts(), vec![1, 3]);
        assert!(d2().bullet_cuts().is_empty());
        assert_eq!(dot.bullet(&dot).bullet_cuts(), vec![1]);
    }

    #[test]
    fn bullet_split_examples() {
        let dot = Diagram::dot();
        assert_eq!(e1().bullet_split(1).unwrap(), (dot.clone(), d("[[1],[2,-1],[3],[-2,-3]]")));
        assert_eq!(e1().bullet_split(3).unwrap(), (d("[[1],[2],[3,-1,-2],[-3]]"), dot.clone()));
        assert_eq!(dot.bullet(&dot).bullet_split(1).unwrap(), (dot.clone(), dot.clone()));
        assert_eq!(e1().bullet_split(2), Err(Error::InvalidCut(2)));
    }

    #[test]
    fn factorization_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert_eq!(dot.tensor(&bar).tensor_factors(), vec![dot.clone(), bar.clone()]);
        assert_eq!(e1().tensor_factors(), vec![e1()]);
        assert!(Diagram::empty().tensor_factors().is_empty());
    }

    #[test]
    fn atoms_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        let a = e1().atoms();
        assert_eq!(a.atoms, vec![dot.clone(), d("[[1],[2,-1],[-2]]"), dot.clone()]);
        assert_eq!(a.connectives, vec![Connective::Bullet, Connective::Bullet]);
        assert_eq!(a.assemble().unwrap(), e1());

        let t = dot.tensor(&bar).atoms();
        assert_eq!(t.atoms, vec![dot.clone(), bar.clone()]);
        assert_eq!(t.connectives, vec![Connective::Tensor]);

        assert!(Diagram::empty().atoms().is_empty());
    }

    #[test]
    fn assemble_examples() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        let w = AtomDecomposition::new(vec![dot.clone(), bar.clone()], vec![Connective::Bullet]);
        assert_eq!(w.assemble().unwrap(), dot.bullet(&bar));
        let single = AtomDecomposition::new(vec![bar.clone()], vec![]);
        assert_eq!(single.assemble().unwrap(), bar);
        let bad = AtomDecomposition::new(vec![dot, Diagram::empty()], vec![Connective::Tensor]);
        assert!(bad.assemble().is_err());
    }

    #[test]
    fn length_and_s_set() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert_eq!(e1().length(), 1);
        assert!(e1().s_set().is_empty());
        assert_eq!(dot.tensor(&bar).length(), 2);
        assert_eq!(dot.tensor(&bar).s_set(), BTreeSet::from([1]));
        assert_eq!(Diagram::empty().length(), 0);
        assert_eq!(e1().atom_count(), 3);
    }

    #[test]
    fn compositions_and_lines() {
        let alpha = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(Diagram::pi_of_composition(&alpha), d("[[1],[2],[-1,-2],[3],[-3]]"));
        assert_eq!(e1().alpha_of(), Composition::new(vec![4]).unwrap());
        assert_eq!(Diagram::empty().alpha_of(), Composition::empty());
        assert_eq!(Diagram::pi_of_composition(&alpha).alpha_of(), alpha);
    }
}
