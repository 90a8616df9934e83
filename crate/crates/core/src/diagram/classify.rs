//! Shape predicates: planarity, propagation, matchings and related families.

use serde::{Deserialize, Serialize};

use super::{Diagram, Node, Row};

/// Membership of a diagram in the families that span subcoalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub matching: bool,
    pub perfect_matching: bool,
    pub permuting: bool,
    pub partial_permutation: bool,
    pub isolated_upper: bool,
}

fn is_propagating(block: &[Node]) -> bool {
    block.iter().any(|n| n.row == Row::Top) && block.iter().any(|n| n.row == Row::Bottom)
}

impl Diagram {
    /// Position on the boundary cycle `1, 2, …, k, k', …, 1'`.
    fn boundary_position(&self, node: Node) -> usize {
        let c = node.column as usize;
        match node.row {
            Row::Top => c - 1,
            Row::Bottom => 2 * self.order - c,
        }
    }

    /// No two blocks interleave along the boundary cycle.
    pub fn is_planar(&self) -> bool {
        let mut label = vec![0usize; 2 * self.order];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &node in block {
                label[self.boundary_position(node)] = bi;
            }
        }
        for a in 0..self.blocks.len() {
            for b in a + 1..self.blocks.len() {
                let mut runs = 0;
                let mut last = None;
                for &l in &label {
                    if (l == a || l == b) && last != Some(l) {
                        runs += 1;
                        last = Some(l);
                    }
                }
                if runs >= 4 {
                    return false;
                }
            }
        }
        true
    }

    /// Number of blocks meeting both rows.
    pub fn propagation_number(&self) -> usize {
        self.blocks.iter().filter(|b| is_propagating(b)).count()
    }

    pub fn classify(&self) -> Classification {
        let small = self.blocks.iter().all(|b| b.len() <= 2);
        let pairs = self.blocks.iter().all(|b| b.len() == 2);
        let permuting = self.blocks.iter().all(|b| b.len() == 2 && is_propagating(b));
        let partial = self.blocks.iter().all(|b| b.len() == 1 || (b.len() == 2 && is_propagating(b)));
        let isolated_upper = self
            .blocks
            .iter()
            .all(|b| !b.iter().any(|n| n.row == Row::Top) || b.len() == 1);
        Classification {
            matching: small,
            perfect_matching: pairs,
            permuting,
            partial_permutation: partial,
            isolated_upper,
        }
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

    fn x() -> Diagram {
        d("[[1,-2],[2,-1]]")
    }

    #[test]
    fn planarity() {
        assert!(e1().is_planar());
        assert!(!x().is_planar());
        assert!(Diagram::empty().is_planar());
        assert!(Diagram::bar().tensor(&Diagram::bar()).is_planar());
    }

    #[test]
    fn propagation() {
        assert_eq!(Diagram::bar().propagation_number(), 1);
        assert_eq!(Diagram::dot().propagation_number(), 0);
        assert_eq!(e1().propagation_number(), 1);
    }

    #[test]
    fn classification() {
        let c = x().classify();
        assert!(c.matching && c.perfect_matching && c.permuting && c.partial_permutation);
        assert!(!c.isolated_upper);
        let c = Diagram::dot().classify();
        assert!(c.matching && !c.perfect_matching && c.partial_permutation && c.isolated_upper);
        assert!(!e1().classify().matching);
    }
}
