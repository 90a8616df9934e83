//! Closed-form antipode of `ParQSym` on the `M` basis and its inverse.
//!
//! For `π = π₁ ⊗ ⋯ ⊗ π_n` the antipode is a signed sum over grids: the factors
//! are cut into `k` consecutive non-empty rows, each row is spread in order over
//! `r` columns so that every column is hit, and every column is the `•`-product
//! of its entries. Columns are then joined by `⊗`. The inverse antipode reads
//! each column from the bottom row up.

use num_traits::One;

use crate::algebra::scalar::sign;
use crate::algebra::{LinComb, Scalar};
use crate::composition::Composition;
use crate::diagram::Diagram;

/// Strictly increasing `g`-subsets of `0..r`.
fn increasing(r: usize, g: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, g: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == g {
            out.push(cur.clone());
            return;
        }
        for c in start..r {
            if r - c < g - cur.len() {
                break;
            }
            cur.push(c);
            go(c + 1, r, g, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, g, &mut Vec::new(), &mut out);
    out
}

struct Grid<'a> {
    rows: Vec<&'a [Diagram]>,
    r: usize,
    reversed: bool,
}

impl Grid<'_> {
    fn fill(&self, row: usize, placement: &mut Vec<Vec<usize>>, sign: &Scalar, out: &mut LinComb<Diagram>) {
        if row == self.rows.len() {
            self.emit(placement, sign, out);
            return;
        }
        for cols in increasing(self.r, self.rows[row].len()) {
            placement.push(cols);
            self.fill(row + 1, placement, sign, out);
            placement.pop();
        }
    }

    fn emit(&self, placement: &[Vec<usize>], sign: &Scalar, out: &mut LinComb<Diagram>) {
        let mut columns: Vec<Vec<&Diagram>> = vec![Vec::new(); self.r];
        let order: Vec<usize> = if self.reversed {
            (0..self.rows.len()).rev().collect()
        } else {
            (0..self.rows.len()).collect()
        };
        for i in order {
            for (entry, &c) in self.rows[i].iter().zip(&placement[i]) {
                columns[c].push(entry);
            }
        }
        if columns.iter().any(Vec::is_empty) {
            return;
        }
        let diagram = columns.iter().fold(Diagram::empty(), |acc, col| {
            let cell = col.iter().fold(Diagram::empty(), |a, d| a.bullet(d));
            acc.tensor(&cell)
        });
        out.add_term(diagram, sign.clone());
    }
}

fn grid_sum(d: &Diagram, reversed: bool) -> LinComb<Diagram> {
    let factors = d.tensor_factors();
    let n = factors.len();
    if n == 0 {
        return LinComb::basis(Diagram::empty());
    }
    let mut out = LinComb::zero();
    for groups in Composition::all_of_size(n) {
        let mut rows = Vec::with_capacity(groups.len());
        let mut start = 0;
        for &g in groups.parts() {
            rows.push(&factors[start..start + g]);
            start += g;
        }
        let s = sign(groups.len() as i64) * Scalar::one();
        let widest = groups.parts().iter().copied().max().unwrap_or(0);
        for r in widest..=n {
            let grid = Grid { rows: rows.clone(), r, reversed };
            grid.fill(0, &mut Vec::new(), &s, &mut out);
        }
    }
    out
}

/// `S(M_π)` from the grid formula.
pub fn antipode_m_explicit(d: &Diagram) -> LinComb<Diagram> {
    grid_sum(d, false)
}

/// `S̄(M_π) = S⁻¹(M_π)`: the grid formula with the rows read in reverse.
pub fn antipode_inverse_m_explicit(d: &Diagram) -> LinComb<Diagram> {
    grid_sum(d, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn small_cases() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        assert_eq!(antipode_m_explicit(&dot), LinComb::term(dot.clone(), int(-1)));
        let mut expected = LinComb::basis(bar.tensor(&dot));
        expected.add_term(dot.bullet(&bar), int(1));
        assert_eq!(antipode_m_explicit(&dot.tensor(&bar)), expected);
        assert_eq!(antipode_m_explicit(&Diagram::empty()), LinComb::basis(Diagram::empty()));
    }

    #[test]
    fn inverse_undoes_antipode() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        let x = dot.tensor(&bar);
        let back = antipode_m_explicit(&x).map_linear(antipode_inverse_m_explicit);
        assert_eq!(back, LinComb::basis(x));
    }

    #[test]
    fn subsets() {
        assert_eq!(increasing(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(increasing(2, 0), vec![Vec::<usize>::new()]);
    }
}
