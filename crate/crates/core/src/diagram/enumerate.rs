//! Exhaustive listing of the diagrams of a given order.

use num_bigint::BigUint;

use super::{Diagram, Node};

/// Bell numbers through the Bell triangle.
pub fn bell_number(n: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_default());
        for x in &row {
            let v = next.last().cloned().unwrap_or_default() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Every diagram of order `k`, canonical and sorted. There are `Bell(2k)` of them.
pub fn enumerate_diagrams(k: usize) -> Vec<Diagram> {
    let nodes: Vec<Node> = (1..=k as u32).flat_map(|c| [Node::top(c), Node::bottom(c)]).collect();
    let n = nodes.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Diagram::empty());
        return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[..i]).
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        let blocks_count = maxes[n - 1] + 1;
        let mut blocks = vec![Vec::new(); blocks_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(nodes[i]);
        }
        out.push(Diagram::from_sorted_blocks(k, blocks));

        let mut i = n - 1;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_values() {
        let got: Vec<u64> = (0..8).map(|n| bell_number(n).try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn counts_match_bell() {
        assert_eq!(enumerate_diagrams(0), vec![Diagram::empty()]);
        assert_eq!(enumerate_diagrams(1).len(), 2);
        assert_eq!(enumerate_diagrams(2).len(), 15);
        assert_eq!(enumerate_diagrams(3).len(), 203);
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let all = enumerate_diagrams(3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
