//! Partition diagrams: set partitions of `{1..k, 1'..k'}` kept in a canonical form.
//!
//! Nodes are ordered by `(column, row)` with the top row first. Inside a block
//! nodes are sorted by that order, and blocks are sorted by their least node, so
//! two diagrams are equal exactly when they have the same set partition.
//!
//! The text form writes top nodes as positive and bottom nodes as negative
//! column numbers, e.g. `[[1],[-1,-2,3],[2],[-3,-4],[4]]`.

mod classify;
mod enumerate;
mod factor;
mod refine;

pub use classify::Classification;
pub use enumerate::{bell_number, enumerate_diagrams};
pub use factor::{AtomDecomposition, Connective};
pub(crate) use factor::assemble_refs;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    Top,
    Bottom,
}

/// A vertex of a partition diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub column: u32,
    pub row: Row,
}

impl Node {
    pub fn top(column: u32) -> Self {
        Node { column, row: Row::Top }
    }

    pub fn bottom(column: u32) -> Self {
        Node { column, row: Row::Bottom }
    }

    /// Signed encoding: top `c` is `c`, bottom `c` is `-c`.
    pub fn to_signed(self) -> i64 {
        match self.row {
            Row::Top => self.column as i64,
            Row::Bottom => -(self.column as i64),
        }
    }

    pub fn from_signed(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(Error::Parse("node label 0 is not allowed".into()));
        }
        let column = u32::try_from(value.unsigned_abs())
            .map_err(|_| Error::Parse(format!("node label {value} is too large")))?;
        Ok(if value > 0 { Node::top(column) } else { Node::bottom(column) })
    }

    fn shifted(self, offset: u32) -> Self {
        Node { column: self.column + offset, row: self.row }
    }
}

/// A partition diagram of order `k` in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    order: usize,
    blocks: Vec<Vec<Node>>,
}

impl Diagram {
    /// The empty diagram of order 0.
    pub fn empty() -> Self {
        Diagram { order: 0, blocks: Vec::new() }
    }

    /// Builds a diagram from arbitrary blocks, checking that they partition the `2k` nodes.
    pub fn canonicalize<I, B>(order: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = Node>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for block in blocks {
            let mut nodes: Vec<Node> = block.into_iter().collect();
            if nodes.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for node in &nodes {
                if node.column == 0 || node.column as usize > order {
                    return Err(Error::ColumnOutOfRange { column: node.to_signed(), order });
                }
                if !seen.insert(*node) {
                    return Err(Error::OverlappingBlocks(node.to_signed()));
                }
            }
            nodes.sort_unstable();
            out.push(nodes);
        }
        for column in 1..=order as u32 {
            for node in [Node::top(column), Node::bottom(column)] {
                if !seen.contains(&node) {
                    return Err(Error::MissingNode(node.to_signed()));
                }
            }
        }
        out.sort_unstable();
        Ok(Diagram { order, blocks: out })
    }

    /// Builds a diagram from blocks in the signed encoding.
    pub fn from_signed<I, B>(order: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = i64>,
    {
        let mut converted = Vec::new();
        for block in blocks {
            let nodes = block.into_iter().map(Node::from_signed).collect::<Result<Vec<_>>>()?;
            converted.push(nodes);
        }
        Diagram::canonicalize(order, converted)
    }

    /// Builds a diagram from signed blocks, taking the order to be the largest column present.
    pub fn from_signed_blocks(blocks: &[Vec<i64>]) -> Result<Self> {
        let order = blocks.iter().flatten().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0);
        Diagram::from_signed(order, blocks.iter().map(|b| b.iter().copied()))
    }

    /// Used internally when blocks are known to be canonical up to block order.
    pub(crate) fn from_sorted_blocks(order: usize, mut blocks: Vec<Vec<Node>>) -> Self {
        debug_assert!(blocks.iter().all(|b| !b.is_empty() && b.windows(2).all(|w| w[0] < w[1])));
        blocks.sort_unstable();
        Diagram { order, blocks }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<Node>] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        self.blocks.iter().map(|b| b.iter().map(|n| n.to_signed()).collect()).collect()
    }

    /// The one-node-per-row diagram `{{1},{1'}}`.
    pub fn dot() -> Self {
        Diagram::from_sorted_blocks(1, vec![vec![Node::top(1)], vec![Node::bottom(1)]])
    }

    /// The identity diagram of order 1, `{{1,1'}}`.
    pub fn bar() -> Self {
        Diagram::from_sorted_blocks(1, vec![vec![Node::top(1), Node::bottom(1)]])
    }

    /// `π_(n)`: isolated top nodes and a single bottom block.
    pub fn pi_line(n: usize) -> Self {
        if n == 0 {
            return Diagram::empty();
        }
        let mut blocks: Vec<Vec<Node>> = (1..=n as u32).map(|c| vec![Node::top(c)]).collect();
        blocks.push((1..=n as u32).map(Node::bottom).collect());
        Diagram::from_sorted_blocks(n, blocks)
    }

    /// Two-row ASCII picture: one character per node, block labels a, b, c, ...
    pub fn render(&self) -> String {
        if self.is_empty() {
            return "(empty diagram)\n".to_string();
        }
        let label = |node: Node| -> char {
            let idx = self.blocks.iter().position(|b| b.contains(&node)).unwrap_or(0);
            let alphabet: Vec<char> = ('a'..='z').chain('A'..='Z').collect();
            alphabet.get(idx).copied().unwrap_or('*')
        };
        let row = |row: Row| -> String {
            (1..=self.order as u32)
                .map(|c| label(Node { column: c, row }).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("top:    {}\nbottom: {}\n", row(Row::Top), row(Row::Bottom))
    }
}

impl Default for Diagram {
    fn default() -> Self {
        Diagram::empty()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, node) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", node.to_signed())?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Accepts the compact text form `[[1],[2,-1],[-2]]` or the JSON object form.
    fn from_str(s: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        Diagram::from_json_value(&value)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    order: usize,
    blocks: Vec<Vec<i64>>,
}

impl Diagram {
    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        match value {
            serde_json::Value::Array(_) => {
                let blocks: Vec<Vec<i64>> = serde_json::from_value(value.clone())
                    .map_err(|e| Error::Parse(format!("diagram blocks: {e}")))?;
                Diagram::from_signed_blocks(&blocks)
            }
            serde_json::Value::Object(_) => {
                let raw: DiagramJson = serde_json::from_value(value.clone())
                    .map_err(|e| Error::Parse(format!("diagram object: {e}")))?;
                Diagram::from_signed(raw.order, raw.blocks)
            }
            other => Err(Error::Parse(format!("expected a diagram, found {other}"))),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(DiagramJson { order: self.order, blocks: self.signed_blocks() })
            .expect("diagram serialization is infallible")
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { order: self.order, blocks: self.signed_blocks() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Diagram::from_json_value(&value).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn e1() -> Diagram {
        "[[1],[2],[4],[3,-1,-2],[-3,-4]]".parse().unwrap()
    }

    #[test]
    fn canonical_reordering() {
        let d = Diagram::from_signed(1, vec![vec![-1], vec![1]]).unwrap();
        assert_eq!(d, Diagram::dot());
        assert_eq!(d.to_string(), "[[1],[-1]]");
    }

    #[test]
    fn shuffled_blocks_give_same_diagram() {
        let shuffled =
            Diagram::from_signed(4, vec![vec![-4, -3], vec![-2, 3, -1], vec![4], vec![2], vec![1]])
                .unwrap();
        assert_eq!(shuffled, e1());
        assert_eq!(e1().to_string(), "[[1],[-1,-2,3],[2],[-3,-4],[4]]");
    }

    #[test]
    fn empty_diagram() {
        let d = Diagram::from_signed(0, Vec::<Vec<i64>>::new()).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.to_string(), "[]");
        assert_eq!("[]".parse::<Diagram>().unwrap(), Diagram::empty());
    }

    #[test]
    fn rejects_bad_blocks() {
        assert_eq!(
            Diagram::from_signed(1, vec![vec![1, -1], vec![1]]),
            Err(Error::OverlappingBlocks(1))
        );
        assert_eq!(Diagram::from_signed(1, vec![vec![1]]), Err(Error::MissingNode(-1)));
        assert_eq!(
            Diagram::from_signed(1, vec![vec![1, -1], vec![2]]),
            Err(Error::ColumnOutOfRange { column: 2, order: 1 })
        );
        assert_eq!(Diagram::from_signed(1, vec![vec![1, -1], vec![]]), Err(Error::EmptyBlock));
    }

    #[test]
    fn json_forms_agree() {
        let d = e1();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"order":4,"blocks":[[1],[-1,-2,3],[2],[-3,-4],[4]]}"#);
        assert_eq!(json.parse::<Diagram>().unwrap(), d);
        let back: Diagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn pi_line_shape() {
        assert_eq!(Diagram::pi_line(2).to_string(), "[[1],[-1,-2],[2]]");
        assert_eq!(Diagram::pi_line(1), Diagram::dot());
    }

    #[test]
    fn render_two_rows() {
        let pic = Diagram::bar().render();
        assert_eq!(pic, "top:    a\nbottom: a\n");
    }
}
