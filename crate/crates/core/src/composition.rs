//! Compositions: finite sequences of positive integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn new_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|α|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l(α)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Last part; 0 for the empty composition.
    pub fn lp(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// `α·β`
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `α⊙β`: concatenation adding the adjacent parts.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::InvalidComposition("near concatenation needs non-empty arguments".into()));
        }
        let mut parts = self.0.clone();
        *parts.last_mut().expect("non-empty") += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// Partial sums, excluding the total.
    fn descents(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len());
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// `self ≤ other`: `other` is obtained by adding adjacent parts of `self`.
    pub fn refines(&self, other: &Composition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mine = self.descents();
        other.descents().iter().all(|d| mine.contains(d))
    }

    /// The pieces `α^(1), …, α^(l(β))` of `self` whose sizes are the parts of `β`.
    pub fn split_along(&self, beta: &Composition) -> Result<Vec<Composition>> {
        if !self.refines(beta) {
            return Err(Error::InvalidComposition(format!("{self} does not refine {beta}")));
        }
        let mut pieces = Vec::with_capacity(beta.len());
        let mut parts = self.0.iter();
        for &target in &beta.0 {
            let mut piece = Vec::new();
            let mut sum = 0;
            while sum < target {
                let p = *parts.next().expect("refinement checked");
                sum += p;
                piece.push(p);
            }
            pieces.push(Composition(piece));
        }
        Ok(pieces)
    }

    /// All `β` with `self ≤ β`, in sorted order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::empty()];
        }
        let gaps = self.0.len() - 1;
        let mut out = Vec::with_capacity(1 << gaps);
        for mask in 0u64..(1u64 << gaps) {
            let mut parts = vec![self.0[0]];
            for (i, &p) in self.0[1..].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    *parts.last_mut().expect("non-empty") += p;
                } else {
                    parts.push(p);
                }
            }
            out.push(Composition(parts));
        }
        out.sort();
        out
    }

    /// Every composition of `n`, sorted.
    pub fn all_of_size(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        Composition(vec![1; n]).coarsenings()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `[2,1]` or `(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::Parse(format!("not a composition: {s}")))?;
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|e| Error::Parse(format!("{p}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn concatenations() {
        assert_eq!(c(&[2]).concat(&c(&[1, 1])), c(&[2, 1, 1]));
        assert_eq!(c(&[2]).near_concat(&c(&[1, 1])).unwrap(), c(&[3, 1]));
        assert!(c(&[2]).near_concat(&Composition::empty()).is_err());
    }

    #[test]
    fn splitting() {
        assert_eq!(c(&[1, 2, 1]).split_along(&c(&[3, 1])).unwrap(), vec![c(&[1, 2]), c(&[1])]);
        assert!(c(&[2, 2]).split_along(&c(&[1, 3])).is_err());
    }

    #[test]
    fn refinement_and_coarsening() {
        assert!(c(&[1, 1]).refines(&c(&[2])));
        assert!(!c(&[2]).refines(&c(&[1, 1])));
        assert_eq!(c(&[1, 1]).coarsenings(), vec![c(&[1, 1]), c(&[2])]);
        assert_eq!(Composition::all_of_size(3).len(), 4);
    }

    #[test]
    fn last_part() {
        assert_eq!(c(&[1, 3]).lp(), 3);
        assert_eq!(Composition::empty().lp(), 0);
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("(2,1)".parse::<Composition>().unwrap(), c(&[2, 1]));
        assert_eq!("[]".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(serde_json::to_string(&c(&[2, 1])).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Composition>("[0]").is_err());
    }
}
