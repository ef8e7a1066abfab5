//! Strict partitions (pairwise distinct parts) and the doubling constructions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::partition::Partition;

/// Parity class of a strict partition: "+" iff |ξ| − ℓ(ξ) is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Plus,
    Minus,
}

/// A strict partition ξ = (ξ_1 > ξ_2 > … > ξ_ℓ ≥ 1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not strictly decreasing: {parts:?}"
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, r: usize) -> usize {
        if r >= 1 && r <= self.parts.len() {
            self.parts[r - 1]
        } else {
            0
        }
    }

    pub fn parity(&self) -> Parity {
        if (self.size() - self.len()).is_multiple_of(2) {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }

    /// Forgets strictness.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts.clone())
    }

    /// The double D(ξ): the shifted diagram of ξ and its transpose joined
    /// along the diagonal, i.e. the partition with Frobenius coordinates
    /// (ξ_i | ξ_i − 1). Satisfies |D(ξ)| = 2|ξ|.
    pub fn double(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let arms = self.parts.clone();
        let legs: Vec<usize> = self.parts.iter().map(|&p| p - 1).collect();
        Partition::from_frobenius(&arms, &legs)
    }

    /// The overlap double D_over(ξ): shifted diagram and transpose sharing
    /// the diagonal boxes. Satisfies |D_over(ξ)| = 2|ξ| − ℓ(ξ).
    pub fn overlap_double(&self) -> Partition {
        let d = self.len();
        let mut rows: Vec<usize> = (1..=d).map(|i| self.part(i) + i - 1).collect();
        // Column lengths below the diagonal coincide with those of D(ξ).
        let max_row = self.part(1); // ξ_1 − 1 + 1
        for r in d + 1..=max_row {
            let count = (1..=d).filter(|&i| self.part(i) + i > r).count();
            if count == 0 {
                break;
            }
            rows.push(count);
        }
        Partition::new(rows)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: Partition = s.parse()?;
        StrictPartition::new(p.parts().to_vec())
    }
}

/// All strict partitions of n, descending lexicographic order.
pub fn strict_partitions_of(n: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
    if remaining == 0 {
        out.push(StrictPartition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        let next_max = p.saturating_sub(1);
        fill(remaining - p, next_max, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    /// Diagram-overlay oracle: builds the box set of the shifted diagram,
    /// shifts columns by one (or not, for the overlap variant), unions with
    /// the transpose, and reads off row lengths.
    fn overlay(xi: &StrictPartition, overlap: bool) -> Partition {
        let shift = if overlap { 0 } else { 1 };
        let mut boxes = std::collections::HashSet::new();
        for (i, &p) in xi.parts().iter().enumerate() {
            let r = i + 1;
            for c in r..r + p {
                boxes.insert((r, c + shift));
                boxes.insert((c, r));
            }
        }
        let max_row = boxes.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let rows: Vec<usize> = (1..=max_row)
            .map(|r| boxes.iter().filter(|&&(br, _)| br == r).count())
            .collect();
        Partition::new(rows)
    }

    #[test]
    fn double_examples() {
        assert_eq!(xi(&[6, 5, 2]).double(), Partition::new(vec![7, 7, 5, 3, 2, 2]));
        assert_eq!(StrictPartition::empty().double(), Partition::empty());
        assert_eq!(xi(&[2, 1]).double(), overlay(&xi(&[2, 1]), false));
        assert_eq!(xi(&[2, 1]).double(), Partition::new(vec![3, 3]));
    }

    #[test]
    fn overlap_double_examples() {
        assert_eq!(
            xi(&[6, 5, 2]).overlap_double(),
            Partition::new(vec![6, 6, 4, 3, 2, 2])
        );
        assert_eq!(xi(&[1]).overlap_double(), Partition::new(vec![1]));
        // |D_over((2,1))| = 2·3 − 2 = 4, so the diagram gives (2,2).
        assert_eq!(xi(&[2, 1]).overlap_double(), Partition::new(vec![2, 2]));
        assert_eq!(xi(&[2, 1]).overlap_double(), overlay(&xi(&[2, 1]), true));
    }

    #[test]
    fn doubles_match_overlay_oracle() {
        for n in 0..=12 {
            for x in strict_partitions_of(n) {
                assert_eq!(x.double(), overlay(&x, false), "D({x})");
                assert_eq!(x.overlap_double(), overlay(&x, true), "D_over({x})");
                assert_eq!(x.double().size(), 2 * n);
                assert_eq!(x.overlap_double().size(), 2 * n - x.len());
            }
        }
    }

    #[test]
    fn double_frobenius_symmetry() {
        for n in 0..=12 {
            for x in strict_partitions_of(n) {
                let (arms, legs) = x.double().frobenius();
                assert_eq!(arms, x.parts().to_vec());
                let want_legs: Vec<usize> = x.parts().iter().map(|&p| p - 1).collect();
                assert_eq!(legs, want_legs);
            }
        }
    }

    #[test]
    fn parity_classes() {
        assert_eq!(xi(&[2, 1]).parity(), Parity::Minus); // 3 − 2 = 1
        assert_eq!(xi(&[3, 1]).parity(), Parity::Plus); // 4 − 2 = 2
        assert_eq!(StrictPartition::empty().parity(), Parity::Plus);
    }

    #[test]
    fn enumeration_counts() {
        // strict partition counts q(0..10) = 1,1,1,2,2,3,4,5,6,8,10
        let expected = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(strict_partitions_of(n).len(), *want);
        }
    }

    #[test]
    fn rejects_non_strict() {
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!("3,3".parse::<StrictPartition>().is_err());
    }
}
