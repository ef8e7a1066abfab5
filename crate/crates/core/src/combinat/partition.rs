//! Integer partitions in canonical form (weakly decreasing, no zero parts).

use std::fmt;
use std::str::FromStr;

use num::BigInt;

use crate::error::{Error, Result};

/// An integer partition λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ ≥ 1).
///
/// The empty partition is valid and has size 0. Equality is structural and
/// the canonical form stores no trailing zeros, so partitions can be used as
/// map keys directly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary parts: zeros are dropped and the
    /// rest is sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n), or the empty partition for n = 0.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The column (1^n).
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row r (1-based), or 0 past the last row.
    pub fn part(&self, r: usize) -> usize {
        if r >= 1 && r <= self.parts.len() {
            self.parts[r - 1]
        } else {
            0
        }
    }

    /// True iff the box with 1-based coordinates (column c, row r) lies in λ.
    pub fn contains_box(&self, c: usize, r: usize) -> bool {
        c >= 1 && c <= self.part(r)
    }

    /// The transposed diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p >= c).count());
        }
        Partition { parts }
    }

    /// Multiplicity m_j of the part j.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// z_λ = Π_j j^{m_j} m_j!, the centralizer order of the conjugacy class.
    pub fn zee(&self) -> BigInt {
        let mut z = BigInt::from(1u32);
        let mut i = 0;
        while i < self.parts.len() {
            let j = self.parts[i];
            let mut m = 0usize;
            while i < self.parts.len() && self.parts[i] == j {
                m += 1;
                i += 1;
            }
            for t in 1..=m {
                z *= BigInt::from(j) * BigInt::from(t);
            }
        }
        z
    }

    /// True iff every part is odd.
    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// True iff the parts are pairwise distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Whether the preimage of the conjugacy class C_λ splits into a pair of
    /// conjugacy classes of the spin double cover: true iff all parts are
    /// odd, or the parts are strictly decreasing with |λ| − ℓ(λ) odd.
    pub fn splits_in_spin_group(&self) -> bool {
        self.is_odd() || (self.is_strict() && (self.size() - self.len()) % 2 == 1)
    }

    /// Multiset union λ ∪ μ (parts merged and re-sorted).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// λ ∪ 1^{total − |λ|}: pads with fixed points up to the given size.
    pub fn with_fixed_points(&self, total: usize) -> Partition {
        assert!(total >= self.size(), "cannot pad {self} down to {total}");
        let mut parts = self.parts.clone();
        parts.resize(parts.len() + (total - self.size()), 1);
        Partition { parts }
    }

    /// Frobenius coordinates (a_1,…,a_d | b_1,…,b_d): a_i = λ_i − i arm
    /// lengths and b_i = λ'_i − i leg lengths along the diagonal.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 1..=self.len() {
            if self.part(i) >= i {
                arms.push(self.part(i) - i);
                legs.push(conj.part(i) - i);
            } else {
                break;
            }
        }
        (arms, legs)
    }

    /// Partition reconstructed from Frobenius coordinates.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Partition {
        assert_eq!(arms.len(), legs.len());
        let d = arms.len();
        let mut parts: Vec<usize> = (0..d).map(|i| arms[i] + i + 1).collect();
        let max_row = legs.first().map_or(0, |&b| b + 1);
        for r in d + 1..=max_row {
            let count = (0..d).filter(|&i| legs[i] + i + 1 >= r).count();
            if count == 0 {
                break;
            }
            parts.push(count);
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?} in {s:?}")))?;
            if p == 0 {
                return Err(Error::InvalidPartition(format!("zero part in {s:?}")));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing in {s:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

/// All partitions of n, in descending lexicographic order, (n) first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out, |_| true);
    out
}

/// Partitions of n with all parts odd, descending lexicographic order.
pub fn odd_partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out, |p| p % 2 == 1);
    out
}

/// All partitions of every m ≤ n, smaller sizes first.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn fill(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
    admissible: impl Fn(usize) -> bool + Copy,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        if admissible(p) {
            current.push(p);
            fill(remaining - p, p, current, out, admissible);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // columns of (7,7,5,3,2,2): 6,6,4,3,3,2,2 (size stays 26)
        assert_eq!(
            p(&[7, 7, 5, 3, 2, 2]).conjugate(),
            p(&[6, 6, 4, 3, 3, 2, 2])
        );
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn zee_examples() {
        assert_eq!(p(&[1]).zee(), BigInt::from(1));
        assert_eq!(p(&[2, 2, 1]).zee(), BigInt::from(8));
        assert_eq!(p(&[3, 1, 1]).zee(), BigInt::from(6));
        // z summed over a conjugacy class: Σ_{λ⊢n} n!/z_λ = n!·p(n)/... sanity
        // via the class equation Σ 1/z_λ · n! = number of permutations = n!.
        for n in 0..=8 {
            let mut total = BigInt::from(0);
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            for lam in partitions_of(n) {
                let z = lam.zee();
                assert_eq!(&fact % &z, BigInt::from(0));
                total += &fact / z;
            }
            assert_eq!(total, fact.max(BigInt::from(1)));
        }
    }

    #[test]
    fn splits_examples() {
        assert!(p(&[3, 1, 1]).splits_in_spin_group());
        assert!(!p(&[2, 2]).splits_in_spin_group());
        assert!(p(&[2, 1]).splits_in_spin_group());
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["7,7,5,3,2,2", "-", "1", "4,2,2,1"] {
            let lam: Partition = s.parse().unwrap();
            assert_eq!(lam.to_string(), s);
        }
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), *want);
        }
        // odd partitions of n = strict partitions of n (Euler)
        assert_eq!(odd_partitions_of(10).len(), 10);
    }

    #[test]
    fn frobenius_round_trip() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                let (a, b) = lam.frobenius();
                assert_eq!(Partition::from_frobenius(&a, &b), lam);
            }
        }
    }
}
