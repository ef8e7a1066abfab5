//! Multirectangular coordinates for partitions and strict partitions, and
//! the coordinate transformation that realizes D(𝐏⊠𝐐) = P×Q.

use crate::combinat::{Partition, StrictPartition};
use crate::error::{Error, Result};

/// Multirectangular coordinates P×Q: heights p_i ≥ 0 and weakly decreasing
/// widths q_1 ≥ … ≥ q_l ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiRect {
    p: Vec<usize>,
    q: Vec<usize>,
}

impl MultiRect {
    pub fn new(p: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::InvalidCoordinates(format!(
                "lengths differ: {} vs {}",
                p.len(),
                q.len()
            )));
        }
        if !q.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCoordinates(format!(
                "q not weakly decreasing: {q:?}"
            )));
        }
        Ok(MultiRect { p, q })
    }

    pub fn heights(&self) -> &[usize] {
        &self.p
    }

    pub fn widths(&self) -> &[usize] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// The partition with q_i repeated p_i times.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&h, &w) in self.p.iter().zip(&self.q) {
            for _ in 0..h {
                parts.push(w);
            }
        }
        Partition::new(parts)
    }
}

/// Shifted multirectangular coordinates 𝐏⊠𝐐 for strict partitions:
/// 𝐩_i ≥ 0 with 𝐪_{i+1} ≤ 𝐪_i − 𝐩_i and 0 ≤ 𝐪_l − 𝐩_l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedMultiRect {
    p: Vec<usize>,
    q: Vec<usize>,
}

impl ShiftedMultiRect {
    pub fn new(p: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::InvalidCoordinates(format!(
                "lengths differ: {} vs {}",
                p.len(),
                q.len()
            )));
        }
        let l = p.len();
        for i in 0..l {
            let floor = if i + 1 < l { q[i + 1] } else { 0 };
            if q[i] < p[i] + floor {
                return Err(Error::InvalidCoordinates(format!(
                    "staircase constraint violated at block {}: q = {q:?}, p = {p:?}",
                    i + 1
                )));
            }
        }
        Ok(ShiftedMultiRect { p, q })
    }

    pub fn heights(&self) -> &[usize] {
        &self.p
    }

    pub fn widths(&self) -> &[usize] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// The strict partition with parts 𝐪_i, 𝐪_i − 1, …, 𝐪_i − 𝐩_i + 1 per
    /// block.
    pub fn to_strict(&self) -> StrictPartition {
        let mut parts = Vec::new();
        for (&h, &w) in self.p.iter().zip(&self.q) {
            for j in 0..h {
                parts.push(w - j);
            }
        }
        StrictPartition::new(parts).expect("staircase constraints imply strictness")
    }

    /// The 2l-block multirectangular coordinates of the double:
    /// to_partition of the result equals D(to_strict of the input).
    pub fn double_coordinates(&self) -> MultiRect {
        let (p, q) = double_coordinate_rows(self.heights(), self.widths(), true);
        MultiRect::new(p, q).expect("transformed q is weakly decreasing")
    }

    /// Homogeneous variant of the same substitution (the degree-1 part,
    /// without the +1 shifts): realizes D_over(𝐏⊠𝐐) = P×Q.
    pub fn overlap_double_coordinates(&self) -> MultiRect {
        let (p, q) = double_coordinate_rows(self.heights(), self.widths(), false);
        MultiRect::new(p, q).expect("transformed q is weakly decreasing")
    }
}

/// The row substitutions shared by the exact and homogeneous transforms:
///   p_i = 𝐩_i,                    q_i = 𝐩_1+…+𝐩_{i−1} + 𝐪_i (+1)
///   p_{l+1} = 𝐪_l − 𝐩_l,          q_{l+1} = 𝐩_1+…+𝐩_l
///   p_{l+j} = 𝐪_{l−j+1} − 𝐪_{l−j+2} − 𝐩_{l−j+1},  q_{l+j} = 𝐩_1+…+𝐩_{l−j+1}
pub fn double_coordinate_rows(
    bp: &[usize],
    bq: &[usize],
    with_shift: bool,
) -> (Vec<usize>, Vec<usize>) {
    let l = bp.len();
    let shift = usize::from(with_shift);
    let prefix: Vec<usize> = std::iter::once(0)
        .chain(bp.iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        }))
        .collect(); // prefix[i] = 𝐩_1+…+𝐩_i
    let mut p = Vec::with_capacity(2 * l);
    let mut q = Vec::with_capacity(2 * l);
    for i in 0..l {
        p.push(bp[i]);
        q.push(prefix[i] + bq[i] + shift);
    }
    for j in 1..=l {
        let i = l - j; // 0-based block l−j+1
        if j == 1 {
            p.push(bq[l - 1] - bp[l - 1]);
        } else {
            p.push(bq[i] - bq[i + 1] - bp[i]);
        }
        q.push(prefix[i + 1]);
    }
    (p, q)
}
