//! Permutations of {1,…,k} with cycle access, enumeration of the symmetric
//! group, and factorization streams σ1σ2 = π.

use crate::error::{Error, Result};

use super::partition::Partition;

/// A permutation of {1,…,k}, stored 0-based as an image table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// Builds from a 0-based image table; must be a bijection of {0,…,k−1}.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles given with 1-based entries; elements not
    /// mentioned are fixed points.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut seen = vec![false; k];
        for cyc in cycles {
            for w in 0..cyc.len() {
                let a = cyc[w];
                let b = cyc[(w + 1) % cyc.len()];
                if a == 0 || a > k || b == 0 || b > k || seen[a - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?}")));
                }
                seen[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The canonical permutation with cycle type π: consecutive blocks
    /// (1,…,π_1)(π_1+1,…,π_1+π_2)⋯.
    pub fn from_cycle_type(pi: &Partition) -> Self {
        let k = pi.size();
        let mut images: Vec<usize> = (0..k).collect();
        let mut start = 0;
        for &p in pi.parts() {
            for off in 0..p {
                images[start + off] = start + (off + 1) % p;
            }
            start += p;
        }
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point x.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// self ∘ other: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// Cycles as 0-based element lists, each starting at its minimum,
    /// ordered by minima. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.size();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let k = self.size();
        let mut seen = vec![false; k];
        let mut count = 0;
        for start in 0..k {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// (−1)^σ = (−1)^{k − #cycles}.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for cyc in self.cycles() {
            let s: Vec<String> = cyc.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

/// Number of orbits of ⟨σ1, σ2⟩ acting on {1,…,k}.
pub fn orbit_count(s1: &Permutation, s2: &Permutation) -> Result<usize> {
    if s1.size() != s2.size() {
        return Err(Error::SizeMismatch(format!(
            "|σ1| = {} vs |σ2| = {}",
            s1.size(),
            s2.size()
        )));
    }
    let mut uf = UnionFind::new(s1.size());
    for x in 0..s1.size() {
        uf.union(x, s1.apply(x));
        uf.union(x, s2.apply(x));
    }
    Ok(uf.count())
}

/// Streams all permutations of S_k in lexicographic order of image words.
pub fn permutations_of(k: usize) -> impl Iterator<Item = Permutation> {
    Lex {
        next: Some(Permutation::identity(k)),
    }
}

struct Lex {
    next: Option<Permutation>,
}

impl Iterator for Lex {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.images.clone();
        self.next = next_lex(&mut w).then_some(Permutation { images: w });
        Some(current)
    }
}

fn next_lex(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Streams the k! factorizations σ1σ2 = π as pairs (σ1, σ1^{-1}π), with σ1
/// running over S_k in lexicographic order.
pub fn factorizations(pi: &Permutation) -> impl Iterator<Item = (Permutation, Permutation)> + '_ {
    permutations_of(pi.size()).map(move |s1| {
        let s2 = s1.inverse().compose(pi);
        (s1, s2)
    })
}

/// Plain union–find over 0..n.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
