//! Coloring counts, the linear and spin Stanley character formulas, and
//! Stanley polynomials in multirectangular coordinates.

mod coloring;
mod poly;
mod rect;

pub use coloring::{coloring_count, coloring_count_graph, intersection_graph, BicoloredGraph};
pub use poly::{
    filtration_degree, stanley_polynomial_linear, stanley_polynomial_linear_top,
    stanley_polynomial_spin, stanley_polynomial_spin_top, StanleyPoly,
};
pub use rect::{MultiRect, ShiftedMultiRect};

use num::{BigInt, BigRational, Zero};
use rayon::prelude::*;

use crate::combinat::{factorizations, orbit_count, Partition, Permutation, StrictPartition};
use crate::error::{Error, Result};

/// Factorization sweeps beyond this size are split across the worker pool;
/// exact addition makes the reduction order-independent.
const PARALLEL_SWEEP_THRESHOLD: usize = 6;

fn sweep_factorizations<T>(pi_perm: &Permutation, term: T) -> BigInt
where
    T: Fn(&Permutation, &Permutation) -> BigInt + Sync,
{
    if pi_perm.size() < PARALLEL_SWEEP_THRESHOLD {
        let mut total = BigInt::zero();
        for (s1, s2) in factorizations(pi_perm) {
            total += term(&s1, &s2);
        }
        total
    } else {
        let pairs: Vec<(Permutation, Permutation)> = factorizations(pi_perm).collect();
        pairs
            .par_chunks(512)
            .map(|chunk| {
                let mut partial = BigInt::zero();
                for (s1, s2) in chunk {
                    partial += term(s1, s2);
                }
                partial
            })
            .reduce(BigInt::zero, |a, b| a + b)
    }
}

/// The linear Stanley character formula:
/// Ch_π(λ) = Σ_{σ1σ2 = π} (−1)^{σ1} N_{σ1,σ2}(λ).
pub fn ch_stanley_linear(pi: &Partition, lambda: &Partition) -> BigInt {
    let pi_perm = Permutation::from_cycle_type(pi);
    ch_stanley_linear_at(&pi_perm, lambda)
}

/// The same sum evaluated at an explicit permutation representative; the
/// result only depends on its cycle type.
pub fn ch_stanley_linear_at(pi_perm: &Permutation, lambda: &Partition) -> BigInt {
    sweep_factorizations(pi_perm, |s1, s2| {
        let n = coloring::coloring_count(s1, s2, lambda).expect("equal sizes");
        if s1.sign() >= 0 {
            n
        } else {
            -n
        }
    })
}

/// The spin Stanley character formula:
/// Ch^spin_π(ξ) = Σ_{σ1σ2 = π} 2^{−|σ1∨σ2|} (−1)^{σ1} N_{σ1,σ2}(D(ξ)).
pub fn ch_stanley_spin(pi: &Partition, xi: &StrictPartition) -> Result<BigRational> {
    if !pi.is_odd() {
        return Err(Error::NotOdd(pi.to_string()));
    }
    let pi_perm = Permutation::from_cycle_type(pi);
    ch_stanley_spin_at(&pi_perm, xi)
}

/// Spin Stanley sum at an explicit representative of an odd cycle type.
pub fn ch_stanley_spin_at(pi_perm: &Permutation, xi: &StrictPartition) -> Result<BigRational> {
    if !pi_perm.cycle_type().is_odd() {
        return Err(Error::NotOdd(pi_perm.cycle_type().to_string()));
    }
    let k = pi_perm.size();
    let double = xi.double();
    // every term is scaled by 2^k so the accumulation stays integral
    let total = sweep_factorizations(pi_perm, |s1, s2| {
        let n = coloring::coloring_count(s1, s2, &double).expect("equal sizes");
        if n.is_zero() {
            return n;
        }
        let orbits = orbit_count(s1, s2).expect("equal sizes");
        let term = n * num::pow::pow(BigInt::from(2), k - orbits);
        if s1.sign() >= 0 {
            term
        } else {
            -term
        }
    });
    Ok(BigRational::new(total, num::pow::pow(BigInt::from(2), k)))
}
