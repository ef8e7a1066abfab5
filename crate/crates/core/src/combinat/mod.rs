//! Index combinatorics: partitions, strict partitions, permutations, set
//! partitions, and the doubling constructions.
//!
//! All values are immutable after construction and safe to share across
//! threads. Enumeration functions return owned collections or single-consumer
//! iterators.

pub mod numbers;
pub mod partition;
pub mod permutation;
pub mod setpart;
pub mod strict;

pub use numbers::{
    factorial, falling, odd_double_factorial, pow2_rational, stirling2, stirling_identity_sum,
};
pub use partition::{odd_partitions_of, partitions_of, partitions_up_to, Partition};
pub use permutation::{factorizations, orbit_count, permutations_of, Permutation, UnionFind};
pub use setpart::{set_partitions, SetPartition};
pub use strict::{strict_partitions_of, Parity, StrictPartition};
