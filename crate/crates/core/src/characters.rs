//! Irreducible linear characters χ^λ(π), spin characters X^ξ(π), dimensions
//! f^λ and g^ξ, and the normalized characters Ch_π and Ch^spin_π.
//!
//! Character tables are memoized per size behind locks; once built, lookups
//! are cheap and the tables are shared across threads.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num::{BigInt, BigRational, One, Zero};

use crate::combinat::{
    factorial, falling, odd_partitions_of, strict_partitions_of, Partition, StrictPartition,
};
use crate::error::{Error, Result};
use crate::symfunc;

type ChiKey = (Partition, Vec<usize>);

static CHI_MEMO: LazyLock<RwLock<HashMap<ChiKey, BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

static FDIM_MEMO: LazyLock<RwLock<HashMap<Partition, BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// χ^λ(π): the irreducible linear character of S_n indexed by λ, evaluated
/// on the conjugacy class π, via the Murnaghan–Nakayama recursion.
pub fn chi(lambda: &Partition, pi: &Partition) -> Result<BigInt> {
    if lambda.size() != pi.size() {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |π| = {}",
            lambda.size(),
            pi.size()
        )));
    }
    // Strips for parts ≥ 2 are removed largest-first; the all-ones tail is
    // resolved by the hook-length dimension of what remains.
    let core: Vec<usize> = pi.parts().iter().copied().filter(|&p| p >= 2).collect();
    Ok(chi_rec(lambda, &core))
}

fn chi_rec(lambda: &Partition, core: &[usize]) -> BigInt {
    if core.is_empty() {
        return f_dim(lambda);
    }
    let key = (lambda.clone(), core.to_vec());
    if let Some(hit) = CHI_MEMO.read().unwrap().get(&key) {
        return hit.clone();
    }

    let r = core[0];
    let rest = &core[1..];
    let m = lambda.len();
    // beta numbers β_i = λ_i + (m − i), strictly decreasing
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i0, &p)| p + (m - 1 - i0))
        .collect();
    let mut total = BigInt::zero();
    for (i0, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        // height of the strip = number of beta values passed over
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i0] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(j0, &x)| x - (m - 1 - j0))
            .collect();
        let reduced = Partition::new(parts);
        let sub = chi_rec(&reduced, rest);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }

    CHI_MEMO.write().unwrap().insert(key, total.clone());
    total
}

/// f^λ = χ^λ(1^n): the number of standard Young tableaux of shape λ, by the
/// hook-length formula.
pub fn f_dim(lambda: &Partition) -> BigInt {
    if let Some(hit) = FDIM_MEMO.read().unwrap().get(lambda) {
        return hit.clone();
    }
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for r in 1..=lambda.len() {
        for c in 1..=lambda.part(r) {
            let hook = (lambda.part(r) - c) + (conj.part(c) - r) + 1;
            hooks *= BigInt::from(hook);
        }
    }
    let value = factorial(n) / hooks;
    FDIM_MEMO
        .write()
        .unwrap()
        .insert(lambda.clone(), value.clone());
    value
}

/// g^ξ = X^ξ(1^n): the number of standard shifted tableaux, by the closed
/// form n!/(Π ξ_i!) · Π_{i<j} (ξ_i − ξ_j)/(ξ_i + ξ_j).
pub fn g_dim(xi: &StrictPartition) -> BigInt {
    let n = xi.size();
    let mut value = BigRational::from(factorial(n));
    for &p in xi.parts() {
        value /= BigRational::from(factorial(p));
    }
    let parts = xi.parts();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            value *= BigRational::new(
                BigInt::from(parts[i] - parts[j]),
                BigInt::from(parts[i] + parts[j]),
            );
        }
    }
    assert!(value.is_integer(), "g^{xi} not integral: {value}");
    value.to_integer()
}

/// The spin character table for a fixed size n: values X^ξ(π) for ξ ∈ SP_n
/// and π ∈ OP_n, defined by the expansion p_π = Σ_ξ X^ξ(π) P_ξ.
pub struct SpinTable {
    pub n: usize,
    pub strict: Vec<StrictPartition>,
    pub odd: Vec<Partition>,
    values: Vec<Vec<BigInt>>, // values[ξ index][π index]
    strict_index: HashMap<StrictPartition, usize>,
    odd_index: HashMap<Partition, usize>,
}

impl SpinTable {
    pub fn value(&self, xi: &StrictPartition, pi: &Partition) -> Option<&BigInt> {
        let i = *self.strict_index.get(xi)?;
        let j = *self.odd_index.get(pi)?;
        Some(&self.values[i][j])
    }
}

static SPIN_TABLES: LazyLock<RwLock<HashMap<usize, Arc<SpinTable>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Builds (or fetches) the spin character table of size n.
pub fn spin_table(n: usize) -> Arc<SpinTable> {
    if let Some(hit) = SPIN_TABLES.read().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let table = Arc::new(build_spin_table(n));
    SPIN_TABLES
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&table))
        .clone()
}

fn build_spin_table(n: usize) -> SpinTable {
    let strict = strict_partitions_of(n);
    let odd = odd_partitions_of(n);
    let m = strict.len();
    assert_eq!(m, odd.len(), "|SP_n| = |OP_n| must hold");
    let odd_index: HashMap<Partition, usize> =
        odd.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

    // matrix[ν][ξ] = coefficient of p_ν in P_ξ; the system p_π = Σ X^ξ(π) P_ξ
    // is solved for every π at once by inverting the matrix.
    let mut matrix = vec![vec![BigRational::zero(); m]; m];
    for (col, xi) in strict.iter().enumerate() {
        let p_xi = symfunc::schur_p(xi);
        for (mu, c) in p_xi.terms() {
            let row = *odd_index
                .get(mu)
                .unwrap_or_else(|| panic!("P_{xi} has support outside OP_n at {mu}"));
            matrix[row][col] = c.clone();
        }
    }
    let inverse = invert(matrix);

    let mut values = Vec::with_capacity(m);
    for (i, xi) in strict.iter().enumerate() {
        let mut row = Vec::with_capacity(m);
        for (j, pi) in odd.iter().enumerate() {
            let v = &inverse[i][j];
            assert!(v.is_integer(), "X^{xi}({pi}) not integral: {v}");
            row.push(v.to_integer());
        }
        values.push(row);
    }

    let strict_index = strict
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    SpinTable {
        n,
        strict,
        odd,
        values,
        strict_index,
        odd_index,
    }
}

/// Gauss–Jordan inversion over the rationals.
fn invert(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let m = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .expect("P-expansion matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..m {
            a[col][j] *= &scale;
            inv[col][j] *= &scale;
        }
        for r in 0..m {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..m {
                let t = &factor * &a[col][j];
                a[r][j] -= t;
                let t = &factor * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    inv
}

/// X^ξ(π): the coefficient of P_ξ in the P-basis expansion of p_π.
/// Requires |ξ| = |π| and π odd.
pub fn spin_x(xi: &StrictPartition, pi: &Partition) -> Result<BigInt> {
    if xi.size() != pi.size() {
        return Err(Error::SizeMismatch(format!(
            "|ξ| = {} but |π| = {}",
            xi.size(),
            pi.size()
        )));
    }
    if !pi.is_odd() {
        return Err(Error::NotOdd(pi.to_string()));
    }
    let table = spin_table(pi.size());
    Ok(table
        .value(xi, pi)
        .expect("ξ and π indexed by the table")
        .clone())
}

/// The normalized linear character Ch_π(λ): n^{↓k} χ^λ(π ∪ 1^{n−k})/χ^λ(1^n)
/// when n = |λ| ≥ k = |π|, and 0 otherwise.
pub fn ch_normalized(pi: &Partition, lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let k = pi.size();
    if n < k {
        return BigInt::zero();
    }
    let padded = pi.with_fixed_points(n);
    let numer = chi(lambda, &padded).expect("sizes match");
    let value = BigRational::new(falling(n, k) * numer, f_dim(lambda));
    assert!(value.is_integer(), "Ch_{pi}({lambda}) not integral: {value}");
    value.to_integer()
}

/// The normalized spin character Ch^spin_π(ξ): n^{↓k} X^ξ(π ∪ 1^{n−k})/X^ξ(1^n)
/// when n = |ξ| ≥ k = |π|, and 0 otherwise. Requires π odd.
pub fn ch_spin_normalized(pi: &Partition, xi: &StrictPartition) -> Result<BigRational> {
    if !pi.is_odd() {
        return Err(Error::NotOdd(pi.to_string()));
    }
    let n = xi.size();
    let k = pi.size();
    if n < k {
        return Ok(BigRational::zero());
    }
    let padded = pi.with_fixed_points(n);
    let table = spin_table(n);
    let numer = table.value(xi, &padded).expect("padded π is odd").clone();
    let denom = table
        .value(xi, &Partition::column(n))
        .expect("1^n is odd")
        .clone();
    Ok(BigRational::new(falling(n, k) * numer, denom))
}

/// Pulls a function on partitions back to strict partitions through the
/// doubling map: (D*F)(ξ) = F(D(ξ)).
pub fn pullback_double<F>(f: F) -> impl Fn(&StrictPartition) -> BigRational
where
    F: Fn(&Partition) -> BigRational,
{
    move |xi| f(&xi.double())
}
