//! Exact integer helpers: factorials, falling powers, Stirling numbers,
//! odd double factorials, and the Stirling-sum evaluation of the gluing
//! constant C_m.

use num::{BigInt, BigRational, One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Falling power n^{↓k} = n(n−1)⋯(n−k+1).
pub fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).map(BigInt::from).product()
}

/// Stirling number of the second kind S(m, p).
pub fn stirling2(m: usize, p: usize) -> BigInt {
    if p > m {
        return BigInt::zero();
    }
    // row-by-row recurrence S(m,p) = p·S(m−1,p) + S(m−1,p−1)
    let mut row: Vec<BigInt> = vec![BigInt::one()]; // S(0,0)
    for _ in 1..=m {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (q, v) in row.iter().enumerate() {
            next[q] += BigInt::from(q) * v;
            next[q + 1] += v;
        }
        row = next;
    }
    row.into_iter().nth(p).unwrap_or_else(BigInt::zero)
}

/// Odd double factorial j!! for odd j ≥ −1, with (−1)!! = 1.
pub fn odd_double_factorial(j: i64) -> BigInt {
    assert!(j >= -1 && j % 2 != 0, "j!! needs odd j ≥ −1, got {j}");
    let mut v = BigInt::one();
    let mut t = 1i64;
    while t <= j {
        v *= BigInt::from(t);
        t += 2;
    }
    v
}

/// Evaluates the sum (−1) Σ_p S(m,p) (−1/2)^p (2p−3)!! exactly. The sum
/// collapses to 1/2^m, which the verification layer asserts.
pub fn stirling_identity_sum(m: usize) -> BigRational {
    assert!(m >= 1);
    let mut total = BigRational::zero();
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    for p in 1..=m {
        let term = BigRational::from(stirling2(m, p))
            * num::pow::pow(minus_half.clone(), p)
            * BigRational::from(odd_double_factorial(2 * p as i64 - 3));
        total += term;
    }
    -total
}

pub fn pow2_rational(exp: i64) -> BigRational {
    let two = BigInt::from(2);
    if exp >= 0 {
        BigRational::from(num::pow::pow(two, exp as usize))
    } else {
        BigRational::new(BigInt::one(), num::pow::pow(two, (-exp) as usize))
    }
}
