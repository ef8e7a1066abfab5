//! Exact symmetric-function algebra in the power-sum basis.
//!
//! A [`SymFunc`] is a finite rational linear combination of power-sum
//! monomials p_μ. The module provides the ring operations, Schur functions
//! through the Frobenius character formula, Schur Q- and P-functions through
//! the one-row generating series and the Pfaffian-style two-row recursion,
//! the halving homomorphism φ, and a monomial-expansion oracle used by the
//! test layer.

mod varpoly;

pub use varpoly::VarPoly;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num::{BigInt, BigRational, One, Zero};

use crate::characters;
use crate::combinat::{partitions_of, Partition, StrictPartition};

/// A symmetric function stored as a map from power-sum index μ to its exact
/// rational coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::term(Partition::empty(), BigRational::one())
    }

    /// The power-sum monomial p_μ.
    pub fn p(mu: Partition) -> Self {
        SymFunc::term(mu, BigRational::one())
    }

    /// The single power sum p_r.
    pub fn p_single(r: usize) -> Self {
        SymFunc::p(Partition::row(r))
    }

    pub fn term(mu: Partition, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mu, coeff);
        }
        SymFunc { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximal graded degree |μ| over stored terms; 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|mu| mu.size()).max().unwrap_or(0)
    }

    /// True iff every term has graded degree d.
    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|mu| mu.size() == d)
    }

    /// The graded component of degree d.
    pub fn homogeneous_component(&self, d: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.size() == d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_assign_term(&mut self, mu: Partition, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_assign_term(mu.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&BigRational::from(BigInt::from(-1))))
    }

    pub fn scale(&self, factor: &BigRational) -> SymFunc {
        if factor.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.clone(), c * factor))
                .collect(),
        }
    }

    /// Ring product; on basis elements p_μ · p_ν = p_{μ∪ν}.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                out.add_assign_term(mu.union(nu), &(a * b));
            }
        }
        out
    }

    /// Substitutes p_r ↦ x_1^r + … + x_N^r and expands into an ordinary
    /// polynomial in N commuting variables. Test oracle; faithful on
    /// homogeneous functions of degree ≤ N.
    pub fn expand_in_variables(&self, nvars: usize) -> VarPoly {
        let mut out = VarPoly::zero(nvars);
        for (mu, c) in &self.terms {
            let mut prod = VarPoly::constant(nvars, c.clone());
            for &r in mu.parts() {
                prod = prod.mul(&VarPoly::power_sum(nvars, r));
            }
            out = out.add(&prod);
        }
        out
    }

    /// Serializes as a list of {mu, coeff} records sorted by graded-lex on μ.
    pub fn to_json(&self) -> serde_json::Value {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| (a.size(), a.parts()).cmp(&(b.size(), b.parts())));
        serde_json::Value::Array(
            keys.into_iter()
                .map(|mu| {
                    serde_json::json!({
                        "mu": mu.to_string(),
                        "coeff": self.terms[mu].to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl std::fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}·p[{}]", c, mu)?;
        }
        Ok(())
    }
}

/// The algebra homomorphism φ with φ(p_r) = 2p_r for odd r and 0 for even r:
/// a term p_μ maps to 2^{ℓ(μ)} p_μ when all parts of μ are odd, else to 0.
pub fn phi(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in f.terms() {
        if mu.is_odd() {
            let factor = BigRational::from(num::pow::pow(BigInt::from(2), mu.len()));
            out.add_assign_term(mu.clone(), &(c * factor));
        }
    }
    out
}

/// Schur function s_μ through the Frobenius formula
/// s_μ = Σ_{π ⊢ |μ|} z_π^{-1} χ^μ(π) p_π.
pub fn schur_s(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let mut out = SymFunc::zero();
    for pi in partitions_of(n) {
        let chi = characters::chi(mu, &pi).expect("sizes match");
        if chi.is_zero() {
            continue;
        }
        let coeff = BigRational::new(chi, pi.zee());
        out.add_assign_term(pi, &coeff);
    }
    out
}

/// One-row Schur Q-function: the coefficient of t^a in
/// exp(2 Σ_{r odd} p_r t^r / r). Q_0 = 1.
pub fn schur_q_one_row(a: usize) -> SymFunc {
    // truncated series in t with SymFunc coefficients, degrees 0..=a
    let mut gen = vec![SymFunc::zero(); a + 1];
    let mut r = 1;
    while r <= a {
        gen[r] = SymFunc::term(
            Partition::row(r),
            BigRational::new(BigInt::from(2), BigInt::from(r)),
        );
        r += 2;
    }
    let mut result = vec![SymFunc::zero(); a + 1];
    result[0] = SymFunc::one();
    let mut term = result.clone(); // g^j / j!, starting at j = 0
    for j in 1..=a {
        let mut next = vec![SymFunc::zero(); a + 1];
        for (d1, f) in term.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (d2, g) in gen.iter().enumerate() {
                if d1 + d2 > a || g.is_zero() {
                    continue;
                }
                next[d1 + d2] = next[d1 + d2].add(&f.mul(g));
            }
        }
        let inv_j = BigRational::new(BigInt::one(), BigInt::from(j));
        for entry in next.iter_mut() {
            *entry = entry.scale(&inv_j);
        }
        for (d, f) in next.iter().enumerate() {
            result[d] = result[d].add(f);
        }
        term = next;
    }
    result.swap_remove(a)
}

/// Two-row rule Q_{(a,b)} = Q_a Q_b + 2 Σ_{i=1}^{b} (−1)^i Q_{a+i} Q_{b−i},
/// valid for a > b ≥ 0.
fn schur_q_two_row(a: usize, b: usize) -> SymFunc {
    let mut out = schur_q_one_row(a).mul(&schur_q_one_row(b));
    for i in 1..=b {
        let prod = schur_q_one_row(a + i).mul(&schur_q_one_row(b - i));
        let sign = if i % 2 == 1 { -2 } else { 2 };
        out = out.add(&prod.scale(&BigRational::from(BigInt::from(sign))));
    }
    out
}

static Q_CACHE: LazyLock<RwLock<HashMap<StrictPartition, Arc<SymFunc>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Schur Q-function Q_ξ. One row uses the generating series, two rows the
/// classical rule, and longer strict partitions the recursive Laplace
/// expansion of the Pfaffian over two-row blocks (padding with a zero part
/// when the length is odd). The result is homogeneous of degree |ξ| and
/// supported on odd-part power sums.
pub fn schur_q(xi: &StrictPartition) -> Arc<SymFunc> {
    if let Some(hit) = Q_CACHE.read().unwrap().get(xi) {
        return Arc::clone(hit);
    }
    let value = compute_q(xi);
    let arc = Arc::new(value);
    Q_CACHE
        .write()
        .unwrap()
        .entry(xi.clone())
        .or_insert_with(|| Arc::clone(&arc))
        .clone()
}

fn compute_q(xi: &StrictPartition) -> SymFunc {
    let parts = xi.parts();
    match parts.len() {
        0 => SymFunc::one(),
        1 => schur_q_one_row(parts[0]),
        2 => schur_q_two_row(parts[0], parts[1]),
        _ => {
            // pad to even length with a zero part, then expand the Pfaffian
            // along its first row
            let mut padded = parts.to_vec();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            let len = padded.len();
            let mut out = SymFunc::zero();
            for j in 1..len {
                let block = schur_q_two_row(padded[0], padded[j]);
                let rest: Vec<usize> = (1..len)
                    .filter(|&t| t != j)
                    .map(|t| padded[t])
                    .filter(|&p| p > 0)
                    .collect();
                let rest = StrictPartition::new(rest).expect("subsequence stays strict");
                let prod = block.mul(&schur_q(&rest));
                // Laplace signs alternate +, −, +, … along the first row
                if j % 2 == 1 {
                    out = out.add(&prod);
                } else {
                    out = out.sub(&prod);
                }
            }
            out
        }
    }
}

/// Schur P-function P_ξ = 2^{−ℓ(ξ)} Q_ξ.
pub fn schur_p(xi: &StrictPartition) -> SymFunc {
    let q = schur_q(xi);
    let half_pow = BigRational::new(BigInt::one(), num::pow::pow(BigInt::from(2), xi.len()));
    q.scale(&half_pow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::strict_partitions_of;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn strict(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn multiply_on_basis_elements() {
        let a = SymFunc::p(part(&[3]));
        let b = SymFunc::p(part(&[3, 1]));
        assert_eq!(a.mul(&b), SymFunc::p(part(&[3, 3, 1])));

        let p1 = SymFunc::p_single(1);
        let p2 = SymFunc::p_single(2);
        let lhs = p1.add(&p2).mul(&p1.sub(&p2));
        let want = SymFunc::p(part(&[1, 1])).sub(&SymFunc::p(part(&[2, 2])));
        assert_eq!(lhs, want);
    }

    #[test]
    fn multiply_commutes() {
        let f = SymFunc::p(part(&[2, 1])).scale(&rat(3, 2)).add(&SymFunc::p_single(3));
        let g = SymFunc::p(part(&[1, 1])).sub(&SymFunc::p_single(2).scale(&rat(5, 7)));
        assert_eq!(f.mul(&g), g.mul(&f));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_s(&part(&[1])), SymFunc::p_single(1));

        let mut want = SymFunc::term(part(&[1, 1]), rat(1, 2));
        want.add_assign_term(part(&[2]), &rat(1, 2));
        assert_eq!(schur_s(&part(&[2])), want);

        let mut want = SymFunc::term(part(&[1, 1]), rat(1, 2));
        want.add_assign_term(part(&[2]), &rat(-1, 2));
        assert_eq!(schur_s(&part(&[1, 1])), want);
    }

    #[test]
    fn one_row_q_series() {
        assert_eq!(schur_q_one_row(0), SymFunc::one());
        assert_eq!(schur_q_one_row(1), SymFunc::term(part(&[1]), rat(2, 1)));
        assert_eq!(schur_q_one_row(2), SymFunc::term(part(&[1, 1]), rat(2, 1)));
        // Q_3 = (4/3)p_{1,1,1} + (2/3)p_3
        let q3 = schur_q_one_row(3);
        assert_eq!(q3.coeff(&part(&[1, 1, 1])), rat(4, 3));
        assert_eq!(q3.coeff(&part(&[3])), rat(2, 3));
        assert_eq!(q3.num_terms(), 2);
    }

    #[test]
    fn q_one_row_equals_general() {
        for a in 0..=8 {
            let via_series = schur_q_one_row(a);
            let xi = if a == 0 {
                StrictPartition::empty()
            } else {
                strict(&[a])
            };
            assert_eq!(*schur_q(&xi), via_series);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&SymFunc::p_single(2)), SymFunc::zero());
        assert_eq!(
            phi(&SymFunc::p(part(&[3, 1]))),
            SymFunc::term(part(&[3, 1]), rat(4, 1))
        );
        // homomorphism property on a couple of structured inputs
        let f = SymFunc::p(part(&[3, 2])).add(&SymFunc::p_single(1).scale(&rat(2, 3)));
        let g = SymFunc::p(part(&[5])).sub(&SymFunc::p(part(&[1, 1])));
        assert_eq!(phi(&f.mul(&g)), phi(&f).mul(&phi(&g)));
    }

    #[test]
    fn q_supported_on_odd_parts() {
        for n in 0..=8 {
            for xi in strict_partitions_of(n) {
                let q = schur_q(&xi);
                assert!(q.is_homogeneous_of_degree(n), "Q_{xi} not homogeneous");
                for (mu, _) in q.terms() {
                    assert!(mu.is_odd(), "even part in Q_{xi}: {mu}");
                }
            }
        }
    }

    #[test]
    fn schur_p_examples() {
        assert_eq!(schur_p(&strict(&[1])), SymFunc::p_single(1));
        for n in 0..=8 {
            for xi in strict_partitions_of(n) {
                assert!(schur_p(&xi).is_homogeneous_of_degree(n));
            }
        }
    }

    #[test]
    fn schur_q_and_double_identity_small() {
        // φ(s_{D(ξ)}) = 2^{−ℓ(ξ)} Q_ξ² at ξ = (2,1), i.e. against s_{(3,3)}
        let xi = strict(&[2, 1]);
        let lhs = phi(&schur_s(&xi.double()));
        let q = schur_q(&xi);
        let rhs = q.mul(&q).scale(&rat(1, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_coefficient_of_ones_is_scaled_shifted_tableau_count() {
        // coefficient of p_{(1^n)} in Q_ξ equals 2^n g^ξ / n!  (Frobenius
        // formula at ν = (1^n), where z_ν = n! and ℓ(ν) = n)
        for n in 1..=8 {
            for xi in strict_partitions_of(n) {
                let coeff = schur_q(&xi).coeff(&Partition::column(n));
                let g = characters::g_dim(&xi);
                let want = BigRational::new(
                    num::pow::pow(BigInt::from(2), n) * g,
                    crate::combinat::factorial(n),
                );
                assert_eq!(coeff, want, "xi = {xi}");
            }
        }
    }

    #[test]
    fn expand_in_variables_examples() {
        let p1 = SymFunc::p_single(1).expand_in_variables(2);
        assert_eq!(p1.coeff(&[1, 0]), rat(1, 1));
        assert_eq!(p1.coeff(&[0, 1]), rat(1, 1));
        assert_eq!(p1.num_terms(), 2);

        // s_{(2)} in two variables: x² + xy + y²
        let s2 = schur_s(&part(&[2])).expand_in_variables(2);
        assert_eq!(s2.coeff(&[2, 0]), rat(1, 1));
        assert_eq!(s2.coeff(&[1, 1]), rat(1, 1));
        assert_eq!(s2.coeff(&[0, 2]), rat(1, 1));
        assert_eq!(s2.num_terms(), 3);
    }

    /// Marked shifted tableaux of shape ξ with entries from 1' < 1 < … < N:
    /// weakly increasing rows and columns, no repeated primed letter in a
    /// row, no repeated unprimed letter in a column. Their weight sum is the
    /// Q-polynomial.
    fn shifted_q_polynomial_brute(xi: &StrictPartition, nvars: usize) -> VarPoly {
        // boxes of the shifted diagram, row-major; ranks 2k = (k+1)',
        // 2k+1 = k+1
        let mut boxes = Vec::new();
        for (r, &len) in xi.parts().iter().enumerate() {
            for c in r..r + len {
                boxes.push((r, c));
            }
        }
        let mut out = VarPoly::zero(nvars);
        let mut filling: std::collections::HashMap<(usize, usize), usize> = Default::default();
        fn place(
            idx: usize,
            boxes: &[(usize, usize)],
            nvars: usize,
            filling: &mut std::collections::HashMap<(usize, usize), usize>,
            out: &mut VarPoly,
        ) {
            if idx == boxes.len() {
                let mut exps = vec![0u32; nvars];
                for rank in filling.values() {
                    exps[rank / 2] += 1;
                }
                out.add_assign_term(exps, &BigRational::one());
                return;
            }
            let (r, c) = boxes[idx];
            for rank in 0..2 * nvars {
                let primed = rank % 2 == 0;
                if let Some(&left) = filling.get(&(r, c.wrapping_sub(1))) {
                    if left > rank || (left == rank && primed) {
                        continue;
                    }
                }
                if let Some(&up) = filling.get(&(r.wrapping_sub(1), c)) {
                    if up > rank || (up == rank && !primed) {
                        continue;
                    }
                }
                filling.insert((r, c), rank);
                place(idx + 1, boxes, nvars, filling, out);
                filling.remove(&(r, c));
            }
        }
        place(0, &boxes, nvars, &mut filling, &mut out);
        out
    }

    #[test]
    fn q_matches_shifted_tableau_expansion() {
        for (parts, nvars) in [
            (vec![1], 2),
            (vec![2], 2),
            (vec![2, 1], 3),
            (vec![3, 1], 3),
            (vec![3, 2], 2),
            (vec![4, 2, 1], 2),
        ] {
            let xi = strict(&parts);
            let via_p_basis = schur_q(&xi).expand_in_variables(nvars);
            let via_tableaux = shifted_q_polynomial_brute(&xi, nvars);
            assert_eq!(via_p_basis, via_tableaux, "ξ = {xi}, N = {nvars}");
        }
    }

    #[test]
    fn json_is_graded_lex_sorted() {
        let f = schur_q_one_row(3);
        let json = f.to_json();
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["mu"], "1,1,1");
        assert_eq!(arr[0]["coeff"], "4/3");
        assert_eq!(arr[1]["mu"], "3");
    }
}
