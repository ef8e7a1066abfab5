//! Dense-exponent polynomials in finitely many commuting variables, used as
//! the monomial-expansion oracle for symmetric-function identities.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

/// A polynomial in `nvars` variables with exact rational coefficients,
/// keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl VarPoly {
    pub fn zero(nvars: usize) -> Self {
        VarPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = VarPoly::zero(nvars);
        p.add_assign_term(vec![0; nvars], &c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        VarPoly::constant(nvars, BigRational::one())
    }

    /// x_i (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = VarPoly::zero(nvars);
        p.add_assign_term(exps, &BigRational::one());
        p
    }

    /// x_1^r + … + x_N^r, the image of the power sum p_r.
    pub fn power_sum(nvars: usize, r: usize) -> Self {
        let mut p = VarPoly::zero(nvars);
        for i in 0..nvars {
            let mut exps = vec![0; nvars];
            exps[i] = r as u32;
            p.add_assign_term(exps, &BigRational::one());
        }
        p
    }

    /// Monomial x^exps with rational coefficient.
    pub fn monomial(nvars: usize, exps: Vec<u32>, c: BigRational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = VarPoly::zero(nvars);
        p.add_assign_term(exps, &c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_assign_term(&mut self, exps: Vec<u32>, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &VarPoly) -> VarPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_assign_term(e.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &VarPoly) -> VarPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = VarPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_assign_term(exps, &(c1 * c2));
            }
        }
        out
    }

    /// Evaluates at nonnegative integer points.
    pub fn evaluate_usize(&self, xs: &[usize]) -> BigRational {
        assert_eq!(xs.len(), self.nvars);
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut v = BigInt::one();
            for (x, e) in xs.iter().zip(exps) {
                v *= num::pow::pow(BigInt::from(*x), *e as usize);
            }
            total += c * BigRational::from(v);
        }
        total
    }
}
