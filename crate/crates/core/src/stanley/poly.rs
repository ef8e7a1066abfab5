//! Sparse multivariate Stanley polynomials over exact rationals.
//!
//! A polynomial in 2l variables represents a normalized character expressed
//! in multirectangular coordinates: variables 0..l are the heights
//! (p-block), variables l..2l the widths (q-block).

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::combinat::{factorizations, orbit_count, Partition, Permutation};
use crate::error::{Error, Result};

use super::rect::{MultiRect, ShiftedMultiRect};

/// Sparse polynomial keyed by exponent vectors, with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct StanleyPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl StanleyPoly {
    pub fn zero(nvars: usize) -> Self {
        StanleyPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = StanleyPoly::zero(nvars);
        p.add_assign_term(vec![0; nvars], &c);
        p
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        let mut p = StanleyPoly::zero(nvars);
        p.add_assign_term(exps, &BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u16]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_assign_term(&mut self, exps: Vec<u16>, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.nvars);
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

    pub fn add(&self, other: &StanleyPoly) -> StanleyPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_assign_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> StanleyPoly {
        if factor.is_zero() {
            return StanleyPoly::zero(self.nvars);
        }
        StanleyPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &StanleyPoly) -> StanleyPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = StanleyPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_assign_term(exps, &(c1 * c2));
            }
        }
        out
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// The homogeneous component of total degree d.
    pub fn homogeneous_part(&self, d: usize) -> StanleyPoly {
        StanleyPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at nonnegative integer coordinates.
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

    /// Evaluates the 2l-variable polynomial at multirectangular coordinates.
    pub fn evaluate_multirect(&self, r: &MultiRect) -> BigRational {
        let xs: Vec<usize> = r.heights().iter().chain(r.widths()).copied().collect();
        self.evaluate_usize(&xs)
    }

    /// Evaluates the 2l-variable polynomial at shifted coordinates.
    pub fn evaluate_shifted(&self, r: &ShiftedMultiRect) -> BigRational {
        let xs: Vec<usize> = r.heights().iter().chain(r.widths()).copied().collect();
        self.evaluate_usize(&xs)
    }

    /// Substitutes variable i by `images[i]`; the result lives in the
    /// variable space of the images.
    pub fn substitute(&self, images: &[StanleyPoly]) -> StanleyPoly {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map_or(0, |p| p.nvars);
        // cache powers of each image as they are needed
        let mut powers: Vec<Vec<StanleyPoly>> = images
            .iter()
            .map(|p| vec![StanleyPoly::constant(target_vars, BigRational::one()), p.clone()])
            .collect();
        let mut out = StanleyPoly::zero(target_vars);
        for (exps, c) in &self.terms {
            let mut prod = StanleyPoly::constant(target_vars, c.clone());
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&images[v]);
                    powers[v].push(next);
                }
                prod = prod.mul(&powers[v][e as usize]);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Serializes as {exponents, coeff} records in graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().map(|&x| x as usize).sum::<usize>(), (*e).clone()));
        serde_json::Value::Array(
            keys.into_iter()
                .map(|e| {
                    serde_json::json!({
                        "exponents": e,
                        "coeff": self.terms[e].to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl std::fmt::Debug for StanleyPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let l = self.nvars / 2;
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = if i < l {
                    format!("p{}", i + 1)
                } else {
                    format!("q{}", i + 1 - l)
                };
                if exp == 1 {
                    write!(f, "·{name}")?;
                } else {
                    write!(f, "·{name}^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

/// The coloring polynomial N_{σ1,σ2}(P×Q) in 2l variables: the sum over
/// κ2: C(σ2) → [l] of Π q_{κ1(c1)} Π p_{κ2(c2)}, where κ1 takes the maximum
/// of κ2 over intersecting cycles. Accumulates into `sink` with the given
/// integer weight.
fn accumulate_n_poly(
    s1: &Permutation,
    s2: &Permutation,
    l: usize,
    weight: &BigInt,
    sink: &mut BTreeMap<Vec<u16>, BigInt>,
) {
    let cycles1 = s1.cycles();
    let cycles2 = s2.cycles();
    let k = s1.size();
    let mut black_of = vec![0usize; k];
    for (j, cyc) in cycles2.iter().enumerate() {
        for &x in cyc {
            black_of[x] = j;
        }
    }
    // per white cycle: the (deduplicated) black cycles it intersects
    let whites: Vec<Vec<usize>> = cycles1
        .iter()
        .map(|cyc| {
            let mut nbrs: Vec<usize> = cyc.iter().map(|&x| black_of[x]).collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            nbrs
        })
        .collect();

    let b = cycles2.len();
    let mut kappa2 = vec![1usize; b];
    loop {
        let mut exps = vec![0u16; 2 * l];
        for &v in &kappa2 {
            exps[v - 1] += 1; // p_{κ2(c2)}
        }
        for nbrs in &whites {
            let kappa1 = nbrs.iter().map(|&j| kappa2[j]).max().unwrap_or(1);
            exps[l + kappa1 - 1] += 1; // q_{κ1(c1)}
        }
        match sink.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(weight.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += weight;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        // odometer over [l]^b
        let mut done = true;
        for slot in kappa2.iter_mut() {
            if *slot < l {
                *slot += 1;
                done = false;
                break;
            }
            *slot = 1;
        }
        if done && b > 0 {
            break;
        }
        if b == 0 {
            break;
        }
    }
}

fn from_int_terms(nvars: usize, terms: BTreeMap<Vec<u16>, BigInt>, denom: BigInt) -> StanleyPoly {
    let mut out = StanleyPoly::zero(nvars);
    for (e, c) in terms {
        out.add_assign_term(e, &BigRational::new(c, denom.clone()));
    }
    out
}

/// Whether the factorization pair attains the top degree
/// |C(σ1)| + |C(σ2)| = |π| + ℓ(π).
fn is_top_pair(s1: &Permutation, s2: &Permutation, pi: &Partition) -> bool {
    s1.cycle_count() + s2.cycle_count() == pi.size() + pi.len()
}

/// The linear Stanley polynomial Ch_π(P×Q) in 2l variables.
pub fn stanley_polynomial_linear(pi: &Partition, l: usize) -> StanleyPoly {
    build_linear(pi, l, false)
}

/// The restricted sum over top-degree factorizations only; by construction
/// it equals the homogeneous top part of the full linear polynomial.
pub fn stanley_polynomial_linear_top(pi: &Partition, l: usize) -> StanleyPoly {
    build_linear(pi, l, true)
}

fn build_linear(pi: &Partition, l: usize, top_only: bool) -> StanleyPoly {
    assert!(l >= 1);
    let pi_perm = Permutation::from_cycle_type(pi);
    let mut sink = BTreeMap::new();
    for (s1, s2) in factorizations(&pi_perm) {
        if top_only && !is_top_pair(&s1, &s2, pi) {
            continue;
        }
        let weight = BigInt::from(s1.sign());
        accumulate_n_poly(&s1, &s2, l, &weight, &mut sink);
    }
    from_int_terms(2 * l, sink, BigInt::one())
}

/// The spin Stanley polynomial Ch^spin_π(𝐏⊠𝐐) in 2l variables, obtained by
/// expressing the weighted factorization sum in the 4l coordinates of the
/// doubled diagram and substituting the coordinate transformation.
pub fn stanley_polynomial_spin(pi: &Partition, l: usize) -> Result<StanleyPoly> {
    build_spin(pi, l, false, true)
}

/// The restricted top-degree sum with the homogeneous (overlap-double)
/// substitution; equals the homogeneous top part of the full spin
/// polynomial.
pub fn stanley_polynomial_spin_top(pi: &Partition, l: usize) -> Result<StanleyPoly> {
    build_spin(pi, l, true, false)
}

fn build_spin(pi: &Partition, l: usize, top_only: bool, with_shift: bool) -> Result<StanleyPoly> {
    assert!(l >= 1);
    if !pi.is_odd() {
        return Err(Error::NotOdd(pi.to_string()));
    }
    let k = pi.size();
    let pi_perm = Permutation::from_cycle_type(pi);
    // aggregate Σ (−1)^{σ1} 2^{k−|σ1∨σ2|} N_{σ1,σ2} in the 4l rectangle
    // variables, then divide by 2^k
    let mut sink = BTreeMap::new();
    for (s1, s2) in factorizations(&pi_perm) {
        if top_only && !is_top_pair(&s1, &s2, pi) {
            continue;
        }
        let orbits = orbit_count(&s1, &s2).expect("equal sizes");
        let mut weight: BigInt = num::pow::pow(BigInt::from(2), k - orbits);
        if s1.sign() < 0 {
            weight = -weight;
        }
        accumulate_n_poly(&s1, &s2, 2 * l, &weight, &mut sink);
    }
    let rect_poly = from_int_terms(4 * l, sink, num::pow::pow(BigInt::from(2), k));

    // images of the 4l rectangle variables as affine forms in the 2l
    // shifted variables
    let images = substitution_images(l, with_shift);
    Ok(rect_poly.substitute(&images))
}

/// Affine forms for the substitution p_i, q_i (i ≤ 2l) in terms of the
/// shifted variables 𝐩, 𝐪; `with_shift` selects the exact transform with
/// its +1 offsets, otherwise the homogeneous degree-1 part.
fn substitution_images(l: usize, with_shift: bool) -> Vec<StanleyPoly> {
    let nv = 2 * l;
    let bp: Vec<StanleyPoly> = (0..l).map(|i| StanleyPoly::var(nv, i)).collect();
    let bq: Vec<StanleyPoly> = (0..l).map(|i| StanleyPoly::var(nv, l + i)).collect();
    let one = StanleyPoly::constant(nv, BigRational::one());
    let minus_one = BigRational::from(BigInt::from(-1));

    let mut prefix = vec![StanleyPoly::zero(nv)]; // 𝐩_1 + … + 𝐩_i
    for i in 0..l {
        let next = prefix[i].add(&bp[i]);
        prefix.push(next);
    }

    let mut p_imgs = Vec::with_capacity(2 * l);
    let mut q_imgs = Vec::with_capacity(2 * l);
    for i in 0..l {
        p_imgs.push(bp[i].clone());
        let mut q = prefix[i].add(&bq[i]);
        if with_shift {
            q = q.add(&one);
        }
        q_imgs.push(q);
    }
    for j in 1..=l {
        let i = l - j;
        if j == 1 {
            p_imgs.push(bq[l - 1].add(&bp[l - 1].scale(&minus_one)));
        } else {
            p_imgs.push(
                bq[i].add(&bq[i + 1].scale(&minus_one)).add(&bp[i].scale(&minus_one)),
            );
        }
        q_imgs.push(prefix[i + 1].clone());
    }
    p_imgs.extend(q_imgs);
    p_imgs
}

/// Total degree of the Stanley polynomial of π (linear or spin) in 2l
/// variables; equals |π| + ℓ(π).
pub fn filtration_degree(pi: &Partition, spin: bool, l: usize) -> Result<usize> {
    if spin {
        Ok(stanley_polynomial_spin(pi, l)?.total_degree())
    } else {
        Ok(stanley_polynomial_linear(pi, l).total_degree())
    }
}
