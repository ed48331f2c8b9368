//! Symmetric functions in the z-variables written in power sums, tensored
//! with polynomials in `x_1..x_k`.
//!
//! Power sums are algebraically independent, so products are plain
//! concatenations of partitions. Conversion to monomials in a fixed number
//! of z-variables happens only at the end.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::symmetric::SymmetricSeries;
use crate::error::{Error, Result};

type Key = (Vec<u32>, Vec<u32>);

/// Keys pair a power-sum partition (decreasing) with an x-exponent vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSumSeries {
    k: usize,
    terms: BTreeMap<Key, BigRational>,
}

fn merge_desc(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl PowerSumSeries {
    pub fn zero(k: usize) -> Self {
        PowerSumSeries { k, terms: BTreeMap::new() }
    }

    pub fn constant(k: usize, c: BigRational) -> Self {
        let mut s = PowerSumSeries::zero(k);
        s.add_term(Vec::new(), vec![0; k], c);
        s
    }

    pub fn one(k: usize) -> Self {
        PowerSumSeries::constant(k, BigRational::one())
    }

    /// The power sum `p_r(Z)`.
    pub fn power(k: usize, r: u32) -> Self {
        let mut s = PowerSumSeries::zero(k);
        s.add_term(vec![r], vec![0; k], BigRational::one());
        s
    }

    /// The x-monomial `x^e`.
    pub fn x_monomial(e: Vec<u32>) -> Self {
        let mut s = PowerSumSeries::zero(e.len());
        s.add_term(Vec::new(), e, BigRational::one());
        s
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, nu: Vec<u32>, x: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((nu, x)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "series in different x-variable sets");
        let mut out = self.clone();
        for ((nu, x), c) in &other.terms {
            out.add_term(nu.clone(), x.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = PowerSumSeries::zero(self.k);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(key, v)| (key.clone(), v * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "series in different x-variable sets");
        let mut out = PowerSumSeries::zero(self.k);
        for ((na, xa), ca) in &self.terms {
            for ((nb, xb), cb) in &other.terms {
                let x: Vec<u32> = xa.iter().zip(xb).map(|(a, b)| a + b).collect();
                out.add_term(merge_desc(na, nb), x, ca * cb);
            }
        }
        out
    }

    /// Monomial coordinates with `m` z-variables, dropping degrees above `cap`.
    pub fn to_symmetric(&self, m: usize, cap: u32) -> Result<SymmetricSeries> {
        let mut acc: BTreeMap<Key, BigRational> = BTreeMap::new();
        for ((nu, x), c) in &self.terms {
            let deg: u32 = nu.iter().chain(x).sum();
            if deg > cap {
                continue;
            }
            for (t, n) in power_in_monomials(nu, m).iter() {
                *acc.entry((t.clone(), x.clone())).or_insert_with(BigRational::zero) += c * BigRational::from_integer(n.clone());
            }
        }
        let mut out = SymmetricSeries::zero(m, self.k, cap);
        for ((t, x), c) in acc {
            if !c.is_integer() {
                return Err(Error::NonIntegral(format!("coefficient {c} at z-shape {t:?}, x {x:?}")));
            }
            out.add_term(&t, x, c.to_integer());
        }
        Ok(out)
    }
}

type MonomialTable = Arc<Vec<(Vec<u32>, BigInt)>>;

/// `p_ν` in `m` variables as `Σ_t n_t m_t`.
fn power_in_monomials(nu: &[u32], m: usize) -> MonomialTable {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, usize), MonomialTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (nu.to_vec(), m);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&key) {
        return hit.clone();
    }
    // Multiplying by p_r sends m_s to Σ m_t, where t raises one value v of s
    // (or a fresh zero) by r; the dominant monomial of t is hit once for each
    // position holding v + r.
    let mut cur: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(Vec::new(), BigInt::one())]);
    for &r in nu {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (s, c) in &cur {
            let mut values: Vec<u32> = s.clone();
            values.dedup();
            if s.len() < m {
                values.push(0);
            }
            for v in values {
                let mut t = s.clone();
                match t.iter().position(|&e| e == v) {
                    Some(i) => t[i] += r,
                    None => t.push(r),
                }
                t.sort_unstable_by(|a, b| b.cmp(a));
                let mult = t.iter().filter(|&&e| e == v + r).count();
                *next.entry(t).or_default() += c * BigInt::from(mult);
            }
        }
        cur = next;
    }
    let table: MonomialTable = Arc::new(cur.into_iter().collect());
    cache.lock().expect("cache poisoned").insert(key, table.clone());
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sums_in_two_variables() {
        let p1 = PowerSumSeries::power(0, 1);
        let sq = p1.mul(&p1).to_symmetric(2, 10).unwrap();
        assert_eq!(sq.coeff(&[2], &[]), BigInt::from(1));
        assert_eq!(sq.coeff(&[1, 1], &[]), BigInt::from(2));
        let one_var = p1.mul(&p1).to_symmetric(1, 10).unwrap();
        assert_eq!(one_var.coeff(&[1, 1], &[]), BigInt::zero());
    }

    #[test]
    fn products_commute() {
        let a = PowerSumSeries::power(1, 3).add(&PowerSumSeries::x_monomial(vec![2]));
        let b = PowerSumSeries::power(1, 1).add(&PowerSumSeries::power(1, 2));
        assert_eq!(a.mul(&b), b.mul(&a));
    }
}
