//! Series symmetric in the z-variables, stored on monomial symmetric functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// Key: the z-exponent partition (decreasing, no zeros, at most `m` parts)
/// and the full x-exponent vector. The value is the coefficient of every
/// z-monomial whose sorted exponents give that partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricSeries {
    m: usize,
    k: usize,
    cap: u32,
    terms: BTreeMap<(Vec<u32>, Vec<u32>), BigInt>,
}

pub(crate) fn sorted_key(z: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = z.iter().copied().filter(|&e| e > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

impl SymmetricSeries {
    pub fn zero(m: usize, k: usize, cap: u32) -> Self {
        SymmetricSeries { m, k, cap, terms: BTreeMap::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u32>, Vec<u32>), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, z: &[u32], x: &[u32]) -> BigInt {
        self.terms.get(&(sorted_key(z), x.to_vec())).cloned().unwrap_or_default()
    }

    /// Adds `c` to the monomial symmetric function `m_z · x^x`. Terms
    /// above the cap or needing more than `m` variables are dropped.
    pub fn add_term(&mut self, z: &[u32], x: Vec<u32>, c: BigInt) {
        let z = sorted_key(z);
        debug_assert_eq!(x.len(), self.k);
        if c.is_zero() || z.len() > self.m || z.iter().chain(&x).sum::<u32>() > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((z, x)) {
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
        assert!(self.k == other.k && self.m == other.m, "series in different variable sets");
        let mut out = self.clone();
        for ((z, x), c) in &other.terms {
            out.add_term(z, x.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = SymmetricSeries::zero(self.m, self.k, self.cap);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(key, v)| (key.clone(), v * c)).collect();
        }
        out
    }

    /// Keeps only the terms that survive with `m2` z-variables and cap `cap`.
    pub fn restrict(&self, m2: usize, cap: u32) -> Self {
        let mut out = SymmetricSeries::zero(m2, self.k, cap);
        for ((z, x), c) in &self.terms {
            out.add_term(z, x.clone(), c.clone());
        }
        out
    }

    /// Expands each monomial symmetric function into its distinct monomials.
    pub fn to_truncated(&self) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.m, self.k, self.cap);
        for ((z, x), c) in &self.terms {
            let mut padded = z.clone();
            padded.resize(self.m, 0);
            for perm in distinct_permutations(&padded) {
                let mut e = perm;
                e.extend_from_slice(x);
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Reads off the dominant monomials after checking z-symmetry.
    pub fn from_truncated(s: &TruncatedSeries) -> Result<Self> {
        let (m, k) = (s.m(), s.k());
        let mut out = SymmetricSeries::zero(m, k, s.cap());
        let mut seen = 0usize;
        for (e, c) in s.terms() {
            let z = &e[..m];
            if z.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(z, e[m..].to_vec(), c.clone());
            }
            seen += 1;
        }
        if out.to_truncated().len() != seen || out.to_truncated() != *s {
            return Err(Error::precondition("symmetric", "series is not symmetric in the z-variables"));
        }
        Ok(out)
    }
}

/// Distinct rearrangements of `v`, in lexicographic order.
pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}
