//! NilCoxeter algebras of `S_n`, `W_n` and `W̃_n` over a coefficient ring,
//! and the (mixed) Stanley functions read off from them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{Group, SignedPermutation, Simple};
use crate::error::{Error, Result};
use crate::freering::FreeElement;
use crate::series::{SymmetricSeries, TruncatedSeries};

/// What the nilCoxeter algebra needs from its coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
}

impl Coefficient for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for FreeElement {
    fn is_zero(&self) -> bool {
        FreeElement::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for TruncatedSeries {
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// `Σ_w c_w ξ_w`, keyed by one-line windows of a fixed size `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct NilCoxeterElement<C> {
    group: Group,
    n: usize,
    terms: BTreeMap<SignedPermutation, C>,
}

impl<C: Coefficient> NilCoxeterElement<C> {
    pub fn zero(group: Group, n: usize) -> Self {
        NilCoxeterElement { group, n, terms: BTreeMap::new() }
    }

    /// `c · ξ_id`.
    pub fn scalar(group: Group, n: usize, c: C) -> Self {
        let mut out = Self::zero(group, n);
        out.add_term(SignedPermutation::identity(n, group), c);
        out
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: SignedPermutation, c: C) {
        if c.is_zero() {
            return;
        }
        let w = w.extended(self.n);
        debug_assert_eq!(w.n(), self.n);
        match self.terms.get_mut(&w) {
            Some(old) => {
                old.add_assign(&c);
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// `⟨ζ, w⟩`.
    pub fn coeff(&self, w: &SignedPermutation) -> Option<&C> {
        self.terms.get(&w.extended(self.n))
    }

    /// `ξ_u ξ_v = ξ_{uv}` when lengths add, and 0 otherwise.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.group, self.n);
        for (u, a) in &self.terms {
            let lu = u.length();
            for (v, b) in &other.terms {
                let uv = u.compose(v);
                if uv.length() == lu + v.length() {
                    out.add_term(uv, a.mul(b));
                }
            }
        }
        out
    }

    /// Right multiplication by `1 + t ξ_s`.
    pub fn times_factor(&self, s: Simple, t: &C) -> Self {
        let mut out = self.clone();
        for (w, c) in &self.terms {
            if !w.has_descent(s) {
                out.add_term(w.right_mul(s), c.mul(t));
            }
        }
        out
    }
}

/// Letters of `A_i(t) = (1 + tξ_{n−1})⋯(1 + tξ_i)`.
pub fn a_letters(n: usize, from: usize) -> Vec<Simple> {
    (from.max(1)..n).rev().map(Simple::S).collect()
}

/// Letters of `C(t)` (`W_n`) or `D(t)` (`W̃_n`).
pub fn z_letters(group: Group, n: usize) -> Vec<Simple> {
    match group {
        Group::A => a_letters(n, 1),
        Group::C => {
            let mut out = a_letters(n, 1);
            out.push(Simple::S0);
            out.push(Simple::S0);
            out.extend((1..n).map(Simple::S));
            out
        }
        Group::D => {
            let mut out = a_letters(n, 1);
            out.push(Simple::SBox);
            out.extend((2..n).map(Simple::S));
            out
        }
    }
}

/// The homogeneous parts of `Π (1 + tξ_s)` over `letters`, with integer coefficients.
pub fn graded_parts(group: Group, n: usize, letters: &[Simple]) -> Vec<NilCoxeterElement<BigInt>> {
    let mut parts = vec![NilCoxeterElement::scalar(group, n, BigInt::one())];
    for &s in letters {
        let mut next = parts.clone();
        next.push(NilCoxeterElement::zero(group, n));
        for (j, p) in parts.iter().enumerate() {
            for (w, c) in p.terms() {
                if !w.has_descent(s) {
                    next[j + 1].add_term(w.right_mul(s), c.clone());
                }
            }
        }
        while next.last().is_some_and(|p| p.is_zero()) {
            next.pop();
        }
        parts = next;
    }
    parts
}

fn rank_for(w: &SignedPermutation, k: usize) -> usize {
    let base = w.trimmed().n().max(k + 1);
    match w.group() {
        Group::D => base.max(2),
        _ => base.max(1),
    }
}

/// `G_w(Z)`, `J_w(Z; X_k)` or `I_w(Z; X_k)` for every element of the
/// rank-`n` group at once, as z-symmetric series with `m` z-variables.
///
/// The coefficient of `z^t x^b` for decreasing `t` is
/// `⟨C_{t_1}⋯C_{t_ℓ} A_{b_1}⋯A_{b_k}, w⟩`, where `C_j` and `A_j` are the
/// degree-`j` parts of the factors; prefixes are shared across a search.
pub fn mixed_stanley_all(
    group: Group,
    n: usize,
    k: usize,
    m: usize,
    cap: u32,
) -> Result<BTreeMap<SignedPermutation, SymmetricSeries>> {
    if group == Group::A && k > 0 {
        return Err(Error::precondition("x-count", "type A Stanley functions have no x-variables"));
    }
    if group != Group::A && k >= n {
        return Err(Error::precondition("level", format!("need k < n, got k={k}, n={n}")));
    }
    let z_parts = graded_parts(group, n, &z_letters(group, n));
    let a_parts = graded_parts(group, n, &a_letters(n, 1));
    let mut out: BTreeMap<SignedPermutation, SymmetricSeries> = BTreeMap::new();

    struct Search<'a> {
        z_parts: &'a [NilCoxeterElement<BigInt>],
        a_parts: &'a [NilCoxeterElement<BigInt>],
        m: usize,
        k: usize,
        cap: u32,
        out: &'a mut BTreeMap<SignedPermutation, SymmetricSeries>,
    }

    impl Search<'_> {
        fn record(&mut self, z: &[u32], x: &[u32], elt: &NilCoxeterElement<BigInt>) {
            for (w, c) in elt.terms() {
                let entry = self
                    .out
                    .entry(w.clone())
                    .or_insert_with(|| SymmetricSeries::zero(self.m, self.k, self.cap));
                entry.add_term(z, x.to_vec(), c.clone());
            }
        }

        fn x_part(&mut self, z: &[u32], x: &mut Vec<u32>, deg: u32, elt: &NilCoxeterElement<BigInt>) {
            if x.len() == self.k {
                self.record(z, x, elt);
                return;
            }
            for (j, part) in self.a_parts.iter().enumerate() {
                if deg + j as u32 > self.cap {
                    break;
                }
                let next = elt.mul(part);
                if next.is_zero() {
                    continue;
                }
                x.push(j as u32);
                self.x_part(z, x, deg + j as u32, &next);
                x.pop();
            }
        }

        fn z_part(&mut self, z: &mut Vec<u32>, deg: u32, elt: &NilCoxeterElement<BigInt>) {
            let zc = z.clone();
            self.x_part(&zc, &mut Vec::new(), deg, elt);
            if z.len() == self.m {
                return;
            }
            let max = z.last().copied().unwrap_or(u32::MAX);
            for (j, part) in self.z_parts.iter().enumerate().skip(1) {
                if j as u32 > max || deg + j as u32 > self.cap {
                    break;
                }
                let next = elt.mul(part);
                if next.is_zero() {
                    continue;
                }
                z.push(j as u32);
                self.z_part(z, deg + j as u32, &next);
                z.pop();
            }
        }
    }

    let one = NilCoxeterElement::scalar(group, n, BigInt::one());
    let mut search = Search { z_parts: &z_parts, a_parts: &a_parts, m, k, cap, out: &mut out };
    search.z_part(&mut Vec::new(), 0, &one);
    Ok(out)
}

/// `G_w`, `J_w` or `I_w` (by the group of `w`) in `z_1..z_m` and `x_1..x_k`.
pub fn nilcoxeter_mixed_stanley(w: &SignedPermutation, k: usize, m: usize) -> Result<TruncatedSeries> {
    let group = w.group();
    let k = if group == Group::A { 0 } else { k };
    let n = rank_for(w, k);
    let cap = w.length() as u32;
    let all = mixed_stanley_all(group, n, k, m, cap)?;
    Ok(all
        .get(&w.extended(n))
        .map(|s| s.to_truncated())
        .unwrap_or_else(|| if w.is_identity() { TruncatedSeries::one(m, k, cap) } else { TruncatedSeries::zero(m, k, cap) }))
}

/// The same series by multiplying out every factor with series coefficients.
pub fn mixed_stanley_full_product(w: &SignedPermutation, k: usize, m: usize) -> Result<TruncatedSeries> {
    let group = w.group();
    let k = if group == Group::A { 0 } else { k };
    let n = rank_for(w, k);
    let cap = w.length() as u32;
    let mut acc = NilCoxeterElement::scalar(group, n, TruncatedSeries::one(m, k, cap));
    for i in 0..m {
        let t = TruncatedSeries::z_var(m, k, cap, i);
        for s in z_letters(group, n) {
            acc = acc.times_factor(s, &t);
        }
    }
    for j in 0..k {
        let t = TruncatedSeries::x_var(m, k, cap, j);
        for s in a_letters(n, 1) {
            acc = acc.times_factor(s, &t);
        }
    }
    Ok(acc.coeff(w).cloned().unwrap_or_else(|| TruncatedSeries::zero(m, k, cap)))
}

/// Exponent vectors `b` with `b_i ≤ n − i` and `|b| = d`.
fn staircase_vectors(n: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left.min(n - i) {
            cur.push(v as u32);
            rec(n, i + 1, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        rec(n - 1, 0, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `⟨A_1(x_1)⋯A_{n−1}(x_{n−1}), ϖ⟩` read off one monomial at a time.
pub fn schubert_a_by_monomials(w: &SignedPermutation) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    if w.group() != Group::A {
        return Err(Error::precondition("group", "type A permutation expected"));
    }
    let n = w.n().max(1);
    let parts: Vec<Vec<NilCoxeterElement<BigInt>>> =
        (1..n).map(|i| graded_parts(Group::A, n, &a_letters(n, i))).collect();
    let mut out = BTreeMap::new();
    for b in staircase_vectors(n, w.length()) {
        let mut elt = NilCoxeterElement::scalar(Group::A, n, BigInt::one());
        for (i, &e) in b.iter().enumerate() {
            match parts[i].get(e as usize) {
                Some(p) => elt = elt.mul(p),
                None => {
                    elt = NilCoxeterElement::zero(Group::A, n);
                    break;
                }
            }
        }
        if let Some(c) = elt.coeff(w) {
            out.insert(b, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, g: Group) -> SignedPermutation {
        SignedPermutation::parse(s, g).unwrap()
    }

    fn xi(group: Group, n: usize, s: Simple) -> NilCoxeterElement<BigInt> {
        let mut out = NilCoxeterElement::zero(group, n);
        out.add_term(SignedPermutation::identity(n, group).right_mul(s), BigInt::one());
        out
    }

    #[test]
    fn relations_hold() {
        for (group, n) in [(Group::A, 4), (Group::C, 3), (Group::D, 4)] {
            let simples = group.simples(n);
            for &s in &simples {
                assert!(xi(group, n, s).mul(&xi(group, n, s)).is_zero(), "{s} squared");
            }
            for &s in &simples {
                for &t in &simples {
                    if s == t {
                        continue;
                    }
                    let (a, b) = (xi(group, n, s), xi(group, n, t));
                    let st = a.mul(&b);
                    let ts = b.mul(&a);
                    let braid = st == ts || st.mul(&a) == ts.mul(&b) || st.mul(&st) == ts.mul(&ts);
                    assert!(braid, "{s} {t}");
                    assert!(!st.is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_gives_one() {
        for (g, k) in [(Group::A, 0), (Group::C, 1), (Group::D, 1)] {
            let w = SignedPermutation::identity(3, g);
            assert_eq!(nilcoxeter_mixed_stanley(&w, k, 3).unwrap(), TruncatedSeries::one(3, k, 0));
        }
    }

    #[test]
    fn extraction_matches_full_product() {
        let cases = [("2,1,5,4,3", Group::A, 0), ("3,-1,2,5,4", Group::C, 1), ("-2,-1,3", Group::D, 1), ("2,-3,1", Group::C, 0), ("-3,1,-2,4", Group::D, 2)];
        for (s, g, k) in cases {
            let w = perm(s, g);
            let m = 3;
            assert_eq!(nilcoxeter_mixed_stanley(&w, k, m).unwrap(), mixed_stanley_full_product(&w, k, m).unwrap(), "{w}");
        }
    }

    #[test]
    fn schubert_monomials_small() {
        let got = schubert_a_by_monomials(&perm("3,1,2", Group::A)).unwrap();
        assert_eq!(got, BTreeMap::from([(vec![2, 0], BigInt::one())]));
        let got = schubert_a_by_monomials(&perm("1,3,2", Group::A)).unwrap();
        assert_eq!(got, BTreeMap::from([(vec![1, 0], BigInt::one()), (vec![0, 1], BigInt::one())]));
    }
}
