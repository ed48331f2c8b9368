//! Generating-function generators and the substitution oracles for theta
//! and eta polynomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::powersum::PowerSumSeries;
use super::symmetric::SymmetricSeries;
use super::TruncatedSeries;
use crate::combinat::{Partition, TypedPartition};
use crate::error::{Error, Result};
use crate::freering::{
    determinant_formula, eta_level0, eta_star_expand, raising_expand, theta_polynomial, EvaluationRule, Family,
    FreeElement, Generator, Monomial, RaisingOperatorSpec,
};

/// The named generator families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Which {
    /// `e_p(X_k)`.
    E,
    /// `h_p(X_k)`.
    H,
    /// `Q_p(Z)`.
    Q,
    /// `P_p(Z) = Q_p(Z)/2`.
    P,
    /// `ϑ_p(Z; X_k)`.
    Theta,
    /// `η_p(Z; X_k)`.
    Eta,
    /// `η′_k(Z; X_k)`; only `p = k` is meaningful.
    EtaPrime,
}

impl Which {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Which::E),
            "h" => Ok(Which::H),
            "Q" => Ok(Which::Q),
            "P" => Ok(Which::P),
            "theta" => Ok(Which::Theta),
            "eta" => Ok(Which::Eta),
            "eta-prime" => Ok(Which::EtaPrime),
            _ => Err(Error::Parse(format!("unknown generator {s:?}"))),
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Elementary (or complete, when `complete`) polynomial of degree `j` in `x_1..x_k`.
fn x_symmetric(j: i64, k: usize, complete: bool) -> PowerSumSeries {
    let mut out = PowerSumSeries::zero(k);
    if j < 0 {
        return out;
    }
    let j = j as u32;
    let mut e = vec![0u32; k];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, complete: bool, out: &mut PowerSumSeries) {
        if i == e.len() {
            if left == 0 {
                out.add_term(Vec::new(), e.clone(), BigRational::one());
            }
            return;
        }
        let top = if complete { left } else { left.min(1) };
        for v in 0..=top {
            e[i] = v;
            rec(i + 1, left - v, e, complete, out);
        }
        e[i] = 0;
    }
    rec(0, j, &mut e, complete, &mut out);
    out
}

/// `p Q_p = 2 Σ_{r odd} p_r Q_{p−r}`, from the logarithmic derivative of
/// `∏ (1 + z t)/(1 − z t)`.
fn q_function(p: i64, k: usize) -> Arc<PowerSumSeries> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, usize), Arc<PowerSumSeries>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(p, k)) {
        return hit.clone();
    }
    let val = if p < 0 {
        PowerSumSeries::zero(k)
    } else if p == 0 {
        PowerSumSeries::one(k)
    } else {
        let mut acc = PowerSumSeries::zero(k);
        for r in (1..=p).step_by(2) {
            acc = acc.add(&PowerSumSeries::power(k, r as u32).mul(&q_function(p - r, k)));
        }
        acc.scale(&(rat(2) / rat(p)))
    };
    let val = Arc::new(val);
    cache.lock().expect("cache poisoned").insert((p, k), val.clone());
    val
}

/// `h_p(Z)` via Newton's identity `p h_p = Σ p_r h_{p−r}`.
fn complete_z(p: i64) -> Arc<PowerSumSeries> {
    static CACHE: OnceLock<Mutex<HashMap<i64, Arc<PowerSumSeries>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&p) {
        return hit.clone();
    }
    let val = if p < 0 {
        PowerSumSeries::zero(0)
    } else if p == 0 {
        PowerSumSeries::one(0)
    } else {
        let mut acc = PowerSumSeries::zero(0);
        for r in 1..=p {
            acc = acc.add(&PowerSumSeries::power(0, r as u32).mul(&complete_z(p - r)));
        }
        acc.scale(&(BigRational::one() / rat(p)))
    };
    let val = Arc::new(val);
    cache.lock().expect("cache poisoned").insert(p, val.clone());
    val
}

fn p_function(p: i64, k: usize) -> PowerSumSeries {
    if p == 0 {
        PowerSumSeries::one(k)
    } else {
        q_function(p, k).scale(&BigRational::new(1.into(), 2.into()))
    }
}

/// A generator in power-sum coordinates.
pub fn generator_power_sums(which: Which, p: i64, k: usize) -> PowerSumSeries {
    match which {
        Which::E => x_symmetric(p, k, false),
        Which::H => x_symmetric(p, k, true),
        Which::Q => (*q_function(p, k)).clone(),
        Which::P => {
            if p < 0 {
                PowerSumSeries::zero(k)
            } else {
                p_function(p, k)
            }
        }
        Which::Theta => {
            let mut acc = PowerSumSeries::zero(k);
            for j in 0..=p.max(-1) {
                acc = acc.add(&q_function(p - j, k).mul(&x_symmetric(j, k, false)));
            }
            acc
        }
        Which::Eta => {
            if p < 0 {
                return PowerSumSeries::zero(k);
            }
            let mut acc = PowerSumSeries::zero(k);
            if (p as usize) < k {
                acc = x_symmetric(p, k, false);
                for i in 0..p {
                    acc = acc.add(&p_function(p - i, k).mul(&x_symmetric(i, k, false)).scale(&rat(2)));
                }
            } else {
                for i in 0..=p {
                    acc = acc.add(&p_function(p - i, k).mul(&x_symmetric(i, k, false)));
                }
            }
            acc
        }
        Which::EtaPrime => {
            let mut acc = PowerSumSeries::zero(k);
            for i in 0..p {
                acc = acc.add(&p_function(p - i, k).mul(&x_symmetric(i, k, false)));
            }
            acc
        }
    }
}

/// `generator_power_sums` in monomial coordinates with `m` z-variables and cap `cap`.
pub fn generator_series(which: Which, p: i64, m: usize, k: usize, cap: u32) -> Result<TruncatedSeries> {
    Ok(generator_power_sums(which, p, k).to_symmetric(m, cap)?.to_truncated())
}

/// Where free-ring generators are sent by a substitution oracle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Alphabet {
    /// `u_p ↦ ϑ_p(Z; X_k)`, `c_p ↦ Q_p(Z)`.
    Theta(usize),
    /// `b_p ↦ η_p`, `b′_k ↦ η′_k`; at level 0, `b_p ↦ P_p(Z)`.
    Eta(usize),
    /// `h_p ↦ h_p(Z)`, `e_p ↦ e_p(Z)`, `u_p ↦ h_p(Z)`.
    SchurZ,
    /// `h_p ↦ h_p(X_n)`, `e_p ↦ e_p(X_n)`, `u_p ↦ h_p(X_n)`.
    SchurX(usize),
}

impl Alphabet {
    fn k(&self) -> usize {
        match self {
            Alphabet::Theta(k) | Alphabet::Eta(k) | Alphabet::SchurX(k) => *k,
            Alphabet::SchurZ => 0,
        }
    }

    fn image(&self, g: Generator) -> Result<PowerSumSeries> {
        let k = self.k();
        let p = g.index as i64;
        let bad = || Error::precondition("alphabet", format!("generator {g} has no image under {self:?}"));
        Ok(match (self, g.family) {
            (Alphabet::Theta(_), Family::U) => generator_power_sums(Which::Theta, p, k),
            (Alphabet::Theta(_), Family::C) => generator_power_sums(Which::Q, p, k),
            (Alphabet::Eta(0), Family::B) => generator_power_sums(Which::P, p, 0),
            (Alphabet::Eta(_), Family::B) => generator_power_sums(Which::Eta, p, k),
            (Alphabet::Eta(_), Family::BPrime) if g.index as usize == k => generator_power_sums(Which::EtaPrime, p, k),
            (Alphabet::SchurZ, Family::H | Family::U) => (*complete_z(p)).clone(),
            (Alphabet::SchurZ, Family::E) => elementary_z(p),
            (Alphabet::SchurX(_), Family::H | Family::U) => x_symmetric(p, k, true),
            (Alphabet::SchurX(_), Family::E) => x_symmetric(p, k, false),
            (_, Family::X) if (g.index as usize) <= k && g.index >= 1 => {
                let mut e = vec![0; k];
                e[g.index as usize - 1] = 1;
                PowerSumSeries::x_monomial(e)
            }
            _ => return Err(bad()),
        })
    }
}

fn elementary_z(p: i64) -> PowerSumSeries {
    // e_p = Σ_{ν ⊢ p} sign · p_ν / z_ν is obtained from ∑ (−1)^{r−1} p_r e_{p−r} = p e_p.
    let mut table: Vec<PowerSumSeries> = vec![PowerSumSeries::one(0)];
    for q in 1..=p.max(0) {
        let mut acc = PowerSumSeries::zero(0);
        for r in 1..=q {
            let sign = if r % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&PowerSumSeries::power(0, r as u32).mul(&table[(q - r) as usize]).scale(&rat(sign)));
        }
        table.push(acc.scale(&(BigRational::one() / rat(q))));
    }
    if p < 0 {
        PowerSumSeries::zero(0)
    } else {
        table.swap_remove(p as usize)
    }
}

type MonomialCache = HashMap<(Alphabet, Monomial), Arc<PowerSumSeries>>;

fn monomial_image(alpha: Alphabet, m: &Monomial) -> Result<Arc<PowerSumSeries>> {
    static CACHE: OnceLock<Mutex<MonomialCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(alpha, m.clone())) {
        return Ok(hit.clone());
    }
    let val = match m.pairs().last() {
        None => PowerSumSeries::one(alpha.k()),
        Some(&(g, e)) => {
            let mut pairs = m.pairs().to_vec();
            pairs.last_mut().expect("nonempty").1 = e - 1;
            let rest = monomial_image(alpha, &Monomial::from_pairs(pairs))?;
            rest.mul(&alpha.image(g)?)
        }
    };
    let val = Arc::new(val);
    cache.lock().expect("cache poisoned").insert((alpha, m.clone()), val.clone());
    Ok(val)
}

/// Image of a free-ring element under an alphabet, in power-sum coordinates.
pub fn substitute_power_sums(x: &FreeElement, alpha: Alphabet) -> Result<PowerSumSeries> {
    let mut out = PowerSumSeries::zero(alpha.k());
    for (m, c) in x.terms() {
        out = out.add(&monomial_image(alpha, m)?.scale(c));
    }
    Ok(out)
}

/// `Θ_λ(Z; X_k)` in power-sum coordinates.
pub fn theta_oracle(lambda: &Partition, k: usize) -> Result<PowerSumSeries> {
    substitute_power_sums(&theta_polynomial(lambda, k)?, Alphabet::Theta(k))
}

/// `Η_λ(Z; X_k)` in power-sum coordinates; level 0 gives `P_λ(Z)`.
pub fn eta_oracle(lambda: &TypedPartition) -> Result<PowerSumSeries> {
    let poly = if lambda.k() == 0 { eta_level0(lambda.partition())? } else { eta_star_expand(lambda)? };
    substitute_power_sums(&poly, Alphabet::Eta(lambda.k()))
}

/// `s_λ(Z)` in power-sum coordinates, through the Jacobi–Trudi determinant.
pub fn schur_oracle(lambda: &Partition) -> Result<PowerSumSeries> {
    substitute_power_sums(&determinant_formula(lambda, Family::H), Alphabet::SchurZ)
}

/// `Θ_λ(Z; X_k)` with `m` z-variables, truncated at `cap`.
pub fn substitute_theta(lambda: &Partition, k: usize, m: usize, cap: u32) -> Result<TruncatedSeries> {
    Ok(theta_oracle(lambda, k)?.to_symmetric(m, cap)?.to_truncated())
}

/// `Η_λ(Z; X_k)` with `m` z-variables, truncated at `cap`.
pub fn substitute_eta(lambda: &TypedPartition, m: usize, cap: u32) -> Result<TruncatedSeries> {
    Ok(eta_oracle(lambda)?.to_symmetric(m, cap)?.to_truncated())
}

/// Theta oracle directly in symmetric coordinates.
pub fn theta_symmetric(lambda: &Partition, k: usize, m: usize, cap: u32) -> Result<SymmetricSeries> {
    theta_oracle(lambda, k)?.to_symmetric(m, cap)
}

/// Eta oracle directly in symmetric coordinates.
pub fn eta_symmetric(lambda: &TypedPartition, m: usize, cap: u32) -> Result<SymmetricSeries> {
    eta_oracle(lambda)?.to_symmetric(m, cap)
}

/// `e_j(x_1..x_n)` as a free-ring element in the `x` family.
pub fn elementary_x(j: i64, n: usize) -> FreeElement {
    let mut out = FreeElement::zero();
    if j < 0 || j as usize > n {
        return out;
    }
    fn rec(start: usize, left: usize, n: usize, chosen: &mut Vec<u32>, out: &mut FreeElement) {
        if left == 0 {
            out.add_term(Monomial::from_indices(Family::X, chosen.iter().copied()), BigRational::one());
            return;
        }
        for i in start..=n {
            chosen.push(i as u32);
            rec(i + 1, left - 1, n, chosen, out);
            chosen.pop();
        }
    }
    rec(1, j as usize, n, &mut Vec::new(), &mut out);
    out
}

/// `∏_{i<j} (1 − R_ij)/(1 + R_ij) e_λ(X_n)`.
pub fn q_tilde(lambda: &Partition, n: usize) -> Result<FreeElement> {
    let alpha: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let eval = |seq: &[i64]| {
        let mut acc = FreeElement::one();
        for &p in seq {
            acc = &acc * &elementary_x(p, n);
        }
        acc
    };
    raising_expand(&RaisingOperatorSpec::full_q(alpha.len()), &alpha, &EvaluationRule::Custom(&eval))
}

/// `2^{−ℓ(λ)} Q̃_λ(X_n)`; coefficients may be fractional.
pub fn p_tilde(lambda: &Partition, n: usize) -> Result<FreeElement> {
    Ok(q_tilde(lambda, n)?.scale(&BigRational::new(1.into(), BigInt::one() << lambda.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn q_in_one_variable() {
        for p in 1..6 {
            let s = generator_series(Which::Q, p, 1, 0, 10).unwrap();
            assert_eq!(s, TruncatedSeries::monomial(1, 0, 10, &[p as u32], &[], BigInt::from(2)));
        }
    }

    #[test]
    fn q_coefficients_are_powers_of_two() {
        let q = generator_power_sums(Which::Q, 4, 0).to_symmetric(4, 4).unwrap();
        assert_eq!(q.coeff(&[2, 1, 1], &[]), BigInt::from(8));
        assert_eq!(q.coeff(&[1, 1, 1, 1], &[]), BigInt::from(16));
    }

    #[test]
    fn elementary_vanishes_beyond_k() {
        assert!(generator_series(Which::E, 3, 2, 2, 5).unwrap().is_zero());
        assert_eq!(generator_series(Which::E, 2, 2, 2, 5).unwrap().len(), 1);
    }

    #[test]
    fn gamma_relations_hold_for_q_and_p() {
        for p in 1..=5i64 {
            let q = |i: i64| generator_power_sums(Which::Q, i, 0);
            let mut rel = q(p).mul(&q(p));
            for i in 1..=p {
                let sign = if i % 2 == 0 { 2 } else { -2 };
                rel = rel.add(&q(p + i).mul(&q(p - i)).scale(&rat(sign)));
            }
            assert!(rel.is_zero(), "Q relation at p={p}");
            let pp = |i: i64| generator_power_sums(Which::P, i, 0);
            let mut rel = pp(p).mul(&pp(p));
            for i in 1..p {
                let sign = if i % 2 == 0 { 2 } else { -2 };
                rel = rel.add(&pp(p + i).mul(&pp(p - i)).scale(&rat(sign)));
            }
            let sign = if p % 2 == 0 { 1 } else { -1 };
            rel = rel.add(&pp(2 * p).scale(&rat(sign)));
            assert!(rel.is_zero(), "P relation at p={p}");
        }
    }

    #[test]
    fn theta_relations_above_k() {
        for k in 0..=2usize {
            for p in (k as i64 + 1)..=(k as i64 + 3) {
                let t = |i: i64| generator_power_sums(Which::Theta, i, k);
                let mut rel = t(p).mul(&t(p));
                for i in 1..=p {
                    let sign = if i % 2 == 0 { 2 } else { -2 };
                    rel = rel.add(&t(p + i).mul(&t(p - i)).scale(&rat(sign)));
                }
                assert!(rel.is_zero(), "k={k} p={p}");
            }
        }
    }

    #[test]
    fn theta_splits_into_eta() {
        for k in 1..=3usize {
            for r in 0..=6i64 {
                let theta = generator_power_sums(Which::Theta, r, k);
                let eta = generator_power_sums(Which::Eta, r, k);
                let expected = match (r as usize).cmp(&k) {
                    std::cmp::Ordering::Less => eta,
                    std::cmp::Ordering::Equal => eta.add(&generator_power_sums(Which::EtaPrime, r, k)),
                    std::cmp::Ordering::Greater => eta.scale(&rat(2)),
                };
                assert_eq!(theta, expected, "k={k} r={r}");
            }
        }
    }

    #[test]
    fn level_zero_theta_is_q() {
        let lam = part("3,1");
        let q = theta_oracle(&lam, 0).unwrap();
        let q3 = generator_power_sums(Which::Q, 3, 0);
        let q1 = generator_power_sums(Which::Q, 1, 0);
        let q4 = generator_power_sums(Which::Q, 4, 0);
        assert_eq!(q, q3.mul(&q1).sub(&q4.scale(&rat(2))));
    }

    #[test]
    fn theta_521_through_substitution() {
        let t = |i: i64| generator_power_sums(Which::Theta, i, 2);
        let expected = t(5)
            .mul(&t(2))
            .mul(&t(1))
            .sub(&t(5).mul(&t(3)))
            .sub(&t(6).mul(&t(1)).mul(&t(1)).scale(&rat(2)))
            .add(&t(6).mul(&t(2)))
            .add(&t(7).mul(&t(1)).scale(&rat(2)));
        assert_eq!(theta_oracle(&part("5,2,1"), 2).unwrap(), expected);
    }

    #[test]
    fn schur_two_one_in_three_variables() {
        let s = schur_oracle(&part("2,1")).unwrap().to_symmetric(3, 3).unwrap();
        assert_eq!(s.coeff(&[2, 1], &[]), BigInt::from(1));
        assert_eq!(s.coeff(&[1, 1, 1], &[]), BigInt::from(2));
        assert_eq!(s.coeff(&[3], &[]), BigInt::from(0));
    }

    #[test]
    fn q_tilde_small_cases() {
        assert_eq!(q_tilde(&part("1"), 3).unwrap(), elementary_x(1, 3));
        let p = p_tilde(&part("2"), 2).unwrap();
        assert_eq!(p, elementary_x(2, 2).scale(&BigRational::new(1.into(), 2.into())));
        let q21 = q_tilde(&part("2,1"), 2).unwrap();
        let e = |j| elementary_x(j, 2);
        assert_eq!(q21, &(&e(2) * &e(1)) - &e(3).scale(&rat(2)));
    }
}
