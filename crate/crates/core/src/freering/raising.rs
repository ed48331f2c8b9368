//! Raising operators `∏(1 − R_ij) ∏(1 + R_ij)^{-1}` acting on integer sequences.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::element::{Family, FreeElement, Monomial};
use crate::combinat::{Partition, TypedPartition};
use crate::error::{Error, Result};

/// Slots are 0-based here; pair `(i, j)` always has `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingOperatorSpec {
    pub len: usize,
    pub numerator: BTreeSet<(usize, usize)>,
    pub denominator: BTreeSet<(usize, usize)>,
}

impl RaisingOperatorSpec {
    pub fn empty(len: usize) -> Self {
        RaisingOperatorSpec { len, numerator: BTreeSet::new(), denominator: BTreeSet::new() }
    }

    /// `∏_{i<j} (1 − R_ij)`: the Schur operator.
    pub fn schur(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.numerator = all_pairs(len);
        s
    }

    /// `∏_{i<j} (1 − R_ij)/(1 + R_ij)`.
    pub fn full_q(len: usize) -> Self {
        let mut s = Self::schur(len);
        s.denominator = s.numerator.clone();
        s
    }

    fn validate(&self) -> Result<()> {
        for &(i, j) in self.numerator.iter().chain(&self.denominator) {
            if i >= j || j >= self.len {
                return Err(Error::precondition("raising pair", format!("({i},{j}) invalid for length {}", self.len)));
            }
        }
        Ok(())
    }
}

fn all_pairs(len: usize) -> BTreeSet<(usize, usize)> {
    (0..len).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// How an integer sequence becomes a monomial.
pub enum EvaluationRule<'a> {
    /// `g_{β_1} g_{β_2} ⋯` with `g_0 = 1` and `g_{<0} = 0`.
    Plain(Family),
    /// Arbitrary map; negative entries never reach it.
    Custom(&'a dyn Fn(&[i64]) -> FreeElement),
}

/// Coefficient of `R_ij^m` in the factor attached to one pair.
fn pair_coeff(num: bool, den: bool, m: i64) -> i64 {
    let sign = if m % 2 == 0 { 1 } else { -1 };
    match (num, den) {
        (true, false) => [1, -1].get(m as usize).copied().unwrap_or(0),
        (false, true) => sign,
        (true, true) => {
            if m == 0 {
                1
            } else {
                2 * sign
            }
        }
        (false, false) => i64::from(m == 0),
    }
}

/// Expands the operator on `alpha`, returning every surviving sequence with
/// its integer coefficient. With `mark = Some(r)` the result is keyed also
/// by whether some operator with positive exponent involved slot `r`.
///
/// Pairs are grouped by their lower slot `j`, processed from the last slot
/// backwards. Once a group is finished slot `j` can only stay put, so
/// states with a negative entry there are dropped; within the group the
/// exponent of `R_ij` never exceeds the current value of slot `j`.
pub fn expand_sequences(
    spec: &RaisingOperatorSpec,
    alpha: &[i64],
    mark: Option<usize>,
) -> Result<HashMap<(Vec<i64>, bool), BigInt>> {
    spec.validate()?;
    if alpha.len() != spec.len {
        return Err(Error::precondition("sequence length", format!("expected {}, got {}", spec.len, alpha.len())));
    }
    let mut states: HashMap<(Vec<i64>, bool), BigInt> = HashMap::new();
    states.insert((alpha.to_vec(), false), BigInt::one());
    for j in (0..spec.len).rev() {
        for i in 0..j {
            let num = spec.numerator.contains(&(i, j));
            let den = spec.denominator.contains(&(i, j));
            if !num && !den {
                continue;
            }
            let mut next: HashMap<(Vec<i64>, bool), BigInt> = HashMap::with_capacity(states.len() * 2);
            for ((seq, touched), c) in states {
                let max_m = if den { seq[j].max(0) } else { 1.min(seq[j].max(0)) };
                for m in 0..=max_m {
                    let pc = pair_coeff(num, den, m);
                    if pc == 0 {
                        continue;
                    }
                    let mut s = seq.clone();
                    s[i] += m;
                    s[j] -= m;
                    let t = touched || (m > 0 && mark.is_some_and(|r| r == i || r == j));
                    *next.entry((s, t)).or_insert_with(BigInt::zero) += &c * pc;
                }
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
        states.retain(|(seq, _), _| seq[j] >= 0);
    }
    Ok(states)
}

/// Applies the operator to `alpha` and evaluates each sequence.
pub fn raising_expand(spec: &RaisingOperatorSpec, alpha: &[i64], eval: &EvaluationRule) -> Result<FreeElement> {
    let states = expand_sequences(spec, alpha, None)?;
    let mut out = FreeElement::zero();
    for ((seq, _), c) in states {
        let c = BigRational::from_integer(c);
        match eval {
            EvaluationRule::Plain(f) => {
                out.add_term(Monomial::from_indices(*f, seq.iter().map(|&v| v as u32)), c);
            }
            EvaluationRule::Custom(g) => out += g(&seq).scale(&c),
        }
    }
    Ok(out)
}

fn seq_of(lambda: &Partition) -> Vec<i64> {
    lambda.parts().iter().map(|&p| p as i64).collect()
}

/// `R^λ` for theta polynomials: denominators on pairs with
/// `λ_i + λ_j > 2k + j − i`. `len ≥ ℓ(λ)` pads with zero parts.
pub fn theta_spec_padded(lambda: &Partition, k: usize, len: usize) -> Result<RaisingOperatorSpec> {
    if !lambda.is_k_strict(k) {
        return Err(Error::precondition("k-strict", format!("{lambda} is not {k}-strict")));
    }
    let len = len.max(lambda.len());
    let mut s = RaisingOperatorSpec::schur(len);
    s.denominator = s
        .numerator
        .iter()
        .copied()
        .filter(|&(i, j)| lambda.part(i) + lambda.part(j) > 2 * k + j - i)
        .collect();
    Ok(s)
}

pub fn theta_spec(lambda: &Partition, k: usize) -> Result<RaisingOperatorSpec> {
    theta_spec_padded(lambda, k, lambda.len())
}

/// `R^λ` for eta polynomials: the same with `≥`.
pub fn eta_spec(lambda: &Partition, k: usize) -> Result<RaisingOperatorSpec> {
    if !lambda.is_k_strict(k) {
        return Err(Error::precondition("k-strict", format!("{lambda} is not {k}-strict")));
    }
    let mut s = RaisingOperatorSpec::schur(lambda.len());
    s.denominator = s
        .numerator
        .iter()
        .copied()
        .filter(|&(i, j)| lambda.part(i) + lambda.part(j) >= 2 * k + j - i)
        .collect();
    Ok(s)
}

/// `Θ^(k)_λ(u)`.
pub fn theta_polynomial(lambda: &Partition, k: usize) -> Result<FreeElement> {
    raising_expand(&theta_spec(lambda, k)?, &seq_of(lambda), &EvaluationRule::Plain(Family::U))
}

fn pow2(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

/// `u_p` written in b-generators.
fn u_to_b(p: i64, k: usize) -> FreeElement {
    let p_us = p as usize;
    if p < 0 {
        FreeElement::zero()
    } else if p == 0 {
        FreeElement::one()
    } else if p_us < k {
        FreeElement::gen(Family::B, p)
    } else if p_us == k {
        &FreeElement::gen(Family::B, p) + &FreeElement::gen(Family::BPrime, p)
    } else {
        FreeElement::gen(Family::B, p).scale(&BigRational::from_integer(2.into()))
    }
}

fn u_seq_to_b(seq: impl IntoIterator<Item = i64>, k: usize) -> FreeElement {
    let mut out = FreeElement::one();
    for p in seq {
        if p != 0 {
            out = &out * &u_to_b(p, k);
        }
    }
    out
}

/// `Η^(k)_λ(b)` for a typed `k`-strict partition, `k ≥ 1`.
pub fn eta_star_expand(lambda: &TypedPartition) -> Result<FreeElement> {
    let k = lambda.k();
    if k == 0 {
        return eta_level0(lambda.partition());
    }
    let spec = eta_spec(lambda.partition(), k)?;
    let alpha = seq_of(lambda.partition());
    let mark = if lambda.ty() == 0 { None } else { lambda.first_k_index() };
    let states = expand_sequences(&spec, &alpha, mark)?;
    let half = BigRational::new(1.into(), 2.into());
    let extra = match lambda.ty() {
        1 => FreeElement::gen(Family::B, k as i64),
        _ => FreeElement::gen(Family::BPrime, k as i64),
    };
    // Group the plain-evaluated sequences so that each u-monomial is
    // converted to b-generators only once.
    let mut plain: HashMap<Vec<i64>, BigRational> = HashMap::new();
    let mut with_extra: HashMap<Vec<i64>, BigRational> = HashMap::new();
    for ((seq, touched), c) in states {
        let c = BigRational::from_integer(c);
        match mark {
            None => *plain.entry(sorted(seq)).or_insert_with(BigRational::zero) += c,
            Some(_) if touched => *plain.entry(sorted(seq)).or_insert_with(BigRational::zero) += c * &half,
            Some(r) => {
                let mut s = seq;
                s.remove(r);
                *with_extra.entry(sorted(s)).or_insert_with(BigRational::zero) += c;
            }
        }
    }
    let mut out = FreeElement::zero();
    for (seq, c) in plain {
        out += u_seq_to_b(seq, k).scale(&c);
    }
    let mut tail = FreeElement::zero();
    for (seq, c) in with_extra {
        tail += u_seq_to_b(seq, k).scale(&c);
    }
    out += &tail * &extra;
    let out = out.scale(&(BigRational::one() / pow2(lambda.ell_k())));
    out.require_integral(&format!("eta polynomial {lambda}"))?;
    Ok(out)
}

/// `2^{−ℓ_k(λ)} R^λ u_λ` in b-generators: the sum of the two eta
/// polynomials when `λ` has a part equal to `k`.
pub fn eta_plain_sum(lambda: &Partition, k: usize) -> Result<FreeElement> {
    let spec = eta_spec(lambda, k)?;
    let states = expand_sequences(&spec, &seq_of(lambda), None)?;
    let mut out = FreeElement::zero();
    for ((seq, _), c) in states {
        out += u_seq_to_b(seq, k).scale(&BigRational::from_integer(c));
    }
    Ok(out.scale(&(BigRational::one() / pow2(lambda.parts_above(k)))))
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

/// Level-zero eta polynomial `2^{−ℓ(λ)} ∏(1−R)/(1+R) u_λ` with `u = 2b`.
pub fn eta_level0(lambda: &Partition) -> Result<FreeElement> {
    if !lambda.is_strict() {
        return Err(Error::precondition("strict", format!("{lambda} is not strict")));
    }
    let spec = RaisingOperatorSpec::full_q(lambda.len());
    let states = expand_sequences(&spec, &seq_of(lambda), None)?;
    let mut out = FreeElement::zero();
    let l = lambda.len();
    for ((seq, _), c) in states {
        let nonzero = seq.iter().filter(|&&v| v > 0).count();
        // 2^{nonzero − ℓ}; nonzero ≤ ℓ always.
        let c = BigRational::from_integer(c) / pow2(l - nonzero);
        out.add_term(Monomial::from_indices(Family::B, seq.iter().map(|&v| v as u32)), c);
    }
    out.require_integral(&format!("level-zero eta polynomial {lambda}"))?;
    Ok(out)
}

/// `det(g_{λ_i + j − i})`; for `Family::E` the conjugate partition is used,
/// giving the dual Jacobi-Trudi form.
pub fn determinant_formula(lambda: &Partition, family: Family) -> FreeElement {
    let rows: Vec<i64> = match family {
        Family::E => seq_of(&lambda.conjugate()),
        _ => seq_of(lambda),
    };
    let n = rows.len();
    let mut memo: HashMap<u64, FreeElement> = HashMap::new();
    det_rec(&rows, 0, 0, n, family, &mut memo)
}

fn det_rec(rows: &[i64], row: usize, used: u64, n: usize, family: Family, memo: &mut HashMap<u64, FreeElement>) -> FreeElement {
    if row == n {
        return FreeElement::one();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut out = FreeElement::zero();
    let mut sign = 1i64;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = FreeElement::gen(family, rows[row] + col as i64 - row as i64);
        if !entry.is_zero() {
            let minor = det_rec(rows, row + 1, used | (1 << col), n, family, memo);
            out += (&entry * &minor).scale(&BigRational::from_integer(sign.into()));
        }
        sign = -sign;
    }
    memo.insert(used, out.clone());
    out
}

/// Pfaffian of `(Θ_{λ_i, λ_j}(u))`, with a zero part appended when `ℓ(λ)`
/// is odd and `Θ_{a,0} = u_a`.
pub fn pfaffian_formula(lambda: &Partition, k: usize) -> Result<FreeElement> {
    if !lambda.is_strict() || lambda.parts().iter().any(|&p| p <= k) {
        return Err(Error::precondition("parts above level", format!("{lambda} must be strict with all parts > {k}")));
    }
    let mut parts = seq_of(lambda);
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let n = parts.len();
    let mut entries = vec![vec![FreeElement::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            entries[i][j] = raising_expand(&RaisingOperatorSpec::full_q(2), &[parts[i], parts[j]], &EvaluationRule::Plain(Family::U))?;
        }
    }
    let mut memo = HashMap::new();
    Ok(pf_rec(&entries, (1u64 << n) - 1, &mut memo))
}

fn pf_rec(m: &[Vec<FreeElement>], remaining: u64, memo: &mut HashMap<u64, FreeElement>) -> FreeElement {
    if remaining == 0 {
        return FreeElement::one();
    }
    if let Some(v) = memo.get(&remaining) {
        return v.clone();
    }
    let first = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << first);
    let mut out = FreeElement::zero();
    let mut sign = 1i64;
    for j in 0..m.len() {
        if rest & (1 << j) == 0 {
            continue;
        }
        let sub = pf_rec(m, rest & !(1 << j), memo);
        out += (&m[first][j] * &sub).scale(&BigRational::from_integer(sign.into()));
        sign = -sign;
    }
    memo.insert(remaining, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::element::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn u_mono(ix: &[u32]) -> Monomial {
        Monomial::from_indices(Family::U, ix.iter().copied())
    }

    #[test]
    fn two_row_schur() {
        let x = raising_expand(&RaisingOperatorSpec::schur(2), &[4, 2], &EvaluationRule::Plain(Family::U)).unwrap();
        let expected = FreeElement::from_terms([(u_mono(&[4, 2]), rat(1)), (u_mono(&[5, 1]), rat(-1))]);
        assert_eq!(x, expected);
    }

    #[test]
    fn theta_521() {
        let lam = p("5,2,1");
        let spec = theta_spec(&lam, 2).unwrap();
        assert_eq!(spec.denominator.iter().copied().collect::<Vec<_>>(), vec![(0, 1)]);
        let x = theta_polynomial(&lam, 2).unwrap();
        let expected = FreeElement::from_terms([
            (u_mono(&[5, 2, 1]), rat(1)),
            (u_mono(&[5, 3]), rat(-1)),
            (u_mono(&[6, 1, 1]), rat(-2)),
            (u_mono(&[6, 2]), rat(1)),
            (u_mono(&[7, 1]), rat(2)),
        ]);
        assert_eq!(x, expected);
    }

    #[test]
    fn eta_322_type2() {
        let lam = TypedPartition::parse("3,2,2:2", 2).unwrap();
        let x = eta_star_expand(&lam).unwrap();
        let b = |i: i64| FreeElement::gen(Family::B, i);
        let bp = FreeElement::gen(Family::BPrime, 2);
        let expected = &(&(&(&(&(&(&(&b(3) * &bp) * &b(2)) + &(&b(3) * &(&bp * &bp))) - &(&(&b(3) * &b(3)) * &b(1)))
            + &(&b(4) * &b(3)))
            - &(&(&b(4) * &bp) * &b(1)))
            + &(&b(6) * &b(1)))
            - &b(7);
        assert_eq!(x, expected);
        assert_eq!(x.to_string(), "b3b′2^2 + b3b′2b2 - b3^2b1 - b4b′2b1 + b4b3 + b6b1 - b7");
    }

    #[test]
    fn eta_type_sum() {
        let lam = p("3,2,2");
        let one = eta_star_expand(&TypedPartition::new(lam.clone(), 2, 1).unwrap()).unwrap();
        let two = eta_star_expand(&TypedPartition::new(lam.clone(), 2, 2).unwrap()).unwrap();
        assert_eq!(&one + &two, eta_plain_sum(&lam, 2).unwrap());
    }

    #[test]
    fn eta_small_cases() {
        for k in 1..4 {
            let one = TypedPartition::new(Partition::new(vec![k]).unwrap(), k, 1).unwrap();
            let two = TypedPartition::new(Partition::new(vec![k]).unwrap(), k, 2).unwrap();
            assert_eq!(eta_star_expand(&one).unwrap(), FreeElement::gen(Family::B, k as i64));
            assert_eq!(eta_star_expand(&two).unwrap(), FreeElement::gen(Family::BPrime, k as i64));
        }
        assert_eq!(eta_level0(&p("")).unwrap(), FreeElement::one());
        let b = |i: i64| FreeElement::gen(Family::B, i);
        assert_eq!(eta_level0(&p("2,1")).unwrap(), &(&b(2) * &b(1)) - &b(3));
        assert_eq!(eta_level0(&p("4")).unwrap(), b(4));
    }

    #[test]
    fn padding_is_invisible() {
        let lam = p("5,2,1");
        let base = theta_polynomial(&lam, 2).unwrap();
        for extra in 1..3 {
            let spec = theta_spec_padded(&lam, 2, lam.len() + extra).unwrap();
            let mut alpha = seq_of(&lam);
            alpha.resize(lam.len() + extra, 0);
            assert_eq!(raising_expand(&spec, &alpha, &EvaluationRule::Plain(Family::U)).unwrap(), base);
        }
    }

    #[test]
    fn determinants_and_pfaffians() {
        assert_eq!(determinant_formula(&p(""), Family::U), FreeElement::one());
        for lam in ["2,1", "3,1,1", "2,2"] {
            let lam = p(lam);
            let schur = raising_expand(&RaisingOperatorSpec::schur(lam.len()), &seq_of(&lam), &EvaluationRule::Plain(Family::H)).unwrap();
            assert_eq!(determinant_formula(&lam, Family::H), schur);
        }
        for lam in ["3,2,1", "2,1", "4,3,1"] {
            let lam = p(lam);
            assert_eq!(pfaffian_formula(&lam, 0).unwrap(), theta_polynomial(&lam, 0).unwrap());
        }
    }
}
