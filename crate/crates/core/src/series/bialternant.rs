//! Schur polynomials as quotients of alternants.

use num_bigint::BigInt;
use num_traits::One;

use super::TruncatedSeries;
use crate::combinat::{Group, Partition, SignedPermutation};
use crate::error::{Error, Result};
use crate::freering::{Family, FreeElement};

/// `𝒜(x^α) = Σ_{w ∈ S_n} (−1)^{ℓ(w)} x^{w(α)}` in `x_1..x_n`.
pub fn alternant(alpha: &[u32], n: usize) -> TruncatedSeries {
    assert!(alpha.len() <= n);
    let mut padded = alpha.to_vec();
    padded.resize(n, 0);
    let mut out = TruncatedSeries::zero(0, n, u32::MAX);
    for w in SignedPermutation::all(n, Group::A) {
        let mut e = vec![0u32; n];
        for (i, &v) in w.window().iter().enumerate() {
            e[v as usize - 1] = padded[i];
        }
        let sign = if w.length() % 2 == 0 { 1 } else { -1 };
        out.add_term(e, BigInt::from(sign));
    }
    out
}

/// `𝒜(x^{λ+δ_{n−1}}) / 𝒜(x^{δ_{n−1}})`.
pub fn bialternant_schur(lambda: &Partition, n: usize) -> Result<TruncatedSeries> {
    if lambda.len() > n {
        return Err(Error::precondition("length", format!("{lambda} has more than {n} parts")));
    }
    let staircase: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let shifted: Vec<u32> = staircase.iter().enumerate().map(|(i, &d)| d + lambda.part(i) as u32).collect();
    let q = alternant(&shifted, n).divide_exact(&alternant(&staircase, n))?;
    Ok(q.with_cap(lambda.size() as u32))
}

/// `𝒜(x^{λ(ϖ w_0)}) / 𝒜(x^{λ(w_0)})` for an `n`-Grassmannian permutation `ϖ`.
pub fn grassmannian_alternant_quotient(w: &SignedPermutation, n: usize) -> Result<TruncatedSeries> {
    if !w.is_grassmannian(n) && !w.is_identity() {
        return Err(Error::precondition("grassmannian", format!("{w} is not {n}-Grassmannian")));
    }
    let w0 = SignedPermutation::longest(n, Group::A);
    let top = w.compose(&w0).shape();
    let bottom = w0.shape();
    if top.len() > n {
        return Err(Error::precondition("length", format!("shape {top} has more than {n} parts")));
    }
    let as_vec = |p: &Partition| p.parts().iter().map(|&v| v as u32).collect::<Vec<_>>();
    let q = alternant(&as_vec(&top), n).divide_exact(&alternant(&as_vec(&bottom), n))?;
    Ok(q.with_cap(w.length() as u32))
}

/// A polynomial in the `x` family with integral coefficients as an x-only series.
pub fn x_polynomial_series(f: &FreeElement, n: usize, cap: u32) -> Result<TruncatedSeries> {
    let mut out = TruncatedSeries::zero(0, n, cap);
    for (m, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral(format!("coefficient {c} of {m}")));
        }
        let mut e = vec![0u32; n];
        for &(g, p) in m.pairs() {
            if g.family != Family::X || g.index == 0 || g.index as usize > n {
                return Err(Error::precondition("x-polynomial", format!("generator {g} outside x_1..x_{n}")));
            }
            e[g.index as usize - 1] += p;
        }
        out.add_term(e, c.to_integer());
    }
    Ok(out)
}

/// `x^e` for an exponent vector.
pub fn x_monomial(e: &[u32]) -> TruncatedSeries {
    TruncatedSeries::monomial(0, e.len(), u32::MAX, &[], e, BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::determinant_formula;
    use crate::series::generators::{substitute_power_sums, Alphabet};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_bialternants() {
        assert_eq!(bialternant_schur(&part(""), 3).unwrap(), TruncatedSeries::one(0, 3, 0));
        let e1 = bialternant_schur(&part("1"), 2).unwrap();
        assert_eq!(e1, &TruncatedSeries::x_var(0, 2, 1, 0) + &TruncatedSeries::x_var(0, 2, 1, 1));
        let s21 = bialternant_schur(&part("2,1"), 3).unwrap();
        assert_eq!(s21.coeff(&[1, 1, 1]), BigInt::from(2));
        assert_eq!(s21.coeff(&[2, 0, 1]), BigInt::from(1));
        assert_eq!(s21.len(), 7);
    }

    #[test]
    fn matches_jacobi_trudi() {
        for n in 1..=3 {
            for size in 0..=4 {
                for lam in Partition::all_of_size(size).into_iter().filter(|l| l.len() <= n) {
                    let jt = substitute_power_sums(&determinant_formula(&lam, Family::H), Alphabet::SchurX(n)).unwrap();
                    let jt = jt.to_symmetric(0, size as u32).unwrap().to_truncated();
                    assert_eq!(bialternant_schur(&lam, n).unwrap(), jt, "{lam} n={n}");
                }
            }
        }
    }
}
