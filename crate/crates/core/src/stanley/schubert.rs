//! Schubert polynomials of types A, C, D and the coefficients of the
//! partial-flag Giambelli formulas.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::nilcoxeter::{a_letters, schubert_a_by_monomials, NilCoxeterElement};
use super::trees::{stanley_coefficients, ShapeLabel};
use crate::combinat::{Group, SignedPermutation};
use crate::error::{Error, Result};
use crate::freering::{Family, FreeElement, Generator, Monomial};
use crate::series::{p_tilde, q_tilde};

fn x_monomial(exps: &[u32]) -> Monomial {
    Monomial::from_pairs(
        exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (Generator::new(Family::X, i as u32 + 1), e)),
    )
}

fn check_rank(w: &SignedPermutation, n: usize) -> Result<SignedPermutation> {
    let t = w.trimmed();
    if t.n() > n {
        return Err(Error::precondition("rank", format!("{w} is not in the rank-{n} group")));
    }
    Ok(t.extended(n))
}

/// `𝔖_ϖ(X_n)` by per-monomial coefficient extraction.
pub fn schubert_a(w: &SignedPermutation, n: usize) -> Result<FreeElement> {
    let w = check_rank(w, n)?;
    let mut out = FreeElement::zero();
    for (b, c) in schubert_a_by_monomials(&w)? {
        out.add_term(x_monomial(&b), BigRational::from_integer(c));
    }
    Ok(out)
}

/// `𝔖_ϖ(X_n)` by multiplying out `A_1(x_1)⋯A_{n−1}(x_{n−1})`.
pub fn schubert_a_product(w: &SignedPermutation, n: usize) -> Result<FreeElement> {
    let w = check_rank(w, n)?;
    if w.group() != Group::A {
        return Err(Error::precondition("group", "type A permutation expected"));
    }
    let mut acc = NilCoxeterElement::scalar(Group::A, n, FreeElement::one());
    for i in 1..n {
        let x = FreeElement::gen(Family::X, i as i64);
        for s in a_letters(n, i) {
            acc = acc.times_factor(s, &x);
        }
    }
    Ok(acc.coeff(&w).cloned().unwrap_or_else(FreeElement::zero))
}

fn negate_x(f: &FreeElement) -> FreeElement {
    f.substitute(&|g| (g.family == Family::X).then(|| -FreeElement::gen(Family::X, g.index as i64)))
}

/// `ℭ𝔖_w(X_n)` (type C) or `𝔇𝔖_w(X_n)` (type D).
fn schubert_bc(w: &SignedPermutation, n: usize) -> Result<FreeElement> {
    let w = check_rank(w, n)?;
    let len = w.length();
    let mut out = FreeElement::zero();
    for perm in SignedPermutation::all(n, Group::A) {
        let varpi = perm.with_group(w.group())?;
        let v = w.compose(&varpi.inverse());
        if v.length() + varpi.length() != len {
            continue;
        }
        let tail = negate_x(&schubert_a(&perm, n)?);
        for ((shape, _), c) in stanley_coefficients(&v, 0)? {
            let head = match w.group() {
                Group::C => q_tilde(&shape, n)?,
                _ => p_tilde(&shape, n)?,
            };
            out += (&head * &tail).scale(&BigRational::from_integer(BigInt::from(c)));
        }
    }
    Ok(out)
}

/// The Schubert polynomial of `w` in the rank-`n` group of `w`.
pub fn schubert_poly(w: &SignedPermutation, n: usize) -> Result<FreeElement> {
    match w.group() {
        Group::A => schubert_a(w, n),
        Group::C => schubert_bc(w, n),
        Group::D => {
            if n < 2 {
                return Err(Error::precondition("rank", "type D needs n ≥ 2"));
            }
            schubert_bc(w, n)
        }
    }
}

/// Elements `u` with `w = u·v` and `ℓ(u) + ℓ(v) = ℓ(w)`.
fn left_factors(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let n = w.n();
    let len = w.length();
    let simples = w.group().simples(n);
    let id = SignedPermutation::identity(n, w.group());
    let mut seen = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(u) = frontier.pop() {
        for &s in &simples {
            if u.has_descent(s) {
                continue;
            }
            let us = u.right_mul(s).extended(n);
            if seen.contains(&us) {
                continue;
            }
            let rest = us.inverse().compose(w);
            if us.length() + rest.length() == len {
                seen.insert(us.clone());
                frontier.push(us);
            }
        }
    }
    seen.into_iter().collect()
}

/// Whether `w` is a minimal-length representative for the parabolic
/// subgroup generated by the simple reflections outside `a`.
pub fn is_minimal_coset_rep(w: &SignedPermutation, a: &[usize], n: usize) -> bool {
    w.group().simples(n).into_iter().filter(|s| !a.contains(&s.index())).all(|s| !w.has_descent(s))
}

struct FlagSearch<'a> {
    a: &'a [usize],
    cache: HashMap<(SignedPermutation, usize), BTreeMap<ShapeLabel, usize>>,
    out: BTreeMap<Vec<ShapeLabel>, usize>,
}

impl FlagSearch<'_> {
    fn coefficients(&mut self, u: &SignedPermutation, k: usize) -> Result<BTreeMap<ShapeLabel, usize>> {
        let key = (u.clone(), k);
        if let Some(c) = self.cache.get(&key) {
            return Ok(c.clone());
        }
        let c = stanley_coefficients(u, k)?;
        self.cache.insert(key, c.clone());
        Ok(c)
    }

    /// Factors `rest = u_j ⋯ u_p`.
    fn run(&mut self, rest: &SignedPermutation, j: usize, acc: Vec<(Vec<ShapeLabel>, usize)>) -> Result<()> {
        let p = self.a.len();
        let fixed = if j > 1 { self.a[j - 2] } else { 0 };
        let admissible = |u: &SignedPermutation| {
            j == 1 || ((1..=fixed).all(|i| u.at(i) == i as i32) && u.window().iter().all(|&v| v > 0))
        };
        let candidates = if j == p { vec![rest.clone()] } else { left_factors(rest) };
        for u in candidates {
            if !admissible(&u) {
                continue;
            }
            let coeffs = if j == 1 {
                self.coefficients(&u, self.a[0])?
            } else {
                self.coefficients(&u.with_group(Group::A)?, 0)?
            };
            if coeffs.is_empty() {
                continue;
            }
            let mut next = Vec::new();
            for (labels, c) in &acc {
                for (l, d) in &coeffs {
                    let mut ls = labels.clone();
                    ls.push(l.clone());
                    next.push((ls, c * d));
                }
            }
            if j == p {
                for (ls, c) in next {
                    *self.out.entry(ls).or_insert(0) += c;
                }
            } else {
                let remainder = u.inverse().compose(rest);
                self.run(&remainder, j + 1, next)?;
            }
        }
        Ok(())
    }
}

/// `c^ϖ_λ̲`, `f^w_λ̲` or `g^w_λ̲` for the parabolic given by `a_1 < ⋯ < a_p`.
pub fn flag_coefficients(w: &SignedPermutation, a: &[usize]) -> Result<BTreeMap<Vec<ShapeLabel>, usize>> {
    if a.is_empty() || a.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::precondition("sequence", "a must be a nonempty increasing sequence"));
    }
    if w.group() == Group::A && a[0] == 0 {
        return Err(Error::precondition("sequence", "type A needs a_1 ≥ 1"));
    }
    let mut n = w.trimmed().n().max(a[a.len() - 1] + 1);
    if w.group() == Group::D {
        n = n.max(2);
    }
    let w = w.extended(n);
    if !is_minimal_coset_rep(&w, a, n) {
        return Err(Error::precondition("coset", format!("{w} is not a minimal length coset representative for a={a:?}")));
    }
    let mut search = FlagSearch { a, cache: HashMap::new(), out: BTreeMap::new() };
    search.run(&w, 1, vec![(Vec::new(), 1)])?;
    Ok(search.out)
}

/// `Σ c^ϖ_λ̲ Π x_i^{r_i}` over single-row sequences `λ^i = (r_i)` for the
/// complete flag; equals `𝔖_ϖ(X_n)`.
pub fn complete_flag_sum_a(w: &SignedPermutation, n: usize) -> Result<FreeElement> {
    let a: Vec<usize> = (1..n).collect();
    let mut out = FreeElement::zero();
    for (labels, c) in flag_coefficients(w, &a)? {
        if labels.iter().any(|(l, _)| l.len() > 1) {
            continue;
        }
        let exps: Vec<u32> = labels.iter().map(|(l, _)| l.part(0) as u32).collect();
        out.add_term(x_monomial(&exps), BigRational::from_integer(BigInt::from(c)));
    }
    Ok(out)
}

/// `Σ f^w_λ̲ Q̃_{λ^1}(X_n) Π_{j ≥ 2} (−x_{j−1})^{r_j}` over sequences whose
/// tail is single rows, for `a = (0, 1, …, n−1)`; equals the type C or D
/// Schubert polynomial (with `P̃` in type D).
pub fn complete_flag_sum_bc(w: &SignedPermutation, n: usize) -> Result<FreeElement> {
    let a: Vec<usize> = (0..n).collect();
    let mut out = FreeElement::zero();
    for (labels, c) in flag_coefficients(w, &a)? {
        if labels[1..].iter().any(|(l, _)| l.len() > 1) {
            continue;
        }
        let head = match w.group() {
            Group::D => p_tilde(&labels[0].0, n)?,
            _ => q_tilde(&labels[0].0, n)?,
        };
        let exps: Vec<u32> = labels[1..].iter().map(|(l, _)| l.part(0) as u32).collect();
        let sign = if exps.iter().sum::<u32>() % 2 == 0 { 1 } else { -1 };
        let tail = FreeElement::monomial(x_monomial(&exps), BigRational::from_integer(BigInt::from(sign)));
        out += (&head * &tail).scale(&BigRational::from_integer(BigInt::from(c)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, g: Group) -> SignedPermutation {
        SignedPermutation::parse(s, g).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> FreeElement {
        let mut out = FreeElement::zero();
        for (e, c) in terms {
            out.add_term(x_monomial(e), BigRational::from_integer(BigInt::from(*c)));
        }
        out
    }

    #[test]
    fn classical_type_a_at_rank_three() {
        let cases: [(&str, FreeElement); 6] = [
            ("1,2,3", FreeElement::one()),
            ("2,1,3", poly(&[(&[1], 1)])),
            ("1,3,2", poly(&[(&[1], 1), (&[0, 1], 1)])),
            ("2,3,1", poly(&[(&[1, 1], 1)])),
            ("3,1,2", poly(&[(&[2], 1)])),
            ("3,2,1", poly(&[(&[2, 1], 1)])),
        ];
        for (w, expected) in cases {
            let w = perm(w, Group::A);
            assert_eq!(schubert_a(&w, 3).unwrap(), expected, "{w}");
            assert_eq!(schubert_a_product(&w, 3).unwrap(), expected, "{w}");
        }
    }

    #[test]
    fn both_type_a_paths_agree_at_rank_five() {
        for w in SignedPermutation::all(5, Group::A) {
            assert_eq!(schubert_a(&w, 5).unwrap(), schubert_a_product(&w, 5).unwrap(), "{w}");
        }
    }

    #[test]
    fn s0_gives_e1() {
        for n in 1..=3 {
            let got = schubert_poly(&perm("-1", Group::C), n).unwrap();
            assert_eq!(got, crate::series::generators::elementary_x(1, n));
        }
    }

    #[test]
    fn outside_rank_is_rejected() {
        assert!(schubert_poly(&perm("1,3,2", Group::A), 2).is_err());
        assert!(schubert_poly(&perm("1,2,3", Group::A), 2).is_ok());
    }

    #[test]
    fn grassmannian_single_step() {
        let w = perm("3,-1,2", Group::C).extended(3);
        assert!(flag_coefficients(&w, &[2]).is_err());
        let w = SignedPermutation::parse("2,3,1", Group::A).unwrap();
        let got = flag_coefficients(&w, &[2]).unwrap();
        assert_eq!(got, BTreeMap::from([(vec![(w.code_shape(), None)], 1)]));
    }

    #[test]
    fn complete_flag_type_a() {
        for n in 2..=4 {
            for w in SignedPermutation::all(n, Group::A) {
                assert_eq!(complete_flag_sum_a(&w, n).unwrap(), schubert_a(&w, n).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn complete_flag_types_c_and_d() {
        for (group, n) in [(Group::C, 2), (Group::C, 3), (Group::D, 2), (Group::D, 3)] {
            for w in SignedPermutation::all(n, group) {
                assert_eq!(complete_flag_sum_bc(&w, n).unwrap(), schubert_poly(&w, n).unwrap(), "{group:?} {w}");
            }
        }
    }
}
