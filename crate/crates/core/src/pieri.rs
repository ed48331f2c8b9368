//! Pieri rules for Schur, theta and eta polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{
    add_horizontal_strips, box_related, components, is_horizontal_strip, is_vertical_strip, relation_value,
    remove_vertical_strips, Cell, Flavor, Group, Partition, TypedPartition,
};
use crate::error::{Error, Result};
use crate::quotient::{BasisExpansion, BasisKind, Label, RingDescriptor};

/// What the relation `λ →p μ` leaves over: the added boxes in columns
/// `> k` not tied to a left column by clauses (1) and (2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWitness {
    pub added: Vec<Cell>,
    pub free_boxes: Vec<Cell>,
    pub components: Vec<Vec<Cell>>,
}

fn to_cells(v: Vec<(usize, usize)>) -> Vec<Cell> {
    v.into_iter().map(|(r, c)| Cell::new(r, c)).collect()
}

/// Checks `λ →p μ` with `p = |μ| − |λ|`, using `k`-related boxes
/// (`Flavor::K`) or `k′`-related boxes (`Flavor::KPrime`).
pub fn pieri_relation(lambda: &Partition, mu: &Partition, k: usize, flavor: Flavor) -> Option<RelationWitness> {
    if mu.size() < lambda.size() || !mu.is_k_strict(k) {
        return None;
    }
    let common = lambda.intersect(mu);
    if !is_vertical_strip(&common, lambda) || !is_horizontal_strip(&common, mu) {
        return None;
    }
    if lambda.skew_cells(&common).iter().any(|&(_, c)| c > k) {
        return None;
    }
    let added = to_cells(mu.skew_cells(&common));
    let mut mentioned = vec![false; added.len()];
    let related_to = |b: Cell| -> Vec<usize> { (0..added.len()).filter(|&i| box_related(b, added[i], k, flavor)).collect() };
    for c in 1..=k {
        let (lc, mc) = (lambda.column_len(c), mu.column_len(c));
        if mc == lc && lc >= 1 {
            let rel = related_to(Cell::new(lc, c));
            if rel.len() > 1 {
                return None;
            }
            for i in rel {
                mentioned[i] = true;
            }
        } else if mc < lc {
            let mut boxes: Vec<Cell> = (mc + 1..=lc).map(|r| Cell::new(r, c)).collect();
            if mc >= 1 {
                boxes.push(Cell::new(mc, c));
            }
            let mut row = None;
            for b in boxes {
                let rel = related_to(b);
                if rel.len() != 1 {
                    return None;
                }
                let r = added[rel[0]].row;
                if *row.get_or_insert(r) != r {
                    return None;
                }
                mentioned[rel[0]] = true;
            }
        }
    }
    let free_boxes: Vec<Cell> =
        added.iter().zip(&mentioned).filter(|(b, m)| !**m && b.col > k).map(|(b, _)| *b).collect();
    let comps = components(&free_boxes);
    Some(RelationWitness { added, free_boxes, components: comps })
}

/// Every `k`-strict `μ` reachable by removing a vertical strip from the
/// first `k` columns and adding a horizontal strip, `|μ| = |λ| + p`.
fn shape_candidates(lambda: &Partition, p: usize, k: usize) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    for inner in remove_vertical_strips(lambda, k) {
        let q = p + lambda.size() - inner.size();
        for mu in add_horizontal_strips(&inner, q) {
            if mu.is_k_strict(k) {
                out.insert(mu);
            }
        }
    }
    out
}

/// `N(λ, μ)`: components of the free boxes avoiding column `k + 1`.
fn n_type_c(w: &RelationWitness, k: usize) -> usize {
    w.components.iter().filter(|comp| comp.iter().all(|b| b.col != k + 1)).count()
}

/// All `μ` with `λ →p μ` and the exponent `N(λ, μ)`.
pub fn pieri_candidates_c(lambda: &Partition, p: usize, k: usize) -> Result<Vec<(Partition, usize)>> {
    if !lambda.is_k_strict(k) {
        return Err(Error::precondition("k-strict", format!("{lambda} is not {k}-strict")));
    }
    Ok(shape_candidates(lambda, p, k)
        .into_iter()
        .filter_map(|mu| pieri_relation(lambda, &mu, k, Flavor::K).map(|w| (mu, n_type_c(&w, k))))
        .collect())
}

fn typed_versions(mu: &Partition, k: usize) -> Vec<TypedPartition> {
    TypedPartition::all_types(mu, k)
}

/// `b_p · Η_λ` (or `b′_k · Η_λ` with `prime`) as typed `μ` with
/// multiplicity `δ · 2^{N′}`, for level `k ≥ 1`.
pub fn pieri_candidates_d(lambda: &TypedPartition, p: usize, prime: bool) -> Result<Vec<(TypedPartition, BigInt)>> {
    let k = lambda.k();
    if k == 0 {
        return Err(Error::precondition("level", String::from("use pieri_level0_d at level 0")));
    }
    if prime && p != k {
        return Err(Error::precondition("prime", format!("b'_{k} has degree {k}, not {p}")));
    }
    let lam = lambda.partition();
    let mut out = Vec::new();
    for mu in shape_candidates(lam, p, k) {
        let Some(w) = pieri_relation(lam, &mu, k, Flavor::KPrime) else { continue };
        let comps = w.components.len();
        let n_prime = if p <= k {
            comps
        } else {
            comps.checked_sub(1).ok_or_else(|| {
                Error::precondition("components", format!("no free components for {lam} -> {mu} with p > k"))
            })?
        };
        let c = (1..=k).filter(|&c| mu.column_len(c) <= lam.column_len(c)).count();
        for typed in typed_versions(&mu, k) {
            if lambda.ty() + typed.ty() == 3 {
                continue;
            }
            let delta = if p != k {
                BigRational::one()
            } else if n_prime > 0 {
                BigRational::new(1.into(), 2.into())
            } else {
                let d = c + usize::from(lambda.ty().max(typed.ty()));
                let odd = d % 2 == 1;
                BigRational::from_integer(BigInt::from(u8::from(if prime { !odd } else { odd })))
            };
            let m = delta * BigRational::from_integer(BigInt::one() << n_prime);
            if !m.is_integer() {
                return Err(Error::NonIntegral(format!("Pieri multiplicity {m} for {lambda} -> {typed}")));
            }
            if !m.is_zero() {
                out.push((typed, m.to_integer()));
            }
        }
    }
    Ok(out)
}

/// Level-zero rule: strict `μ` with `μ/λ` a horizontal strip, weight
/// `2^{components − 1}`.
pub fn pieri_level0_d(lambda: &Partition, p: usize) -> Result<Vec<(Partition, BigInt)>> {
    if !lambda.is_strict() {
        return Err(Error::precondition("strict", format!("{lambda} is not strict")));
    }
    let mut out = Vec::new();
    for mu in add_horizontal_strips(lambda, p) {
        if !mu.is_strict() {
            continue;
        }
        let comps = components(&to_cells(mu.skew_cells(lambda))).len();
        let e = comps.saturating_sub(1);
        out.push((mu, BigInt::one() << e));
    }
    Ok(out)
}

/// Type A rule: horizontal strips with multiplicity one.
pub fn pieri_candidates_a(lambda: &Partition, p: usize) -> Vec<Partition> {
    add_horizontal_strips(lambda, p)
}

/// The Pieri product as a basis expansion, optionally truncated to a
/// `rows × cols` rectangle.
pub fn pieri_product(
    lambda: &Label,
    p: usize,
    k: usize,
    group: Group,
    prime: bool,
    rectangle: Option<(usize, usize)>,
) -> Result<BasisExpansion> {
    let mut out = match group {
        Group::A => BasisExpansion::from_pairs(
            RingDescriptor::Free,
            BasisKind::Schur,
            pieri_candidates_a(&lambda.parts, p).into_iter().map(|mu| (Label::plain(mu), BigInt::one())),
        ),
        Group::C => BasisExpansion::from_pairs(
            RingDescriptor::A(k),
            BasisKind::Theta,
            pieri_candidates_c(&lambda.parts, p, k)?
                .into_iter()
                .map(|(mu, n)| (Label::plain(mu), BigInt::one() << n)),
        ),
        Group::D if k == 0 => BasisExpansion::from_pairs(
            RingDescriptor::GammaPrime,
            BasisKind::Eta,
            pieri_level0_d(&lambda.parts, p)?.into_iter().map(|(mu, c)| (Label::plain(mu), c)),
        ),
        Group::D => {
            let typed = lambda.to_typed(k)?;
            BasisExpansion::from_pairs(
                RingDescriptor::B(k),
                BasisKind::Eta,
                pieri_candidates_d(&typed, p, prime)?.into_iter().map(|(mu, c)| (Label::typed(&mu), c)),
            )
        }
    };
    if let Some((rows, cols)) = rectangle {
        out = out.truncate_to_rectangle(rows, cols);
    }
    Ok(out)
}

/// For `ν ⊆ λ`: `Some(n(λ/ν))` when `λ/ν` is a `k`-horizontal strip.
pub fn k_horizontal_strip_c(lambda: &Partition, nu: &Partition, k: usize) -> Option<usize> {
    if !lambda.contains(nu) || !nu.is_k_strict(k) {
        return None;
    }
    let p = lambda.size() + 2 * k + 1;
    let r = lambda.size() - nu.size();
    let mut parts = vec![p + r];
    parts.extend_from_slice(nu.parts());
    let mu = Partition::new(parts).ok()?;
    pieri_relation(lambda, &mu, k, Flavor::K).map(|w| n_type_c(&w, k))
}

/// The set `𝔼` for a `k′`-horizontal strip `λ/μ` (row 0 included, cut
/// off where it can no longer meet a left box).
pub fn e_set(lambda: &Partition, mu: &Partition, k: usize) -> Vec<Cell> {
    let left: Vec<Cell> = to_cells(lambda.skew_cells(mu)).into_iter().filter(|b| b.col <= k).collect();
    let related_to_left = |b: Cell| left.iter().any(|l| relation_value(*l, k.saturating_sub(1), Flavor::K) == relation_value(b, k.saturating_sub(1), Flavor::K));
    let reach = k.max(lambda.part(0)) + k + lambda.len() + 3;
    let mut out = Vec::new();
    for c in k + 1..=reach {
        let (lc, mc) = (lambda.column_len(c), mu.column_len(c));
        if lc != mc {
            continue;
        }
        let b = Cell::new(lc, c);
        if !related_to_left(b) {
            out.push(b);
        }
    }
    out
}

/// For typed `μ ⊆ λ`: `Some(n(λ/μ))` when `λ/μ` is a typed `k′`-horizontal strip.
pub fn k_horizontal_strip_d(lambda: &TypedPartition, mu: &TypedPartition) -> Option<usize> {
    let k = lambda.k();
    let (lam, nu) = (lambda.partition(), mu.partition());
    if !lam.contains(nu) || lambda.ty() + mu.ty() == 3 {
        return None;
    }
    let p = lam.size() + 2 * k;
    let r = lam.size() - nu.size();
    let mut parts = vec![p + r];
    parts.extend_from_slice(nu.parts());
    let target = Partition::new(parts).ok()?;
    pieri_relation(lam, &target, k, Flavor::KPrime)?;
    let comps = components(&e_set(lam, nu, k)).len();
    comps.checked_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn example_level_one() {
        let got = pieri_candidates_c(&p("2,1"), 3, 1).unwrap();
        let mut got: Vec<(String, usize)> = got.into_iter().map(|(m, n)| (m.to_string(), 1 << n)).collect();
        got.sort();
        let mut want: Vec<(String, usize)> =
            [("6", 2), ("5,1", 4), ("4,2", 1), ("4,1,1", 2), ("3,2,1", 1)].map(|(a, b)| (a.to_string(), b)).to_vec();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn empty_strip() {
        for k in 0..3 {
            let lam = p("3,1");
            if !lam.is_k_strict(k) {
                continue;
            }
            assert_eq!(pieri_candidates_c(&lam, 0, k).unwrap(), vec![(lam.clone(), 0)]);
        }
    }

    #[test]
    fn orthogonal_example() {
        let lam = TypedPartition::parse("8,7,2,1,1:1", 2).unwrap();
        let e = pieri_product(&Label::typed(&lam), 2, 2, Group::D, false, Some((5, 8))).unwrap();
        let got: Vec<String> = e.iter().map(|(l, c)| format!("{l}*{c}")).collect();
        assert_eq!(got, ["8,7,6:0*1", "8,7,4,1,1:0*1", "8,7,3,2,1:1*1"]);
        let e = pieri_product(&Label::typed(&lam), 2, 2, Group::D, true, Some((5, 8))).unwrap();
        let got: Vec<String> = e.iter().map(|(l, c)| format!("{l}*{c}")).collect();
        assert_eq!(got, ["8,7,4,1,1:0*1", "8,7,3,2,1:1*1"]);
    }

    #[test]
    fn empty_shape_d() {
        for k in 1..4 {
            let empty = TypedPartition::untyped(Partition::empty(), k).unwrap();
            let plain = pieri_candidates_d(&empty, k, false).unwrap();
            assert_eq!(plain.len(), 1);
            assert_eq!(plain[0].0.to_string(), format!("{k}:1"));
            let primed = pieri_candidates_d(&empty, k, true).unwrap();
            assert_eq!(primed.len(), 1);
            assert_eq!(primed[0].0.to_string(), format!("{k}:2"));
        }
    }

    #[test]
    fn level_zero() {
        let got = pieri_level0_d(&p("2"), 2).unwrap();
        let got: Vec<String> = got.iter().map(|(m, c)| format!("{m}*{c}")).collect();
        assert_eq!(got, ["4*1", "3,1*2"]);
        // (3,1,1) is not strict, so only two shapes survive.
        let got = pieri_level0_d(&p("3,1"), 1).unwrap();
        let got: Vec<String> = got.iter().map(|(m, c)| format!("{m}*{c}")).collect();
        assert_eq!(got, ["4,1*1", "3,2*1"]);
        let x = &crate::freering::FreeElement::gen(crate::freering::Family::B, 1)
            * &crate::freering::eta_level0(&p("3,1")).unwrap();
        let e = crate::quotient::eta_basis_expand(&x, 0).unwrap();
        let e: Vec<String> = e.iter().map(|(m, c)| format!("{m}*{c}")).collect();
        assert_eq!(e, got);
    }

    #[test]
    fn strips() {
        let lam = p("3,1");
        assert_eq!(k_horizontal_strip_c(&lam, &lam, 1), Some(0));
        let one = TypedPartition::parse("3", 1).unwrap();
        let empty = TypedPartition::untyped(Partition::empty(), 1).unwrap();
        assert_eq!(k_horizontal_strip_d(&one, &empty), Some(0));
    }
}
