//! Index functions of Schubert cells in isotropic Grassmannians.

use super::{Group, Partition, TypedPartition};
use crate::error::{Error, Result};

/// The strictly increasing sequence `p_1 < … < p_{n−k}` attached to a
/// `k`-strict partition (type C) or a typed `k`-strict partition (type D).
///
/// For type D the parity correction at `j = 1` reads `λ_0 = ∞`.
pub fn index_function(lambda: &Partition, ty: Option<u8>, n: usize, k: usize, group: Group) -> Result<Vec<usize>> {
    if k >= n.max(1) && !(n == 0 && k == 0) {
        return Err(Error::precondition("level", format!("need k < n, got k={k}, n={n}")));
    }
    let rows = n - k;
    let cols = match group {
        Group::C => n + k,
        Group::D => n + k - 1,
        Group::A => return Err(Error::precondition("group", "index functions are defined for types C and D")),
    };
    if !lambda.fits(rows, cols) {
        return Err(Error::precondition("rectangle", format!("{lambda} does not fit in {rows}x{cols}")));
    }
    if !lambda.is_k_strict(k) {
        return Err(Error::precondition("k-strict", format!("{lambda} is not {k}-strict")));
    }
    let ty = match group {
        Group::D => TypedPartition::new(lambda.clone(), k, ty.unwrap_or(if k == 0 { 1 } else { 0 }))?.ty() as i64,
        _ => 0,
    };
    let l = |i: usize| lambda.part(i - 1) as i64;
    let (n, k) = (n as i64, k as i64);
    let mut out = Vec::with_capacity(rows);
    for j in 1..=rows {
        let jj = j as i64;
        let lj = l(j);
        let mut p = n + k + jj - lj;
        let count = (1..j)
            .filter(|&i| {
                let s = l(i) + lj;
                let bound = 2 * k + jj - i as i64;
                match group {
                    Group::C => s > bound,
                    _ => s >= bound,
                }
            })
            .count() as i64;
        p -= count;
        if group == Group::D {
            let prev_bigger = j == 1 || l(j - 1) > k;
            if lj > k || (lj == k && prev_bigger && (n + jj + ty) % 2 == 1) {
                p -= 1;
            }
        }
        out.push(p as usize);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(index_function(&p(""), None, 2, 0, Group::C).unwrap(), vec![3, 4]);
        assert_eq!(index_function(&p("1"), None, 2, 1, Group::C).unwrap(), vec![3]);
        assert!(index_function(&p("4"), None, 2, 1, Group::C).is_err());
    }

    #[test]
    fn strictly_increasing_in_range() {
        for (group, extra) in [(Group::C, 0usize), (Group::D, 1)] {
            for n in 1..6 {
                for k in 0..n {
                    let rows = n - k;
                    let cols = n + k - extra;
                    for size in 0..=rows * cols {
                        for lam in Partition::all_bounded(size, rows, cols) {
                            if !lam.is_k_strict(k) {
                                continue;
                            }
                            let types: Vec<Option<u8>> = if group == Group::D {
                                TypedPartition::all_types(&lam, k).iter().map(|t| Some(t.ty())).collect()
                            } else {
                                vec![None]
                            };
                            for ty in types {
                                let idx = index_function(&lam, ty, n, k, group).unwrap();
                                assert!(idx.windows(2).all(|w| w[0] < w[1]), "{group:?} {lam} {ty:?} n={n} k={k}: {idx:?}");
                                let top = if group == Group::C { 2 * n } else { 2 * n };
                                assert!(idx.iter().all(|&x| (1..=top).contains(&x)));
                            }
                        }
                    }
                }
            }
        }
    }
}
