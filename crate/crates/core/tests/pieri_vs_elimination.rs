//! Pieri rules against direct multiplication and basis elimination.

use schubertine::combinat::{Group, Partition, TypedPartition};
use schubertine::freering::{eta_level0, eta_star_expand, theta_polynomial, Family, FreeElement};
use schubertine::pieri::pieri_product;
use schubertine::quotient::{eta_basis_expand, schur_basis_expand, theta_basis_expand, Label};

fn shapes(max: usize, k: usize) -> Vec<Partition> {
    (0..=max).flat_map(|n| Partition::k_strict_of_size(n, k)).collect()
}

#[test]
fn type_c_matches_elimination() {
    for k in 0..=2 {
        for lam in shapes(6, k) {
            let theta = theta_polynomial(&lam, k).unwrap();
            for p in 0..=4 {
                let direct = theta_basis_expand(&(&FreeElement::gen(Family::U, p as i64) * &theta), k).unwrap();
                let rule = pieri_product(&Label::plain(lam.clone()), p, k, Group::C, false, None).unwrap();
                assert_eq!(rule.to_json(), direct.to_json(), "k={k} λ={lam} p={p}");
            }
        }
    }
}

#[test]
fn type_d_matches_elimination() {
    for k in 1..=2 {
        for lam in shapes(6, k) {
            for typed in TypedPartition::all_types(&lam, k) {
                let eta = eta_star_expand(&typed).unwrap();
                for p in 0..=4usize {
                    let direct = eta_basis_expand(&(&FreeElement::gen(Family::B, p as i64) * &eta), k).unwrap();
                    let rule = pieri_product(&Label::typed(&typed), p, k, Group::D, false, None).unwrap();
                    assert_eq!(rule.to_json(), direct.to_json(), "k={k} λ={typed} p={p}");
                }
                let direct = eta_basis_expand(&(&FreeElement::gen(Family::BPrime, k as i64) * &eta), k).unwrap();
                let rule = pieri_product(&Label::typed(&typed), k, k, Group::D, true, None).unwrap();
                assert_eq!(rule.to_json(), direct.to_json(), "k={k} λ={typed} prime");
            }
        }
    }
}

#[test]
fn level_zero_d_matches_elimination() {
    for lam in shapes(6, 0).into_iter().filter(|l| l.is_strict()) {
        let eta = eta_level0(&lam).unwrap();
        for p in 0..=4 {
            let direct = eta_basis_expand(&(&FreeElement::gen(Family::B, p as i64) * &eta), 0).unwrap();
            let rule = pieri_product(&Label::plain(lam.clone()), p, 0, Group::D, false, None).unwrap();
            assert_eq!(rule.to_json(), direct.to_json(), "λ={lam} p={p}");
        }
    }
}

#[test]
fn type_a_matches_elimination() {
    for lam in Partition::all_up_to(5) {
        let s = schubertine::quotient::basis_element(
            &schubertine::quotient::RingDescriptor::Free,
            schubertine::quotient::BasisKind::Schur,
            &Label::plain(lam.clone()),
        )
        .unwrap();
        for p in 0..=3 {
            let direct = schur_basis_expand(&(&FreeElement::gen(Family::U, p as i64) * &s)).unwrap();
            let rule = pieri_product(&Label::plain(lam.clone()), p, 0, Group::A, false, None).unwrap();
            assert_eq!(rule.to_json(), direct.to_json(), "λ={lam} p={p}");
        }
    }
}
