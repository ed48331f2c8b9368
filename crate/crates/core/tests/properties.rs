use num_bigint::BigInt;
use proptest::prelude::*;

use schubertine::combinat::{Group, Partition, SignedPermutation};
use schubertine::freering::{rat, theta_polynomial, Family, FreeElement, Monomial};
use schubertine::pieri::pieri_product;
use schubertine::quotient::{normal_form, theta_basis_expand, BasisExpansion, Label, RingDescriptor};
use schubertine::series::{theta_symmetric, TruncatedSeries};
use schubertine::stanley::{schubert_a, schubert_a_product, stanley_coefficients};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn k_strict(max_size: usize, k: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = (0..=max_size).flat_map(|n| Partition::k_strict_of_size(n, k)).collect();
    prop::sample::select(all)
}

fn permutation(n: usize, group: Group) -> impl Strategy<Value = SignedPermutation> {
    let base: Vec<i32> = (1..=n as i32).collect();
    (Just(base).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(move |(mut w, signs)| {
        if group != Group::A {
            for (x, s) in w.iter_mut().zip(&signs) {
                if *s {
                    *x = -*x;
                }
            }
            if group == Group::D && w.iter().filter(|x| **x < 0).count() % 2 == 1 {
                w[0] = -w[0];
            }
        }
        SignedPermutation::new(w, group).unwrap()
    })
}

fn u_element() -> impl Strategy<Value = FreeElement> {
    let term = (prop::collection::vec(1u32..=4, 0..=3), -3i64..=3);
    prop::collection::vec(term, 0..=4).prop_map(|terms| {
        let mut x = FreeElement::zero();
        for (idx, c) in terms {
            x.add_term(Monomial::from_indices(Family::U, idx), rat(c));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(p in partition(6, 9)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn permutation_group_laws(w in permutation(5, Group::C), v in permutation(5, Group::C)) {
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.length(), w.inverse().length());
        prop_assert_eq!(w.reduced_word().len(), w.length());
        let wv = w.compose(&v);
        prop_assert!(wv.length() <= w.length() + v.length());
        prop_assert_eq!((w.length() + v.length() - wv.length()) % 2, 0);
    }

    #[test]
    fn type_d_elements_keep_even_sign_changes(w in permutation(5, Group::D), v in permutation(5, Group::D)) {
        let wv = w.compose(&v);
        prop_assert_eq!(wv.group(), Group::D);
        prop_assert_eq!(wv.window().iter().filter(|x| **x < 0).count() % 2, 0);
    }

    #[test]
    fn free_element_json_round_trip(x in u_element()) {
        let s = x.to_json().to_string();
        let back = FreeElement::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        prop_assert_eq!(back.to_json().to_string(), s);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn normal_form_is_idempotent(x in u_element(), k in 0usize..=2) {
        let ring = RingDescriptor::A(k);
        let once = normal_form(&x, &ring).unwrap();
        prop_assert_eq!(normal_form(&once, &ring).unwrap(), once);
    }

    #[test]
    fn theta_series_round_trip_and_symmetry(lam in k_strict(4, 1), m in 1usize..=3) {
        let s = theta_symmetric(&lam, 1, m, lam.size() as u32).unwrap().to_truncated();
        prop_assert!(s.is_symmetric_in_z());
        prop_assert!(s.is_nonnegative());
        let text = s.to_json().to_string();
        let back = TruncatedSeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back.to_json().to_string(), text);
    }

    #[test]
    fn stanley_of_inverse_is_conjugate(w in permutation(5, Group::A)) {
        let direct = stanley_coefficients(&w, 0).unwrap();
        let inverse = stanley_coefficients(&w.inverse(), 0).unwrap();
        let conj: std::collections::BTreeMap<_, _> =
            direct.iter().map(|((p, t), c)| ((p.conjugate(), *t), *c)).collect();
        prop_assert_eq!(conj, inverse);
        for ((p, _), _) in &direct {
            prop_assert_eq!(p.size(), w.length());
        }
    }

    #[test]
    fn schubert_paths_agree(w in permutation(4, Group::A)) {
        prop_assert_eq!(schubert_a(&w, 4).unwrap(), schubert_a_product(&w, 4).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn type_c_pieri_matches_elimination(lam in k_strict(4, 1), p in 1usize..=3, k in 0usize..=1) {
        prop_assume!(lam.is_k_strict(k));
        let rule: BasisExpansion = pieri_product(&Label::plain(lam.clone()), p, k, Group::C, false, None).unwrap();
        let theta = theta_polynomial(&lam, k).unwrap();
        let direct = theta_basis_expand(&(&FreeElement::gen(Family::U, p as i64) * &theta), k).unwrap();
        prop_assert_eq!(rule.to_json(), direct.to_json());
        prop_assert!(rule.iter().all(|(_, c)| c > &BigInt::from(0)));
    }
}
