//! Transition trees. The leaves of the tree grown from `w` are
//! Grassmannian elements whose labels give the Stanley coefficients.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::combinat::{grassmannian_label, Group, Partition, SignedPermutation, Simple};
use crate::error::{Error, Result};

/// A leaf label: the shape, and for type D also its type.
pub type ShapeLabel = (Partition, Option<u8>);

#[derive(Clone, Debug)]
pub struct TransitionTree {
    k: usize,
    nodes: Vec<SignedPermutation>,
    children: Vec<Vec<usize>>,
    labels: Vec<Option<ShapeLabel>>,
}

/// Largest `j > r` with `w_j < w_r`.
fn last_smaller(w: &SignedPermutation, r: usize) -> usize {
    (r + 1..=w.n()).rev().find(|&j| w.at(j) < w.at(r)).expect("r is a descent")
}

fn children_a(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let mut cur = w.clone();
    let len = w.length();
    loop {
        let r = cur.last_descent().expect("non-leaf has a descent").index();
        let v = cur.swap_positions(r, last_smaller(&cur, r));
        let kids: Vec<_> = (1..r).map(|i| v.swap_positions(i, r)).filter(|u| u.length() == len).collect();
        if !kids.is_empty() {
            return kids;
        }
        cur = cur.shifted();
    }
}

fn children_cd(w: &SignedPermutation, r: usize) -> Vec<SignedPermutation> {
    let len = w.length();
    let v = w.swap_positions(r, last_smaller(w, r));
    let reach = v.n() + 2;
    let mut kids: Vec<_> = (1..r).map(|i| v.swap_positions(i, r)).filter(|u| u.length() == len).collect();
    for i in 1..=reach {
        if w.group() == Group::D && i == r {
            continue;
        }
        let u = v.bar_reflect(i, r);
        if u.length() == len {
            kids.push(u.trimmed());
        }
    }
    kids
}

/// `None` for a leaf, else the children of `w`.
fn expand(w: &SignedPermutation, k: usize) -> Option<Vec<SignedPermutation>> {
    if w.is_identity() {
        return None;
    }
    let r = w.last_descent()?;
    match w.group() {
        Group::A => {
            if w.descents().len() <= 1 {
                None
            } else {
                Some(children_a(w))
            }
        }
        Group::C => {
            if r.index() == k {
                None
            } else {
                Some(children_cd(w, r.index()))
            }
        }
        Group::D => {
            let leaf = if k == 1 { matches!(r, Simple::SBox | Simple::S(1)) } else { r.index() == k };
            if leaf {
                None
            } else {
                Some(children_cd(w, r.index()))
            }
        }
    }
}

impl TransitionTree {
    /// Grows the tree of `w` at level `k` (ignored in type A).
    pub fn new(w: &SignedPermutation, k: usize) -> Result<Self> {
        let k = if w.group() == Group::A { 0 } else { k };
        if !w.is_increasing_up_to(k) {
            return Err(Error::precondition("increasing", format!("{w} has a descent below {k}")));
        }
        let depth_cap = w.length() + w.n() + 4;
        let mut tree = TransitionTree { k, nodes: Vec::new(), children: Vec::new(), labels: Vec::new() };
        tree.grow(w.trimmed(), 0, depth_cap)?;
        Ok(tree)
    }

    fn grow(&mut self, w: SignedPermutation, depth: usize, cap: usize) -> Result<usize> {
        if depth > cap {
            return Err(Error::RewriteLimit(format!("transition tree deeper than {cap} at {w}")));
        }
        let id = self.nodes.len();
        self.nodes.push(w.clone());
        self.children.push(Vec::new());
        self.labels.push(None);
        match expand(&w, self.k) {
            None => self.labels[id] = Some(grassmannian_label(&w, self.k)?),
            Some(kids) => {
                for kid in kids {
                    let c = self.grow(kid, depth + 1, cap)?;
                    self.children[id].push(c);
                }
            }
        }
        Ok(id)
    }

    pub fn root(&self) -> &SignedPermutation {
        &self.nodes[0]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &SignedPermutation {
        &self.nodes[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// The label of node `i` when it is a leaf.
    pub fn label(&self, i: usize) -> Option<&ShapeLabel> {
        self.labels[i].as_ref()
    }

    pub fn leaves(&self) -> impl Iterator<Item = (&SignedPermutation, &ShapeLabel)> {
        self.nodes.iter().zip(&self.labels).filter_map(|(w, l)| l.as_ref().map(|l| (w, l)))
    }

    /// Number of leaves carrying each label.
    pub fn leaf_counts(&self) -> BTreeMap<ShapeLabel, usize> {
        let mut out = BTreeMap::new();
        for (_, l) in self.leaves() {
            *out.entry(l.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let mut v = json!({ "id": i, "element": w.window(), "children": self.children[i] });
                if let Some((shape, ty)) = &self.labels[i] {
                    v["shape"] = json!(shape.parts());
                    if let Some(t) = ty {
                        v["type"] = json!(t);
                    }
                }
                v
            })
            .collect();
        json!({ "root": self.nodes[0].window(), "k": self.k, "nodes": nodes })
    }
}

/// `c^w_λ`, `e^w_λ` or `d^w_λ` (by the group of `w`) at level `k`.
pub fn stanley_coefficients(w: &SignedPermutation, k: usize) -> Result<BTreeMap<ShapeLabel, usize>> {
    Ok(TransitionTree::new(w, k)?.leaf_counts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::TypedPartition;
    use crate::series::{eta_symmetric, schur_oracle, theta_symmetric, SymmetricSeries};
    use crate::stanley::mixed_stanley_all;
    use num_bigint::BigInt;

    fn perm(s: &str, g: Group) -> SignedPermutation {
        SignedPermutation::parse(s, g).unwrap()
    }

    fn labels(pairs: &[(&str, usize)]) -> BTreeMap<ShapeLabel, usize> {
        pairs.iter().map(|(s, c)| ((s.parse().unwrap(), None), *c)).collect()
    }

    #[test]
    fn type_a_example() {
        let got = stanley_coefficients(&perm("2,1,5,4,3", Group::A), 0).unwrap();
        assert_eq!(got, labels(&[("3,1", 1), ("2,2", 1), ("2,1,1", 1)]));
    }

    #[test]
    fn type_c_example() {
        let got = stanley_coefficients(&perm("3,-1,2,5,4", Group::C), 1).unwrap();
        assert_eq!(got, labels(&[("4", 1), ("3,1", 2), ("2,1,1", 1)]));
    }

    #[test]
    fn leaves_are_grassmannian_of_equal_length() {
        for w in SignedPermutation::all(3, Group::C) {
            for k in 0..3 {
                if !w.is_increasing_up_to(k) {
                    continue;
                }
                let tree = TransitionTree::new(&w, k).unwrap();
                for (leaf, _) in tree.leaves() {
                    assert!(leaf.is_grassmannian(k) || leaf.is_identity(), "{w} k={k} leaf {leaf}");
                    assert_eq!(leaf.length(), w.length());
                }
            }
        }
    }

    fn expected(w: &SignedPermutation, k: usize, m: usize, cap: u32) -> SymmetricSeries {
        let mut out = SymmetricSeries::zero(m, k, cap);
        for ((shape, ty), c) in stanley_coefficients(w, k).unwrap() {
            let term = match (w.group(), ty) {
                (Group::A, _) => schur_oracle(&shape).unwrap().to_symmetric(m, cap).unwrap(),
                (Group::C, _) => theta_symmetric(&shape, k, m, cap).unwrap(),
                (Group::D, Some(t)) => eta_symmetric(&TypedPartition::new(shape, k, t).unwrap(), m, cap).unwrap(),
                (Group::D, None) => unreachable!(),
            };
            out = out.add(&term.scale(&BigInt::from(c)));
        }
        out
    }

    #[test]
    fn trees_agree_with_nilcoxeter() {
        let (m, cap) = (4, 4);
        for (group, n, ks) in [(Group::A, 4, vec![0]), (Group::C, 3, vec![0, 1, 2]), (Group::D, 4, vec![0, 1, 2])] {
            for k in ks {
                let all = mixed_stanley_all(group, n, k, m, cap).unwrap();
                for w in SignedPermutation::all(n, group) {
                    if w.length() as u32 > cap || !w.is_increasing_up_to(k) || w.is_identity() {
                        continue;
                    }
                    let got = all.get(&w).cloned().unwrap_or_else(|| SymmetricSeries::zero(m, k, cap));
                    assert_eq!(got, expected(&w, k, m, cap), "{group:?} {w} k={k}");
                }
            }
        }
    }

    #[test]
    fn rejects_descents_below_level() {
        assert!(TransitionTree::new(&perm("2,1,3", Group::C), 2).is_err());
    }

    #[test]
    fn json_shape() {
        let tree = TransitionTree::new(&perm("2,1,5,4,3", Group::A), 0).unwrap();
        let v = tree.to_json();
        assert_eq!(v["root"], json!([2, 1, 5, 4, 3]));
        let leaves = v["nodes"].as_array().unwrap().iter().filter(|n| n.get("shape").is_some()).count();
        assert_eq!(leaves, 3);
    }
}
