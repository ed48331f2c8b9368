//! Coefficients in the monomial, Schur, theta and eta bases.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::ring::{normal_form, RingDescriptor};
use crate::combinat::{Partition, TypedPartition};
use crate::error::{Error, Result};
use crate::freering::{
    eta_level0, eta_star_expand, raising_expand, theta_polynomial, EvaluationRule, Family, FreeElement, Generator,
    Monomial, RaisingOperatorSpec,
};

/// A basis label: a partition, typed in the rings `B(k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Label {
    pub parts: Partition,
    pub ty: Option<u8>,
}

impl Label {
    pub fn plain(parts: Partition) -> Self {
        Label { parts, ty: None }
    }

    pub fn typed(t: &TypedPartition) -> Self {
        Label { parts: t.partition().clone(), ty: Some(t.ty()) }
    }

    pub fn parse(s: &str, ring: &RingDescriptor) -> Result<Self> {
        if let RingDescriptor::B(k) = ring {
            Ok(Label::typed(&TypedPartition::parse(s, *k)?))
        } else {
            Ok(Label::plain(s.parse()?))
        }
    }

    pub fn to_typed(&self, k: usize) -> Result<TypedPartition> {
        match self.ty {
            Some(t) => TypedPartition::new(self.parts.clone(), k, t),
            None => TypedPartition::untyped(self.parts.clone(), k),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            Some(t) => write!(f, "{}:{t}", self.parts),
            None => write!(f, "{}", self.parts),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisKind {
    Monomial,
    Schur,
    Theta,
    Eta,
}

impl BasisKind {
    pub fn name(&self) -> &'static str {
        match self {
            BasisKind::Monomial => "monomial",
            BasisKind::Schur => "schur",
            BasisKind::Theta => "theta",
            BasisKind::Eta => "eta",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(BasisKind::Monomial),
            "schur" => Ok(BasisKind::Schur),
            "theta" => Ok(BasisKind::Theta),
            "eta" => Ok(BasisKind::Eta),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }

    /// The structured basis attached to a ring.
    pub fn native(ring: &RingDescriptor) -> Self {
        match ring {
            RingDescriptor::Free => BasisKind::Schur,
            RingDescriptor::A(_) | RingDescriptor::Gamma => BasisKind::Theta,
            RingDescriptor::B(_) | RingDescriptor::GammaPrime => BasisKind::Eta,
        }
    }
}

/// Integer coefficients on basis labels, with no zero entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisExpansion {
    pub ring: RingDescriptor,
    pub basis: BasisKind,
    coeffs: BTreeMap<Reverse<Label>, BigInt>,
}

impl BasisExpansion {
    pub fn new(ring: RingDescriptor, basis: BasisKind) -> Self {
        BasisExpansion { ring, basis, coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(ring: RingDescriptor, basis: BasisKind, pairs: impl IntoIterator<Item = (Label, BigInt)>) -> Self {
        let mut e = BasisExpansion::new(ring, basis);
        for (l, c) in pairs {
            e.add(l, c);
        }
        e
    }

    pub fn add(&mut self, label: Label, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(Reverse(label)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Entries, largest label first.
    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigInt)> {
        self.coeffs.iter().map(|(k, v)| (&k.0, v))
    }

    pub fn get(&self, label: &Label) -> BigInt {
        self.coeffs.get(&Reverse(label.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Keeps labels whose diagram fits in `rows × cols`.
    pub fn truncate_to_rectangle(&self, rows: usize, cols: usize) -> Self {
        let mut out = BasisExpansion::new(self.ring, self.basis);
        for (l, c) in self.iter() {
            if l.parts.fits(rows, cols) {
                out.add(l.clone(), c.clone());
            }
        }
        out
    }

    /// `Σ c_λ · basis_λ` as an element of the free ring.
    pub fn to_element(&self) -> Result<FreeElement> {
        let mut out = FreeElement::zero();
        for (l, c) in self.iter() {
            out += basis_element(&self.ring, self.basis, l)?.scale(&BigRational::from_integer(c.clone()));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.iter().map(|(l, c)| json!({"label": l.to_string(), "c": c.to_string()})).collect();
        json!({"ring": self.ring.to_string(), "basis": self.basis.name(), "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("basis expansion JSON: {what}"));
        let ring = RingDescriptor::parse(v.get("ring").and_then(Value::as_str).ok_or_else(|| bad("ring"))?)?;
        let basis = BasisKind::parse(v.get("basis").and_then(Value::as_str).ok_or_else(|| bad("basis"))?)?;
        let mut out = BasisExpansion::new(ring, basis);
        for t in v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("coeffs"))? {
            let l = Label::parse(t.get("label").and_then(Value::as_str).ok_or_else(|| bad("label"))?, &ring)?;
            let c: BigInt = t.get("c").and_then(Value::as_str).ok_or_else(|| bad("c"))?.parse().map_err(|_| bad("c"))?;
            out.add(l, c);
        }
        Ok(out)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            BasisKind::Monomial => "m",
            BasisKind::Schur => "s",
            BasisKind::Theta => "Theta",
            BasisKind::Eta => "Eta",
        };
        for (i, (l, c)) in self.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "{sym}[{l}]")?;
        }
        Ok(())
    }
}

/// The label of a normal monomial, or `None` if it involves generators
/// outside the ring.
pub fn monomial_label(m: &Monomial, ring: &RingDescriptor) -> Option<Label> {
    let mut parts = Vec::new();
    let mut ty = 0u8;
    for (g, e) in m.pairs() {
        if !ring.is_ring_generator(g) {
            return None;
        }
        if let RingDescriptor::B(k) = ring {
            if g.index as usize == *k {
                ty = if g.family == Family::BPrime { 2 } else { 1 };
            }
        }
        parts.extend(std::iter::repeat_n(g.index as usize, *e as usize));
    }
    let parts = Partition::from_unsorted(parts);
    Some(match ring {
        RingDescriptor::B(_) => Label { parts, ty: Some(ty) },
        _ => Label::plain(parts),
    })
}

/// The monomial `b_λ` (with `b′_k` for type 2), `u_λ` or `c_λ`.
pub fn label_monomial(l: &Label, ring: &RingDescriptor) -> Monomial {
    let f = ring.main_family();
    let k = ring.level();
    Monomial::from_pairs(l.parts.parts().iter().map(|&p| {
        let fam = if l.ty == Some(2) && p == k { Family::BPrime } else { f };
        (Generator::new(fam, p as u32), 1)
    }))
}

/// Monomial-basis coefficients of `x`.
pub fn monomial_expansion(x: &FreeElement, ring: &RingDescriptor) -> Result<BasisExpansion> {
    let nf = normal_form(x, ring)?;
    let mut out = BasisExpansion::new(*ring, BasisKind::Monomial);
    for (m, c) in nf.terms() {
        let label = monomial_label(m, ring)
            .ok_or_else(|| Error::precondition("ring generator", format!("{m} is not a monomial of {ring}")))?;
        if !c.is_integer() {
            return Err(Error::NonIntegral(format!("coefficient {c} on {m}")));
        }
        out.add(label, c.to_integer());
    }
    Ok(out)
}

/// The basis element with the given label, as a free-ring element.
pub fn basis_element(ring: &RingDescriptor, basis: BasisKind, label: &Label) -> Result<FreeElement> {
    let k = ring.level();
    let lam = &label.parts;
    match (basis, ring) {
        (BasisKind::Monomial, _) => Ok(FreeElement::monomial(label_monomial(label, ring), crate::freering::rat(1))),
        (BasisKind::Schur, RingDescriptor::Free) => {
            let alpha: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
            raising_expand(&RaisingOperatorSpec::schur(lam.len()), &alpha, &EvaluationRule::Plain(Family::U))
        }
        (BasisKind::Theta, RingDescriptor::A(_)) => theta_polynomial(lam, k),
        (BasisKind::Theta, RingDescriptor::Gamma) => {
            let u = theta_polynomial(lam, 0)?;
            Ok(u.substitute(&|g| (g.family == Family::U).then(|| FreeElement::gen(Family::C, g.index as i64))))
        }
        (BasisKind::Eta, RingDescriptor::B(_)) => eta_star_expand(&label.to_typed(k)?),
        (BasisKind::Eta, RingDescriptor::GammaPrime) => eta_level0(lam),
        _ => Err(Error::precondition("basis", format!("{} basis is not defined for {ring}", basis.name()))),
    }
}

type NfCache = Mutex<HashMap<(RingDescriptor, BasisKind, Label), Arc<BasisExpansion>>>;

fn cache() -> &'static NfCache {
    static CACHE: OnceLock<NfCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monomial-basis coefficients of a basis element, memoized.
pub fn basis_element_monomials(ring: &RingDescriptor, basis: BasisKind, label: &Label) -> Result<Arc<BasisExpansion>> {
    let key = (*ring, basis, label.clone());
    if let Some(v) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let value = Arc::new(monomial_expansion(&basis_element(ring, basis, label)?, ring)?);
    cache().lock().expect("cache poisoned").insert(key, value.clone());
    Ok(value)
}

/// Expresses `x` in the structured basis of `ring` by unitriangular
/// elimination: the lexicographically smallest label still present is a
/// leading term, since every other monomial of a basis element is
/// indexed by a partition that dominates its label.
pub fn basis_expand(x: &FreeElement, ring: &RingDescriptor, basis: BasisKind) -> Result<BasisExpansion> {
    let mut rest = monomial_expansion(x, ring)?;
    let mut out = BasisExpansion::new(*ring, basis);
    if basis == BasisKind::Monomial {
        return Ok(rest);
    }
    let mut guard = 0usize;
    while let Some((smallest, _)) = rest.iter().last() {
        guard += 1;
        if guard > super::ring::REWRITE_CAP {
            return Err(Error::Elimination("elimination did not terminate".into()));
        }
        let parts = smallest.parts.clone();
        let mut labels: Vec<Label> = rest.iter().filter(|(l, _)| l.parts == parts).map(|(l, _)| l.clone()).collect();
        labels.sort_by_key(|l| l.ty);
        for label in labels {
            let a = rest.get(&label);
            if a.is_zero() {
                continue;
            }
            let elem = basis_element_monomials(ring, basis, &label)?;
            let lead = elem.get(&label);
            if !lead.is_one() {
                return Err(Error::Elimination(format!("{} {label} has leading coefficient {lead}", basis.name())));
            }
            for (l, c) in elem.iter() {
                rest.add(l.clone(), -(&a * c));
            }
            out.add(label, a);
        }
        if rest.iter().any(|(l, _)| l.parts == parts) {
            return Err(Error::Elimination(format!("labels with shape {parts} could not be eliminated")));
        }
    }
    Ok(out)
}

/// Coefficients of `x` in the theta basis of `A(k)`.
pub fn theta_basis_expand(x: &FreeElement, k: usize) -> Result<BasisExpansion> {
    basis_expand(x, &RingDescriptor::A(k), BasisKind::Theta)
}

/// Coefficients of `x` in the eta basis of `B(k)` (`Γ′` when `k = 0`).
pub fn eta_basis_expand(x: &FreeElement, k: usize) -> Result<BasisExpansion> {
    let ring = if k == 0 { RingDescriptor::GammaPrime } else { RingDescriptor::B(k) };
    basis_expand(x, &ring, BasisKind::Eta)
}

/// Coefficients of a type A element in the Schur basis.
pub fn schur_basis_expand(x: &FreeElement) -> Result<BasisExpansion> {
    basis_expand(x, &RingDescriptor::Free, BasisKind::Schur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn theta_round_trip() {
        let x = theta_polynomial(&p("5,2,1"), 2).unwrap();
        let e = theta_basis_expand(&x, 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&Label::plain(p("5,2,1"))), int(1));
        let e = theta_basis_expand(&FreeElement::gen(Family::U, 4), 1).unwrap();
        assert_eq!(e.get(&Label::plain(p("4"))), int(1));
    }

    #[test]
    fn theta_pieri_product() {
        let x = &FreeElement::gen(Family::U, 3) * &theta_polynomial(&p("2,1"), 1).unwrap();
        let e = theta_basis_expand(&x, 1).unwrap();
        let expected = BasisExpansion::from_pairs(
            RingDescriptor::A(1),
            BasisKind::Theta,
            [("6", 2), ("5,1", 4), ("4,2", 1), ("4,1,1", 2), ("3,2,1", 1)].map(|(l, c)| (Label::plain(p(l)), int(c))),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn eta_round_trip_and_generators() {
        let t = TypedPartition::parse("3,2,2:2", 2).unwrap();
        let e = eta_basis_expand(&eta_star_expand(&t).unwrap(), 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&Label::typed(&t)), int(1));
        let e = eta_basis_expand(&FreeElement::gen(Family::BPrime, 2), 2).unwrap();
        assert_eq!(e.iter().next().unwrap().0.to_string(), "2:2");
        let e = eta_basis_expand(&FreeElement::gen(Family::B, 2), 2).unwrap();
        assert_eq!(e.iter().next().unwrap().0.to_string(), "2:1");
    }

    #[test]
    fn schur_pieri() {
        let s221 = basis_element(&RingDescriptor::Free, BasisKind::Schur, &Label::plain(p("2,2,1"))).unwrap();
        let e = schur_basis_expand(&(&FreeElement::gen(Family::U, 3) * &s221)).unwrap();
        let labels: Vec<String> = e.iter().map(|(l, _)| l.to_string()).collect();
        assert_eq!(labels, ["5,2,1", "4,2,2", "4,2,1,1", "3,2,2,1"]);
        assert!(e.iter().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn json_round_trip() {
        let e = BasisExpansion::from_pairs(
            RingDescriptor::B(2),
            BasisKind::Eta,
            [(Label::typed(&TypedPartition::parse("8,7,4,1,1", 2).unwrap()), int(1))],
        );
        let s = e.to_json().to_string();
        assert_eq!(s, r#"{"ring":"B(2)","basis":"eta","coeffs":[{"label":"8,7,4,1,1:0","c":"1"}]}"#);
        assert_eq!(BasisExpansion::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), e);
    }
}
