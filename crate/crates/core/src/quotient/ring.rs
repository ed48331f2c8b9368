//! The quotient rings and rewriting to the k-strict monomial basis.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freering::{rat, Family, FreeElement, Generator, Monomial};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RingDescriptor {
    /// `Z[u]` modulo the relations for parts above `k`.
    A(usize),
    /// `Z[c]` with the relations at every `p ≥ 1`; isomorphic to `A(0)`.
    Gamma,
    /// `Z[b]` with the level-zero orthogonal relations; isomorphic to `B(0)`.
    GammaPrime,
    /// `Z[b, b′_k]` with the orthogonal relations of level `k ≥ 1`.
    B(usize),
    /// The polynomial ring in `u` with no relations (type A).
    Free,
}

impl RingDescriptor {
    pub fn level(&self) -> usize {
        match self {
            RingDescriptor::A(k) | RingDescriptor::B(k) => *k,
            _ => 0,
        }
    }

    /// Families the relations act on; anything else is a coefficient.
    pub fn is_ring_generator(&self, g: &Generator) -> bool {
        match self {
            RingDescriptor::A(_) | RingDescriptor::Free => g.family == Family::U,
            RingDescriptor::Gamma => g.family == Family::C,
            RingDescriptor::GammaPrime => g.family == Family::B,
            RingDescriptor::B(k) => g.family == Family::B || (g.family == Family::BPrime && g.index as usize == *k),
        }
    }

    pub fn main_family(&self) -> Family {
        match self {
            RingDescriptor::A(_) | RingDescriptor::Free => Family::U,
            RingDescriptor::Gamma => Family::C,
            RingDescriptor::GammaPrime | RingDescriptor::B(_) => Family::B,
        }
    }

    pub fn is_typed(&self) -> bool {
        matches!(self, RingDescriptor::B(_))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let level = |inner: &str| inner.parse::<usize>().map_err(|_| Error::Parse(format!("bad ring {s:?}")));
        if let Some(inner) = s.strip_prefix("A(").and_then(|r| r.strip_suffix(')')) {
            return Ok(RingDescriptor::A(level(inner)?));
        }
        if let Some(inner) = s.strip_prefix("B(").and_then(|r| r.strip_suffix(')')) {
            let k = level(inner)?;
            if k == 0 {
                return Ok(RingDescriptor::GammaPrime);
            }
            return Ok(RingDescriptor::B(k));
        }
        match s {
            "Gamma" => Ok(RingDescriptor::Gamma),
            "GammaPrime" => Ok(RingDescriptor::GammaPrime),
            "Free" => Ok(RingDescriptor::Free),
            _ => Err(Error::Parse(format!("unknown ring {s:?}"))),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::A(k) => write!(f, "A({k})"),
            RingDescriptor::B(k) => write!(f, "B({k})"),
            RingDescriptor::Gamma => write!(f, "Gamma"),
            RingDescriptor::GammaPrime => write!(f, "GammaPrime"),
            RingDescriptor::Free => write!(f, "Free"),
        }
    }
}

pub const REWRITE_CAP: usize = 1_000_000;

fn spread(m: &Monomial, ring: &RingDescriptor) -> u64 {
    m.pairs()
        .iter()
        .filter(|(g, _)| ring.is_ring_generator(g))
        .map(|(g, e)| u64::from(g.index) * u64::from(g.index) * u64::from(*e))
        .sum()
}

/// The replacement for the first offending quadratic factor of `m`, as
/// `(factor removed, replacement)`, or `None` when `m` is already normal.
fn violation(m: &Monomial, ring: &RingDescriptor) -> Result<Option<(Monomial, FreeElement)>> {
    let k = ring.level();
    let g = |f: Family, i: i64| FreeElement::gen(f, i);
    let two = rat(2);
    if *ring == RingDescriptor::Free {
        return Ok(None);
    }
    for &(gen, e) in m.pairs() {
        if !ring.is_ring_generator(&gen) {
            if let RingDescriptor::B(_) = ring {
                if gen.family == Family::BPrime {
                    return Err(Error::precondition("ring generator", format!("{gen} is not a generator of {ring}")));
                }
            }
            continue;
        }
        let p = gen.index as i64;
        let square = Monomial::from_pairs([(gen, 2)]);
        match ring {
            RingDescriptor::A(_) | RingDescriptor::Gamma if e >= 2 && gen.index as usize > k => {
                let f = ring.main_family();
                let mut rhs = FreeElement::zero();
                for i in 1..=p {
                    let sign = if i % 2 == 0 { -1 } else { 1 };
                    rhs += (&g(f, p + i) * &g(f, p - i)).scale(&(&two * rat(sign)));
                }
                return Ok(Some((square, rhs)));
            }
            RingDescriptor::GammaPrime if e >= 2 => {
                let mut rhs = FreeElement::zero();
                for i in 1..p {
                    let sign = if i % 2 == 0 { -1 } else { 1 };
                    rhs += (&g(Family::B, p + i) * &g(Family::B, p - i)).scale(&(&two * rat(sign)));
                }
                let sign = if p % 2 == 0 { -1 } else { 1 };
                rhs += g(Family::B, 2 * p).scale(&rat(sign));
                return Ok(Some((square, rhs)));
            }
            RingDescriptor::B(_) if gen.family == Family::B && e >= 2 && gen.index as usize > k => {
                let mut rhs = FreeElement::zero();
                for i in 1..=p {
                    let sign = if i % 2 == 0 { -1 } else { 1 };
                    rhs += (&g(Family::B, p + i) * &u_in_b(p - i, k)).scale(&rat(sign));
                }
                return Ok(Some((square, rhs)));
            }
            RingDescriptor::B(_) if gen.family == Family::B && gen.index as usize == k => {
                let prime = Generator::new(Family::BPrime, k as u32);
                if m.exponent(prime) > 0 {
                    let mut rhs = FreeElement::zero();
                    for i in 1..=p {
                        let sign = if i % 2 == 0 { -1 } else { 1 };
                        rhs += (&g(Family::B, p + i) * &g(Family::B, p - i)).scale(&rat(sign));
                    }
                    return Ok(Some((Monomial::from_pairs([(gen, 1), (prime, 1)]), rhs)));
                }
            }
            _ => {}
        }
    }
    Ok(None)
}

/// `u_p` in the b-generators of level `k`.
pub(crate) fn u_in_b(p: i64, k: usize) -> FreeElement {
    match p {
        p if p < 0 => FreeElement::zero(),
        0 => FreeElement::one(),
        p if (p as usize) < k => FreeElement::gen(Family::B, p),
        p if p as usize == k => &FreeElement::gen(Family::B, p) + &FreeElement::gen(Family::BPrime, p),
        p => FreeElement::gen(Family::B, p).scale(&rat(2)),
    }
}

fn divide(m: &Monomial, factor: &Monomial) -> Monomial {
    Monomial::from_pairs(m.pairs().iter().map(|&(g, e)| (g, e - factor.exponent(g))))
}

/// Rewrites `x` until every monomial is indexed by a (typed) `k`-strict
/// partition in the ring generators. Other generators ride along.
///
/// Monomials are processed in order of increasing `Σ index²`; each
/// rewrite strictly increases it, so collected coefficients are final
/// when a monomial is popped.
pub fn normal_form(x: &FreeElement, ring: &RingDescriptor) -> Result<FreeElement> {
    let mut queue: BTreeMap<(u64, Monomial), BigRational> = BTreeMap::new();
    for (m, c) in x.terms() {
        queue.insert((spread(m, ring), m.clone()), c.clone());
    }
    let mut out = FreeElement::zero();
    let mut steps = 0usize;
    while let Some(((_, m), c)) = queue.pop_first() {
        if c.is_zero() {
            continue;
        }
        steps += 1;
        if steps > REWRITE_CAP {
            return Err(Error::RewriteLimit(format!("{} steps in {ring}; pending monomial {m}", REWRITE_CAP)));
        }
        match violation(&m, ring)? {
            None => out.add_term(m, c),
            Some((factor, rhs)) => {
                let rest = divide(&m, &factor);
                for (n, d) in rhs.mul_monomial(&rest).terms() {
                    let key = (spread(n, ring), n.clone());
                    debug_assert!(key.0 > spread(&m, ring));
                    let entry = queue.entry(key).or_insert_with(BigRational::zero);
                    *entry += d * &c;
                }
            }
        }
    }
    Ok(out)
}

/// `normal_form(x − y)` vanishes.
pub fn quotient_equal(x: &FreeElement, y: &FreeElement, ring: &RingDescriptor) -> Result<bool> {
    Ok(normal_form(&(x - y), ring)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, i: i64) -> FreeElement {
        FreeElement::gen(f, i)
    }

    #[test]
    fn level_zero_relations() {
        let c1 = g(Family::C, 1);
        assert_eq!(normal_form(&(&c1 * &c1), &RingDescriptor::Gamma).unwrap(), g(Family::C, 2).scale(&rat(2)));
        let b1 = g(Family::B, 1);
        assert_eq!(normal_form(&(&b1 * &b1), &RingDescriptor::GammaPrime).unwrap(), g(Family::B, 2));
        assert!(quotient_equal(&(&c1 * &c1), &g(Family::C, 2).scale(&rat(2)), &RingDescriptor::Gamma).unwrap());
    }

    #[test]
    fn relations_vanish() {
        for k in 0..3usize {
            let ring = RingDescriptor::A(k);
            for p in (k + 1) as i64..(k + 4) as i64 {
                let mut rel = &g(Family::U, p) * &g(Family::U, p);
                for i in 1..=p {
                    let s = if i % 2 == 0 { 2 } else { -2 };
                    rel += (&g(Family::U, p + i) * &g(Family::U, p - i)).scale(&rat(s));
                }
                assert!(normal_form(&rel, &ring).unwrap().is_zero());
            }
        }
        for k in 1..3usize {
            let ring = RingDescriptor::B(k);
            let mut rel = &g(Family::B, k as i64) * &g(Family::BPrime, k as i64);
            for i in 1..=k as i64 {
                let s = if i % 2 == 0 { 1 } else { -1 };
                rel += (&g(Family::B, k as i64 + i) * &g(Family::B, k as i64 - i)).scale(&rat(s));
            }
            assert!(normal_form(&rel, &ring).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_forms_are_k_strict_and_idempotent() {
        let ring = RingDescriptor::A(1);
        let u = |i| g(Family::U, i);
        let x = &(&u(3) * &u(3)) * &(&u(1) + &u(2));
        let nf = normal_form(&x, &ring).unwrap();
        for (m, _) in nf.terms() {
            assert!(m.pairs().iter().all(|(g, e)| *e == 1 || g.index <= 1));
        }
        assert_eq!(normal_form(&nf, &ring).unwrap(), nf);
    }

    #[test]
    fn ring_names() {
        for s in ["A(2)", "B(1)", "Gamma", "GammaPrime", "Free"] {
            assert_eq!(RingDescriptor::parse(s).unwrap().to_string(), s);
        }
    }
}
