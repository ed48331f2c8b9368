//! Sparse commutative polynomials in graded generator families.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Generator families. `BPrime` only ever appears at the level index `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    U,
    C,
    B,
    BPrime,
    E,
    H,
    X,
}

impl Family {
    fn group(self) -> u8 {
        match self {
            Family::U => 0,
            Family::C => 1,
            Family::B | Family::BPrime => 2,
            Family::E => 3,
            Family::H => 4,
            Family::X => 5,
        }
    }

    /// ASCII prefix used in JSON keys and accepted by the parser.
    pub fn prefix(self) -> &'static str {
        match self {
            Family::U => "u",
            Family::C => "c",
            Family::B => "b",
            Family::BPrime => "b'",
            Family::E => "e",
            Family::H => "h",
            Family::X => "x",
        }
    }
}

/// A single generator `u_p`, `c_p`, `b_p`, `b′_k`, `e_p`, `h_p` or the variable `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub family: Family,
    pub index: u32,
}

impl Generator {
    pub fn new(family: Family, index: u32) -> Self {
        Generator { family, index }
    }

    pub fn degree(&self) -> u32 {
        if self.family == Family::X {
            1
        } else {
            self.index
        }
    }

    fn sort_key(&self) -> (u8, u32, bool) {
        (self.family.group(), self.index, self.family == Family::B)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (family, rest) = if let Some(r) = s.strip_prefix("b'").or_else(|| s.strip_prefix("b′")) {
            (Family::BPrime, r)
        } else {
            let mut chars = s.chars();
            let f = match chars.next() {
                Some('u') => Family::U,
                Some('c') => Family::C,
                Some('b') => Family::B,
                Some('e') => Family::E,
                Some('h') => Family::H,
                Some('x') => Family::X,
                _ => return Err(Error::Parse(format!("unknown generator {s:?}"))),
            };
            (f, chars.as_str())
        };
        let index = rest.parse().map_err(|_| Error::Parse(format!("bad generator index in {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!("generator {s:?} has index 0")));
        }
        Ok(Generator { family, index })
    }
}

/// Within a monomial generators are listed by family, then by decreasing index.
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.sort_key(), other.sort_key());
        a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Generator {
    /// ASCII name, e.g. `b'2`.
    pub fn key(&self) -> String {
        format!("{}{}", self.family.prefix(), self.index)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::BPrime => write!(f, "b′{}", self.index),
            fam => write!(f, "{}{}", fam.prefix(), self.index),
        }
    }
}

/// A monomial: generators with positive exponents, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn gen(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut m: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in pairs {
            if e > 0 {
                *m.entry(g).or_default() += e;
            }
        }
        Monomial(m.into_iter().collect())
    }

    /// `g_{i_1} g_{i_2} …` for positive indices; zero indices are dropped.
    pub fn from_indices(family: Family, indices: impl IntoIterator<Item = u32>) -> Self {
        Monomial::from_pairs(indices.into_iter().filter(|&i| i > 0).map(|i| (Generator::new(family, i), 1)))
    }

    pub fn pairs(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.degree() * e).sum()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0.iter().find(|(h, _)| *h == g).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Splits into the factors satisfying `pred` and the rest.
    pub fn split(&self, pred: impl Fn(&Generator) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(g, _)| pred(g));
        (Monomial(a), Monomial(b))
    }

    /// Generators listed with multiplicity.
    pub fn expanded(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.iter().flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
    }

    pub fn families(&self) -> impl Iterator<Item = Family> + '_ {
        self.0.iter().map(|(g, _)| g.family)
    }
}

/// Monomials compare by their generator lists read left to right,
/// with indices compared in increasing order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.expanded();
        let mut b = other.expanded();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => {
                    let (kx, ky) = (x.sort_key(), y.sort_key());
                    match kx.cmp(&ky) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (g, e) in &self.0 {
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite linear combination of monomials with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeElement {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    pub fn one() -> Self {
        FreeElement::monomial(Monomial::one(), rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        FreeElement::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        FreeElement { terms }
    }

    /// A generator, with the conventions that index 0 is 1 and negative
    /// indices give 0 (`x` has no such convention).
    pub fn gen(family: Family, index: i64) -> Self {
        match index.cmp(&0) {
            Ordering::Less => FreeElement::zero(),
            Ordering::Equal if family != Family::X => FreeElement::one(),
            _ => FreeElement::monomial(Monomial::gen(Generator::new(family, index as u32)), rat(1)),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigRational> {
        self.terms
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = FreeElement::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &BigRational) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> FreeElement {
        FreeElement { terms: self.terms.iter().map(|(n, v)| (n.mul(m), v.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> FreeElement {
        let mut out = FreeElement::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Errors unless every coefficient is an integer.
    pub fn require_integral(&self, context: &str) -> Result<()> {
        match self.terms.iter().find(|(_, c)| !c.is_integer()) {
            None => Ok(()),
            Some((m, c)) => Err(Error::NonIntegral(format!("{context}: coefficient {c} on {m}"))),
        }
    }

    /// Every monomial has total degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Replaces generators through `f`; generators mapped to `None` stay.
    pub fn substitute(&self, f: &dyn Fn(Generator) -> Option<FreeElement>) -> FreeElement {
        let mut cache: HashMap<(Generator, u32), FreeElement> = HashMap::new();
        let mut out = FreeElement::zero();
        for (m, c) in &self.terms {
            let mut acc = FreeElement::constant(c.clone());
            let mut kept = Vec::new();
            for &(g, e) in m.pairs() {
                match f(g) {
                    None => kept.push((g, e)),
                    Some(img) => {
                        let p = cache.entry((g, e)).or_insert_with(|| img.pow(e)).clone();
                        acc = &acc * &p;
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            if !acc.is_zero() {
                acc = acc.mul_monomial(&Monomial::from_pairs(kept));
                out += acc;
            }
        }
        out
    }

    /// Keeps terms accepted by `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> FreeElement {
        FreeElement { terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Renders `c` as a decimal integer or a fraction `p/q`.
    pub fn coeff_string(c: &BigRational) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    pub fn parse_coeff(s: &str) -> Result<BigRational> {
        let bad = || Error::Parse(format!("bad coefficient {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.parse().map_err(|_| bad())?;
                let q: BigInt = q.parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(p, q))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }

    /// LaTeX rendering (best effort).
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mono: String = m
                .pairs()
                .iter()
                .map(|(g, e)| {
                    let base = match g.family {
                        Family::BPrime => format!("b'_{{{}}}", g.index),
                        f => format!("{}_{{{}}}", f.prefix(), g.index),
                    };
                    if *e == 1 {
                        base
                    } else {
                        format!("{base}^{{{e}}}")
                    }
                })
                .collect();
            let coeff = if a.is_one() && !m.is_one() {
                String::new()
            } else if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            s.push_str(&coeff);
            s.push_str(&mono);
        }
        s
    }

    /// Integer value of a constant element.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Terms by decreasing degree, then in monomial order.
    fn display_order(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| std::cmp::Reverse(m.degree()));
        v
    }

    /// Largest coefficient magnitude as `f64`, for diagnostics.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().filter_map(|c| c.abs().to_f64()).fold(0.0, f64::max)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if m.is_one() {
                write!(f, "{}", FreeElement::coeff_string(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}{m}", FreeElement::coeff_string(&a))?;
            }
        }
        Ok(())
    }
}

impl AddAssign for FreeElement {
    fn add_assign(&mut self, rhs: FreeElement) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&FreeElement> for FreeElement {
    fn add_assign(&mut self, rhs: &FreeElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for FreeElement {
    type Output = FreeElement;
    fn add(mut self, rhs: FreeElement) -> FreeElement {
        self += rhs;
        self
    }
}

impl Add<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        FreeElement { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Sub for FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: FreeElement) -> FreeElement {
        self + (-rhs)
    }
}

impl Sub<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        FreeElement::from_terms(acc)
    }
}

impl Mul for FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: FreeElement) -> FreeElement {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: i64) -> FreeElement {
        FreeElement::gen(Family::U, i)
    }

    #[test]
    fn conventions() {
        assert_eq!(u(0), FreeElement::one());
        assert!(u(-1).is_zero());
        assert_eq!(&u(2) * &u(0), u(2));
    }

    #[test]
    fn display_order() {
        let x = &(&u(5) * &u(3)) + &(&(&u(5) * &u(2)) * &u(1));
        assert_eq!(x.to_string(), "u5u2u1 + u5u3");
        let b2 = FreeElement::gen(Family::B, 2);
        let bp2 = FreeElement::gen(Family::BPrime, 2);
        let b3 = FreeElement::gen(Family::B, 3);
        assert_eq!((&(&b3 * &bp2) * &b2).to_string(), "b3b′2b2");
    }

    #[test]
    fn arithmetic() {
        let a = &u(1) + &u(2);
        let sq = &a * &a;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&Monomial::from_indices(Family::U, [2, 1])), rat(2));
        assert!((&sq - &sq).is_zero());
        let sub = sq.substitute(&|g| (g.index == 2).then(|| FreeElement::constant(rat(3))));
        assert_eq!(sub.to_string(), "u1^2 + 6u1 + 9");
    }

    #[test]
    fn generator_parsing() {
        for s in ["u6", "b'2", "x1", "c10"] {
            assert_eq!(Generator::parse(s).unwrap().key(), s);
        }
        assert_eq!(Generator::parse("b′3").unwrap().key(), "b'3");
        assert!(Generator::parse("q1").is_err());
    }
}
