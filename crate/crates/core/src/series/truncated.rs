//! Polynomials in `z_1..z_m` and `x_1..x_k` truncated at a total degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exponent vectors list the `m` z-exponents followed by the `k` x-exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    m: usize,
    k: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(m: usize, k: usize, cap: u32) -> Self {
        TruncatedSeries { m, k, cap, terms: BTreeMap::new() }
    }

    pub fn one(m: usize, k: usize, cap: u32) -> Self {
        let mut s = TruncatedSeries::zero(m, k, cap);
        s.add_term(vec![0; m + k], BigInt::one());
        s
    }

    /// The single monomial `c · z^z x^x` (zero when above the cap).
    pub fn monomial(m: usize, k: usize, cap: u32, z: &[u32], x: &[u32], c: BigInt) -> Self {
        assert!(z.len() == m && x.len() == k, "exponent vector size");
        let mut s = TruncatedSeries::zero(m, k, cap);
        s.add_term(z.iter().chain(x).copied().collect(), c);
        s
    }

    pub fn z_var(m: usize, k: usize, cap: u32, i: usize) -> Self {
        let mut e = vec![0; m + k];
        e[i] = 1;
        let mut s = TruncatedSeries::zero(m, k, cap);
        s.add_term(e, BigInt::one());
        s
    }

    pub fn x_var(m: usize, k: usize, cap: u32, j: usize) -> Self {
        let mut e = vec![0; m + k];
        e[m + j] = 1;
        let mut s = TruncatedSeries::zero(m, k, cap);
        s.add_term(e, BigInt::one());
        s
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `c` at `exps`, silently dropping terms above the cap.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.m + self.k);
        if c.is_zero() || exps.iter().sum::<u32>() > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) {
        assert!(self.m == other.m && self.k == other.k, "series in different variable sets");
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = TruncatedSeries::zero(self.m, self.k, self.cap);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        out
    }

    /// Lowers (or raises) the degree cap, dropping terms above it.
    pub fn with_cap(&self, cap: u32) -> Self {
        let mut out = TruncatedSeries::zero(self.m, self.k, cap);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Sets `z_j = 0` for `j > m2` and forgets those variables.
    pub fn restrict_z(&self, m2: usize) -> Self {
        assert!(m2 <= self.m);
        let mut out = TruncatedSeries::zero(m2, self.k, self.cap);
        for (e, c) in &self.terms {
            if e[m2..self.m].iter().all(|&v| v == 0) {
                let mut f = e[..m2].to_vec();
                f.extend_from_slice(&e[self.m..]);
                out.add_term(f, c.clone());
            }
        }
        out
    }

    /// Exchanges two z-variables.
    pub fn swap_z(&self, i: usize, j: usize) -> Self {
        let mut out = TruncatedSeries::zero(self.m, self.k, self.cap);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.swap(i, j);
            out.add_term(f, c.clone());
        }
        out
    }

    /// Exchanges two x-variables.
    pub fn swap_x(&self, i: usize, j: usize) -> Self {
        self.swap_z(self.m + i, self.m + j)
    }

    pub fn is_symmetric_in_z(&self) -> bool {
        (1..self.m).all(|i| self.swap_z(i - 1, i) == *self)
    }

    pub fn is_symmetric_in_x(&self) -> bool {
        (1..self.k).all(|i| self.swap_x(i - 1, i) == *self)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut out = TruncatedSeries::zero(self.m, self.k, self.cap);
        out.terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        out
    }

    /// Exact division with a multiply-back check. The quotient is built by
    /// repeatedly cancelling the lexicographically largest remaining term.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        self.check_shape(den);
        let (lead_e, lead_c) = den
            .terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let mut rem = self.clone();
        rem.cap = u32::MAX;
        let mut quot = TruncatedSeries::zero(self.m, self.k, self.cap);
        let mut den_full = den.clone();
        den_full.cap = u32::MAX;
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let fits = e.iter().zip(lead_e).all(|(a, b)| a >= b);
            if !fits || !(&c % lead_c).is_zero() {
                return Err(Error::InexactDivision(format!("remainder term {c} at {e:?}")));
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = &c / lead_c;
            let mut step = TruncatedSeries::zero(self.m, self.k, u32::MAX);
            step.add_term(qe.clone(), qc.clone());
            rem = &rem - &(&step * &den_full);
            quot.terms.insert(qe, qc);
        }
        let back = (&quot * den).with_cap(self.cap);
        if back != self.with_cap(self.cap) {
            return Err(Error::InexactDivision("multiply-back mismatch".into()));
        }
        Ok(quot)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"z": &e[..self.m], "x": &e[self.m..], "c": c.to_string()}))
            .collect();
        json!({"m": self.m, "k": self.k, "D": self.cap, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("series JSON: {what}"));
        let field = |name: &str| v.get(name).and_then(Value::as_u64).ok_or_else(|| bad(name));
        let (m, k, cap) = (field("m")? as usize, field("k")? as usize, field("D")? as u32);
        let mut out = TruncatedSeries::zero(m, k, cap);
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
            let vec = |name: &str, len: usize| -> Result<Vec<u32>> {
                let arr = t.get(name).and_then(Value::as_array).ok_or_else(|| bad(name))?;
                let out: Vec<u32> = arr.iter().map(|x| x.as_u64().map(|x| x as u32)).collect::<Option<_>>().ok_or_else(|| bad(name))?;
                if out.len() != len {
                    return Err(bad("exponent length"));
                }
                Ok(out)
            };
            let mut e = vec("z", m)?;
            e.extend(vec("x", k)?);
            let c: BigInt = t.get("c").and_then(Value::as_str).and_then(|s| s.parse().ok()).ok_or_else(|| bad("c"))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.iter().sum::<u32>().cmp(&a.0.iter().sum::<u32>()).then(b.0.cmp(a.0)));
        for (n, (e, c)) in ordered.into_iter().enumerate() {
            let mut vars = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                let name = if i < self.m { format!("z{}", i + 1) } else { format!("x{}", i - self.m + 1) };
                match p {
                    0 => {}
                    1 => vars.push(name),
                    _ => vars.push(format!("{name}^{p}")),
                }
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_shape(rhs);
        let mut out = self.clone();
        out.cap = self.cap.min(rhs.cap);
        if out.cap < self.cap {
            out = out.with_cap(out.cap);
        }
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_shape(rhs);
        let cap = self.cap.min(rhs.cap);
        let mut out = TruncatedSeries::zero(self.m, self.k, cap);
        for (a, ca) in &self.terms {
            let da: u32 = a.iter().sum();
            for (b, cb) in &rhs.terms {
                if da + b.iter().sum::<u32>() > cap {
                    continue;
                }
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self + &rhs
    }
}

impl Sub for TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self - &rhs
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_respects_cap() {
        let z = TruncatedSeries::z_var(2, 1, 2, 0);
        let x = TruncatedSeries::x_var(2, 1, 2, 0);
        let s = &(&z + &x) * &(&z + &x);
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&[1, 0, 1]), BigInt::from(2));
        assert!((&s * &z).is_zero());
        assert_eq!(s.to_string(), "z1^2 + 2*z1*x1 + x1^2");
    }

    #[test]
    fn json_round_trip() {
        let s = TruncatedSeries::monomial(3, 1, 4, &[2, 1, 0], &[1], BigInt::from(2));
        let text = s.to_json().to_string();
        assert_eq!(text, r#"{"m":3,"k":1,"D":4,"terms":[{"z":[2,1,0],"x":[1],"c":"2"}]}"#);
        let back = TruncatedSeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json().to_string(), text);
    }

    #[test]
    fn exact_division() {
        let a = TruncatedSeries::x_var(0, 2, 10, 0);
        let b = TruncatedSeries::x_var(0, 2, 10, 1);
        let num = &(&(&a * &a) - &(&b * &b)) * &a;
        let q = num.divide_exact(&(&a - &b)).unwrap();
        assert_eq!(q, &(&a + &b) * &a);
        assert!(a.divide_exact(&b).is_err());
    }
}
