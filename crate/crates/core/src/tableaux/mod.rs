//! Tableaux for Schur, theta and eta polynomials, and the tableau formulas
//! evaluated as truncated series.
//!
//! A tableau is stored as its chain of shapes; the filling is rendered from
//! the chain. The series functions never list tableaux: they run a dynamic
//! program over the shapes contained in `λ`, one entry value at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::combinat::{is_horizontal_strip, Partition, TypedPartition};
use crate::error::{Error, Result};
use crate::pieri::{k_horizontal_strip_c, k_horizontal_strip_d};
use crate::series::TruncatedSeries;

/// A tableau entry: `j′` (marked), `i` or `i°` (circled).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Marked(u32),
    Plain(u32),
    Circled(u32),
}

impl Entry {
    pub fn value(self) -> u32 {
        match self {
            Entry::Marked(v) | Entry::Plain(v) | Entry::Circled(v) => v,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad tableau entry {s:?}"));
        let (body, ctor): (&str, fn(u32) -> Entry) = if let Some(b) = s.strip_suffix('\'') {
            (b, Entry::Marked)
        } else if let Some(b) = s.strip_suffix('o') {
            (b, Entry::Circled)
        } else {
            (s, Entry::Plain)
        };
        let v: u32 = body.parse().map_err(|_| bad())?;
        if v == 0 {
            return Err(bad());
        }
        Ok(ctor(v))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Marked(v) => write!(f, "{v}'"),
            Entry::Plain(v) => write!(f, "{v}"),
            Entry::Circled(v) => write!(f, "{v}o"),
        }
    }
}

/// A filling of `outer/inner`; cells of `inner` are left empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    inner: Partition,
    outer: Partition,
    rows: Vec<Vec<Option<Entry>>>,
    /// The exponent `n(T)` of 2 (zero for type A).
    pub n: usize,
}

impl Tableau {
    fn blank(inner: &Partition, outer: &Partition) -> Self {
        let rows = outer.parts().iter().map(|&len| vec![None; len]).collect();
        Tableau { inner: inner.clone(), outer: outer.clone(), rows, n: 0 }
    }

    fn fill_strip(&mut self, lower: &Partition, upper: &Partition, e: Entry) {
        for (r, c) in upper.skew_cells(lower) {
            self.rows[r - 1][c - 1] = Some(e);
        }
    }

    fn fill_marked(&mut self, cells: &[Vec<u32>]) {
        for (r, row) in cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                self.rows[r][c] = Some(Entry::Marked(v));
            }
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn rows(&self) -> &[Vec<Option<Entry>>] {
        &self.rows
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().flatten().copied()
    }

    /// Multiplicities of the unmarked values `1..=m`.
    pub fn z_content(&self, m: usize) -> Vec<u32> {
        let mut c = vec![0; m];
        for e in self.entries() {
            if !matches!(e, Entry::Marked(_)) && (e.value() as usize) <= m {
                c[e.value() as usize - 1] += 1;
            }
        }
        c
    }

    /// Multiplicities of the marked values `1′..=k′`.
    pub fn x_content(&self, k: usize) -> Vec<u32> {
        let mut c = vec![0; k];
        for e in self.entries() {
            if let Entry::Marked(v) = e {
                c[v as usize - 1] += 1;
            }
        }
        c
    }

    /// `2^{n} z^{c} x^{m}` in `m` z-variables and `k` x-variables.
    pub fn monomial(&self, m: usize, k: usize) -> TruncatedSeries {
        let cap = self.outer.size() as u32;
        TruncatedSeries::monomial(m, k, cap, &self.z_content(m), &self.x_content(k), BigInt::one() << self.n)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    Value::Array(row.iter().map(|e| e.map_or(Value::Null, |e| Value::String(e.to_string()))).collect())
                })
                .collect(),
        )
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.map_or(".".to_string(), |e| e.to_string())).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Semistandard tableaux of shape `λ` with entries in `1..=max_entry`, as
/// chains of horizontal strips.
pub fn enumerate_tableaux_a(lambda: &Partition, max_entry: usize) -> Vec<Tableau> {
    fn rec(shape: &Partition, entry: usize, chain: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if entry == 0 {
            if shape.is_empty() {
                out.push(chain.clone());
            }
            return;
        }
        for lower in shape.subpartitions() {
            if lower.len() <= entry - 1 && is_horizontal_strip(&lower, shape) {
                chain.push(lower.clone());
                rec(&lower, entry - 1, chain, out);
                chain.pop();
            }
        }
    }
    let mut chains = Vec::new();
    rec(lambda, max_entry, &mut vec![lambda.clone()], &mut chains);
    chains.sort();
    chains
        .into_iter()
        .map(|chain| {
            let mut t = Tableau::blank(&Partition::empty(), lambda);
            // chain runs from λ down to ∅; position i holds λ^{max−i}
            for (i, pair) in chain.windows(2).enumerate() {
                t.fill_strip(&pair[1], &pair[0], Entry::Plain((max_entry - i) as u32));
            }
            t
        })
        .collect()
}

/// `s_λ(x_1..x_k)` by the tableau formula, as an x-only series in a
/// ring with `m` z-variables.
pub fn schur_x_series(lambda: &Partition, m: usize, k: usize, cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(m, k, cap);
    for t in enumerate_tableaux_a(lambda, k) {
        let x: Vec<u32> = t.z_content(k);
        out.add_term([vec![0; m], x].concat(), BigInt::one());
    }
    out
}

/// Row fillings of `μ` by `1′..k′`, strictly increasing along rows and
/// weakly down columns (the transposes of tableaux of the conjugate shape).
fn marked_fillings(mu: &Partition, k: usize) -> Vec<Vec<Vec<u32>>> {
    enumerate_tableaux_a(&mu.conjugate(), k)
        .into_iter()
        .map(|t| {
            let mut rows: Vec<Vec<u32>> = mu.parts().iter().map(|&len| vec![0; len]).collect();
            for (c, col) in t.rows().iter().enumerate() {
                for (r, e) in col.iter().enumerate() {
                    rows[r][c] = e.expect("straight shape").value();
                }
            }
            rows
        })
        .collect()
}

/// A node of the chain dynamic program: a shape and its strip relation.
trait ChainNode: Clone + Ord + std::hash::Hash {
    fn size(&self) -> usize;
    fn shape(&self) -> &Partition;
    fn entry(&self, i: u32) -> Entry;
}

impl ChainNode for Partition {
    fn size(&self) -> usize {
        Partition::size(self)
    }
    fn shape(&self) -> &Partition {
        self
    }
    fn entry(&self, i: u32) -> Entry {
        Entry::Plain(i)
    }
}

impl ChainNode for TypedPartition {
    fn size(&self) -> usize {
        TypedPartition::size(self)
    }
    fn shape(&self) -> &Partition {
        self.partition()
    }
    fn entry(&self, i: u32) -> Entry {
        if self.ty() == 2 {
            Entry::Circled(i)
        } else {
            Entry::Plain(i)
        }
    }
}

/// The shapes below the top and the strip exponents between them.
struct StripTable<N> {
    nodes: Vec<N>,
    below: HashMap<N, Vec<(N, usize)>>,
}

impl<N: ChainNode> StripTable<N> {
    fn new(nodes: Vec<N>, strip: impl Fn(&N, &N) -> Option<usize>) -> Self {
        let mut below: HashMap<N, Vec<(N, usize)>> = HashMap::new();
        for upper in &nodes {
            let mut list = Vec::new();
            for lower in &nodes {
                if upper.shape().contains(lower.shape()) {
                    if let Some(n) = strip(upper, lower) {
                        list.push((lower.clone(), n));
                    }
                }
            }
            list.sort();
            below.insert(upper.clone(), list);
        }
        StripTable { nodes, below }
    }

    /// For every node `μ`, the sum of `2^{n(T)} z^{c(T)}` over chains from
    /// `μ` up to `top` whose layers use the values `1..=m`.
    fn chain_sums(&self, top: &N, m: usize, k: usize, cap: u32) -> BTreeMap<N, TruncatedSeries> {
        let mut level: BTreeMap<N, TruncatedSeries> = BTreeMap::new();
        level.insert(top.clone(), TruncatedSeries::one(m, k, cap));
        for i in (1..=m).rev() {
            let mut next: BTreeMap<N, TruncatedSeries> = BTreeMap::new();
            for (upper, acc) in &level {
                for (lower, n) in &self.below[upper] {
                    let mut z = vec![0u32; m];
                    z[i - 1] = (upper.size() - lower.size()) as u32;
                    let step = TruncatedSeries::monomial(m, k, cap, &z, &vec![0; k], BigInt::one() << *n);
                    let term = acc * &step;
                    match next.get_mut(lower) {
                        Some(s) => *s = &*s + &term,
                        None => {
                            next.insert(lower.clone(), term);
                        }
                    }
                }
            }
            level = next;
        }
        level.retain(|_, s| !s.is_zero());
        level
    }

    /// Every chain from `bottom` to `top` with `m` layers, top first.
    fn chains(&self, bottom: &N, top: &N, m: usize) -> Vec<(Vec<N>, usize)> {
        fn rec<N: ChainNode>(
            table: &StripTable<N>,
            cur: &N,
            bottom: &N,
            left: usize,
            chain: &mut Vec<N>,
            n: usize,
            out: &mut Vec<(Vec<N>, usize)>,
        ) {
            if left == 0 {
                if cur == bottom {
                    out.push((chain.clone(), n));
                }
                return;
            }
            for (lower, dn) in &table.below[cur] {
                if lower.shape().contains(bottom.shape()) {
                    chain.push(lower.clone());
                    rec(table, lower, bottom, left - 1, chain, n + dn, out);
                    chain.pop();
                }
            }
        }
        let mut out = Vec::new();
        if self.nodes.contains(bottom) {
            rec(self, top, bottom, m, &mut vec![top.clone()], 0, &mut out);
        }
        out
    }
}

fn render_chain<N: ChainNode>(chain: &[N], n: usize, base: Tableau) -> Tableau {
    let m = chain.len() - 1;
    let mut t = base;
    t.n = n;
    for (i, pair) in chain.windows(2).enumerate() {
        let value = (m - i) as u32;
        t.fill_strip(pair[1].shape(), pair[0].shape(), pair[0].entry(value));
    }
    t
}

fn c_table(lambda: &Partition, k: usize) -> StripTable<Partition> {
    let nodes: Vec<Partition> = lambda.subpartitions().into_iter().filter(|p| p.is_k_strict(k)).collect();
    StripTable::new(nodes, |upper, lower| k_horizontal_strip_c(upper, lower, k))
}

fn d_table(lambda: &TypedPartition) -> StripTable<TypedPartition> {
    let k = lambda.k();
    let nodes: Vec<TypedPartition> = lambda
        .partition()
        .subpartitions()
        .into_iter()
        .filter(|p| p.is_k_strict(k))
        .flat_map(|p| TypedPartition::all_types(&p, k))
        .collect();
    StripTable::new(nodes, k_horizontal_strip_d)
}

fn require_k_strict(lambda: &Partition, k: usize) -> Result<()> {
    if lambda.is_k_strict(k) {
        Ok(())
    } else {
        Err(Error::precondition("k-strict", format!("{lambda} is not {k}-strict")))
    }
}

/// `k`-tableaux of shape `λ/μ` with values `1..=m`.
pub fn enumerate_k_tableaux_c(lambda: &Partition, mu: &Partition, k: usize, m: usize) -> Result<Vec<Tableau>> {
    require_k_strict(lambda, k)?;
    require_k_strict(mu, k)?;
    let table = c_table(lambda, k);
    Ok(table.chains(mu, lambda, m).into_iter().map(|(c, n)| render_chain(&c, n, Tableau::blank(mu, lambda))).collect())
}

/// Typed `k′`-tableaux of shape `λ/μ` with values `1..=m`.
pub fn enumerate_k_tableaux_d(lambda: &TypedPartition, mu: &TypedPartition, m: usize) -> Result<Vec<Tableau>> {
    if lambda.k() != mu.k() || lambda.k() == 0 {
        return Err(Error::precondition("level", "typed tableaux need a common level k ≥ 1"));
    }
    let table = d_table(lambda);
    Ok(table
        .chains(mu, lambda, m)
        .into_iter()
        .map(|(c, n)| render_chain(&c, n, Tableau::blank(mu.partition(), lambda.partition())))
        .collect())
}

/// Inner shapes allowed for the marked part of a bitableau.
fn marked_shapes_c(lambda: &Partition, k: usize) -> Vec<Partition> {
    lambda.subpartitions().into_iter().filter(|p| p.part(0) <= k).collect()
}

fn marked_shapes_d(lambda: &TypedPartition) -> Vec<TypedPartition> {
    let k = lambda.k();
    lambda
        .partition()
        .subpartitions()
        .into_iter()
        .filter(|p| p.part(0) <= k)
        .map(|p| {
            let ty = if p.has_part(k) { 1 } else { 0 };
            TypedPartition::new(p, k, ty).expect("parts at most k")
        })
        .collect()
}

fn with_marked(base: Tableau, fillings: &[Vec<Vec<u32>>]) -> Vec<Tableau> {
    fillings
        .iter()
        .map(|f| {
            let mut t = base.clone();
            t.inner = Partition::empty();
            t.fill_marked(f);
            t
        })
        .collect()
}

/// All `k`-bitableaux of shape `λ` with unmarked values `1..=m`.
pub fn enumerate_bitableaux_c(lambda: &Partition, k: usize, m: usize) -> Result<Vec<Tableau>> {
    require_k_strict(lambda, k)?;
    let table = c_table(lambda, k);
    let mut out = Vec::new();
    for mu in marked_shapes_c(lambda, k) {
        let fillings = marked_fillings(&mu, k);
        for (chain, n) in table.chains(&mu, lambda, m) {
            out.extend(with_marked(render_chain(&chain, n, Tableau::blank(&mu, lambda)), &fillings));
        }
    }
    Ok(out)
}

/// All typed `k′`-bitableaux of shape `λ` with unmarked values `1..=m`.
pub fn enumerate_bitableaux_d(lambda: &TypedPartition, m: usize) -> Result<Vec<Tableau>> {
    let k = lambda.k();
    if k == 0 {
        return Err(Error::precondition("level", "level-zero eta series come from the Q tableau formula"));
    }
    let table = d_table(lambda);
    let mut out = Vec::new();
    for mu in marked_shapes_d(lambda) {
        let fillings = marked_fillings(mu.partition(), k);
        for (chain, n) in table.chains(&mu, lambda, m) {
            out.extend(with_marked(render_chain(&chain, n, Tableau::blank(mu.partition(), lambda.partition())), &fillings));
        }
    }
    Ok(out)
}

/// `μ ↦ Σ_T 2^{n(T)} z^{c(T)}` over `k`-tableaux `T` of shape `λ/μ`, for
/// the `μ ⊆ λ` with `μ_1 ≤ k` that pair with `s_{μ̃}(X_k)`.
pub fn tableau_grouped_expansion_c(lambda: &Partition, k: usize, m: usize) -> Result<BTreeMap<Partition, TruncatedSeries>> {
    require_k_strict(lambda, k)?;
    let cap = lambda.size() as u32;
    let sums = c_table(lambda, k).chain_sums(lambda, m, k, cap);
    Ok(sums.into_iter().filter(|(mu, _)| mu.part(0) <= k).collect())
}

/// The typed analogue: `μ` ranges over shapes with parts at most `k` and
/// type other than 2. At level 0 the single entry `∅ ↦ P_λ(Z)` is returned.
pub fn tableau_grouped_expansion_d(lambda: &TypedPartition, m: usize) -> Result<BTreeMap<TypedPartition, TruncatedSeries>> {
    let k = lambda.k();
    let cap = lambda.size() as u32;
    if k == 0 {
        let q = theta_series_via_bitableaux(lambda.partition(), 0, m)?;
        let p = divide_by_power_of_two(&q, lambda.partition().len())?;
        let empty = TypedPartition::new(Partition::empty(), 0, 1)?;
        return Ok(BTreeMap::from([(empty, p)]));
    }
    let sums = d_table(lambda).chain_sums(lambda, m, k, cap);
    Ok(sums.into_iter().filter(|(mu, _)| mu.parts().first().copied().unwrap_or(0) <= k && mu.ty() != 2).collect())
}

fn divide_by_power_of_two(s: &TruncatedSeries, e: usize) -> Result<TruncatedSeries> {
    let d = BigInt::one() << e;
    let mut out = TruncatedSeries::zero(s.m(), s.k(), s.cap());
    for (exps, c) in s.terms() {
        if !(c % &d).is_zero() {
            return Err(Error::InexactDivision(format!("coefficient {c} is not divisible by {d}")));
        }
        out.add_term(exps.clone(), c / &d);
    }
    Ok(out)
}

/// `Σ_μ grouped[μ] · s_{μ̃}(X_k)`.
pub fn contract_grouped<'a>(
    grouped: impl IntoIterator<Item = (&'a Partition, &'a TruncatedSeries)>,
    m: usize,
    k: usize,
    cap: u32,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(m, k, cap);
    for (mu, s) in grouped {
        out = &out + &(s * &schur_x_series(&mu.conjugate(), m, k, cap));
    }
    out
}

/// `Θ_λ(Z; X_k)` in `z_1..z_m` by the bitableau formula.
pub fn theta_series_via_bitableaux(lambda: &Partition, k: usize, m: usize) -> Result<TruncatedSeries> {
    let grouped = tableau_grouped_expansion_c(lambda, k, m)?;
    Ok(contract_grouped(grouped.iter(), m, k, lambda.size() as u32))
}

/// `Η_λ(Z; X_k)` in `z_1..z_m` by the typed bitableau formula.
pub fn eta_series_via_bitableaux(lambda: &TypedPartition, m: usize) -> Result<TruncatedSeries> {
    let grouped = tableau_grouped_expansion_d(lambda, m)?;
    let k = lambda.k();
    Ok(contract_grouped(grouped.iter().map(|(mu, s)| (mu.partition(), s)), m, k, lambda.size() as u32))
}

/// Direct sum of `2^{n(U)} (zx)^{c(U)}` over listed tableaux.
pub fn tableau_sum(tableaux: &[Tableau], m: usize, k: usize, cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(m, k, cap);
    for t in tableaux {
        out = &out + &t.monomial(m, k).with_cap(cap);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{substitute_eta, substitute_theta};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn type_a_counts() {
        assert_eq!(enumerate_tableaux_a(&part("1"), 2).len(), 2);
        assert_eq!(enumerate_tableaux_a(&part("2,1"), 3).len(), 8);
        assert!(enumerate_tableaux_a(&part("1,1,1"), 2).is_empty());
        let s = schur_x_series(&part("2,1"), 0, 3, 3);
        assert_eq!(s.coeff(&[1, 1, 1]), BigInt::from(2));
        assert_eq!(s.coeff(&[2, 1, 0]), BigInt::from(1));
        assert_eq!(s.coeff(&[3, 0, 0]), BigInt::from(0));
    }

    #[test]
    fn tableaux_are_semistandard() {
        for t in enumerate_tableaux_a(&part("3,2"), 3) {
            let rows = t.rows();
            for r in 0..rows.len() {
                for c in 0..rows[r].len() {
                    let v = rows[r][c].unwrap().value();
                    if c > 0 {
                        assert!(rows[r][c - 1].unwrap().value() <= v);
                    }
                    if r > 0 {
                        assert!(rows[r - 1][c].unwrap().value() < v);
                    }
                }
            }
        }
    }

    #[test]
    fn entry_round_trip() {
        for s in ["3", "2o", "1'"] {
            assert_eq!(Entry::parse(s).unwrap().to_string(), s);
        }
        assert!(Entry::parse("0").is_err());
        assert!(Entry::parse("x").is_err());
    }

    #[test]
    fn theta_matches_oracle() {
        for k in 0..=2 {
            for size in 0..=5 {
                for lam in Partition::k_strict_of_size(size, k) {
                    for m in [2, 3] {
                        let cap = size as u32;
                        let tab = theta_series_via_bitableaux(&lam, k, m).unwrap();
                        let oracle = substitute_theta(&lam, k, m, cap).unwrap();
                        assert_eq!(tab, oracle, "λ={lam} k={k} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn eta_matches_oracle() {
        for k in 0..=2 {
            for size in 0..=5 {
                for lam in Partition::k_strict_of_size(size, k) {
                    for t in TypedPartition::all_types(&lam, k) {
                        let m = 3;
                        let tab = eta_series_via_bitableaux(&t, m).unwrap();
                        let oracle = substitute_eta(&t, m, size as u32).unwrap();
                        assert_eq!(tab, oracle, "λ={t} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn listed_bitableaux_agree_with_the_dynamic_program() {
        for (lam, k) in [("3,1", 1), ("2,2,1", 2), ("4", 0), ("2,1", 2)] {
            let lam = part(lam);
            let listed = enumerate_bitableaux_c(&lam, k, 3).unwrap();
            let cap = lam.size() as u32;
            assert_eq!(tableau_sum(&listed, 3, k, cap), theta_series_via_bitableaux(&lam, k, 3).unwrap(), "{lam}");
        }
        for s in ["2:1", "2,1:2", "1,1:1", "3,1:1"] {
            let t = TypedPartition::parse(s, 1).unwrap_or_else(|_| TypedPartition::parse(s, 2).unwrap());
            let listed = enumerate_bitableaux_d(&t, 3).unwrap();
            let cap = t.size() as u32;
            assert_eq!(tableau_sum(&listed, 3, t.k(), cap), eta_series_via_bitableaux(&t, 3).unwrap(), "{t}");
        }
    }

    #[test]
    fn circled_entries_mark_type_two_layers() {
        let t = TypedPartition::parse("1:2", 1).unwrap();
        let all = enumerate_bitableaux_d(&t, 2).unwrap();
        assert!(!all.is_empty());
        for tab in &all {
            let last = tab.entries().max_by_key(|e| e.value()).unwrap();
            assert!(matches!(last, Entry::Circled(_)), "{tab}");
        }
    }

    #[test]
    fn grouped_row_expansion() {
        use crate::series::{generator_series, Which};
        let g = tableau_grouped_expansion_d(&TypedPartition::parse("3", 1).unwrap(), 3).unwrap();
        let empty = TypedPartition::new(part(""), 1, 0).unwrap();
        let one = TypedPartition::new(part("1"), 1, 1).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[&empty], generator_series(Which::P, 3, 3, 1, 3).unwrap());
        assert_eq!(g[&one], generator_series(Which::P, 2, 3, 1, 3).unwrap());
        let g = tableau_grouped_expansion_c(&part("3"), 2, 3).unwrap();
        let keys: Vec<Partition> = g.keys().cloned().collect();
        assert_eq!(keys, vec![part(""), part("1"), part("2")]);
    }

    #[test]
    fn json_rendering() {
        let tabs = enumerate_k_tableaux_c(&part("2,1"), &part("1"), 1, 2).unwrap();
        assert!(!tabs.is_empty());
        let j = tabs[0].to_json();
        assert!(j[0][0].is_null());
    }
}
