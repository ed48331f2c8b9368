//! Permutations and signed permutations in one-line notation.

use std::fmt;

use super::{Partition, TypedPartition};
use crate::error::{Error, Result};

/// The Weyl group family: `S_n`, `W_n` (type C) or the even-signed `W̃_n` (type D).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Group {
    A,
    C,
    D,
}

/// A simple reflection. `S(i)` for `i ≥ 1` swaps positions `i, i+1`;
/// `S0` negates the first entry; `SBox` maps `(w_1, w_2)` to `(−w_2, −w_1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Simple {
    SBox,
    S0,
    S(usize),
}

impl Simple {
    /// Numeric position: `□` and `0` both map to 0.
    pub fn index(self) -> usize {
        match self {
            Simple::SBox | Simple::S0 => 0,
            Simple::S(i) => i,
        }
    }
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simple::SBox => write!(f, "□"),
            Simple::S0 => write!(f, "0"),
            Simple::S(i) => write!(f, "{i}"),
        }
    }
}

impl Group {
    /// Simple reflections of the rank-`n` group, in increasing order.
    pub fn simples(self, n: usize) -> Vec<Simple> {
        let mut out = Vec::new();
        match self {
            Group::A => {}
            Group::C => out.push(Simple::S0),
            Group::D => {
                if n >= 2 {
                    out.push(Simple::SBox)
                }
            }
        }
        out.extend((1..n).map(Simple::S));
        out
    }

    /// The simple reflection sitting at numeric position `i` (0 is `s_0` or `s_□`).
    pub fn simple_at(self, i: usize) -> Simple {
        match (self, i) {
            (Group::C, 0) => Simple::S0,
            (Group::D, 0) => Simple::SBox,
            _ => Simple::S(i),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Group::A),
            "c" => Ok(Group::C),
            "d" => Ok(Group::D),
            _ => Err(Error::Parse(format!("unknown group {s:?}"))),
        }
    }
}

/// An element of `S_∞`, `W_∞` or `W̃_∞`, stored through a finite window.
/// Entries past the window are fixed points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    window: Vec<i32>,
    group: Group,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>, group: Group) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!("{window:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        let negs = window.iter().filter(|&&v| v < 0).count();
        match group {
            Group::A if negs > 0 => {
                return Err(Error::precondition("group", "type A permutations have no negative entries"))
            }
            Group::D if negs % 2 == 1 => {
                return Err(Error::precondition("group", "type D requires an even number of sign changes"))
            }
            _ => {}
        }
        Ok(SignedPermutation { window, group })
    }

    pub fn identity(n: usize, group: Group) -> Self {
        SignedPermutation { window: (1..=n as i32).collect(), group }
    }

    /// Parses `"3,-1,2,5,4"`; a leading `~` or a bar written as `-` both mean negation.
    pub fn parse(s: &str, group: Group) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation::identity(0, group));
        }
        let window = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                let (neg, body) = match t.strip_prefix('~') {
                    Some(b) => (true, b),
                    None => (false, t),
                };
                let v: i32 = body.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}")))?;
                Ok(if neg { -v } else { v })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window, group)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Window size.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> i32 {
        if i <= self.window.len() {
            self.window[i - 1]
        } else {
            i as i32
        }
    }

    pub fn extended(&self, n: usize) -> Self {
        let mut w = self.window.clone();
        while w.len() < n {
            w.push(w.len() as i32 + 1);
        }
        SignedPermutation { window: w, group: self.group }
    }

    /// Drops trailing fixed points.
    pub fn trimmed(&self) -> Self {
        let mut w = self.window.clone();
        while let Some(&v) = w.last() {
            if v == w.len() as i32 {
                w.pop();
            } else {
                break;
            }
        }
        SignedPermutation { window: w, group: self.group }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Same element regardless of window size.
    pub fn same_element(&self, other: &Self) -> bool {
        self.trimmed().window == other.trimmed().window
    }

    pub fn with_group(&self, group: Group) -> Result<Self> {
        SignedPermutation::new(self.window.clone(), group)
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut inv = 0;
        let mut neg_pairs = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    inv += 1;
                }
                if w[i] + w[j] < 0 {
                    neg_pairs += 1;
                }
            }
        }
        let negs = w.iter().filter(|&&v| v < 0).count();
        match self.group {
            Group::A => inv,
            Group::C => inv + neg_pairs + negs,
            Group::D => inv + neg_pairs,
        }
    }

    /// `w · s`, extending the window when needed.
    pub fn right_mul(&self, s: Simple) -> Self {
        let mut w = self.clone();
        match s {
            Simple::S(i) => {
                if i + 1 > w.n() {
                    w = w.extended(i + 1);
                }
                w.window.swap(i - 1, i);
            }
            Simple::S0 => {
                if w.n() < 1 {
                    w = w.extended(1);
                }
                w.window[0] = -w.window[0];
            }
            Simple::SBox => {
                if w.n() < 2 {
                    w = w.extended(2);
                }
                let (a, b) = (w.window[0], w.window[1]);
                w.window[0] = -b;
                w.window[1] = -a;
            }
        }
        w
    }

    /// `s · w`, acting on values.
    pub fn left_mul(&self, s: Simple) -> Self {
        let need = match s {
            Simple::S(i) => i + 1,
            Simple::S0 => 1,
            Simple::SBox => 2,
        };
        let mut w = if self.n() < need { self.extended(need) } else { self.clone() };
        for v in w.window.iter_mut() {
            let (sign, a) = (v.signum(), v.abs());
            *v = match s {
                Simple::S(i) if a == i as i32 => sign * (a + 1),
                Simple::S(i) if a == i as i32 + 1 => sign * (a - 1),
                Simple::S0 if a == 1 => -*v,
                Simple::SBox if a == 1 => -sign * 2,
                Simple::SBox if a == 2 => -sign,
                _ => *v,
            };
        }
        w
    }

    /// `ℓ(w s) < ℓ(w)`.
    pub fn has_descent(&self, s: Simple) -> bool {
        match s {
            Simple::S(i) => self.at(i) > self.at(i + 1),
            Simple::S0 => self.at(1) < 0,
            Simple::SBox => self.at(1) + self.at(2) < 0,
        }
    }

    /// Right descents inside the window, in increasing order.
    pub fn descents(&self) -> Vec<Simple> {
        self.group.simples(self.n().max(2)).into_iter().filter(|&s| self.has_descent(s)).collect()
    }

    /// Largest right descent.
    pub fn last_descent(&self) -> Option<Simple> {
        self.descents().into_iter().last()
    }

    /// No descents at positions below `k` (position `□` counts as 0).
    pub fn is_increasing_up_to(&self, k: usize) -> bool {
        if self.group == Group::D && k <= 1 {
            return true;
        }
        self.descents().iter().all(|d| d.index() >= k)
    }

    /// Sole descent at `k`; for type D, `k = 0` means `□` and `k = 1`
    /// allows descents at both `□` and `1`.
    pub fn is_grassmannian(&self, k: usize) -> bool {
        let ds = self.descents();
        match self.group {
            Group::D if k == 1 => ds.iter().all(|d| d.index() <= 1),
            _ => ds.iter().all(|d| d.index() == k),
        }
    }

    /// Swap the entries at positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut w = self.extended(i.max(j));
        w.window.swap(i - 1, j - 1);
        w
    }

    /// The reflection `t̄_ij`: for `i ≠ j` swap and negate both entries,
    /// for `i = j` negate one entry.
    pub fn bar_reflect(&self, i: usize, j: usize) -> Self {
        let mut w = self.extended(i.max(j));
        if i == j {
            w.window[i - 1] = -w.window[i - 1];
        } else {
            let (a, b) = (w.window[i - 1], w.window[j - 1]);
            w.window[i - 1] = -b;
            w.window[j - 1] = -a;
        }
        w
    }

    /// `1 × w`: shifts every entry up by one and prepends a fixed point.
    pub fn shifted(&self) -> Self {
        let mut window = vec![1];
        window.extend(self.window.iter().map(|&v| v.signum() * (v.abs() + 1)));
        SignedPermutation { window, group: self.group }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            inv[pos] = v.signum() * (i as i32 + 1);
        }
        SignedPermutation { window: inv, group: self.group }
    }

    /// Composition `self ∘ other` (apply `other` first, on positions).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n().max(other.n());
        let a = self.extended(n);
        let b = other.extended(n);
        let window = b
            .window
            .iter()
            .map(|&v| {
                let x = a.window[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -x
                } else {
                    x
                }
            })
            .collect();
        SignedPermutation { window, group: self.group }
    }

    /// Lexicographically least reduced word (letters ordered `□ < 0 < 1 < 2 …`).
    pub fn reduced_word(&self) -> Vec<Simple> {
        let mut word = Vec::new();
        let mut w = self.clone();
        let simples = self.group.simples(self.n().max(2));
        while !w.is_identity() {
            let l = w.length();
            let s = *simples
                .iter()
                .find(|&&s| w.left_mul(s).length() < l)
                .expect("a nontrivial element has a left descent");
            word.push(s);
            w = w.left_mul(s);
        }
        word
    }

    /// Lehmer-type code `γ_i = #{j > i : w_j < w_i}`, trailing zeros dropped.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.window;
        let mut code: Vec<usize> =
            (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count()).collect();
        while code.last() == Some(&0) {
            code.pop();
        }
        code
    }

    /// The partition formed by the nonzero code entries.
    pub fn code_shape(&self) -> Partition {
        Partition::from_unsorted(self.code())
    }

    /// `(μ, ν, λ)` with `λ = μ + ν`; for type C `μ` lists the absolute values
    /// of negative entries, for type D those values minus one.
    pub fn shape_parts(&self) -> (Partition, Partition, Partition) {
        let shift = if self.group == Group::D { 1 } else { 0 };
        let mu = Partition::from_unsorted(
            self.window.iter().filter(|&&v| v < 0).map(|&v| v.unsigned_abs() as usize - shift).collect(),
        );
        let nu = self.code_shape().conjugate();
        let len = mu.len().max(nu.len());
        let lam = Partition::from_unsorted((0..len).map(|i| mu.part(i) + nu.part(i)).collect());
        (mu, nu, lam)
    }

    /// The shape `λ(w)`; for type A this is the code shape.
    pub fn shape(&self) -> Partition {
        match self.group {
            Group::A => self.code_shape(),
            _ => self.shape_parts().2,
        }
    }

    /// Type of a type-D element at level `k`: 0 if `|w_1| = 1`, 1 if `w_1 > 1`, 2 if `w_1 < −1`.
    pub fn d_type(&self, k: usize) -> u8 {
        if k == 0 {
            return 1;
        }
        let w1 = self.at(1);
        if w1.abs() == 1 {
            0
        } else if w1 > 1 {
            1
        } else {
            2
        }
    }

    /// All elements of the rank-`n` group.
    pub fn all(n: usize, group: Group) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        permutations(&mut perm, 0, &mut |p| {
            let signs: u32 = if group == Group::A { 1 } else { 1 << n };
            for mask in 0..signs {
                let w: Vec<i32> =
                    p.iter().enumerate().map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v }).collect();
                if let Ok(sp) = SignedPermutation::new(w, group) {
                    out.push(sp);
                }
            }
        });
        out.sort();
        out
    }

    /// The longest element of the rank-`n` group.
    pub fn longest(n: usize, group: Group) -> Self {
        let window = match group {
            Group::A => (1..=n as i32).rev().collect(),
            Group::C => (1..=n as i32).map(|v| -v).collect(),
            Group::D => (1..=n as i32).map(|v| if v == 1 && n % 2 == 1 { 1 } else { -v }).collect(),
        };
        SignedPermutation { window, group }
    }
}

fn permutations(p: &mut Vec<i32>, i: usize, f: &mut dyn FnMut(&[i32])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permutations(p, i + 1, f);
        p.swap(i, j);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// The `n`-Grassmannian permutation of a partition with at most `n` parts.
pub fn grassmannian_a(lambda: &Partition, n: usize) -> Result<SignedPermutation> {
    if lambda.len() > n {
        return Err(Error::precondition("length", format!("{lambda} has more than {n} parts")));
    }
    let heads: Vec<i32> = (1..=n).map(|i| (lambda.part(n - i) + i) as i32).collect();
    let size = heads.last().copied().unwrap_or(0).max(n as i32) as usize;
    let mut window = heads.clone();
    window.extend((1..=size as i32).filter(|v| !heads.contains(v)));
    SignedPermutation::new(window, Group::A)
}

/// Inverse of [`grassmannian_a`].
pub fn grassmannian_a_inverse(w: &SignedPermutation, n: usize) -> Partition {
    Partition::from_unsorted((1..=n).map(|i| (w.at(n + 1 - i) - (n + 1 - i) as i32) as usize).collect())
}

/// Places tail entries on the positive values: the `j`-th tail (1-based)
/// sits at rank `heads − ρ_j + j` among the sorted positive values.
fn lattice_split(rho: &[usize], heads: usize, values: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let used = heads + rho.len();
    let tail_ranks: Vec<usize> = rho.iter().enumerate().map(|(j, &r)| heads - r + j).collect();
    let mut head = Vec::new();
    let mut tail = Vec::new();
    for (rank, &v) in values.iter().enumerate() {
        if rank >= used || tail_ranks.contains(&rank) {
            tail.push(v);
        } else {
            head.push(v);
        }
    }
    (head, tail)
}

/// The `k`-Grassmannian element of `W_∞` attached to a `k`-strict partition.
pub fn grassmannian_c(lambda: &Partition, k: usize) -> Result<SignedPermutation> {
    if !lambda.is_k_strict(k) {
        return Err(Error::precondition("k-strict", format!("{lambda} is not {k}-strict")));
    }
    let negs: Vec<i32> = lambda.parts().iter().filter(|&&p| p > k).map(|&p| (p - k) as i32).collect();
    let rho: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p <= k).collect();
    let size = (k + negs.len() + rho.len()).max(negs.first().copied().unwrap_or(0) as usize);
    let pos: Vec<i32> = (1..=size as i32).filter(|v| !negs.contains(v)).collect();
    let (head, tail) = lattice_split(&rho, k, &pos);
    let mut window = head;
    window.extend(negs.iter().map(|v| -v));
    window.extend(tail);
    SignedPermutation::new(window, Group::C)
}

/// Inverse of [`grassmannian_c`].
pub fn grassmannian_c_inverse(w: &SignedPermutation, k: usize) -> Partition {
    let parts = (k + 1..=w.n())
        .map(|p| {
            let v = w.at(p);
            if v < 0 {
                k + v.unsigned_abs() as usize
            } else {
                (1..=k).filter(|&r| w.at(r) > v).count()
            }
        })
        .collect();
    Partition::from_unsorted(parts)
}

/// The `k`-Grassmannian element of `W̃_∞` attached to a typed `k`-strict
/// partition (`k = 0` is the `□` level).
pub fn grassmannian_d(lambda: &TypedPartition) -> Result<SignedPermutation> {
    let k = lambda.k();
    let parts = lambda.parts();
    if k == 0 {
        let mut negs: Vec<i32> = parts.iter().map(|&p| p as i32 + 1).collect();
        if negs.len() % 2 == 1 {
            negs.push(1);
        }
        let size = negs.first().copied().unwrap_or(0).max(negs.len() as i32) as usize;
        let mut window: Vec<i32> = negs.iter().map(|v| -v).collect();
        window.extend((1..=size as i32).filter(|v| !negs.contains(v)));
        return SignedPermutation::new(window, Group::D);
    }
    let negs: Vec<i32> = parts.iter().filter(|&&p| p > k).map(|&p| (p - k + 1) as i32).collect();
    let rho: Vec<usize> = parts.iter().copied().filter(|&p| p <= k).collect();
    let size = (k + negs.len() + rho.len()).max(negs.first().copied().unwrap_or(0) as usize);
    let abs_vals: Vec<i32> = (1..=size as i32).filter(|v| !negs.contains(v)).collect();
    let (mut head, mut tail) = lattice_split(&rho, k, &abs_vals);
    let neg_count = negs.len() + usize::from(lambda.ty() == 2);
    if lambda.ty() == 2 {
        head[0] = -head[0];
    }
    let mut window = head;
    let mut tail_negs: Vec<i32> = negs.iter().map(|v| -v).collect();
    if lambda.ty() == 0 {
        if neg_count % 2 == 1 {
            window[0] = -window[0];
        }
    } else if neg_count % 2 == 1 {
        // the value 1 sits in the tail and absorbs the parity
        let pos = tail.iter().position(|&v| v == 1).expect("value 1 lies in the tail");
        tail.remove(pos);
        tail_negs.push(-1);
    }
    window.extend(tail_negs);
    window.extend(tail);
    SignedPermutation::new(window, Group::D)
}

/// Inverse of [`grassmannian_d`].
pub fn grassmannian_d_inverse(w: &SignedPermutation, k: usize) -> Result<TypedPartition> {
    if k == 0 {
        let parts = w.window().iter().filter(|&&v| v < 0).map(|&v| v.unsigned_abs() as usize - 1).collect();
        return TypedPartition::new(Partition::from_unsorted(parts), 0, 1);
    }
    let parts = (k + 1..=w.n())
        .map(|p| {
            let v = w.at(p);
            if v < 0 {
                k - 1 + v.unsigned_abs() as usize
            } else {
                (1..=k).filter(|&r| w.at(r).abs() > v).count()
            }
        })
        .collect();
    TypedPartition::new(Partition::from_unsorted(parts), k, w.d_type(k))
}

/// The (typed) partition labelling a `k`-Grassmannian element.
pub fn grassmannian_label(w: &SignedPermutation, k: usize) -> Result<(Partition, Option<u8>)> {
    match w.group() {
        Group::A => Ok((w.code_shape(), None)),
        Group::C => Ok((grassmannian_c_inverse(w, k), None)),
        Group::D => {
            let t = grassmannian_d_inverse(w, k)?;
            Ok((t.partition().clone(), Some(t.ty())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn sp(s: &str, g: Group) -> SignedPermutation {
        SignedPermutation::parse(s, g).unwrap()
    }

    fn bfs_lengths(n: usize, g: Group) -> HashMap<Vec<i32>, usize> {
        let mut dist = HashMap::new();
        let id = SignedPermutation::identity(n, g);
        dist.insert(id.window().to_vec(), 0);
        let mut q = VecDeque::from([id]);
        while let Some(w) = q.pop_front() {
            let d = dist[w.window()];
            for s in g.simples(n) {
                let v = w.right_mul(s);
                if !dist.contains_key(v.window()) {
                    dist.insert(v.window().to_vec(), d + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    #[test]
    fn length_formula_matches_bfs() {
        for (n, g, size) in [(4, Group::C, 384), (4, Group::D, 192), (5, Group::A, 120)] {
            let dist = bfs_lengths(n, g);
            assert_eq!(dist.len(), size);
            for w in SignedPermutation::all(n, g) {
                assert_eq!(w.length(), dist[w.window()], "{w}");
            }
        }
    }

    #[test]
    fn shapes_have_length_size() {
        for g in [Group::C, Group::D] {
            for w in SignedPermutation::all(4, g) {
                assert_eq!(w.shape().size(), w.length(), "{w}");
            }
        }
    }

    #[test]
    fn codes_and_shapes() {
        let w = sp("2,1,5,4,3", Group::A);
        assert_eq!(w.code(), vec![1, 0, 2, 1]);
        assert_eq!(w.code_shape(), "2,1,1".parse().unwrap());
        for n in 1..5 {
            let w0 = SignedPermutation::longest(n, Group::C);
            let want: Vec<usize> = (0..n).map(|i| 2 * (n - i) - 1).collect();
            assert_eq!(w0.shape(), Partition::new(want).unwrap());
            assert_eq!(w0.length(), n * n);
            let wd = SignedPermutation::longest(n, Group::D);
            let want: Vec<usize> = (1..n).map(|i| 2 * (n - i)).collect();
            assert_eq!(wd.shape(), Partition::new(want).unwrap());
            assert_eq!(wd.length(), n * (n - 1));
        }
        assert_eq!(sp("~3,5,~1,2,4", Group::D).shape(), "3,1,1".parse().unwrap());
        assert_eq!(sp("3,-1,2,5,4", Group::C).shape().size(), 4);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for g in [Group::C, Group::D] {
            for w in SignedPermutation::all(3, g) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let mut v = SignedPermutation::identity(3, g);
                for s in word {
                    v = v.right_mul(s);
                }
                assert_eq!(v, w);
            }
        }
    }

    #[test]
    fn type_d_bijection_example() {
        let t = TypedPartition::parse("2,2,1:2", 2).unwrap();
        let v = grassmannian_d(&t).unwrap();
        assert_eq!(v, sp("-3,5,-1,2,4", Group::D));
        assert_eq!(grassmannian_d_inverse(&v, 2).unwrap(), t);
    }

    #[test]
    fn bijections_round_trip() {
        for size in 0..9 {
            for lam in Partition::all_of_size(size) {
                for k in 0..4 {
                    if lam.is_k_strict(k) {
                        let w = grassmannian_c(&lam, k).unwrap();
                        assert!(w.is_grassmannian(k), "{lam} {k} {w}");
                        assert_eq!(grassmannian_c_inverse(&w, k), lam);
                        assert_eq!(w.shape(), lam, "shape of {w}");
                        for t in TypedPartition::all_types(&lam, k) {
                            let v = grassmannian_d(&t).unwrap();
                            assert!(v.is_grassmannian(k), "{t} {v}");
                            assert_eq!(grassmannian_d_inverse(&v, k).unwrap(), t, "{v}");
                            assert_eq!(v.length(), size);
                            if t.ty() != 2 {
                                assert_eq!(v.shape(), lam, "{t} {v}");
                            }
                        }
                    }
                }
                for n in lam.len().max(1)..5 {
                    let w = grassmannian_a(&lam, n).unwrap();
                    assert!(w.is_grassmannian(n));
                    assert_eq!(grassmannian_a_inverse(&w, n), lam);
                    assert_eq!(w.code_shape(), lam);
                }
            }
        }
        assert!(grassmannian_a(&Partition::empty(), 3).unwrap().is_identity());
    }

    #[test]
    fn grassmannian_elements_are_counted_by_partitions() {
        // every k-Grassmannian element of W_4 appears in the image
        for k in 0..4 {
            for w in SignedPermutation::all(4, Group::C) {
                if w.is_grassmannian(k) {
                    let lam = grassmannian_c_inverse(&w, k);
                    assert!(grassmannian_c(&lam, k).unwrap().same_element(&w));
                }
            }
            for w in SignedPermutation::all(4, Group::D) {
                if w.is_grassmannian(k) {
                    let t = grassmannian_d_inverse(&w, k).unwrap();
                    assert!(grassmannian_d(&t).unwrap().same_element(&w), "{w} -> {t}");
                }
            }
        }
    }
}
