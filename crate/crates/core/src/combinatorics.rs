//! Partitions, permutations, set partitions and the counting sequences
//! (Lah, Stirling, Bell) that index the bases of the algebras.
//!
//! Every count is an arbitrary-precision integer. Partitions are stored
//! weakly decreasing; the multiplicity form `(α_1, …, α_n)` is derived on
//! demand. Enumeration order is reverse-lexicographic throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Doubles as a cycle type of `S_n`, where `n` is [`Partition::size`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts `parts` into decreasing order; zero parts are rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(1, 1, …, 1)` with `n` ones; the identity class of `S_n`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The one-part partition `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number partitioned, `Σ parts`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiplicity form: entry `i` is `α_i`, the number of parts equal to
    /// `i`. Index 0 is unused and the vector has length `size() + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.size() + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }

    /// Distinct part sizes with their multiplicities, in decreasing part order.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Self {
        let cols = self.largest();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Self { parts }
    }

    /// Union of parts (the cycle type of a disjoint product).
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Every part multiplied by `m`.
    pub fn scaled(&self, m: usize) -> Self {
        Self {
            parts: self.parts.iter().map(|&p| p * m).collect(),
        }
    }

    /// Parity of a permutation with this cycle type: `(-1)^{n - l(μ)}`.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,3,2,1"`. Parts may be given in any order; they are sorted.
    /// The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_unsorted(parts)
    }
}

/// Optional filters for [`partitions`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraints {
    pub exact_length: Option<usize>,
    pub max_length: Option<usize>,
    pub max_part: Option<usize>,
    /// Each odd part appears at most once.
    pub no_repeated_odd: bool,
    /// Each even part appears at most once.
    pub no_repeated_even: bool,
}

impl PartitionConstraints {
    pub fn exact_length(mut self, len: usize) -> Self {
        self.exact_length = Some(len);
        self
    }

    pub fn max_length(mut self, len: usize) -> Self {
        self.max_length = Some(len);
        self
    }

    pub fn max_part(mut self, part: usize) -> Self {
        self.max_part = Some(part);
        self
    }

    pub fn no_repeated_odd(mut self) -> Self {
        self.no_repeated_odd = true;
        self
    }

    pub fn no_repeated_even(mut self) -> Self {
        self.no_repeated_even = true;
        self
    }

    fn length_cap(&self) -> usize {
        match (self.exact_length, self.max_length) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => usize::MAX,
        }
    }

    fn forbids_repeat(&self, part: usize) -> bool {
        if part % 2 == 1 {
            self.no_repeated_odd
        } else {
            self.no_repeated_even
        }
    }
}

/// All partitions of `n` satisfying `constraints`, in reverse-lexicographic
/// order. `n == 0` yields the single empty partition (when the constraints
/// admit length 0).
pub fn partitions(n: usize, constraints: &PartitionConstraints) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let cap = constraints.length_cap();
    let max_part = constraints.max_part.unwrap_or(n).min(n);
    fill_partitions(n, max_part, cap, constraints, &mut prefix, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    cap: usize,
    constraints: &PartitionConstraints,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if constraints
            .exact_length
            .is_none_or(|len| len == prefix.len())
        {
            out.push(Partition {
                parts: prefix.clone(),
            });
        }
        return;
    }
    if prefix.len() >= cap {
        return;
    }
    // Even with every remaining slot filled by `max_part` we cannot finish.
    if max_part.saturating_mul(cap - prefix.len()) < remaining {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if prefix.last() == Some(&part) && constraints.forbids_repeat(part) {
            continue;
        }
        prefix.push(part);
        fill_partitions(remaining - part, part, cap, constraints, prefix, out);
        prefix.pop();
    }
}

/// `n!`
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")))
    } else {
        Ok(())
    }
}

/// Lah number `L(n, k)`: partitions of `{1, …, n}` into `k` nonempty
/// linearly ordered blocks.
pub fn lah(n: usize, k: usize) -> Result<BigUint> {
    check_range(n, k)?;
    Ok(lah_row(n).swap_remove(k))
}

/// Row `[L(n, 0), …, L(n, n)]` via `L(n,k) = L(n−1,k−1) + (n−1+k) L(n−1,k)`.
pub fn lah_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let mut v = row[k - 1].clone();
            if k < m {
                v += &row[k] * BigUint::from(m - 1 + k);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> Result<BigUint> {
    check_range(n, k)?;
    Ok(stirling2_row(n).swap_remove(k))
}

/// Row `[S(n, 0), …, S(n, n)]` via `S(n,k) = S(n−1,k−1) + k S(n−1,k)`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let mut v = row[k - 1].clone();
            if k < m {
                v += &row[k] * BigUint::from(k);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// Bell number: the total number of set partitions of an `n`-set.
pub fn bell(n: usize) -> BigUint {
    stirling2_row(n).into_iter().sum()
}

/// `z_μ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of
/// cycle type `μ`.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    mu.grouped()
        .into_iter()
        .fold(BigUint::one(), |acc, (part, mult)| {
            acc * BigUint::from(part).pow(mult as u32) * factorial(mult)
        })
}

/// Size of the conjugacy class of cycle type `μ`: `n! / z_μ`.
pub fn class_size(mu: &Partition) -> BigUint {
    factorial(mu.size()) / centralizer_order(mu)
}

/// Iterator over the set partitions of a finite sequence of items.
///
/// Items are treated as distinct by position. Blocks list items in their
/// original order and blocks are ordered by their first item. Partitions
/// are produced in lexicographic order of their restricted growth strings.
#[derive(Clone, Debug)]
pub struct SetPartitions<T> {
    items: Vec<T>,
    blocks: Option<usize>,
    rgs: Vec<usize>,
    done: bool,
}

/// Set partitions of `items`, optionally restricted to exactly `blocks` blocks.
pub fn set_partitions<T: Clone>(items: &[T], blocks: Option<usize>) -> SetPartitions<T> {
    let done = match blocks {
        Some(b) => b > items.len() || (b == 0 && !items.is_empty()),
        None => false,
    };
    SetPartitions {
        items: items.to_vec(),
        blocks,
        rgs: vec![0; items.len()],
        done,
    }
}

impl<T> SetPartitions<T> {
    fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Advances to the next restricted growth string; false when exhausted.
    fn advance(&mut self) -> bool {
        let m = self.rgs.len();
        if m == 0 {
            return false;
        }
        let mut prefix_max = vec![0; m];
        for i in 1..m {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i - 1]);
        }
        for i in (1..m).rev() {
            if self.rgs[i] <= prefix_max[i] {
                self.rgs[i] += 1;
                for j in i + 1..m {
                    self.rgs[j] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl<T: Clone> Iterator for SetPartitions<T> {
    type Item = Vec<Vec<T>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.done {
                return None;
            }
            let count = self.block_count();
            let current = if self.blocks.is_none_or(|b| b == count) {
                let mut out = vec![Vec::new(); count];
                for (item, &b) in self.items.iter().zip(&self.rgs) {
                    out[b].push(item.clone());
                }
                Some(out)
            } else {
                None
            };
            if !self.advance() {
                self.done = true;
            }
            if current.is_some() {
                return current;
            }
        }
    }
}

/// A permutation of `{1, …, n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "not a bijection on 0..{n}: {images:?}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds from 1-based one-line notation `[σ(1), …, σ(n)]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(
                "one-line notation is 1-based".into(),
            ));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Builds a permutation of `{1, …, n}` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (pos, &i) in cycle.iter().enumerate() {
                if i == 0 || i > n {
                    return Err(Error::InvalidPermutation(format!(
                        "index {i} outside 1..={n}"
                    )));
                }
                if seen[i - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "index {i} repeated across cycles"
                    )));
                }
                seen[i - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[i - 1] = next - 1;
            }
        }
        Ok(Self { images })
    }

    /// The canonical representative of cycle type `μ`: cycles of consecutive
    /// integers, shortest cycles first, e.g. `(1)(2 3)(4 5 6)` for `(3,2,1)`.
    pub fn canonical(mu: &Partition) -> Self {
        let n = mu.size();
        let mut images = Vec::with_capacity(n);
        let mut start = 0;
        for &len in mu.parts().iter().rev() {
            for j in 0..len {
                images.push(start + (j + 1) % len);
            }
            start += len;
        }
        Self { images }
    }

    /// Parses cycle notation `"(1 2 3)(4 5)"` or one-line `"2,3,1,5,4"`.
    /// For cycle notation the degree is the largest index mentioned, raised
    /// to `min_degree` when given.
    pub fn parse(s: &str, min_degree: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk.strip_prefix('(').ok_or_else(|| {
                    Error::Parse(format!("malformed cycle notation {s:?}"))
                })?;
                let cycle = body
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad index {t:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let n = max.max(min_degree.unwrap_or(0));
            Self::from_cycles(n, &cycles)
        } else {
            let images = s
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad image {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let perm = Self::from_one_line(&images)?;
            match min_degree {
                Some(n) if n > perm.degree() => Ok(perm.extended(n)),
                _ => Ok(perm),
            }
        }
    }

    /// `n`
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// The same permutation acting on `{1, …, n}` with new points fixed.
    pub fn extended(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }

    /// Disjoint cycles with 1-based labels, each starting at its minimum,
    /// ordered by that minimum. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let lengths = self.cycles().iter().map(Vec::len).collect();
        Partition::from_unsorted(lengths).expect("cycle lengths are positive")
    }

    /// `+1` for even permutations, `−1` for odd.
    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }

    /// 1-based one-line notation, `"2,3,1"`.
    pub fn one_line(&self) -> String {
        self.images
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation omitting fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body = cycle
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            write!(f, "({body})")?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Cycles (1-based, each starting at its minimum) and cycle type of `p`.
pub fn cycle_decomposition(p: &Permutation) -> (Vec<Vec<usize>>, Partition) {
    (p.cycles(), p.cycle_type())
}
