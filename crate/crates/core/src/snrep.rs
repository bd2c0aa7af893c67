//! Irreducible characters of `S_n`, class functions and their
//! decomposition into irreducibles, plus Church–Farb `V(λ)` labels.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{centralizer_order, partitions, Partition, PartitionConstraints};
use crate::error::{Error, Result};

/// The full character table of `S_n`, rows indexed by irreducibles `λ` and
/// columns by cycle types `μ`, both in reverse-lexicographic order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
    centralizers: Vec<BigUint>,
}

impl CharacterTable {
    fn compute(n: usize) -> Self {
        let parts = partitions(n, &PartitionConstraints::default());
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let values = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| murnaghan_nakayama(lam, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let centralizers = parts.iter().map(centralizer_order).collect();
        Self {
            n,
            partitions: parts,
            index,
            values,
            centralizers,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in reverse-lexicographic order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`; panics if either argument does not partition `n`.
    pub fn value(&self, lam: &Partition, mu: &Partition) -> &BigInt {
        let (i, j) = (self.index[lam], self.index[mu]);
        &self.values[i][j]
    }

    /// `χ^λ(μ)` by row and column index.
    pub fn value_at(&self, lam: usize, mu: usize) -> &BigInt {
        &self.values[lam][mu]
    }

    /// `z_μ` by column index.
    pub fn centralizer_at(&self, mu: usize) -> &BigUint {
        &self.centralizers[mu]
    }

    /// `dim λ = χ^λ(1^n)`.
    pub fn dimension(&self, lam: &Partition) -> BigInt {
        self.value(lam, &Partition::ones(self.n)).clone()
    }
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The character table of `S_n`, computed once per process and shared.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = table_cache().read().expect("cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(CharacterTable::compute(n));
    let mut guard = table_cache().write().expect("cache poisoned");
    Arc::clone(guard.entry(n).or_insert(table))
}

/// Murnaghan–Nakayama: strip rim hooks of length `mu[0]` from `lam` using
/// the beta-set (abacus) encoding.
fn murnaghan_nakayama(
    lam: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), BigInt>,
) -> BigInt {
    let Some((&hook, rest)) = mu.split_first() else {
        return if lam.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (lam.clone(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let len = lam.len();
    let beta: Vec<usize> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < hook {
            continue;
        }
        let target = b - hook;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let smaller = Partition::new(parts).expect("rim hook removal keeps a partition");
        let v = murnaghan_nakayama(&smaller, rest, memo);
        if crossed % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ^λ(μ)` for partitions of the same `n`.
pub fn irreducible_character(lam: &Partition, mu: &Partition) -> Result<BigInt> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lam.size(),
            right: mu.size(),
        });
    }
    Ok(character_table(lam.size()).value(lam, mu).clone())
}

/// An exact rational-valued class function on `S_n`, total over cycle types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Builds a class function from partial values; missing cycle types are 0.
    pub fn from_values(n: usize, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        if let Some(bad) = values.keys().find(|p| p.size() != n) {
            return Err(Error::InvalidPartition(format!(
                "{bad} is not a cycle type of S_{n}"
            )));
        }
        let mut values = values;
        for mu in partitions(n, &PartitionConstraints::default()) {
            values.entry(mu).or_insert_with(BigRational::zero);
        }
        Ok(Self { n, values })
    }

    /// Evaluates `f` on every cycle type of `S_n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = partitions(n, &PartitionConstraints::default())
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        Self { n, values }
    }

    /// Integer-valued class function from per-cycle-type values.
    pub fn from_integers(n: usize, values: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        let map = values
            .into_iter()
            .map(|(p, v)| (p, BigRational::from_integer(v)))
            .collect();
        Self::from_values(n, map)
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lam: &Partition) -> Self {
        let table = character_table(lam.size());
        Self::from_fn(lam.size(), |mu| {
            BigRational::from_integer(table.value(lam, mu).clone())
        })
    }

    /// Character of the regular representation: `n!` at the identity.
    pub fn regular(n: usize) -> Self {
        let id = Partition::ones(n);
        let order = BigInt::from(crate::combinatorics::factorial(n));
        Self::from_fn(n, |mu| {
            if *mu == id {
                BigRational::from_integer(order.clone())
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mu: &Partition) -> Option<&BigRational> {
        self.values.get(mu)
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigRational> {
        &self.values
    }

    /// `⟨f, g⟩ = Σ_μ f(μ) g(μ) / z_μ` (characters of `S_n` are real).
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .values
            .iter()
            .map(|(mu, v)| {
                let z = BigInt::from(centralizer_order(mu));
                v * &other.values[mu] / BigRational::from_integer(z)
            })
            .sum())
    }
}

/// An irreducible `S_n`-module: the partition `λ̄` of `n` together with its
/// Church–Farb tail `(n_1, …, n_r) = (λ̄_1, …, λ̄_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleLabel {
    pub lambda_bar: Partition,
    pub cf_tail: Option<Vec<usize>>,
}

impl IrreducibleLabel {
    /// Label of the irreducible indexed by `lambda_bar`; always has a tail.
    pub fn from_partition(lambda_bar: Partition) -> Self {
        let tail = lambda_bar.parts().iter().skip(1).copied().collect();
        Self {
            lambda_bar,
            cf_tail: Some(tail),
        }
    }

    /// `V(n_1, …, n_r)_n`, defined only when `n ≥ 2 n_1 + n_2 + … + n_r`.
    pub fn from_church_farb(n: usize, tail: &[usize]) -> Result<Self> {
        let undefined = || Error::UndefinedAtN {
            n,
            tail: tail
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
        };
        let tail: Vec<usize> = tail.iter().copied().filter(|&p| p > 0).collect();
        if tail.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "Church–Farb tail must be weakly decreasing: {tail:?}"
            )));
        }
        let sum: usize = tail.iter().sum();
        let first = tail.first().copied().unwrap_or(0);
        if n < sum + first {
            return Err(undefined());
        }
        let mut parts = vec![n - sum];
        parts.extend_from_slice(&tail);
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        Ok(Self::from_partition(Partition::new(parts)?))
    }

    pub fn n(&self) -> usize {
        self.lambda_bar.size()
    }

    /// `|λ| = n − λ̄_0`.
    pub fn weight(&self) -> usize {
        self.n() - self.lambda_bar.largest()
    }

    /// `"V(2)"`, `"V(1,1)"`, `"V(0)"` for the trivial module.
    pub fn cf_string(&self) -> String {
        match &self.cf_tail {
            Some(tail) if tail.is_empty() => "V(0)".to_string(),
            Some(tail) => format!(
                "V({})",
                tail.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => format!("V[{}]", self.lambda_bar),
        }
    }
}

impl Ord for IrreducibleLabel {
    /// Reverse-lexicographic on `λ̄`, so `(n)` comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        other.lambda_bar.cmp(&self.lambda_bar)
    }
}

impl PartialOrd for IrreducibleLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cf_string())
    }
}

/// Church–Farb label of the irreducible `lam`.
pub fn church_farb_label(lam: &Partition) -> IrreducibleLabel {
    IrreducibleLabel::from_partition(lam.clone())
}

/// Multiplicities `m_λ = ⟨f, χ^λ⟩`, nonzero entries only.
pub type Decomposition = BTreeMap<IrreducibleLabel, BigRational>;

/// Decomposes `f` into irreducibles. Non-integral or negative multiplicities
/// are returned as computed; they signal a non-character input.
pub fn decompose(f: &ClassFunction) -> Decomposition {
    let table = character_table(f.n());
    let parts = table.partitions();
    let weights: Vec<BigRational> = parts
        .iter()
        .enumerate()
        .map(|(j, mu)| {
            f.values[mu].clone() / BigRational::from_integer(BigInt::from(table.centralizer_at(j).clone()))
        })
        .collect();
    let mut out = Decomposition::new();
    for (i, lam) in parts.iter().enumerate() {
        let m: BigRational = weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(j, w)| w * BigRational::from_integer(table.value_at(i, j).clone()))
            .sum();
        if !m.is_zero() {
            out.insert(IrreducibleLabel::from_partition(lam.clone()), m);
        }
    }
    out
}

/// True when every multiplicity is a non-negative integer.
pub fn is_genuine(d: &Decomposition) -> bool {
    d.values().all(|m| m.is_integer() && !m.is_negative())
}

/// `⟨f, trivial⟩`
pub fn multiplicity_trivial(f: &ClassFunction) -> BigRational {
    f.values
        .iter()
        .map(|(mu, v)| v / BigRational::from_integer(BigInt::from(centralizer_order(mu))))
        .sum()
}

/// `⟨f, sign⟩`
pub fn multiplicity_alternating(f: &ClassFunction) -> BigRational {
    f.values
        .iter()
        .map(|(mu, v)| {
            let w = v / BigRational::from_integer(BigInt::from(centralizer_order(mu)));
            if mu.sign() < 0 {
                -w
            } else {
                w
            }
        })
        .sum()
}
