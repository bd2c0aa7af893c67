//! Closed-form side: Hilbert series, graded character formulas, plethystic
//! decompositions, multiplicity counts, irreducible constraints and
//! representation-stability reports.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{
    lah_row, partitions, set_partitions, stirling2_row, Partition, PartitionConstraints,
};
use crate::error::{Error, Result};
use crate::oracle::Algebra;
use crate::snrep::{character_table, Decomposition, IrreducibleLabel};
use crate::symfunc::SymFunc;

/// Graded character `Σ_k χ_k(σ) z^k` of one algebra at one cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    n: usize,
    mu: Partition,
    coeffs: Vec<BigInt>,
}

impl GradedCharacter {
    /// `coeffs[k]` is the trace in degree `k`; shorter input is zero-padded
    /// to length `n`.
    pub fn new(n: usize, mu: Partition, mut coeffs: Vec<BigInt>) -> Result<Self> {
        if mu.size() != n {
            return Err(Error::SizeMismatch {
                left: mu.size(),
                right: n,
            });
        }
        if coeffs.len() > n.max(1) && coeffs[n.max(1)..].iter().any(|c| !c.is_zero()) {
            return Err(Error::OutOfRange(format!(
                "graded character of S_{n} has terms beyond degree {}",
                n.saturating_sub(1)
            )));
        }
        coeffs.resize(n.max(1), BigInt::zero());
        Ok(Self { n, mu, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }
}

/// Irreducible decomposition of one graded piece, `λ̄ ↦ multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    pub n: usize,
    pub degree: usize,
    pub entries: BTreeMap<IrreducibleLabel, BigUint>,
}

impl DecompositionTable {
    /// Accepts only non-negative integral multiplicities.
    pub fn from_decomposition(n: usize, degree: usize, d: &Decomposition) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (label, m) in d {
            if !m.is_integer() || m.is_negative() {
                return Err(Error::NotACharacter(format!(
                    "multiplicity {m} of {} at n = {n}, degree {degree}",
                    label.lambda_bar
                )));
            }
            entries.insert(label.clone(), m.to_integer().to_biguint().expect("non-negative"));
        }
        Ok(Self { n, degree, entries })
    }

    /// Multiplicity of `λ̄` (0 when absent).
    pub fn get(&self, lambda_bar: &Partition) -> BigUint {
        self.entries
            .get(&IrreducibleLabel::from_partition(lambda_bar.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// `Σ_λ m_λ dim λ`
    pub fn dimension(&self) -> BigInt {
        let table = character_table(self.n);
        self.entries
            .iter()
            .map(|(l, m)| table.dimension(&l.lambda_bar) * BigInt::from(m.clone()))
            .sum()
    }

    /// Multiplicities keyed by Church–Farb tail.
    pub fn by_tail(&self) -> BTreeMap<Vec<usize>, BigUint> {
        self.entries
            .iter()
            .map(|(l, m)| (l.cf_tail.clone().unwrap_or_default(), m.clone()))
            .collect()
    }

    /// Compact `V(0)+2V(1)+V(1,1)` rendering.
    pub fn cf_summary(&self) -> String {
        if self.entries.is_empty() {
            return "0".to_string();
        }
        self.entries
            .iter()
            .map(|(l, m)| {
                if m.is_one() {
                    l.cf_string()
                } else {
                    format!("{m}{}", l.cf_string())
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_assign(acc: &mut Vec<BigInt>, p: &[BigInt]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

/// Graded dimensions at the identity: `L(n, n−k)` for `pvb!`, `S(n, n−k)`
/// for `pfb!`.
pub fn hilbert(algebra: Algebra, n: usize) -> Result<GradedCharacter> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let row = match algebra {
        Algebra::PvbDual => lah_row(n),
        Algebra::PfbDual => stirling2_row(n),
    };
    let coeffs = (0..n).map(|k| BigInt::from(row[n - k].clone())).collect();
    GradedCharacter::new(n, Partition::ones(n), coeffs)
}

/// Character of `pvb!_n` at cycle type `μ`: a product over distinct part
/// sizes `k` (multiplicity `α`) of
/// `Σ_β L(α, β) (−1)^{(α−β)(k−1)} k^{α−β} z^{(α−β)k}`.
pub fn char_pvb(n: usize, mu: &Partition) -> Result<GradedCharacter> {
    check_cycle_type(n, mu)?;
    let mut poly = vec![BigInt::one()];
    for (k, alpha) in mu.grouped() {
        let lah = lah_row(alpha);
        let mut factor = vec![BigInt::zero(); alpha * k + 1];
        for (beta, l) in lah.iter().enumerate() {
            let e = alpha - beta;
            let mut c = BigInt::from(l.clone()) * BigInt::from(k).pow(e as u32);
            if (e * (k - 1)) % 2 == 1 {
                c = -c;
            }
            factor[e * k] += c;
        }
        poly = poly_mul(&poly, &factor);
    }
    GradedCharacter::new(n, mu.clone(), poly)
}

/// The substitution form of [`char_pvb`]: `∏_k pvb!_{α_k}((−1)^{k−1} k z^k)`.
pub fn char_pvb_substituted(n: usize, mu: &Partition) -> Result<GradedCharacter> {
    check_cycle_type(n, mu)?;
    let mut poly = vec![BigInt::one()];
    for (k, alpha) in mu.grouped() {
        let hs = hilbert(Algebra::PvbDual, alpha)?;
        let w = if k % 2 == 1 {
            BigInt::from(k)
        } else {
            -BigInt::from(k)
        };
        let mut factor = vec![BigInt::zero(); (alpha - 1) * k + 1];
        for (d, c) in hs.coeffs().iter().enumerate() {
            factor[d * k] += c * w.pow(d as u32);
        }
        poly = poly_mul(&poly, &factor);
    }
    GradedCharacter::new(n, mu.clone(), poly)
}

/// Character of `pfb!_n` at cycle type `μ`, summing over set partitions of
/// the cycles and, per block, over common divisors `k` of its cycle lengths.
pub fn char_pfb(n: usize, mu: &Partition) -> Result<GradedCharacter> {
    check_cycle_type(n, mu)?;
    let mut total: Vec<BigInt> = Vec::new();
    for blocks in set_partitions(mu.parts(), None) {
        let mut product = vec![BigInt::one()];
        for block in &blocks {
            product = poly_mul(&product, &pfb_block_factor(block));
        }
        poly_add_assign(&mut total, &product);
    }
    GradedCharacter::new(n, mu.clone(), total)
}

/// `Σ_k ε_k k^{|S|−1} z^{k(Σ d_τ − 1)}` for one block `S` of cycle lengths.
fn pfb_block_factor(lengths: &[usize]) -> Vec<BigInt> {
    let g = lengths.iter().fold(0usize, |acc, &l| acc.gcd(&l));
    let mut factor = Vec::new();
    for k in (1..=g).filter(|k| g % k == 0) {
        let d_sum: usize = lengths.iter().map(|l| l / k).sum();
        let excess: usize = lengths.iter().map(|l| l / k - 1).sum();
        let exponent = k * (d_sum - 1);
        let mut c = BigInt::from(k).pow((lengths.len() - 1) as u32);
        if ((k - 1) * (d_sum - 1) + excess) % 2 == 1 {
            c = -c;
        }
        if factor.len() <= exponent {
            factor.resize(exponent + 1, BigInt::zero());
        }
        factor[exponent] += c;
    }
    factor
}

/// Formula character for either algebra.
pub fn character(algebra: Algebra, n: usize, mu: &Partition) -> Result<GradedCharacter> {
    match algebra {
        Algebra::PvbDual => char_pvb(n, mu),
        Algebra::PfbDual => char_pfb(n, mu),
    }
}

fn check_cycle_type(n: usize, mu: &Partition) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: n,
        });
    }
    Ok(())
}

/// Frobenius characteristic of degree `k` as the sum over partitions `ā` of
/// `k` with at most `n − k` parts of `∏_t v_{t,a_t}[inner_{t+1}] · h_{n−k−l(ā)}`,
/// where `v` is `h` for even `t` and `e` for odd `t`, and the inner function
/// is `ch Reg_{t+1}` (`pvb!`) or `e_{t+1}` (`pfb!`).
pub fn characteristic(algebra: Algebra, n: usize, k: usize) -> Result<SymFunc> {
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!(
            "degree {k} outside 0..{n} for n = {n}"
        )));
    }
    let mut total = SymFunc::zero(n);
    for a in partitions(k, &PartitionConstraints::default().max_length(n - k)) {
        let mut term = SymFunc::homogeneous(n - k - a.len());
        for (t, a_t) in a.grouped() {
            let inner = match algebra {
                Algebra::PvbDual => SymFunc::ch_regular(t + 1),
                Algebra::PfbDual => SymFunc::elementary(t + 1),
            };
            let outer = if t % 2 == 0 {
                SymFunc::homogeneous(a_t)
            } else {
                SymFunc::elementary(a_t)
            };
            term = term.multiply(&outer.plethysm(&inner));
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

fn table_from_symfunc(n: usize, k: usize, f: &SymFunc) -> Result<DecompositionTable> {
    let d: Decomposition = f
        .to_schur()
        .into_iter()
        .map(|(lam, c)| (IrreducibleLabel::from_partition(lam), c))
        .collect();
    DecompositionTable::from_decomposition(n, k, &d)
}

/// Plethystic decomposition of `pvb!_n` in degree `k`.
pub fn decompose_pvb(n: usize, k: usize) -> Result<DecompositionTable> {
    table_from_symfunc(n, k, &characteristic(Algebra::PvbDual, n, k)?)
}

/// Plethystic decomposition of `pfb!_n` in degree `k`.
pub fn decompose_pfb(n: usize, k: usize) -> Result<DecompositionTable> {
    table_from_symfunc(n, k, &characteristic(Algebra::PfbDual, n, k)?)
}

/// Plethystic decomposition for either algebra.
pub fn decompose_formula(algebra: Algebra, n: usize, k: usize) -> Result<DecompositionTable> {
    match algebra {
        Algebra::PvbDual => decompose_pvb(n, k),
        Algebra::PfbDual => decompose_pfb(n, k),
    }
}

/// Rank of `H^k(vB_n)`: partitions of `k` into at most `n − k` parts with no
/// repeated odd part.
pub fn trivial_multiplicity_pvb(n: usize, k: usize) -> Result<usize> {
    if !(1..n).contains(&k) {
        return Err(Error::OutOfRange(format!("need n > k >= 1, got n = {n}, k = {k}")));
    }
    Ok(partitions(
        k,
        &PartitionConstraints::default()
            .max_length(n - k)
            .no_repeated_odd(),
    )
    .len())
}

/// The same count read off partitions of `n` into exactly `n − k` parts
/// with no repeated even part.
pub fn trivial_multiplicity_pvb_by_length(n: usize, k: usize) -> Result<usize> {
    if !(1..n).contains(&k) {
        return Err(Error::OutOfRange(format!("need n > k >= 1, got n = {n}, k = {k}")));
    }
    Ok(partitions(
        n,
        &PartitionConstraints::default()
            .exact_length(n - k)
            .no_repeated_even(),
    )
    .len())
}

/// Every Schur term of `e_k[e_2]` as predicted by the Frobenius-coordinate
/// rule: shapes `(γ_1−1, …, γ_r−1 | γ_1, …, γ_r)` over strict partitions `γ`
/// of `k`.
pub fn ek_e2_shapes(k: usize) -> Result<Vec<Partition>> {
    let strict = partitions(k, &PartitionConstraints::default())
        .into_iter()
        .filter(|g| g.parts().windows(2).all(|w| w[0] > w[1]));
    let mut out = strict
        .map(|g| {
            let arms: Vec<usize> = g.parts().iter().map(|&x| x - 1).collect();
            crate::symfunc::frobenius_partition(&arms, g.parts())
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Kind of irreducible constraint that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `|λ| = n − λ_0 < k`
    WeightBelowDegree,
    /// A two-row irreducible other than one `V(1)` in degree 1.
    TwoRow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub lambda: Partition,
    pub multiplicity: BigUint,
    pub n: usize,
    pub k: usize,
}

/// Result of [`constraint_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintReport {
    pub n: usize,
    pub k: usize,
    /// Two-row irreducibles present, with multiplicity.
    pub two_row: Vec<(Partition, BigUint)>,
    pub violations: Vec<Violation>,
}

impl ConstraintReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a `pfb!` table: every `λ` present has `|λ| ≥ k`, and no two-row
/// `λ` occurs except a single `V(1)` when `k = 1`.
pub fn constraint_checks(table: &DecompositionTable) -> ConstraintReport {
    let (n, k) = (table.n, table.degree);
    let mut two_row = Vec::new();
    let mut violations = Vec::new();
    for (label, m) in &table.entries {
        let lam = &label.lambda_bar;
        if label.weight() < k {
            violations.push(Violation {
                kind: ViolationKind::WeightBelowDegree,
                lambda: lam.clone(),
                multiplicity: m.clone(),
                n,
                k,
            });
        }
        if lam.len() == 2 {
            two_row.push((lam.clone(), m.clone()));
            let allowed = k == 1 && lam.parts()[1] == 1 && m.is_one();
            if !allowed {
                violations.push(Violation {
                    kind: ViolationKind::TwoRow,
                    lambda: lam.clone(),
                    multiplicity: m.clone(),
                    n,
                    k,
                });
            }
        }
    }
    ConstraintReport {
        n,
        k,
        two_row,
        violations,
    }
}

/// Per-label multiplicity trajectories over a range of `n` in a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub algebra: Algebra,
    pub k: usize,
    pub ns: Vec<usize>,
    /// Keyed by Church–Farb tail; `None` where `V(tail)_n` is undefined.
    pub trajectory: BTreeMap<Vec<usize>, BTreeMap<usize, Option<BigUint>>>,
    /// Smallest `n` in range from which every multiplicity is constant
    /// through the end of the range. Only a statement about the range.
    pub stable_from: Option<usize>,
    /// `4k`
    pub bound: usize,
    /// Whether the tables are constant from `max(4k, first n)` to the end.
    pub constant_from_bound: bool,
}

fn tail_defined(n: usize, tail: &[usize]) -> bool {
    let sum: usize = tail.iter().sum();
    n >= sum + tail.first().copied().unwrap_or(0)
}

/// Builds a stability report from per-`n` tables of one degree.
pub fn stability_from_tables(
    algebra: Algebra,
    k: usize,
    tables: &[DecompositionTable],
) -> StabilityReport {
    let ns: Vec<usize> = tables.iter().map(|t| t.n).collect();
    let by_tail: Vec<BTreeMap<Vec<usize>, BigUint>> =
        tables.iter().map(DecompositionTable::by_tail).collect();
    let mut tails: Vec<Vec<usize>> = by_tail.iter().flat_map(|m| m.keys().cloned()).collect();
    tails.sort_by(|a, b| {
        let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    tails.dedup();
    let mut trajectory = BTreeMap::new();
    for tail in &tails {
        let per_n = ns
            .iter()
            .zip(&by_tail)
            .map(|(&n, m)| {
                let v = tail_defined(n, tail)
                    .then(|| m.get(tail).cloned().unwrap_or_default());
                (n, v)
            })
            .collect();
        trajectory.insert(tail.clone(), per_n);
    }
    let stable_from = by_tail.last().map(|last| {
        let mut idx = by_tail.len() - 1;
        while idx > 0 && by_tail[idx - 1] == *last {
            idx -= 1;
        }
        ns[idx]
    });
    let bound = 4 * k;
    let constant_from_bound = match (stable_from, ns.last()) {
        (Some(s), Some(&last)) => s <= bound.max(ns[0]) || bound > last,
        _ => true,
    };
    StabilityReport {
        algebra,
        k,
        ns,
        trajectory,
        stable_from,
        bound,
        constant_from_bound,
    }
}

/// Stability report in degree `k` over `n_range` using plethystic tables.
pub fn stability_report(
    algebra: Algebra,
    k: usize,
    n_range: impl IntoIterator<Item = usize>,
) -> Result<StabilityReport> {
    let tables = n_range
        .into_iter()
        .map(|n| decompose_formula(algebra, n, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(stability_from_tables(algebra, k, &tables))
}

/// Multiplicity map as exact rationals, for comparison with oracle output.
pub fn table_as_rational(table: &DecompositionTable) -> BTreeMap<Partition, BigRational> {
    table
        .entries
        .iter()
        .map(|(l, m)| (l.lambda_bar.clone(), BigRational::from_integer(BigInt::from(m.clone()))))
        .collect()
}
