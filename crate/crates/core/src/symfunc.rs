//! Homogeneous symmetric functions with exact rational coefficients.
//!
//! Values are stored in the power-sum basis, where products and plethysm
//! are closed-form. The Schur basis is reached through the `S_n` character
//! table: `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{centralizer_order, partitions, Partition, PartitionConstraints};
use crate::error::{Error, Result};
use crate::snrep::{character_table, ClassFunction};

/// A homogeneous symmetric function of fixed degree, `Σ_μ c_μ p_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1 (degree 0).
    pub fn one() -> Self {
        Self::power_sum(Partition::empty())
    }

    /// `p_μ`
    pub fn power_sum(mu: Partition) -> Self {
        let degree = mu.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu, BigRational::one());
        Self { degree, coeffs }
    }

    /// Builds from power-sum coefficients, dropping zeros and checking
    /// homogeneity.
    pub fn from_power_sums(
        degree: usize,
        coeffs: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (mu, c) in coeffs {
            if mu.size() != degree {
                return Err(Error::SizeMismatch {
                    left: degree,
                    right: mu.size(),
                });
            }
            out.add_term(mu, c);
        }
        Ok(out)
    }

    /// Schur function `s_λ`.
    pub fn schur(lam: &Partition) -> Self {
        let n = lam.size();
        let table = character_table(n);
        let mut out = Self::zero(n);
        for (j, mu) in table.partitions().iter().enumerate() {
            let chi = table.value(lam, mu);
            if chi.is_zero() {
                continue;
            }
            let z = BigInt::from(table.centralizer_at(j).clone());
            out.add_term(mu.clone(), BigRational::new(chi.clone(), z));
        }
        out
    }

    /// `e_p = s_{(1^p)}`
    pub fn elementary(p: usize) -> Self {
        Self::schur(&Partition::ones(p))
    }

    /// `h_p = s_{(p)}`
    pub fn homogeneous(p: usize) -> Self {
        Self::schur(&Partition::row(p))
    }

    /// Characteristic of the regular representation of `S_m`: `p_1^m`.
    pub fn ch_regular(m: usize) -> Self {
        Self::power_sum(Partition::ones(m))
    }

    /// Frobenius characteristic `Σ_μ f(μ) p_μ / z_μ` of a class function.
    pub fn characteristic(f: &ClassFunction) -> Self {
        let mut out = Self::zero(f.n());
        for (mu, v) in f.values() {
            let z = rat(centralizer_order(mu));
            out.add_term(mu.clone(), v / z);
        }
        out
    }

    /// Inverse of [`SymFunc::characteristic`]: `f(μ) = z_μ c_μ`.
    pub fn to_class_function(&self) -> ClassFunction {
        let mut values = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            values.insert(mu.clone(), c * rat(centralizer_order(mu)));
        }
        ClassFunction::from_values(self.degree, values).expect("keys are homogeneous")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Power-sum coefficients (nonzero only).
    pub fn power_sum_coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    /// Coefficient of `p_μ`.
    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mu);
        match entry {
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

    /// Sum of two functions of the same degree.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        // A zero summand carries no real degree.
        let degree = if self.is_zero() {
            other.degree
        } else if other.is_zero() || self.degree == other.degree {
            self.degree
        } else {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        };
        let mut out = Self {
            degree,
            coeffs: self.coeffs.clone(),
        };
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &BigRational) -> SymFunc {
        let mut out = Self::zero(self.degree);
        for (mu, v) in &self.coeffs {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    /// Product; `p_μ · p_ν = p_{μ ∪ ν}`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let mut out = Self::zero(self.degree + other.degree);
        for (mu, a) in &self.coeffs {
            for (nu, b) in &other.coeffs {
                out.add_term(mu.union(nu), a * b);
            }
        }
        out
    }

    /// `p_m[self]`: every `p_i` replaced by `p_{im}`; coefficients are constants.
    fn adams(&self, m: usize) -> SymFunc {
        let mut out = Self::zero(self.degree * m);
        for (mu, c) in &self.coeffs {
            out.add_term(mu.scaled(m), c.clone());
        }
        out
    }

    /// Plethysm `self[g]`, extended multiplicatively from `p_m[g]` over the
    /// power-sum expansion of `self`. Degree is `deg(self) · deg(g)`.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        let degree = self.degree * g.degree;
        let mut out = Self::zero(degree);
        let mut adams_cache: BTreeMap<usize, SymFunc> = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            let mut term = Self::one();
            for &part in mu.parts() {
                let factor = adams_cache
                    .entry(part)
                    .or_insert_with(|| g.adams(part));
                term = term.multiply(factor);
            }
            for (nu, v) in term.coeffs {
                out.add_term(nu, v * c);
            }
        }
        out
    }

    /// Schur expansion `{λ: ⟨self, s_λ⟩}`, nonzero coefficients only.
    pub fn to_schur(&self) -> BTreeMap<Partition, BigRational> {
        let table = character_table(self.degree);
        let mut out = BTreeMap::new();
        for lam in table.partitions() {
            let c: BigRational = self
                .coeffs
                .iter()
                .map(|(mu, a)| a * rat(table.value(lam, mu).clone()))
                .sum();
            if !c.is_zero() {
                out.insert(lam.clone(), c);
            }
        }
        out
    }

    /// Inverse of [`SymFunc::to_schur`] for a given degree.
    pub fn from_schur(
        degree: usize,
        expansion: &BTreeMap<Partition, BigRational>,
    ) -> Result<SymFunc> {
        let mut out = Self::zero(degree);
        for (lam, c) in expansion {
            if lam.size() != degree {
                return Err(Error::SizeMismatch {
                    left: degree,
                    right: lam.size(),
                });
            }
            out = out.add(&Self::schur(lam).scaled(c))?;
        }
        Ok(out)
    }
}

/// Every partition of `n` (for building random or exhaustive test inputs).
pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions(n, &PartitionConstraints::default())
}

/// The partition with Frobenius coordinates `(arms | legs)`: the diagonal
/// box `(i, i)` has `arms[i]` boxes to its right and `legs[i]` below.
pub fn frobenius_partition(arms: &[usize], legs: &[usize]) -> Result<Partition> {
    if arms.len() != legs.len() {
        return Err(Error::SizeMismatch {
            left: arms.len(),
            right: legs.len(),
        });
    }
    let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
    if !strict(arms) || !strict(legs) {
        return Err(Error::InvalidPartition(format!(
            "Frobenius coordinates must strictly decrease: ({arms:?} | {legs:?})"
        )));
    }
    let r = arms.len();
    // Row i (< r) has length arms[i] + i + 1; rows below the Durfee square
    // are read off the conjugate, whose column j has length legs[j] + j + 1.
    let cols: Vec<usize> = (0..r).map(|j| legs[j] + j + 1).collect();
    let height = cols.first().copied().unwrap_or(0);
    let mut parts: Vec<usize> = (0..r).map(|i| arms[i] + i + 1).collect();
    for row in r..height {
        parts.push(cols.iter().filter(|&&c| c > row).count());
    }
    Partition::new(parts)
}
