//! Truncated power series and the Koszul formula `A_σ(z) · A!_σ(−z) = 1`,
//! which recovers the graded characters of `pvb_n` / `pfb_n` from those of
//! their quadratic duals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::formulas::{self, GradedCharacter};
use crate::oracle::Algebra;

/// Default truncation order for dual-side series.
pub const DEFAULT_TRUNCATION: usize = 12;

/// `Σ_{k ≤ trunc} c_k z^k`, exact rational coefficients, length `trunc + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to `trunc + 1` terms.
    pub fn new(mut coeffs: Vec<BigRational>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[BigInt], trunc: usize) -> Self {
        Self::new(
            coeffs.iter().cloned().map(BigRational::from_integer).collect(),
            trunc,
        )
    }

    pub fn one(trunc: usize) -> Self {
        Self::new(vec![BigRational::one()], trunc)
    }

    pub fn from_character(c: &GradedCharacter, trunc: usize) -> Self {
        Self::from_integers(c.coeffs(), trunc)
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Product truncated at the smaller of the two truncation orders.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.truncation().min(other.truncation());
        let mut out = vec![BigRational::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(trunc + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse modulo `z^{trunc+1}`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let s: BigRational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out.push(-(s * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `f(z) ↦ f(−z)`
    pub fn negate_z(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// First degree at which `self` differs from the constant series 1,
    /// with the offending coefficient.
    pub fn first_residual(&self) -> Option<(usize, BigRational)> {
        self.coeffs.iter().enumerate().find_map(|(k, c)| {
            let expected = if k == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            (*c != expected).then(|| (k, c - expected))
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{} + O(z^{})", parts.join(", "), self.coeffs.len())
    }
}

/// `1 / A!_{n,μ}(−z)`, the graded character of the Koszul dual at class `μ`.
pub fn dual_character(
    algebra: Algebra,
    n: usize,
    mu: &Partition,
    trunc: usize,
) -> Result<TruncatedSeries> {
    let shriek = formulas::character(algebra, n, mu)?;
    TruncatedSeries::from_character(&shriek, trunc)
        .negate_z()
        .invert()
}

/// Outcome of [`verify_identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulCheck {
    pub holds: bool,
    /// First nonzero coefficient of `A(z)·A!(−z) − 1`, if any.
    pub residual: Option<(usize, BigRational)>,
    pub series: TruncatedSeries,
}

/// Checks `A_σ(z) · A!_σ(−z) = 1 + O(z^{trunc+1})` exactly.
pub fn verify_identity(
    algebra: Algebra,
    n: usize,
    mu: &Partition,
    trunc: usize,
) -> Result<KoszulCheck> {
    let series = dual_character(algebra, n, mu, trunc)?;
    let shriek = TruncatedSeries::from_character(&formulas::character(algebra, n, mu)?, trunc);
    let residual = series.mul(&shriek.negate_z()).first_residual();
    Ok(KoszulCheck {
        holds: residual.is_none(),
        residual,
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn inversion_examples() {
        let s = TruncatedSeries::from_integers(&ints(&[1, -2]), 6);
        assert_eq!(
            s.invert().unwrap().to_integers().unwrap(),
            ints(&[1, 2, 4, 8, 16, 32, 64])
        );
        let s = TruncatedSeries::from_integers(&ints(&[1, -1]), 4);
        assert_eq!(s.invert().unwrap().to_integers().unwrap(), ints(&[1; 5]));
        assert_eq!(TruncatedSeries::one(0).invert().unwrap(), TruncatedSeries::one(0));
        let z = TruncatedSeries::from_integers(&ints(&[0, 1]), 3);
        assert_eq!(z.invert(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn non_unit_constant_term() {
        let s = TruncatedSeries::from_integers(&ints(&[2, 1]), 5);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv).first_residual(), None);
        assert_eq!(inv.invert().unwrap(), s);
    }

    #[test]
    fn dual_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let s = dual_character(Algebra::PvbDual, 2, &p("1,1"), 6).unwrap();
        assert_eq!(s.to_integers().unwrap(), ints(&[1, 2, 4, 8, 16, 32, 64]));
        let s = dual_character(Algebra::PvbDual, 2, &p("2"), 6).unwrap();
        assert_eq!(s.to_integers().unwrap(), ints(&[1, 0, 0, 0, 0, 0, 0]));
        let s = dual_character(Algebra::PfbDual, 2, &p("1,1"), 6).unwrap();
        assert_eq!(s.to_integers().unwrap(), ints(&[1; 7]));
        let s = dual_character(Algebra::PfbDual, 3, &p("1,1,1"), 5).unwrap();
        // 1/(1 − 3z + z²): c_k = 3c_{k−1} − c_{k−2}
        assert_eq!(s.to_integers().unwrap(), ints(&[1, 3, 8, 21, 55, 144]));
    }

    #[test]
    fn identity_holds() {
        for mu in crate::symfunc::all_partitions(4) {
            assert!(verify_identity(Algebra::PvbDual, 4, &mu, 12).unwrap().holds);
        }
    }
}
