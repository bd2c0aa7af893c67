//! Brute-force ground truth.
//!
//! Enumerates the monomial bases of `pvb!_n` and `pfb!_n` degree by degree,
//! applies permutations to basis monomials with the exterior-algebra sign
//! rules, and traces the action to obtain exact graded characters.
//!
//! A `pvb!` basis monomial is a family of oriented chains
//! `r_{i1 i2} ∧ r_{i2 i3} ∧ …` on disjoint supports, multiplied in order of
//! increasing roots `i1`. A `pfb!` basis monomial is the same with every
//! chain increasing, so it is determined by a set partition of `[n]`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinatorics::{partitions, set_partitions, Partition, PartitionConstraints, Permutation};
use crate::error::{Error, Result};
use crate::formulas::{DecompositionTable, GradedCharacter};
use crate::snrep::{decompose, ClassFunction, Decomposition};

/// Which quadratic dual algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    /// `pvb!_n ≅ H*(PvB_n, Q)`
    PvbDual,
    /// `pfb!_n ≅ H*(PfB_n, Q)`
    PfbDual,
}

impl Algebra {
    pub const ALL: [Algebra; 2] = [Algebra::PvbDual, Algebra::PfbDual];

    pub fn as_str(self) -> &'static str {
        match self {
            Algebra::PvbDual => "pvb-dual",
            Algebra::PfbDual => "pfb-dual",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "pvb-dual" | "pvb!" | "pvb" => Ok(Algebra::PvbDual),
            "pfb-dual" | "pfb!" | "pfb" => Ok(Algebra::PfbDual),
            other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
        }
    }
}

/// Position of a basis element in its canonical enumeration, with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedIndex {
    pub index: usize,
    pub sign: i8,
}

/// Per-`(n, degree)` memo of enumerated bases.
pub type BasisCache<M> = RwLock<HashMap<(usize, usize), Arc<Basis<M>>>>;

/// Behaviour shared by the two kinds of basis monomial.
pub trait BasisMonomial: Clone + Eq + Hash + Send + Sync + fmt::Display + 'static {
    /// All basis monomials of `degree` on `{1, …, n}`, in canonical order.
    fn enumerate(n: usize, degree: usize) -> Vec<Self>;

    /// Blocks of size at least 2, 0-based labels, in storage order.
    fn blocks(&self) -> &[Vec<u8>];

    /// `σ · self = sign · result`.
    fn act(&self, sigma: &Permutation) -> (Self, i8);

    fn degree(&self) -> usize {
        self.blocks().iter().map(|b| b.len() - 1).sum()
    }

    #[doc(hidden)]
    fn cache() -> &'static BasisCache<Self>;
}

/// Sorts blocks by their key (first entry), returning the Koszul sign of the
/// reordering: `(−1)^{d_i d_j}` for every inverted pair, `d = len − 1`.
fn reorder_blocks(blocks: &mut [Vec<u8>]) -> i8 {
    let mut odd_inversions = 0usize;
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if blocks[i][0] > blocks[j][0] {
                let di = blocks[i].len() - 1;
                let dj = blocks[j].len() - 1;
                odd_inversions += di * dj;
            }
        }
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    if odd_inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn relabel(block: &[u8], sigma: &Permutation) -> Vec<u8> {
    block
        .iter()
        .map(|&i| sigma.apply(i as usize) as u8)
        .collect()
}

fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Vec<u8>], sep: &str) -> fmt::Result {
    if blocks.is_empty() {
        return f.write_str("1");
    }
    for b in blocks {
        let body = b.iter().map(|i| (i + 1).to_string()).join(sep);
        write!(f, "({body})")?;
    }
    Ok(())
}

fn check_degree(n: usize, degree: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if degree >= n {
        return Err(Error::OutOfRange(format!(
            "degree {degree} outside 0..={}",
            n - 1
        )));
    }
    Ok(())
}

/// A `pvb!_n` basis monomial: disjoint oriented chains ordered by root.
///
/// Singleton chains are the scalar 1 and are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainFamily {
    blocks: Vec<Vec<u8>>,
}

impl ChainFamily {
    /// Builds from 1-based chains in any order; the sign relating the given
    /// product order to the canonical (root-sorted) one is returned too.
    pub fn from_chains(n: usize, chains: &[Vec<usize>]) -> Result<(Self, i8)> {
        let mut blocks = validate_blocks(n, chains)?;
        let sign = reorder_blocks(&mut blocks);
        Ok((Self { blocks }, sign))
    }
}

impl fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks, ",")
    }
}

impl BasisMonomial for ChainFamily {
    fn enumerate(n: usize, degree: usize) -> Vec<Self> {
        let items: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::new();
        for partition in set_partitions(&items, Some(n - degree)) {
            let big: Vec<Vec<u8>> = partition.into_iter().filter(|b| b.len() > 1).collect();
            let orderings: Vec<Vec<Vec<u8>>> = big
                .iter()
                .map(|b| b.iter().copied().permutations(b.len()).collect())
                .collect();
            if orderings.is_empty() {
                out.push(Self { blocks: Vec::new() });
                continue;
            }
            for choice in orderings.into_iter().multi_cartesian_product() {
                let mut blocks = choice;
                blocks.sort_unstable_by_key(|b| b[0]);
                out.push(Self { blocks });
            }
        }
        out
    }

    fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    fn act(&self, sigma: &Permutation) -> (Self, i8) {
        let mut blocks: Vec<Vec<u8>> = self.blocks.iter().map(|b| relabel(b, sigma)).collect();
        let sign = reorder_blocks(&mut blocks);
        (Self { blocks }, sign)
    }

    fn cache() -> &'static BasisCache<Self> {
        static CACHE: OnceLock<BasisCache<ChainFamily>> =
            OnceLock::new();
        CACHE.get_or_init(Default::default)
    }
}

/// A `pfb!_n` basis monomial: disjoint increasing chains ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatBasisElement {
    blocks: Vec<Vec<u8>>,
}

impl FlatBasisElement {
    /// Builds from 1-based supports; each becomes the increasing chain on it.
    pub fn from_supports(n: usize, supports: &[Vec<usize>]) -> Result<Self> {
        let mut blocks = validate_blocks(n, supports)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { blocks })
    }
}

impl fmt::Display for FlatBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks, "<")
    }
}

/// Sorts `block` ascending and returns the sign of the sorting permutation.
fn sort_with_sign(block: &mut [u8]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..block.len() {
        for j in i + 1..block.len() {
            if block[i] > block[j] {
                inversions += 1;
            }
        }
    }
    block.sort_unstable();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl BasisMonomial for FlatBasisElement {
    fn enumerate(n: usize, degree: usize) -> Vec<Self> {
        let items: Vec<u8> = (0..n as u8).collect();
        set_partitions(&items, Some(n - degree))
            .map(|partition| Self {
                blocks: partition.into_iter().filter(|b| b.len() > 1).collect(),
            })
            .collect()
    }

    fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    fn act(&self, sigma: &Permutation) -> (Self, i8) {
        let mut sign = 1i8;
        let mut blocks: Vec<Vec<u8>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut image = relabel(b, sigma);
                sign *= sort_with_sign(&mut image);
                image
            })
            .collect();
        sign *= reorder_blocks(&mut blocks);
        (Self { blocks }, sign)
    }

    fn cache() -> &'static BasisCache<Self> {
        static CACHE: OnceLock<BasisCache<FlatBasisElement>> =
            OnceLock::new();
        CACHE.get_or_init(Default::default)
    }
}

fn validate_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Vec<Vec<u8>>> {
    if n > u8::MAX as usize {
        return Err(Error::OutOfRange(format!("n = {n} too large for the oracle")));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for b in blocks {
        for &i in b {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::OutOfRange(format!(
                    "block {b:?} is not disjoint inside 1..={n}"
                )));
            }
            seen[i - 1] = true;
        }
        if b.len() > 1 {
            out.push(b.iter().map(|&i| (i - 1) as u8).collect());
        }
    }
    Ok(out)
}

/// The degree-`d` basis of one algebra on `{1, …, n}`.
#[derive(Debug)]
pub struct Basis<M> {
    n: usize,
    degree: usize,
    elements: Vec<M>,
    index: OnceLock<HashMap<M, usize>>,
}

impl<M: BasisMonomial> Basis<M> {
    /// Enumerates (or fetches from the process-wide cache) the basis.
    pub fn get(n: usize, degree: usize) -> Result<Arc<Self>> {
        check_degree(n, degree)?;
        if let Some(b) = M::cache().read().expect("cache poisoned").get(&(n, degree)) {
            return Ok(Arc::clone(b));
        }
        let basis = Arc::new(Self {
            n,
            degree,
            elements: M::enumerate(n, degree),
            index: OnceLock::new(),
        });
        let mut guard = M::cache().write().expect("cache poisoned");
        Ok(Arc::clone(guard.entry((n, degree)).or_insert(basis)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[M] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &M) -> Option<usize> {
        self.index
            .get_or_init(|| {
                self.elements
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), i))
                    .collect()
            })
            .get(m)
            .copied()
    }

    /// `σ · b_index = sign · b_result`.
    pub fn act(&self, sigma: &Permutation, index: usize) -> Result<SignedIndex> {
        if sigma.degree() != self.n {
            return Err(Error::SizeMismatch {
                left: sigma.degree(),
                right: self.n,
            });
        }
        let b = self.elements.get(index).ok_or_else(|| {
            Error::OutOfRange(format!("basis index {index} of {}", self.len()))
        })?;
        let (image, sign) = b.act(sigma);
        let index = self
            .index_of(&image)
            .expect("the action preserves the basis up to sign");
        Ok(SignedIndex { index, sign })
    }

    /// Trace of `σ` on this graded piece.
    pub fn trace(&self, sigma: &Permutation) -> BigInt {
        let total: i64 = self
            .elements
            .par_iter()
            .map(|b| {
                let (image, sign) = b.act(sigma);
                if image == *b {
                    sign as i64
                } else {
                    0
                }
            })
            .sum();
        BigInt::from(total)
    }
}

/// Basis elements of `algebra` in the given degree, rendered in the debug
/// dump format: pvb chains as `(2,1,4)`, pfb chains as `(1<2<4)`.
pub fn basis_strings(algebra: Algebra, n: usize, degree: usize) -> Result<Vec<String>> {
    Ok(match algebra {
        Algebra::PvbDual => Basis::<ChainFamily>::get(n, degree)?
            .elements()
            .iter()
            .map(ToString::to_string)
            .collect(),
        Algebra::PfbDual => Basis::<FlatBasisElement>::get(n, degree)?
            .elements()
            .iter()
            .map(ToString::to_string)
            .collect(),
    })
}

/// Number of basis elements of `algebra` in the given degree.
pub fn basis_len(algebra: Algebra, n: usize, degree: usize) -> Result<usize> {
    Ok(match algebra {
        Algebra::PvbDual => Basis::<ChainFamily>::get(n, degree)?.len(),
        Algebra::PfbDual => Basis::<FlatBasisElement>::get(n, degree)?.len(),
    })
}

/// Trace of `σ` on the degree-`degree` component.
pub fn degree_trace(algebra: Algebra, sigma: &Permutation, degree: usize) -> Result<BigInt> {
    let n = sigma.degree();
    Ok(match algebra {
        Algebra::PvbDual => Basis::<ChainFamily>::get(n, degree)?.trace(sigma),
        Algebra::PfbDual => Basis::<FlatBasisElement>::get(n, degree)?.trace(sigma),
    })
}

/// Graded character at the canonical permutation of cycle type `μ`.
pub fn graded_character(algebra: Algebra, n: usize, mu: &Partition) -> Result<GradedCharacter> {
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: n,
        });
    }
    let sigma = Permutation::canonical(mu);
    let coeffs = (0..n)
        .map(|d| degree_trace(algebra, &sigma, d))
        .collect::<Result<Vec<_>>>()?;
    GradedCharacter::new(n, mu.clone(), coeffs)
}

/// Character of the degree-`degree` component as a class function.
pub fn class_function(algebra: Algebra, n: usize, degree: usize) -> Result<ClassFunction> {
    check_degree(n, degree)?;
    let classes = partitions(n, &PartitionConstraints::default());
    let values = classes
        .into_par_iter()
        .map(|mu| {
            let t = degree_trace(algebra, &Permutation::canonical(&mu), degree)?;
            Ok((mu, t))
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::from_integers(n, values)
}

/// Irreducible decomposition of the degree-`degree` component.
pub fn decomposition(algebra: Algebra, n: usize, degree: usize) -> Result<DecompositionTable> {
    let f = class_function(algebra, n, degree)?;
    DecompositionTable::from_decomposition(n, degree, &decompose(&f))
}

/// Decomposition of the top degree `n − 1`.
pub fn top_degree_report(algebra: Algebra, n: usize) -> Result<Decomposition> {
    if n < 2 {
        return Err(Error::OutOfRange("top-degree report needs n >= 2".into()));
    }
    Ok(decompose(&class_function(algebra, n, n - 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn basis_counts() {
        assert_eq!(basis_len(Algebra::PvbDual, 4, 1).unwrap(), 12);
        assert_eq!(basis_len(Algebra::PfbDual, 4, 2).unwrap(), 7);
        assert!(basis_len(Algebra::PvbDual, 4, 4).is_err());
        assert!(basis_len(Algebra::PfbDual, 0, 0).is_err());
    }

    #[test]
    fn pvb_elements_on_a_fixed_partition() {
        let basis = Basis::<ChainFamily>::get(4, 2).unwrap();
        let mut got: Vec<String> = basis
            .elements()
            .iter()
            .filter(|m| {
                let mut supports: Vec<Vec<u8>> = m
                    .blocks()
                    .iter()
                    .map(|b| b.iter().copied().sorted().collect())
                    .collect();
                supports.sort();
                supports == vec![vec![0, 1], vec![2, 3]]
            })
            .map(ToString::to_string)
            .collect();
        got.sort();
        assert_eq!(got, ["(1,2)(3,4)", "(1,2)(4,3)", "(2,1)(3,4)", "(2,1)(4,3)"]);
    }

    #[test]
    fn flat_transposition_negates_edge() {
        let b = FlatBasisElement::from_supports(2, &[vec![1, 2]]).unwrap();
        let (image, sign) = b.act(&perm("(1 2)", 2));
        assert_eq!(image, b);
        assert_eq!(sign, -1);
    }

    #[test]
    fn chain_transposition_reverses_edge() {
        let (b, s) = ChainFamily::from_chains(2, &[vec![1, 2]]).unwrap();
        assert_eq!(s, 1);
        let (image, sign) = b.act(&perm("(1 2)", 2));
        assert_eq!(image.to_string(), "(2,1)");
        assert_eq!(sign, 1);
    }

    #[test]
    fn flat_double_transposition_swaps_factors() {
        let b = FlatBasisElement::from_supports(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        let (image, sign) = b.act(&perm("(1 2)(3 4)", 4));
        assert_eq!(image, b);
        assert_eq!(sign, -1);
    }

    #[test]
    fn small_characters() {
        let pv = graded_character(Algebra::PvbDual, 2, &"2".parse().unwrap()).unwrap();
        assert_eq!(pv.coeffs(), &[BigInt::from(1), BigInt::from(0)]);
        let pf = graded_character(Algebra::PfbDual, 2, &"2".parse().unwrap()).unwrap();
        assert_eq!(pf.coeffs(), &[BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn dump_format() {
        assert_eq!(basis_strings(Algebra::PfbDual, 3, 2).unwrap(), ["(1<2<3)"]);
        assert_eq!(basis_strings(Algebra::PvbDual, 2, 0).unwrap(), ["1"]);
    }

    #[test]
    fn act_returns_signed_index() {
        let basis = Basis::<FlatBasisElement>::get(3, 1).unwrap();
        let sigma = perm("(1 2 3)", 3);
        for i in 0..basis.len() {
            let s = basis.act(&sigma, i).unwrap();
            assert!(s.index < basis.len());
            assert!(s.sign == 1 || s.sign == -1);
        }
        assert!(basis.act(&Permutation::identity(4), 0).is_err());
    }

    #[test]
    fn top_degree_pvb_is_regular() {
        let d = top_degree_report(Algebra::PvbDual, 3).unwrap();
        let got: Vec<(String, BigRational)> = d
            .into_iter()
            .map(|(l, m)| (l.lambda_bar.to_string(), m))
            .collect();
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        assert_eq!(
            got,
            vec![
                ("3".into(), one.clone()),
                ("2,1".into(), two),
                ("1,1,1".into(), one)
            ]
        );
    }
}
