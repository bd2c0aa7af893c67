//! Exact graded `S_n`-characters, Hilbert series and irreducible
//! decompositions for the cohomology algebras of the pure virtual and pure
//! flat braid groups and for their Koszul duals.
//!
//! Every closed formula in [`formulas`] has an independent brute-force
//! counterpart in [`oracle`], which enumerates explicit monomial bases and
//! traces the signed permutation action on them.

pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod koszul;
pub mod oracle;
pub mod report;
pub mod snrep;
pub mod suites;
pub mod symfunc;

pub use combinatorics::{Partition, PartitionConstraints, Permutation};
pub use error::{Error, Result};
pub use formulas::{DecompositionTable, GradedCharacter};
pub use koszul::TruncatedSeries;
pub use oracle::Algebra;
pub use snrep::{ClassFunction, IrreducibleLabel};
pub use symfunc::SymFunc;
