//! Verification suites: every cross-check between the closed formulas and
//! the brute-force oracle, grouped the way `braidchar verify --suite` exposes
//! them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::combinatorics::{lah_row, partitions, stirling2_row, Partition, PartitionConstraints};
use crate::error::{Error, Result};
use crate::formulas::{self, DecompositionTable};
use crate::koszul::{self, TruncatedSeries};
use crate::oracle::{self, Algebra};
use crate::snrep::{self, IrreducibleLabel};
use crate::symfunc::{all_partitions, SymFunc};

/// Largest `n` for which the oracle is run by default.
pub fn oracle_bound(algebra: Algebra) -> usize {
    match algebra {
        Algebra::PvbDual => 6,
        Algebra::PfbDual => 7,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Characters,
    Decompositions,
    Koszul,
    Multiplicities,
    Stability,
    Constraints,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Characters,
        Suite::Decompositions,
        Suite::Koszul,
        Suite::Multiplicities,
        Suite::Stability,
        Suite::Constraints,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Characters => "characters",
            Suite::Decompositions => "decompositions",
            Suite::Koszul => "koszul",
            Suite::Multiplicities => "multiplicities",
            Suite::Stability => "stability",
            Suite::Constraints => "constraints",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Summary on success; counterexample data on failure.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>, ok_detail: impl Into<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            ok_detail.into()
        } else {
            let shown: Vec<String> = failures.iter().take(5).cloned().collect();
            let more = failures.len().saturating_sub(5);
            let mut d = shown.join("; ");
            if more > 0 {
                d.push_str(&format!("; … {more} more"));
            }
            d
        };
        Self {
            name: name.into(),
            passed,
            detail,
        }
    }

    fn from_result(name: impl Into<String>, r: Result<Check>) -> Self {
        let name = name.into();
        r.unwrap_or_else(|e| Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        })
    }
}

/// Parameters shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Caps `n` for sweeps; `None` uses each suite's default range.
    pub n_max: Option<usize>,
    /// Single `n` for the Koszul suite; `None` sweeps `1..=5`.
    pub n: Option<usize>,
    pub trunc: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_max: None,
            n: None,
            trunc: koszul::DEFAULT_TRUNCATION,
        }
    }
}

impl SuiteConfig {
    fn cap(&self, default: usize) -> usize {
        self.n_max.map_or(default, |m| m.min(default))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs `suite` (every suite for [`Suite::All`]).
pub fn run(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let checks = match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| run(s, cfg).checks)
            .collect(),
        Suite::Characters => characters(cfg),
        Suite::Decompositions => decompositions(cfg),
        Suite::Koszul => koszul_suite(cfg),
        Suite::Multiplicities => multiplicities(cfg),
        Suite::Stability => stability(cfg),
        Suite::Constraints => constraints(cfg),
    };
    SuiteReport { suite, checks }
}

/// Formula character == oracle character for every class, one check per
/// `(algebra, n)`; plus identity-class characters against Lah/Stirling rows.
pub fn characters(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for algebra in Algebra::ALL {
        for n in 1..=cfg.cap(oracle_bound(algebra)) {
            let name = format!("{algebra} characters n={n}: formula == oracle");
            out.push(Check::from_result(name.clone(), character_agreement(algebra, n, &name)));
        }
    }
    for algebra in Algebra::ALL {
        let n_max = cfg.cap(8);
        let name = format!("{algebra} character at identity == Hilbert series, n=1..{n_max}");
        let check = (|| -> Result<Check> {
            let mut failures = Vec::new();
            for n in 1..=n_max {
                let row = match algebra {
                    Algebra::PvbDual => lah_row(n),
                    Algebra::PfbDual => stirling2_row(n),
                };
                let expected: Vec<BigInt> =
                    (0..n).map(|k| BigInt::from(row[n - k].clone())).collect();
                let got = formulas::character(algebra, n, &Partition::ones(n))?;
                if got.coeffs() != expected.as_slice() {
                    failures.push(format!("n={n}: {:?} != {:?}", got.coeffs(), expected));
                }
            }
            Ok(Check::new(&name, failures, "all match"))
        })();
        out.push(Check::from_result(name, check));
    }
    out
}

fn character_agreement(algebra: Algebra, n: usize, name: &str) -> Result<Check> {
    let classes = all_partitions(n);
    let failures: Vec<String> = classes
        .par_iter()
        .map(|mu| -> Result<Option<String>> {
            let f = formulas::character(algebra, n, mu)?;
            let o = oracle::graded_character(algebra, n, mu)?;
            Ok((f != o).then(|| {
                format!(
                    "mu={mu}: formula {:?} oracle {:?}",
                    f.coeffs(),
                    o.coeffs()
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        name,
        failures,
        format!("{} classes × {} degrees", classes.len(), n),
    ))
}

fn table_diff(a: &DecompositionTable, b: &DecompositionTable) -> Option<String> {
    (a != b).then(|| format!("formula {} vs oracle {}", a.cf_summary(), b.cf_summary()))
}

/// Plethystic tables == oracle decompositions, table dimensions == Hilbert
/// coefficients, and the paper's printed low-degree tables.
pub fn decompositions(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let n_max = cfg.cap(6);
    for algebra in Algebra::ALL {
        let name = format!("{algebra} plethystic tables == oracle decompositions, n=1..{n_max}");
        let check = (|| -> Result<Check> {
            let cases: Vec<(usize, usize)> =
                (1..=n_max).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
            let failures: Vec<String> = cases
                .par_iter()
                .map(|&(n, k)| -> Result<Option<String>> {
                    let f = formulas::decompose_formula(algebra, n, k)?;
                    let o = oracle::decomposition(algebra, n, k)?;
                    Ok(table_diff(&f, &o).map(|d| format!("n={n} k={k}: {d}")))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            Ok(Check::new(&name, failures, format!("{} tables", cases.len())))
        })();
        out.push(Check::from_result(name, check));
    }
    let dim_max = cfg.cap(7);
    for algebra in Algebra::ALL {
        let name = format!("{algebra} table dimensions == Hilbert series, n=1..{dim_max}");
        let check = (|| -> Result<Check> {
            let mut failures = Vec::new();
            for n in 1..=dim_max {
                let h = formulas::hilbert(algebra, n)?;
                for k in 0..n {
                    let d = formulas::decompose_formula(algebra, n, k)?.dimension();
                    if d != h.coeff(k) {
                        failures.push(format!("n={n} k={k}: {d} != {}", h.coeff(k)));
                    }
                }
            }
            Ok(Check::new(&name, failures, "all match"))
        })();
        out.push(Check::from_result(name, check));
    }
    let printed: [(Algebra, usize, usize, &str); 6] = [
        (Algebra::PvbDual, 3, 1, "V(0)+2V(1)+V(1,1)"),
        (Algebra::PvbDual, 4, 1, "V(0)+2V(1)+V(2)+V(1,1)"),
        (Algebra::PvbDual, 6, 1, "V(0)+2V(1)+V(2)+V(1,1)"),
        (Algebra::PfbDual, 2, 1, "V(1)"),
        (Algebra::PfbDual, 3, 1, "V(1)+V(1,1)"),
        (Algebra::PfbDual, 6, 1, "V(1)+V(1,1)"),
    ];
    for (algebra, n, k, expected) in printed {
        if n > cfg.cap(n) {
            continue;
        }
        let name = format!("{algebra} n={n} k={k} printed table {expected}");
        let check = formulas::decompose_formula(algebra, n, k).map(|t| {
            let got = t.cf_summary();
            let fails = if got == expected {
                vec![]
            } else {
                vec![format!("got {got}")]
            };
            Check::new(&name, fails, "matches")
        });
        out.push(Check::from_result(name, check));
    }
    let top_max = cfg.cap(6);
    for algebra in Algebra::ALL {
        let name = format!("{algebra} top degree regular/alternating, n=2..{top_max}");
        let check = (|| -> Result<Check> {
            let mut failures = Vec::new();
            for n in 2..=top_max {
                let d = oracle::top_degree_report(algebra, n)?;
                let expected: snrep::Decomposition = match algebra {
                    Algebra::PvbDual => {
                        let table = snrep::character_table(n);
                        all_partitions(n)
                            .into_iter()
                            .map(|l| {
                                let dim = BigRational::from_integer(table.dimension(&l));
                                (IrreducibleLabel::from_partition(l), dim)
                            })
                            .collect()
                    }
                    Algebra::PfbDual => [(
                        IrreducibleLabel::from_partition(Partition::ones(n)),
                        BigRational::one(),
                    )]
                    .into_iter()
                    .collect(),
                };
                if d != expected {
                    failures.push(format!("n={n}: {d:?}"));
                }
            }
            Ok(Check::new(&name, failures, "all match"))
        })();
        out.push(Check::from_result(name, check));
    }
    out
}

/// `A(z)·A!(−z) = 1` for every class, plus the degenerate `n = 2` series
/// and integrality/positivity at the identity.
pub fn koszul_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let ns: Vec<usize> = match cfg.n {
        Some(n) => vec![n],
        None => (1..=cfg.cap(5)).collect(),
    };
    let trunc = cfg.trunc;
    let mut out = Vec::new();
    for algebra in Algebra::ALL {
        for &n in &ns {
            let name = format!("{algebra} n={n}: A(z)·A!(-z) = 1 + O(z^{})", trunc + 1);
            let check = (|| -> Result<Check> {
                let mut failures = Vec::new();
                let classes = all_partitions(n);
                for mu in &classes {
                    let r = koszul::verify_identity(algebra, n, mu, trunc)?;
                    if let Some((k, c)) = r.residual {
                        failures.push(format!("mu={mu}: residual {c} at z^{k}"));
                    }
                }
                let id = koszul::dual_character(algebra, n, &Partition::ones(n), trunc)?;
                match id.to_integers() {
                    Some(v) if v.iter().all(|c| !c.is_negative()) => {}
                    _ => failures.push(format!("identity series not a dimension series: {id}")),
                }
                for mu in &classes {
                    let s = koszul::dual_character(algebra, n, mu, trunc)?;
                    for k in 0..=trunc {
                        if s.coeff(k).abs() > id.coeff(k) {
                            failures.push(format!("mu={mu}: |c_{k}| exceeds dimension"));
                        }
                    }
                }
                Ok(Check::new(&name, failures, format!("{} classes", classes.len())))
            })();
            out.push(Check::from_result(name, check));
        }
    }
    let degenerate = [
        (Algebra::PvbDual, "pvb_2 at identity is 2^k", 2u32),
        (Algebra::PfbDual, "pfb_2 at identity is all-ones", 1u32),
    ];
    for (algebra, label, base) in degenerate {
        let check = koszul::dual_character(algebra, 2, &Partition::ones(2), trunc).map(|s| {
            let expected = TruncatedSeries::from_integers(
                &(0..=trunc)
                    .map(|k| BigInt::from(base).pow(k as u32))
                    .collect::<Vec<_>>(),
                trunc,
            );
            let fails = if s == expected {
                vec![]
            } else {
                vec![format!("got {s}")]
            };
            Check::new(label, fails, format!("{} terms", trunc + 1))
        });
        out.push(Check::from_result(label, check));
    }
    out
}

/// Partitions of `k` with no repeated odd part, `k = 0..=k_max`, read off
/// `∏ (1 + z^{2i−1}) / (1 − z^{2i})` by series multiplication.
pub fn no_repeated_odd_series(k_max: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); k_max + 1];
    s[0] = BigInt::one();
    let mut part = 1;
    while part <= k_max {
        if part % 2 == 1 {
            // × (1 + z^part)
            for i in (part..=k_max).rev() {
                let v = s[i - part].clone();
                s[i] += v;
            }
        } else {
            // × 1/(1 − z^part)
            for i in part..=k_max {
                let v = s[i - part].clone();
                s[i] += v;
            }
        }
        part += 1;
    }
    s
}

fn oracle_multiplicity(
    algebra: Algebra,
    n: usize,
    k: usize,
    which: fn(&snrep::ClassFunction) -> BigRational,
) -> Result<BigRational> {
    Ok(which(&oracle::class_function(algebra, n, k)?))
}

/// Trivial and alternating multiplicities: Thm. vBCohomolThm,
/// Thm. fBCohomThm, Thm. AltMultThm / HalfAltMultThm.
pub fn multiplicities(cfg: &SuiteConfig) -> Vec<Check> {
    let n_max = cfg.cap(7);
    let cases: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    let mut out = Vec::new();

    let name = format!("pvb trivial multiplicity == restricted no-repeated-odd count, 1<=k<n<={n_max}");
    let check = (|| -> Result<Check> {
        let gf = no_repeated_odd_series(n_max);
        let mut failures = Vec::new();
        for &(n, k) in &cases {
            let m = oracle_multiplicity(Algebra::PvbDual, n, k, snrep::multiplicity_trivial)?;
            let count = formulas::trivial_multiplicity_pvb(n, k)?;
            let by_len = formulas::trivial_multiplicity_pvb_by_length(n, k)?;
            if m != BigRational::from_integer(BigInt::from(count)) || count != by_len {
                failures.push(format!("n={n} k={k}: oracle {m}, count {count}, by length {by_len}"));
            }
            if n >= 2 * k && BigInt::from(count) != gf[k] {
                failures.push(format!("n={n} k={k}: count {count} != series coefficient {}", gf[k]));
            }
        }
        Ok(Check::new(&name, failures, format!("{} (n,k) pairs", cases.len())))
    })();
    out.push(Check::from_result(name, check));

    let name = format!("pfb trivial multiplicity all zero, 1<=k<n<={n_max}");
    let check = (|| -> Result<Check> {
        let mut failures = Vec::new();
        for &(n, k) in &cases {
            let m = oracle_multiplicity(Algebra::PfbDual, n, k, snrep::multiplicity_trivial)?;
            if !m.is_zero() {
                failures.push(format!("n={n} k={k}: {m}"));
            }
        }
        Ok(Check::new(&name, failures, format!("{} (n,k) pairs", cases.len())))
    })();
    out.push(Check::from_result(name, check));

    let name = format!("alternating equal & vanishing, 1<=k<n<={n_max}");
    let check = (|| -> Result<Check> {
        let mut failures = Vec::new();
        for &(n, k) in &cases {
            let v = oracle_multiplicity(Algebra::PvbDual, n, k, snrep::multiplicity_alternating)?;
            let f = oracle_multiplicity(Algebra::PfbDual, n, k, snrep::multiplicity_alternating)?;
            if v != f {
                failures.push(format!("n={n} k={k}: pvb {v} != pfb {f}"));
            }
            if n >= 2 * (k + 1) && !(v.is_zero() && f.is_zero()) {
                failures.push(format!("n={n} k={k}: nonzero ({v}, {f}) with n >= 2(k+1)"));
            }
        }
        Ok(Check::new(&name, failures, format!("{} (n,k) pairs", cases.len())))
    })();
    out.push(Check::from_result(name, check));
    out
}

/// Church–Farb trajectories: k=1 both algebras over n=2..8, k=2 pvb n=5..9.
pub fn stability(cfg: &SuiteConfig) -> Vec<Check> {
    let cases: [(Algebra, usize, usize, usize, usize); 3] = [
        (Algebra::PvbDual, 1, 2, 8, 4),
        (Algebra::PfbDual, 1, 2, 8, 3),
        (Algebra::PvbDual, 2, 5, 9, 8),
    ];
    let mut out = Vec::new();
    for (algebra, k, lo, hi, expected_from) in cases {
        let hi = cfg.cap(hi);
        if hi < lo {
            continue;
        }
        let name = format!("{algebra} k={k} n={lo}..{hi}: stable from n<={expected_from}");
        let check = formulas::stability_report(algebra, k, lo..=hi).map(|r| {
            let mut failures = Vec::new();
            if hi >= expected_from {
                match r.stable_from {
                    Some(s) if s <= expected_from => {}
                    other => failures.push(format!("stable_from = {other:?}")),
                }
            }
            if !r.constant_from_bound {
                failures.push(format!("not constant from 4k = {}", r.bound));
            }
            Check::new(&name, failures, format!("stable_from = {:?}", r.stable_from))
        });
        out.push(Check::from_result(name, check));
    }
    out
}

/// Thm. LamExceedsK and Thm. NoVp on every `pfb!` table, n ≤ 7.
pub fn constraints(cfg: &SuiteConfig) -> Vec<Check> {
    let n_max = cfg.cap(7);
    let name = format!("pfb tables: |lambda| >= k and no two-row except V(1) at k=1, n<={n_max}");
    let check = (|| -> Result<Check> {
        let mut failures = Vec::new();
        let mut tables = 0;
        for n in 1..=n_max {
            for k in 1..n {
                tables += 1;
                let r = formulas::constraint_checks(&formulas::decompose_pfb(n, k)?);
                for v in r.violations {
                    failures.push(format!(
                        "n={} k={} lambda={} mult={} ({:?})",
                        v.n, v.k, v.lambda, v.multiplicity, v.kind
                    ));
                }
            }
        }
        Ok(Check::new(&name, failures, format!("{tables} tables")))
    })();
    let mut out = vec![Check::from_result(name, check)];

    let name = "e_k[e_2] == Frobenius-coordinate shapes, k=2..5".to_string();
    let check = (|| -> Result<Check> {
        let mut failures = Vec::new();
        for k in 2..=5 {
            let ple = SymFunc::elementary(k).plethysm(&SymFunc::elementary(2)).to_schur();
            let mut got: Vec<Partition> = Vec::new();
            for (lam, c) in &ple {
                if *c != BigRational::one() {
                    failures.push(format!("k={k}: coefficient {c} at {lam}"));
                }
                got.push(lam.clone());
            }
            got.sort_unstable_by(|a, b| b.cmp(a));
            let expected = formulas::ek_e2_shapes(k)?;
            if got != expected {
                failures.push(format!("k={k}: {got:?} != {expected:?}"));
            }
        }
        Ok(Check::new(&name, failures, "all match"))
    })();
    out.push(Check::from_result(name, check));
    out
}

/// Count of strict partitions, used by the ledger to explain the spec's
/// printed "1,1,1,2,2,3,4" sequence.
pub fn distinct_part_counts(k_max: usize) -> Vec<usize> {
    (0..=k_max)
        .map(|k| {
            partitions(k, &PartitionConstraints::default())
                .iter()
                .filter(|p| p.parts().windows(2).all(|w| w[0] > w[1]))
                .count()
        })
        .collect()
}

/// Multiplicities of an oracle table as unsigned integers (for reports).
pub fn table_total(t: &DecompositionTable) -> BigUint {
    t.entries.values().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generating_function_coefficients() {
        let v: Vec<i64> = no_repeated_odd_series(8)
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(v, vec![1, 1, 1, 2, 3, 4, 5, 7, 10]);
        assert_eq!(distinct_part_counts(6), vec![1, 1, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig {
            n_max: Some(4),
            n: None,
            trunc: 8,
        };
        for s in Suite::EACH {
            let r = run(s, &cfg);
            assert!(r.passed(), "{s}: {:?}", r.checks);
        }
    }
}
