//! Oracle-first frozen values. Each table or character below was produced by
//! the brute-force oracle (basis enumeration + signed trace) before being
//! written down here; the formula side is then checked against it.

use braidchar::formulas;
use braidchar::oracle;
use braidchar::snrep;
use braidchar::{Algebra, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

const FROZEN_TABLES: &[(Algebra, usize, usize, &str)] = &[
    (
        Algebra::PvbDual,
        5,
        2,
        "V(0)+5V(1)+5V(2)+7V(1,1)+4V(2,1)+3V(1,1,1)",
    ),
    (
        Algebra::PfbDual,
        6,
        2,
        "2V(1,1)+V(2,1)+2V(1,1,1)+V(2,1,1)",
    ),
    (
        Algebra::PvbDual,
        6,
        3,
        "2V(0)+9V(1)+16V(2)+19V(1,1)+9V(3)+26V(2,1)+17V(1,1,1)+8V(2,2)+13V(2,1,1)+6V(1,1,1,1)+V(1,1,1,1,1)",
    ),
    (
        Algebra::PfbDual,
        7,
        3,
        "V(2,1)+3V(1,1,1)+2V(2,2)+3V(2,1,1)+4V(1,1,1,1)+2V(2,2,1)+V(2,1,1,1)+V(1,1,1,1,1)",
    ),
    (
        Algebra::PvbDual,
        7,
        4,
        "3V(0)+16V(1)+38V(2)+39V(1,1)+36V(3)+91V(2,1)+52V(1,1,1)+51V(3,1)+53V(2,2)+85V(2,1,1)+37V(1,1,1,1)+32V(2,2,1)+30V(2,1,1,1)+12V(1,1,1,1,1)+V(1,1,1,1,1,1)",
    ),
    (
        Algebra::PvbDual,
        8,
        4,
        "3V(0)+16V(1)+42V(2)+41V(1,1)+50V(3)+114V(2,1)+64V(1,1,1)+26V(4)+111V(3,1)+89V(2,2)+133V(2,1,1)+53V(1,1,1,1)+55V(3,2)+77V(3,1,1)+87V(2,2,1)+74V(2,1,1,1)+20V(1,1,1,1,1)+16V(2,2,2)+24V(2,2,1,1)+16V(2,1,1,1,1)+3V(1,1,1,1,1,1)",
    ),
];

#[test]
fn frozen_oracle_tables() {
    for &(algebra, n, k, expected) in FROZEN_TABLES {
        let o = oracle::decomposition(algebra, n, k).unwrap();
        assert_eq!(o.cf_summary(), expected, "oracle {algebra} n={n} k={k}");
        let f = formulas::decompose_formula(algebra, n, k).unwrap();
        assert_eq!(f, o, "formula {algebra} n={n} k={k}");
    }
}

const FROZEN_CHARACTERS: &[(Algebra, usize, &str, &[i64])] = &[
    (Algebra::PvbDual, 6, "3,2,1", &[1, 0, 0, 0, 0, 0]),
    (Algebra::PfbDual, 6, "3,2,1", &[1, -1, 0, 0, -3, -1]),
    (Algebra::PvbDual, 6, "4,2", &[1, 0, 0, 0, 0, 0]),
    (Algebra::PfbDual, 6, "4,2", &[1, -1, 1, -2, -1, 1]),
    (Algebra::PvbDual, 6, "2,2,2", &[1, 0, -12, 0, 24, 0]),
    (Algebra::PfbDual, 6, "2,2,2", &[1, -3, -3, 8, 1, -1]),
    (Algebra::PvbDual, 6, "6", &[1, 0, 0, 0, 0, 0]),
    (Algebra::PfbDual, 6, "6", &[1, 0, 0, -1, 1, -1]),
    (Algebra::PvbDual, 6, "3,3", &[1, 0, 0, 6, 0, 0]),
    (Algebra::PfbDual, 6, "3,3", &[1, 0, 2, 3, 1, 1]),
    (Algebra::PfbDual, 7, "4,3", &[1, 0, 2, -1, 1, -1, -1]),
    (Algebra::PfbDual, 4, "2,2", &[1, -2, -1, 1]),
    (Algebra::PvbDual, 4, "2,2", &[1, 0, -4, 0]),
    (Algebra::PfbDual, 2, "2", &[1, -1]),
    (Algebra::PvbDual, 2, "2", &[1, 0]),
];

#[test]
fn frozen_oracle_characters() {
    for &(algebra, n, mu, coeffs) in FROZEN_CHARACTERS {
        let mu = p(mu);
        let o = oracle::graded_character(algebra, n, &mu).unwrap();
        assert_eq!(o.coeffs(), ints(coeffs).as_slice(), "oracle {algebra} {mu}");
        let f = formulas::character(algebra, n, &mu).unwrap();
        assert_eq!(f, o, "formula {algebra} {mu}");
    }
}

/// The spec's example "k=4, n>=8 → 2" is contradicted by the oracle: the
/// trivial isotypic part of pvb!_8 in degree 4 has rank 3, matching
/// {4}, {3,1}, {2,2} (3 and 1 are distinct odd parts, each used once).
#[test]
fn trivial_multiplicity_k4_resolved_by_oracle() {
    let cf = oracle::class_function(Algebra::PvbDual, 8, 4).unwrap();
    let m = snrep::multiplicity_trivial(&cf);
    assert_eq!(m, BigRational::from_integer(BigInt::from(3)));
    assert_eq!(formulas::trivial_multiplicity_pvb(8, 4).unwrap(), 3);
    assert_eq!(formulas::trivial_multiplicity_pvb(9, 4).unwrap(), 3);
}

#[test]
fn frozen_spec_examples() {
    // snrep.decompose examples
    assert_eq!(
        oracle::decomposition(Algebra::PfbDual, 3, 1).unwrap().cf_summary(),
        "V(1)+V(1,1)"
    );
    assert_eq!(
        oracle::decomposition(Algebra::PvbDual, 4, 1).unwrap().cf_summary(),
        "V(0)+2V(1)+V(2)+V(1,1)"
    );
    // multiplicity_trivial examples
    let cf = oracle::class_function(Algebra::PvbDual, 5, 1).unwrap();
    assert_eq!(snrep::multiplicity_trivial(&cf), BigRational::from_integer(1.into()));
    // oracle basis counts
    assert_eq!(oracle::basis_len(Algebra::PvbDual, 4, 1).unwrap(), 12);
    assert_eq!(oracle::basis_len(Algebra::PfbDual, 4, 2).unwrap(), 7);
    // oracle graded characters
    assert_eq!(
        oracle::graded_character(Algebra::PvbDual, 3, &p("1,1,1")).unwrap().coeffs(),
        ints(&[1, 6, 6]).as_slice()
    );
}
