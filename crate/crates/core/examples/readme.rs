//! The README's library example.
use braidchar::{formulas, oracle, Algebra, Partition};

fn main() -> braidchar::Result<()> {
    let mu: Partition = "2,2".parse()?;
    let f = formulas::char_pfb(4, &mu)?;
    assert_eq!(f, oracle::graded_character(Algebra::PfbDual, 4, &mu)?);
    println!("{}", braidchar::report::poly_text(f.coeffs()));
    let t = formulas::decompose_pvb(4, 1)?;
    assert_eq!(t.cf_summary(), "V(0)+2V(1)+V(2)+V(1,1)");
    println!("{}", t.cf_summary());
    Ok(())
}
