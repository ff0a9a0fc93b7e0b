//! Defining ideals of multi-Rees algebras, over a polynomial ring and over a
//! quotient ring where a nonzerodivisor has to be supplied.
//!
//! ```bash
//! cargo run --release --example rees_ideal
//! ```

use mixedmult::rees::{multi_rees_ideal, rees_ideal_by_elimination, ReesSpec};
use mixedmult::{Ideal, Result, RingContext};

fn main() -> Result<()> {
    let r = RingContext::new(&["w", "x", "y", "z"])?;
    let i = Ideal::parse(&r, &["x^2 - y*w", "x^3 - z*w^2"])?;
    let j = Ideal::parse(&r, &["w^2 + x^2 + y^2 + z^2"])?;
    let spec = ReesSpec::new(vec![i, j]);

    let rees = multi_rees_ideal(&spec)?;
    println!("R(I, J) over Q[w,x,y,z]");
    for (g, d) in rees.flat_strings().iter().zip(rees.degrees()) {
        println!("  {g}    degree {:?}", d.0);
    }
    println!("  kernel check: {}", rees.verify_kernel()?);

    // the elimination route gives the same ideal
    let elim = rees_ideal_by_elimination(&spec)?;
    println!("  agrees with elimination: {}", elim.ideal().equals(rees.ideal())?);

    let base = RingContext::new(&["w", "x", "y", "z"])?;
    let q = base.quotient(&[base.parse("w*x")?, base.parse("y*z")?])?;
    let m = Ideal::maximal(&q);
    let nzd = q.parse("w + x")?;
    let rees = multi_rees_ideal(&ReesSpec::with_nzds(vec![m], vec![nzd]))?;
    println!("R(m) over Q[w,x,y,z]/(wx, yz) with nonzerodivisor w + x");
    let mut gens = rees.flat_strings();
    gens.sort();
    for g in gens {
        println!("  {g}");
    }
    Ok(())
}
