//! Mixed multiplicities from the multigraded Hilbert series of the special
//! fiber, including a base ring where one ideal first has to be made
//! grade-positive by passing to a quotient.
//!
//! ```bash
//! cargo run --release --example mixed_multiplicities
//! ```

use mixedmult::multiplicity::{all_mixed_multiplicities, mixed_multiplicity, mixed_series};
use mixedmult::{Error, Ideal, Result, RingContext};

fn main() -> Result<()> {
    let r = RingContext::new(&["w", "x", "y", "z"])?;
    let m = Ideal::maximal(&r);
    let i = Ideal::parse(&r, &["x^2 - y*w", "x^3 - z*w^2"])?;

    let series = mixed_series(&[m.clone(), i.clone()], None)?;
    println!("fiber series of (m | I): {}", series.series);
    for (alpha, e) in all_mixed_multiplicities(&[m.clone(), i.clone()])? {
        println!("  e_{alpha:?}(m | I) = {e}");
    }

    let j = m.power(4)?.sum(&i)?;
    println!("J = m^4 + I has {} generators", j.gens().len());
    println!(
        "  e_(3,0)(m | J) = {}",
        mixed_multiplicity(&[m.clone(), j.clone()], &[3, 0])?
    );
    println!("  e_(2,1)(m | J) = {}", mixed_multiplicity(&[m, j], &[2, 1])?);

    // in Q[w,x,y,z]/(wx, yz) the ideal (w, y) is killed by xz
    let base = RingContext::new(&["w", "x", "y", "z"])?;
    let q = base.quotient(&[base.parse("w*x")?, base.parse("y*z")?])?;
    let n = Ideal::parse(&q, &["w", "y"])?;
    match mixed_multiplicity(&[Ideal::maximal(&q), n.clone()], &[1, 1]) {
        Err(e @ Error::GradeZero(_)) => println!("over the quotient: {e}"),
        other => println!("over the quotient: {other:?}"),
    }
    let l = Ideal::zero(&q).saturate(&n)?;
    let t = l.quotient_ring()?;
    println!("L = 0 : (w, y)^inf = {:?}", l.sorted_strings());
    println!("  dim T = {}", Ideal::zero(&t).krull_dimension()?);
    let nt = Ideal::parse(&t, &["w", "y"])?;
    println!(
        "  e_(1,0)(m | (w, y)) in T = {}",
        mixed_multiplicity(&[Ideal::maximal(&t), nt], &[1, 0])?
    );
    Ok(())
}
