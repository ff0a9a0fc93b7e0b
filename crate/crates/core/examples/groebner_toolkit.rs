//! Groebner bases and the ideal operations built on them.
//!
//! ```bash
//! cargo run --release --example groebner_toolkit
//! ```

use mixedmult::{Ideal, MonomialOrder, Result, RingContext};

fn main() -> Result<()> {
    let r = RingContext::new(&["t", "x", "y", "z"])?;
    let cubic = Ideal::parse(&r, &["x - t", "y - t^2", "z - t^3"])?;
    let lex = cubic.groebner_basis(&MonomialOrder::Lex)?;
    println!("lex basis of the parametrized twisted cubic:");
    for p in lex.polys() {
        println!("  {}", r.show(p));
    }
    let implicit = cubic.eliminate(&[0])?;
    println!("eliminating t: {:?}", implicit.sorted_strings());

    let s = RingContext::new(&["x", "y"])?;
    let i = Ideal::parse(&s, &["x^2*y", "x*y^2"])?;
    let x = Ideal::parse(&s, &["x"])?;
    println!("I : x = {:?}", i.colon(&x)?.sorted_strings());
    println!("I : x^inf = {:?}", i.saturate(&x)?.sorted_strings());
    let j = Ideal::parse(&s, &["x^3", "y^2"])?;
    println!("dim_Q R/(x^3, y^2) = {}", j.k_dimension()?);
    println!("Krull dim R/I = {}", i.krull_dimension()?);
    Ok(())
}
