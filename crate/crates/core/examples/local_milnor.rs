//! Milnor number at the origin when the Jacobian ideal has components away
//! from it: saturate by m, then take J : (J : m^inf).
//!
//! ```bash
//! cargo run --release --example local_milnor
//! ```

use mixedmult::multiplicity::milnor_local_parts;
use mixedmult::{Ideal, Result, RingContext};

fn main() -> Result<()> {
    let r = RingContext::new(&["x", "y", "z"])?;
    let f = r.parse("x^2 + y^2 + z^2 + x*y*z")?;
    let parts = milnor_local_parts(&r, &f)?;
    let m = Ideal::maximal(&r);
    println!("J = {:?}", parts.jacobian.sorted_strings());
    println!(
        "J : m^inf = {:?} (unit: {})",
        parts.saturation.sorted_strings(),
        parts.saturation.is_unit()?
    );
    let fj = Ideal::new(&r, std::iter::once(f).chain(parts.jacobian.gens().iter().cloned()))?;
    println!("(f) + J : m^inf is the unit ideal: {}", fj.saturate(&m)?.is_unit()?);
    println!("Milnor number: {}", parts.milnor);
    Ok(())
}
