//! Sectional Milnor numbers e_i(m | J(f)) and the mixed volume bounds for
//! projective hypersurfaces. Pass `--family` to also run the z^5 + t y^6 z +
//! x y^7 + x^15 family at t = 0 and t = 1.
//!
//! ```bash
//! cargo run --release --example sectional_milnor -- --family
//! ```

use mixedmult::multiplicity::{
    euler_characteristic_complement, jacobian_ideal, m_mixed_volume, mixed_multiplicity, sec_milnor_numbers,
    support_polytope_of_partials, PolytopeInput,
};
use mixedmult::polytope::LatticePolytope;
use mixedmult::{Ideal, Result, RingContext};

fn main() -> Result<()> {
    let r = RingContext::new(&["x", "y", "z"])?;
    println!(
        "x^4 + y^4 + z^4: {:?}",
        sec_milnor_numbers(&r, &r.parse("x^4 + y^4 + z^4")?)?
    );

    let z = RingContext::new(&["z_0", "z_1", "z_2"])?;
    let simplex = LatticePolytope::new(vec![vec![0, 0], vec![1, 0], vec![0, 1]])?;
    for h in ["z_0^3 + z_1^3 + z_2^3 + z_0*z_1*z_2", "z_1*(z_0*z_1 - z_2^2)"] {
        let f = z.parse(h)?;
        let delta_h = support_polytope_of_partials(&z, &f)?;
        let jac = jacobian_ideal(&z, &f)?;
        let m = Ideal::maximal(&z);
        println!("h = {h}");
        for i in 0..3u32 {
            let mu = mixed_multiplicity(&[m.clone(), jac.clone()], &[2 - i, i])?;
            let mut polys = vec![PolytopeInput::Points(simplex.clone()); (2 - i) as usize];
            polys.extend(vec![PolytopeInput::Points(delta_h.clone()); i as usize]);
            println!("  mu^({i}) = {mu} <= MV = {}", m_mixed_volume(&polys)?);
        }
        if let Ok(chi) = euler_characteristic_complement(&z, &f) {
            println!("  Euler characteristic of the complement: {chi}");
        }
    }

    if std::env::args().any(|a| a == "--family") {
        for (t, f) in [(0, "z^5 + x*y^7 + x^15"), (1, "z^5 + y^6*z + x*y^7 + x^15")] {
            println!("t = {t}: {:?}", sec_milnor_numbers(&r, &r.parse(f)?)?);
        }
    }
    Ok(())
}
