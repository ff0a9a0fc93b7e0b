//! Mixed volumes of lattice polytopes two ways: as a mixed multiplicity of
//! monomial ideals, and by inclusion-exclusion over Minkowski sums.
//!
//! ```bash
//! cargo run --release --example mixed_volume
//! ```

use mixedmult::multiplicity::{hom_ideal_polytope, m_mixed_volume, mixed_ehrhart_leading_coeff, PolytopeInput};
use mixedmult::polytope::{hull_volume, minkowski_sum, mixed_volume_geometric, LatticePolytope};
use mixedmult::Result;

fn polytope(points: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::new(points.iter().map(|p| p.to_vec()).collect()).expect("valid polytope")
}

fn both(label: &str, polys: &[LatticePolytope]) -> Result<()> {
    let inputs: Vec<PolytopeInput> = polys.iter().cloned().map(PolytopeInput::Points).collect();
    let algebraic = m_mixed_volume(&inputs)?;
    let geometric = mixed_volume_geometric(polys)?;
    println!("{label}: algebraic {algebraic}, geometric {geometric}");
    Ok(())
}

fn main() -> Result<()> {
    let tet = polytope(&[&[1, 1, 0], &[2, 1, 0], &[1, 3, 0], &[1, 1, 3]]);
    let two = minkowski_sum(&tet, &tet)?;
    let three = minkowski_sum(&two, &tet)?;
    println!(
        "tetrahedron volumes: V(Q) = {}, V(2Q) = {}, V(3Q) = {}",
        hull_volume(&tet)?,
        hull_volume(&two)?,
        hull_volume(&three)?
    );
    println!("its ideal: {:?}", hom_ideal_polytope(&tet)?.sorted_strings());
    both("MV(Q, Q, Q)", &[tet.clone(), tet.clone(), tet])?;

    let q1 = polytope(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
    let q2 = polytope(&[&[0, 0], &[1, 0], &[0, 1], &[0, 2]]);
    both("two parabolas", &[q1, q2])?;

    let octagon = polytope(&[&[1, 1], &[3, 0], &[4, 0], &[4, 1], &[3, 3], &[1, 4], &[0, 4], &[0, 3]]);
    let hexagon = polytope(&[&[0, 1], &[0, 0], &[3, 0], &[4, 1], &[4, 4], &[3, 4]]);
    both("octagon and hexagon", &[octagon, hexagon])?;

    let square = polytope(&[&[0, 0], &[0, 2], &[2, 0], &[2, 2]]);
    let triangle = polytope(&[&[0, 0], &[1, 2], &[2, 1]]);
    both("square and triangle", &[square.clone(), triangle.clone()])?;
    println!(
        "mixed Ehrhart leading coefficient: {}",
        mixed_ehrhart_leading_coeff(&[square, triangle])?
    );
    Ok(())
}
