//! Exact convex geometry of lattice polytopes in dimension at most 3.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// Convex hull of finitely many integer points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        let dim = points
            .first()
            .ok_or_else(|| Error::Polytope("a polytope needs at least one point".into()))?
            .len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::Polytope("points of different dimensions".into()));
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(LatticePolytope { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn translate(&self, v: &[i64]) -> Result<LatticePolytope> {
        if v.len() != self.dim {
            return Err(Error::Polytope("translation vector of the wrong dimension".into()));
        }
        LatticePolytope::new(
            self.points
                .iter()
                .map(|p| p.iter().zip(v).map(|(a, b)| a + b).collect())
                .collect(),
        )
    }

    /// Vertices of the convex hull in the plane, counterclockwise.
    pub fn hull_vertices_2d(&self) -> Result<Vec<Vec<i64>>> {
        if self.dim != 2 {
            return Err(Error::Polytope(
                "planar hull requested for a non-planar polytope".into(),
            ));
        }
        let pts: Vec<[i128; 2]> = self.points.iter().map(|p| [p[0] as i128, p[1] as i128]).collect();
        Ok(hull_2d(&pts).into_iter().map(|i| self.points[i].clone()).collect())
    }
}

/// All pairwise sums.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.dim != q.dim {
        return Err(Error::Polytope(format!(
            "cannot add polytopes of dimensions {} and {}",
            p.dim, q.dim
        )));
    }
    let mut out = Vec::with_capacity(p.points.len() * q.points.len());
    for a in &p.points {
        for b in &q.points {
            out.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    LatticePolytope::new(out)
}

fn cross(o: [i128; 2], a: [i128; 2], b: [i128; 2]) -> i128 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Monotone chain; returns indices of the strict hull vertices in
/// counterclockwise order.
fn hull_2d(pts: &[[i128; 2]]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| pts[i]);
    idx.dedup_by_key(|i| pts[*i]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && cross(pts[lower[lower.len() - 2]], pts[lower[lower.len() - 1]], pts[i]) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && cross(pts[upper[upper.len() - 2]], pts[upper[upper.len() - 1]], pts[i]) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn twice_area_2d(pts: &[[i128; 2]]) -> i128 {
    let h = hull_2d(pts);
    if h.len() < 3 {
        return 0;
    }
    let mut s = 0i128;
    for k in 0..h.len() {
        let (a, b) = (pts[h[k]], pts[h[(k + 1) % h.len()]]);
        s += a[0] * b[1] - a[1] * b[0];
    }
    s.abs()
}

type P3 = [i128; 3];

fn sub3(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross3(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: P3, b: P3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Six times the volume of the hull, enumerating supporting planes through
/// point triples and fanning each facet from a fixed hull point.
fn six_volume_3d(pts: &[P3]) -> i128 {
    let n = pts.len();
    let mut planes: Vec<(P3, i128)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut normal = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]));
                if normal == [0, 0, 0] {
                    continue;
                }
                let g = gcd_i128(gcd_i128(normal[0], normal[1]), normal[2]);
                normal = [normal[0] / g, normal[1] / g, normal[2] / g];
                let offset = dot3(normal, pts[i]);
                let (mut above, mut below) = (false, false);
                for p in pts {
                    let d = dot3(normal, *p) - offset;
                    above |= d > 0;
                    below |= d < 0;
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if !above && !below {
                    // everything coplanar
                    return 0;
                }
                // orient outward
                let (normal, offset) = if above {
                    ([-normal[0], -normal[1], -normal[2]], -offset)
                } else {
                    (normal, offset)
                };
                if !planes.contains(&(normal, offset)) {
                    planes.push((normal, offset));
                }
            }
        }
    }
    let apex = pts[0];
    let mut total = 0i128;
    for (normal, offset) in planes {
        let on: Vec<P3> = pts.iter().copied().filter(|p| dot3(normal, *p) == offset).collect();
        // project along the dominant normal axis
        let axis = (0..3).max_by_key(|&a| normal[a].abs()).unwrap();
        let (u, v) = match axis {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let flat: Vec<[i128; 2]> = on.iter().map(|p| [p[u], p[v]]).collect();
        let ring = hull_2d(&flat);
        for k in 1..ring.len().saturating_sub(1) {
            let (a, b, c) = (on[ring[0]], on[ring[k]], on[ring[k + 1]]);
            let det = dot3(sub3(a, apex), cross3(sub3(b, apex), sub3(c, apex)));
            total += det.abs();
        }
    }
    total
}

/// Euclidean volume of the convex hull, for dimensions 1 to 3.
pub fn hull_volume(p: &LatticePolytope) -> Result<Rational> {
    match p.dim {
        1 => {
            let lo = p.points.iter().map(|q| q[0]).min().unwrap();
            let hi = p.points.iter().map(|q| q[0]).max().unwrap();
            Ok(Rational::from_integer(BigInt::from(hi - lo)))
        }
        2 => {
            let pts: Vec<[i128; 2]> = p.points.iter().map(|q| [q[0] as i128, q[1] as i128]).collect();
            Ok(Rational::new(BigInt::from(twice_area_2d(&pts)), BigInt::from(2)))
        }
        3 => {
            let pts: Vec<P3> = p
                .points
                .iter()
                .map(|q| [q[0] as i128, q[1] as i128, q[2] as i128])
                .collect();
            Ok(Rational::new(BigInt::from(six_volume_3d(&pts)), BigInt::from(6)))
        }
        d => Err(Error::Polytope(format!(
            "volumes are implemented up to dimension 3, not {d}"
        ))),
    }
}

/// Inclusion–exclusion mixed volume, normalized so that `MV(P, ..., P) = n! V(P)`.
pub fn mixed_volume_geometric(polys: &[LatticePolytope]) -> Result<BigInt> {
    let n = polys
        .first()
        .ok_or_else(|| Error::Polytope("no polytopes given".into()))?
        .dim;
    if polys.iter().any(|p| p.dim != n) {
        return Err(Error::Polytope("polytopes of different dimensions".into()));
    }
    if polys.len() != n {
        return Err(Error::Polytope(format!(
            "{} polytopes given in dimension {n}",
            polys.len()
        )));
    }
    if !(1..=3).contains(&n) {
        return Err(Error::Polytope(format!(
            "mixed volumes are implemented up to dimension 3, not {n}"
        )));
    }
    let mut total = Rational::zero();
    for mask in 1u32..(1 << n) {
        let members: Vec<&LatticePolytope> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &polys[i]).collect();
        let mut sum = members[0].clone();
        for q in &members[1..] {
            sum = minkowski_sum(&sum, q)?;
        }
        let v = hull_volume(&sum)?;
        if (n - members.len()).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    if !total.is_integer() || total.is_negative() {
        return Err(Error::Internal(format!(
            "mixed volume {total} is not a nonnegative integer"
        )));
    }
    Ok(total.to_integer())
}
