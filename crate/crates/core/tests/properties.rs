//! Randomized invariants of each layer: polynomial arithmetic, ideals,
//! Hilbert series, Rees ideals, multiplicities and the polytope oracle.

use std::collections::BTreeSet;
use std::sync::Arc;

use mixedmult::hilbert::{hilbert_function_value, k_polynomial, MultigradedSeries};
use mixedmult::multiplicity::{
    hom_ideal_polytope, jacobian_ideal, m_mixed_volume, milnor_number_local, mixed_multiplicity, mixed_series,
    sec_milnor_numbers, support_polytope_of_partials, PolytopeInput,
};
use mixedmult::poly::DegreeOf;
use mixedmult::polytope::{hull_volume, minkowski_sum, mixed_volume_geometric, LatticePolytope};
use mixedmult::rees::{multi_rees_ideal, rees_ideal_by_elimination, ReesSpec};
use mixedmult::{Ideal, Monomial, MonomialIdeal, MonomialOrder, Polynomial, Rational, RingContext};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn lib<T>(r: mixedmult::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn poly(nvars: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..=max_exp, nvars)), 1..=4).prop_map(move |terms| {
        let refs: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        Polynomial::from_int_terms(nvars, &refs)
    })
}

fn nonzero(nvars: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    poly(nvars, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

/// Homogeneous of degree `d` in three variables.
fn form(d: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, 0..=d, 0..=d), 1..=4)
        .prop_map(move |terms| {
            let exps: Vec<(i64, Vec<u32>)> = terms
                .into_iter()
                .filter(|(_, a, b)| a + b <= d)
                .map(|(c, a, b)| (c, vec![a, b, d - a - b]))
                .collect();
            let refs: Vec<(i64, &[u32])> = exps.iter().map(|(c, e)| (*c, e.as_slice())).collect();
            Polynomial::from_int_terms(3, &refs)
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::new)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        prop::collection::vec(1u32..=3, 3).prop_map(MonomialOrder::WeightedRevlex),
        prop::sample::subsequence(vec![0usize, 1, 2], 1..=2).prop_map(MonomialOrder::elimination),
    ]
}

fn xyz() -> Arc<RingContext> {
    RingContext::new(&["x", "y", "z"]).unwrap()
}

fn rational(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn big(k: u64) -> BigInt {
    BigInt::from(k)
}

// polynomial arithmetic

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn zero_is_neutral_and_self_difference_vanishes(p in poly(3, 4)) {
        prop_assert_eq!(p.checked_add(&Polynomial::zero(3)), p.clone());
        prop_assert!(p.checked_sub(&p).is_zero());
        prop_assert!(p.checked_sub(&p).terms().is_empty());
    }

    #[test]
    fn leading_monomial_of_a_product(p in nonzero(3, 3), q in nonzero(3, 3), ord in order()) {
        let pq = lib(p.checked_mul(&q))?;
        let expect = lib(lib(p.leading_term(&ord))?.mono.checked_mul(&lib(q.leading_term(&ord))?.mono))?;
        prop_assert_eq!(&lib(pq.leading_term(&ord))?.mono, &expect);
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(3, 5), b in monomial(3, 5), m in monomial(3, 5), ord in order()) {
        prop_assume!(a != b);
        let (lo, hi) = if ord.cmp(&a, &b).is_lt() { (a, b) } else { (b, a) };
        let (lo_m, hi_m) = (lib(lo.checked_mul(&m))?, lib(hi.checked_mul(&m))?);
        prop_assert!(ord.cmp(&lo_m, &hi_m).is_lt());
        prop_assert!(ord.cmp(&Monomial::one(3), &m).is_le());
    }

    #[test]
    fn multidegree_adds_on_products(p in form(2), q in form(3), weights in prop::collection::vec(1u32..=3, 2)) {
        // bigrade: x and y in the first coordinate, z in the second
        let r = RingContext::with_grading(&["x", "y", "z"], vec![vec![weights[0], 0], vec![weights[0], 0], vec![0, weights[1]]]).unwrap();
        let (DegreeOf::Homogeneous(dp), DegreeOf::Homogeneous(dq)) = (r.multidegree(&p), r.multidegree(&q)) else {
            return Ok(());
        };
        let pq = lib(p.checked_mul(&q))?;
        let DegreeOf::Homogeneous(dpq) = r.multidegree(&pq) else {
            return Err(TestCaseError::fail("product of homogeneous elements is inhomogeneous"));
        };
        let sum: Vec<u64> = dp.0.iter().zip(&dq.0).map(|(a, b)| a + b).collect();
        prop_assert_eq!(dpq.0, sum);
    }

    #[test]
    fn homogenize_then_dehomogenize(p in nonzero(2, 4), extra in 0u64..=2) {
        let top = p.total_degree().unwrap() + extra;
        let h = lib(p.extend(1).homogenize(2, top))?;
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.evaluate_var(2, &Rational::one()), p.extend(1));
    }
}

// ideals

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(nonzero(3, 2), 1..=3), p in poly(3, 3)) {
        let ideal = lib(Ideal::new(&xyz(), gens))?;
        let once = lib(ideal.normal_form(&p))?;
        prop_assert_eq!(lib(ideal.normal_form(&once))?, once.clone());
        prop_assert!(lib(ideal.contains(&p.checked_sub(&once)))?);
    }

    #[test]
    fn saturation_contains_and_is_saturated(gens in prop::collection::vec(nonzero(3, 2), 1..=2), h in nonzero(3, 1)) {
        let ideal = lib(Ideal::new(&xyz(), gens))?;
        let sat = lib(ideal.saturate_element(&h))?;
        prop_assert!(lib(sat.contains_ideal(&ideal))?);
        prop_assert!(lib(lib(sat.colon_element(&h))?.equals(&sat))?);
    }

    #[test]
    fn krull_dimension_ignores_the_order(gens in prop::collection::vec(nonzero(3, 2), 1..=3)) {
        let ideal = lib(Ideal::new(&xyz(), gens))?;
        let grevlex = lib(ideal.initial_ideal(&MonomialOrder::Grevlex))?.dimension();
        let lex = lib(ideal.initial_ideal(&MonomialOrder::Lex))?.dimension();
        prop_assert_eq!(grevlex, lex);
        prop_assert_eq!(lib(ideal.krull_dimension())?, grevlex);
    }

    #[test]
    fn pure_powers_have_product_length(a in prop::collection::vec(1u32..=5, 1..=4)) {
        let names: Vec<String> = (0..a.len()).map(|i| format!("x_{i}")).collect();
        let r = RingContext::new(&names).unwrap();
        let gens = a.iter().enumerate().map(|(i, &e)| Polynomial::monomial(Rational::one(), Monomial::var(a.len(), i, e)));
        let ideal = lib(Ideal::new(&r, gens))?;
        prop_assert_eq!(lib(ideal.k_dimension())?, a.iter().map(|&e| e as u64).product::<u64>());
    }
}

// Hilbert series

/// A random grading by unit vectors: each variable goes to one axis.
fn axis_grading(nvars: usize, rank: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(0..rank, nvars).prop_map(move |axes| {
        axes.into_iter()
            .map(|a| (0..rank).map(|k| u32::from(k == a)).collect())
            .collect()
    })
}

fn monomial_ideal(nvars: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nvars, 3), 0..=4)
        .prop_map(move |gens| MonomialIdeal::new(nvars, gens.into_iter().filter(|m| !m.is_one())))
}

fn degrees_up_to(rank: usize, total: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|u: Vec<u64>| {
                let used: u64 = u.iter().sum();
                (0..=total - used).map(move |k| {
                    let mut v = u.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Numerator `N` times `(1 + u)`-shifts, read off by expanding `(1 + u)^b`.
fn shifted_coefficient(numerator: &[i64], k: usize) -> BigInt {
    numerator
        .iter()
        .enumerate()
        .map(|(b, c)| BigInt::from(*c) * binomial(b as u64, k as u64))
        .sum()
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * big(n - i) / big(i + 1))
}

fn factorial(k: usize) -> BigInt {
    (1..=k as u64).map(big).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn k_polynomial_counts_standard_monomials(
        (m, grading) in (1usize..=4).prop_flat_map(|n| (monomial_ideal(n), (1usize..=2).prop_flat_map(move |r| axis_grading(n, r)))),
    ) {
        let series = lib(k_polynomial(&m, &grading))?;
        for u in degrees_up_to(grading[0].len(), 8) {
            let count = lib(hilbert_function_value(&m, &grading, &u))?;
            prop_assert_eq!(series.coefficient(&u), big(count), "degree {:?}", u);
        }
    }

    #[test]
    fn hilbert_coefficient_reads_derivatives_at_one(numerator in prop::collection::vec(-5i64..=5, 1..=6), k in 0usize..=3) {
        // with denominator exponent 4 the coefficient at alpha = 3 - k takes k derivatives
        let terms = numerator.iter().enumerate().map(|(b, c)| (vec![b as u32], BigInt::from(*c)));
        let series = lib(MultigradedSeries::new(terms, vec![4]))?;
        let c = lib(series.hilbert_coefficient(&[3 - k as u32]))?.expect("alpha within range");
        let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        // k-th formal derivative of N, evaluated at 1
        let mut derivative = Polynomial::from_int_terms(
            1,
            &numerator.iter().enumerate().map(|(b, c)| (*c, [b as u32])).collect::<Vec<_>>().iter().map(|(c, e)| (*c, e.as_slice())).collect::<Vec<_>>(),
        );
        for _ in 0..k {
            derivative = derivative.partial_derivative(0);
        }
        let at_one = derivative.evaluate_var(0, &Rational::one()).constant_term();
        prop_assert_eq!(Rational::from_integer(factorial(k) * shifted_coefficient(&numerator, k)), at_one.clone());
        prop_assert_eq!(Rational::from_integer(factorial(k) * sign * c), at_one);
    }

    #[test]
    fn reduction_keeps_the_series(
        (m, grading) in (1usize..=4).prop_flat_map(|n| (monomial_ideal(n), (1usize..=2).prop_flat_map(move |r| axis_grading(n, r)))),
    ) {
        let series = lib(k_polynomial(&m, &grading))?;
        let reduced = series.reduce();
        for u in degrees_up_to(grading[0].len(), 6) {
            prop_assert_eq!(series.coefficient(&u), reduced.coefficient(&u));
        }
        for alpha in degrees_up_to(grading[0].len(), 3) {
            let alpha: Vec<u32> = alpha.into_iter().map(|a| a as u32).collect();
            let a = lib(series.hilbert_coefficient(&alpha))?.unwrap_or_default();
            let b = lib(reduced.hilbert_coefficient(&alpha))?.unwrap_or_default();
            prop_assert_eq!(a, b, "alpha {:?}", alpha);
        }
    }
}

/// Every point of `[lo, lo + 2]^rank`.
fn cube(rank: usize, lo: u64) -> Vec<Vec<u64>> {
    degrees_up_to(rank, 2 * rank as u64)
        .into_iter()
        .filter(|u| u.iter().all(|&k| k <= 2))
        .map(|u| u.into_iter().map(|k| k + lo).collect())
        .collect()
}

#[test]
fn hilbert_polynomial_matches_counts_past_the_numerator_degree() {
    let w = RingContext::new(&["w", "x", "y", "z"]).unwrap();
    let m = Ideal::maximal(&w);
    let curve = Ideal::parse(&w, &["x^2 - y*w", "x^3 - z*w^2"]).unwrap();
    let r = xyz();
    let quartic = jacobian_ideal(&r, &r.parse("x^4 + y^4 + z^4").unwrap()).unwrap();
    let z = RingContext::new(&["z_0", "z_1", "z_2"]).unwrap();
    let cubic = jacobian_ideal(&z, &z.parse("z_0^3 + z_1^3 + z_2^3 + z_0*z_1*z_2").unwrap()).unwrap();
    let uv = RingContext::new(&["u", "v", "s"]).unwrap();
    let parabola = LatticePolytope::new(vec![vec![0, 0], vec![1, 0], vec![0, 2]]).unwrap();
    let hom = |p: &LatticePolytope| Ideal::new(&uv, hom_ideal_polytope(p).unwrap().gens().iter().cloned()).unwrap();
    let cases = [
        vec![m.clone(), curve],
        vec![Ideal::maximal(&r), quartic],
        vec![Ideal::maximal(&z), cubic],
        vec![Ideal::maximal(&uv), hom(&parabola), hom(&parabola)],
    ];
    for ideals in cases {
        let series = mixed_series(&ideals, None).unwrap();
        let t_grading = series.t_grading();
        let rank = t_grading[0].len();
        let lo = series.series.numerator_degree();
        for u in cube(rank, lo) {
            let count = hilbert_function_value(&series.initial, &t_grading, &u).unwrap();
            assert_eq!(
                series.series.hilbert_polynomial_value(&u).unwrap(),
                big(count),
                "degree {u:?}"
            );
        }
    }
}

// Rees ideals

/// Two or three generators of degree at most three in `x, y, z`.
fn small_generators() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(
        prop::collection::vec((1i64..=2, prop::collection::vec(0u32..=1, 3)), 1..=2).prop_map(|terms| {
            let refs: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
            Polynomial::from_int_terms(3, &refs)
        }),
        2..=3,
    )
    .prop_map(|gens| {
        let mut seen = BTreeSet::new();
        gens.into_iter()
            .filter(|g| !g.is_zero() && seen.insert(format!("{g:?}")))
            .collect::<Vec<_>>()
    })
    .prop_filter("two distinct generators", |g| g.len() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn rees_ideal_invariants(lists in prop::collection::vec(small_generators(), 1..=2)) {
        let r = xyz();
        let ideals = lists.iter().map(|g| lib(Ideal::new(&r, g.clone()))).collect::<Result<Vec<_>, _>>()?;
        let rees = lib(multi_rees_ideal(&ReesSpec::new(ideals.clone())))?;
        let elim = lib(rees_ideal_by_elimination(&ReesSpec::new(ideals.clone())))?;
        prop_assert!(lib(rees.ideal().equals(elim.ideal()))?);
        prop_assert!(lib(rees.verify_kernel())?);

        // t-homogeneity, counted directly on exponents
        for g in rees.ideal().gens() {
            for (i, row) in rees.y_vars().iter().enumerate() {
                let degs: BTreeSet<u32> = g.terms().iter().map(|t| row.iter().map(|&v| t.mono.exponent(v)).sum()).collect();
                prop_assert!(degs.len() <= 1, "generator is not homogeneous in t_{}", i);
            }
        }

        // 2x2 minors of (Y_i; f_i) lie in the ideal
        for (i, row) in rees.generators().iter().enumerate() {
            for j in 0..row.len() {
                for k in j + 1..row.len() {
                    let yj = rees.ctx().var(rees.y_var(i, j));
                    let yk = rees.ctx().var(rees.y_var(i, k));
                    let n = rees.ctx().nvars() - r.nvars();
                    let minor = lib(row[j].extend(n).checked_mul(&yk))?.checked_sub(&lib(row[k].extend(n).checked_mul(&yj))?);
                    prop_assert!(lib(rees.ideal().contains(&minor))?);
                }
            }
        }

        // another generator as the nonzerodivisor gives the same ideal
        let last: Vec<Polynomial> = rees.generators().iter().map(|row| row[row.len() - 1].clone()).collect();
        let other = lib(multi_rees_ideal(&ReesSpec::with_nzds(ideals, last)))?;
        prop_assert!(lib(other.ideal().equals(rees.ideal()))?);
    }
}

// multiplicities

/// An `(x, y, z)`-primary monomial ideal: pure powers plus a few mixed terms.
fn primary_monomial_ideal() -> impl Strategy<Value = Ideal> {
    (
        prop::collection::vec(1u32..=3, 3),
        prop::collection::vec(monomial(3, 2), 0..=2),
    )
        .prop_map(|(powers, extra)| {
            let gens = powers
                .iter()
                .enumerate()
                .map(|(i, &e)| Monomial::var(3, i, e))
                .chain(extra.into_iter().filter(|m| !m.is_one()))
                .map(|m| Polynomial::monomial(Rational::one(), m));
            Ideal::new(&xyz(), gens).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn mixed_multiplicities_are_symmetric(a in primary_monomial_ideal(), b in primary_monomial_ideal(), i in 0u32..=2) {
        let m = Ideal::maximal(&xyz());
        let index = [2 - i, i, 0];
        let ab = lib(mixed_multiplicity(&[m.clone(), a.clone(), b.clone()], &index))?;
        let ba = lib(mixed_multiplicity(&[m, b, a], &[index[0], index[2], index[1]]))?;
        prop_assert_eq!(ab, ba);
    }
}

#[test]
fn maximal_ideal_has_multiplicity_one() {
    for d in 2..=4usize {
        let names: Vec<String> = (0..d).map(|i| format!("x_{i}")).collect();
        let r = RingContext::new(&names).unwrap();
        let m = Ideal::maximal(&r);
        assert_eq!(
            mixed_multiplicity(&[m.clone(), m], &[d as u32 - 1, 0]).unwrap(),
            BigInt::one(),
            "d = {d}"
        );
    }
}

fn small_polygon() -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::collection::vec(0i64..=2, 2), 3..=5).prop_filter_map("full-dimensional", |pts| {
        let p = LatticePolytope::new(pts).ok()?;
        hull_volume(&p).ok().filter(|v| !v.is_zero()).map(|_| p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn algebraic_mixed_volume_matches_the_oracle(p in small_polygon(), q in small_polygon(), v in prop::collection::vec(0i64..=1, 2)) {
        let pq = lib(m_mixed_volume(&[PolytopeInput::Points(p.clone()), PolytopeInput::Points(q.clone())]))?;
        prop_assert_eq!(&pq, &lib(mixed_volume_geometric(&[p.clone(), q.clone()]))?);
        let qp = lib(m_mixed_volume(&[PolytopeInput::Points(q.clone()), PolytopeInput::Points(p.clone())]))?;
        prop_assert_eq!(&pq, &qp);
        let moved = lib(m_mixed_volume(&[PolytopeInput::Points(lib(p.translate(&v))?), PolytopeInput::Points(q)]))?;
        prop_assert_eq!(&pq, &moved);
    }
}

#[test]
fn algebraic_diagonal_is_normalized_volume() {
    let square = LatticePolytope::new(vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let corner = LatticePolytope::new(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
    for (p, n) in [(square, 2usize), (corner, 3)] {
        let mv = m_mixed_volume(&vec![PolytopeInput::Points(p.clone()); n]).unwrap();
        let factorial: i64 = (1..=n as i64).product();
        assert_eq!(
            Rational::from_integer(mv),
            hull_volume(&p).unwrap() * rational(factorial)
        );
    }
}

/// Ternary cubics and quartics with an isolated singular point at the origin.
fn isolated_form() -> impl Strategy<Value = Polynomial> {
    (3u32..=4, prop::collection::vec(1i64..=3, 3)).prop_flat_map(|(d, lead)| {
        form(d).prop_map(move |extra| {
            let diagonal: Vec<(i64, Vec<u32>)> = (0..3)
                .map(|i| (lead[i], (0..3).map(|k| if k == i { d } else { 0 }).collect()))
                .collect();
            let refs: Vec<(i64, &[u32])> = diagonal.iter().map(|(c, e)| (*c, e.as_slice())).collect();
            Polynomial::from_int_terms(3, &refs).checked_add(&extra)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn sectional_milnor_numbers_agree_across_entry_points(f in isolated_form()) {
        let r = xyz();
        let jac = lib(jacobian_ideal(&r, &f))?;
        prop_assume!(lib(jac.is_primary_to_max_ideal())?);
        let mu = lib(sec_milnor_numbers(&r, &f))?;
        prop_assert_eq!(&mu[&0], &BigInt::one());
        let m = Ideal::maximal(&r);
        for i in 0..3u32 {
            let e = lib(mixed_multiplicity(&[m.clone(), jac.clone()], &[2 - i, i]))?;
            prop_assert_eq!(&mu[&(i as usize)], &e, "i = {}", i);
        }
        prop_assert_eq!(&lib(milnor_number_local(&r, &f))?, &mu[&3]);
        prop_assert_eq!(&big(lib(jac.k_dimension())?), &mu[&3]);

        // bounded by mixed volumes of the simplex and the Newton polytope of the partials
        let simplex = LatticePolytope::new(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let delta = lib(support_polytope_of_partials(&r, &f))?;
        for i in 0..3usize {
            let mut polys = vec![simplex.clone(); 2 - i];
            polys.extend(vec![delta.clone(); i]);
            let mv = lib(mixed_volume_geometric(&polys))?;
            prop_assert!(mu[&i] <= mv, "mu^({}) = {} exceeds MV = {}", i, mu[&i], mv);
        }
    }
}

// polytope oracle

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minkowski_sum_does_not_shrink_volume(
        (p, q) in (2usize..=3).prop_flat_map(|n| {
            let pts = move || prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=5);
            (pts(), pts())
        }),
    ) {
        let p = lib(LatticePolytope::new(p))?;
        let q = lib(LatticePolytope::new(q))?;
        let sum = lib(minkowski_sum(&p, &q))?;
        prop_assert!(lib(hull_volume(&sum))? >= lib(hull_volume(&p))?);
        prop_assert!(lib(hull_volume(&sum))? >= lib(hull_volume(&q))?);
    }
}
