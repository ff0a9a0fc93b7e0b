//! Mixed multiplicities from multigraded Hilbert series, and the quantities
//! built on them: mixed volumes, sectional Milnor numbers, Euler
//! characteristics of hypersurface complements, Rees-algebra multiplicities.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hilbert::{k_polynomial, Division, MultigradedSeries};
use crate::ideal::{Ideal, MonomialIdeal};
use crate::poly::{MonomialOrder, Polynomial, RingContext};
use crate::polytope::LatticePolytope;
use crate::rees::{multi_rees_ideal, validate_nonzerodivisor, ReesResult, ReesSpec};

/// Reduced Hilbert series of `⊕ I_0^{u_0} ⋯ I_r^{u_r} / I_0^{u_0+1} ⋯ I_r^{u_r}`
/// together with the ideal and grading it was read from.
#[derive(Clone, Debug)]
pub struct MixedSeries {
    pub rees: ReesResult,
    /// `L1 + I_0 S + K S`.
    pub fiber: Ideal,
    /// Initial ideal of `fiber` in grevlex.
    pub initial: MonomialIdeal,
    /// `(t; z)` grading: `Y_{i,j} ↦ e_i`, base variables `↦ z`.
    pub grading: Vec<Vec<u32>>,
    /// Reduced series in `t_0, ..., t_r`.
    pub series: MultigradedSeries,
}

impl MixedSeries {
    /// `e_α`, or zero when the series has no such coefficient.
    pub fn coefficient(&self, alpha: &[u32]) -> Result<BigInt> {
        Ok(self.series.hilbert_coefficient(alpha)?.unwrap_or_else(BigInt::zero))
    }

    /// The `t`-part of [`MixedSeries::grading`], with base variables degree 0.
    pub fn t_grading(&self) -> Vec<Vec<u32>> {
        self.grading.iter().map(|r| r[..r.len() - 1].to_vec()).collect()
    }
}

fn cost(p: &Polynomial) -> (u64, usize) {
    (p.total_degree().unwrap_or(0), p.len())
}

/// Nonzerodivisor for each ideal. Over a polynomial ring: the cheapest
/// generator. Over a quotient: the first of the generators,
/// their sum, or a small integer combination that passes the test.
pub fn choose_nonzerodivisors(ideals: &[Ideal]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(ideals.len());
    for (i, ideal) in ideals.iter().enumerate() {
        let ctx = ideal.ctx();
        let gens = ideal.gens();
        if gens.is_empty() {
            return Err(Error::GradeZero(i));
        }
        if ctx.is_polynomial_ring() {
            out.push(gens.iter().min_by_key(|g| cost(g)).unwrap().clone());
            continue;
        }
        let mut candidates: Vec<Polynomial> = gens.to_vec();
        let mut sum = ctx.zero();
        for g in gens {
            sum = &sum + g;
        }
        candidates.push(sum);
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                candidates.push(&gens[a] + &gens[b]);
            }
        }
        for k in 2..5i64 {
            let mut comb = ctx.zero();
            for (j, g) in gens.iter().enumerate() {
                comb = &comb + &g.scale(&crate::poly::Rational::from_integer(BigInt::from(k).pow(j as u32)));
            }
            candidates.push(comb);
        }
        let mut found = None;
        for c in candidates {
            if !c.is_zero() && validate_nonzerodivisor(ctx, &c)? {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => out.push(c),
            None => return Err(Error::GradeZero(i)),
        }
    }
    Ok(out)
}

fn is_maximal_ideal(ideal: &Ideal) -> bool {
    let n = ideal.ctx().nvars();
    ideal.gens().len() == n && (0..n).all(|v| ideal.gens().contains(&ideal.ctx().var(v)))
}

/// Runs the Rees / initial-ideal / K-polynomial pipeline for `(I_0, ..., I_r)`.
/// Validation of the hypotheses is left to the callers.
pub fn mixed_series(ideals: &[Ideal], nzds: Option<Vec<Polynomial>>) -> Result<MixedSeries> {
    let nzds = match nzds {
        Some(v) => v,
        None => choose_nonzerodivisors(ideals)?,
    };
    let rees = multi_rees_ideal(&ReesSpec::with_nzds(ideals.to_vec(), nzds))?;
    let ctx = rees.ctx().clone();
    let n = rees.base().nvars();
    let extra = ctx.nvars() - n;
    let r1 = ideals.len();
    let base_vars: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = Vec::new();
    if is_maximal_ideal(&ideals[0]) {
        // L1 + m S: drop every term containing a base variable
        for g in rees.ideal().gens() {
            gens.push(g.substitute_zero(&base_vars));
        }
        gens.extend(base_vars.iter().map(|&v| ctx.var(v)));
    } else {
        gens.extend(rees.ideal().gens().iter().cloned());
        gens.extend(ideals[0].gens().iter().map(|g| g.extend(extra)));
    }
    let fiber = Ideal::new(&ctx, gens)?;
    let initial = fiber.initial_ideal(&MonomialOrder::Grevlex)?;
    let mut grading = vec![vec![0u32; r1 + 1]; ctx.nvars()];
    for row in grading.iter_mut().take(n) {
        row[r1] = 1;
    }
    for (i, vars) in rees.y_vars().iter().enumerate() {
        for &v in vars {
            grading[v][i] = 1;
        }
    }
    let mut series = k_polynomial(&initial, &grading)?;
    for _ in 0..n {
        series = match series.divide_out_exact(r1) {
            Division::Divided(s) => s,
            Division::NotDivisible => return Err(Error::NotPrimary),
        };
    }
    let series = series.specialize_to_one(r1)?.reduce();
    Ok(MixedSeries {
        rees,
        fiber,
        initial,
        grading,
        series,
    })
}

/// Checks the hypotheses in order: index length, positive grades, index sum,
/// primality of `I_0`. Returns `dim R`.
fn validate_query(ideals: &[Ideal], index: &[u32]) -> Result<i64> {
    if ideals.is_empty() {
        return Err(Error::InvalidArgument("no ideals given".into()));
    }
    if index.len() != ideals.len() {
        return Err(Error::IndexLength {
            expected: ideals.len(),
            found: index.len(),
        });
    }
    let ctx = ideals[0].ctx();
    for ideal in ideals {
        if ideal.ctx().names() != ctx.names() || ideal.ctx().quotient_gens() != ctx.quotient_gens() {
            return Err(Error::Mismatch("ideals live in different rings".into()));
        }
    }
    for (i, ideal) in ideals.iter().enumerate() {
        if !ideal.has_positive_grade()? {
            return Err(Error::GradeZero(i));
        }
    }
    let d = Ideal::zero(ctx).krull_dimension()?;
    if d < 1 {
        return Err(Error::DimensionTooSmall(d));
    }
    let total: u64 = index.iter().map(|&a| a as u64).sum();
    if total as i64 != d - 1 {
        return Err(Error::IndexSum {
            expected: d - 1,
            found: total,
        });
    }
    if !ideals[0].is_primary_to_max_ideal()? {
        return Err(Error::NotPrimary);
    }
    Ok(d)
}

/// `e_a(I_0 | I_1, ..., I_r)`.
pub fn mixed_multiplicity(ideals: &[Ideal], index: &[u32]) -> Result<BigInt> {
    mixed_multiplicity_with(ideals, index, None)
}

/// As [`mixed_multiplicity`], with explicit nonzerodivisors `a_i ∈ I_i`.
pub fn mixed_multiplicity_with(ideals: &[Ideal], index: &[u32], nzds: Option<Vec<Polynomial>>) -> Result<BigInt> {
    validate_query(ideals, index)?;
    mixed_series(ideals, nzds)?.coefficient(index)
}

/// Every `e_α` with `|α| = dim R - 1`, keyed by `α`.
pub fn all_mixed_multiplicities(ideals: &[Ideal]) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    let ctx = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("no ideals given".into()))?
        .ctx();
    let d = Ideal::zero(ctx).krull_dimension()?;
    if d < 1 {
        return Err(Error::DimensionTooSmall(d));
    }
    let first = compositions((d - 1) as u32, ideals.len());
    validate_query(ideals, &first[0])?;
    let series = mixed_series(ideals, None)?;
    let mut out = BTreeMap::new();
    for alpha in first {
        let c = series.coefficient(&alpha)?;
        out.insert(alpha, c);
    }
    Ok(out)
}

/// All vectors of `parts` naturals summing to `total`.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[pos] = a;
            rec(pos + 1, left - a, cur, out);
        }
    }
    if parts > 0 {
        rec(0, total, &mut cur, &mut out);
    }
    out
}

/// `(x^p x_{n+1}^{D - |p|})` in `Q[x_1, ..., x_{n+1}]`, `D` the largest `|p|`.
pub fn hom_ideal_polytope(p: &LatticePolytope) -> Result<Ideal> {
    hom_ideal_polytope_to(p, None)
}

/// Same as [`hom_ideal_polytope`] with `D` given; `D` below the largest `|p|`
/// is an error.
pub fn hom_ideal_polytope_to(p: &LatticePolytope, degree: Option<u64>) -> Result<Ideal> {
    let n = p.dim();
    if p.points().iter().flatten().any(|&c| c < 0) {
        return Err(Error::Polytope("coordinates must be nonnegative".into()));
    }
    let names: Vec<String> = (1..=n + 1).map(|i| format!("x_{i}")).collect();
    let ctx = RingContext::new(&names)?;
    hom_ideal_polytope_in(&ctx, p, degree)
}

fn hom_ideal_polytope_in(ctx: &Arc<RingContext>, p: &LatticePolytope, degree: Option<u64>) -> Result<Ideal> {
    let n = p.dim();
    if ctx.nvars() != n + 1 {
        return Err(Error::Mismatch("ring does not match the polytope dimension".into()));
    }
    let deg = |q: &Vec<i64>| q.iter().map(|&c| c as u64).sum::<u64>();
    let top = degree.unwrap_or_else(|| p.points().iter().map(deg).max().unwrap_or(0));
    let mut gens = Vec::new();
    for q in p.points() {
        let mut exps: Vec<u32> = Vec::with_capacity(n + 1);
        for &c in q {
            exps.push(u32::try_from(c).map_err(|_| Error::ExponentOverflow)?);
        }
        exps.push(0);
        let mono = Polynomial::monomial(crate::poly::Rational::one(), crate::poly::Monomial::new(exps));
        gens.push(mono.homogenize(n, top)?);
    }
    Ideal::new(ctx, gens)
}

/// A mixed-volume argument: a point set or an already homogenized ideal.
#[derive(Clone, Debug)]
pub enum PolytopeInput {
    Points(LatticePolytope),
    Ideal(Ideal),
}

/// `MV_n(Q_1, ..., Q_n) = e_{(0,1,...,1)}(m | I_1, ..., I_n)`.
pub fn m_mixed_volume(inputs: &[PolytopeInput]) -> Result<BigInt> {
    let n = inputs.len();
    if n == 0 {
        return Err(Error::Polytope("no polytopes given".into()));
    }
    let names: Vec<String> = (1..=n + 1).map(|i| format!("x_{i}")).collect();
    let ctx = RingContext::new(&names)?;
    let mut ideals = vec![Ideal::maximal(&ctx)];
    for inp in inputs {
        let ideal = match inp {
            PolytopeInput::Points(p) => {
                if p.dim() != n {
                    return Err(Error::Polytope(format!(
                        "{n} polytopes are needed in dimension {n}, got one of dimension {}",
                        p.dim()
                    )));
                }
                if p.points().iter().flatten().any(|&c| c < 0) {
                    return Err(Error::Polytope("coordinates must be nonnegative".into()));
                }
                hom_ideal_polytope_in(&ctx, p, None)?
            }
            PolytopeInput::Ideal(i) => {
                if i.ctx().nvars() != n + 1 {
                    return Err(Error::Mismatch("ideal lives in a ring of the wrong dimension".into()));
                }
                Ideal::new(&ctx, i.gens().iter().cloned())?
            }
        };
        ideals.push(ideal);
    }
    let mut index = vec![1u32; n + 1];
    index[0] = 0;
    mixed_multiplicity(&ideals, &index)
}

/// `n! MV_n(P_1, ..., P_n)`, the leading coefficient of the mixed Ehrhart
/// polynomial when one polytope is given per dimension.
pub fn mixed_ehrhart_leading_coeff(polys: &[LatticePolytope]) -> Result<BigInt> {
    let n = polys.len();
    if polys.iter().any(|p| p.dim() != n) {
        return Err(Error::Unsupported(
            "only the case of n polytopes in dimension n is implemented".into(),
        ));
    }
    let inputs: Vec<PolytopeInput> = polys.iter().cloned().map(PolytopeInput::Points).collect();
    let mv = m_mixed_volume(&inputs)?;
    let mut fact = BigInt::one();
    for k in 2..=n {
        fact *= k;
    }
    Ok(fact * mv)
}

/// Partial derivatives of `f`.
pub fn jacobian_ideal(ctx: &Arc<RingContext>, f: &Polynomial) -> Result<Ideal> {
    Ideal::new(ctx, (0..ctx.nvars()).map(|v| f.partial_derivative(v)))
}

/// Whether every variable is nilpotent modulo `I` (so `I` is primary to the
/// ideal of the origin), decided by repeated squaring of normal forms.
pub fn is_primary_to_origin(ideal: &Ideal) -> Result<bool> {
    if ideal.is_unit()? {
        return Ok(false);
    }
    let gb = ideal.grevlex_basis()?;
    let bound = match gb.initial_ideal().standard_monomial_count() {
        Some(c) => c,
        None => return Ok(false),
    };
    for v in 0..ideal.ctx().nvars() {
        // x^(2^k) with 2^k >= dim_Q R/I is zero iff x is nilpotent
        let mut p = gb.normal_form(&ideal.ctx().var(v));
        let mut power = 1u64;
        while power < bound.max(1) && !p.is_zero() {
            p = gb.normal_form(&p.checked_mul(&p)?);
            power *= 2;
        }
        if !p.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sectional Milnor numbers `μ^{(0)}, ..., μ^{(n)}` of `f` at the origin.
pub fn sec_milnor_numbers(ctx: &Arc<RingContext>, f: &Polynomial) -> Result<BTreeMap<usize, BigInt>> {
    if !ctx.is_polynomial_ring() {
        return Err(Error::Unsupported(
            "sectional Milnor numbers need a polynomial ring".into(),
        ));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let n = ctx.nvars();
    let jac = jacobian_ideal(ctx, f)?;
    if !is_primary_to_origin(&jac)? {
        return Err(Error::JacobianNotPrimary);
    }
    let series = mixed_series(&[Ideal::maximal(ctx), jac.clone()], None)?;
    let mut out = BTreeMap::new();
    for i in 0..n {
        out.insert(i, series.coefficient(&[(n - 1 - i) as u32, i as u32])?);
    }
    out.insert(n, BigInt::from(jac.k_dimension()?));
    Ok(out)
}

/// Milnor number at the origin as `dim_Q R / (J : (J : m^∞))`, which needs
/// only an isolated singularity at the origin.
pub fn milnor_number_local(ctx: &Arc<RingContext>, f: &Polynomial) -> Result<BigInt> {
    Ok(milnor_local_parts(ctx, f)?.milnor)
}

/// Intermediate ideals of the local Milnor computation.
#[derive(Clone, Debug)]
pub struct LocalMilnor {
    pub jacobian: Ideal,
    /// `J : m^∞`.
    pub saturation: Ideal,
    /// `J : (J : m^∞)`.
    pub local_part: Ideal,
    pub milnor: BigInt,
}

pub fn milnor_local_parts(ctx: &Arc<RingContext>, f: &Polynomial) -> Result<LocalMilnor> {
    if !ctx.is_polynomial_ring() {
        return Err(Error::Unsupported("Milnor numbers need a polynomial ring".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let m = Ideal::maximal(ctx);
    let jac = jacobian_ideal(ctx, f)?;
    let mut singular = jac.gens().to_vec();
    singular.push(f.clone());
    let sing = Ideal::new(ctx, singular)?;
    // V(f, J) may contain the origin and nothing else
    if !sing.saturate(&m)?.is_unit()? {
        return Err(Error::NotIsolated);
    }
    let saturation = jac.saturate(&m)?;
    let local_part = jac.colon(&saturation)?;
    let milnor = BigInt::from(local_part.k_dimension()?);
    Ok(LocalMilnor {
        jacobian: jac,
        saturation,
        local_part,
        milnor,
    })
}

/// Exponent vectors of the monomials of all `∂h/∂z_i`, with `z_0` set to 1.
pub fn support_polytope_of_partials(ctx: &Arc<RingContext>, h: &Polynomial) -> Result<LatticePolytope> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !h.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut pts: Vec<Vec<i64>> = Vec::new();
    for v in 0..ctx.nvars() {
        for t in h.partial_derivative(v).terms() {
            pts.push(t.mono.exponents()[1..].iter().map(|&e| e as i64).collect());
        }
    }
    LatticePolytope::new(pts)
}

/// `χ(P^{N-1} \ V(h)) = Σ_{i=0}^{N-1} (-1)^i e_i(m | J(h))` for `h` in `N`
/// variables; the top term `μ^{(N)}` does not enter.
pub fn euler_characteristic_complement(ctx: &Arc<RingContext>, h: &Polynomial) -> Result<BigInt> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !h.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ctx.nvars();
    let jac = jacobian_ideal(ctx, h)?;
    if !jac.is_primary_to_max_ideal()? {
        return Err(Error::JacobianNotPrimary);
    }
    let series = mixed_series(&[Ideal::maximal(ctx), jac], None)?;
    let mut chi = BigInt::zero();
    for i in 0..n {
        let e = series.coefficient(&[(n - 1 - i) as u32, i as u32])?;
        if i % 2 == 0 {
            chi += e;
        } else {
            chi -= e;
        }
    }
    Ok(chi)
}

/// `e(R(I_1, ..., I_r)) = Σ_{|α| = d-1} e_α(m | I_1, ..., I_r)`.
pub fn rees_algebra_multiplicity(ideals: &[Ideal]) -> Result<BigInt> {
    let ctx = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("no ideals given".into()))?
        .ctx();
    let mut family = vec![Ideal::maximal(ctx)];
    family.extend(ideals.iter().cloned());
    let all = all_mixed_multiplicities(&family)?;
    Ok(all.values().sum())
}
