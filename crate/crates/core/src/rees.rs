//! Defining ideals of multi-Rees algebras `R[I_1 t_1, ..., I_s t_s]`.
//!
//! The kernel of `Y_{i,j} ↦ f_{i,j} T_i` is the ideal of 2×2 minors
//! `Y_{i,j} f_{i,j'} - Y_{i,j'} f_{i,j}` saturated by `h = ∏ a_i`, where each
//! `a_i ∈ I_i` is a nonzerodivisor of `R`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{DegreeOf, MonomialOrder, Multidegree, Polynomial, Rational, RingContext};

/// Input family with optional nonzerodivisors, one per ideal.
#[derive(Clone, Debug)]
pub struct ReesSpec {
    pub ideals: Vec<Ideal>,
    pub nzds: Option<Vec<Polynomial>>,
}

impl ReesSpec {
    pub fn new(ideals: Vec<Ideal>) -> Self {
        ReesSpec { ideals, nzds: None }
    }

    pub fn with_nzds(ideals: Vec<Ideal>, nzds: Vec<Polynomial>) -> Self {
        ReesSpec {
            ideals,
            nzds: Some(nzds),
        }
    }
}

/// Defining ideal together with the extended ring and its grading.
#[derive(Clone, Debug)]
pub struct ReesResult {
    base: Arc<RingContext>,
    ctx: Arc<RingContext>,
    ideal: Ideal,
    generators: Vec<Vec<Polynomial>>,
    y_vars: Vec<Vec<usize>>,
    internal_degree_meaningful: bool,
}

impl ReesResult {
    pub fn base(&self) -> &Arc<RingContext> {
        &self.base
    }

    /// Ring `R[Y]` (with `K` carried over), graded by `(e_i; deg f_{i,j})`.
    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The cleaned generator lists `f_{i,j}` the `Y` variables stand for.
    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    /// Variable index of `Y_{i,j}` in [`ReesResult::ctx`].
    pub fn y_var(&self, i: usize, j: usize) -> usize {
        self.y_vars[i][j]
    }

    pub fn y_vars(&self) -> &[Vec<usize>] {
        &self.y_vars
    }

    /// Flat `(i, j)` pairs in the order of the `Y` variables (`X_k` is entry `k`).
    pub fn flat_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.y_vars.iter().enumerate() {
            for j in 0..row.len() {
                out.push((i, j));
            }
        }
        out
    }

    /// False when some `f_{i,j}` is inhomogeneous, in which case the last
    /// degree coordinate only records total degrees.
    pub fn internal_degree_meaningful(&self) -> bool {
        self.internal_degree_meaningful
    }

    /// Degree of each generator of the defining ideal. When a generator is
    /// not homogeneous in the last coordinate, that coordinate is the largest
    /// term degree.
    pub fn degrees(&self) -> Vec<Multidegree> {
        self.ideal
            .gens()
            .iter()
            .map(|g| match self.ctx.multidegree(g) {
                DegreeOf::Homogeneous(d) => d,
                DegreeOf::Inhomogeneous => {
                    let mut best: Option<Vec<u64>> = None;
                    for t in g.terms() {
                        let d = self.ctx.monomial_degree(&t.mono).0;
                        best = Some(match best {
                            None => d,
                            Some(mut b) => {
                                let last = b.len() - 1;
                                b[last] = b[last].max(d[last]);
                                b
                            }
                        });
                    }
                    Multidegree(best.unwrap_or_default())
                }
            })
            .collect()
    }

    /// Generators rendered with `Y_{i,j}` replaced by the flat names `X_k`.
    pub fn flat_strings(&self) -> Vec<String> {
        let mut names: Vec<String> = self.ctx.names().to_vec();
        for (k, (i, j)) in self.flat_indices().into_iter().enumerate() {
            names[self.y_vars[i][j]] = format!("X_{k}");
        }
        self.ideal
            .gens()
            .iter()
            .map(|g| g.display(&names).to_string())
            .collect()
    }

    /// Checks that every generator maps to zero under `Y_{i,j} ↦ f_{i,j} T_i`
    /// modulo `K`.
    pub fn verify_kernel(&self) -> Result<bool> {
        let n = self.base.nvars();
        let s = self.generators.len();
        let t_names: Vec<String> = (0..s).map(|i| format!("T_{i}")).collect();
        let target = self.base.ambient().extend(&t_names, vec![vec![1]; s])?;
        let modulus = Ideal::new(&target, self.base.quotient_gens().iter().map(|k| k.extend(s)))?;
        let mut images: Vec<Polynomial> = (0..n).map(|v| target.var(v)).collect();
        for (i, row) in self.generators.iter().enumerate() {
            for f in row {
                images.push(f.extend(s).checked_mul(&target.var(n + i))?);
            }
        }
        for g in self.ideal.gens() {
            let img = g.substitute(&images)?;
            if !modulus.contains(&img)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether `a` is a nonzerodivisor of `ctx`, i.e. `(K : a) = K`.
pub fn validate_nonzerodivisor(ctx: &Arc<RingContext>, a: &Polynomial) -> Result<bool> {
    Ideal::is_nonzerodivisor(ctx, a)
}

struct Prepared {
    base: Arc<RingContext>,
    generators: Vec<Vec<Polynomial>>,
}

fn prepare(ideals: &[Ideal]) -> Result<Prepared> {
    let first = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("at least one ideal is required".into()))?;
    let base = first.ctx().clone();
    let k = Ideal::zero(&base);
    let mut generators = Vec::with_capacity(ideals.len());
    for (i, ideal) in ideals.iter().enumerate() {
        if ideal.ctx().names() != base.names() || ideal.ctx().quotient_gens() != base.quotient_gens() {
            return Err(Error::Mismatch("ideals live in different rings".into()));
        }
        let mut row: Vec<Polynomial> = Vec::new();
        for g in ideal.gens() {
            if row.contains(g) {
                continue;
            }
            if !base.is_polynomial_ring() && k.contains(g)? {
                continue;
            }
            row.push(g.clone());
        }
        if row.is_empty() || !ideal.has_positive_grade()? {
            return Err(Error::GradeZero(i));
        }
        generators.push(row);
    }
    Ok(Prepared { base, generators })
}

/// Ring `x..., Y_{i}_{j}...` graded by `x ↦ (0; 1)`, `Y_{i,j} ↦ (e_i; deg f_{i,j})`.
fn extended_ring(
    base: &RingContext,
    generators: &[Vec<Polynomial>],
) -> Result<(Arc<RingContext>, Vec<Vec<usize>>, bool)> {
    let s = generators.len();
    let n = base.nvars();
    let mut names: Vec<String> = base.names().to_vec();
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|_| {
            let mut r = vec![0; s + 1];
            r[s] = 1;
            r
        })
        .collect();
    let mut y_vars = Vec::with_capacity(s);
    let mut meaningful = true;
    for (i, row) in generators.iter().enumerate() {
        let mut idx = Vec::with_capacity(row.len());
        for (j, f) in row.iter().enumerate() {
            let mut name = format!("Y_{i}_{j}");
            while names.contains(&name) {
                name.insert(0, '_');
            }
            idx.push(names.len());
            names.push(name);
            let mut r = vec![0; s + 1];
            r[i] = 1;
            r[s] = u32::try_from(f.total_degree().unwrap_or(0)).map_err(|_| Error::ExponentOverflow)?;
            if !f.is_homogeneous() {
                meaningful = false;
            }
            rows.push(r);
        }
        y_vars.push(idx);
    }
    let extra = names.len() - n;
    let ctx = RingContext::with_grading(&names, rows)?;
    let quotient: Vec<Polynomial> = base.quotient_gens().iter().map(|g| g.extend(extra)).collect();
    let ctx = if quotient.is_empty() {
        ctx
    } else {
        ctx.quotient(&quotient)?
    };
    Ok((ctx, y_vars, meaningful))
}

/// Picks the nonzerodivisors: validated user input, or the first generator of
/// each ideal over a polynomial ring.
fn choose_nzds(p: &Prepared, ideals: &[Ideal], nzds: Option<&[Polynomial]>) -> Result<Vec<Polynomial>> {
    match nzds {
        None => {
            if !p.base.is_polynomial_ring() {
                return Err(Error::MissingNonzerodivisors);
            }
            Ok(p.generators.iter().map(|row| row[0].clone()).collect())
        }
        Some(list) => {
            if list.len() != ideals.len() {
                return Err(Error::InvalidArgument(format!(
                    "{} nonzerodivisors for {} ideals",
                    list.len(),
                    ideals.len()
                )));
            }
            for (a, ideal) in list.iter().zip(ideals) {
                if a.nvars() != p.base.nvars() {
                    return Err(Error::Mismatch("nonzerodivisor from another ring".into()));
                }
                if !ideal.contains(a)? {
                    return Err(Error::NonzerodivisorNotInIdeal(p.base.show(a)));
                }
                if !validate_nonzerodivisor(&p.base, a)? {
                    return Err(Error::NotNonzerodivisor(p.base.show(a)));
                }
            }
            Ok(list.to_vec())
        }
    }
}

/// The minors `Y_{i,j} f_{i,j'} - Y_{i,j'} f_{i,j}` in the extended ring.
fn minors(
    ctx: &RingContext,
    base_n: usize,
    generators: &[Vec<Polynomial>],
    y_vars: &[Vec<usize>],
) -> Result<Vec<Polynomial>> {
    let extra = ctx.nvars() - base_n;
    let mut out = Vec::new();
    for (row, idx) in generators.iter().zip(y_vars) {
        for j in 0..row.len() {
            for jj in j + 1..row.len() {
                let a = ctx.var(idx[j]).checked_mul(&row[jj].extend(extra))?;
                let b = ctx.var(idx[jj]).checked_mul(&row[j].extend(extra))?;
                out.push(&a - &b);
            }
        }
    }
    Ok(out)
}

/// Positive weights on `x` making every generator (and `K`) homogeneous when
/// such a grading is easy to find, extended by `Y_{i,j} ↦ 1 + w(f_{i,j})` so
/// the minors stay homogeneous. Falls back to all ones.
fn saturation_weights(ctx: &RingContext, base: &RingContext, generators: &[Vec<Polynomial>]) -> Vec<u32> {
    let n = base.nvars();
    let polys: Vec<&Polynomial> = generators.iter().flatten().chain(base.quotient_gens()).collect();
    let w = base_weights(n, &polys).unwrap_or_else(|| vec![1; n]);
    let wdeg = |f: &Polynomial| -> u64 {
        f.terms()
            .first()
            .map(|t| {
                t.mono
                    .exponents()
                    .iter()
                    .zip(&w)
                    .map(|(&e, &k)| e as u64 * k as u64)
                    .sum()
            })
            .unwrap_or(0)
    };
    let mut out = w.clone();
    for row in generators {
        // any shift per ideal keeps the minors homogeneous; keep the weights small
        let low = row.iter().map(wdeg).min().unwrap_or(0);
        for f in row {
            out.push(u32::try_from(wdeg(f) - low + 1).unwrap_or(u32::MAX));
        }
    }
    debug_assert_eq!(out.len(), ctx.nvars());
    out
}

/// The standard grading if it works, else the unique positive grading when the
/// homogeneity conditions leave exactly one degree of freedom.
fn base_weights(n: usize, polys: &[&Polynomial]) -> Option<Vec<u32>> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for f in polys {
        let Some(first) = f.terms().first() else { continue };
        for t in &f.terms()[1..] {
            let row: Vec<Rational> = (0..n)
                .map(|i| {
                    Rational::from_integer(BigInt::from(
                        t.mono.exponents()[i] as i64 - first.mono.exponents()[i] as i64,
                    ))
                })
                .collect();
            rows.push(row);
        }
    }
    if rows
        .iter()
        .all(|r| r.iter().fold(Rational::zero(), |a, b| a + b).is_zero())
    {
        return Some(vec![1; n]);
    }
    // row echelon form
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&k * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let mut v = vec![Rational::zero(); n];
    v[free[0]] = Rational::one();
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -rows[row][free[0]].clone();
    }
    let denom = v.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(denom.clone())).to_integer())
        .collect();
    let sign = if ints.iter().all(|x| x.is_positive()) {
        1
    } else if ints.iter().all(|x| x.is_negative()) {
        -1
    } else {
        return None;
    };
    let g = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    ints.iter().map(|x| (x * BigInt::from(sign) / &g).to_u32()).collect()
}

/// Defining ideal by saturating the minors with `h = ∏ a_i`.
pub fn multi_rees_ideal(spec: &ReesSpec) -> Result<ReesResult> {
    let p = prepare(&spec.ideals)?;
    let nzds = choose_nzds(&p, &spec.ideals, spec.nzds.as_deref())?;
    let (ctx, y_vars, meaningful) = extended_ring(&p.base, &p.generators)?;
    let extra = ctx.nvars() - p.base.nvars();
    let gens = minors(&ctx, p.base.nvars(), &p.generators, &y_vars)?;
    let weights = saturation_weights(&ctx, &p.base, &p.generators);
    let mut sat = Ideal::new(&ctx, gens)?;
    for a in &nzds {
        sat = sat.saturate_weighted(&weights, &a.extend(extra))?;
    }
    let ideal = strip_quotient(&sat)?;
    Ok(ReesResult {
        base: p.base,
        ctx,
        ideal,
        generators: p.generators,
        y_vars,
        internal_degree_meaningful: meaningful,
    })
}

/// Same ideal without the generators that merely restate `K`.
fn strip_quotient(ideal: &Ideal) -> Result<Ideal> {
    if ideal.ctx().is_polynomial_ring() {
        return Ok(ideal.clone());
    }
    let k = Ideal::zero(ideal.ctx());
    let mut kept = Vec::new();
    for g in ideal.gens() {
        let r = k.normal_form(g)?;
        if !r.is_zero() {
            kept.push(r.monic(&MonomialOrder::Grevlex));
        }
    }
    let out = Ideal::new(ideal.ctx(), kept)?;
    let gb = out.grevlex_basis()?;
    let mut reduced = Vec::new();
    for g in gb.polys() {
        if !k.contains(g)? {
            reduced.push(g.clone());
        }
    }
    let candidate = Ideal::new(ideal.ctx(), reduced)?;
    // keep whichever generating set is smaller; both give the same ideal
    Ok(if candidate.gens().len() <= out.gens().len() {
        candidate
    } else {
        out
    })
}

/// Kernel of `Y_{i,j} ↦ f_{i,j} T_i` by eliminating the `T` variables; only
/// over polynomial base rings.
pub fn rees_ideal_by_elimination(spec: &ReesSpec) -> Result<ReesResult> {
    let p = prepare(&spec.ideals)?;
    if !p.base.is_polynomial_ring() {
        return Err(Error::Unsupported(
            "the elimination route needs a polynomial base ring".into(),
        ));
    }
    let (ctx, y_vars, meaningful) = extended_ring(&p.base, &p.generators)?;
    let s = p.generators.len();
    let total = ctx.nvars();
    let extra = total - p.base.nvars();
    let t_names: Vec<String> = (0..s).map(|i| format!("__T_{i}")).collect();
    let rank = ctx.grading_rank();
    let big = ctx.extend(&t_names, vec![vec![0; rank]; s])?;
    let mut gens = Vec::new();
    for (i, (row, idx)) in p.generators.iter().zip(&y_vars).enumerate() {
        for (f, &y) in row.iter().zip(idx) {
            let ft = f.extend(extra + s).checked_mul(&big.var(total + i))?;
            gens.push(&big.var(y) - &ft);
        }
    }
    let t_idx: Vec<usize> = (total..total + s).collect();
    let elim = Ideal::new(&big, gens)?.eliminate(&t_idx)?;
    let ideal = Ideal::new(&ctx, elim.gens().iter().map(|g| g.truncate_vars(total)))?;
    Ok(ReesResult {
        base: p.base,
        ctx,
        ideal,
        generators: p.generators,
        y_vars,
        internal_degree_meaningful: meaningful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_ideal_in_two_variables() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let spec = ReesSpec::new(vec![i]);
        let sat = multi_rees_ideal(&spec).unwrap();
        let elim = rees_ideal_by_elimination(&spec).unwrap();
        let expect = Ideal::parse(sat.ctx(), &["y*Y_0_0 - x*Y_0_1"]).unwrap();
        assert!(sat.ideal().equals(&expect).unwrap());
        assert!(elim.ideal().equals(&expect).unwrap());
        assert!(sat.verify_kernel().unwrap());
    }

    #[test]
    fn principal_ideal_has_zero_kernel() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let spec = ReesSpec::new(vec![Ideal::parse(&r, &["x^2 + y"]).unwrap()]);
        assert!(multi_rees_ideal(&spec).unwrap().ideal().is_zero().unwrap());
        assert!(rees_ideal_by_elimination(&spec).unwrap().ideal().is_zero().unwrap());
    }

    #[test]
    fn nonzerodivisor_checks() {
        let base = RingContext::new(&["w", "x", "y", "z"]).unwrap();
        let q = base
            .quotient(&[base.parse("w*x").unwrap(), base.parse("y*z").unwrap()])
            .unwrap();
        assert!(validate_nonzerodivisor(&q, &q.parse("w + x").unwrap()).unwrap());
        assert!(!validate_nonzerodivisor(&q, &q.parse("w").unwrap()).unwrap());
        assert!(validate_nonzerodivisor(&base, &base.parse("w").unwrap()).unwrap());
        let m = Ideal::maximal(&q);
        assert_eq!(
            multi_rees_ideal(&ReesSpec::new(vec![m.clone()])).unwrap_err(),
            Error::MissingNonzerodivisors
        );
        let bad = ReesSpec::with_nzds(vec![m.clone()], vec![q.parse("w").unwrap()]);
        assert!(matches!(multi_rees_ideal(&bad), Err(Error::NotNonzerodivisor(_))));
        let outside = ReesSpec::with_nzds(vec![m], vec![q.parse("w + 1").unwrap()]);
        assert!(matches!(
            multi_rees_ideal(&outside),
            Err(Error::NonzerodivisorNotInIdeal(_))
        ));
        let n = Ideal::parse(&q, &["w", "y"]).unwrap();
        assert_eq!(
            multi_rees_ideal(&ReesSpec::with_nzds(vec![n], vec![q.parse("w").unwrap()])).unwrap_err(),
            Error::GradeZero(0)
        );
        assert!(matches!(
            rees_ideal_by_elimination(&ReesSpec::new(vec![Ideal::maximal(&q)])),
            Err(Error::Unsupported(_))
        ));
    }
}
