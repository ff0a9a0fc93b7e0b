//! Ideals in `Q[x]/K`: Gröbner bases and the ideal operations built on them.
//!
//! Every basis computation works in the ambient polynomial ring with the
//! quotient generators appended, so an `Ideal` always stands for `I + K`.

pub(crate) mod groebner;
mod monomial_ideal;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingContext};

use groebner::{from_ipoly, groebner_ints, reduce, to_ipoly, Elem, IPoly, Reducers};
pub use monomial_ideal::MonomialIdeal;

/// Common weighted degree of all terms, if there is one.
fn weighted_degree(p: &Polynomial, weights: &[u32]) -> Option<u64> {
    let mut deg = None;
    for t in p.terms() {
        let d: u64 = t
            .mono
            .exponents()
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum();
        match deg {
            None => deg = Some(d),
            Some(prev) if prev != d => return None,
            _ => {}
        }
    }
    Some(deg.unwrap_or(0))
}

/// Saturation of a weighted homogeneous ideal by the variable `v`: basis in
/// weighted revlex with `v` moved last, then strip the powers of `v`.
fn saturate_by_variable(gens: &[Polynomial], weights: &[u32], v: usize) -> Result<Vec<Polynomial>> {
    let n = weights.len();
    // position of each variable after moving `v` to the end
    let map: Vec<usize> = (0..n)
        .map(|i| match i.cmp(&v) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => n - 1,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect();
    let mut inverse = vec![0; n];
    for (i, &j) in map.iter().enumerate() {
        inverse[j] = i;
    }
    let w: Vec<u32> = inverse.iter().map(|&i| weights[i]).collect();
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.embed(n, &map)).collect();
    let gb = GroebnerBasis::compute(n, &moved, &MonomialOrder::WeightedRevlex(w))?;
    let mut out = Vec::with_capacity(gb.len());
    for g in gb.polys() {
        let k = g.terms().iter().map(|t| t.mono.exponents()[n - 1]).min().unwrap_or(0);
        let mut e = vec![0; n];
        e[n - 1] = k;
        let stripped = g
            .div_monomial(&Monomial::new(e))
            .ok_or_else(|| Error::Internal("power of the last variable".into()))?;
        out.push(stripped.embed(n, &inverse));
    }
    Ok(out)
}

/// Reduced Gröbner basis for one monomial order.
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    polys: Vec<Polynomial>,
    elems: Vec<Elem>,
}

impl GroebnerBasis {
    /// Reduced basis of the given generators.
    pub fn compute(nvars: usize, gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::Mismatch("generator from another ring".into()));
            }
        }
        let ints = groebner_ints(gens, order)?;
        Ok(GroebnerBasis::from_ints(nvars, ints, order))
    }

    fn from_ints(nvars: usize, ints: Vec<IPoly>, order: &MonomialOrder) -> GroebnerBasis {
        let polys = ints.iter().map(|p| from_ipoly(nvars, p).monic(order)).collect();
        let elems = ints.into_iter().map(groebner::elem).collect();
        GroebnerBasis {
            order: order.clone(),
            nvars,
            polys,
            elems,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Monic basis elements, sorted by decreasing leading monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].lm.is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm.clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.leading_monomials())
    }

    /// Remainder of the division algorithm; no term is divisible by a
    /// leading monomial of the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        groebner::normal_form_rational(p, &self.polys, &self.order)
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let reducers = Reducers::new(self.elems.iter());
        Ok(reduce(&self.order, to_ipoly(p, &self.order), &reducers, false)?.is_empty())
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn is_closed(&self) -> Result<bool> {
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let s = groebner::s_polynomial(&self.order, &self.elems[i], &self.elems[j])?;
                if s.is_empty() {
                    continue;
                }
                let reducers = Reducers::new(self.elems.iter());
                if !reduce(&self.order, s, &reducers, false)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.polys.iter()).finish()
    }
}

/// Ideal of `ctx`, with a per-order cache of reduced bases of `gens + K`.
pub struct Ideal {
    ctx: Arc<RingContext>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache poisoned").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ctx.show(g)).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}

fn fresh_name(ctx: &RingContext, stem: &str) -> String {
    let mut name = stem.to_string();
    while ctx.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

impl Ideal {
    /// Zero generators and repeats are dropped; order is otherwise kept.
    pub fn new(ctx: &Arc<RingContext>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.nvars() != ctx.nvars() {
                return Err(Error::Mismatch(format!(
                    "generator has {} variables, ring has {}",
                    g.nvars(),
                    ctx.nvars()
                )));
            }
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            gens: out,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Parses each generator in the ring's variables.
    pub fn parse(ctx: &Arc<RingContext>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| ctx.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ctx, polys)
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Ideal {
        Ideal::new(ctx, []).expect("empty generator list")
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Ideal {
        Ideal::new(ctx, [ctx.one()]).expect("unit")
    }

    /// The ideal generated by all variables.
    pub fn maximal(ctx: &Arc<RingContext>) -> Ideal {
        Ideal::new(ctx, ctx.vars()).expect("variables")
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators followed by the quotient generators.
    pub fn gens_with_quotient(&self) -> Vec<Polynomial> {
        let mut all = self.gens.clone();
        for k in self.ctx.quotient_gens() {
            if !all.contains(k) {
                all.push(k.clone());
            }
        }
        all
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ctx.names() != other.ctx.names() || self.ctx.quotient_gens() != other.ctx.quotient_gens() {
            return Err(Error::Mismatch("ideals live in different rings".into()));
        }
        Ok(())
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().expect("cache poisoned").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(GroebnerBasis::compute(
            self.ctx.nvars(),
            &self.gens_with_quotient(),
            order,
        )?);
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(order.clone(), gb.clone());
        Ok(gb)
    }

    pub fn grevlex_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(&MonomialOrder::Grevlex)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(self.grevlex_basis()?.normal_form(p))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.nvars() != self.ctx.nvars() {
            return Err(Error::Mismatch("polynomial from another ring".into()));
        }
        self.grevlex_basis()?.reduces_to_zero(p)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of `I + K` and `J + K`, by comparing reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        let (a, b) = (self.grevlex_basis()?, other.grevlex_basis()?);
        Ok(a.polys() == b.polys())
    }

    /// Whether every generator lies in `K`.
    pub fn is_zero(&self) -> Result<bool> {
        self.is_contained_in_quotient()
    }

    fn is_contained_in_quotient(&self) -> Result<bool> {
        if self.gens.is_empty() {
            return Ok(true);
        }
        let k = Ideal::new(&self.ctx, [])?;
        for g in &self.gens {
            if !k.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.grevlex_basis()?.is_unit())
    }

    /// Generators of `(I + K) ∩ Q[x \ vars]`, from the block-order basis.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let order = MonomialOrder::elimination(vars.iter().copied());
        let gb = self.groebner_basis(&order)?;
        let kept = gb
            .polys()
            .iter()
            .filter(|g| g.support_vars().iter().all(|v| !vars.contains(v)))
            .cloned();
        Ideal::new(&self.ctx, kept)
    }

    /// Runs `build` in `ctx` extended by one fresh variable, eliminates that
    /// variable and returns the result in `ctx`.
    fn with_tag<F>(&self, stem: &str, build: F) -> Result<Ideal>
    where
        F: FnOnce(&Arc<RingContext>, &Polynomial) -> Result<Vec<Polynomial>>,
    {
        let n = self.ctx.nvars();
        let name = fresh_name(&self.ctx, stem);
        let rank = self.ctx.grading_rank();
        let big = self.ctx.ambient().extend(&[name], vec![vec![0; rank]])?;
        let tag = big.var(n);
        let gens = build(&big, &tag)?;
        let ext = Ideal::new(&big, gens)?;
        let elim = ext.eliminate(&[n])?;
        Ideal::new(&self.ctx, elim.gens.iter().map(|g| g.truncate_vars(n)))
    }

    /// `(I + K) ∩ (J + K)` via `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let a = self.gens_with_quotient();
        let b = other.gens_with_quotient();
        if a.is_empty() || b.is_empty() {
            return Ideal::new(&self.ctx, self.ctx.quotient_gens().to_vec());
        }
        self.with_tag("t", |big, t| {
            let one_minus_t = &big.one() - t;
            let mut gens = Vec::with_capacity(a.len() + b.len());
            for g in &a {
                gens.push(t.checked_mul(&g.extend(1))?);
            }
            for g in &b {
                gens.push(one_minus_t.checked_mul(&g.extend(1))?);
            }
            Ok(gens)
        })
    }

    /// `I : g`, computed as `((I + K) ∩ (g)) / g`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.nvars() != self.ctx.nvars() {
            return Err(Error::Mismatch("polynomial from another ring".into()));
        }
        if self.contains(g)? {
            return Ok(Ideal::unit(&self.ctx));
        }
        // the intersection must be taken in the ambient ring so that its
        // elements are genuine multiples of g
        let amb = self.lift_to_ambient()?;
        let principal = Ideal::new(amb.ctx(), [g.clone()])?;
        let meet = amb.intersect(&principal)?;
        let mut quotients = Vec::new();
        for h in &meet.gens {
            match h.div_exact(g) {
                Some(q) => quotients.push(q),
                None => return Err(Error::Internal("intersection element not divisible".into())),
            }
        }
        quotients.extend(self.ctx.quotient_gens().iter().cloned());
        Ideal::new(&self.ctx, quotients)?.trimmed_reduced()
    }

    /// `I : J`; intersects the colons by the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            if self.contains(g)? {
                continue;
            }
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ctx)))
    }

    /// `I : h^∞` by a single elimination of `u` from `(I + K, 1 − u·h)`.
    pub fn saturate_element(&self, h: &Polynomial) -> Result<Ideal> {
        if h.nvars() != self.ctx.nvars() {
            return Err(Error::Mismatch("polynomial from another ring".into()));
        }
        if h.is_zero() {
            return Ok(Ideal::unit(&self.ctx));
        }
        if h.is_constant() {
            return Ideal::new(&self.ctx, self.gens_with_quotient());
        }
        let gens = self.gens_with_quotient();
        let sat = self.with_tag("u", |big, u| {
            let mut out: Vec<Polynomial> = gens.iter().map(|g| g.extend(1)).collect();
            out.push(&big.one() - &u.checked_mul(&h.extend(1))?);
            Ok(out)
        })?;
        sat.trimmed_reduced()
    }

    /// `I : h^∞` for an ideal and `h` homogeneous with respect to positive
    /// `weights`, via reverse lexicographic bases with the saturating variable
    /// last. Falls back to [`Ideal::saturate_element`] on inhomogeneous input.
    pub fn saturate_weighted(&self, weights: &[u32], h: &Polynomial) -> Result<Ideal> {
        let n = self.ctx.nvars();
        if h.nvars() != n {
            return Err(Error::Mismatch("polynomial from another ring".into()));
        }
        let gens = self.gens_with_quotient();
        let homogeneous = weights.len() == n
            && weights.iter().all(|&w| w > 0)
            && weighted_degree(h, weights).is_some()
            && gens.iter().all(|g| weighted_degree(g, weights).is_some());
        if !homogeneous || h.is_zero() || h.is_constant() {
            return self.saturate_element(h);
        }
        let out = if h.is_monomial() {
            let mut cur = gens;
            for v in h.support_vars().into_iter().rev() {
                cur = saturate_by_variable(&cur, weights, v)?;
            }
            cur
        } else {
            // adjoin v = h, saturate by v, then put h back
            let d = weighted_degree(h, weights).unwrap_or(0);
            let d = u32::try_from(d).map_err(|_| Error::ExponentOverflow)?;
            let mut w = weights.to_vec();
            w.push(d);
            let mut big: Vec<Polynomial> = gens.iter().map(|g| g.extend(1)).collect();
            big.push(&Polynomial::var(n + 1, n) - &h.extend(1));
            let sat = saturate_by_variable(&big, &w, n)?;
            let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
            images.push(h.clone());
            let mut back = Vec::with_capacity(sat.len());
            for g in &sat {
                back.push(g.substitute(&images)?);
            }
            back
        };
        // the stripped basis already generates the saturation; a grevlex
        // re-reduction would undo the gain for non-standard weights
        Ideal::new(&self.ctx, out.into_iter().map(|g| g.monic(&MonomialOrder::Grevlex)))
    }

    /// `I : J^∞` as the intersection of the saturations by the generators.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let s = self.saturate_element(g)?;
            acc = Some(match acc {
                None => s,
                Some(prev) => prev.intersect(&s)?.trimmed_reduced()?,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => Ok(Ideal::unit(&self.ctx)),
        }
    }

    /// `I : h^∞` by iterating `I : h` until the chain stabilizes.
    pub fn saturate_by_colons(&self, h: &Polynomial) -> Result<Ideal> {
        let mut cur = Ideal::new(&self.ctx, self.gens_with_quotient())?;
        loop {
            let next = cur.colon_element(h)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Replaces generators by the reduced grevlex basis (with `K` removed when
    /// redundant), for compact intermediate results.
    fn trimmed_reduced(&self) -> Result<Ideal> {
        let gb = self.grevlex_basis()?;
        let out = Ideal::new(&self.ctx, gb.polys().to_vec())?;
        out.cache
            .lock()
            .expect("cache poisoned")
            .insert(MonomialOrder::Grevlex, gb);
        Ok(out)
    }

    /// Drops each generator that lies in the ideal of the others.
    pub fn trim(&self) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        let mut i = gens.len();
        while i > 0 {
            i -= 1;
            let others: Vec<Polynomial> = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let rest = Ideal::new(&self.ctx, others.clone())?;
            if rest.contains(&gens[i])? {
                gens = others;
            }
        }
        Ideal::new(&self.ctx, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ctx, gens)?.trim()
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ideal::new(&self.ctx, self.raw_product(&other.gens)?)?.trim()
    }

    fn raw_product(&self, other: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.len());
        for a in &self.gens {
            for b in other {
                let p = a.checked_mul(b)?;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(gens)
    }

    pub fn power(&self, k: i64) -> Result<Ideal> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        let mut acc = Ideal::unit(&self.ctx);
        for _ in 0..k {
            acc = Ideal::new(&self.ctx, acc.raw_product(&self.gens)?)?;
        }
        acc.trim()
    }

    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        Ok(self.groebner_basis(order)?.initial_ideal())
    }

    /// Krull dimension of `Q[x]/(I + K)`; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        Ok(self.initial_ideal(&MonomialOrder::Grevlex)?.dimension())
    }

    /// Vector-space dimension of `Q[x]/(I + K)`.
    pub fn k_dimension(&self) -> Result<u64> {
        self.initial_ideal(&MonomialOrder::Grevlex)?
            .standard_monomial_count()
            .ok_or(Error::NotZeroDimensional)
    }

    /// Whether the initial ideal contains a pure power of every variable.
    pub fn is_primary_to_max_ideal(&self) -> Result<bool> {
        let m = self.initial_ideal(&MonomialOrder::Grevlex)?;
        Ok(!m.is_unit() && m.is_artinian())
    }

    /// Whether `(K : I) = K`, i.e. `I` has no annihilator in `Q[x]/K`.
    pub fn has_positive_grade(&self) -> Result<bool> {
        let k = Ideal::new(&self.ctx, [])?;
        if self.ctx.is_polynomial_ring() {
            return Ok(!self.is_contained_in_quotient()?);
        }
        if k.is_unit()? {
            return Ok(false);
        }
        let col = k.colon(self)?;
        col.equals(&k)
    }

    /// Whether `a` is a nonzerodivisor of `Q[x]/K`.
    pub fn is_nonzerodivisor(ctx: &Arc<RingContext>, a: &Polynomial) -> Result<bool> {
        if ctx.is_polynomial_ring() {
            return Ok(!a.is_zero());
        }
        let k = Ideal::new(ctx, [])?;
        if k.contains(a)? {
            return Ok(false);
        }
        let col = k.colon_element(a)?;
        col.equals(&k)
    }

    /// Same generators with the quotient generators dropped from the context.
    pub fn lift_to_ambient(&self) -> Result<Ideal> {
        Ideal::new(&self.ctx.ambient(), self.gens_with_quotient())
    }

    /// `Q[x]/(K + I)` as a new ring context.
    pub fn quotient_ring(&self) -> Result<Arc<RingContext>> {
        self.ctx.quotient(&self.gens)
    }

    /// Generators rendered with the ring's names, sorted.
    pub fn sorted_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.gens.iter().map(|g| self.ctx.show(g)).collect();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<RingContext> {
        RingContext::new(names).unwrap()
    }

    #[test]
    fn twisted_cubic_lex_basis() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2 - y", "x^3 - z"]).unwrap();
        let gb = i.groebner_basis(&MonomialOrder::Lex).unwrap();
        let shown: Vec<String> = gb.polys().iter().map(|g| r.show(g)).collect();
        let expect: Vec<String> = ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]
            .iter()
            .map(|s| r.show(&r.parse(s).unwrap()))
            .collect();
        assert_eq!(shown, expect);
        assert!(gb.is_closed().unwrap());
        assert!(i.contains(&r.parse("y^3 - z^2").unwrap()).unwrap());
        let init = i.initial_ideal(&MonomialOrder::Lex).unwrap();
        assert_eq!(init.gens().len(), 4);
    }

    #[test]
    fn trivial_bases() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(i.grevlex_basis().unwrap().len(), 2);
        assert!(Ideal::zero(&r).grevlex_basis().unwrap().is_empty());
        assert!(!Ideal::parse(&r, &["x^2"])
            .unwrap()
            .contains(&r.parse("x").unwrap())
            .unwrap());
        let a = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Ideal::parse(&r, &["y", "x + y"]).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn normal_form_division() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - y"]).unwrap();
        assert_eq!(
            i.normal_form(&r.parse("x^2*y").unwrap()).unwrap(),
            r.parse("y^2").unwrap()
        );
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(m.normal_form(&r.one()).unwrap(), r.one());
    }

    #[test]
    fn elimination() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
        let e = i.eliminate(&[0]).unwrap();
        assert!(e.contains(&r.parse("z^2 - y^3").unwrap()).unwrap());
        let x = r.var(0);
        let images = vec![x.clone(), x.checked_pow(2).unwrap(), x.checked_pow(3).unwrap()];
        for g in e.gens() {
            assert!(g.substitute(&images).unwrap().is_zero());
        }
        let r2 = ring(&["x", "y"]);
        let e2 = Ideal::parse(&r2, &["x", "y"]).unwrap().eliminate(&[0]).unwrap();
        assert!(e2.equals(&Ideal::parse(&r2, &["y"]).unwrap()).unwrap());
        let e3 = Ideal::parse(&r2, &["x - 1"]).unwrap().eliminate(&[0]).unwrap();
        assert!(e3.gens().is_empty());
    }

    #[test]
    fn colon_and_saturation() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let c = i.colon(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(c.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
        assert!(i.colon(&Ideal::unit(&r)).unwrap().equals(&i).unwrap());
        let j = Ideal::parse(&r, &["x^2*y", "x*y^2"]).unwrap();
        let s = j.saturate_element(&r.var(0)).unwrap();
        assert!(s.equals(&Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        assert!(j.saturate_by_colons(&r.var(0)).unwrap().equals(&s).unwrap());
        assert!(j.saturate_element(&r.one()).unwrap().equals(&j).unwrap());
    }

    #[test]
    fn grade_zero_workflow_in_quotient() {
        let base = ring(&["w", "x", "y", "z"]);
        let q = base
            .quotient(&[base.parse("w*x").unwrap(), base.parse("y*z").unwrap()])
            .unwrap();
        let n = Ideal::parse(&q, &["w", "y"]).unwrap();
        assert!(!n.has_positive_grade().unwrap());
        assert!(Ideal::is_nonzerodivisor(&q, &q.parse("w + x").unwrap()).unwrap());
        assert!(!Ideal::is_nonzerodivisor(&q, &q.parse("w").unwrap()).unwrap());
        let l = Ideal::zero(&q).saturate(&n).unwrap();
        let t = l.quotient_ring().unwrap();
        assert_eq!(Ideal::zero(&t).krull_dimension().unwrap(), 2);
    }

    #[test]
    fn products_and_powers() {
        let r = ring(&["x", "y"]);
        let m = Ideal::maximal(&r);
        assert_eq!(m.power(2).unwrap().gens().len(), 3);
        assert_eq!(m.power(-1).unwrap_err(), Error::NegativePower(-1));
        let p = Ideal::parse(&r, &["x"])
            .unwrap()
            .product(&Ideal::parse(&r, &["y"]).unwrap())
            .unwrap();
        assert_eq!(p.gens(), &[r.parse("x*y").unwrap()]);
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(Ideal::zero(&r).krull_dimension().unwrap(), 3);
        assert_eq!(Ideal::unit(&r).krull_dimension().unwrap(), -1);
        let cubes = Ideal::parse(&r, &["4*x^3", "4*y^3", "4*z^3"]).unwrap();
        assert_eq!(cubes.k_dimension().unwrap(), 27);
        assert!(cubes.is_primary_to_max_ideal().unwrap());
        let r2 = ring(&["x", "y"]);
        assert_eq!(Ideal::parse(&r2, &["x"]).unwrap().krull_dimension().unwrap(), 1);
        assert_eq!(
            Ideal::parse(&r2, &["x"]).unwrap().k_dimension(),
            Err(Error::NotZeroDimensional)
        );
        assert!(!Ideal::parse(&r2, &["x"]).unwrap().is_primary_to_max_ideal().unwrap());
    }
}
