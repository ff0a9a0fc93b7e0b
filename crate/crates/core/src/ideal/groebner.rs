//! Buchberger's algorithm over the rationals.
//!
//! Internally polynomials are kept as primitive integer polynomials and
//! reduced fraction-free, which avoids rational gcds on every coefficient
//! operation. Pairs are selected by sugar degree, then by the smallest lcm in
//! the active order; lex and elimination orders use the smallest lcm alone.
//! The Gebauer–Möller update applies the product and chain criteria.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Term};

#[derive(Clone, Debug)]
pub(crate) struct ITerm {
    pub mono: Monomial,
    pub coeff: BigInt,
}

pub(crate) type IPoly = Vec<ITerm>;

#[inline]
fn mask(m: &Monomial) -> u64 {
    let mut out = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            out |= 1 << (i & 63);
        }
    }
    out
}

/// Clears denominators, makes the content 1 and sorts by `order`.
pub(crate) fn to_ipoly(p: &Polynomial, order: &MonomialOrder) -> IPoly {
    let prim = p.primitive(order);
    let mut terms: IPoly = prim
        .terms()
        .iter()
        .map(|t| ITerm {
            mono: t.mono.clone(),
            coeff: t.coeff.numer().clone(),
        })
        .collect();
    terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
    terms
}

pub(crate) fn from_ipoly(nvars: usize, p: &IPoly) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        p.iter()
            .map(|t| (Rational::from_integer(t.coeff.clone()), t.mono.clone())),
    )
}

fn make_primitive(p: &mut IPoly) {
    if p.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for t in p.iter() {
        g = g.gcd(&t.coeff);
        if g.is_one() {
            break;
        }
    }
    if p[0].coeff.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in p.iter_mut() {
            t.coeff = &t.coeff / &g;
        }
    }
}

/// `fa * a[from..] + fb * q * b[1..]`, merged in `order`.
fn combine(order: &MonomialOrder, a: &[ITerm], fa: &BigInt, b: &[ITerm], fb: &BigInt, q: &Monomial) -> Result<IPoly> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let scale_a = !fa.is_one();
    let mut bi = b.iter().map(|t| -> Result<ITerm> {
        Ok(ITerm {
            mono: t.mono.checked_mul(q)?,
            coeff: &t.coeff * fb,
        })
    });
    let mut cur_b = bi.next().transpose()?;
    let mut ai = a.iter();
    let mut cur_a = ai.next();
    loop {
        match (cur_a, cur_b.take()) {
            (None, None) => break,
            (Some(ta), None) => {
                out.push(ITerm {
                    mono: ta.mono.clone(),
                    coeff: if scale_a { &ta.coeff * fa } else { ta.coeff.clone() },
                });
                cur_a = ai.next();
            }
            (None, Some(tb)) => {
                out.push(tb);
                cur_b = bi.next().transpose()?;
            }
            (Some(ta), Some(tb)) => match order.cmp(&ta.mono, &tb.mono) {
                Ordering::Greater => {
                    out.push(ITerm {
                        mono: ta.mono.clone(),
                        coeff: if scale_a { &ta.coeff * fa } else { ta.coeff.clone() },
                    });
                    cur_a = ai.next();
                    cur_b = Some(tb);
                }
                Ordering::Less => {
                    out.push(tb);
                    cur_b = bi.next().transpose()?;
                }
                Ordering::Equal => {
                    let c = if scale_a {
                        &ta.coeff * fa + tb.coeff
                    } else {
                        &ta.coeff + tb.coeff
                    };
                    if !c.is_zero() {
                        out.push(ITerm {
                            mono: tb.mono,
                            coeff: c,
                        });
                    }
                    cur_a = ai.next();
                    cur_b = bi.next().transpose()?;
                }
            },
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub poly: IPoly,
    pub lm: Monomial,
    pub mask: u64,
    pub sugar: u64,
}

pub(crate) fn elem(poly: IPoly) -> Elem {
    Elem::new(poly, 0)
}

/// S-polynomial of two basis elements, leading terms cancelled.
pub(crate) fn s_polynomial(order: &MonomialOrder, f: &Elem, g: &Elem) -> Result<IPoly> {
    let lcm = f.lm.lcm(&g.lm);
    spoly_parts(order, f, g, &lcm)
}

fn spoly_parts(order: &MonomialOrder, f: &Elem, g: &Elem, lcm: &Monomial) -> Result<IPoly> {
    let qf = lcm.div(&f.lm).expect("lcm");
    let qg = lcm.div(&g.lm).expect("lcm");
    let (a, b) = (&f.poly[0].coeff, &g.poly[0].coeff);
    let gcd = a.gcd(b);
    let fa = b / &gcd;
    let fb = -(a / &gcd);
    let scaled_f: IPoly = f.poly[1..]
        .iter()
        .map(|t| -> Result<ITerm> {
            Ok(ITerm {
                mono: t.mono.checked_mul(&qf)?,
                coeff: &t.coeff * &fa,
            })
        })
        .collect::<Result<_>>()?;
    combine(order, &scaled_f, &BigInt::one(), &g.poly[1..], &fb, &qg)
}

impl Elem {
    fn new(poly: IPoly, sugar: u64) -> Self {
        let lm = poly[0].mono.clone();
        let mask = mask(&lm);
        Elem { poly, lm, mask, sugar }
    }
}

/// Reducer lookup over a set of basis elements.
pub(crate) struct Reducers<'a> {
    elems: Vec<&'a Elem>,
}

impl<'a> Reducers<'a> {
    pub fn new(elems: impl IntoIterator<Item = &'a Elem>) -> Self {
        Reducers {
            elems: elems.into_iter().collect(),
        }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<&'a Elem> {
        let mm = mask(m);
        let mut best: Option<&'a Elem> = None;
        for e in &self.elems {
            if e.mask & !mm == 0 && e.lm.divides(m) {
                match best {
                    Some(b) if b.poly.len() <= e.poly.len() => {}
                    _ => best = Some(e),
                }
            }
        }
        best
    }
}

/// Fraction-free reduction. With `full` the tail is reduced as well; the
/// result is primitive (defined up to a nonzero rational factor).
pub(crate) fn reduce(order: &MonomialOrder, p: IPoly, reducers: &Reducers<'_>, full: bool) -> Result<IPoly> {
    let mut rest = p;
    let mut start = 0usize;
    let mut done: IPoly = Vec::new();
    let mut steps = 0usize;
    while start < rest.len() {
        let lead = &rest[start];
        match reducers.find(&lead.mono) {
            None => {
                if !full {
                    done.extend(rest.drain(start..));
                    break;
                }
                done.push(rest[start].clone());
                start += 1;
            }
            Some(r) => {
                let q = lead.mono.div(&r.lm).expect("divisible");
                let a = &r.poly[0].coeff;
                let c = &lead.coeff;
                let g = a.gcd(c);
                let fa = a / &g;
                let fc = -(c / &g);
                rest = combine(order, &rest[start + 1..], &fa, &r.poly[1..], &fc, &q)?;
                start = 0;
                if !fa.is_one() {
                    for t in done.iter_mut() {
                        t.coeff *= &fa;
                    }
                }
                steps += 1;
                if steps.is_multiple_of(32) {
                    let mut tmp = std::mem::take(&mut done);
                    let n_done = tmp.len();
                    tmp.append(&mut rest);
                    make_primitive(&mut tmp);
                    rest = tmp.split_off(n_done);
                    done = tmp;
                }
            }
        }
    }
    make_primitive(&mut done);
    Ok(done)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
    alive: bool,
}

struct Buchberger<'o> {
    order: &'o MonomialOrder,
    basis: Vec<Elem>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    queue: BTreeMap<(u64, u64), Vec<usize>>,
}

impl<'o> Buchberger<'o> {
    fn new(order: &'o MonomialOrder) -> Self {
        Buchberger {
            order,
            basis: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            queue: BTreeMap::new(),
        }
    }

    fn push_pair(&mut self, pair: Pair) {
        // orders that are not degree-first: sugar there tends to build huge
        // intermediate elements, so pairs go by smallest lcm alone
        let key = match self.order {
            MonomialOrder::Lex | MonomialOrder::Elimination(_) => (0, 0),
            _ => (pair.sugar, self.order.degree(&pair.lcm)),
        };
        let idx = self.pairs.len();
        self.pairs.push(pair);
        self.queue.entry(key).or_default().push(idx);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        loop {
            let mut entry = self.queue.first_entry()?;
            let bucket = entry.get_mut();
            bucket.retain(|&k| self.pairs[k].alive);
            if bucket.is_empty() {
                entry.remove();
                continue;
            }
            let mut best = 0;
            for k in 1..bucket.len() {
                let (a, b) = (&self.pairs[bucket[k]].lcm, &self.pairs[bucket[best]].lcm);
                if self.order.cmp(a, b) == Ordering::Less {
                    best = k;
                }
            }
            let idx = bucket.swap_remove(best);
            if bucket.is_empty() {
                entry.remove();
            }
            self.pairs[idx].alive = false;
            return Some(self.pairs[idx].clone());
        }
    }

    /// Gebauer–Möller update for the new element `h`.
    fn insert(&mut self, elem: Elem) {
        let h = self.basis.len();
        let lm_h = elem.lm.clone();
        let sugar_h = elem.sugar;
        self.basis.push(elem);
        self.active.push(true);

        // candidate pairs (i, h)
        let mut cands: Vec<(usize, Monomial, bool, u64)> = Vec::new();
        for i in 0..h {
            if !self.active[i] {
                continue;
            }
            let lm_i = &self.basis[i].lm;
            let lcm = lm_i.lcm(&lm_h);
            let coprime = lm_i.is_coprime(&lm_h);
            let (dl, di, dh) = (
                self.order.degree(&lcm),
                self.order.degree(lm_i),
                self.order.degree(&lm_h),
            );
            let si = self.basis[i].sugar + (dl - di);
            let sh = sugar_h + (dl - dh);
            cands.push((i, lcm, coprime, si.max(sh)));
        }

        // chain criterion on old pairs
        for p in self.pairs.iter_mut() {
            if !p.alive {
                continue;
            }
            if lm_h.divides(&p.lcm) {
                let lcm_ih = self.basis[p.i].lm.lcm(&lm_h);
                let lcm_jh = self.basis[p.j].lm.lcm(&lm_h);
                if lcm_ih != p.lcm && lcm_jh != p.lcm {
                    p.alive = false;
                }
            }
        }

        // criterion M: drop (i,h) when some other lcm(j,h) properly divides lcm(i,h)
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && keep[b] && cands[b].1.divides(&cands[a].1) && cands[b].1 != cands[a].1 {
                    keep[a] = false;
                    break;
                }
            }
        }
        // criterion F: among equal lcms keep one, preferring a coprime pair
        let mut groups: Vec<(Monomial, Vec<usize>)> = Vec::new();
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            match groups.iter_mut().find(|(l, _)| *l == cands[a].1) {
                Some((_, v)) => v.push(a),
                None => groups.push((cands[a].1.clone(), vec![a])),
            }
        }
        for (_, members) in groups {
            // if any member satisfies the product criterion, the whole class is redundant
            if members.iter().any(|&a| cands[a].2) {
                continue;
            }
            let a = members[0];
            let (i, ref lcm, _, sugar) = cands[a];
            self.push_pair(Pair {
                i,
                j: h,
                lcm: lcm.clone(),
                sugar,
                alive: true,
            });
        }

        // elements whose leading monomial is divisible by lm_h are superfluous
        for i in 0..h {
            if self.active[i] && lm_h.divides(&self.basis[i].lm) {
                self.active[i] = false;
            }
        }
    }

    fn spoly(&self, pair: &Pair) -> Result<IPoly> {
        spoly_parts(self.order, &self.basis[pair.i], &self.basis[pair.j], &pair.lcm)
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.pop_pair() {
            let s = self.spoly(&pair)?;
            if s.is_empty() {
                continue;
            }
            let reducers = Reducers::new(
                self.basis
                    .iter()
                    .zip(self.active.iter())
                    .filter(|(_, a)| **a)
                    .map(|(e, _)| e),
            );
            let r = reduce(self.order, s, &reducers, true)?;
            if r.is_empty() {
                continue;
            }
            let lm_deg = self.order.degree(&r[0].mono);
            let sugar = pair.sugar.max(lm_deg);
            if r[0].mono.is_one() {
                // unit ideal
                self.basis.clear();
                self.active.clear();
                self.pairs.clear();
                self.queue.clear();
                self.insert(Elem::new(r, 0));
                return Ok(());
            }
            self.insert(Elem::new(r, sugar));
        }
        Ok(())
    }

    /// Minimal, fully interreduced basis.
    fn finish(self) -> Result<Vec<IPoly>> {
        let order = self.order;
        let mut elems: Vec<Elem> = self
            .basis
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(e, _)| e)
            .collect();
        // drop elements whose lead is divisible by another lead
        let mut keep = vec![true; elems.len()];
        for a in 0..elems.len() {
            for b in 0..elems.len() {
                if a != b && keep[b] && elems[b].lm.divides(&elems[a].lm) && (elems[b].lm != elems[a].lm || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut kept: Vec<Elem> = Vec::new();
        for (e, k) in elems.drain(..).zip(keep) {
            if k {
                kept.push(e);
            }
        }
        let mut out = Vec::with_capacity(kept.len());
        for a in 0..kept.len() {
            let reducers = Reducers::new(kept.iter().enumerate().filter(|(b, _)| *b != a).map(|(_, e)| e));
            let mut p = reduce_tail_exact(order, &kept[a].poly, &reducers)?;
            make_primitive(&mut p);
            out.push(p);
        }
        Ok(out)
    }
}

/// Reduces everything below the leading term, keeping the leading term.
fn reduce_tail_exact(order: &MonomialOrder, p: &IPoly, reducers: &Reducers<'_>) -> Result<IPoly> {
    let mut done: IPoly = vec![p[0].clone()];
    let mut rest: IPoly = p[1..].to_vec();
    let mut start = 0;
    while start < rest.len() {
        let lead = &rest[start];
        match reducers.find(&lead.mono) {
            None => {
                done.push(rest[start].clone());
                start += 1;
            }
            Some(r) => {
                let q = lead.mono.div(&r.lm).expect("divisible");
                let a = &r.poly[0].coeff;
                let c = &lead.coeff;
                let g = a.gcd(c);
                let fa = a / &g;
                let fc = -(c / &g);
                rest = combine(order, &rest[start + 1..], &fa, &r.poly[1..], &fc, &q)?;
                start = 0;
                if !fa.is_one() {
                    for t in done.iter_mut() {
                        t.coeff *= &fa;
                    }
                }
            }
        }
    }
    Ok(done)
}

/// Reduced Gröbner basis of the given generators, as primitive integer
/// polynomials sorted by decreasing leading monomial.
pub(crate) fn groebner_ints(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<IPoly>> {
    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_ipoly(g, order))
        .collect();
    if inputs.is_empty() {
        return Ok(Vec::new());
    }
    if inputs.iter().any(|p| p[0].mono.is_one()) {
        return Ok(vec![vec![ITerm {
            mono: inputs[0][0].mono.div(&inputs[0][0].mono).unwrap(),
            coeff: BigInt::one(),
        }]]);
    }
    if inputs.iter().all(|p| p.len() == 1) {
        let monos: Vec<Monomial> = inputs.iter().map(|p| p[0].mono.clone()).collect();
        let mut min = minimalize(monos);
        min.sort_by(|a, b| order.cmp(b, a));
        return Ok(min
            .into_iter()
            .map(|m| {
                vec![ITerm {
                    mono: m,
                    coeff: BigInt::one(),
                }]
            })
            .collect());
    }
    // cheap inter-reduction of the input: process smaller leads first
    inputs.sort_by(|a, b| order.cmp(&a[0].mono, &b[0].mono).then(a.len().cmp(&b.len())));
    let mut bb = Buchberger::new(order);
    for p in inputs {
        let reducers = Reducers::new(
            bb.basis
                .iter()
                .zip(bb.active.iter())
                .filter(|(_, a)| **a)
                .map(|(e, _)| e),
        );
        let sugar = p.iter().map(|t| order.degree(&t.mono)).max().unwrap_or(0);
        let r = reduce(order, p, &reducers, true)?;
        if r.is_empty() {
            continue;
        }
        if r[0].mono.is_one() {
            return Ok(vec![r]);
        }
        bb.insert(Elem::new(r, sugar));
    }
    bb.run()?;
    let mut out = bb.finish()?;
    out.sort_by(|a, b| order.cmp(&b[0].mono, &a[0].mono));
    Ok(out)
}

/// Minimal generators of the monomial ideal generated by `monos`.
pub(crate) fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by_key(|m| m.degree());
    monos.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Exact normal form over the rationals with respect to a monic basis.
pub(crate) fn normal_form_rational(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let nvars = p.nvars();
    let leads: Vec<(Monomial, Vec<Term>)> = basis
        .iter()
        .map(|g| {
            let mut terms = g.terms().to_vec();
            terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
            (terms[0].mono.clone(), terms)
        })
        .collect();
    let mut rest: Vec<Term> = p.terms().to_vec();
    rest.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
    let mut done: Vec<(Rational, Monomial)> = Vec::new();
    while !rest.is_empty() {
        let lead = rest[0].clone();
        let found = leads.iter().find(|(lm, _)| lm.divides(&lead.mono));
        match found {
            None => {
                done.push((lead.coeff, lead.mono));
                rest.remove(0);
            }
            Some((lm, terms)) => {
                let q = lead.mono.div(lm).unwrap();
                let c = &lead.coeff / &terms[0].coeff;
                let sub: Vec<Term> = terms
                    .iter()
                    .map(|t| Term {
                        coeff: -(&t.coeff * &c),
                        mono: t.mono.checked_mul(&q).expect("exponent overflow"),
                    })
                    .collect();
                rest = merge_terms(order, &rest, &sub);
            }
        }
    }
    Polynomial::from_terms(nvars, done)
}

fn merge_terms(order: &MonomialOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = if i == a.len() {
            Ordering::Less
        } else if j == b.len() {
            Ordering::Greater
        } else {
            order.cmp(&a[i].mono, &b[j].mono)
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].coeff + &b[j].coeff;
                if !c.is_zero() {
                    out.push(Term {
                        coeff: c,
                        mono: a[i].mono.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_cancels() {
        let o = MonomialOrder::Grevlex;
        let a = vec![ITerm {
            mono: Monomial::new(vec![1, 0]),
            coeff: 2.into(),
        }];
        let b = [
            ITerm {
                mono: Monomial::new(vec![1, 1]),
                coeff: 1.into(),
            },
            ITerm {
                mono: Monomial::new(vec![1, 0]),
                coeff: 1.into(),
            },
        ];
        let r = combine(
            &o,
            &a,
            &BigInt::one(),
            &b[1..],
            &BigInt::from(-2),
            &Monomial::new(vec![0, 0]),
        )
        .unwrap();
        assert!(r.is_empty());
    }
}
