use crate::poly::Monomial;

use super::groebner::minimalize;

/// Monomial ideal kept as its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens = minimalize(gens.into_iter().collect());
        gens.sort_by(|a, b| {
            b.degree()
                .cmp(&a.degree())
                .then_with(|| b.exponents().cmp(a.exponents()))
        });
        gens.reverse();
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Smallest `e` with `x_var^e` in the ideal.
    pub fn pure_power(&self, var: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| match g.as_pure_power() {
                Some((v, e)) if v == var => Some(e),
                _ if g.is_one() => Some(0),
                _ => None,
            })
            .min()
    }

    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|v| self.pure_power(v).is_some())
    }

    /// Krull dimension of `k[x]/M`: variables minus the smallest set of
    /// variables meeting every generator's support. `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let supports: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support().collect()).collect();
        let mut best = self.nvars;
        let mut chosen = vec![false; self.nvars];
        min_hitting_set(&supports, &mut chosen, 0, &mut best);
        (self.nvars - best) as i64
    }

    /// Number of standard monomials, or `None` if infinite.
    pub fn standard_monomial_count(&self) -> Option<u64> {
        if !self.is_artinian() {
            return None;
        }
        if self.is_unit() {
            return Some(0);
        }
        let mut exps = vec![0u32; self.nvars];
        let mut count = 0u64;
        self.count_from(0, &mut exps, &mut count);
        Some(count)
    }

    fn count_from(&self, var: usize, exps: &mut Vec<u32>, count: &mut u64) {
        if var == self.nvars {
            *count += 1;
            return;
        }
        loop {
            let m = Monomial::new(exps.clone());
            if self.contains(&m) {
                break;
            }
            self.count_from(var + 1, exps, count);
            exps[var] += 1;
        }
        exps[var] = 0;
    }

    /// Standard monomials, in the enumeration order of the counter.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_artinian() {
            return None;
        }
        let mut out = Vec::new();
        if self.is_unit() {
            return Some(out);
        }
        let mut exps = vec![0u32; self.nvars];
        self.collect_from(0, &mut exps, &mut out);
        Some(out)
    }

    fn collect_from(&self, var: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == self.nvars {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        loop {
            if self.contains(&Monomial::new(exps.clone())) {
                break;
            }
            self.collect_from(var + 1, exps, out);
            exps[var] += 1;
        }
        exps[var] = 0;
    }

    /// `M : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| {
                let exps: Vec<u32> = g
                    .exponents()
                    .iter()
                    .zip(m.exponents())
                    .map(|(a, b)| a.saturating_sub(*b))
                    .collect();
                Monomial::new(exps)
            }),
        )
    }

    /// `M + (m)`.
    pub fn add(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }
}

fn min_hitting_set(supports: &[Vec<usize>], chosen: &mut Vec<bool>, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // first generator not yet hit, preferring the smallest support
    let open = supports
        .iter()
        .filter(|s| !s.iter().any(|&v| chosen[v]))
        .min_by_key(|s| s.len());
    match open {
        None => *best = size,
        Some(s) => {
            for &v in s.clone().iter() {
                chosen[v] = true;
                min_hitting_set(supports, chosen, size + 1, best);
                chosen[v] = false;
            }
        }
    }
}
