use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// Set of variable indices stored as a bitset, so membership tests inside
/// monomial comparisons stay branch-light.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VarSet {
    words: Vec<u64>,
}

impl VarSet {
    pub fn new() -> Self {
        VarSet::default()
    }

    pub fn insert(&mut self, var: usize) {
        let w = var >> 6;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (var & 63);
    }

    #[inline]
    pub fn contains(&self, var: usize) -> bool {
        self.words.get(var >> 6).is_some_and(|w| (w >> (var & 63)) & 1 == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| wi * 64 + b))
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VarSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Block order: the listed variables are compared first (grevlex among
    /// themselves), ties are broken by grevlex on the remaining variables.
    Elimination(VarSet),
    /// Weighted degree first, then reverse lexicographic.
    WeightedRevlex(Vec<u32>),
}

impl MonomialOrder {
    pub fn elimination(vars: impl IntoIterator<Item = usize>) -> Self {
        MonomialOrder::Elimination(vars.into_iter().collect())
    }

    /// `true` for orders that compare total degree first.
    /// Degree used for pair selection: the weighted degree for weighted
    /// orders, the total degree otherwise.
    pub fn degree(&self, m: &Monomial) -> u64 {
        match self {
            MonomialOrder::WeightedRevlex(w) => m.exponents().iter().zip(w).map(|(&e, &k)| e as u64 * k as u64).sum(),
            _ => m.degree(),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Elimination(block) => elimination(block, a, b),
            MonomialOrder::WeightedRevlex(w) => weighted_revlex(w, a, b),
        }
    }
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let (ea, eb) = (a.exponents(), b.exponents());
    for i in (0..ea.len()).rev() {
        if ea[i] != eb[i] {
            // smaller exponent in the last differing variable wins
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

fn weighted_revlex(w: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let da: u64 = ea.iter().zip(w).map(|(&e, &k)| e as u64 * k as u64).sum();
    let db: u64 = eb.iter().zip(w).map(|(&e, &k)| e as u64 * k as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..ea.len()).rev() {
        if ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

fn elimination(block: &VarSet, a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let mut da = 0u64;
    let mut db = 0u64;
    for i in block.iter() {
        if i < ea.len() {
            da += ea[i] as u64;
            db += eb[i] as u64;
        }
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..ea.len()).rev() {
        if block.contains(i) && ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    let ra = a.degree() - da;
    let rb = b.degree() - db;
    match ra.cmp(&rb) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..ea.len()).rev() {
        if !block.contains(i) && ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}
