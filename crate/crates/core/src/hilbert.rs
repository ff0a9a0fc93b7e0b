//! Multigraded Hilbert series of monomial quotients.
//!
//! A series is stored as `N(t) / ∏ (1 - t_i)^{k_i}` with an integer numerator.
//! Numerators come from the pivot recursion
//! `N(M) = N(M + (p)) + t^{deg p} N(M : p)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::poly::Monomial;

/// `numerator / ∏ (1 - t_i)^{denominator[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedSeries {
    numerator: BTreeMap<Vec<u32>, BigInt>,
    denominator: Vec<u32>,
}

/// Outcome of dividing the numerator by `1 - t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Division {
    Divided(MultigradedSeries),
    NotDivisible,
}

fn add_term(map: &mut BTreeMap<Vec<u32>, BigInt>, key: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(BigInt::zero);
    *entry += c;
}

fn prune(map: &mut BTreeMap<Vec<u32>, BigInt>) {
    map.retain(|_, c| !c.is_zero());
}

impl MultigradedSeries {
    pub fn new(numerator: impl IntoIterator<Item = (Vec<u32>, BigInt)>, denominator: Vec<u32>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, c) in numerator {
            if k.len() != denominator.len() {
                return Err(Error::Mismatch("numerator exponent of the wrong length".into()));
            }
            add_term(&mut map, k, c);
        }
        prune(&mut map);
        Ok(MultigradedSeries {
            numerator: map,
            denominator,
        })
    }

    pub fn rank(&self) -> usize {
        self.denominator.len()
    }

    pub fn numerator(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    /// Divides the numerator by `1 - t_i` when that is exact.
    pub fn divide_out_exact(&self, i: usize) -> Division {
        if self.denominator[i] == 0 {
            return Division::NotDivisible;
        }
        // group by the exponents of the other variables
        let mut groups: BTreeMap<Vec<u32>, Vec<(u32, BigInt)>> = BTreeMap::new();
        for (k, c) in &self.numerator {
            let mut rest = k.clone();
            rest[i] = 0;
            groups.entry(rest).or_default().push((k[i], c.clone()));
        }
        let mut out = BTreeMap::new();
        for (rest, mut terms) in groups {
            terms.sort_by_key(|(e, _)| *e);
            // Q_k = sum_{j <= k} N_j; exactness means the full sum vanishes
            let mut acc = BigInt::zero();
            let mut idx = 0;
            let top = terms.last().map(|(e, _)| *e).unwrap_or(0);
            for e in 0..top {
                while idx < terms.len() && terms[idx].0 == e {
                    acc += &terms[idx].1;
                    idx += 1;
                }
                if !acc.is_zero() {
                    let mut key = rest.clone();
                    key[i] = e;
                    out.insert(key, acc.clone());
                }
            }
            while idx < terms.len() {
                acc += &terms[idx].1;
                idx += 1;
            }
            if !acc.is_zero() {
                return Division::NotDivisible;
            }
        }
        let mut denominator = self.denominator.clone();
        denominator[i] -= 1;
        Division::Divided(MultigradedSeries {
            numerator: out,
            denominator,
        })
    }

    /// Cancels every factor `1 - t_i` shared by numerator and denominator.
    pub fn reduce(&self) -> MultigradedSeries {
        let mut cur = self.clone();
        for i in 0..cur.rank() {
            while let Division::Divided(next) = cur.divide_out_exact(i) {
                cur = next;
            }
        }
        cur
    }

    /// Sets `t_i = 1`; the denominator must not contain `1 - t_i`.
    pub fn specialize_to_one(&self, i: usize) -> Result<MultigradedSeries> {
        if self.denominator[i] != 0 {
            return Err(Error::Internal("cannot set a pole variable to 1".into()));
        }
        let mut map = BTreeMap::new();
        for (k, c) in &self.numerator {
            let mut key = k.clone();
            key.remove(i);
            add_term(&mut map, key, c.clone());
        }
        prune(&mut map);
        let mut denominator = self.denominator.clone();
        denominator.remove(i);
        Ok(MultigradedSeries {
            numerator: map,
            denominator,
        })
    }

    /// `c_α` of the Hilbert polynomial `Σ c_α ∏ binom(u_i + α_i, α_i)`, read
    /// from `N(1 + u)`. `None` when some `α_i` exceeds `s_i = k_i - 1`.
    pub fn hilbert_coefficient(&self, alpha: &[u32]) -> Result<Option<BigInt>> {
        if alpha.len() != self.rank() {
            return Err(Error::IndexLength {
                expected: self.rank(),
                found: alpha.len(),
            });
        }
        let mut shift = Vec::with_capacity(alpha.len());
        for (a, k) in alpha.iter().zip(&self.denominator) {
            if *k == 0 || *a > k - 1 {
                return Ok(None);
            }
            shift.push(k - 1 - a);
        }
        let mut sum = BigInt::zero();
        for (beta, c) in &self.numerator {
            let mut prod = c.clone();
            for (b, d) in beta.iter().zip(&shift) {
                if b < d {
                    prod = BigInt::zero();
                    break;
                }
                prod *= binomial(BigInt::from(*b), BigInt::from(*d));
            }
            sum += prod;
        }
        let total: u64 = shift.iter().map(|&d| d as u64).sum();
        if total % 2 == 1 {
            sum = -sum;
        }
        Ok(Some(sum))
    }

    /// Coefficient of `t^u` in the power series expansion.
    pub fn coefficient(&self, u: &[u64]) -> BigInt {
        let mut sum = BigInt::zero();
        'terms: for (beta, c) in &self.numerator {
            let mut prod = c.clone();
            for ((b, k), ui) in beta.iter().zip(&self.denominator).zip(u) {
                let b = *b as u64;
                if b > *ui {
                    continue 'terms;
                }
                let m = ui - b;
                if *k == 0 {
                    if m != 0 {
                        continue 'terms;
                    }
                } else {
                    let k = *k as u64;
                    prod *= binomial(BigInt::from(m + k - 1), BigInt::from(k - 1));
                }
            }
            sum += prod;
        }
        sum
    }

    /// Hilbert polynomial `P(u) = Σ_α c_α ∏ binom(u_i + α_i, α_i)`.
    pub fn hilbert_polynomial_value(&self, u: &[u64]) -> Result<BigInt> {
        let s: Vec<u32> = self.denominator.iter().map(|k| k.saturating_sub(1)).collect();
        let mut sum = BigInt::zero();
        let mut alpha = vec![0u32; s.len()];
        loop {
            if let Some(c) = self.hilbert_coefficient(&alpha)? {
                let mut prod = c;
                for (a, ui) in alpha.iter().zip(u) {
                    prod *= binomial(BigInt::from(ui + *a as u64), BigInt::from(*a));
                }
                sum += prod;
            }
            // odometer over the box 0..=s
            let mut i = 0;
            loop {
                if i == alpha.len() {
                    return Ok(sum);
                }
                if alpha[i] < s[i] {
                    alpha[i] += 1;
                    break;
                }
                alpha[i] = 0;
                i += 1;
            }
        }
    }

    /// Largest total degree of a numerator term.
    pub fn numerator_degree(&self) -> u64 {
        self.numerator
            .keys()
            .map(|k| k.iter().map(|&e| e as u64).sum::<u64>())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for MultigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.rank()).map(|i| format!("T_{i}")).collect();
        write!(f, "{}", numerator_string(self, &names))
    }
}

/// Numerator rendered in descending degree with the given variable names.
pub fn numerator_string(s: &MultigradedSeries, names: &[String]) -> String {
    if s.numerator.is_empty() {
        return "0".into();
    }
    let mut keys: Vec<(&Vec<u32>, &BigInt)> = s.numerator.iter().collect();
    keys.sort_by(|a, b| {
        let da: u64 = a.0.iter().map(|&e| e as u64).sum();
        let db: u64 = b.0.iter().map(|&e| e as u64).sum();
        db.cmp(&da).then_with(|| b.0.cmp(a.0))
    });
    let mut out = String::new();
    for (n, (k, c)) in keys.into_iter().enumerate() {
        let mono: Vec<String> = k
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                if *e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        let mag = c.abs();
        if n == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}

/// Series variable carried by each ring variable; the grading rows must be
/// unit vectors.
fn unit_degrees(grading: &[Vec<u32>]) -> Result<(usize, Vec<usize>)> {
    let rank = grading.first().map(|r| r.len()).unwrap_or(1);
    let mut axis = Vec::with_capacity(grading.len());
    for (v, row) in grading.iter().enumerate() {
        if row.iter().all(|&d| d == 0) {
            return Err(Error::InvalidArgument(format!("variable {v} has degree zero")));
        }
        let nonzero: Vec<usize> = row
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(i, _)| i)
            .collect();
        if nonzero.len() != 1 || row[nonzero[0]] != 1 {
            return Err(Error::Unsupported(format!(
                "variable {v} has a degree that is not a unit vector"
            )));
        }
        axis.push(nonzero[0]);
    }
    Ok((rank, axis))
}

type Numerator = BTreeMap<Vec<u32>, BigInt>;

fn mono_degree(m: &Monomial, axis: &[usize], rank: usize) -> Vec<u32> {
    let mut d = vec![0u32; rank];
    for (v, &e) in m.exponents().iter().enumerate() {
        d[axis[v]] += e;
    }
    d
}

fn multiply(a: &Numerator, b: &Numerator) -> Numerator {
    let mut out = Numerator::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            add_term(&mut out, key, ca * cb);
        }
    }
    prune(&mut out);
    out
}

fn numerator_rec(gens: &[Monomial], nvars: usize, axis: &[usize], rank: usize) -> Numerator {
    let mut one = Numerator::new();
    one.insert(vec![0; rank], BigInt::one());
    if gens.is_empty() {
        return one;
    }
    // occurrence counts
    let mut count = vec![0usize; nvars];
    for g in gens {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let (pivot_var, &max) = count
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i)))
        .unwrap();
    if max <= 1 {
        // pairwise coprime
        let mut acc = one;
        for g in gens {
            let mut f = Numerator::new();
            f.insert(vec![0; rank], BigInt::one());
            add_term(&mut f, mono_degree(g, axis, rank), -BigInt::one());
            prune(&mut f);
            acc = multiply(&acc, &f);
        }
        return acc;
    }
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(pivot_var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[(exps.len() - 1) / 2];
    if let Some(cap) = gens.iter().find_map(|g| match g.as_pure_power() {
        Some((v, a)) if v == pivot_var => Some(a),
        _ => None,
    }) {
        e = e.min(cap - 1);
    }
    let p = Monomial::var(nvars, pivot_var, e);
    let m = MonomialIdeal::new(nvars, gens.iter().cloned());
    let sum = m.add(p.clone());
    let colon = m.colon(&p);
    let mut left = numerator_rec(sum.gens(), nvars, axis, rank);
    let right = numerator_rec(colon.gens(), nvars, axis, rank);
    let shift = mono_degree(&p, axis, rank);
    for (k, c) in right {
        let key: Vec<u32> = k.iter().zip(&shift).map(|(a, b)| a + b).collect();
        add_term(&mut left, key, c);
    }
    prune(&mut left);
    left
}

/// Hilbert series of `k[x]/M` for a grading in which every variable has a
/// unit-vector degree.
pub fn k_polynomial(m: &MonomialIdeal, grading: &[Vec<u32>]) -> Result<MultigradedSeries> {
    if grading.len() != m.nvars() {
        return Err(Error::Mismatch("grading rows do not match the variables".into()));
    }
    let (rank, axis) = unit_degrees(grading)?;
    let mut denominator = vec![0u32; rank];
    for &a in &axis {
        denominator[a] += 1;
    }
    let numerator = numerator_rec(m.gens(), m.nvars(), &axis, rank);
    Ok(MultigradedSeries { numerator, denominator })
}

/// Brute-force slice dimension: standard monomials of `M` whose degree under
/// `grading` equals `u`. Variables with an all-zero row are the "internal"
/// variables and are counted with no degree restriction, which requires the
/// slice to be finite.
pub fn hilbert_function_value(m: &MonomialIdeal, grading: &[Vec<u32>], u: &[u64]) -> Result<u64> {
    let n = m.nvars();
    if grading.len() != n {
        return Err(Error::Mismatch("grading rows do not match the variables".into()));
    }
    let rank = grading.first().map(|r| r.len()).unwrap_or(u.len());
    if u.len() != rank {
        return Err(Error::IndexLength {
            expected: rank,
            found: u.len(),
        });
    }
    let graded: Vec<usize> = (0..n).filter(|&v| grading[v].iter().any(|&d| d != 0)).collect();
    let internal: Vec<usize> = (0..n).filter(|&v| grading[v].iter().all(|&d| d == 0)).collect();
    let mut total = 0u64;
    let mut exps = vec![0u32; n];
    let mut remaining: Vec<u64> = u.to_vec();
    enumerate_graded(m, grading, &graded, &internal, 0, &mut exps, &mut remaining, &mut total)?;
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_graded(
    m: &MonomialIdeal,
    grading: &[Vec<u32>],
    graded: &[usize],
    internal: &[usize],
    pos: usize,
    exps: &mut Vec<u32>,
    remaining: &mut Vec<u64>,
    total: &mut u64,
) -> Result<()> {
    if pos == graded.len() {
        if remaining.iter().any(|&r| r != 0) {
            return Ok(());
        }
        let y = Monomial::new(exps.clone());
        if m.contains(&y) {
            return Ok(());
        }
        // standard internal monomials of (M : y) restricted to the internal variables
        let colon = m.colon(&y);
        let restricted: Vec<Monomial> = colon
            .gens()
            .iter()
            .filter(|g| g.support().all(|v| internal.contains(&v)))
            .map(|g| Monomial::new(internal.iter().map(|&v| g.exponent(v)).collect()))
            .collect();
        let sub = MonomialIdeal::new(internal.len(), restricted);
        let count = sub.standard_monomial_count().ok_or(Error::NotPrimary)?;
        *total += count;
        return Ok(());
    }
    let v = graded[pos];
    let row = &grading[v];
    let mut e = 0u32;
    loop {
        exps[v] = e;
        enumerate_graded(m, grading, graded, internal, pos + 1, exps, remaining, total)?;
        // take one more power of v if the budget allows
        if row.iter().zip(remaining.iter()).any(|(&d, &r)| (d as u64) > r) {
            break;
        }
        for (r, &d) in remaining.iter_mut().zip(row) {
            *r -= d as u64;
        }
        e += 1;
    }
    for (r, &d) in remaining.iter_mut().zip(row) {
        *r += d as u64 * e as u64;
    }
    exps[v] = 0;
    Ok(())
}
