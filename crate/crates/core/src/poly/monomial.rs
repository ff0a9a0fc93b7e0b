use std::fmt;

use crate::error::{Error, Result};

/// A power product `x_0^{e_0} ... x_{n-1}^{e_{n-1}}` over a fixed number of variables.
///
/// The total degree is cached because every degree-compatible order and the
/// sugar bookkeeping of the basis engine read it on each comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Monomial::new(exps)
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree + other.degree,
        })
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for a in self.exps.iter() {
            exps.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial::new(exps))
    }

    /// `true` when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when the quotient is a monomial.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Vec<u32> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// If this is a pure power `x_i^e` with `e >= 1`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Weighted degree under a grading matrix with one row per variable.
    pub fn weighted_degree(&self, grading: &[Vec<u32>], rank: usize) -> Vec<u64> {
        let mut out = vec![0u64; rank];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (slot, w) in out.iter_mut().zip(grading[i].iter()) {
                *slot += e as u64 * *w as u64;
            }
        }
        out
    }

    pub(crate) fn with_exponent(&self, var: usize, exp: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[var] = exp;
        Monomial::new(exps)
    }

    /// Same power product viewed in a ring with `new_nvars` variables, where
    /// variable `i` becomes `map[i]`.
    pub(crate) fn embed(&self, new_nvars: usize, map: &[usize]) -> Monomial {
        let mut exps = vec![0u32; new_nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial::new(exps)
    }

    /// Renders the monomial with the given variable names (`1` for the unit).
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "v{i}")?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
