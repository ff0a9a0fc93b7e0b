use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept strictly decreasing in grevlex with merged monomials and no
/// zero coefficients, so structural equality is polynomial equality. Basis
/// computations re-sort into their own order on entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

#[inline]
fn canon_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(a, b)
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::from_terms(nvars, [(c, Monomial::one(nvars))])
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Polynomial::constant(nvars, Rational::from_integer(c.into()))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Polynomial::monomial(Rational::one(), Monomial::var(nvars, index, 1))
    }

    pub fn monomial(coeff: Rational, mono: Monomial) -> Self {
        Polynomial::from_terms(mono.nvars(), [(coeff, mono)])
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(coeff, mono)| {
                assert_eq!(mono.nvars(), nvars, "monomial arity does not match the ring");
                Term { coeff, mono }
            })
            .collect();
        raw.sort_by(|a, b| canon_cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff += t.coeff;
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial { nvars, terms }
    }

    /// Integer-coefficient convenience constructor used throughout the tests.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Polynomial::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (Rational::from_integer((*c).into()), Monomial::new(e.to_vec()))),
        )
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant coefficient (zero when absent).
    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|t| t.mono.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Maximal total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<&Term> {
        let mut best: Option<&Term> = None;
        for t in &self.terms {
            best = match best {
                None => Some(t),
                Some(b) if order.cmp(&t.mono, &b.mono) == Ordering::Greater => Some(t),
                keep => keep,
            };
        }
        best.ok_or(Error::ZeroPolynomial)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                canon_cmp(&a[i].mono, &b[j].mono)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let mut t = b[j].clone();
                    if negate {
                        t.coeff = -t.coeff;
                    }
                    out.push(t);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
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
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                prods.push((&s.coeff * &t.coeff, s.mono.checked_mul(&t.mono)?));
            }
        }
        Ok(Polynomial::from_terms(self.nvars, prods))
    }

    pub fn checked_pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn mul_term(&self, coeff: &Rational, mono: &Monomial) -> Result<Polynomial> {
        if coeff.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: &t.coeff * coeff,
                mono: t.mono.checked_mul(mono)?,
            });
        }
        // multiplication by a monomial preserves any monomial order
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient in the given order.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok(t) => {
                let inv = t.coeff.recip();
                self.scale(&inv)
            }
            Err(_) => self.clone(),
        }
    }

    /// Scales to coprime integer coefficients with positive leading
    /// coefficient in the given order.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
        }
        let mut num = BigInt::zero();
        for t in &self.terms {
            num = num.gcd(&(t.coeff.numer() * (&den / t.coeff.denom())));
        }
        let mut factor = Rational::new(den, num);
        if self.leading_term(order).map(|t| t.coeff.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Deletes every term containing one of the listed variables.
    pub fn substitute_zero(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|t| vars.iter().all(|&v| t.mono.exponent(v) == 0))
                .cloned()
                .collect(),
        }
    }

    /// Sets `var` to the constant `value`.
    pub fn evaluate_var(&self, var: usize, value: &Rational) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|t| {
                let e = t.mono.exponent(var);
                let mut c = t.coeff.clone();
                for _ in 0..e {
                    c *= value;
                }
                (c, t.mono.with_exponent(var, 0))
            }),
        )
    }

    /// Multiplies each term by `var^(target - d)` where `d` is the term's
    /// degree in the other variables.
    pub fn homogenize(&self, var: usize, target: u64) -> Result<Polynomial> {
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let d = t.mono.degree() - t.mono.exponent(var) as u64;
            if d > target {
                return Err(Error::HomogenizationDegree { found: d, target });
            }
            let pad = u32::try_from(target - d).map_err(|_| Error::ExponentOverflow)?;
            out.push((t.coeff.clone(), t.mono.with_exponent(var, pad)));
        }
        Ok(Polynomial::from_terms(self.nvars, out))
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().filter(|t| t.mono.exponent(var) > 0).map(|t| {
                let e = t.mono.exponent(var);
                (
                    &t.coeff * Rational::from_integer(e.into()),
                    t.mono.with_exponent(var, e - 1),
                )
            }),
        )
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; the images all
    /// live in one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(p.nvars), p.clone()])
            .collect();
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().checked_mul(&cache[1])?;
                    cache.push(next);
                }
                prod = prod.checked_mul(&cache[e as usize])?;
            }
            acc = acc.checked_add(&prod);
        }
        Ok(acc)
    }

    /// Same polynomial in a ring with `new_nvars` variables; variable `i` maps
    /// to `map[i]`.
    pub fn embed(&self, new_nvars: usize, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            new_nvars,
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), t.mono.embed(new_nvars, map))),
        )
    }

    /// Adds `extra` trailing variables.
    pub fn extend(&self, extra: usize) -> Polynomial {
        let map: Vec<usize> = (0..self.nvars).collect();
        // appending zero exponents keeps grevlex ordering among existing terms
        Polynomial {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.embed(self.nvars + extra, &map),
                })
                .collect(),
        }
    }

    /// Drops trailing variables, which must not occur.
    pub fn truncate_vars(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|t| {
                debug_assert!(t.mono.exponents()[nvars..].iter().all(|&e| e == 0));
                (t.coeff.clone(), Monomial::new(t.mono.exponents()[..nvars].to_vec()))
            }),
        )
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for t in &self.terms {
            for v in t.mono.support() {
                seen[v] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, s)| **s).map(|(i, _)| i).collect()
    }

    /// Exact division by a monomial, when every term is divisible.
    pub fn div_monomial(&self, mono: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.div(mono)?,
            });
        }
        Some(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    /// Quotient `self / divisor` when the division is exact, else `None`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let lead = divisor.terms.first()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Rational, Monomial)> = Vec::new();
        while let Some(t) = rem.terms.first() {
            let m = t.mono.div(&lead.mono)?;
            let c = &t.coeff / &lead.coeff;
            rem = rem.checked_sub(&divisor.mul_term(&c, &m).ok()?);
            quot.push((c, m));
        }
        Some(Polynomial::from_terms(self.nvars, quot))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono.display(self.names))?;
            } else {
                write!(f, "{abs}*{}", t.mono.display(self.names))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs)
    }
}

/// Panics on exponent overflow; use [`Polynomial::checked_mul`] to handle it.
impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, &[u32])]) -> Polynomial {
        let n = terms.first().map(|t| t.1.len()).unwrap_or(2);
        Polynomial::from_int_terms(n, terms)
    }

    #[test]
    fn arithmetic_examples() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        assert_eq!(&(&x + &y) + &(&x - &y), x.scale(&Rational::from_integer(2.into())));
        assert_eq!(&(&x - &y) * &(&x + &y), &(&x * &x) - &(&y * &y));
        let f = p(&[(1, &[2, 0, 0, 0]), (-1, &[1, 0, 1, 0])]);
        assert!((&f * &Polynomial::zero(4)).is_zero());
    }

    #[test]
    fn leading_terms() {
        // variables w, x, y, z
        let f = p(&[(1, &[0, 2, 0, 0]), (-1, &[1, 0, 1, 0])]);
        let lt = f.leading_term(&MonomialOrder::Grevlex).unwrap();
        assert_eq!(lt.mono, Monomial::new(vec![0, 2, 0, 0]));
        let g = p(&[(1, &[0, 3, 0, 0]), (-1, &[2, 0, 0, 1])]);
        let lt = g.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(lt.mono, Monomial::new(vec![2, 0, 0, 1]));
        let five = Polynomial::from_int(3, 5);
        assert_eq!(
            five.leading_term(&MonomialOrder::Lex).unwrap().coeff,
            Rational::from_integer(5.into())
        );
        assert_eq!(
            Polynomial::zero(3).leading_term(&MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn substitute_zero_examples() {
        // variables x, y, Y0, Y1
        let f = p(&[(1, &[0, 1, 1, 0]), (-1, &[1, 0, 0, 1])]);
        assert!(f.substitute_zero(&[0, 1]).is_zero());
        let g = p(&[(1, &[0, 0, 1, 1]), (1, &[1, 0, 1, 0])]);
        assert_eq!(g.substitute_zero(&[0, 1]), p(&[(1, &[0, 0, 1, 1])]));
        let c = Polynomial::from_int(4, 3);
        assert_eq!(c.substitute_zero(&[0, 1]), c);
    }

    #[test]
    fn homogenize_examples() {
        let f = p(&[
            (1, &[1, 1, 0, 0]),
            (1, &[2, 1, 0, 0]),
            (1, &[1, 3, 0, 0]),
            (1, &[1, 1, 3, 0]),
        ]);
        let expected = p(&[
            (1, &[1, 1, 0, 3]),
            (1, &[2, 1, 0, 2]),
            (1, &[1, 3, 0, 1]),
            (1, &[1, 1, 3, 0]),
        ]);
        assert_eq!(f.homogenize(3, 5).unwrap(), expected);
        let x = Polynomial::var(2, 0);
        assert_eq!(x.homogenize(1, 1).unwrap(), x);
        assert_eq!(Polynomial::one(2).homogenize(1, 2).unwrap(), p(&[(1, &[0, 2])]));
        assert!(matches!(
            p(&[(1, &[3, 0])]).homogenize(1, 2),
            Err(Error::HomogenizationDegree { .. })
        ));
    }

    #[test]
    fn derivatives() {
        let f = p(&[(1, &[4, 0, 0]), (1, &[0, 4, 0]), (1, &[0, 0, 4])]);
        assert_eq!(f.partial_derivative(0), p(&[(4, &[3, 0, 0])]));
        // z^5 + y^6 z + x y^7 + x^15 over (x, y, z)
        let g = p(&[(1, &[0, 0, 5]), (1, &[0, 6, 1]), (1, &[1, 7, 0]), (1, &[15, 0, 0])]);
        assert_eq!(g.partial_derivative(1), p(&[(6, &[0, 5, 1]), (7, &[1, 6, 0])]));
        assert!(Polynomial::from_int(3, 7).partial_derivative(2).is_zero());
    }

    #[test]
    fn primitive_normalizes() {
        let f = Polynomial::from_terms(
            2,
            [
                (Rational::new((-3).into(), 2.into()), Monomial::new(vec![1, 0])),
                (Rational::from_integer(6.into()), Monomial::new(vec![0, 0])),
            ],
        );
        assert_eq!(f.primitive(&MonomialOrder::Grevlex), p(&[(1, &[1, 0]), (-4, &[0, 0])]));
    }
}
