use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Degree vector under a ring's grading matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<u64>);

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeOf {
    Homogeneous(Multidegree),
    Inhomogeneous,
}

/// `Q[x_0, ..., x_{n-1}] / K` together with a grading matrix (one row per variable).
#[derive(Clone, PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
    grading: Vec<Vec<u32>>,
    quotient: Vec<Polynomial>,
}

impl RingContext {
    /// Polynomial ring with the standard grading.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<RingContext>> {
        let grading = vec![vec![1]; names.len()];
        RingContext::with_grading(names, grading)
    }

    pub fn with_grading<S: AsRef<str>>(names: &[S], grading: Vec<Vec<u32>>) -> Result<Arc<RingContext>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        if grading.len() != names.len() {
            return Err(Error::InvalidRing(format!(
                "{} grading rows for {} variables",
                grading.len(),
                names.len()
            )));
        }
        if let Some(first) = grading.first() {
            if grading.iter().any(|r| r.len() != first.len()) {
                return Err(Error::InvalidRing("grading rows differ in length".into()));
            }
        }
        Ok(Arc::new(RingContext {
            names,
            grading,
            quotient: Vec::new(),
        }))
    }

    /// `self / (gens)`; the new quotient ideal contains the old one.
    pub fn quotient(&self, gens: &[Polynomial]) -> Result<Arc<RingContext>> {
        let mut quotient = self.quotient.clone();
        for g in gens {
            if g.nvars() != self.nvars() {
                return Err(Error::Mismatch("quotient generator from another ring".into()));
            }
            if !g.is_zero() && !quotient.contains(g) {
                quotient.push(g.clone());
            }
        }
        Ok(Arc::new(RingContext {
            names: self.names.clone(),
            grading: self.grading.clone(),
            quotient,
        }))
    }

    /// Same variables and grading, no quotient.
    pub fn ambient(&self) -> Arc<RingContext> {
        Arc::new(RingContext {
            names: self.names.clone(),
            grading: self.grading.clone(),
            quotient: Vec::new(),
        })
    }

    /// Appends variables; the quotient generators are carried over.
    pub fn extend<S: AsRef<str>>(&self, names: &[S], grading: Vec<Vec<u32>>) -> Result<Arc<RingContext>> {
        let extra = names.len();
        let mut all: Vec<String> = self.names.clone();
        all.extend(names.iter().map(|s| s.as_ref().to_string()));
        let mut rows = self.grading.clone();
        rows.extend(grading);
        let ctx = RingContext::with_grading(&all, rows)?;
        let quotient = self.quotient.iter().map(|g| g.extend(extra)).collect();
        Ok(Arc::new(RingContext {
            names: ctx.names.clone(),
            grading: ctx.grading.clone(),
            quotient,
        }))
    }

    /// Replaces the grading matrix.
    pub fn regrade(&self, grading: Vec<Vec<u32>>) -> Result<Arc<RingContext>> {
        let ctx = RingContext::with_grading(&self.names, grading)?;
        Ok(Arc::new(RingContext {
            names: ctx.names.clone(),
            grading: ctx.grading.clone(),
            quotient: self.quotient.clone(),
        }))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn grading(&self) -> &[Vec<u32>] {
        &self.grading
    }

    pub fn grading_rank(&self) -> usize {
        self.grading.first().map(|r| r.len()).unwrap_or(1)
    }

    pub fn quotient_gens(&self) -> &[Polynomial] {
        &self.quotient
    }

    /// `true` when `K = 0`, which is how the library recognizes a domain.
    pub fn is_polynomial_ring(&self) -> bool {
        self.quotient.iter().all(|g| g.is_zero())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), i)
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars())
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Multidegree {
        Multidegree(m.weighted_degree(&self.grading, self.grading_rank()))
    }

    /// Common multidegree of all terms, or the inhomogeneous marker.
    pub fn multidegree(&self, p: &Polynomial) -> DegreeOf {
        let mut deg: Option<Multidegree> = None;
        for t in p.terms() {
            let d = self.monomial_degree(&t.mono);
            match &deg {
                None => deg = Some(d),
                Some(prev) if *prev != d => return DegreeOf::Inhomogeneous,
                _ => {}
            }
        }
        DegreeOf::Homogeneous(deg.unwrap_or_else(|| Multidegree(vec![0; self.grading_rank()])))
    }

    pub fn show(&self, p: &Polynomial) -> String {
        p.display(&self.names).to_string()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::cli::parse::parse_polynomial(text, &self.names)
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))?;
        if !self.quotient.is_empty() {
            let gens: Vec<String> = self.quotient.iter().map(|g| self.show(g)).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        Ok(())
    }
}
