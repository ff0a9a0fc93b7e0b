//! Session files: a ring declaration followed by named ideals, polynomials
//! and polytopes.
//!
//! ```text
//! ring Q[w,x,y,z] / (w*x, y*z);
//! poly f = x^2 - y*w;
//! ideal I = (f, x^3 - z*w^2);
//! ideal J = vars^4 + I;
//! polytope P = [[0,0],[1,0],[0,1]];
//! ```
//!
//! Ideal expressions combine generator lists `(p, ...)`, earlier ideal names,
//! `vars` (the ideal of all variables) and `jacobian(p)` with `+`, `*` and
//! `^`.

use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::ToPrimitive;

use super::parse::{tokenize, Cursor, Names, Tok};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::multiplicity::jacobian_ideal;
use crate::poly::{Polynomial, RingContext};
use crate::polytope::LatticePolytope;

#[derive(Clone, Debug)]
pub enum Entity {
    Ideal(Ideal),
    Poly(Polynomial),
    Polytope(LatticePolytope),
}

impl PartialEq for Entity {
    fn eq(&self, other: &Entity) -> bool {
        match (self, other) {
            (Entity::Ideal(a), Entity::Ideal(b)) => a.gens() == b.gens(),
            (Entity::Poly(a), Entity::Poly(b)) => a == b,
            (Entity::Polytope(a), Entity::Polytope(b)) => a == b,
            _ => false,
        }
    }
}

/// A parsed session: at most one ring and named entities in declaration order.
#[derive(Clone, Debug, Default)]
pub struct Session {
    ring: Option<Arc<RingContext>>,
    entries: Vec<(String, Entity)>,
}

impl PartialEq for Session {
    fn eq(&self, other: &Session) -> bool {
        let same_ring = match (&self.ring, &other.ring) {
            (None, None) => true,
            (Some(a), Some(b)) => a.names() == b.names() && a.quotient_gens() == b.quotient_gens(),
            _ => false,
        };
        same_ring && self.entries == other.entries
    }
}

struct Scope<'a> {
    ring: &'a RingContext,
    entries: &'a [(String, Entity)],
}

impl Names for Scope<'_> {
    fn variable(&self, name: &str) -> Option<usize> {
        self.ring.var_index(name)
    }
    fn polynomial(&self, name: &str) -> Option<Polynomial> {
        self.entries.iter().find_map(|(n, e)| match e {
            Entity::Poly(p) if n == name => Some(p.clone()),
            _ => None,
        })
    }
    fn nvars(&self) -> usize {
        self.ring.nvars()
    }
}

impl Session {
    pub fn new() -> Session {
        Session::default()
    }

    /// A session holding only a ring.
    pub fn with_ring(ring: Arc<RingContext>) -> Session {
        Session {
            ring: Some(ring),
            entries: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Session> {
        let mut cur = Cursor::new(tokenize(text)?);
        let mut session = Session::new();
        while !cur.at_eof() {
            session.statement(&mut cur)?;
        }
        Ok(session)
    }

    pub fn ring(&self) -> Result<&Arc<RingContext>> {
        self.ring
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("the session declares no ring".into()))
    }

    pub fn entries(&self) -> &[(String, Entity)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Entity> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        match self.get(name) {
            Some(Entity::Ideal(i)) => Ok(i),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    pub fn polytope(&self, name: &str) -> Result<&LatticePolytope> {
        match self.get(name) {
            Some(Entity::Polytope(p)) => Ok(p),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// Adds an entity, rejecting names already in use.
    pub fn insert(&mut self, name: &str, entity: Entity) -> Result<()> {
        let clashes_var = self.ring.as_ref().is_some_and(|r| r.var_index(name).is_some());
        if clashes_var || name == "vars" || name == "jacobian" || self.get(name).is_some() {
            return Err(Error::DuplicateName(name.to_string()));
        }
        if let (Some(ring), Entity::Ideal(i)) = (&self.ring, &entity) {
            if i.ctx().names() != ring.names() {
                return Err(Error::Mismatch("ideal from another ring".into()));
            }
        }
        self.entries.push((name.to_string(), entity));
        Ok(())
    }

    /// Evaluates a polynomial expression against the ring and named polynomials.
    pub fn eval_poly(&self, text: &str) -> Result<Polynomial> {
        let ring = self.ring()?;
        let mut cur = Cursor::new(tokenize(text)?);
        let p = cur.expr(&Scope {
            ring,
            entries: &self.entries,
        })?;
        if !cur.at_eof() {
            return Err(cur.unexpected("end of input"));
        }
        Ok(p)
    }

    /// Evaluates an ideal expression such as `vars^4 + I`.
    pub fn eval_ideal(&self, text: &str) -> Result<Ideal> {
        let mut cur = Cursor::new(tokenize(text)?);
        let i = self.ideal_expr(&mut cur)?;
        if !cur.at_eof() {
            return Err(cur.unexpected("end of input"));
        }
        Ok(i)
    }

    fn statement(&mut self, cur: &mut Cursor) -> Result<()> {
        let keyword = cur.ident()?;
        match keyword.as_str() {
            "ring" => self.ring_statement(cur)?,
            "ideal" => {
                let name = self.declared_name(cur)?;
                let i = self.ideal_expr(cur)?;
                self.insert(&name, Entity::Ideal(i))?;
            }
            "poly" => {
                let name = self.declared_name(cur)?;
                let ring = self.ring()?.clone();
                let p = cur.expr(&Scope {
                    ring: &ring,
                    entries: &self.entries,
                })?;
                self.insert(&name, Entity::Poly(p))?;
            }
            "polytope" => {
                let name = self.declared_name(cur)?;
                let p = polytope_literal(cur)?;
                self.insert(&name, Entity::Polytope(p))?;
            }
            other => return Err(cur.error(format!("unknown statement `{other}`"))),
        }
        cur.expect(Tok::Semi)
    }

    fn declared_name(&self, cur: &mut Cursor) -> Result<String> {
        let name = cur.ident()?;
        if self.get(&name).is_some() || self.ring.as_ref().is_some_and(|r| r.var_index(&name).is_some()) {
            return Err(Error::DuplicateName(name));
        }
        cur.expect(Tok::Eq)?;
        Ok(name)
    }

    fn ring_statement(&mut self, cur: &mut Cursor) -> Result<()> {
        if self.ring.is_some() {
            return Err(cur.error("the ring is already declared"));
        }
        if !self.entries.is_empty() {
            return Err(cur.error("the ring must be declared before other statements"));
        }
        let field = cur.ident()?;
        if field != "Q" && field != "QQ" {
            return Err(cur.error(format!("unsupported coefficient field `{field}`")));
        }
        cur.expect(Tok::LBracket)?;
        let mut names = vec![cur.ident()?];
        while *cur.peek() == Tok::Comma {
            cur.next();
            names.push(cur.ident()?);
        }
        cur.expect(Tok::RBracket)?;
        let mut ring = RingContext::new(&names)?;
        if *cur.peek() == Tok::Slash {
            cur.next();
            let gens = self.generator_list(cur, &ring)?;
            if Ideal::new(&ring, gens.clone())?.is_unit()? {
                return Err(Error::InvalidRing(
                    "the quotient by the unit ideal is the zero ring".into(),
                ));
            }
            ring = ring.quotient(&gens)?;
        }
        self.ring = Some(ring);
        Ok(())
    }

    fn generator_list(&self, cur: &mut Cursor, ring: &RingContext) -> Result<Vec<Polynomial>> {
        let scope = Scope {
            ring,
            entries: &self.entries,
        };
        cur.expect(Tok::LParen)?;
        let mut gens = Vec::new();
        if *cur.peek() != Tok::RParen {
            gens.push(cur.expr(&scope)?);
            while *cur.peek() == Tok::Comma {
                cur.next();
                gens.push(cur.expr(&scope)?);
            }
        }
        cur.expect(Tok::RParen)?;
        Ok(gens)
    }

    fn ideal_expr(&self, cur: &mut Cursor) -> Result<Ideal> {
        let mut acc = self.ideal_term(cur)?;
        while *cur.peek() == Tok::Plus {
            cur.next();
            acc = acc.sum(&self.ideal_term(cur)?)?;
        }
        Ok(acc)
    }

    fn ideal_term(&self, cur: &mut Cursor) -> Result<Ideal> {
        let mut acc = self.ideal_factor(cur)?;
        while *cur.peek() == Tok::Star {
            cur.next();
            acc = acc.product(&self.ideal_factor(cur)?)?;
        }
        Ok(acc)
    }

    fn ideal_factor(&self, cur: &mut Cursor) -> Result<Ideal> {
        let base = self.ideal_atom(cur)?;
        if *cur.peek() == Tok::Caret {
            cur.next();
            let k = cur.small_integer()?;
            return base.power(k as i64);
        }
        Ok(base)
    }

    fn ideal_atom(&self, cur: &mut Cursor) -> Result<Ideal> {
        let ring = self.ring()?.clone();
        match cur.peek().clone() {
            Tok::LParen => {
                let gens = self.generator_list(cur, &ring)?;
                Ideal::new(&ring, gens)
            }
            Tok::Ident(name) if name == "vars" => {
                cur.next();
                Ok(Ideal::maximal(&ring))
            }
            Tok::Ident(name) if name == "jacobian" && *cur.peek_at(1) == Tok::LParen => {
                cur.next();
                cur.expect(Tok::LParen)?;
                let f = cur.expr(&Scope {
                    ring: &ring,
                    entries: &self.entries,
                })?;
                cur.expect(Tok::RParen)?;
                jacobian_ideal(&ring, &f)
            }
            Tok::Ident(name) => {
                cur.next();
                match self.get(&name) {
                    Some(Entity::Ideal(i)) => Ok(i.clone()),
                    _ => Err(Error::UnknownName(name)),
                }
            }
            _ => Err(cur.unexpected("an ideal")),
        }
    }

    /// Canonical text form; parsing it gives back an equal session.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if let Some(ring) = &self.ring {
            let _ = write!(out, "ring Q[{}]", ring.names().join(","));
            if !ring.is_polynomial_ring() {
                let gens: Vec<String> = ring.quotient_gens().iter().map(|g| ring.show(g)).collect();
                let _ = write!(out, " / ({})", gens.join(", "));
            }
            out.push_str(";\n");
        }
        for (name, e) in &self.entries {
            match e {
                Entity::Ideal(i) => {
                    let gens: Vec<String> = i.gens().iter().map(|g| i.ctx().show(g)).collect();
                    let _ = writeln!(out, "ideal {name} = ({});", gens.join(", "));
                }
                Entity::Poly(p) => {
                    let ring = self.ring.as_ref().expect("polynomials need a ring");
                    let _ = writeln!(out, "poly {name} = {};", ring.show(p));
                }
                Entity::Polytope(p) => {
                    let _ = writeln!(out, "polytope {name} = {};", polytope_text(p));
                }
            }
        }
        out
    }
}

fn polytope_literal(cur: &mut Cursor) -> Result<LatticePolytope> {
    cur.expect(Tok::LBracket)?;
    let mut points = Vec::new();
    loop {
        cur.expect(Tok::LBracket)?;
        let mut pt = Vec::new();
        loop {
            let c = cur.integer()?;
            pt.push(c.to_i64().ok_or_else(|| cur.error("coordinate out of range"))?);
            if *cur.peek() != Tok::Comma {
                break;
            }
            cur.next();
        }
        cur.expect(Tok::RBracket)?;
        points.push(pt);
        if *cur.peek() != Tok::Comma {
            break;
        }
        cur.next();
    }
    cur.expect(Tok::RBracket)?;
    LatticePolytope::new(points)
}

pub fn polytope_text(p: &LatticePolytope) -> String {
    let pts: Vec<String> = p
        .points()
        .iter()
        .map(|q| format!("[{}]", q.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", pts.join(","))
}
