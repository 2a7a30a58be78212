//! Multivariate polynomials over the exact coefficient rings.
//!
//! A polynomial carries its ring context (variable names, monomial order,
//! coefficient descriptor) and stores terms sorted in descending order, with
//! no zero coefficients. Operands of binary operations must share a ring
//! context; the checked entry points return [`Error::RingMismatch`],
//! the operator impls panic (callers use them only where the contexts are
//! known to agree).

use crate::error::Error;
use crate::field::{FieldElement, FieldKind};
use crate::monomial::{Monomial, MonomialOrder};
use crate::Result;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Shared ring context: variable names, active monomial order, coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCtx {
    vars: Vec<String>,
    order: MonomialOrder,
    field: FieldKind,
}

impl RingCtx {
    pub fn new(vars: Vec<String>, order: MonomialOrder, field: FieldKind) -> Arc<Self> {
        for (i, v) in vars.iter().enumerate() {
            assert!(
                !vars[..i].contains(v),
                "duplicate variable name `{v}` in ring context"
            );
        }
        if let MonomialOrder::Block { head } = order {
            assert!(head <= vars.len(), "block head exceeds variable count");
        }
        Arc::new(RingCtx { vars, order, field })
    }

    /// Same variables and coefficients, different monomial order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<Self> {
        RingCtx::new(self.vars.clone(), order, self.field.clone())
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.vars[idx]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> &FieldKind {
        &self.field
    }
}

fn same_ring(a: &Arc<RingCtx>, b: &Arc<RingCtx>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Binary polynomial operations exposed through [`poly_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// A value bound to a variable during substitution.
#[derive(Debug, Clone)]
pub enum Binding {
    Scalar(FieldElement),
    Poly(Polynomial),
}

/// Exact multivariate polynomial in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingCtx>,
    /// Terms in strictly descending monomial order, no zero coefficients.
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingCtx>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingCtx>) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<RingCtx>, c: FieldElement) -> Self {
        assert_eq!(c.kind(), *ring.field(), "constant kind mismatch");
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn from_int(ring: &Arc<RingCtx>, v: i64) -> Self {
        Polynomial::constant(ring, FieldElement::from_int(ring.field(), v))
    }

    /// The variable `name` as a polynomial.
    pub fn var(ring: &Arc<RingCtx>, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::var(ring.nvars(), idx, 1), ring.field().one())],
        })
    }

    /// Build from arbitrary terms; sorts, merges and drops zeros.
    pub fn from_terms(ring: &Arc<RingCtx>, terms: Vec<(Monomial, FieldElement)>) -> Self {
        let order = ring.order();
        let mut terms = terms;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            debug_assert_eq!(c.kind(), *ring.field());
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_deg(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.deg();
                self.terms.iter().all(|(m, _)| m.deg() == d)
            }
        }
    }

    /// True when no term involves variable `idx`.
    pub fn free_of(&self, idx: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exps()[idx] == 0)
    }

    pub fn checked_add(&self, rhs: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.merge(rhs, false))
    }

    pub fn checked_sub(&self, rhs: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.merge(rhs, true))
    }

    pub fn checked_mul(&self, rhs: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                prods.push((m1.mul(m2), c1.mul(c2)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, prods))
    }

    /// Merge two term lists sorted in descending order.
    fn merge(&self, rhs: &Polynomial, negate_rhs: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_rhs { cb.neg() } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().map(|(m, c)| {
            let c = if negate_rhs { c.neg() } else { c.clone() };
            (m.clone(), c)
        }));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .filter(|(_, k)| !k.is_zero())
                .collect(),
        }
    }

    /// Multiply by a single monomial (keeps the term order).
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            base = base.checked_mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// Divide by the leading coefficient. Fails for dual-number leading
    /// coefficients with nilpotent constant part.
    pub fn monic(&self) -> Result<Polynomial> {
        match self.leading() {
            None => Ok(self.clone()),
            Some((_, c)) => {
                if c.is_one() {
                    return Ok(self.clone());
                }
                let inv = c.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Drop the leading term (used by the division algorithm).
    pub(crate) fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms[1..].to_vec(),
        }
    }

    /// Re-interpret in `target`, mapping variables by name. Exponents of a
    /// variable missing from `target` must be zero.
    pub fn embed(&self, target: &Arc<RingCtx>) -> Result<Polynomial> {
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.vars() {
            map.push(target.var_index(name));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = alloc::vec![0u32; target.nvars()];
            for (i, e) in m.exps().iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = *e,
                    None => {
                        return Err(Error::UnknownVariable(self.ring.var_name(i).to_string()))
                    }
                }
            }
            terms.push((Monomial::new(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact substitution. Bound variables are replaced by scalars or
    /// polynomials of the `target` ring; unbound variables must exist in
    /// `target` and remain symbolic.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Binding>,
        target: &Arc<RingCtx>,
    ) -> Result<Polynomial> {
        for (name, b) in bindings {
            if self.ring.var_index(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
            match b {
                Binding::Scalar(c) => {
                    if c.kind() != *target.field() {
                        return Err(Error::RingMismatch);
                    }
                }
                Binding::Poly(p) => {
                    if !same_ring(&p.ring, target) {
                        return Err(Error::RingMismatch);
                    }
                }
            }
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let bound: Vec<Option<&Binding>> = self
            .ring
            .vars()
            .iter()
            .map(|name| bindings.get(name))
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut scalar = c.clone();
            let mut sym = Polynomial::one(target);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match bound[i] {
                    Some(Binding::Scalar(v)) => scalar = scalar.mul(&v.pow(e as usize)),
                    Some(Binding::Poly(p)) => {
                        sym = sym.checked_mul(&p.pow(e as usize))?;
                    }
                    None => {
                        let name = self.ring.var_name(i);
                        let j = target
                            .var_index(name)
                            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                        sym = sym.mul_monomial(&Monomial::var(target.nvars(), j, e));
                    }
                }
            }
            acc = acc.checked_add(&sym.scale(&scalar))?;
        }
        Ok(acc)
    }

    /// Evaluate fully at a point given in ring-variable order.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = v.mul(&point[i].pow(e as usize));
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Pad every term with `hvar` so the result is homogeneous of the
    /// original total degree. Errors when `hvar` already occurs.
    pub fn homogenize(&self, hvar: &str) -> Result<Polynomial> {
        let idx = self
            .ring
            .var_index(hvar)
            .ok_or_else(|| Error::UnknownVariable(hvar.to_string()))?;
        if !self.free_of(idx) {
            return Err(Error::HomogenizationVarPresent(hvar.to_string()));
        }
        let d = self.total_deg();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let pad = Monomial::var(self.ring.nvars(), idx, d - m.deg());
                (m.mul(&pad), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Substitute `hvar = 1`.
    pub fn dehomogenize(&self, hvar: &str) -> Result<Polynomial> {
        let idx = self
            .ring
            .var_index(hvar)
            .ok_or_else(|| Error::UnknownVariable(hvar.to_string()))?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps[idx] = 0;
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps()[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[idx] -= 1;
            let k = c.mul(&FieldElement::from_int(self.ring.field(), e as i64));
            terms.push((Monomial::new(exps), k));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-sort the terms into another ring sharing variables and field.
    pub fn with_ring(&self, target: &Arc<RingCtx>) -> Result<Polynomial> {
        if self.ring.vars() != target.vars() || self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(target, self.terms.clone()))
    }
}

/// Spec-level entry point for `add`/`sub`/`mul` with ring checking.
pub fn poly_op(lhs: &Polynomial, rhs: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => lhs.checked_add(rhs),
        PolyOp::Sub => lhs.checked_sub(rhs),
        PolyOp::Mul => lhs.checked_mul(rhs),
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring context mismatch")
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring context mismatch")
    }
}

impl core::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring context mismatch")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.display_parts();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag == "1";
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                let mut first = true;
                if !coeff_is_one {
                    write!(f, "{mag}")?;
                    first = false;
                }
                for (idx, e) in m.exps().iter().enumerate() {
                    if *e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring.var_name(idx))?;
                    if *e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
