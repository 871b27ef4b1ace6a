//! Sparse multivariate polynomials over a [`FieldSpec`].
//!
//! A [`Polynomial`] stores `(Monomial, Coeff)` terms strictly descending
//! under its ring's active order, with no zero coefficients; this canonical
//! form is unique for a given order. All values are immutable after
//! construction and freely shareable across threads.

use crate::field::{Coeff, FieldSpec};
use crate::monomial::{Bidegree, Bigrading, Monomial, MonomialOrder};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Variable names reserved for internal ring constructions: the Rees
/// elimination tag, the colon tag, and the target variables `Y0..Ym`.
pub fn is_reserved_var_name(name: &str) -> bool {
    if name == "t" || name == "u" {
        return true;
    }
    let mut chars = name.chars();
    chars.next() == Some('Y') && !name[1..].is_empty() && name[1..].chars().all(|c| c.is_ascii_digit())
}

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
    grading: Option<Bigrading>,
}

/// Ring descriptor: variable names, coefficient field, active monomial
/// order, and an optional bigrading (metadata only; never consulted by
/// the order). Cheap to clone.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<RingInner>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for PolyRing {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    DuplicateVar(String),
    RingMismatch,
    ArityMismatch { expected: usize, got: usize },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::DuplicateVar(v) => write!(f, "duplicate variable name '{}'", v),
            RingError::RingMismatch => write!(f, "operands belong to different rings"),
            RingError::ArityMismatch { expected, got } => {
                write!(f, "expected {} images, got {}", expected, got)
            }
        }
    }
}

impl std::error::Error for RingError {}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: MonomialOrder) -> Result<Self, RingError> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVar(v.clone()));
            }
        }
        Ok(PolyRing(Arc::new(RingInner {
            vars,
            field,
            order,
            grading: None,
        })))
    }

    /// Same ring with a different active order (polynomials must be
    /// re-canonicalized via [`Polynomial::with_order`]).
    pub fn reorder(&self, order: MonomialOrder) -> PolyRing {
        PolyRing(Arc::new(RingInner {
            vars: self.0.vars.clone(),
            field: self.0.field.clone(),
            order,
            grading: self.0.grading.clone(),
        }))
    }

    pub fn with_grading(&self, grading: Bigrading) -> PolyRing {
        assert_eq!(grading.weights.len(), self.nvars());
        PolyRing(Arc::new(RingInner {
            vars: self.0.vars.clone(),
            field: self.0.field.clone(),
            order: self.0.order.clone(),
            grading: Some(grading),
        }))
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn grading(&self) -> Option<&Bigrading> {
        self.0.grading.as_ref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Arithmetic compatibility: same variables, field, and order.
    pub fn compatible(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars
                && self.0.field == other.0.field
                && self.0.order == other.0.order)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.nvars()), self.field().one())],
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.nvars(), i), self.field().one())],
        }
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.nvars()), c)],
        }
    }

    pub fn monomial(&self, m: Monomial, c: Coeff) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars());
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Canonical polynomial from unsorted terms (merges duplicates, drops zeros).
    pub fn from_terms(&self, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        let field = self.field().clone();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), self.nvars());
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if field.is_zero(&s) {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        terms.sort_by(|a, b| self.order().cmp(&b.0, &a.0));
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }
}

/// A sparse multivariate polynomial in canonical form.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree counting only variables in `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(range.clone()))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Bidegree under the given grading (or the ring's own).
    pub fn bidegree_under(&self, grading: &Bigrading) -> Bidegree {
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return Bidegree::Zero,
            Some((m, _)) => grading.monomial_bidegree(m),
        };
        for (m, _) in it {
            if grading.monomial_bidegree(m) != first {
                return Bidegree::Inhomogeneous;
            }
        }
        Bidegree::Homogeneous(first.0, first.1)
    }

    /// Bidegree under the ring's grading; panics if the ring carries none.
    pub fn bidegree(&self) -> Bidegree {
        self.bidegree_under(
            self.ring
                .grading()
                .expect("ring carries no bigrading"),
        )
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if !self.ring.compatible(&other.ring) {
            return Err(RingError::RingMismatch);
        }
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if !self.ring.compatible(&other.ring) {
            return Err(RingError::RingMismatch);
        }
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if !self.ring.compatible(&other.ring) {
            return Err(RingError::RingMismatch);
        }
        Ok(self.mul_impl(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("ring mismatch")
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.checked_sub(other).expect("ring mismatch")
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("ring mismatch")
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    /// Merge two sorted term lists (subtracting when `negate`).
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.ring.field();
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ord.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(ca, cb)
                    } else {
                        field.add(ca, cb)
                    };
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (m, c) in &self.terms[i..] {
            out.push((m.clone(), c.clone()));
        }
        for (m, c) in &other.terms[j..] {
            let c = if negate { field.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        // multiply the shorter operand's terms into the longer
        let (short, long) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = self.ring.zero();
        for (m, c) in &short.terms {
            acc = acc.merge(&long.mul_term(m, c), false);
        }
        acc
    }

    /// Terms are already strictly descending under `ring`'s order.
    pub(crate) fn from_sorted_terms_unchecked(
        ring: PolyRing,
        terms: Vec<(Monomial, Coeff)>,
    ) -> Polynomial {
        Polynomial { ring, terms }
    }

    /// The polynomial without its leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Multiply by a single term; preserves sortedness.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().inv(lc).expect("nonzero leading coeff");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// Evaluate this polynomial at `images` (one per variable of its own
    /// ring), producing a polynomial in the images' ring. Powers of each
    /// image are cached across terms.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, RingError> {
        if images.len() != self.ring.nvars() {
            return Err(RingError::ArityMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring().clone(),
            None => self.ring.clone(), // zero-variable source: constants only
        };
        for im in images {
            if !im.ring().compatible(&target) {
                return Err(RingError::RingMismatch);
            }
        }
        assert_eq!(
            self.ring.field(),
            target.field(),
            "substitution across different coefficient fields"
        );
        // power cache per variable
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![p.ring().one()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul_impl(&images[v]);
                    powers[v].push(next);
                }
                term = term.mul_impl(&powers[v][e as usize]);
            }
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, or `None` if the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(self.ring.compatible(divisor.ring()));
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let field = self.ring.field().clone();
        let dlm = divisor.leading_monomial().unwrap().clone();
        let dlc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut q_terms = Vec::new();
        while let Some(lm) = rem.leading_monomial() {
            if !dlm.divides(lm) {
                return None;
            }
            let qm = dlm.quotient_into(lm);
            let qc = field.div(rem.leading_coeff().unwrap(), &dlc).unwrap();
            rem = rem.merge(&divisor.mul_term(&qm, &qc), true);
            q_terms.push((qm, qc));
        }
        Some(self.ring.from_terms(q_terms))
    }

    /// Re-canonicalize into a ring with the same variables/field but a
    /// (possibly) different order.
    pub fn with_order(&self, target: &PolyRing) -> Polynomial {
        assert_eq!(self.ring.vars(), target.vars());
        assert_eq!(self.ring.field(), target.field());
        target.from_terms(self.terms.clone())
    }

    /// Transport into `target` via `var_map` (`var_map[i]` = index in
    /// `target` of this ring's variable `i`). Exponents on unmapped
    /// variables must be zero.
    pub fn map_into(&self, target: &PolyRing, var_map: &[Option<usize>]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        assert_eq!(self.ring.field(), target.field());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, &e) in m.exps().iter().enumerate() {
                    if e > 0 {
                        let j = var_map[i].expect("variable not present in target ring");
                        exps[j] = e;
                    }
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        target.from_terms(terms)
    }

    /// For a polynomial of degree exactly 1 in the variable block
    /// `x_range`, write it as `sum_i Q_i * x_i` and return the `Q_i`
    /// (polynomials in the same ring, free of the block). Returns `None`
    /// if any term is not linear in the block.
    pub fn block_linear_coords(&self, x_range: std::ops::Range<usize>) -> Option<Vec<Polynomial>> {
        let n = x_range.len();
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); n];
        for (m, c) in &self.terms {
            if m.degree_in(x_range.clone()) != 1 {
                return None;
            }
            let i = x_range.clone().find(|&v| m.exp(v) > 0).unwrap();
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            buckets[i - x_range.start].push((Monomial::new(exps), c.clone()));
        }
        Some(
            buckets
                .into_iter()
                .map(|ts| self.ring.from_terms(ts))
                .collect(),
        )
    }
}
