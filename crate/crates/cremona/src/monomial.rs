//! Monomials, monomial orders, and bigrading bookkeeping.
//!
//! A monomial is an exponent vector aligned with the ambient ring's
//! variable list. Orders are total, multiplicative, and well-founded on
//! each degree; the bigrading is pure metadata (orders never consult it),
//! which is what lets a variable like the Rees tag carry a negative
//! X-weight without breaking well-ordering.

use std::cmp::Ordering;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The single variable `var` (exponent 1).
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Sum of exponents over a variable range (used for block degrees).
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// A monomial order. All variants are total orders on each fixed variable
/// count, multiplicative, with 1 minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: the first `split` variables dominate. Any monomial
    /// involving a variable of the first block exceeds every monomial
    /// supported in the second block only; within blocks, grevlex.
    Block { split: usize },
    /// Weighted degree first (weights nonnegative), ties broken by grevlex.
    WeightedGrevLex { weights: Vec<u32> },
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // last differing exponent, reversed
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => {
                for i in 0..a.exps.len() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => cmp_grevlex(&a.exps, &b.exps),
            MonomialOrder::Block { split } => {
                let s = *split;
                match cmp_grevlex(&a.exps[..s], &b.exps[..s]) {
                    Ordering::Equal => cmp_grevlex(&a.exps[s..], &b.exps[s..]),
                    o => o,
                }
            }
            MonomialOrder::WeightedGrevLex { weights } => {
                let wa: u64 = a.exps.iter().zip(weights).map(|(e, w)| *e as u64 * *w as u64).sum();
                let wb: u64 = b.exps.iter().zip(weights).map(|(e, w)| *e as u64 * *w as u64).sum();
                match wa.cmp(&wb) {
                    Ordering::Equal => cmp_grevlex(&a.exps, &b.exps),
                    o => o,
                }
            }
        }
    }
}

/// Per-variable weight pairs for a bigrading; negative weights are allowed
/// (the Rees tag has weight `(-d, 1)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigrading {
    pub weights: Vec<(i64, i64)>,
}

/// Outcome of a bidegree query on a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bidegree {
    /// The zero polynomial is bihomogeneous of every bidegree.
    Zero,
    Homogeneous(i64, i64),
    Inhomogeneous,
}

impl Bigrading {
    pub fn new(weights: Vec<(i64, i64)>) -> Self {
        Bigrading { weights }
    }

    /// Standard bigrading on a ring split as X-block then Y-block.
    pub fn xy(nx: usize, ny: usize) -> Self {
        let mut weights = vec![(1i64, 0i64); nx];
        weights.extend(std::iter::repeat_n((0i64, 1i64), ny));
        Bigrading { weights }
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> (i64, i64) {
        debug_assert_eq!(m.nvars(), self.weights.len());
        let mut p = 0i64;
        let mut q = 0i64;
        for (e, (wp, wq)) in m.exps().iter().zip(&self.weights) {
            p += *e as i64 * wp;
            q += *e as i64 * wq;
        }
        (p, q)
    }
}
