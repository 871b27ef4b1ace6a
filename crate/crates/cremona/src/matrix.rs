//! Matrices of polynomials: submatrices, determinants, signed maximal
//! minors. Determinants run a two-level scheme: Laplace expansion row by
//! row with memoization on column subsets, entries reduced against an
//! optional Gröbner basis after every level to keep growth down.

use crate::groebner::normal_form;
use crate::poly::{PolyRing, Polynomial};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>, // row-major
}

impl PolyMatrix {
    pub fn new(ring: PolyRing, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        for e in &entries {
            assert!(e.ring().compatible(&ring));
        }
        PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        PolyMatrix::new(self.ring.clone(), self.cols, self.rows, entries)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.at(r, c).clone());
            }
        }
        PolyMatrix::new(self.ring.clone(), rows.len(), cols.len(), entries)
    }

    /// Determinant, reducing after each expansion level against `reducers`
    /// when given (a Gröbner basis in the same ring).
    pub fn det_mod(&self, reducers: Option<&[Polynomial]>) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let k = self.rows;
        if k == 0 {
            return self.ring.one();
        }
        assert!(k <= 16, "determinant limited to 16x16");
        let reduce = |p: Polynomial| match reducers {
            Some(gb) if !gb.is_empty() => normal_form(&p, gb),
            _ => p,
        };
        let mut cur: HashMap<u32, Polynomial> = HashMap::new();
        cur.insert(0, self.ring.one());
        for row in 0..k {
            let mut next: HashMap<u32, Polynomial> = HashMap::new();
            for (mask, d) in cur {
                if d.is_zero() {
                    continue;
                }
                for c in 0..k as u32 {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let entry = self.at(row, c as usize);
                    if entry.is_zero() {
                        continue;
                    }
                    let pos = (mask & ((1 << c) - 1)).count_ones();
                    let term = entry.mul(&d);
                    let term = if (row as u32 + pos) % 2 == 1 {
                        term.neg()
                    } else {
                        term
                    };
                    let slot = next.entry(mask | (1 << c)).or_insert_with(|| self.ring.zero());
                    *slot = slot.add(&term);
                }
            }
            for v in next.values_mut() {
                let taken = std::mem::replace(v, self.ring.zero());
                *v = reduce(taken);
            }
            cur = next;
        }
        cur.remove(&((1u32 << k) - 1)).unwrap_or_else(|| self.ring.zero())
    }

    /// Ordered signed maximal minors of a `k x (k+1)` matrix:
    /// `Δ_i = (-1)^i det(delete column i)`.
    pub fn signed_minors_drop_col(&self, reducers: Option<&[Polynomial]>) -> Vec<Polynomial> {
        assert_eq!(self.cols, self.rows + 1);
        let all_rows: Vec<usize> = (0..self.rows).collect();
        (0..self.cols)
            .map(|i| {
                let cols: Vec<usize> = (0..self.cols).filter(|&c| c != i).collect();
                let d = self.submatrix(&all_rows, &cols).det_mod(reducers);
                if i % 2 == 1 {
                    d.neg()
                } else {
                    d
                }
            })
            .collect()
    }

    /// Ordered signed maximal minors of a `(k+1) x k` matrix:
    /// `Δ_i = (-1)^i det(delete row i)`.
    pub fn signed_minors_drop_row(&self, reducers: Option<&[Polynomial]>) -> Vec<Polynomial> {
        assert_eq!(self.rows, self.cols + 1);
        let all_cols: Vec<usize> = (0..self.cols).collect();
        (0..self.rows)
            .map(|i| {
                let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
                let d = self.submatrix(&rows, &all_cols).det_mod(reducers);
                if i % 2 == 1 {
                    d.neg()
                } else {
                    d
                }
            })
            .collect()
    }
}

/// Lexicographic k-subsets of `0..n`.
pub struct Combinations {
    n: usize,
    k: usize,
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            k,
            cur: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.cur.clone());
        }
        // advance rightmost index that can move
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.cur[i] < self.n - (self.k - i) {
                self.cur[i] += 1;
                for j in i + 1..self.k {
                    self.cur[j] = self.cur[j - 1] + 1;
                }
                return Some(self.cur.clone());
            }
        }
    }
}
