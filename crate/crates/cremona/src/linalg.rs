//! Dense exact linear algebra over the coefficient field.
//!
//! Small systems only: fixed-degree slices of polynomial ideals reduce to
//! these matrices. Deterministic pivoting (first nonzero in column order)
//! keeps every downstream basis canonical.

use crate::field::{Coeff, FieldSpec};

/// Row-major dense matrix over a field.
#[derive(Clone, Debug)]
pub struct KMatrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Coeff>,
}

impl KMatrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        KMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.at(row, col)).unwrap();
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = f.sub(self.at(r, c), &f.mul(&factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Canonical nullspace basis (one vector per free column, ordered by
    /// free column index; free coordinate set to 1).
    pub fn nullspace(mut self) -> Vec<Vec<Coeff>> {
        let f = self.field.clone();
        let pivots = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                // pivot row r: x_p = -sum over free columns
                vec[p] = f.neg(self.at(r, free));
            }
            basis.push(vec);
        }
        basis
    }

    /// Solve `A x = b`; `None` when inconsistent. Free coordinates are 0.
    pub fn solve(&self, b: &[Coeff]) -> Option<Vec<Coeff>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field.clone();
        let mut aug = KMatrix::zero(f.clone(), self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}
