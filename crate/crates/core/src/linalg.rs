//! Kernels of dense matrices over an exact field.
//!
//! Row reduction pivots on the first nonzero entry in column order, so results
//! are reproducible.

use crate::arith::Field;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    cols: usize,
    rows: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(cols: usize) -> Self {
        Matrix { cols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<E>) {
        assert_eq!(row.len(), self.cols, "row width differs from matrix width");
        self.rows.push(row);
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut rows: Vec<Vec<F::Elem>> =
        std::mem::take(&mut m.rows).into_iter().filter(|r| r.iter().any(|x| !field.is_zero(x))).collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..m.cols {
        let Some(found) = (top..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(top, found);
        let inv = field.inv(&rows[top][col]).expect("pivot is nonzero");
        for x in rows[top].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    m.rows = rows;
    pivots
}

/// A basis of `{ v : M v = 0 }`, one vector per free column, in column order.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut reduced = m.clone();
    let pivots = rref(field, &mut reduced);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); m.cols];
            v[free] = field.one();
            for (row, &p) in reduced.rows.iter().zip(&pivots) {
                v[p] = field.neg(&row[free]);
            }
            v
        })
        .collect()
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut reduced = m.clone();
    rref(field, &mut reduced).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};

    fn mat<F: Field>(f: &F, cols: usize, rows: &[&[i64]]) -> Matrix<F::Elem> {
        let mut m = Matrix::new(cols);
        for r in rows {
            m.push_row(r.iter().map(|&x| f.from_i64(x)).collect());
        }
        m
    }

    fn apply<F: Field>(f: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
        m.rows()
            .iter()
            .map(|r| r.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
            .collect()
    }

    #[test]
    fn kernel_over_rationals() {
        let f = Rationals;
        let m = mat(&f, 3, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&f, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&f, &m, v).iter().all(|x| f.is_zero(x)));
        }
    }

    #[test]
    fn kernel_depends_on_characteristic() {
        let rows: &[&[i64]] = &[&[2, 0], &[0, 1]];
        assert_eq!(kernel(&Rationals, &mat(&Rationals, 2, rows)).len(), 0);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(kernel(&f2, &mat(&f2, 2, rows)), vec![vec![1, 0]]);
    }

    #[test]
    fn empty_matrix_has_full_kernel() {
        let f = PrimeField::new(5).unwrap();
        let m: Matrix<u64> = Matrix::new(3);
        assert_eq!(kernel(&f, &m).len(), 3);
        assert_eq!(rank(&f, &m), 0);
    }
}
