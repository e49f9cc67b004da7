//! Exact dense linear algebra over an arbitrary field: reduction, solving,
//! kernels, inverses, determinants, and span membership.
//!
//! Matrices are plain `Vec<Vec<Elem>>` in row-major order; everything here
//! works on handfuls of rows, so no effort is spent on sparsity.

use alloc::vec;
use alloc::vec::Vec;

use crate::ring::Field;

pub type Matrix<F> = Vec<Vec<<F as crate::ring::Ring>::Elem>>;

/// Gauss-Jordan reduction in place; returns the pivot column of each pivot
/// row in order.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, p);
        let inv = field.inv(&m[row][col]).expect("pivot is nonzero");
        for c in col..cols {
            m[row][c] = field.mul(&m[row][c], &inv);
        }
        for r in 0..rows {
            if r != row && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = field.mul(&factor, &m[row][c]);
                    m[r][c] = field.sub(&m[r][c], &sub);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F>) -> usize {
    let mut copy = m.clone();
    rref(field, &mut copy).len()
}

/// One nonzero kernel vector of `m` (viewing rows as equations on a column
/// vector), or `None` when the kernel is trivial.
pub fn kernel_vector<F: Field>(field: &F, m: &Matrix<F>) -> Option<Vec<F::Elem>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut copy = m.clone();
    let pivots = rref(field, &mut copy);
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![field.zero(); cols];
    v[free] = field.one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = field.neg(&copy[r][free]);
    }
    Some(v)
}

/// Solves `m * x = rhs`; `None` when inconsistent. With full column rank the
/// solution is unique.
pub fn solve<F: Field>(field: &F, m: &Matrix<F>, rhs: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let rows = m.len();
    assert_eq!(rows, rhs.len());
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

/// Matrix inverse; `None` when singular.
pub fn invert<F: Field>(field: &F, m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n);
        let mut r = row.clone();
        for j in 0..n {
            r.push(if i == j { field.one() } else { field.zero() });
        }
        aug.push(r);
    }
    let pivots = rref(field, &mut aug);
    // Invertible iff every pivot lands in the left block.
    if pivots.iter().filter(|&&c| c < n).count() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by elimination with exact division.
pub fn det<F: Field>(field: &F, m: &Matrix<F>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut result = field.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !field.is_zero(&a[r][col])) else {
            return field.zero();
        };
        if p != col {
            a.swap(col, p);
            result = field.neg(&result);
        }
        result = field.mul(&result, &a[col][col]);
        let inv = field.inv(&a[col][col]).expect("pivot is nonzero");
        for r in (col + 1)..n {
            if field.is_zero(&a[r][col]) {
                continue;
            }
            let factor = field.mul(&a[r][col], &inv);
            for c in col..n {
                let sub = field.mul(&factor, &a[col][c]);
                a[r][c] = field.sub(&a[r][c], &sub);
            }
        }
    }
    result
}

/// Is `target` in the linear span of `vectors`?
pub fn in_span<F: Field>(field: &F, vectors: &[Vec<F::Elem>], target: &[F::Elem]) -> bool {
    if target.iter().all(|t| field.is_zero(t)) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    // Solve V^T x = target.
    let cols = vectors.len();
    let dim = target.len();
    let mut m: Matrix<F> = Vec::with_capacity(dim);
    for d in 0..dim {
        let mut row = Vec::with_capacity(cols);
        for v in vectors {
            debug_assert_eq!(v.len(), dim);
            row.push(v[d].clone());
        }
        m.push(row);
    }
    solve(field, &m, target).is_some()
}
