//! Dense row reduction over a finite field.

use crate::field::{FieldElement, FiniteField};

pub type Row = Vec<FieldElement>;

/// Reduces `rows` in place to reduced row-echelon form, drops zero rows and
/// returns the pivot columns.
pub fn rref(f: &FiniteField, rows: &mut Vec<Row>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        if inv != FieldElement::ONE {
            for x in rows[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &FiniteField, rows: &[Row], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, ncols).len()
}

/// Basis of {x : rows * x^T = 0}, given `rows` already in RREF with `pivots`.
pub fn nullspace(f: &FiniteField, rows: &[Row], pivots: &[usize], ncols: usize) -> Vec<Row> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|c| {
            let mut v = vec![FieldElement::ZERO; ncols];
            v[c] = FieldElement::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rows[r][c]);
            }
            v
        })
        .collect()
}

/// a * b^T.
pub fn mul_transpose(f: &FiniteField, a: &[Row], b: &[Row]) -> Vec<Row> {
    a.iter()
        .map(|x| b.iter().map(|y| dot(f, x, y)).collect())
        .collect()
}

pub fn dot(f: &FiniteField, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
    x.iter()
        .zip(y)
        .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Whether `v` lies in the row space of `rows` (RREF with `pivots`).
pub fn in_row_space(f: &FiniteField, rows: &[Row], pivots: &[usize], v: &[FieldElement]) -> bool {
    let mut r = v.to_vec();
    for (row, &pc) in rows.iter().zip(pivots) {
        let c = r[pc];
        if c.is_zero() {
            continue;
        }
        for (x, &y) in r.iter_mut().zip(row) {
            *x = f.sub(*x, f.mul(c, y));
        }
    }
    r.iter().all(|x| x.is_zero())
}
