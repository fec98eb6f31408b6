//! Dense matrices over a finite field: rank, products and linear solves.

use crate::galois::{FieldCtx, Symbol};

pub type Matrix = Vec<Vec<Symbol>>;

/// Row-reduces in place with first-nonzero pivoting; returns pivot columns.
pub fn row_reduce(ctx: &FieldCtx, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = ctx.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = ctx.sub(*x, ctx.mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(ctx: &FieldCtx, m: &[Vec<Symbol>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(ctx, &mut work).len()
}

pub fn dot(ctx: &FieldCtx, a: &[Symbol], b: &[Symbol]) -> Symbol {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

/// `a * b^T`.
pub fn mul_transpose(ctx: &FieldCtx, a: &[Vec<Symbol>], b: &[Vec<Symbol>]) -> Matrix {
    a.iter()
        .map(|ra| b.iter().map(|rb| dot(ctx, ra, rb)).collect())
        .collect()
}

/// One solution of `a x = b`, if the system is consistent.
pub fn solve(ctx: &FieldCtx, a: &[Vec<Symbol>], b: &[Symbol]) -> Option<Vec<Symbol>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = row_reduce(ctx, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![0; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols];
    }
    Some(x)
}
