//! Row Hermite and Smith normal forms with unimodular transforms.
//!
//! Pivots are always the entry of minimal absolute value; ties go to the
//! smallest row index (then the smallest column index for Smith form), so
//! results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U·A = H`.
///
/// `H` is in row echelon form, every pivot is positive and the entries above
/// a pivot lie in `[0, pivot)`. Zero rows come last.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    hnf_in_place(&mut h, &mut u);
    (h, u)
}

pub(crate) fn hnf_in_place(h: &mut IntMatrix, u: &mut IntMatrix) -> Vec<usize> {
    let (rows, cols) = (h.rows(), h.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut found = false;
        loop {
            let Some(p) = min_abs_row(h, r, c) else { break };
            found = true;
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.sub_row_multiple(i, r, &q, c);
                u.sub_row_multiple(i, r, &q, 0);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            if h.get(i, c).is_zero() {
                continue;
            }
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_row_multiple(i, r, &q, c);
            u.sub_row_multiple(i, r, &q, 0);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn min_abs_row(m: &IntMatrix, from: usize, c: usize) -> Option<usize> {
    let mut best: Option<(usize, BigInt)> = None;
    for i in from..m.rows() {
        let v = m.get(i, c);
        if v.is_zero() {
            continue;
        }
        let a = v.abs();
        if best.as_ref().map_or(true, |(_, b)| a < *b) {
            best = Some((i, a));
        }
    }
    best.map(|(i, _)| i)
}

/// Smith normal form: returns `(D, U, V)` with `U`, `V` unimodular,
/// `U·A·V = D` diagonal, `d_1 | d_2 | …` and every `d_i >= 0`.
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pr, pc)) = min_abs_entry(&d, t, t) else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.sub_row_multiple(i, t, &q, t);
                u.sub_row_multiple(i, t, &q, 0);
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.sub_col_multiple(j, t, &q);
                v.sub_col_multiple(j, t, &q);
            }

            // A smaller remainder in the pivot row or column becomes the new
            // pivot.
            let mut best: Option<(usize, usize, BigInt)> = None;
            let pivot_abs = d.get(t, t).abs();
            for i in t + 1..m {
                let a = d.get(i, t).abs();
                if !a.is_zero() && a < pivot_abs && best.as_ref().map_or(true, |b| a < b.2) {
                    best = Some((i, t, a));
                }
            }
            for j in t + 1..n {
                let a = d.get(t, j).abs();
                if !a.is_zero() && a < pivot_abs && best.as_ref().map_or(true, |b| a < b.2) {
                    best = Some((t, j, a));
                }
            }
            if let Some((i, j, _)) = best {
                if i != t {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                } else {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                }
                continue;
            }

            // Pivot row and column are clear; enforce divisibility of the
            // remaining block.
            let p = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    d.sub_row_multiple(t, i, &minus_one, t);
                    u.sub_row_multiple(t, i, &minus_one, 0);
                }
                None => break,
            }
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

fn min_abs_entry(m: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in r0..m.rows() {
        for j in c0..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().map_or(true, |b| a < b.2) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Diagonal entries `d_1, …, d_min(m,n)` of a Smith normal form.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    let (d, _, _) = snf(a);
    (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect()
}
