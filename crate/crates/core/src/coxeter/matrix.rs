//! Checked integer kernels for the geometric representation.
//!
//! Matrices are row-major `n * n` slices. Entry `(r, c)` is the coefficient of
//! `alpha_r` in `w(alpha_c)`, so column `c` is the image of the simple root
//! `alpha_c`. The generator `s_i` acts by `alpha_j -> alpha_j - C[i][j] alpha_i`.

use crate::error::{Error, Result};

#[inline]
fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub(crate) fn product(n: usize, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark == 0 {
                continue;
            }
            for c in 0..n {
                let t = mul(ark, b[k * n + c])?;
                out[r * n + c] = out[r * n + c].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(out)
}

/// `m <- m * s_i`: column `j` becomes `col_j - C[i][j] col_i`.
pub(crate) fn right_mul_gen(n: usize, cartan: &[i64], m: &mut [i64], i: usize) -> Result<()> {
    let col_i: Vec<i64> = (0..n).map(|r| m[r * n + i]).collect();
    for j in 0..n {
        let c = cartan[i * n + j];
        if c == 0 {
            continue;
        }
        for r in 0..n {
            m[r * n + j] = sub(m[r * n + j], mul(c, col_i[r])?)?;
        }
    }
    Ok(())
}

/// `m <- s_i * m`: only row `i` changes, to `row_i - sum_j C[i][j] row_j`.
pub(crate) fn left_mul_gen(n: usize, cartan: &[i64], m: &mut [i64], i: usize) -> Result<()> {
    let mut new_row = vec![0i64; n];
    for (c, slot) in new_row.iter_mut().enumerate() {
        let mut acc = m[i * n + c];
        for j in 0..n {
            let cij = cartan[i * n + j];
            if cij != 0 {
                acc = sub(acc, mul(cij, m[j * n + c])?)?;
            }
        }
        *slot = acc;
    }
    m[i * n..(i + 1) * n].copy_from_slice(&new_row);
    Ok(())
}

/// Whether `w(alpha_c)` is a negative root.
#[inline]
pub(crate) fn column_is_negative(n: usize, m: &[i64], c: usize) -> bool {
    debug_assert!(column_is_sign_coherent(n, m, c));
    (0..n).any(|r| m[r * n + c] < 0)
}

pub(crate) fn column_is_sign_coherent(n: usize, m: &[i64], c: usize) -> bool {
    let neg = (0..n).any(|r| m[r * n + c] < 0);
    let pos = (0..n).any(|r| m[r * n + c] > 0);
    !(neg && pos)
}

pub(crate) fn first_negative_column(n: usize, m: &[i64]) -> Option<usize> {
    (0..n).find(|&c| column_is_negative(n, m, c))
}
