//! Small dense integer matrices with overflow-checked arithmetic.
//!
//! Vectors are rows; a matrix acts by `x ↦ x · M`.

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("integer matrix entry"))
}

pub(crate) fn mul_entry(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("integer matrix entry"))
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn zero(rows: usize, cols: usize) -> Matrix {
    vec![vec![0; cols]; rows]
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub fn dot(x: &[i64], y: &[i64]) -> Result<i64> {
    x.iter().zip(y).try_fold(0i64, |acc, (&a, &b)| add(acc, mul_entry(a, b)?))
}

/// `x · M`.
pub fn vec_mul(x: &[i64], m: &Matrix) -> Result<Vec<i64>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![0i64; cols];
    for (&xi, row) in x.iter().zip(m) {
        if xi == 0 {
            continue;
        }
        for (o, &r) in out.iter_mut().zip(row) {
            *o = add(*o, mul_entry(xi, r)?)?;
        }
    }
    Ok(out)
}

pub fn mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.iter().map(|row| vec_mul(row, b)).collect()
}

/// `x J yᵀ`.
pub fn pairing(x: &[i64], form: &Matrix, y: &[i64]) -> Result<i64> {
    dot(&vec_mul(x, form)?, y)
}

/// Standard symplectic form on `ℤ^{2g}`: diagonal blocks `[[0, 1], [-1, 0]]`.
pub fn standard_form(dim: usize) -> Matrix {
    let mut j = zero(dim, dim);
    for k in (0..dim).step_by(2) {
        j[k][k + 1] = 1;
        j[k + 1][k] = -1;
    }
    j
}

pub fn is_skew(m: &Matrix) -> bool {
    (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == -m[j][i]))
}

/// Unimodular column reduction of `b` (rows of length `cols`).
///
/// Returns `(rank, v, v_inv)` with `v · v_inv = I` such that `b · v` has its
/// nonzero columns among the first `rank`.
pub fn column_reduce(b: &Matrix, cols: usize) -> Result<(usize, Matrix, Matrix)> {
    let mut a = b.clone();
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let mut c = 0;
    for r in 0..a.len() {
        if c == cols {
            break;
        }
        loop {
            let pivot = (c..cols).filter(|&j| a[r][j] != 0).min_by_key(|&j| a[r][j].unsigned_abs());
            let Some(p) = pivot else { break };
            swap_cols(&mut a, &mut v, &mut v_inv, c, p);
            let mut done = true;
            for j in c + 1..cols {
                if a[r][j] != 0 {
                    let q = a[r][j] / a[r][c];
                    add_col(&mut a, &mut v, &mut v_inv, j, c, -q)?;
                    if a[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                if a[r][c] < 0 {
                    negate_col(&mut a, &mut v, &mut v_inv, c);
                }
                c += 1;
                break;
            }
        }
    }
    Ok((c, v, v_inv))
}

fn swap_cols(a: &mut Matrix, v: &mut Matrix, v_inv: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut().chain(v.iter_mut()) {
        row.swap(i, j);
    }
    v_inv.swap(i, j);
}

/// Column `j += q · column k`.
fn add_col(a: &mut Matrix, v: &mut Matrix, v_inv: &mut Matrix, j: usize, k: usize, q: i64) -> Result<()> {
    for row in a.iter_mut().chain(v.iter_mut()) {
        row[j] = add(row[j], mul_entry(q, row[k])?)?;
    }
    // inverse operation on rows: row k -= q · row j
    for col in 0..v_inv[k].len() {
        v_inv[k][col] = add(v_inv[k][col], mul_entry(-q, v_inv[j][col])?)?;
    }
    Ok(())
}

fn negate_col(a: &mut Matrix, v: &mut Matrix, v_inv: &mut Matrix, j: usize) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        row[j] = -row[j];
    }
    for x in v_inv[j].iter_mut() {
        *x = -*x;
    }
}

/// For a unimodular skew form `g`, returns `P` with `P g Pᵀ` equal to
/// [`standard_form`]. Rows of `P` are the new basis in old coordinates.
pub fn symplectic_basis(g: &Matrix) -> Result<Matrix> {
    let n = g.len();
    if n % 2 == 1 {
        return Err(Error::InvalidCover(format!("intersection form has odd rank {n}")));
    }
    let mut rest: Vec<Vec<i64>> = identity(n);
    let mut out = Vec::with_capacity(n);
    while !rest.is_empty() {
        let e = rest.remove(0);
        let values: Vec<i64> = rest.iter().map(|r| pairing(&e, g, r)).collect::<Result<_>>()?;
        // Euclid on the pairings with e, by unimodular moves among the rest
        let mut vals = values;
        loop {
            let nz: Vec<usize> = (0..rest.len()).filter(|&k| vals[k] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&k| vals[k].unsigned_abs()).expect("non-empty");
            for &k in &nz {
                if k != p {
                    let q = vals[k] / vals[p];
                    for col in 0..n {
                        rest[k][col] = add(rest[k][col], mul_entry(-q, rest[p][col])?)?;
                    }
                    vals[k] -= q * vals[p];
                }
            }
        }
        let Some(fi) = (0..rest.len()).find(|&k| vals[k] != 0) else {
            return Err(Error::InvalidCover("intersection form is degenerate".into()));
        };
        if vals[fi].abs() != 1 {
            return Err(Error::InvalidCover("intersection form is not unimodular".into()));
        }
        let mut f = rest.remove(fi);
        if vals[fi] < 0 {
            f.iter_mut().for_each(|x| *x = -*x);
        }
        // r ↦ r + ⟨r,e⟩ f − ⟨r,f⟩ e makes r orthogonal to e and f
        for r in rest.iter_mut() {
            let re = pairing(r, g, &e)?;
            let rf = pairing(r, g, &f)?;
            for col in 0..n {
                r[col] = add(add(r[col], mul_entry(re, f[col])?)?, mul_entry(-rf, e[col])?)?;
            }
        }
        out.push(e);
        out.push(f);
    }
    Ok(out)
}
