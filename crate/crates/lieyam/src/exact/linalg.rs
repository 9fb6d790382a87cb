//! Exact linear algebra over ℚ by fraction-based Gaussian elimination.

use super::matrix::Matrix;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced row echelon form of the rows, in place. Returns pivot columns.
fn rref_rows(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, after) = tail.split_first_mut().expect("pivot row");
        let nz: Vec<usize> = (c..ncols).filter(|&j| !prow[j].is_zero()).collect();
        for row in head.iter_mut().chain(after.iter_mut()) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for &j in &nz {
                let d = &f * &prow[j];
                row[j] -= &d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_rows(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = to_rows(m);
    let piv = rref_rows(&mut rows, m.cols());
    let out = if rows.is_empty() {
        Matrix::zeros(0, m.cols())
    } else {
        Matrix::from_rows(rows).expect("rectangular")
    };
    (out, piv)
}

/// Rank over ℚ.
pub fn rank(m: &Matrix) -> usize {
    // Eliminate along the shorter side; rank is transpose-invariant.
    if m.rows() > m.cols() {
        let t = m.transpose();
        rref_rows(&mut to_rows(&t), t.cols()).len()
    } else {
        rref_rows(&mut to_rows(m), m.cols()).len()
    }
}

/// Rank of a matrix with polynomial entries; rejected unless every entry is
/// constant in `t`.
pub fn rank_poly(m: &Matrix<Poly>) -> Result<usize> {
    Ok(rank(&m.to_rational()?))
}

/// Exact basis of the kernel `{x : m·x = 0}`, one vector per free column.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let n = m.cols();
    let mut rows = to_rows(m);
    let piv = rref_rows(&mut rows, n);
    let mut is_pivot = vec![None; n];
    for (r, &c) in piv.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (r, &c) in piv.iter().enumerate() {
            v[c] = -&rows[r][free];
        }
        basis.push(v);
    }
    basis
}

pub fn nullspace_dim(m: &Matrix) -> usize {
    m.cols() - rank(m)
}

/// Exact inverse of a square matrix.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::DimMismatch(format!(
            "cannot invert a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let piv = rref_rows(&mut rows, 2 * n);
    if piv.len() < n || piv[n - 1] >= n {
        return Err(Error::Singular);
    }
    Matrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Some solution of `m·x = b`, or `None` if the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(m.rows(), b.len());
    let n = m.cols();
    let mut rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let piv = rref_rows(&mut rows, n + 1);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

pub fn determinant(m: &Matrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::DimMismatch("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut a = to_rows(m);
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].recip().expect("nonzero pivot");
        for i in c + 1..n {
            let f = &a[i][c] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let d = &f * &a[c][j];
                a[i][j] -= &d;
            }
        }
    }
    Ok(det)
}
