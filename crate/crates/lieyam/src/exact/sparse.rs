//! Sparse exact vectors and an incremental echelon basis for ranks of large,
//! mostly-zero coboundary matrices.

use std::collections::HashMap;

use super::rational::Rational;

/// Sorted `(index, nonzero value)` pairs.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + c·b` for sorted sparse vectors.
pub fn sparse_axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + &(c * &b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-echelon basis of a growing set of vectors; each stored vector has
/// leading entry 1 at a distinct pivot index.
#[derive(Default, Debug, Clone)]
pub struct EchelonBasis {
    pivots: HashMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis; returns the remainder (zero iff `v`
    /// lies in the span).
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let (col, val) = (v[k].0, v[k].1.clone());
            if let Some(p) = self.pivots.get(&col) {
                v = sparse_axpy(&v, &-val, p);
            } else {
                k += 1;
            }
        }
        v
    }

    /// Inserts `v`; returns whether it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((col, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        let r: SparseVec = r.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        self.pivots.insert(col, r);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of the span of sparse vectors.
pub fn sparse_rank(vs: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut b = EchelonBasis::new();
    for v in vs {
        b.insert(v);
    }
    b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_vectors() {
        let q = |n| Rational::from_int(n);
        let v1 = vec![(0, q(1)), (2, q(2))];
        let v2 = vec![(1, q(1))];
        let v3 = sparse_axpy(&v1, &q(3), &v2);
        assert_eq!(sparse_rank([v1.clone(), v2, v3]), 2);
        let mut b = EchelonBasis::new();
        b.insert(v1.clone());
        assert!(b.contains(sparse_axpy(&vec![], &q(-5), &v1)));
    }
}
