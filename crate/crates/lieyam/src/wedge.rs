//! The canonical basis `{eᵢ∧eⱼ : i < j}` of `∧²g`, in lexicographic order.

use crate::exact::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeBasis {
    dim: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl WedgeBasis {
    pub fn new(dim: usize) -> Self {
        let mut pairs = Vec::new();
        let mut index = vec![vec![usize::MAX; dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                index[i][j] = pairs.len();
                index[j][i] = pairs.len();
                pairs.push((i, j));
            }
        }
        WedgeBasis { dim, pairs, index }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis wedges, `dim·(dim−1)/2`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, w: usize) -> (usize, usize) {
        self.pairs[w]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Index of `e_min(i,j) ∧ e_max(i,j)` and the sign relating it to
    /// `eᵢ∧eⱼ`; `None` when `i = j`.
    pub fn index(&self, i: usize, j: usize) -> Option<(usize, bool)> {
        if i == j {
            None
        } else {
            Some((self.index[i][j], i < j))
        }
    }

    /// Coordinates of `u∧v`: `Σ_{i<j} (uᵢvⱼ − uⱼvᵢ) eᵢ∧eⱼ`.
    pub fn wedge<S: Scalar>(&self, u: &[S], v: &[S]) -> Vec<S> {
        self.pairs
            .iter()
            .map(|&(i, j)| u[i].mul(&v[j]).sub(&u[j].mul(&v[i])))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    #[test]
    fn ordering_and_wedge() {
        let w = WedgeBasis::new(3);
        assert_eq!(w.pairs(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(w.index(2, 1), Some((2, false)));
        let q = Rational::from_int;
        let x = w.wedge(&[q(1), q(0), q(0)], &[q(0), q(0), q(1)]);
        assert_eq!(x, vec![q(0), q(1), q(0)]);
        let y = w.wedge(&[q(0), q(0), q(1)], &[q(1), q(0), q(0)]);
        assert_eq!(y, vec![q(0), q(-1), q(0)]);
    }
}
