use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense multi-index array in row-major order.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<S = Rational> {
    shape: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> Tensor<S> {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![S::zero(); n],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<S>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::DimMismatch(format!(
                "{} entries for shape {shape:?}",
                data.len()
            )));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut o = 0;
        for (i, n) in idx.iter().zip(&self.shape) {
            debug_assert!(i < n);
            o = o * n + i;
        }
        o
    }

    /// Inverse of [`offset`](Self::offset).
    pub fn unravel(&self, mut off: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        for (k, n) in self.shape.iter().enumerate().rev() {
            idx[k] = off % n;
            off /= n;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: S) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn entry_mut(&mut self, idx: &[usize]) -> &mut S {
        let o = self.offset(idx);
        &mut self.data[o]
    }

    /// Contiguous slice along the last axis at the given leading index.
    pub fn fiber(&self, lead: &[usize]) -> &[S] {
        let last = *self.shape.last().expect("tensor has at least one axis");
        let mut o = 0;
        for (i, n) in lead.iter().zip(&self.shape) {
            o = o * n + i;
        }
        &self.data[o * last..(o + 1) * last]
    }

    pub fn fiber_mut(&mut self, lead: &[usize]) -> &mut [S] {
        let last = *self.shape.last().expect("tensor has at least one axis");
        let mut o = 0;
        for (i, n) in lead.iter().zip(&self.shape) {
            o = o * n + i;
        }
        &mut self.data[o * last..(o + 1) * last]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor<T> {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.shape, o.shape);
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.shape, o.shape);
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Contracts the leading axes with the given vectors and returns the
    /// remaining entries (row-major). `args[k]` must have length `shape[k]`.
    pub fn contract(&self, args: &[&[S]]) -> Vec<S> {
        assert!(args.len() <= self.shape.len());
        for (a, n) in args.iter().zip(&self.shape) {
            assert_eq!(a.len(), *n, "argument length does not match axis");
        }
        let rest: usize = self.shape[args.len()..].iter().product();
        let mut out = vec![S::zero(); rest];
        self.contract_rec(args, 0, 0, S::one(), &mut out, rest);
        out
    }

    fn contract_rec(&self, args: &[&[S]], axis: usize, off: usize, coef: S, out: &mut [S], rest: usize) {
        if axis == args.len() {
            let block = &self.data[off * rest..(off + 1) * rest];
            for (o, x) in out.iter_mut().zip(block) {
                o.add_mul(&coef, x);
            }
            return;
        }
        for (i, a) in args[axis].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = coef.mul(a);
            self.contract_rec(args, axis + 1, off * self.shape[axis] + i, c, out, rest);
        }
    }

    /// First multi-index with a nonzero entry.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|o| self.unravel(o))
    }
}

/// Iterator over all multi-indices of a shape, in row-major order.
pub fn multi_indices(shape: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = shape.iter().product();
    (0..total).map(move |mut off| {
        let mut idx = vec![0; shape.len()];
        for (k, n) in shape.iter().enumerate().rev() {
            idx[k] = off % n;
            off /= n;
        }
        idx
    })
}
