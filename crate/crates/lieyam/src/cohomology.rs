//! The Yamaguti cochain complex `C^p(g, V)` with coboundary `δ = (δ_I, δ_II)`.
//!
//! A cochain of degree 1 is a map `f: g → V`, stored as a tensor of shape
//! `[dim g, dim V]` (`f[i][o]` = coordinate `o` of `f(eᵢ)`). A cochain of
//! degree `n+1 ≥ 2` is a pair `(f, g)` with `f: (∧²g)ⁿ → V` of shape
//! `[W]ⁿ ++ [dim V]` and `g: (∧²g)ⁿ ⊗ g → V` of shape `[W]ⁿ ++ [dim g, dim V]`,
//! where `W = dim g·(dim g − 1)/2` indexes the canonical wedge basis.
//! Flattened cochains list `f` first, then `g`.

use rayon::prelude::*;

use crate::algebra::LieYamagutiAlgebra;
use crate::error::{Error, Result};
use crate::exact::{sparse_from_dense, sparse_rank, Matrix, Rational, SparseVec, Tensor};
use crate::rep::Representation;
use crate::wedge::WedgeBasis;

/// Highest cochain degree produced by default.
pub const DEFAULT_YAMAGUTI_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct YamagutiCochain {
    degree: usize,
    f: Tensor,
    g: Option<Tensor>,
}

fn pow(w: usize, n: usize) -> usize {
    w.pow(n as u32)
}

/// Shapes of the `f` and (for degree ≥ 2) `g` tensors.
pub fn cochain_shapes(dim_g: usize, dim_v: usize, degree: usize) -> (Vec<usize>, Option<Vec<usize>>) {
    assert!(degree >= 1, "cochains start in degree 1");
    if degree == 1 {
        return (vec![dim_g, dim_v], None);
    }
    let w = dim_g * dim_g.saturating_sub(1) / 2;
    let mut fs = vec![w; degree - 1];
    fs.push(dim_v);
    let mut gs = vec![w; degree - 1];
    gs.push(dim_g);
    gs.push(dim_v);
    (fs, Some(gs))
}

/// Dimension of `C^degree(g, V)`.
pub fn cochain_len(dim_g: usize, dim_v: usize, degree: usize) -> usize {
    let (fs, gs) = cochain_shapes(dim_g, dim_v, degree);
    fs.iter().product::<usize>() + gs.map_or(0, |s| s.iter().product())
}

impl YamagutiCochain {
    pub fn zeros(dim_g: usize, dim_v: usize, degree: usize) -> Self {
        let (fs, gs) = cochain_shapes(dim_g, dim_v, degree);
        YamagutiCochain {
            degree,
            f: Tensor::zeros(&fs),
            g: gs.map(|s| Tensor::zeros(&s)),
        }
    }

    /// Degree-1 cochain from a `dim V × dim g` matrix.
    pub fn from_map(f: &Matrix) -> Self {
        let (m, d) = (f.rows(), f.cols());
        let mut t = Tensor::zeros(&[d, m]);
        for i in 0..d {
            for o in 0..m {
                t.set(&[i, o], f.get(o, i).clone());
            }
        }
        YamagutiCochain {
            degree: 1,
            f: t,
            g: None,
        }
    }

    /// Degree-1 cochain as a `dim V × dim g` matrix.
    pub fn as_map(&self) -> Option<Matrix> {
        if self.degree != 1 {
            return None;
        }
        let (d, m) = (self.f.shape()[0], self.f.shape()[1]);
        let mut out = Matrix::zeros(m, d);
        for i in 0..d {
            for o in 0..m {
                out.set(o, i, self.f.get(&[i, o]).clone());
            }
        }
        Some(out)
    }

    /// Degree-`n+1` cochain from its two tensors.
    pub fn from_parts(f: Tensor, g: Tensor) -> Result<Self> {
        let n = f.shape().len().saturating_sub(1);
        let ok = n >= 1
            && g.shape().len() == n + 2
            && f.shape()[..n] == g.shape()[..n]
            && f.shape()[n] == g.shape()[n + 1];
        if !ok {
            return Err(Error::DimMismatch(format!(
                "cochain tensors of shapes {:?} and {:?}",
                f.shape(),
                g.shape()
            )));
        }
        Ok(YamagutiCochain {
            degree: n + 1,
            f,
            g: Some(g),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn f(&self) -> &Tensor {
        &self.f
    }

    pub fn g(&self) -> Option<&Tensor> {
        self.g.as_ref()
    }

    pub fn f_mut(&mut self) -> &mut Tensor {
        &mut self.f
    }

    pub fn g_mut(&mut self) -> Option<&mut Tensor> {
        self.g.as_mut()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.as_ref().is_none_or(|g| g.is_zero())
    }

    pub fn flatten(&self) -> Vec<Rational> {
        let mut v = self.f.data().to_vec();
        if let Some(g) = &self.g {
            v.extend_from_slice(g.data());
        }
        v
    }

    pub fn from_flat(dim_g: usize, dim_v: usize, degree: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != cochain_len(dim_g, dim_v, degree) {
            return Err(Error::DimMismatch(format!(
                "{} entries for a degree-{degree} cochain",
                data.len()
            )));
        }
        let (fs, gs) = cochain_shapes(dim_g, dim_v, degree);
        let nf: usize = fs.iter().product();
        let mut data = data;
        let gdata = data.split_off(nf);
        Ok(YamagutiCochain {
            degree,
            f: Tensor::from_vec(&fs, data)?,
            g: match gs {
                Some(s) => Some(Tensor::from_vec(&s, gdata)?),
                None => None,
            },
        })
    }
}

/// Nonzero entries `(row, col, value)` of a matrix.
#[derive(Clone, Debug, Default)]
pub(crate) struct SparseMatrix {
    nz: Vec<(usize, usize, Rational)>,
}

impl SparseMatrix {
    pub(crate) fn from_matrix(m: &Matrix) -> Self {
        let mut nz = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = m.get(i, j);
                if !v.is_zero() {
                    nz.push((i, j, v.clone()));
                }
            }
        }
        SparseMatrix { nz }
    }

    /// `out += c·M·x`.
    pub(crate) fn apply_add(&self, out: &mut [Rational], x: &[Rational], c: &Rational) {
        for (o, k, v) in &self.nz {
            if !x[*k].is_zero() {
                out[*o] += &(&(c * v) * &x[*k]);
            }
        }
    }
}

fn axpy(out: &mut [Rational], c: &Rational, x: &[Rational]) {
    for (o, xi) in out.iter_mut().zip(x) {
        if !xi.is_zero() {
            *o += &(c * xi);
        }
    }
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Precomputed structure tables for applying `δ` to flat cochains.
#[derive(Clone, Debug)]
pub struct YamagutiComplex {
    d: usize,
    m: usize,
    wb: WedgeBasis,
    cap: usize,
    rho: Vec<SparseMatrix>,
    mu: Vec<Vec<SparseMatrix>>,
    /// `D` on the wedge basis.
    dw: Vec<SparseMatrix>,
    /// `br[a][b][c]`: coefficient of `e_c` in `[e_a,e_b]`.
    br: Vec<Vec<Vec<Rational>>>,
    /// `tern[a][b][z][c]`: coefficient of `e_c` in `⟪e_a,e_b,e_z⟫`.
    tern: Tensor,
    /// For each `c`: wedges `w = e_a∧e_b` with the coefficient of `e_c` in `[e_a,e_b]`.
    brk_into: Vec<Vec<(usize, Rational)>>,
    /// For each `c`: `(w, z, coefficient of e_c in ⟪e_a,e_b,e_z⟫)`.
    tern_into: Vec<Vec<(usize, usize, Rational)>>,
    /// For each wedge `w`: `(w_k, w_l, coefficient of w in w_k∘w_l)`.
    circ_into: Vec<Vec<(usize, usize, Rational)>>,
}

impl YamagutiComplex {
    pub fn new(a: &LieYamagutiAlgebra, rep: &Representation) -> Result<Self> {
        let dd = rep.derived_d(a)?;
        let d = a.dim();
        let m = rep.module_dim();
        let wb = WedgeBasis::new(d);
        let nw = wb.len();
        let rho = rep.rho().iter().map(SparseMatrix::from_matrix).collect();
        let mu = rep
            .mu()
            .iter()
            .map(|r| r.iter().map(SparseMatrix::from_matrix).collect())
            .collect();
        let dw = wb
            .pairs()
            .iter()
            .map(|&(i, j)| SparseMatrix::from_matrix(dd.at(i, j)))
            .collect();
        let br: Vec<Vec<Vec<Rational>>> = (0..d)
            .map(|i| (0..d).map(|j| a.bracket_basis(i, j).to_vec()).collect())
            .collect();
        let mut brk_into = vec![Vec::new(); d];
        let mut tern_into = vec![Vec::new(); d];
        for (w, &(i, j)) in wb.pairs().iter().enumerate() {
            for c in 0..d {
                let v = &br[i][j][c];
                if !v.is_zero() {
                    brk_into[c].push((w, v.clone()));
                }
                for z in 0..d {
                    let t = &a.triple_basis(i, j, z)[c];
                    if !t.is_zero() {
                        tern_into[c].push((w, z, t.clone()));
                    }
                }
            }
        }
        let mut circ_into = vec![Vec::new(); nw];
        let unit = |i: usize| a.e(i);
        for (wk, &(xk, yk)) in wb.pairs().iter().enumerate() {
            for (wl, &(xl, yl)) in wb.pairs().iter().enumerate() {
                // X_k∘X_l = ⟪x_k,y_k,x_l⟫∧y_l + x_l∧⟪x_k,y_k,y_l⟫
                let p1 = wb.wedge(a.triple_basis(xk, yk, xl), &unit(yl));
                let p2 = wb.wedge(&unit(xl), a.triple_basis(xk, yk, yl));
                for (w, (s1, s2)) in p1.iter().zip(&p2).enumerate() {
                    let c = s1 + s2;
                    if !c.is_zero() {
                        circ_into[w].push((wk, wl, c));
                    }
                }
            }
        }
        Ok(YamagutiComplex {
            d,
            m,
            wb,
            cap: DEFAULT_YAMAGUTI_CAP,
            rho,
            mu,
            dw,
            br,
            tern: a.ternary().clone(),
            brk_into,
            tern_into,
            circ_into,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn dim_g(&self) -> usize {
        self.d
    }

    pub fn dim_v(&self) -> usize {
        self.m
    }

    pub fn cochain_len(&self, degree: usize) -> usize {
        cochain_len(self.d, self.m, degree)
    }

    fn check_degree(&self, p: usize) -> Result<()> {
        if p == 0 {
            return Err(Error::UnsupportedDegree(0));
        }
        if p + 1 > self.cap {
            return Err(Error::DegreeCapExceeded {
                degree: p + 1,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// `δ` on a flat cochain of degree `p`.
    pub fn delta_flat(&self, p: usize, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_degree(p)?;
        if x.len() != self.cochain_len(p) {
            return Err(Error::DimMismatch(format!(
                "{} entries for a degree-{p} cochain",
                x.len()
            )));
        }
        Ok(if p == 1 {
            self.delta1(x)
        } else {
            self.delta_higher(p - 1, x)
        })
    }

    fn delta1(&self, x: &[Rational]) -> Vec<Rational> {
        let (d, m) = (self.d, self.m);
        let nw = self.wb.len();
        let mut out = vec![Rational::zero(); self.cochain_len(2)];
        let one = Rational::one();
        let mone = -Rational::one();
        let fval = |c: usize| &x[c * m..(c + 1) * m];
        let gbase = nw * m;
        for (w, &(a, b)) in self.wb.pairs().iter().enumerate() {
            // δ_I f(x,y) = ρ(x)f(y) − ρ(y)f(x) − f([x,y])
            {
                let o = &mut out[w * m..(w + 1) * m];
                self.rho[a].apply_add(o, fval(b), &one);
                self.rho[b].apply_add(o, fval(a), &mone);
                for c in 0..d {
                    let k = &self.br[a][b][c];
                    if !k.is_zero() {
                        axpy(o, &-k, fval(c));
                    }
                }
            }
            // δ_II f(x,y,z) = D(x,y)f(z) + μ(y,z)f(x) − μ(x,z)f(y) − f(⟪x,y,z⟫)
            for z in 0..d {
                let off = gbase + (w * d + z) * m;
                let o = &mut out[off..off + m];
                self.dw[w].apply_add(o, fval(z), &one);
                self.mu[b][z].apply_add(o, fval(a), &one);
                self.mu[a][z].apply_add(o, fval(b), &mone);
                for c in 0..d {
                    let k = self.tern.get(&[a, b, z, c]);
                    if !k.is_zero() {
                        axpy(o, &-k, fval(c));
                    }
                }
            }
        }
        out
    }

    /// `δ` from degree `n+1` (n wedge slots) to degree `n+2`.
    fn delta_higher(&self, n: usize, x: &[Rational]) -> Vec<Rational> {
        let (d, m) = (self.d, self.m);
        let nw = self.wb.len();
        let in_f = pow(nw, n) * m;
        let out_f = pow(nw, n + 1) * m;
        let mut out = vec![Rational::zero(); self.cochain_len(n + 2)];
        let sn = sign(n);
        let msn = -sn.clone();
        let enc = |v: &[usize]| v.iter().fold(0usize, |acc, &i| acc * nw + i);
        let decode = |mut u: usize| {
            let mut t = vec![0usize; n];
            for k in (0..n).rev() {
                t[k] = u % nw;
                u /= nw;
            }
            t
        };
        let insert = |u: &[usize], k: usize, w: usize| {
            let mut v = Vec::with_capacity(u.len() + 1);
            v.extend_from_slice(&u[..k]);
            v.push(w);
            v.extend_from_slice(&u[k..]);
            v
        };
        let fo = |v: &[usize]| enc(v) * m;
        let go = |v: &[usize], z: usize| out_f + (enc(v) * d + z) * m;

        for uix in 0..pow(nw, n) {
            let fv = &x[uix * m..(uix + 1) * m];
            let f_nonzero = fv.iter().any(|t| !t.is_zero());
            let g_nonzero =
                (0..d).any(|c| x[in_f + (uix * d + c) * m..in_f + (uix * d + c + 1) * m].iter().any(|t| !t.is_zero()));
            if !f_nonzero && !g_nonzero {
                continue;
            }
            let u = decode(uix);
            if f_nonzero {
                // Σ_{k=1}^{n} (−1)^{k+1} D(X_k) f(…X̂_k…)
                for kp in 0..n {
                    let s = sign(kp);
                    for w in 0..nw {
                        let v = insert(&u, kp, w);
                        let o = fo(&v);
                        self.dw[w].apply_add(&mut out[o..o + m], fv, &s);
                    }
                }
                // Σ_{k<l} (−1)^k f(…X̂_k…, X_k∘X_l, …)
                for p in 0..n {
                    for (wk, wl, c) in &self.circ_into[u[p]] {
                        let mut base = u.clone();
                        base[p] = *wl;
                        for kp in 0..=p {
                            let v = insert(&base, kp, *wk);
                            let o = fo(&v);
                            axpy(&mut out[o..o + m], &(&sign(kp + 1) * c), fv);
                        }
                    }
                }
            }
            for c in 0..d {
                let goff = in_f + (uix * d + c) * m;
                let gv = &x[goff..goff + m];
                if gv.iter().all(|t| t.is_zero()) {
                    continue;
                }
                // (−1)ⁿ (ρ(x)g(…,y) − ρ(y)g(…,x) − g(…,[x,y]))
                for a in 0..c {
                    let (w, _) = self.wb.index(a, c).expect("a < c");
                    let o = fo(&[u.as_slice(), &[w]].concat());
                    self.rho[a].apply_add(&mut out[o..o + m], gv, &sn);
                }
                for b in c + 1..d {
                    let (w, _) = self.wb.index(c, b).expect("c < b");
                    let o = fo(&[u.as_slice(), &[w]].concat());
                    self.rho[b].apply_add(&mut out[o..o + m], gv, &msn);
                }
                for (w, k) in &self.brk_into[c] {
                    let o = fo(&[u.as_slice(), &[*w]].concat());
                    axpy(&mut out[o..o + m], &(&msn * k), gv);
                }
                // (−1)ⁿ (μ(y,z)g(…,x) − μ(x,z)g(…,y))
                for b in c + 1..d {
                    let (w, _) = self.wb.index(c, b).expect("c < b");
                    let v = [u.as_slice(), &[w]].concat();
                    for z in 0..d {
                        let o = go(&v, z);
                        self.mu[b][z].apply_add(&mut out[o..o + m], gv, &sn);
                    }
                }
                for a in 0..c {
                    let (w, _) = self.wb.index(a, c).expect("a < c");
                    let v = [u.as_slice(), &[w]].concat();
                    for z in 0..d {
                        let o = go(&v, z);
                        self.mu[a][z].apply_add(&mut out[o..o + m], gv, &msn);
                    }
                }
                // Σ_{k=1}^{n+1} (−1)^{k+1} D(X_k) g(…X̂_k…, z)
                for kp in 0..=n {
                    let s = sign(kp);
                    for w in 0..nw {
                        let v = insert(&u, kp, w);
                        let o = go(&v, c);
                        self.dw[w].apply_add(&mut out[o..o + m], gv, &s);
                    }
                }
                // Σ_{k<l} (−1)^k g(…X̂_k…, X_k∘X_l, …, z)
                for p in 0..n {
                    for (wk, wl, coef) in &self.circ_into[u[p]] {
                        let mut base = u.clone();
                        base[p] = *wl;
                        for kp in 0..=p {
                            let v = insert(&base, kp, *wk);
                            let o = go(&v, c);
                            axpy(&mut out[o..o + m], &(&sign(kp + 1) * coef), gv);
                        }
                    }
                }
                // Σ_{k=1}^{n+1} (−1)^k g(…X̂_k…, ⟪x_k,y_k,z⟫)
                for (w, z, coef) in &self.tern_into[c] {
                    for kp in 0..=n {
                        let v = insert(&u, kp, *w);
                        let o = go(&v, *z);
                        axpy(&mut out[o..o + m], &(&sign(kp + 1) * coef), gv);
                    }
                }
            }
        }
        out
    }

    pub fn delta(&self, c: &YamagutiCochain) -> Result<YamagutiCochain> {
        let p = c.degree();
        let (fs, _) = cochain_shapes(self.d, self.m, p);
        if c.f().shape() != fs.as_slice() {
            return Err(Error::DimMismatch(format!(
                "cochain shape {:?} does not match the complex",
                c.f().shape()
            )));
        }
        let out = self.delta_flat(p, &c.flatten())?;
        YamagutiCochain::from_flat(self.d, self.m, p + 1, out)
    }

    /// Columns of `δ_p` (images of the canonical basis cochains), sparse.
    pub fn delta_columns(&self, p: usize) -> Result<Vec<SparseVec>> {
        self.check_degree(p)?;
        let n = self.cochain_len(p);
        Ok((0..n)
            .into_par_iter()
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                let col = if p == 1 { self.delta1(&e) } else { self.delta_higher(p - 1, &e) };
                sparse_from_dense(&col)
            })
            .collect())
    }

    /// Matrix of `δ_p` in the canonical cochain bases.
    pub fn delta_matrix(&self, p: usize) -> Result<Matrix> {
        let cols = self.delta_columns(p)?;
        let rows = self.cochain_len(p + 1);
        let mut mat = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col {
                mat.set(*i, j, v.clone());
            }
        }
        Ok(mat)
    }

    pub fn delta_rank(&self, p: usize) -> Result<usize> {
        Ok(sparse_rank(self.delta_columns(p)?))
    }

    /// `dim H^p`: `nullity(δ_p) − rank(δ_{p−1})`, with `H¹ = ker δ₁`.
    pub fn cohomology_dim(&self, p: usize) -> Result<usize> {
        self.check_degree(p)?;
        let nullity = self.cochain_len(p) - self.delta_rank(p)?;
        if p == 1 {
            return Ok(nullity);
        }
        let prev = self.delta_rank(p - 1)?;
        if prev > nullity {
            return Err(Error::InternalConsistency(format!(
                "image of δ_{} exceeds the kernel of δ_{p}",
                p - 1
            )));
        }
        Ok(nullity - prev)
    }

    /// Checks `δ_{p+1}(δ_p(e_j)) = 0` for every basis cochain `e_j`; returns
    /// the first failing column, if any.
    pub fn delta_squared_failure(&self, p: usize) -> Result<Option<usize>> {
        self.check_degree(p + 1)?;
        let n = self.cochain_len(p);
        let fails: Vec<usize> = (0..n)
            .into_par_iter()
            .filter_map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                let y = self.delta_flat(p, &e).expect("degree checked");
                let z = self.delta_flat(p + 1, &y).expect("degree checked");
                z.iter().any(|t| !t.is_zero()).then_some(j)
            })
            .collect();
        Ok(fails.into_iter().min())
    }
}

/// `δ(c)` with the default degree cap.
pub fn delta(a: &LieYamagutiAlgebra, rep: &Representation, c: &YamagutiCochain) -> Result<YamagutiCochain> {
    YamagutiComplex::new(a, rep)?.delta(c)
}

/// Matrix of `δ_p` with the default degree cap.
pub fn delta_matrix(a: &LieYamagutiAlgebra, rep: &Representation, p: usize) -> Result<Matrix> {
    YamagutiComplex::new(a, rep)?.delta_matrix(p)
}

/// `dim H^p(g, V)` with the default degree cap.
pub fn cohomology_dim(a: &LieYamagutiAlgebra, rep: &Representation, p: usize) -> Result<usize> {
    YamagutiComplex::new(a, rep)?.cohomology_dim(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::a2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn delta_squared_vanishes_on_a2() {
        let a = a2();
        for rep in [Representation::adjoint(&a), Representation::coadjoint(&a)] {
            let cx = YamagutiComplex::new(&a, &rep).unwrap();
            for p in 1..=2 {
                assert_eq!(cx.delta_squared_failure(p).unwrap(), None, "p = {p}");
            }
        }
    }

    #[test]
    fn delta_squared_vanishes_on_semidirect_and_random() {
        let a = a2();
        let ad = Representation::adjoint(&a);
        let s = ad.semidirect(&a).unwrap();
        let cx = YamagutiComplex::new(&s, &Representation::adjoint(&s)).unwrap();
        for p in 1..=2 {
            assert_eq!(cx.delta_squared_failure(p).unwrap(), None, "semidirect p = {p}");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let (name, pair) = crate::fixtures::random_valid_pair(&mut rng, 3);
            let cx = YamagutiComplex::new(&pair.algebra, &pair.rep).unwrap();
            for p in 1..=2 {
                assert_eq!(cx.delta_squared_failure(p).unwrap(), None, "{name} p = {p}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let a = a2();
        let cx = YamagutiComplex::new(&a, &Representation::adjoint(&a)).unwrap();
        assert!(matches!(
            cx.delta_matrix(4),
            Err(Error::DegreeCapExceeded { degree: 5, cap: 4 })
        ));
    }
}
