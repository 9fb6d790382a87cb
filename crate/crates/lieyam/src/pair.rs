//! Cohomology of a pair (algebra, representation): the subcomplex of the
//! adjoint Yamaguti complex of the semidirect product `g ⋉ V` spanned by
//! cochains of total V-weight zero.
//!
//! A cochain of degree 1 is `(f₁, f₂) ∈ gl(g) × gl(V)`. A cochain of degree
//! `n+1 ≥ 2` has three components:
//! 1. `(f₁, g₁)`: a g-valued Yamaguti cochain;
//! 2. `(f₂, g₂)`: `f₂` on `(∧²g)^{n−1} ⊗ (g∧V)` and `g₂` on `(∧²g)ⁿ ⊗ V`, V-valued;
//! 3. `f₃⁽ⁱ⁾` (mixed slot at position `i < n`) and `g₃⁽ʲ⁾` (mixed slot at
//!    position `j ≤ n`, followed by an argument in g), V-valued.
//!
//! A mixed slot `g∧V` is stored as two axes `[dim g, dim V]`; the basis
//! element `(x, v)` corresponds to the semidirect wedge `x∧v` (g first).

use rayon::prelude::*;

use crate::algebra::LieYamagutiAlgebra;
use crate::cohomology::{YamagutiCochain, YamagutiComplex};
use crate::error::{Error, Result};
use crate::exact::{multi_indices, sparse_from_dense, sparse_rank, Matrix, Rational, SparseVec, Tensor};
use crate::rep::{DerivedD, LieYRepPair, Representation};
use crate::wedge::WedgeBasis;

/// Highest pair-cochain degree produced by default.
pub const DEFAULT_PAIR_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub enum PairCochain {
    Degree1 {
        f1: Matrix,
        f2: Matrix,
    },
    /// Degree `n + 1`.
    Higher {
        n: usize,
        comp1_f: Tensor,
        comp1_g: Tensor,
        g2: Tensor,
        /// `f_mixed[i]` has its mixed slot at 0-based position `i`; the last
        /// one (`i = n−1`) is `f₂`, the others are the `f₃⁽ⁱ⁺¹⁾`.
        f_mixed: Vec<Tensor>,
        /// `g_mixed[j]` is `g₃⁽ʲ⁺¹⁾`.
        g_mixed: Vec<Tensor>,
    },
}

/// Component shapes of a degree-`p` pair cochain, in flattening order:
/// degree 1: `f₁` (d×d), `f₂` (m×m); higher: `comp1_f`, `comp1_g`, `g₂`,
/// `f_mixed[0..n]`, `g_mixed[0..n]`.
pub fn pair_shapes(d: usize, m: usize, p: usize) -> Vec<Vec<usize>> {
    assert!(p >= 1, "pair cochains start in degree 1");
    if p == 1 {
        return vec![vec![d, d], vec![m, m]];
    }
    let n = p - 1;
    let w = d * d.saturating_sub(1) / 2;
    let mut out = Vec::new();
    let ws = |k: usize| vec![w; k];
    out.push([ws(n), vec![d]].concat());
    out.push([ws(n), vec![d, d]].concat());
    out.push([ws(n), vec![m, m]].concat());
    for i in 0..n {
        out.push([ws(i), vec![d, m], ws(n - 1 - i), vec![m]].concat());
    }
    for j in 0..n {
        out.push([ws(j), vec![d, m], ws(n - 1 - j), vec![d, m]].concat());
    }
    out
}

pub fn pair_cochain_len(d: usize, m: usize, p: usize) -> usize {
    pair_shapes(d, m, p).iter().map(|s| s.iter().product::<usize>()).sum()
}

impl PairCochain {
    pub fn zeros(d: usize, m: usize, p: usize) -> Self {
        Self::from_flat(d, m, p, vec![Rational::zero(); pair_cochain_len(d, m, p)])
            .expect("length matches")
    }

    pub fn degree(&self) -> usize {
        match self {
            PairCochain::Degree1 { .. } => 1,
            PairCochain::Higher { n, .. } => n + 1,
        }
    }

    pub fn from_flat(d: usize, m: usize, p: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != pair_cochain_len(d, m, p) {
            return Err(Error::DimMismatch(format!(
                "{} entries for a degree-{p} pair cochain",
                data.len()
            )));
        }
        let mut parts = Vec::new();
        let mut rest = data;
        for s in pair_shapes(d, m, p) {
            let len: usize = s.iter().product();
            let tail = rest.split_off(len);
            parts.push(Tensor::from_vec(&s, rest)?);
            rest = tail;
        }
        if p == 1 {
            let f2 = parts.pop().expect("two parts");
            let f1 = parts.pop().expect("two parts");
            return Ok(PairCochain::Degree1 {
                f1: Matrix::from_vec(d, d, f1.into_data())?,
                f2: Matrix::from_vec(m, m, f2.into_data())?,
            });
        }
        let n = p - 1;
        let g_mixed = parts.split_off(3 + n);
        let f_mixed = parts.split_off(3);
        let g2 = parts.pop().expect("three parts");
        let comp1_g = parts.pop().expect("three parts");
        let comp1_f = parts.pop().expect("three parts");
        Ok(PairCochain::Higher {
            n,
            comp1_f,
            comp1_g,
            g2,
            f_mixed,
            g_mixed,
        })
    }

    pub fn flatten(&self) -> Vec<Rational> {
        match self {
            PairCochain::Degree1 { f1, f2 } => [f1.data(), f2.data()].concat(),
            PairCochain::Higher {
                comp1_f,
                comp1_g,
                g2,
                f_mixed,
                g_mixed,
                ..
            } => {
                let mut v = Vec::new();
                for t in [comp1_f, comp1_g, g2].into_iter().chain(f_mixed).chain(g_mixed) {
                    v.extend_from_slice(t.data());
                }
                v
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.flatten().iter().all(|x| x.is_zero())
    }

    /// The g-valued component `(f₁, g₁)` as a Yamaguti cochain (degree ≥ 2).
    pub fn comp1(&self) -> Option<YamagutiCochain> {
        match self {
            PairCochain::Degree1 { .. } => None,
            PairCochain::Higher { comp1_f, comp1_g, .. } => {
                YamagutiCochain::from_parts(comp1_f.clone(), comp1_g.clone()).ok()
            }
        }
    }

    /// `f₂` (mixed slot last) for degree ≥ 2.
    pub fn f2(&self) -> Option<&Tensor> {
        match self {
            PairCochain::Degree1 { .. } => None,
            PairCochain::Higher { f_mixed, .. } => f_mixed.last(),
        }
    }

    /// `f₃⁽ⁱ⁾`, `1 ≤ i ≤ n−1`.
    pub fn f3(&self, i: usize) -> Option<&Tensor> {
        match self {
            PairCochain::Higher { n, f_mixed, .. } if i >= 1 && i < *n => f_mixed.get(i - 1),
            _ => None,
        }
    }

    /// `g₃⁽ʲ⁾`, `1 ≤ j ≤ n`.
    pub fn g3(&self, j: usize) -> Option<&Tensor> {
        match self {
            PairCochain::Higher { g_mixed, .. } if j >= 1 => g_mixed.get(j - 1),
            _ => None,
        }
    }
}

/// Data of a pair together with the semidirect adjoint complex.
#[derive(Clone, Debug)]
pub struct PairComplex {
    pair: LieYRepPair,
    dd: DerivedD,
    d: usize,
    m: usize,
    wb: WedgeBasis,
    sd_wb: WedgeBasis,
    semidirect: LieYamagutiAlgebra,
    sd: YamagutiComplex,
    ad: YamagutiComplex,
    cap: usize,
}

impl PairComplex {
    /// Requires a valid representation (the semidirect product must exist).
    pub fn new(pair: &LieYRepPair) -> Result<Self> {
        let semidirect = pair.semidirect()?;
        let sd = YamagutiComplex::new(&semidirect, &Representation::adjoint(&semidirect))?;
        let ad = YamagutiComplex::new(&pair.algebra, &Representation::adjoint(&pair.algebra))?;
        let d = pair.dim_g();
        let m = pair.dim_v();
        Ok(PairComplex {
            dd: pair.derived_d(),
            pair: pair.clone(),
            d,
            m,
            wb: WedgeBasis::new(d),
            sd_wb: WedgeBasis::new(d + m),
            semidirect,
            sd: sd.with_cap(DEFAULT_PAIR_CAP),
            ad: ad.with_cap(DEFAULT_PAIR_CAP),
            cap: DEFAULT_PAIR_CAP,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.sd = self.sd.with_cap(cap);
        self.ad = self.ad.with_cap(cap);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn pair(&self) -> &LieYRepPair {
        &self.pair
    }

    pub fn semidirect(&self) -> &LieYamagutiAlgebra {
        &self.semidirect
    }

    pub fn semidirect_complex(&self) -> &YamagutiComplex {
        &self.sd
    }

    pub fn cochain_len(&self, p: usize) -> usize {
        pair_cochain_len(self.d, self.m, p)
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

    /// Semidirect flat index of every pair-cochain coordinate, in the pair
    /// flattening order. The lift is the coordinate embedding along this map.
    pub fn embedding(&self, p: usize) -> Vec<usize> {
        let (d, m) = (self.d, self.m);
        let t = d + m;
        if p == 1 {
            let mut out = Vec::with_capacity(d * d + m * m);
            for o in 0..d {
                for i in 0..d {
                    out.push(i * t + o);
                }
            }
            for o in 0..m {
                for v in 0..m {
                    out.push((d + v) * t + d + o);
                }
            }
            return out;
        }
        let n = p - 1;
        let tw = self.sd_wb.len();
        let gmap = |w: usize| {
            let (a, b) = self.wb.pair(w);
            self.sd_wb.index(a, b).expect("distinct").0
        };
        let mixmap = |a: usize, v: usize| self.sd_wb.index(a, d + v).expect("distinct").0;
        let enc = |ws: &[usize]| ws.iter().fold(0usize, |acc, &w| acc * tw + w);
        let f_at = |ws: &[usize], o: usize| enc(ws) * t + o;
        let len_f = tw.pow(n as u32) * t;
        let g_at = |ws: &[usize], z: usize, o: usize| len_f + (enc(ws) * t + z) * t + o;
        let shapes = pair_shapes(d, m, p);
        let mut out = Vec::with_capacity(self.cochain_len(p));
        // comp1_f
        for idx in multi_indices(&shapes[0]) {
            let ws: Vec<usize> = idx[..n].iter().map(|&w| gmap(w)).collect();
            out.push(f_at(&ws, idx[n]));
        }
        // comp1_g
        for idx in multi_indices(&shapes[1]) {
            let ws: Vec<usize> = idx[..n].iter().map(|&w| gmap(w)).collect();
            out.push(g_at(&ws, idx[n], idx[n + 1]));
        }
        // g2
        for idx in multi_indices(&shapes[2]) {
            let ws: Vec<usize> = idx[..n].iter().map(|&w| gmap(w)).collect();
            out.push(g_at(&ws, d + idx[n], d + idx[n + 1]));
        }
        let mixed_ws = |idx: &[usize], i: usize| -> Vec<usize> {
            let mut ws = Vec::with_capacity(n);
            ws.extend(idx[..i].iter().map(|&w| gmap(w)));
            ws.push(mixmap(idx[i], idx[i + 1]));
            ws.extend(idx[i + 2..n + 1].iter().map(|&w| gmap(w)));
            ws
        };
        for i in 0..n {
            for idx in multi_indices(&shapes[3 + i]) {
                out.push(f_at(&mixed_ws(&idx, i), d + idx[n + 1]));
            }
        }
        for j in 0..n {
            for idx in multi_indices(&shapes[3 + n + j]) {
                out.push(g_at(&mixed_ws(&idx, j), idx[n + 1], d + idx[n + 2]));
            }
        }
        out
    }

    fn sd_len(&self, p: usize) -> usize {
        self.sd.cochain_len(p)
    }

    pub fn lift_flat(&self, p: usize, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cochain_len(p) {
            return Err(Error::DimMismatch(format!(
                "{} entries for a degree-{p} pair cochain",
                x.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.sd_len(p)];
        for (k, j) in self.embedding(p).into_iter().enumerate() {
            out[j] = x[k].clone();
        }
        Ok(out)
    }

    /// Lift into the adjoint Yamaguti complex of the semidirect product.
    pub fn lift(&self, c: &PairCochain) -> Result<YamagutiCochain> {
        let p = c.degree();
        let flat = self.lift_flat(p, &c.flatten())?;
        YamagutiCochain::from_flat(self.d + self.m, self.d + self.m, p, flat)
    }

    /// Left inverse of the lift; fails if `y` has a nonzero entry outside the
    /// image of the lift.
    pub fn project_flat(&self, p: usize, y: &[Rational]) -> Result<Vec<Rational>> {
        if y.len() != self.sd_len(p) {
            return Err(Error::DimMismatch(format!(
                "{} entries for a degree-{p} semidirect cochain",
                y.len()
            )));
        }
        let emb = self.embedding(p);
        let mut covered = vec![false; y.len()];
        for &j in &emb {
            covered[j] = true;
        }
        if let Some(bad) = (0..y.len()).find(|&j| !covered[j] && !y[j].is_zero()) {
            return Err(Error::NotInSubcomplex(format!(
                "degree-{p} entry {} of the semidirect cochain is {} outside the pair subcomplex",
                self.describe_sd_index(p, bad),
                y[bad]
            )));
        }
        Ok(emb.into_iter().map(|j| y[j].clone()).collect())
    }

    pub fn project(&self, l: &YamagutiCochain) -> Result<PairCochain> {
        let p = l.degree();
        let flat = self.project_flat(p, &l.flatten())?;
        PairCochain::from_flat(self.d, self.m, p, flat)
    }

    fn describe_sd_index(&self, p: usize, j: usize) -> String {
        let t = self.d + self.m;
        let name = |i: usize| {
            if i < self.d {
                format!("x{i}")
            } else {
                format!("v{}", i - self.d)
            }
        };
        if p == 1 {
            return format!("f({}) -> {}", name(j / t), name(j % t));
        }
        let n = p - 1;
        let tw = self.sd_wb.len();
        let len_f = tw.pow(n as u32) * t;
        let wedges = |mut e: usize| {
            let mut ws = vec![0; n];
            for k in (0..n).rev() {
                ws[k] = e % tw;
                e /= tw;
            }
            ws.iter()
                .map(|&w| {
                    let (a, b) = self.sd_wb.pair(w);
                    format!("{}^{}", name(a), name(b))
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        if j < len_f {
            format!("f({}) -> {}", wedges(j / t), name(j % t))
        } else {
            let r = j - len_f;
            let o = r % t;
            let z = (r / t) % t;
            format!("g({}, {}) -> {}", wedges(r / t / t), name(z), name(o))
        }
    }

    /// `Δ` computed as `project(δ(lift(c)))` on flat cochains.
    pub fn delta_lifted_flat(&self, p: usize, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_degree(p)?;
        let l = self.lift_flat(p, x)?;
        let y = self.sd.delta_flat(p, &l)?;
        self.project_flat(p + 1, &y)
    }

    pub fn delta_lifted(&self, c: &PairCochain) -> Result<PairCochain> {
        let p = c.degree();
        let out = self.delta_lifted_flat(p, &c.flatten())?;
        PairCochain::from_flat(self.d, self.m, p + 1, out)
    }

    /// Columns of `Δ_p` (lifted path), sparse.
    pub fn delta_columns(&self, p: usize) -> Result<Vec<SparseVec>> {
        self.check_degree(p)?;
        let n = self.cochain_len(p);
        (0..n)
            .into_par_iter()
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                Ok(sparse_from_dense(&self.delta_lifted_flat(p, &e)?))
            })
            .collect()
    }

    pub fn delta_matrix(&self, p: usize) -> Result<Matrix> {
        let cols = self.delta_columns(p)?;
        let mut mat = Matrix::zeros(self.cochain_len(p + 1), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col {
                mat.set(*i, j, v.clone());
            }
        }
        Ok(mat)
    }

    /// `dim ℋⁿ = nullity(Δₙ) − rank(Δₙ₋₁)`, with `ℋ¹ = ker Δ₁`.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize> {
        self.check_degree(n)?;
        let nullity = self.cochain_len(n) - sparse_rank(self.delta_columns(n)?);
        if n == 1 {
            return Ok(nullity);
        }
        let prev = sparse_rank(self.delta_columns(n - 1)?);
        if prev > nullity {
            return Err(Error::InternalConsistency(format!(
                "image of Δ_{} exceeds the kernel of Δ_{n}",
                n - 1
            )));
        }
        Ok(nullity - prev)
    }

    /// First basis cochain `e_j` of degree `p` with `Δ(Δ(e_j)) ≠ 0`.
    /// Subcomplex violations surface as errors.
    pub fn delta_squared_failure(&self, p: usize) -> Result<Option<usize>> {
        self.check_degree(p + 1)?;
        let n = self.cochain_len(p);
        let res: Result<Vec<Option<usize>>> = (0..n)
            .into_par_iter()
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                let y = self.delta_lifted_flat(p, &e)?;
                let z = self.delta_lifted_flat(p + 1, &y)?;
                Ok(z.iter().any(|t| !t.is_zero()).then_some(j))
            })
            .collect();
        Ok(res?.into_iter().flatten().min())
    }

    /// First basis cochain of degree `p ∈ {1, 2}` on which the direct
    /// formulas and the lifted path disagree.
    pub fn direct_vs_lifted_failure(&self, p: usize) -> Result<Option<usize>> {
        self.check_degree(p)?;
        let n = self.cochain_len(p);
        let res: Result<Vec<Option<usize>>> = (0..n)
            .into_par_iter()
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                let c = PairCochain::from_flat(self.d, self.m, p, e)?;
                let a = self.delta_direct(&c)?;
                let b = self.delta_lifted(&c)?;
                Ok((a != b).then_some(j))
            })
            .collect();
        Ok(res?.into_iter().flatten().min())
    }

    /// `Δ` by the closed-form component formulas (degrees 1 and 2 only).
    pub fn delta_direct(&self, c: &PairCochain) -> Result<PairCochain> {
        match c {
            PairCochain::Degree1 { f1, f2 } => self.direct1(f1, f2),
            PairCochain::Higher { n: 1, .. } => self.direct2(c),
            PairCochain::Higher { n, .. } => Err(Error::UnsupportedDegree(n + 1)),
        }
    }

    fn e(&self, i: usize) -> Vec<Rational> {
        crate::exact::unit(self.d, i)
    }

    fn ev(&self, v: usize) -> Vec<Rational> {
        crate::exact::unit(self.m, v)
    }

    fn rho(&self, x: &[Rational]) -> Matrix {
        self.pair.rep.rho_of(x)
    }

    fn mu(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.pair.rep.mu_of(x, y)
    }

    fn dmap(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.dd.of(x, y)
    }

    fn direct1(&self, f1: &Matrix, f2: &Matrix) -> Result<PairCochain> {
        let (d, m) = (self.d, self.m);
        if f1.rows() != d || f1.cols() != d || f2.rows() != m || f2.cols() != m {
            return Err(Error::DimMismatch("degree-1 pair cochain shapes".into()));
        }
        let comp1 = self.ad.delta(&YamagutiCochain::from_map(f1))?;
        let mut out = PairCochain::zeros(d, m, 2);
        let PairCochain::Higher {
            comp1_f,
            comp1_g,
            g2,
            f_mixed,
            g_mixed,
            ..
        } = &mut out
        else {
            unreachable!("degree 2 is Higher")
        };
        *comp1_f = comp1.f().clone();
        *comp1_g = comp1.g().expect("degree 2").clone();
        let f1e: Vec<Vec<Rational>> = (0..d).map(|i| f1.column(i)).collect();
        for x in 0..d {
            let ex = self.e(x);
            let rx = self.rho(&ex);
            let rfx = self.rho(&f1e[x]);
            for v in 0..m {
                let ev = self.ev(v);
                // ρ(x)f₂(v) + ρ(f₁x)v − f₂(ρ(x)v)
                let val = rx
                    .mul_vec(&f2.column(v))
                    .iter()
                    .zip(rfx.column(v))
                    .zip(f2.mul_vec(&rx.mul_vec(&ev)))
                    .map(|((a, b), c)| &(a + &b) - &c)
                    .collect::<Vec<_>>();
                f_mixed[0].fiber_mut(&[x, v]).clone_from_slice(&val);
                for z in 0..d {
                    let ez = self.e(z);
                    // −(μ(x,z)f₂(v) + μ(f₁x,z)v + μ(x,f₁z)v − f₂(μ(x,z)v))
                    let mxz = self.mu(&ex, &ez);
                    let s1 = mxz.mul_vec(&f2.column(v));
                    let s2 = self.mu(&f1e[x], &ez).column(v);
                    let s3 = self.mu(&ex, &f1e[z]).column(v);
                    let s4 = f2.mul_vec(&mxz.column(v));
                    let val: Vec<Rational> = (0..m)
                        .map(|o| -&(&(&(&s1[o] + &s2[o]) + &s3[o]) - &s4[o]))
                        .collect();
                    g_mixed[0].fiber_mut(&[x, v, z]).clone_from_slice(&val);
                }
            }
        }
        for (w, &(a, b)) in self.wb.pairs().iter().enumerate() {
            let (ea, eb) = (self.e(a), self.e(b));
            let dab = self.dmap(&ea, &eb);
            let d1 = self.dmap(&f1e[a], &eb);
            let d2 = self.dmap(&ea, &f1e[b]);
            for v in 0..m {
                // D(x,y)f₂(v) + D(f₁x,y)v + D(x,f₁y)v − f₂(D(x,y)v)
                let s1 = dab.mul_vec(&f2.column(v));
                let s4 = f2.mul_vec(&dab.column(v));
                let val: Vec<Rational> = (0..m)
                    .map(|o| &(&(&s1[o] + d1.get(o, v)) + d2.get(o, v)) - &s4[o])
                    .collect();
                g2.fiber_mut(&[w, v]).clone_from_slice(&val);
            }
        }
        Ok(out)
    }

    fn direct2(&self, c: &PairCochain) -> Result<PairCochain> {
        let (d, m) = (self.d, self.m);
        let PairCochain::Higher {
            comp1_f: f1,
            comp1_g: g1,
            g2,
            f_mixed,
            g_mixed,
            ..
        } = c
        else {
            unreachable!("checked by caller")
        };
        let expect = pair_shapes(d, m, 2);
        if f1.shape() != expect[0].as_slice() || g2.shape() != expect[2].as_slice() {
            return Err(Error::DimMismatch("degree-2 pair cochain shapes".into()));
        }
        let f2 = &f_mixed[0];
        let g3 = &g_mixed[0];
        let a = &self.pair.algebra;
        let nw = self.wb.len();
        let comp1 = self.ad.delta(&YamagutiCochain::from_parts(f1.clone(), g1.clone())?)?;
        let mut out = PairCochain::zeros(d, m, 3);
        let PairCochain::Higher {
            comp1_f: of1,
            comp1_g: og1,
            g2: og2,
            f_mixed: ofm,
            g_mixed: ogm,
            ..
        } = &mut out
        else {
            unreachable!("degree 3 is Higher")
        };
        *of1 = comp1.f().clone();
        *og1 = comp1.g().expect("degree 3").clone();

        let wunit = |w: usize| crate::exact::unit::<Rational>(nw, w);
        let wedge = |x: &[Rational], y: &[Rational]| self.wb.wedge(x, y);
        // Evaluations of the input components at vector arguments.
        let g1e = |xw: &[Rational], x: &[Rational]| g1.contract(&[xw, x]);
        let f1e = |xw: &[Rational]| f1.contract(&[xw]);
        let g2e = |xw: &[Rational], v: &[Rational]| g2.contract(&[xw, v]);
        let f2e = |x: &[Rational], v: &[Rational]| f2.contract(&[x, v]);
        let g3e = |x: &[Rational], v: &[Rational], z: &[Rational]| g3.contract(&[x, v, z]);
        let acc = |out: &mut Vec<Rational>, sgn: i64, v: Vec<Rational>| {
            let s = Rational::from_int(sgn);
            for (o, x) in out.iter_mut().zip(v) {
                *o += &(&s * &x);
            }
        };
        let circ = |w1: usize, w2: usize| {
            let (x1, y1) = self.wb.pair(w1);
            let (x2, y2) = self.wb.pair(w2);
            let p1 = wedge(a.triple_basis(x1, y1, x2), &self.e(y2));
            let p2 = wedge(&self.e(x2), a.triple_basis(x1, y1, y2));
            p1.iter().zip(&p2).map(|(s, t)| s + t).collect::<Vec<_>>()
        };

        for w1 in 0..nw {
            let (x1, y1) = self.wb.pair(w1);
            let (ex1, ey1) = (self.e(x1), self.e(y1));
            let d1 = self.dmap(&ex1, &ey1);
            let xw1 = wunit(w1);
            // f₂'(X₁, (x,v))
            for x in 0..d {
                let ex = self.e(x);
                let rx = self.rho(&ex);
                let g1x = g1e(&xw1, &ex);
                let t1x = a.tr(&ex1, &ey1, &ex);
                for v in 0..m {
                    let ev = self.ev(v);
                    let mut val = vec![Rational::zero(); m];
                    acc(&mut val, -1, rx.mul_vec(&g2e(&xw1, &ev)));
                    acc(&mut val, -1, self.rho(&g1x).mul_vec(&ev));
                    acc(&mut val, 1, g2e(&xw1, &rx.mul_vec(&ev)));
                    acc(&mut val, 1, d1.mul_vec(&f2e(&ex, &ev)));
                    acc(&mut val, -1, f2e(&t1x, &ev));
                    acc(&mut val, -1, f2e(&ex, &d1.mul_vec(&ev)));
                    ofm[1].fiber_mut(&[w1, x, v]).clone_from_slice(&val);
                }
            }
            for w2 in 0..nw {
                let (x2, y2) = self.wb.pair(w2);
                let (ex2, ey2) = (self.e(x2), self.e(y2));
                let d2 = self.dmap(&ex2, &ey2);
                let xw2 = wunit(w2);
                let c12 = circ(w1, w2);
                // g₂'(X₁, X₂, v)
                for v in 0..m {
                    let ev = self.ev(v);
                    let mut val = vec![Rational::zero(); m];
                    acc(&mut val, -1, self.dmap(&g1e(&xw1, &ex2), &ey2).mul_vec(&ev));
                    acc(&mut val, 1, self.dmap(&g1e(&xw1, &ey2), &ex2).mul_vec(&ev));
                    acc(&mut val, 1, d1.mul_vec(&g2e(&xw2, &ev)));
                    acc(&mut val, -1, d2.mul_vec(&g2e(&xw1, &ev)));
                    acc(&mut val, -1, g2e(&c12, &ev));
                    acc(&mut val, -1, g2e(&xw2, &d1.mul_vec(&ev)));
                    acc(&mut val, 1, g2e(&xw1, &d2.mul_vec(&ev)));
                    og2.fiber_mut(&[w1, w2, v]).clone_from_slice(&val);
                }
            }
            // g₃'⁽²⁾(X₁, (x,v), z)
            for x in 0..d {
                let ex = self.e(x);
                let g1x = g1e(&xw1, &ex);
                let t1x = a.tr(&ex1, &ey1, &ex);
                for v in 0..m {
                    let ev = self.ev(v);
                    let d1v = d1.mul_vec(&ev);
                    for z in 0..d {
                        let ez = self.e(z);
                        let mxz = self.mu(&ex, &ez);
                        let mut val = vec![Rational::zero(); m];
                        acc(&mut val, 1, self.mu(&g1x, &ez).mul_vec(&ev));
                        acc(&mut val, 1, mxz.mul_vec(&g2e(&xw1, &ev)));
                        acc(&mut val, 1, d1.mul_vec(&g3e(&ex, &ev, &ez)));
                        acc(&mut val, 1, self.mu(&ex, &g1e(&xw1, &ez)).mul_vec(&ev));
                        acc(&mut val, -1, g3e(&t1x, &ev, &ez));
                        acc(&mut val, -1, g3e(&ex, &d1v, &ez));
                        acc(&mut val, -1, g3e(&ex, &ev, &a.tr(&ex1, &ey1, &ez)));
                        acc(&mut val, -1, g2e(&xw1, &mxz.mul_vec(&ev)));
                        ogm[1].fiber_mut(&[w1, x, v, z]).clone_from_slice(&val);
                    }
                }
            }
        }
        // f₃'⁽¹⁾((x,v), X₂) and g₃'⁽¹⁾((x,v), X₂, z)
        for x in 0..d {
            let ex = self.e(x);
            for v in 0..m {
                let ev = self.ev(v);
                for w2 in 0..nw {
                    let (x2, y2) = self.wb.pair(w2);
                    let (ex2, ey2) = (self.e(x2), self.e(y2));
                    let xw2 = wunit(w2);
                    let d2 = self.dmap(&ex2, &ey2);
                    let mx_x2 = self.mu(&ex, &ex2).mul_vec(&ev);
                    let mx_y2 = self.mu(&ex, &ey2).mul_vec(&ev);
                    let mut val = vec![Rational::zero(); m];
                    acc(&mut val, -1, self.rho(&ex2).mul_vec(&g3e(&ex, &ev, &ey2)));
                    acc(&mut val, 1, self.rho(&ey2).mul_vec(&g3e(&ex, &ev, &ex2)));
                    acc(&mut val, 1, g3e(&ex, &ev, a.bracket_basis(x2, y2)));
                    acc(&mut val, -1, self.mu(&ex, &f1e(&xw2)).mul_vec(&ev));
                    acc(&mut val, -1, f2e(&ey2, &mx_x2));
                    acc(&mut val, 1, f2e(&ex2, &mx_y2));
                    ofm[0].fiber_mut(&[x, v, w2]).clone_from_slice(&val);
                    for z in 0..d {
                        let ez = self.e(z);
                        let mut val = vec![Rational::zero(); m];
                        acc(&mut val, -1, self.mu(&ey2, &ez).mul_vec(&g3e(&ex, &ev, &ex2)));
                        acc(&mut val, 1, self.mu(&ex2, &ez).mul_vec(&g3e(&ex, &ev, &ey2)));
                        acc(&mut val, -1, self.mu(&ex, &g1e(&xw2, &ez)).mul_vec(&ev));
                        acc(&mut val, -1, d2.mul_vec(&g3e(&ex, &ev, &ez)));
                        acc(&mut val, -1, g3e(&ey2, &mx_x2, &ez));
                        acc(&mut val, 1, g3e(&ex2, &mx_y2, &ez));
                        acc(&mut val, 1, g2e(&xw2, &self.mu(&ex, &ez).mul_vec(&ev)));
                        acc(&mut val, 1, g3e(&ex, &ev, a.triple_basis(x2, y2, z)));
                        ogm[0].fiber_mut(&[x, v, w2, z]).clone_from_slice(&val);
                    }
                }
            }
        }
        let _ = wedge;
        Ok(out)
    }
}

/// Lift of a pair cochain into the semidirect adjoint complex.
pub fn lift(pair: &LieYRepPair, c: &PairCochain) -> Result<YamagutiCochain> {
    PairComplex::new(pair)?.lift(c)
}

/// Left inverse of [`lift`].
pub fn project(pair: &LieYRepPair, l: &YamagutiCochain) -> Result<PairCochain> {
    PairComplex::new(pair)?.project(l)
}

/// `Δ(c)` via the lift, with the default degree cap.
pub fn pair_delta_lifted(pair: &LieYRepPair, c: &PairCochain) -> Result<PairCochain> {
    PairComplex::new(pair)?.delta_lifted(c)
}

/// `Δ(c)` via the closed-form formulas (degrees 1 and 2).
pub fn pair_delta_direct(pair: &LieYRepPair, c: &PairCochain) -> Result<PairCochain> {
    PairComplex::new(pair)?.delta_direct(c)
}

/// `dim ℋⁿ` with the default degree cap.
pub fn pair_cohomology_dim(pair: &LieYRepPair, n: usize) -> Result<usize> {
    PairComplex::new(pair)?.cohomology_dim(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::a2;

    fn a2_adjoint() -> LieYRepPair {
        LieYRepPair::adjoint(a2())
    }

    #[test]
    fn layout_round_trip() {
        let cx = PairComplex::new(&a2_adjoint()).unwrap().with_cap(4);
        for p in 1..=3 {
            let emb = cx.embedding(p);
            let mut seen = std::collections::HashSet::new();
            assert!(emb.iter().all(|j| seen.insert(*j)), "embedding injective");
            let x: Vec<Rational> = (0..cx.cochain_len(p)).map(|i| Rational::from_int(i as i64 + 1)).collect();
            let l = cx.lift_flat(p, &x).unwrap();
            assert_eq!(cx.project_flat(p, &l).unwrap(), x);
        }
    }

    #[test]
    fn identity_lifts_to_identity() {
        let p = a2_adjoint();
        let cx = PairComplex::new(&p).unwrap();
        let c = PairCochain::Degree1 {
            f1: Matrix::identity(2),
            f2: Matrix::identity(2),
        };
        assert_eq!(cx.lift(&c).unwrap().as_map().unwrap(), Matrix::identity(4));
    }

    #[test]
    fn closure_and_agreement_on_a2() {
        let a = a2();
        for pair in [LieYRepPair::adjoint(a.clone()), LieYRepPair::coadjoint(a)] {
            let cx = PairComplex::new(&pair).unwrap().with_cap(4);
            for p in 1..=2 {
                assert_eq!(cx.delta_squared_failure(p).unwrap(), None, "p = {p}");
                assert_eq!(cx.direct_vs_lifted_failure(p).unwrap(), None, "p = {p}");
            }
        }
    }

    #[test]
    fn closure_and_agreement_on_random_pairs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..6 {
            let (name, pair) = crate::fixtures::random_valid_pair(&mut rng, 3);
            let cx = PairComplex::new(&pair).unwrap().with_cap(4);
            for p in 1..=2 {
                assert_eq!(cx.delta_squared_failure(p).unwrap(), None, "{name} p = {p}");
                assert_eq!(cx.direct_vs_lifted_failure(p).unwrap(), None, "{name} p = {p}");
            }
        }
    }
}
