//! Reference implementations used as independent oracles by the
//! integration tests. Everything here works from the raw coefficient tables
//! with its own dense arithmetic and never calls the library's checks,
//! coboundaries or elimination routines.

#![allow(dead_code)]

use lieyam::deform::DeformationData;
use lieyam::{LieYRepPair, LieYamagutiAlgebra, Matrix, Rational, Tensor};

pub type Q = Rational;
/// Dense row-major matrix.
pub type Dm = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Rational::from_int(n)
}

pub fn qq(n: i64, d: i64) -> Q {
    Rational::new(n, d)
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![q(0); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = q(1);
    v
}

pub fn vadd(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

pub fn vzero(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// `acc += c·v`.
fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += &(c * x);
    }
}

pub fn dense(m: &Matrix) -> Dm {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

pub fn dm_zero(r: usize, c: usize) -> Dm {
    vec![zeros(c); r]
}

pub fn dm_id(n: usize) -> Dm {
    (0..n).map(|i| unit(n, i)).collect()
}

pub fn dm_apply(m: &Dm, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn dm_mul(a: &Dm, b: &Dm) -> Dm {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn dm_add(a: &Dm, b: &Dm) -> Dm {
    a.iter().zip(b).map(|(x, y)| vadd(x, y)).collect()
}

pub fn dm_sub(a: &Dm, b: &Dm) -> Dm {
    a.iter().zip(b).map(|(x, y)| vsub(x, y)).collect()
}

pub fn dm_scale(c: &Q, a: &Dm) -> Dm {
    a.iter().map(|r| vscale(c, r)).collect()
}

pub fn dm_transpose(a: &Dm) -> Dm {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn dm_is_zero(a: &Dm) -> bool {
    a.iter().all(|r| vzero(r))
}

/// Rank by fraction-based Gaussian elimination on a copy.
pub fn dense_rank(m: &Dm) -> usize {
    echelon(m).1.len()
}

/// Reduced row echelon form and pivot columns.
pub fn echelon(m: &Dm) -> (Dm, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = &q(1) / &a[r][c];
        a[r] = vscale(&inv, &a[r]);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pr = a[r].clone();
                let mut row = std::mem::take(&mut a[i]);
                axpy(&mut row, &(-&f), &pr);
                a[i] = row;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// An explicit basis of the kernel of `m` (as column vectors).
pub fn kernel_basis(m: &Dm, cols: usize) -> Vec<Vec<Q>> {
    let (e, pivots) = echelon(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(cols);
            v[f] = q(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&e[r][f];
            }
            v
        })
        .collect()
}

/// A basis of the column space of `m`, chosen among its columns.
pub fn image_basis(m: &Dm) -> Vec<Vec<Q>> {
    let (_, pivots) = echelon(m);
    let t = dm_transpose(m);
    pivots.iter().map(|&p| t[p].clone()).collect()
}

/// Bilinear and trilinear brackets given by coefficient tables.
#[derive(Clone, Debug)]
pub struct Structure {
    pub dim: usize,
    /// `br[i][j]` = coordinates of `[eᵢ,eⱼ]`.
    pub br: Vec<Vec<Vec<Q>>>,
    /// `tr[i][j][k]` = coordinates of `⟪eᵢ,eⱼ,eₖ⟫`.
    pub tr: Vec<Vec<Vec<Vec<Q>>>>,
}

impl Structure {
    pub fn from_algebra(a: &LieYamagutiAlgebra) -> Self {
        let d = a.dim();
        Structure {
            dim: d,
            br: (0..d).map(|i| (0..d).map(|j| a.bracket_basis(i, j).to_vec()).collect()).collect(),
            tr: (0..d)
                .map(|i| (0..d).map(|j| (0..d).map(|k| a.triple_basis(i, j, k).to_vec()).collect()).collect())
                .collect(),
        }
    }

    pub fn from_tensors(binary: &Tensor, ternary: &Tensor) -> Self {
        let d = binary.shape()[0];
        Structure {
            dim: d,
            br: (0..d).map(|i| (0..d).map(|j| binary.fiber(&[i, j]).to_vec()).collect()).collect(),
            tr: (0..d)
                .map(|i| (0..d).map(|j| (0..d).map(|k| ternary.fiber(&[i, j, k]).to_vec()).collect()).collect())
                .collect(),
        }
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi * yj), &self.br[i][j]);
            }
        }
        out
    }

    pub fn triple(&self, x: &[Q], y: &[Q], z: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    axpy(&mut out, &(&xy * zk), &self.tr[i][j][k]);
                }
            }
        }
        out
    }

    /// First basis tuple violating one of the four Lie-Yamaguti axioms (or
    /// antisymmetry), with the axiom number.
    pub fn axiom_violation(&self) -> Option<(usize, Vec<usize>)> {
        let d = self.dim;
        let e = |i: usize| unit(d, i);
        for x in 0..d {
            for y in 0..d {
                if !vzero(&vadd(&self.br[x][y], &self.br[y][x])) {
                    return Some((0, vec![x, y]));
                }
                for z in 0..d {
                    if !vzero(&vadd(&self.tr[x][y][z], &self.tr[y][x][z])) {
                        return Some((0, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let (ex, ey, ez) = (e(x), e(y), e(z));
                    let mut s = zeros(d);
                    for (a, b, c) in [(&ex, &ey, &ez), (&ey, &ez, &ex), (&ez, &ex, &ey)] {
                        s = vadd(&s, &self.bracket(&self.bracket(a, b), c));
                        s = vadd(&s, &self.triple(a, b, c));
                    }
                    if !vzero(&s) {
                        return Some((1, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    for w in 0..d {
                        let (ex, ey, ez, ew) = (e(x), e(y), e(z), e(w));
                        let mut s = zeros(d);
                        for (a, b, c) in [(&ex, &ey, &ez), (&ey, &ez, &ex), (&ez, &ex, &ey)] {
                            s = vadd(&s, &self.triple(&self.bracket(a, b), c, &ew));
                        }
                        if !vzero(&s) {
                            return Some((2, vec![x, y, z, w]));
                        }
                        let lhs = self.triple(&ex, &ey, &self.bracket(&ez, &ew));
                        let rhs = vadd(
                            &self.bracket(&self.triple(&ex, &ey, &ez), &ew),
                            &self.bracket(&ez, &self.triple(&ex, &ey, &ew)),
                        );
                        if lhs != rhs {
                            return Some((3, vec![x, y, z, w]));
                        }
                    }
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    for w in 0..d {
                        for t in 0..d {
                            let (ex, ey, ez, ew, et) = (e(x), e(y), e(z), e(w), e(t));
                            let lhs = self.triple(&ex, &ey, &self.triple(&ez, &ew, &et));
                            let r1 = self.triple(&self.triple(&ex, &ey, &ez), &ew, &et);
                            let r2 = self.triple(&ez, &self.triple(&ex, &ey, &ew), &et);
                            let r3 = self.triple(&ez, &ew, &self.triple(&ex, &ey, &et));
                            if lhs != vadd(&vadd(&r1, &r2), &r3) {
                                return Some((4, vec![x, y, z, w, t]));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_lie_yamaguti(&self) -> bool {
        self.axiom_violation().is_none()
    }

    /// `φ` preserves both brackets from `self` to `target`.
    pub fn is_homomorphism_to(&self, target: &Structure, phi: &Dm) -> bool {
        let d = self.dim;
        let e = |i: usize| unit(d, i);
        let f = |v: &[Q]| dm_apply(phi, v);
        for x in 0..d {
            for y in 0..d {
                if f(&self.bracket(&e(x), &e(y))) != target.bracket(&f(&e(x)), &f(&e(y))) {
                    return false;
                }
                for z in 0..d {
                    if f(&self.triple(&e(x), &e(y), &e(z))) != target.triple(&f(&e(x)), &f(&e(y)), &f(&e(z))) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A representation given by its matrices `ρ(eᵢ)`, `μ(eᵢ,eⱼ)` (column
/// convention: column `k` is the image of `e_k`).
#[derive(Clone, Debug)]
pub struct RepData {
    pub m: usize,
    pub rho: Vec<Dm>,
    pub mu: Vec<Vec<Dm>>,
}

impl RepData {
    pub fn from_pair(p: &LieYRepPair) -> Self {
        RepData {
            m: p.dim_v(),
            rho: p.rep.rho().iter().map(dense).collect(),
            mu: p.rep.mu().iter().map(|r| r.iter().map(dense).collect()).collect(),
        }
    }

    pub fn rho_of(&self, x: &[Q]) -> Dm {
        let mut out = dm_zero(self.m, self.m);
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = dm_add(&out, &dm_scale(c, &self.rho[i]));
        }
        out
    }

    pub fn mu_of(&self, x: &[Q], y: &[Q]) -> Dm {
        let mut out = dm_zero(self.m, self.m);
        for (i, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out = dm_add(&out, &dm_scale(&(a * b), &self.mu[i][j]));
            }
        }
        out
    }

    /// `D(x,y) = μ(y,x) − μ(x,y) + [ρ(x),ρ(y)] − ρ([x,y])`.
    pub fn d_of(&self, g: &Structure, x: &[Q], y: &[Q]) -> Dm {
        let (rx, ry) = (self.rho_of(x), self.rho_of(y));
        let comm = dm_sub(&dm_mul(&rx, &ry), &dm_mul(&ry, &rx));
        dm_sub(
            &dm_add(&dm_sub(&self.mu_of(y, x), &self.mu_of(x, y)), &comm),
            &self.rho_of(&g.bracket(x, y)),
        )
    }
}

/// The semidirect product on `g ⊕ V`:
/// `[x+u,y+v] = [x,y] + ρ(x)v − ρ(y)u`,
/// `⟪x+u,y+v,z+w⟫ = ⟪x,y,z⟫ + D(x,y)w + μ(y,z)u − μ(x,z)v`.
pub fn semidirect(g: &Structure, r: &RepData) -> Structure {
    let (d, m) = (g.dim, r.m);
    let n = d + m;
    let split = |v: &[Q]| (v[..d].to_vec(), v[d..].to_vec());
    let join = |x: Vec<Q>, u: Vec<Q>| [x, u].concat();
    let e = |i: usize| unit(n, i);
    let bracket = |a: &[Q], b: &[Q]| {
        let ((x, u), (y, v)) = (split(a), split(b));
        let vpart = vsub(&dm_apply(&r.rho_of(&x), &v), &dm_apply(&r.rho_of(&y), &u));
        join(g.bracket(&x, &y), vpart)
    };
    let triple = |a: &[Q], b: &[Q], c: &[Q]| {
        let ((x, u), (y, v), (z, w)) = (split(a), split(b), split(c));
        let vpart = vsub(
            &vadd(&dm_apply(&r.d_of(g, &x, &y), &w), &dm_apply(&r.mu_of(&y, &z), &u)),
            &dm_apply(&r.mu_of(&x, &z), &v),
        );
        join(g.triple(&x, &y, &z), vpart)
    };
    Structure {
        dim: n,
        br: (0..n).map(|i| (0..n).map(|j| bracket(&e(i), &e(j))).collect()).collect(),
        tr: (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| triple(&e(i), &e(j), &e(k))).collect()).collect())
            .collect(),
    }
}

/// A pair is valid iff `g` is a Lie-Yamaguti algebra and so is `g ⋉ V`.
pub fn pair_is_valid(g: &Structure, r: &RepData) -> bool {
    g.is_lie_yamaguti() && semidirect(g, r).is_lie_yamaguti()
}

pub fn block_diag(a: &Dm, b: &Dm) -> Dm {
    let (n, m) = (a.len(), b.len());
    let mut out = dm_zero(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = a[i][j].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            out[n + i][n + j] = b[i][j].clone();
        }
    }
    out
}

/// `T: V → g` is a relative Rota-Baxter operator iff its graph
/// `{Tu + u}` is closed under both brackets of `g ⋉ V`.
pub fn graph_is_subalgebra(g: &Structure, r: &RepData, t: &Dm) -> bool {
    let sd = semidirect(g, r);
    let (d, m) = (g.dim, r.m);
    let lift = |u: &[Q]| [dm_apply(t, u), u.to_vec()].concat();
    let in_graph = |v: &[Q]| dm_apply(t, &v[d..]) == v[..d];
    for a in 0..m {
        for b in 0..m {
            let (ua, ub) = (lift(&unit(m, a)), lift(&unit(m, b)));
            if !in_graph(&sd.bracket(&ua, &ub)) {
                return false;
            }
            for c in 0..m {
                if !in_graph(&sd.triple(&ua, &ub, &lift(&unit(m, c)))) {
                    return false;
                }
            }
        }
    }
    true
}

/// The Nijenhuis conditions written out: `N[x,y]_N = [Nx,Ny]` and
/// `N⟪x,y,z⟫_N = ⟪Nx,Ny,Nz⟫` for the two deformed brackets.
pub fn is_nijenhuis(g: &Structure, n: &Dm) -> bool {
    let d = g.dim;
    let nn = |v: &[Q]| dm_apply(n, v);
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (unit(d, i), unit(d, j));
            let (nx, ny) = (nn(&x), nn(&y));
            let phi = vsub(&vadd(&g.bracket(&nx, &y), &g.bracket(&x, &ny)), &nn(&g.bracket(&x, &y)));
            if nn(&phi) != g.bracket(&nx, &ny) {
                return false;
            }
            for k in 0..d {
                let z = unit(d, k);
                let nz = nn(&z);
                let phi1 = vsub(
                    &vadd(&vadd(&g.triple(&nx, &y, &z), &g.triple(&x, &ny, &z)), &g.triple(&x, &y, &nz)),
                    &nn(&g.triple(&x, &y, &z)),
                );
                let phi2 = vsub(
                    &vadd(&vadd(&g.triple(&nx, &ny, &z), &g.triple(&x, &ny, &nz)), &g.triple(&nx, &y, &nz)),
                    &nn(&phi1),
                );
                if nn(&phi2) != g.triple(&nx, &ny, &nz) {
                    return false;
                }
            }
        }
    }
    true
}

/// Nijenhuis structure conditions: `N` Nijenhuis, `ρ(Nx)S = Sϱ(x)` and
/// `μ(Nx,Ny)S = Sϖ₂(x,y)` with the deformation maps written out.
pub fn is_nijenhuis_structure(g: &Structure, r: &RepData, n: &Dm, s: &Dm) -> bool {
    if !is_nijenhuis(g, n) {
        return false;
    }
    let d = g.dim;
    let nn = |v: &[Q]| dm_apply(n, v);
    for i in 0..d {
        let x = unit(d, i);
        let nx = nn(&x);
        let rx = r.rho_of(&x);
        let varrho = dm_sub(&dm_add(&r.rho_of(&nx), &dm_mul(&rx, s)), &dm_mul(s, &rx));
        if dm_mul(&r.rho_of(&nx), s) != dm_mul(s, &varrho) {
            return false;
        }
        for j in 0..d {
            let y = unit(d, j);
            let ny = nn(&y);
            let mxy = r.mu_of(&x, &y);
            let varpi1 = dm_sub(
                &dm_add(&dm_add(&r.mu_of(&nx, &y), &r.mu_of(&x, &ny)), &dm_mul(&mxy, s)),
                &dm_mul(s, &mxy),
            );
            let varpi2 = dm_sub(
                &dm_add(
                    &dm_add(&dm_mul(&r.mu_of(&nx, &y), s), &dm_mul(&r.mu_of(&x, &ny), s)),
                    &r.mu_of(&nx, &ny),
                ),
                &dm_mul(s, &varpi1),
            );
            if dm_mul(&r.mu_of(&nx, &ny), s) != dm_mul(s, &varpi2) {
                return false;
            }
        }
    }
    true
}

/// The deformed pair of `d` evaluated at the number `t`.
pub fn deformed_at(g: &Structure, r: &RepData, d: &DeformationData, t: &Q) -> (Structure, RepData) {
    let n = g.dim;
    let t2 = t * t;
    let mut gt = g.clone();
    for i in 0..n {
        for j in 0..n {
            gt.br[i][j] = vadd(&g.br[i][j], &vscale(t, d.phi.fiber(&[i, j])));
            for k in 0..n {
                gt.tr[i][j][k] = vadd(
                    &vadd(&g.tr[i][j][k], &vscale(t, d.phi1.fiber(&[i, j, k]))),
                    &vscale(&t2, d.phi2.fiber(&[i, j, k])),
                );
            }
        }
    }
    let rt = RepData {
        m: r.m,
        rho: (0..n).map(|i| dm_add(&r.rho[i], &dm_scale(t, &dense(&d.varrho[i])))).collect(),
        mu: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        dm_add(
                            &dm_add(&r.mu[i][j], &dm_scale(t, &dense(&d.varpi1[i][j]))),
                            &dm_scale(&t2, &dense(&d.varpi2[i][j])),
                        )
                    })
                    .collect()
            })
            .collect(),
    };
    (gt, rt)
}

/// Sample points that determine polynomial identities in `t` of degree at
/// most eight.
pub fn sample_points() -> Vec<Q> {
    vec![q(-3), q(-2), q(-1), q(0), q(1), q(2), q(3), qq(1, 2), qq(-1, 3)]
}

/// Independent check of a trivial deformation: at each sample point the
/// deformed data is a valid pair (its semidirect product is Lie-Yamaguti)
/// and `(Id+tN) ⊕ (Id+tS)` maps the deformed semidirect product onto the
/// undeformed one.
pub fn trivial_deformation_holds(g: &Structure, r: &RepData, d: &DeformationData, n: &Dm, s: &Dm) -> bool {
    let undeformed = semidirect(g, r);
    sample_points().iter().all(|t| {
        let (gt, rt) = deformed_at(g, r, d, t);
        let sd = semidirect(&gt, &rt);
        let phi = block_diag(
            &dm_add(&dm_id(g.dim), &dm_scale(t, n)),
            &dm_add(&dm_id(r.m), &dm_scale(t, s)),
        );
        gt.is_lie_yamaguti() && sd.is_lie_yamaguti() && sd.is_homomorphism_to(&undeformed, &phi)
    })
}

/// Pull-based evaluation of the Yamaguti coboundary on flat cochains.
///
/// Degree-1 cochains are `f[x][o]`; a degree-`n+1` cochain (`n ≥ 1`) is the
/// pair `f[w₁..wₙ][o]`, `g[w₁..wₙ][z][o]` over the wedge basis
/// `{eᵢ∧eⱼ : i < j}` in lexicographic order.
pub struct YamagutiOracle<'a> {
    pub g: &'a Structure,
    pub r: &'a RepData,
    pairs: Vec<(usize, usize)>,
}

impl<'a> YamagutiOracle<'a> {
    pub fn new(g: &'a Structure, r: &'a RepData) -> Self {
        let d = g.dim;
        let pairs = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        YamagutiOracle { g, r, pairs }
    }

    fn w(&self) -> usize {
        self.pairs.len()
    }

    pub fn len(&self, degree: usize) -> usize {
        let (d, m, w) = (self.g.dim, self.r.m, self.w());
        if degree == 1 {
            d * m
        } else {
            let p = w.pow(degree as u32 - 1);
            p * m + p * d * m
        }
    }

    /// Wedge coordinates of `x ∧ y`.
    fn wedge(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.pairs.iter().map(|&(i, j)| &(&x[i] * &y[j]) - &(&x[j] * &y[i])).collect()
    }

    fn basis_wedge(&self, k: usize) -> (Vec<Q>, Vec<Q>) {
        let d = self.g.dim;
        let (i, j) = self.pairs[k];
        (unit(d, i), unit(d, j))
    }

    /// `f(X₁,…,Xₙ)` (and `g(X₁,…,Xₙ,z)` when `z` is given) for wedge
    /// coordinate vectors `xs`, extended multilinearly.
    fn eval(&self, c: &[Q], xs: &[Vec<Q>], z: Option<&[Q]>) -> Vec<Q> {
        let (d, m, w) = (self.g.dim, self.r.m, self.w());
        let n = xs.len();
        let nf = w.pow(n as u32) * m;
        let mut out = zeros(m);
        let mut idx = vec![0usize; n];
        loop {
            let mut coef = q(1);
            for (k, &i) in idx.iter().enumerate() {
                coef = &coef * &xs[k][i];
                if coef.is_zero() {
                    break;
                }
            }
            if !coef.is_zero() {
                let flat = idx.iter().fold(0, |acc, &i| acc * w + i);
                match z {
                    None => axpy(&mut out, &coef, &c[flat * m..flat * m + m]),
                    Some(z) => {
                        for (zi, zc) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            let base = nf + (flat * d + zi) * m;
                            axpy(&mut out, &(&coef * zc), &c[base..base + m]);
                        }
                    }
                }
            }
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < w {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    fn eval1(&self, c: &[Q], x: &[Q]) -> Vec<Q> {
        let m = self.r.m;
        let mut out = zeros(m);
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut out, xi, &c[i * m..i * m + m]);
        }
        out
    }

    fn sign(k: usize) -> Q {
        if k.is_multiple_of(2) {
            q(1)
        } else {
            q(-1)
        }
    }

    /// `δ` applied to a flat cochain of degree `p`.
    pub fn delta(&self, p: usize, c: &[Q]) -> Vec<Q> {
        let (d, w) = (self.g.dim, self.w());
        let (g, r) = (self.g, self.r);
        let e = |i: usize| unit(d, i);
        let mut out = Vec::with_capacity(self.len(p + 1));
        if p == 1 {
            for k in 0..w {
                let (x, y) = self.basis_wedge(k);
                let v = vsub(
                    &vsub(
                        &dm_apply(&r.rho_of(&x), &self.eval1(c, &y)),
                        &dm_apply(&r.rho_of(&y), &self.eval1(c, &x)),
                    ),
                    &self.eval1(c, &g.bracket(&x, &y)),
                );
                out.extend(v);
            }
            for k in 0..w {
                let (x, y) = self.basis_wedge(k);
                for zi in 0..d {
                    let z = e(zi);
                    let v = vsub(
                        &vsub(
                            &vadd(
                                &dm_apply(&r.d_of(g, &x, &y), &self.eval1(c, &z)),
                                &dm_apply(&r.mu_of(&y, &z), &self.eval1(c, &x)),
                            ),
                            &dm_apply(&r.mu_of(&x, &z), &self.eval1(c, &y)),
                        ),
                        &self.eval1(c, &g.triple(&x, &y, &z)),
                    );
                    out.extend(v);
                }
            }
            return out;
        }
        let n = p - 1;
        let tuples = w.pow(n as u32 + 1);
        let decode = |mut t: usize| {
            let mut ks = vec![0usize; n + 1];
            for slot in ks.iter_mut().rev() {
                *slot = t % w;
                t /= w;
            }
            ks
        };
        let as_wedge = |k: usize| unit(w, k);
        // X_k ∘ X_l = ⟪x_k,y_k,x_l⟫ ∧ y_l + x_l ∧ ⟪x_k,y_k,y_l⟫.
        let circ = |k: usize, l: usize| {
            let (xk, yk) = self.basis_wedge(k);
            let (xl, yl) = self.basis_wedge(l);
            vadd(
                &self.wedge(&g.triple(&xk, &yk, &xl), &yl),
                &self.wedge(&xl, &g.triple(&xk, &yk, &yl)),
            )
        };
        let omit = |ks: &[usize], k: usize| -> Vec<Vec<Q>> {
            ks.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| as_wedge(x)).collect()
        };
        let sn = Self::sign(n);
        // δ_I
        for t in 0..tuples {
            let ks = decode(t);
            let head: Vec<Vec<Q>> = ks[..n].iter().map(|&k| as_wedge(k)).collect();
            let (xl, yl) = self.basis_wedge(ks[n]);
            let mut v = vsub(
                &vsub(
                    &dm_apply(&r.rho_of(&xl), &self.eval(c, &head, Some(&yl))),
                    &dm_apply(&r.rho_of(&yl), &self.eval(c, &head, Some(&xl))),
                ),
                &self.eval(c, &head, Some(&g.bracket(&xl, &yl))),
            );
            v = vscale(&sn, &v);
            for k in 0..n {
                let (xk, yk) = self.basis_wedge(ks[k]);
                let term = dm_apply(&r.d_of(g, &xk, &yk), &self.eval(c, &omit(&ks, k), None));
                axpy(&mut v, &Self::sign(k), &term);
            }
            for k in 0..=n {
                for l in k + 1..=n {
                    let mut args: Vec<Vec<Q>> = ks.iter().map(|&x| as_wedge(x)).collect();
                    args[l] = circ(ks[k], ks[l]);
                    args.remove(k);
                    axpy(&mut v, &Self::sign(k + 1), &self.eval(c, &args, None));
                }
            }
            out.extend(v);
        }
        // δ_II
        for t in 0..tuples {
            let ks = decode(t);
            let head: Vec<Vec<Q>> = ks[..n].iter().map(|&k| as_wedge(k)).collect();
            let (xl, yl) = self.basis_wedge(ks[n]);
            for zi in 0..d {
                let z = e(zi);
                let mut v = vsub(
                    &dm_apply(&r.mu_of(&yl, &z), &self.eval(c, &head, Some(&xl))),
                    &dm_apply(&r.mu_of(&xl, &z), &self.eval(c, &head, Some(&yl))),
                );
                v = vscale(&sn, &v);
                for k in 0..=n {
                    let (xk, yk) = self.basis_wedge(ks[k]);
                    let term = dm_apply(&r.d_of(g, &xk, &yk), &self.eval(c, &omit(&ks, k), Some(&z)));
                    axpy(&mut v, &Self::sign(k), &term);
                    let tz = g.triple(&xk, &yk, &z);
                    axpy(&mut v, &Self::sign(k + 1), &self.eval(c, &omit(&ks, k), Some(&tz)));
                }
                for k in 0..=n {
                    for l in k + 1..=n {
                        let mut args: Vec<Vec<Q>> = ks.iter().map(|&x| as_wedge(x)).collect();
                        args[l] = circ(ks[k], ks[l]);
                        args.remove(k);
                        axpy(&mut v, &Self::sign(k + 1), &self.eval(c, &args, Some(&z)));
                    }
                }
                out.extend(v);
            }
        }
        out
    }

    /// Dense matrix of `δ_p`.
    pub fn matrix(&self, p: usize) -> Dm {
        let cols: Vec<Vec<Q>> = (0..self.len(p)).map(|j| self.delta(p, &unit(self.len(p), j))).collect();
        let rows = self.len(p + 1);
        (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }
}

/// The adjoint representation: `ρ(x)z = [x,z]`, `μ(x,y)z = ⟪z,x,y⟫`.
pub fn adjoint(g: &Structure) -> RepData {
    let d = g.dim;
    let from_cols = |cols: Vec<Vec<Q>>| dm_transpose(&cols);
    RepData {
        m: d,
        rho: (0..d).map(|i| from_cols((0..d).map(|k| g.br[i][k].clone()).collect())).collect(),
        mu: (0..d)
            .map(|i| (0..d).map(|j| from_cols((0..d).map(|k| g.tr[k][i][j].clone()).collect())).collect())
            .collect(),
    }
}

/// The brackets `T` induces on `V`, read off the semidirect product:
/// `[u,v]_T` and `⟪u,v,w⟫_T` are the `V`-components of the brackets of the
/// graph elements `Tu+u`, `Tv+v`, `Tw+w`.
pub fn subadjacent(g: &Structure, r: &RepData, t: &Dm) -> Structure {
    let sd = semidirect(g, r);
    let (d, m) = (g.dim, r.m);
    let lift = |u: Vec<Q>| [dm_apply(t, &u), u].concat();
    let e = |i: usize| lift(unit(m, i));
    Structure {
        dim: m,
        br: (0..m).map(|i| (0..m).map(|j| sd.bracket(&e(i), &e(j))[d..].to_vec()).collect()).collect(),
        tr: (0..m)
            .map(|i| (0..m).map(|j| (0..m).map(|k| sd.triple(&e(i), &e(j), &e(k))[d..].to_vec()).collect()).collect())
            .collect(),
    }
}

/// The brackets deformed by `N`: `[x,y]_N = [Nx,y] + [x,Ny] − N[x,y]` and
/// `⟪x,y,z⟫_N = ⟪Nx,Ny,z⟫ + ⟪Nx,y,Nz⟫ + ⟪x,Ny,Nz⟫
///   − N(⟪Nx,y,z⟫ + ⟪x,Ny,z⟫ + ⟪x,y,Nz⟫) + N²⟪x,y,z⟫`.
pub fn deformed_by(g: &Structure, n: &Dm) -> Structure {
    let d = g.dim;
    let nn = |v: &[Q]| dm_apply(n, v);
    let e = |i: usize| unit(d, i);
    let br = |x: &[Q], y: &[Q]| vsub(&vadd(&g.bracket(&nn(x), y), &g.bracket(x, &nn(y))), &nn(&g.bracket(x, y)));
    let tr = |x: &[Q], y: &[Q], z: &[Q]| {
        let (nx, ny, nz) = (nn(x), nn(y), nn(z));
        let two = vadd(&vadd(&g.triple(&nx, &ny, z), &g.triple(&nx, y, &nz)), &g.triple(x, &ny, &nz));
        let one = vadd(&vadd(&g.triple(&nx, y, z), &g.triple(x, &ny, z)), &g.triple(x, y, &nz));
        vadd(&vsub(&two, &nn(&one)), &nn(&nn(&g.triple(x, y, z))))
    };
    Structure {
        dim: d,
        br: (0..d).map(|i| (0..d).map(|j| br(&e(i), &e(j))).collect()).collect(),
        tr: (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| tr(&e(i), &e(j), &e(k))).collect()).collect())
            .collect(),
    }
}

pub fn same_structure(a: &Structure, b: &Structure) -> bool {
    a.br == b.br && a.tr == b.tr
}

/// Rota-Baxter-Nijenhuis structure `(T, S, N)`: `T` relative Rota-Baxter,
/// `(N, S)` a Nijenhuis structure, `N∘T = T∘S`, and the `S`-deformation of
/// the brackets induced by `T` equals the brackets induced by `N∘T`.
pub fn is_rbn(g: &Structure, r: &RepData, t: &Dm, s: &Dm, n: &Dm) -> bool {
    graph_is_subalgebra(g, r, t)
        && is_nijenhuis_structure(g, r, n, s)
        && dm_mul(n, t) == dm_mul(t, s)
        && same_structure(&deformed_by(&subadjacent(g, r, t), s), &subadjacent(g, r, &dm_mul(n, t)))
}

/// Places a pair cochain into the semidirect cochain space along the given
/// coordinate embedding.
pub fn embed(x: &[Q], positions: &[usize], len: usize) -> Vec<Q> {
    let mut out = zeros(len);
    for (v, &p) in x.iter().zip(positions) {
        out[p] = v.clone();
    }
    out
}
