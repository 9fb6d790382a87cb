//! Quadratic Lie-Yamaguti algebras (invariant nondegenerate symmetric forms
//! `B` with the induced map `B♯: g* → g`), r-matrices `π ∈ ∧²g` with
//! `π♯: g* → g`, dual Nijenhuis structures, r-matrix-Nijenhuis and
//! Rota-Baxter-Nijenhuis structures, and the conversion between the latter
//! two over a quadratic algebra.
//!
//! Dual spaces use the coordinate pairing `⟨eᵢ*, eⱼ⟩ = δᵢⱼ`, so the dual
//! map `N*` of an endomorphism is its transpose.

use crate::algebra::LieYamagutiAlgebra;
use crate::deform::{is_nijenhuis_structure, nijenhuis_structure_report};
use crate::error::{Error, Result};
use crate::exact::{invert, rank, Matrix};
use crate::rep::{LieYRepPair, Representation};
use crate::report::{check_identity, CheckReport, CheckResult, Witness};
use crate::rota_baxter::{is_rbn, rbn_report, relative_rb_report};

fn check_square(a: &Matrix, dim: usize, name: &str) -> Result<()> {
    if a.rows() != dim || a.cols() != dim {
        return Err(Error::DimMismatch(format!(
            "{name} is {}x{}, expected {dim}x{dim}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

fn matrix_report(name: &str, lhs: &Matrix, rhs: &Matrix) -> CheckResult {
    check_identity(name, &[lhs.cols()], |ix| {
        crate::exact::vec_sub(&lhs.column(ix[0]), &rhs.column(ix[0]))
    })
}

fn only(report: &CheckReport, names: &[&str]) -> CheckReport {
    CheckReport {
        checks: report
            .checks
            .iter()
            .filter(|c| names.contains(&c.name.as_str()))
            .cloned()
            .collect(),
    }
}

/// The form `B(x,y) = xᵀ b y` evaluated on basis vectors.
fn form(b: &Matrix, x: &[crate::Rational], y: &[crate::Rational]) -> crate::Rational {
    crate::exact::dot(x, &b.mul_vec(y))
}

/// Invariance and nondegeneracy of a symmetric bilinear form `b`
/// (`b[i][j] = B(eᵢ,eⱼ)`):
/// `invariance-binary`: `B([x,y],z) = −B(y,[x,z])`,
/// `invariance-ternary`: `B(⟪x,y,z⟫,w) = B(x,⟪w,z,y⟫)`,
/// `nondegenerate`: `b` has full rank.
pub fn invariant_form_report(a: &LieYamagutiAlgebra, b: &Matrix) -> Result<CheckReport> {
    let d = a.dim();
    check_square(b, d, "B")?;
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let e = |i: usize| crate::exact::unit::<crate::Rational>(d, i);
    let mut r = CheckReport::new();
    r.push(check_identity("invariance-binary", &[d, d, d], |ix| {
        let (y, z) = (e(ix[1]), e(ix[2]));
        let lhs = form(b, a.bracket_basis(ix[0], ix[1]), &z);
        let rhs = -form(b, &y, a.bracket_basis(ix[0], ix[2]));
        vec![lhs - rhs]
    }));
    r.push(check_identity("invariance-ternary", &[d, d, d, d], |ix| {
        let (x, w) = (e(ix[0]), e(ix[3]));
        let lhs = form(b, a.triple_basis(ix[0], ix[1], ix[2]), &w);
        let rhs = form(b, &x, a.triple_basis(ix[3], ix[2], ix[1]));
        vec![lhs - rhs]
    }));
    r.push(CheckResult::from_bool("nondegenerate", rank(b) == d));
    Ok(r)
}

/// `true` iff `b` is a nondegenerate invariant symmetric form on `a`.
pub fn is_invariant_form(a: &LieYamagutiAlgebra, b: &Matrix) -> Result<bool> {
    Ok(invariant_form_report(a, b)?.all_passed())
}

/// The three transport identities relating the coadjoint and adjoint
/// representations through a map `B♯: g* → g`, checked on basis elements:
/// `transport-ad`: `B♯(ad*_x α) = ad_x(B♯α)`,
/// `transport-right`: `−B♯(ℜ*(y,x)α) = ℜ(x,y)(B♯α)`,
/// `transport-left`: `B♯(𝔏*(x,y)α) = 𝔏(x,y)(B♯α)`,
/// where `ad*`, `ℜ*`, `𝔏*` are dual to `−ad`, `−ℜ`, `−𝔏`.
pub fn transport_report(a: &LieYamagutiAlgebra, b_sharp: &Matrix) -> Result<CheckReport> {
    let d = a.dim();
    check_square(b_sharp, d, "B♯")?;
    let adj = Representation::adjoint(a);
    let ll = adj.derived_d(a)?;
    let mut r = CheckReport::new();
    r.push(check_identity("transport-ad", &[d], |ix| {
        let ad = &adj.rho()[ix[0]];
        let ad_star = ad.transpose().neg();
        b_sharp.mul(&ad_star).sub(&ad.mul(b_sharp)).into_data()
    }));
    r.push(check_identity("transport-right", &[d, d], |ix| {
        let (x, y) = (ix[0], ix[1]);
        let r_star_yx = adj.mu()[y][x].transpose().neg();
        b_sharp
            .mul(&r_star_yx)
            .neg()
            .sub(&adj.mu()[x][y].mul(b_sharp))
            .into_data()
    }));
    r.push(check_identity("transport-left", &[d, d], |ix| {
        let l = ll.at(ix[0], ix[1]);
        let l_star = l.transpose().neg();
        b_sharp.mul(&l_star).sub(&l.mul(b_sharp)).into_data()
    }));
    Ok(r)
}

/// Which transport identity to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransportSide {
    Adjoint,
    Right,
    Left,
    All,
}

impl TransportSide {
    fn check_name(self) -> Option<&'static str> {
        match self {
            TransportSide::Adjoint => Some("transport-ad"),
            TransportSide::Right => Some("transport-right"),
            TransportSide::Left => Some("transport-left"),
            TransportSide::All => None,
        }
    }
}

/// A quadratic Lie-Yamaguti algebra: an algebra with a validated
/// nondegenerate invariant symmetric form `B` and `B♯ = b⁻¹`, so that
/// `B(x,y) = ⟨(B♯)⁻¹x, y⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    algebra: LieYamagutiAlgebra,
    b: Matrix,
    b_sharp: Matrix,
}

impl QuadraticForm {
    pub fn new(algebra: &LieYamagutiAlgebra, b: Matrix) -> Result<Self> {
        let r = invariant_form_report(algebra, &b)?;
        if let Some(f) = r.first_failure() {
            return Err(Error::PreconditionFailed(format!(
                "not a nondegenerate invariant form ({})",
                f.name
            )));
        }
        let b_sharp = invert(&b)?;
        Ok(QuadraticForm {
            algebra: algebra.clone(),
            b,
            b_sharp,
        })
    }

    pub fn algebra(&self) -> &LieYamagutiAlgebra {
        &self.algebra
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn b_sharp(&self) -> &Matrix {
        &self.b_sharp
    }

    /// Report of the selected transport identities for `B♯`.
    pub fn transport_report(&self, side: TransportSide) -> Result<CheckReport> {
        let full = transport_report(&self.algebra, &self.b_sharp)?;
        Ok(match side.check_name() {
            Some(name) => only(&full, &[name]),
            None => full,
        })
    }
}

/// The transport identities for a validated quadratic form; any failure is
/// a violated consequence of invariance.
pub fn invariance_transport(qf: &QuadraticForm, side: TransportSide) -> Result<CheckReport> {
    let r = qf.transport_report(side)?;
    if let Some(f) = r.first_failure() {
        return Err(Error::ConsequenceViolated(format!(
            "transport identity {} fails for an invariant form",
            f.name
        )));
    }
    Ok(r)
}

/// `π♯` for `pi[i][j] = π(eᵢ*, eⱼ*)`: `⟨π♯(α), β⟩ = π(α, β)`, i.e. the
/// `j`-th coordinate of `π♯(eᵢ*)` is `pi[i][j]`.
pub fn pi_sharp(pi: &Matrix) -> Matrix {
    pi.transpose()
}

/// Components `pi[i][j] = π(eᵢ*, eⱼ*)` of the 2-tensor with the given `π♯`.
pub fn pi_from_sharp(sharp: &Matrix) -> Matrix {
    sharp.transpose()
}

fn check_skew(a: &LieYamagutiAlgebra, pi: &Matrix) -> Result<()> {
    check_square(pi, a.dim(), "π")?;
    if !pi.is_skew() {
        return Err(Error::NotSkew);
    }
    Ok(())
}

/// The relative Rota-Baxter conditions for `π♯` with respect to the
/// coadjoint representation.
pub fn r_matrix_report(a: &LieYamagutiAlgebra, pi: &Matrix) -> Result<CheckReport> {
    check_skew(a, pi)?;
    relative_rb_report(&LieYRepPair::coadjoint(a.clone()), &pi_sharp(pi))
}

/// `true` iff the skew 2-tensor `π` is an r-matrix, i.e. `π♯` is a relative
/// Rota-Baxter operator with respect to the coadjoint representation.
pub fn is_r_matrix(a: &LieYamagutiAlgebra, pi: &Matrix) -> Result<bool> {
    Ok(r_matrix_report(a, pi)?.all_passed())
}

/// A validated r-matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pi: Matrix,
    pi_sharp: Matrix,
}

impl RMatrix {
    pub fn new(a: &LieYamagutiAlgebra, pi: Matrix) -> Result<Self> {
        let r = r_matrix_report(a, &pi)?;
        if let Some(f) = r.first_failure() {
            return Err(Error::PreconditionFailed(format!("not an r-matrix ({})", f.name)));
        }
        let pi_sharp = pi_sharp(&pi);
        Ok(RMatrix { pi, pi_sharp })
    }

    pub fn pi(&self) -> &Matrix {
        &self.pi
    }

    pub fn pi_sharp(&self) -> &Matrix {
        &self.pi_sharp
    }
}

/// `true` iff `R∘B♯` is skew-symmetric:
/// `⟨α, R B♯β⟩ + ⟨β, R B♯α⟩ = 0`.
pub fn is_skew_endomorphism(qf: &QuadraticForm, r: &Matrix) -> Result<bool> {
    Ok(skew_endomorphism_report(qf, r)?.passed)
}

/// Check `skew-endomorphism`; the witness is the first index pair `(i, j)`
/// with `(R B♯)ᵢⱼ + (R B♯)ⱼᵢ ≠ 0`, the residual being that sum.
pub fn skew_endomorphism_report(qf: &QuadraticForm, r: &Matrix) -> Result<CheckResult> {
    check_square(r, qf.algebra.dim(), "R")?;
    let m = r.mul(&qf.b_sharp);
    let d = m.rows();
    for i in 0..d {
        for j in i..d {
            let sum = m.get(i, j) + m.get(j, i);
            if !sum.is_zero() {
                return Ok(CheckResult::fail(
                    "skew-endomorphism",
                    Some(Witness {
                        tuple: vec![i, j],
                        residual: vec![sum.to_string()],
                        t_order: Some(0),
                    }),
                ));
            }
        }
    }
    Ok(CheckResult::pass("skew-endomorphism"))
}

/// Rota-Baxter-Nijenhuis conditions for `(R, N)`: the relative
/// Rota-Baxter-Nijenhuis conditions of `(R, N, N)` on the adjoint pair.
pub fn rb_nijenhuis_report(a: &LieYamagutiAlgebra, r: &Matrix, n: &Matrix) -> Result<CheckReport> {
    rbn_report(&LieYRepPair::adjoint(a.clone()), r, n, n)
}

/// `true` iff `(R, N)` is a Rota-Baxter-Nijenhuis structure: `R` is a
/// Rota-Baxter operator, `N` a Nijenhuis operator, `N∘R = R∘N`,
/// `[x,y]^{N∘R} = [x,y]^R_N` and `⟪x,y,z⟫^{N∘R} = ⟪x,y,z⟫^R_N`.
pub fn is_rb_nijenhuis(a: &LieYamagutiAlgebra, r: &Matrix, n: &Matrix) -> Result<bool> {
    is_rbn(&LieYRepPair::adjoint(a.clone()), r, n, n)
}

/// r-matrix-Nijenhuis conditions for `(π, N)`: `r-matrix/…` (π♯ relative
/// Rota-Baxter for the coadjoint representation), `nijenhuis-binary`,
/// `nijenhuis-ternary`, `ON1`: `N∘π♯ = π♯∘N*`, `ON2`:
/// `[α,β]^{N∘π♯} = [α,β]^{π♯}_{N*}`, `ON3`: the ternary analogue.
pub fn rmatrix_nijenhuis_report(a: &LieYamagutiAlgebra, pi: &Matrix, n: &Matrix) -> Result<CheckReport> {
    check_skew(a, pi)?;
    check_square(n, a.dim(), "N")?;
    let coad = LieYRepPair::coadjoint(a.clone());
    let sharp = pi_sharp(pi);
    let full = rbn_report(&coad, &sharp, &n.transpose(), n)?;
    let mut r = CheckReport::new();
    r.extend_prefixed("r-matrix/", relative_rb_report(&coad, &sharp)?);
    for c in a.nijenhuis_report(n)?.checks {
        r.push(c);
    }
    for c in only(&full, &["ON1", "ON2", "ON3"]).checks {
        r.push(c);
    }
    Ok(r)
}

/// `true` iff `(π, N)` is an r-matrix-Nijenhuis structure.
pub fn is_rmatrix_nijenhuis(a: &LieYamagutiAlgebra, pi: &Matrix, n: &Matrix) -> Result<bool> {
    Ok(rmatrix_nijenhuis_report(a, pi, n)?.all_passed())
}

/// The two formulations of "`(N, S)` is a dual Nijenhuis structure":
/// `via-dual/…` — `(N, S*)` is a Nijenhuis structure on the dual pair;
/// `direct/…` — `N` is Nijenhuis and, written on `V` itself,
/// `dual-rho`: `ρ(Nx)S = S(ρ(Nx) − ρ(x)S) + ρ(x)S²`,
/// `dual-mu`: `Sμ(Nx,Ny) = (μ(Nx,Ny) + Sμ(Nx,y) + Sμ(x,Ny) − μ(Nx,y)S
/// − μ(x,Ny)S − Sμ(x,y)S + μ(x,y)S²)S`.
pub fn dual_nijenhuis_routes(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<(CheckReport, CheckReport)> {
    check_square(n, pair.dim_g(), "N")?;
    check_square(s, pair.dim_v(), "S")?;
    let via_dual = nijenhuis_structure_report(&pair.dual(), n, &s.transpose())?;
    let d = pair.dim_g();
    let rep = &pair.rep;
    let s2 = s.mul(s);
    let mut direct = pair.algebra.nijenhuis_report(n)?;
    direct.push(check_identity("dual-rho", &[d], |ix| {
        let i = ix[0];
        let rnx = rep.rho_of(&n.column(i));
        let rx = &rep.rho()[i];
        let lhs = rnx.mul(s);
        let rhs = s.mul(&rnx.sub(&rx.mul(s))).add(&rx.mul(&s2));
        lhs.sub(&rhs).into_data()
    }));
    direct.push(check_identity("dual-mu", &[d, d], |ix| {
        let (x, y) = (crate::exact::unit(d, ix[0]), crate::exact::unit(d, ix[1]));
        let (nx, ny) = (n.column(ix[0]), n.column(ix[1]));
        let mnn = rep.mu_of(&nx, &ny);
        let (mnx_y, mx_ny, mxy) = (rep.mu_of(&nx, &y), rep.mu_of(&x, &ny), rep.mu_of(&x, &y));
        let bracket = mnn
            .add(&s.mul(&mnx_y))
            .add(&s.mul(&mx_ny))
            .sub(&mnx_y.mul(s))
            .sub(&mx_ny.mul(s))
            .sub(&s.mul(&mxy).mul(s))
            .add(&mxy.mul(&s2));
        s.mul(&mnn).sub(&bracket.mul(s)).into_data()
    }));
    Ok((via_dual, direct))
}

/// The ternary condition in the form
/// `μ(Nx,Ny)S = S(μ(Nx,Ny) − μ(Nx,y)S − μ(x,Ny)S + μ(x,y)S²)`.
/// This form is not equivalent to the dual-pair definition (it already
/// fails for `(N, N*)` on the coadjoint representation of `sl₂` with a
/// non-scalar Nijenhuis `N`), so it is exposed for comparison only and does
/// not enter any verdict.
pub fn left_factored_dual_mu_report(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<CheckResult> {
    check_square(n, pair.dim_g(), "N")?;
    check_square(s, pair.dim_v(), "S")?;
    let d = pair.dim_g();
    let rep = &pair.rep;
    let s2 = s.mul(s);
    Ok(check_identity("left-factored-dual-mu", &[d, d], |ix| {
        let (x, y) = (crate::exact::unit(d, ix[0]), crate::exact::unit(d, ix[1]));
        let (nx, ny) = (n.column(ix[0]), n.column(ix[1]));
        let mnn = rep.mu_of(&nx, &ny);
        let inner = mnn
            .sub(&rep.mu_of(&nx, &y).mul(s))
            .sub(&rep.mu_of(&x, &ny).mul(s))
            .add(&rep.mu_of(&x, &y).mul(&s2));
        mnn.mul(s).sub(&s.mul(&inner)).into_data()
    }))
}

/// Combined report of both dual-Nijenhuis formulations, prefixed
/// `via-dual/` and `direct/`.
pub fn dual_nijenhuis_report(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<CheckReport> {
    let (via_dual, direct) = dual_nijenhuis_routes(pair, n, s)?;
    let mut r = CheckReport::new();
    r.extend_prefixed("via-dual/", via_dual);
    r.extend_prefixed("direct/", direct);
    Ok(r)
}

/// `true` iff `(N, S)` is a dual Nijenhuis structure. Both formulations
/// are evaluated; if they disagree the disagreement is returned as an error.
pub fn is_dual_nijenhuis(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<bool> {
    let (_, direct) = dual_nijenhuis_routes(pair, n, s)?;
    let via_dual = is_nijenhuis_structure(&pair.dual(), n, &s.transpose())?;
    let direct_ok = direct.all_passed();
    if via_dual != direct_ok {
        let detail = match direct.first_failure() {
            Some(f) => format!("dual-pair route holds, direct route fails at {}", f.name),
            None => "direct route holds, dual-pair route fails".to_string(),
        };
        return Err(Error::DualRouteDisagreement(detail));
    }
    Ok(via_dual)
}

/// Conditions for `(T, S, N)` to be a relative Rota-Baxter-dual-Nijenhuis
/// structure: `rb/…`, `dual-nijenhuis/…` and `ON1`–`ON3`.
pub fn rb_dual_nijenhuis_report(pair: &LieYRepPair, t: &Matrix, s: &Matrix, n: &Matrix) -> Result<CheckReport> {
    let full = rbn_report(pair, t, s, n)?;
    let mut r = CheckReport::new();
    r.extend_prefixed("rb/", relative_rb_report(pair, t)?);
    r.extend_prefixed("dual-nijenhuis/", dual_nijenhuis_report(pair, n, s)?);
    for c in only(&full, &["ON1", "ON2", "ON3"]).checks {
        r.push(c);
    }
    Ok(r)
}

/// `true` iff `(T, S, N)` is a relative Rota-Baxter-dual-Nijenhuis structure.
pub fn is_rb_dual_nijenhuis(pair: &LieYRepPair, t: &Matrix, s: &Matrix, n: &Matrix) -> Result<bool> {
    let dual_ok = is_dual_nijenhuis(pair, n, s)?;
    let r = rb_dual_nijenhuis_report(pair, t, s, n)?;
    let rest = r
        .checks
        .iter()
        .filter(|c| !c.name.starts_with("dual-nijenhuis/"))
        .all(|c| c.passed);
    Ok(dual_ok && rest)
}

/// `B♯∘N* = N∘B♯`: compatibility of `N` with the form.
pub fn form_compatibility(qf: &QuadraticForm, n: &Matrix) -> Result<CheckResult> {
    check_square(n, qf.algebra.dim(), "N")?;
    Ok(matrix_report(
        "form-compatible",
        &qf.b_sharp.mul(&n.transpose()),
        &n.mul(&qf.b_sharp),
    ))
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(what.to_string()))
    }
}

/// From a Rota-Baxter-Nijenhuis structure `(R, N)` with `R` a skew
/// endomorphism and `N` compatible with `B`, the r-matrix `π` with
/// `π♯ = R∘B♯`; `(π, N)` is an r-matrix-Nijenhuis structure and, read on
/// the coadjoint pair, `(π♯, N*, N)` is a relative Rota-Baxter-dual-Nijenhuis
/// structure. Both conclusions are verified.
pub fn rbn_to_rmn(qf: &QuadraticForm, r: &Matrix, n: &Matrix) -> Result<RMatrix> {
    let a = &qf.algebra;
    require(is_rb_nijenhuis(a, r, n)?, "(R, N) is not a Rota-Baxter-Nijenhuis structure")?;
    require(is_skew_endomorphism(qf, r)?, "R is not a skew-symmetric endomorphism of B")?;
    require(form_compatibility(qf, n)?.passed, "N is not compatible with B")?;
    let sharp = r.mul(&qf.b_sharp);
    let pi = pi_from_sharp(&sharp);
    let rep = rmatrix_nijenhuis_report(a, &pi, n)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::ConsequenceViolated(format!(
            "(π, N) with π♯ = R∘B♯ is not r-matrix-Nijenhuis ({})",
            f.name
        )));
    }
    let coad = LieYRepPair::coadjoint(a.clone());
    if !is_rb_dual_nijenhuis(&coad, &sharp, &n.transpose(), n)? {
        return Err(Error::ConsequenceViolated(
            "(π♯, N*, N) is not a relative Rota-Baxter-dual-Nijenhuis structure".into(),
        ));
    }
    RMatrix::new(a, pi).map_err(|e| Error::ConsequenceViolated(e.to_string()))
}

/// From an r-matrix-Nijenhuis structure `(π, N)` with `N` compatible with
/// `B`, the operator `R = π♯∘(B♯)⁻¹`; `(R, N)` is verified to be a
/// Rota-Baxter-Nijenhuis structure and the conversion back is verified to
/// return `π`.
pub fn rmn_to_rbn(qf: &QuadraticForm, pi: &Matrix, n: &Matrix) -> Result<Matrix> {
    let a = &qf.algebra;
    require(is_rmatrix_nijenhuis(a, pi, n)?, "(π, N) is not an r-matrix-Nijenhuis structure")?;
    require(form_compatibility(qf, n)?.passed, "N is not compatible with B")?;
    let r = pi_sharp(pi).mul(&invert(&qf.b_sharp)?);
    let rep = rb_nijenhuis_report(a, &r, n)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::ConsequenceViolated(format!(
            "(π♯∘(B♯)⁻¹, N) is not Rota-Baxter-Nijenhuis ({})",
            f.name
        )));
    }
    let back = rbn_to_rmn(qf, &r, n)?;
    if back.pi() != pi {
        return Err(Error::ConsequenceViolated("round trip does not return π".into()));
    }
    Ok(r)
}

/// A nondegenerate invariant form located by search.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticInstance {
    pub name: String,
    pub form: QuadraticForm,
}

/// Symmetric matrices with entries from `values`, in lexicographic order of
/// their upper-triangular entries.
pub fn grid_symmetric(dim: usize, values: &[i64]) -> Vec<Matrix> {
    let slots: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let total = values.len().pow(slots.len() as u32);
    for mut code in 0..total {
        let mut m = Matrix::zeros(dim, dim);
        let mut digits = vec![0usize; slots.len()];
        for d in digits.iter_mut().rev() {
            *d = code % values.len();
            code /= values.len();
        }
        for ((i, j), dgt) in slots.iter().zip(&digits) {
            let v = crate::Rational::from_int(values[*dgt]);
            m.set(*i, *j, v.clone());
            m.set(*j, *i, v);
        }
        out.push(m);
    }
    out
}

/// All nondegenerate invariant forms with entries in `values` on `a`.
pub fn search_invariant_forms(a: &LieYamagutiAlgebra, values: &[i64]) -> Vec<Matrix> {
    use rayon::prelude::*;
    grid_symmetric(a.dim(), values)
        .into_par_iter()
        .filter(|b| is_invariant_form(a, b).unwrap_or(false))
        .collect()
}

/// Skew matrices with upper-triangular entries from `values`, in
/// lexicographic order of those entries.
pub fn grid_skew(dim: usize, values: &[i64]) -> Vec<Matrix> {
    grid_symmetric(dim, values)
        .into_iter()
        .filter(|m| (0..dim).all(|i| m.get(i, i).is_zero()))
        .map(|m| {
            let mut k = m.clone();
            for i in 0..dim {
                for j in 0..i {
                    k.set(i, j, -m.get(i, j).clone());
                }
            }
            k
        })
        .collect()
}

/// Rota-Baxter-Nijenhuis structures `(R, N)` on a quadratic algebra whose
/// `R` comes from a nonzero r-matrix with entries in `pi_values` and whose
/// `N` has entries in `n_values` and is compatible with the form.
pub fn search_quadratic_rbn(qf: &QuadraticForm, pi_values: &[i64], n_values: &[i64]) -> Vec<(Matrix, Matrix)> {
    use rayon::prelude::*;
    let a = &qf.algebra;
    let d = a.dim();
    let Ok(b) = invert(&qf.b_sharp) else { return Vec::new() };
    let rs: Vec<Matrix> = grid_skew(d, pi_values)
        .into_iter()
        .filter(|pi| !pi.is_zero() && is_r_matrix(a, pi).unwrap_or(false))
        .map(|pi| pi_sharp(&pi).mul(&b))
        .collect();
    let ns: Vec<Matrix> = crate::rota_baxter::grid_matrices(d, d, n_values)
        .into_par_iter()
        .filter(|n| form_compatibility(qf, n).is_ok_and(|c| c.passed) && a.is_nijenhuis(n).unwrap_or(false))
        .collect();
    rs.iter()
        .flat_map(|r| ns.iter().map(move |n| (r.clone(), n.clone())))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|(r, n)| is_rb_nijenhuis(a, r, n).unwrap_or(false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::fixtures::{a2, sl2, sl2_form, upper_nilpotent};

    fn int(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn skew3(a: i64, b: i64, c: i64) -> Matrix {
        Matrix::from_ints(&[&[0, a, b], &[-a, 0, c], &[-b, -c, 0]])
    }

    #[test]
    fn abelian_forms_are_invariant() {
        let a = LieYamagutiAlgebra::abelian(2);
        assert!(is_invariant_form(&a, &Matrix::identity(2)).unwrap());
        assert!(is_invariant_form(&a, &Matrix::from_ints(&[&[1, 0], &[0, -1]])).unwrap());
        assert!(!is_invariant_form(&a, &Matrix::zeros(2, 2)).unwrap());
        assert_eq!(
            is_invariant_form(&a, &Matrix::from_ints(&[&[0, 1], &[0, 0]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn sl2_form_transports_coadjoint_to_adjoint() {
        let a = sl2(&int(1));
        let qf = QuadraticForm::new(&a, sl2_form()).unwrap();
        assert!(invariance_transport(&qf, TransportSide::All).unwrap().all_passed());
        let mut bad = qf.b_sharp().clone();
        bad.set(0, 0, int(3));
        let r = transport_report(&a, &bad).unwrap();
        assert!(!r.passed("transport-ad"));
    }

    #[test]
    fn r_matrix_basics() {
        let a = a2();
        assert!(is_r_matrix(&a, &Matrix::zeros(2, 2)).unwrap());
        assert_eq!(is_r_matrix(&a, &Matrix::identity(2)), Err(Error::NotSkew));
        let ab = LieYamagutiAlgebra::abelian(3);
        assert!(is_r_matrix(&ab, &skew3(1, -2, 3)).unwrap());
    }

    #[test]
    fn skew_endomorphisms_of_identity_form() {
        let a = LieYamagutiAlgebra::abelian(2);
        let qf = QuadraticForm::new(&a, Matrix::identity(2)).unwrap();
        assert!(is_skew_endomorphism(&qf, &Matrix::zeros(2, 2)).unwrap());
        assert!(is_skew_endomorphism(&qf, &Matrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap());
        assert!(!is_skew_endomorphism(&qf, &Matrix::from_ints(&[&[1, 0], &[0, 1]])).unwrap());
    }

    #[test]
    fn two_dimensional_rota_baxter_nijenhuis() {
        let a = a2();
        let r = upper_nilpotent(int(1));
        assert!(is_rb_nijenhuis(&a, &r, &upper_nilpotent(int(2))).unwrap());
        assert!(is_rb_nijenhuis(&a, &Matrix::zeros(2, 2), &Matrix::zeros(2, 2)).unwrap());
        let diag = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
        let rep = rb_nijenhuis_report(&a, &r, &diag).unwrap();
        assert!(!rep.passed("ON1"));
    }

    #[test]
    fn nijenhuis_operator_with_its_dual_on_coadjoint() {
        let a = a2();
        let coad = LieYRepPair::coadjoint(a.clone());
        let n = upper_nilpotent(int(2));
        assert!(is_dual_nijenhuis(&coad, &n, &n.transpose()).unwrap());
        assert!(is_dual_nijenhuis(&coad, &Matrix::zeros(2, 2), &Matrix::zeros(2, 2)).unwrap());
    }

    #[test]
    fn left_factored_ternary_form_differs_from_definition() {
        let a = sl2(&int(1));
        let coad = LieYRepPair::coadjoint(a);
        let n = Matrix::from_ints(&[&[-1, 0, 0], &[0, -1, -1], &[0, 0, -1]]);
        assert!(is_dual_nijenhuis(&coad, &n, &n.transpose()).unwrap());
        assert!(!left_factored_dual_mu_report(&coad, &n, &n.transpose()).unwrap().passed);
    }

    #[test]
    fn sl2_conversion_round_trip() {
        let a = sl2(&int(1));
        let qf = QuadraticForm::new(&a, sl2_form()).unwrap();
        let pi = skew3(-2, 0, 0);
        let n = Matrix::from_ints(&[&[-1, 0, 0], &[0, -1, -1], &[0, 0, -1]]);
        let r = rmn_to_rbn(&qf, &pi, &n).unwrap();
        assert_eq!(r, pi_sharp(&pi).mul(qf.b()));
        let back = rbn_to_rmn(&qf, &r, &n).unwrap();
        assert_eq!(back.pi(), &pi);
    }

    #[test]
    fn conversion_rejects_incompatible_n() {
        let a = LieYamagutiAlgebra::abelian(2);
        let qf = QuadraticForm::new(&a, Matrix::identity(2)).unwrap();
        let r = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let n = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        assert!(matches!(rbn_to_rmn(&qf, &r, &n), Err(Error::PreconditionFailed(_))));
    }
}
