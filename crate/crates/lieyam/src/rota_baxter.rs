//! Relative Rota-Baxter operators `T: V → g`, the sub-adjacent algebra on
//! `V`, pre-Lie-Yamaguti products, deformed brackets on `V`, relative
//! Rota-Baxter-Nijenhuis structures `(T, S, N)` and compatible pairs of
//! operators.

use rayon::prelude::*;

use crate::algebra::LieYamagutiAlgebra;
use crate::deform::{hat_d_closed_form, nijenhuis_structure_report, NijenhuisStructure};
use crate::error::{Error, Result};
use crate::exact::{invert, vec_add, vec_sub, Matrix, Rational, Tensor};
use crate::rep::{bilinear_combination, linear_combination, LieYRepPair};
use crate::report::{check_identity, CheckReport, CheckResult};

type MatrixTable = Vec<Vec<Matrix>>;

fn check_t(pair: &LieYRepPair, t: &Matrix) -> Result<()> {
    if t.rows() != pair.dim_g() || t.cols() != pair.dim_v() {
        return Err(Error::DimMismatch(format!(
            "T is {}x{}, expected {}x{} (V → g)",
            t.rows(),
            t.cols(),
            pair.dim_g(),
            pair.dim_v()
        )));
    }
    Ok(())
}

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

/// Brackets on `V` induced through `T` by representation data `(ρ, μ, D)`:
/// `[u,v] = ρ(Tu)v − ρ(Tv)u` and
/// `⟪u,v,w⟫ = D(Tu,Tv)w + μ(Tv,Tw)u − μ(Tu,Tw)v`.
fn induced_brackets(rho: &[Matrix], mu: &MatrixTable, dd: &MatrixTable, t: &Matrix) -> (Tensor, Tensor) {
    let m = t.cols();
    let tc: Vec<Vec<Rational>> = (0..m).map(|u| t.column(u)).collect();
    let rho_t: Vec<Matrix> = tc.iter().map(|x| linear_combination(rho, x)).collect();
    let mu_t: MatrixTable = tc
        .iter()
        .map(|x| tc.iter().map(|y| bilinear_combination(mu, x, y)).collect())
        .collect();
    let d_t: MatrixTable = tc
        .iter()
        .map(|x| tc.iter().map(|y| bilinear_combination(dd, x, y)).collect())
        .collect();
    let mut bin = Tensor::zeros(&[m, m, m]);
    let mut ter = Tensor::zeros(&[m, m, m, m]);
    for u in 0..m {
        for v in 0..m {
            let val = vec_sub(&rho_t[u].column(v), &rho_t[v].column(u));
            bin.fiber_mut(&[u, v]).clone_from_slice(&val);
            for w in 0..m {
                let val = vec_sub(
                    &vec_add(&d_t[u][v].column(w), &mu_t[v][w].column(u)),
                    &mu_t[u][w].column(v),
                );
                ter.fiber_mut(&[u, v, w]).clone_from_slice(&val);
            }
        }
    }
    (bin, ter)
}

fn as_algebra(m: usize, (bin, ter): (Tensor, Tensor)) -> LieYamagutiAlgebra {
    LieYamagutiAlgebra::new(m, bin, ter).expect("induced brackets are antisymmetric by construction")
}

fn derived_table(pair: &LieYRepPair) -> MatrixTable {
    let dd = pair.derived_d();
    let d = pair.dim_g();
    (0..d)
        .map(|i| (0..d).map(|j| dd.at(i, j).clone()).collect())
        .collect()
}

/// The brackets `([,]^T, ⟪⟫^T)` on `V` for an arbitrary linear map `T`,
/// without any validation of `T`.
pub fn induced_algebra(pair: &LieYRepPair, t: &Matrix) -> Result<LieYamagutiAlgebra> {
    check_t(pair, t)?;
    Ok(as_algebra(
        pair.dim_v(),
        induced_brackets(pair.rep.rho(), &pair.rep.mu().to_vec(), &derived_table(pair), t),
    ))
}

/// The two defining identities of a relative Rota-Baxter operator, checked
/// on basis tuples of `V`: `rb-binary`: `[Tu,Tv] = T[u,v]^T` and
/// `rb-ternary`: `⟪Tu,Tv,Tw⟫ = T⟪u,v,w⟫^T`.
pub fn relative_rb_report(pair: &LieYRepPair, t: &Matrix) -> Result<CheckReport> {
    let vt = induced_algebra(pair, t)?;
    let a = &pair.algebra;
    let m = pair.dim_v();
    let tc: Vec<Vec<Rational>> = (0..m).map(|u| t.column(u)).collect();
    let mut r = CheckReport::new();
    r.push(check_identity("rb-binary", &[m, m], |ix| {
        vec_sub(&a.br(&tc[ix[0]], &tc[ix[1]]), &t.mul_vec(vt.bracket_basis(ix[0], ix[1])))
    }));
    r.push(check_identity("rb-ternary", &[m, m, m], |ix| {
        vec_sub(
            &a.tr(&tc[ix[0]], &tc[ix[1]], &tc[ix[2]]),
            &t.mul_vec(vt.triple_basis(ix[0], ix[1], ix[2])),
        )
    }));
    Ok(r)
}

/// `true` iff `T` is a relative Rota-Baxter operator on the pair.
pub fn is_relative_rb(pair: &LieYRepPair, t: &Matrix) -> Result<bool> {
    Ok(relative_rb_report(pair, t)?.all_passed())
}

/// A relative Rota-Baxter operator validated against its pair.
#[derive(Clone, Debug, PartialEq)]
pub struct RelativeRBOperator {
    pair: LieYRepPair,
    t: Matrix,
}

impl RelativeRBOperator {
    pub fn new(pair: &LieYRepPair, t: Matrix) -> Result<Self> {
        let r = relative_rb_report(pair, &t)?;
        if let Some(f) = r.first_failure() {
            return Err(Error::PreconditionFailed(format!(
                "T is not a relative Rota-Baxter operator ({})",
                f.name
            )));
        }
        Ok(RelativeRBOperator { pair: pair.clone(), t })
    }

    pub fn pair(&self) -> &LieYRepPair {
        &self.pair
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    /// The sub-adjacent algebra `V^T`; its axioms and the homomorphism
    /// property of `T: V^T → g` are asserted.
    pub fn subadjacent(&self) -> Result<LieYamagutiAlgebra> {
        let vt = self.subadjacent_unchecked();
        if let Some(f) = vt.check_axioms().first_failure() {
            return Err(Error::ConsequenceViolated(format!("sub-adjacent algebra fails {}", f.name)));
        }
        if !vt.is_homomorphism(&self.t, &self.pair.algebra)? {
            return Err(Error::ConsequenceViolated(
                "T is not a homomorphism from the sub-adjacent algebra".into(),
            ));
        }
        Ok(vt)
    }

    pub fn subadjacent_unchecked(&self) -> LieYamagutiAlgebra {
        induced_algebra(&self.pair, &self.t).expect("validated dimensions")
    }

    /// `u *ᵀ v = ρ(Tu)v` (shape `[m,m,m]`) and `{u,v,w}ᵀ = μ(Tv,Tw)u`
    /// (shape `[m,m,m,m]`).
    pub fn pre_ly_products(&self) -> (Tensor, Tensor) {
        let m = self.pair.dim_v();
        let rep = &self.pair.rep;
        let tc: Vec<Vec<Rational>> = (0..m).map(|u| self.t.column(u)).collect();
        let mut star = Tensor::zeros(&[m, m, m]);
        let mut brace = Tensor::zeros(&[m, m, m, m]);
        for u in 0..m {
            let rt = rep.rho_of(&tc[u]);
            for v in 0..m {
                star.fiber_mut(&[u, v]).clone_from_slice(&rt.column(v));
                for w in 0..m {
                    let val = rep.mu_of(&tc[v], &tc[w]).column(u);
                    brace.fiber_mut(&[u, v, w]).clone_from_slice(&val);
                }
            }
        }
        (star, brace)
    }

    /// Consistency of the pre-Lie-Yamaguti products with `V^T`:
    /// `[u,v]^T = u*v − v*u` and `⟪u,v,w⟫^T = D(Tu,Tv)w + {u,v,w} − {v,u,w}`.
    pub fn pre_ly_report(&self) -> CheckReport {
        let (star, brace) = self.pre_ly_products();
        let vt = self.subadjacent_unchecked();
        let m = self.pair.dim_v();
        let dd = self.pair.derived_d();
        let tc: Vec<Vec<Rational>> = (0..m).map(|u| self.t.column(u)).collect();
        let mut r = CheckReport::new();
        r.push(check_identity("star-commutator", &[m, m], |ix| {
            let (u, v) = (ix[0], ix[1]);
            vec_sub(
                vt.bracket_basis(u, v),
                &vec_sub(star.fiber(&[u, v]), star.fiber(&[v, u])),
            )
        }));
        r.push(check_identity("brace-ternary", &[m, m, m], |ix| {
            let (u, v, w) = (ix[0], ix[1], ix[2]);
            let expect = vec_add(
                &dd.of(&tc[u], &tc[v]).column(w),
                &vec_sub(brace.fiber(&[u, v, w]), brace.fiber(&[v, u, w])),
            );
            vec_sub(vt.triple_basis(u, v, w), &expect)
        }));
        r
    }
}

/// `([,]^T_S, ⟪⟫^T_S)`: the Nijenhuis-type deformation of `V^T` by `S`
/// (`[Su,v]^T + [u,Sv]^T − S[u,v]^T`, and the ternary analogue ending in
/// `+S²⟪u,v,w⟫^T`). No axioms are claimed.
pub fn s_deformed_brackets(pair: &LieYRepPair, t: &Matrix, s: &Matrix) -> Result<(Tensor, Tensor)> {
    let vt = induced_algebra(pair, t)?;
    check_square(s, pair.dim_v(), "S")?;
    vt.deformed_brackets(s)
}

/// `([u,v]^T_ρ̂, ⟪u,v,w⟫^T_μ̂)`: brackets induced through `T` by the hatted
/// data `(ρ̂, μ̂, D̂)` of a Nijenhuis structure.
pub fn hat_deformed_brackets(ns: &NijenhuisStructure, t: &Matrix) -> Result<(Tensor, Tensor)> {
    let pair = ns.pair();
    check_t(pair, t)?;
    let hat = ns.hat_rep_unchecked();
    let hat_d = hat_d_closed_form(pair, ns.n(), ns.s())?;
    Ok(induced_brackets(hat.rho(), &hat.mu().to_vec(), &hat_d, t))
}

fn tensor_report(name: &str, a: &Tensor, b: &Tensor) -> CheckResult {
    let shape = a.shape().to_vec();
    let k = shape.len() - 1;
    check_identity(name, &shape[..k], |ix| vec_sub(a.fiber(ix), b.fiber(ix)))
}

/// The conditions for `(T, S, N)` to be a relative Rota-Baxter-Nijenhuis
/// structure: `rb/…` (T relative Rota-Baxter), `nijenhuis-structure/…`,
/// `ON1`: `N∘T = T∘S`, `ON2`: `[u,v]^T_S = [u,v]^{N∘T}`, `ON3`: the same
/// for the ternary bracket.
pub fn rbn_report(pair: &LieYRepPair, t: &Matrix, s: &Matrix, n: &Matrix) -> Result<CheckReport> {
    check_t(pair, t)?;
    check_square(s, pair.dim_v(), "S")?;
    check_square(n, pair.dim_g(), "N")?;
    let mut r = CheckReport::new();
    r.extend_prefixed("rb/", relative_rb_report(pair, t)?);
    r.extend_prefixed("nijenhuis-structure/", nijenhuis_structure_report(pair, n, s)?);
    let nt = n.mul(t);
    let ts = t.mul(s);
    r.push(check_identity("ON1", &[pair.dim_v()], |ix| {
        vec_sub(&nt.column(ix[0]), &ts.column(ix[0]))
    }));
    let (sb, st) = s_deformed_brackets(pair, t, s)?;
    let vnt = induced_algebra(pair, &nt)?;
    r.push(tensor_report("ON2", &sb, vnt.binary()));
    r.push(tensor_report("ON3", &st, vnt.ternary()));
    Ok(r)
}

/// `true` iff `(T, S, N)` is a relative Rota-Baxter-Nijenhuis structure.
pub fn is_rbn(pair: &LieYRepPair, t: &Matrix, s: &Matrix, n: &Matrix) -> Result<bool> {
    let r = rbn_report(pair, t, s, n)?;
    let defining = r
        .checks
        .iter()
        .filter(|c| c.name != "nijenhuis-structure/structure-D")
        .all(|c| c.passed);
    if defining {
        // The D-condition is a consequence of the others; surface an
        // inconsistency instead of hiding it.
        crate::deform::is_nijenhuis_structure(pair, n, s)?;
    }
    Ok(defining)
}

/// A validated relative Rota-Baxter-Nijenhuis structure.
#[derive(Clone, Debug, PartialEq)]
pub struct RBNTriple {
    t: RelativeRBOperator,
    ns: NijenhuisStructure,
}

impl RBNTriple {
    pub fn new(pair: &LieYRepPair, t: Matrix, s: Matrix, n: Matrix) -> Result<Self> {
        if !is_rbn(pair, &t, &s, &n)? {
            let r = rbn_report(pair, &t, &s, &n)?;
            let f = r.first_failure().expect("some condition fails");
            return Err(Error::PreconditionFailed(format!(
                "not a relative Rota-Baxter-Nijenhuis structure ({})",
                f.name
            )));
        }
        Ok(RBNTriple {
            t: RelativeRBOperator::new(pair, t)?,
            ns: NijenhuisStructure::new(pair, n, s)?,
        })
    }

    pub fn pair(&self) -> &LieYRepPair {
        self.t.pair()
    }

    pub fn t(&self) -> &Matrix {
        self.t.matrix()
    }

    pub fn s(&self) -> &Matrix {
        self.ns.s()
    }

    pub fn n(&self) -> &Matrix {
        self.ns.n()
    }

    pub fn operator(&self) -> &RelativeRBOperator {
        &self.t
    }

    pub fn nijenhuis_structure(&self) -> &NijenhuisStructure {
        &self.ns
    }

    /// Consequences of the structure, each checked on basis tuples:
    /// `S-nijenhuis-on-subadjacent`, `T-rb-on-hat-pair/…`, `NT-rb/…`,
    /// `s-equals-hat-binary`/`-ternary`, `deformed-V-axioms/…`,
    /// `subadjacent-axioms/…`, and the homomorphisms of the square
    /// `T: V^T_S → g_N`, `S: V^T_S → V^T`, `N: g_N → g`, `N∘T: V^T_S → g`,
    /// `T: V^T → g`.
    pub fn consequences_report(&self) -> Result<CheckReport> {
        let pair = self.pair();
        let (t, s, n) = (self.t(), self.s(), self.n());
        let vt = self.t.subadjacent_unchecked();
        let mut r = CheckReport::new();
        r.push(CheckResult::from_bool(
            "S-nijenhuis-on-subadjacent",
            vt.is_nijenhuis(s)?,
        ));
        let hat_pair = self.ns.hat_pair_unchecked();
        r.extend_prefixed("T-rb-on-hat-pair/", relative_rb_report(&hat_pair, t)?);
        let nt = n.mul(t);
        r.extend_prefixed("NT-rb/", relative_rb_report(pair, &nt)?);
        let (sb, st) = s_deformed_brackets(pair, t, s)?;
        let (hb, ht) = hat_deformed_brackets(&self.ns, t)?;
        r.push(tensor_report("s-equals-hat-binary", &sb, &hb));
        r.push(tensor_report("s-equals-hat-ternary", &st, &ht));
        let vts = LieYamagutiAlgebra::new(pair.dim_v(), sb, st)?;
        r.extend_prefixed("deformed-V-axioms/", vts.check_axioms());
        r.extend_prefixed("subadjacent-axioms/", vt.check_axioms());
        let gn = pair.algebra.deformed_algebra(n)?;
        r.extend_prefixed("hom-T-deformed/", vts.homomorphism_report(t, &gn)?);
        r.extend_prefixed("hom-S/", vts.homomorphism_report(s, &vt)?);
        r.extend_prefixed("hom-N/", gn.homomorphism_report(n, &pair.algebra)?);
        r.extend_prefixed("hom-NT/", vts.homomorphism_report(&nt, &pair.algebra)?);
        r.extend_prefixed("hom-T/", vt.homomorphism_report(t, &pair.algebra)?);
        Ok(r)
    }

    /// The consequences report, failing with `ConsequenceViolated` if any
    /// conclusion does not hold.
    pub fn consequences(&self) -> Result<CheckReport> {
        let r = self.consequences_report()?;
        if let Some(f) = r.first_failure() {
            return Err(Error::ConsequenceViolated(f.name.clone()));
        }
        Ok(r)
    }
}

/// Free-function form of [`RBNTriple::consequences`].
pub fn rbn_consequences(tr: &RBNTriple) -> Result<CheckReport> {
    tr.consequences()
}

/// `D(Tu,Tv)(Sw) + μ(Tv,Tw)(Su) − μ(Tu,Tw)(Sv) = S⟪u,v,w⟫^T` on basis
/// triples of `V`.
pub fn strong_condition_report(pair: &LieYRepPair, t: &Matrix, s: &Matrix) -> Result<CheckResult> {
    let vt = induced_algebra(pair, t)?;
    check_square(s, pair.dim_v(), "S")?;
    let m = pair.dim_v();
    let dd = pair.derived_d();
    let rep = &pair.rep;
    let tc: Vec<Vec<Rational>> = (0..m).map(|u| t.column(u)).collect();
    Ok(check_identity("strong", &[m, m, m], |ix| {
        let (u, v, w) = (ix[0], ix[1], ix[2]);
        let lhs = vec_sub(
            &vec_add(
                &dd.of(&tc[u], &tc[v]).mul_vec(&s.column(w)),
                &rep.mu_of(&tc[v], &tc[w]).mul_vec(&s.column(u)),
            ),
            &rep.mu_of(&tc[u], &tc[w]).mul_vec(&s.column(v)),
        );
        vec_sub(&lhs, &s.mul_vec(vt.triple_basis(u, v, w)))
    }))
}

pub fn strong_condition(pair: &LieYRepPair, t: &Matrix, s: &Matrix) -> Result<bool> {
    Ok(strong_condition_report(pair, t, s)?.passed)
}

/// The mixed identities characterising compatibility of two relative
/// Rota-Baxter operators: `compat-binary` and `compat-ternary-12`,
/// `compat-ternary-21` (the `(i,j) = (1,2)` and `(2,1)` cases).
pub fn compatibility_identities(pair: &LieYRepPair, t1: &Matrix, t2: &Matrix) -> Result<CheckReport> {
    check_t(pair, t1)?;
    check_t(pair, t2)?;
    let m = pair.dim_v();
    let a = &pair.algebra;
    let rep = &pair.rep;
    let dd = pair.derived_d();
    let c1: Vec<Vec<Rational>> = (0..m).map(|u| t1.column(u)).collect();
    let c2: Vec<Vec<Rational>> = (0..m).map(|u| t2.column(u)).collect();
    let mut r = CheckReport::new();
    // ρ-part of [u,v]^{T}: ρ(Tu)v − ρ(Tv)u.
    let rb = |c: &[Vec<Rational>], u: usize, v: usize| {
        vec_sub(&rep.rho_of(&c[u]).column(v), &rep.rho_of(&c[v]).column(u))
    };
    r.push(check_identity("compat-binary", &[m, m], |ix| {
        let (u, v) = (ix[0], ix[1]);
        let lhs = vec_add(&a.br(&c1[u], &c2[v]), &a.br(&c2[u], &c1[v]));
        let rhs = vec_add(&t1.mul_vec(&rb(&c2, u, v)), &t2.mul_vec(&rb(&c1, u, v)));
        vec_sub(&lhs, &rhs)
    }));
    // D(Xu,Yv)w + μ(Xv,Yw)u − μ(Xu,Yw)v.
    let tern = |x: &[Vec<Rational>], y: &[Vec<Rational>], u: usize, v: usize, w: usize| {
        vec_sub(
            &vec_add(
                &dd.of(&x[u], &y[v]).column(w),
                &rep.mu_of(&x[v], &y[w]).column(u),
            ),
            &rep.mu_of(&x[u], &y[w]).column(v),
        )
    };
    let mixed = |ti: &Matrix, tj: &Matrix, ci: &[Vec<Rational>], cj: &[Vec<Rational>], ix: &[usize]| {
        let (u, v, w) = (ix[0], ix[1], ix[2]);
        let lhs = vec_add(
            &vec_add(&a.tr(&ci[u], &ci[v], &cj[w]), &a.tr(&ci[u], &cj[v], &ci[w])),
            &a.tr(&cj[u], &ci[v], &ci[w]),
        );
        let inner_i = vec_add(&tern(ci, cj, u, v, w), &tern(cj, ci, u, v, w));
        let rhs = vec_add(&ti.mul_vec(&inner_i), &tj.mul_vec(&tern(ci, ci, u, v, w)));
        vec_sub(&lhs, &rhs)
    };
    r.push(check_identity("compat-ternary-12", &[m, m, m], |ix| {
        mixed(t1, t2, &c1, &c2, ix)
    }));
    r.push(check_identity("compat-ternary-21", &[m, m, m], |ix| {
        mixed(t2, t1, &c2, &c1, ix)
    }));
    Ok(r)
}

/// Sample points `(k₁, k₂)` used to cross-check compatibility.
pub const COMPATIBILITY_SAMPLES: [(i64, i64); 3] = [(1, 1), (1, -1), (2, 3)];

/// `true` iff the two relative Rota-Baxter operators are compatible. The
/// verdict of the mixed identities is cross-checked against
/// `k₁T₁ + k₂T₂` at [`COMPATIBILITY_SAMPLES`]; disagreement is an error.
pub fn is_compatible_pair(pair: &LieYRepPair, t1: &Matrix, t2: &Matrix) -> Result<bool> {
    for (name, t) in [("T1", t1), ("T2", t2)] {
        if !is_relative_rb(pair, t)? {
            return Err(Error::PreconditionFailed(format!(
                "{name} is not a relative Rota-Baxter operator"
            )));
        }
    }
    let by_identities = compatibility_identities(pair, t1, t2)?.all_passed();
    let mut by_sampling = true;
    for (k1, k2) in COMPATIBILITY_SAMPLES {
        let comb = t1
            .scale(&Rational::from_int(k1))
            .add(&t2.scale(&Rational::from_int(k2)));
        by_sampling &= is_relative_rb(pair, &comb)?;
    }
    if by_identities != by_sampling {
        return Err(Error::IncompatibleCrossCheck(format!(
            "mixed identities say {by_identities}, sampled combinations say {by_sampling}"
        )));
    }
    Ok(by_identities)
}

/// `N = T₁∘T₂⁻¹` for compatible operators with `T₂` invertible; `N` is
/// asserted to be a Nijenhuis operator.
pub fn nijenhuis_from_pair(pair: &LieYRepPair, t1: &Matrix, t2: &Matrix) -> Result<Matrix> {
    if !is_compatible_pair(pair, t1, t2)? {
        return Err(Error::NotCompatible);
    }
    let n = t1.mul(&invert(t2)?);
    if !pair.algebra.is_nijenhuis(&n)? {
        return Err(Error::ConsequenceViolated(
            "T₁∘T₂⁻¹ is not a Nijenhuis operator".into(),
        ));
    }
    Ok(n)
}

/// All `rows × cols` matrices with entries in `values`, in lexicographic
/// order of their row-major entries.
pub fn grid_matrices(rows: usize, cols: usize, values: &[i64]) -> Vec<Matrix> {
    let cells = rows * cols;
    let total = values.len().pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut data = vec![Rational::zero(); cells];
            for slot in data.iter_mut().rev() {
                *slot = Rational::from_int(values[code % values.len()]);
                code /= values.len();
            }
            Matrix::from_vec(rows, cols, data).expect("sized")
        })
        .collect()
}

/// Default entry grid of the searches.
pub const GRID: [i64; 5] = [-2, -1, 0, 1, 2];

/// Relative Rota-Baxter operators with entries in `values`, in grid order.
pub fn search_relative_rb(pair: &LieYRepPair, values: &[i64]) -> Vec<Matrix> {
    grid_matrices(pair.dim_g(), pair.dim_v(), values)
        .into_par_iter()
        .filter(|t| is_relative_rb(pair, t).unwrap_or(false))
        .collect()
}

/// Nijenhuis operators on the algebra with entries in `values`.
pub fn search_nijenhuis(a: &LieYamagutiAlgebra, values: &[i64]) -> Vec<Matrix> {
    grid_matrices(a.dim(), a.dim(), values)
        .into_par_iter()
        .filter(|n| a.is_nijenhuis(n).unwrap_or(false))
        .collect()
}

/// Compatible pairs `(T₁, T₂)` with `T₂` invertible and `T₁` not a scalar
/// multiple of `T₂`, among relative Rota-Baxter operators with entries in
/// `values`.
pub fn search_compatible_invertible(pair: &LieYRepPair, values: &[i64]) -> Vec<(Matrix, Matrix)> {
    let ops = search_relative_rb(pair, values);
    let invertible: Vec<&Matrix> = ops.iter().filter(|t| invert(t).is_ok()).collect();
    let mut out: Vec<(Matrix, Matrix)> = invertible
        .par_iter()
        .flat_map_iter(|t2| {
            let t2inv = invert(t2).expect("filtered");
            ops.iter()
                .filter(move |t1| {
                    let n = t1.mul(&t2inv);
                    let scalar = n.is_square() && n == Matrix::scalar(n.rows(), n.get(0, 0));
                    !scalar
                        && compatibility_identities(pair, t1, t2)
                            .map(|r| r.all_passed())
                            .unwrap_or(false)
                })
                .map(move |t1| (t1.clone(), (*t2).clone()))
        })
        .collect();
    out.sort_by_key(|(a, b)| (format!("{:?}", b.data()), format!("{:?}", a.data())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::fixtures::{a2, upper_nilpotent};

    #[test]
    fn example_family_is_rbn() {
        let p = LieYRepPair::adjoint(a2());
        let t = upper_nilpotent(q(1, 1));
        let n = upper_nilpotent(q(2, 1));
        assert!(is_relative_rb(&p, &t).unwrap());
        let r = rbn_report(&p, &t, &n, &n).unwrap();
        assert!(r.all_passed(), "{:?}", r.failed_names());
        let tr = RBNTriple::new(&p, t, n.clone(), n).unwrap();
        let c = tr.consequences_report().unwrap();
        assert!(c.all_passed(), "{:?}", c.failed_names());
        assert!(tr.operator().pre_ly_report().all_passed());
    }

    #[test]
    fn identity_is_not_rb_on_a2() {
        let p = LieYRepPair::adjoint(a2());
        assert!(!is_relative_rb(&p, &Matrix::identity(2)).unwrap());
        assert!(is_relative_rb(&p, &Matrix::zeros(2, 2)).unwrap());
    }

    #[test]
    fn diagonal_n_breaks_on1() {
        let p = LieYRepPair::adjoint(a2());
        let t = upper_nilpotent(q(1, 1));
        let n = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
        let r = rbn_report(&p, &t, &n, &n).unwrap();
        assert!(!r.passed("ON1"));
    }

    #[test]
    fn grid_order_and_size() {
        let g = grid_matrices(1, 2, &[0, 1]);
        assert_eq!(g.len(), 4);
        assert_eq!(g[1].data(), &[q(0, 1), q(1, 1)]);
    }
}
