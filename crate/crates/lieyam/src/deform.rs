//! Linear deformations of a pair (algebra, representation), their degree-2
//! cocycles, equivalence of deformations, Nijenhuis structures `(N, S)`, the
//! trivial deformation they generate, the operator `N ⊕ S` on the semidirect
//! product and the hatted representation `(ρ̂, μ̂)`.
//!
//! A linear deformation is given by
//! `[x,y]_t = [x,y] + tφ(x,y)`,
//! `⟪x,y,z⟫_t = ⟪x,y,z⟫ + tφ₁(x,y,z) + t²φ₂(x,y,z)`,
//! `ρ_t(x) = ρ(x) + tϱ(x)` and `μ_t(x,y) = μ(x,y) + tϖ₁(x,y) + t²ϖ₂(x,y)`;
//! "for all t" is decided by checking every identity with polynomial
//! scalars in `t`.

use crate::algebra::LieYamagutiAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly, Rational, Scalar, Tensor};
use crate::pair::PairCochain;
use crate::rep::{LieYRepPair, Representation};
use crate::report::{check_identity, CheckReport};
use crate::wedge::WedgeBasis;

type MatrixTable = Vec<Vec<Matrix>>;

/// The maps `(φ, φ₁, φ₂; ϱ, ϖ₁, ϖ₂)` generating a linear deformation.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationData {
    /// `φ(eᵢ,eⱼ)`, shape `[d,d,d]`, antisymmetric.
    pub phi: Tensor,
    /// `φ₁(eᵢ,eⱼ,eₖ)`, shape `[d,d,d,d]`, antisymmetric in `(i,j)`.
    pub phi1: Tensor,
    /// `φ₂(eᵢ,eⱼ,eₖ)`, shape `[d,d,d,d]`, antisymmetric in `(i,j)`.
    pub phi2: Tensor,
    /// `ϱ(eᵢ) ∈ gl(V)`.
    pub varrho: Vec<Matrix>,
    /// `ϖ₁(eᵢ,eⱼ) ∈ gl(V)`.
    pub varpi1: MatrixTable,
    /// `ϖ₂(eᵢ,eⱼ) ∈ gl(V)`.
    pub varpi2: MatrixTable,
}

fn matrix_table(d: usize, m: usize) -> MatrixTable {
    vec![vec![Matrix::zeros(m, m); d]; d]
}

fn combination(ms: &[Matrix], x: &[Rational], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (c, a) in x.iter().zip(ms) {
        if !c.is_zero() {
            out.add_scaled(c, a);
        }
    }
    out
}

impl DeformationData {
    /// The zero deformation (the undeformed pair).
    pub fn zeros(d: usize, m: usize) -> Self {
        DeformationData {
            phi: Tensor::zeros(&[d, d, d]),
            phi1: Tensor::zeros(&[d, d, d, d]),
            phi2: Tensor::zeros(&[d, d, d, d]),
            varrho: vec![Matrix::zeros(m, m); d],
            varpi1: matrix_table(d, m),
            varpi2: matrix_table(d, m),
        }
    }

    /// Validates shapes and antisymmetry.
    pub fn new(
        phi: Tensor,
        phi1: Tensor,
        phi2: Tensor,
        varrho: Vec<Matrix>,
        varpi1: MatrixTable,
        varpi2: MatrixTable,
    ) -> Result<Self> {
        let d = varrho.len();
        let m = varrho.first().map_or(0, |r| r.rows());
        LieYamagutiAlgebra::new(d, phi.clone(), phi1.clone())?;
        LieYamagutiAlgebra::new(d, Tensor::zeros(&[d, d, d]), phi2.clone())?;
        let square = |a: &Matrix| a.rows() == m && a.cols() == m;
        let table_ok = |t: &MatrixTable| t.len() == d && t.iter().all(|r| r.len() == d && r.iter().all(square));
        if !varrho.iter().all(square) || !table_ok(&varpi1) || !table_ok(&varpi2) {
            return Err(Error::DimMismatch("deformation maps on V must be square".into()));
        }
        Ok(DeformationData {
            phi,
            phi1,
            phi2,
            varrho,
            varpi1,
            varpi2,
        })
    }

    pub fn dim_g(&self) -> usize {
        self.varrho.len()
    }

    pub fn dim_v(&self) -> usize {
        self.varrho.first().map_or(0, |r| r.rows())
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero()
            && self.phi1.is_zero()
            && self.phi2.is_zero()
            && self.varrho.iter().all(Matrix::is_zero)
            && self.varpi1.iter().flatten().all(Matrix::is_zero)
            && self.varpi2.iter().flatten().all(Matrix::is_zero)
    }

    fn check_dims(&self, pair: &LieYRepPair) -> Result<()> {
        if self.dim_g() != pair.dim_g() || (self.dim_g() > 0 && self.dim_v() != pair.dim_v()) {
            return Err(Error::DimMismatch(format!(
                "deformation data for ({}, {}) on a pair of dimensions ({}, {})",
                self.dim_g(),
                self.dim_v(),
                pair.dim_g(),
                pair.dim_v()
            )));
        }
        Ok(())
    }

    /// `ϱ(x)` for a coordinate vector `x`.
    pub fn varrho_of(&self, x: &[Rational]) -> Matrix {
        combination(&self.varrho, x, self.dim_v())
    }

    /// `ϖ₁(x,y)`.
    pub fn varpi1_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        bilinear(&self.varpi1, x, y, self.dim_v())
    }

    /// `𝒟₁(x,y) = ϖ₁(y,x) − ϖ₁(x,y) + [ρ(x),ϱ(y)] + [ϱ(x),ρ(y)] − ϱ([x,y])
    /// − ρ(φ(x,y))` on basis pairs: the coefficient of `t` in the derived map
    /// of the deformed pair, where `ρ_t` is evaluated on the deformed bracket
    /// `[x,y]_t`.
    pub fn d1(&self, pair: &LieYRepPair) -> Result<MatrixTable> {
        self.check_dims(pair)?;
        let d = self.dim_g();
        let rho = pair.rep.rho();
        Ok((0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let br = pair.algebra.bracket_basis(i, j);
                        self.varpi1[j][i]
                            .sub(&self.varpi1[i][j])
                            .add(&rho[i].commutator(&self.varrho[j]))
                            .add(&self.varrho[i].commutator(&rho[j]))
                            .sub(&self.varrho_of(br))
                            .sub(&pair.rep.rho_of(self.phi.fiber(&[i, j])))
                    })
                    .collect()
            })
            .collect())
    }

    /// `𝒟₂(x,y) = ϖ₂(y,x) − ϖ₂(x,y) + [ϱ(x),ϱ(y)] − ϱ(φ(x,y))`: the
    /// coefficient of `t²` in the derived map of the deformed pair.
    pub fn d2(&self) -> MatrixTable {
        let d = self.dim_g();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        self.varpi2[j][i]
                            .sub(&self.varpi2[i][j])
                            .add(&self.varrho[i].commutator(&self.varrho[j]))
                            .sub(&self.varrho_of(self.phi.fiber(&[i, j])))
                    })
                    .collect()
            })
            .collect()
    }

    /// The deformed pair over `ℚ[t]`.
    pub fn deformed_pair(&self, pair: &LieYRepPair) -> Result<LieYRepPair<Poly>> {
        self.check_dims(pair)?;
        let t = Poly::t();
        let t2 = t.mul(&t);
        let lift = |x: &Rational| Poly::constant(x.clone());
        let d = self.dim_g();
        let binary = pair
            .algebra
            .binary()
            .map(lift)
            .add(&self.phi.map(lift).scale(&t));
        let ternary = pair
            .algebra
            .ternary()
            .map(lift)
            .add(&self.phi1.map(lift).scale(&t))
            .add(&self.phi2.map(lift).scale(&t2));
        let algebra = LieYamagutiAlgebra::new(d, binary, ternary)?;
        let rho = (0..d)
            .map(|i| pair.rep.rho()[i].to_poly().add(&self.varrho[i].to_poly().scale(&t)))
            .collect();
        let mu = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        pair.rep.mu()[i][j]
                            .to_poly()
                            .add(&self.varpi1[i][j].to_poly().scale(&t))
                            .add(&self.varpi2[i][j].to_poly().scale(&t2))
                    })
                    .collect()
            })
            .collect();
        let rep = Representation::new(d, pair.dim_v(), rho, mu)?;
        LieYRepPair::new(algebra, rep)
    }

    /// The pair `((g, φ, φ₂), (V; ϱ, ϖ₂))` formed by the top-order terms.
    pub fn top_order_pair(&self) -> Result<LieYRepPair> {
        let d = self.dim_g();
        let algebra = LieYamagutiAlgebra::new(d, self.phi.clone(), self.phi2.clone())?;
        let rep = Representation::new(d, self.dim_v(), self.varrho.clone(), self.varpi2.clone())?;
        LieYRepPair::new(algebra, rep)
    }
}

fn bilinear(ms: &MatrixTable, x: &[Rational], y: &[Rational], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out.add_scaled(&(xi * yj), &ms[i][j]);
            }
        }
    }
    out
}

/// Axioms and representation conditions of the deformed pair, checked with
/// polynomial scalars; a failing witness records the lowest offending power
/// of `t`. Also confirms that the derived map of the deformed pair is
/// `D + t𝒟₁ + t²𝒟₂`.
pub fn linear_deformation_report(pair: &LieYRepPair, d: &DeformationData) -> Result<CheckReport> {
    let dp = d.deformed_pair(pair)?;
    let mut report = dp.check();
    let d1 = d.d1(pair)?;
    let d2 = d.d2();
    let base = pair.derived_d();
    let dt = dp.derived_d();
    let t = Poly::t();
    let n = pair.dim_g();
    report.push(check_identity("derived-D-expansion", &[n, n], |ix| {
        let (i, j) = (ix[0], ix[1]);
        let expect = base
            .at(i, j)
            .to_poly()
            .add(&d1[i][j].to_poly().scale(&t))
            .add(&d2[i][j].to_poly().scale(&t.mul(&t)));
        dt.at(i, j).sub(&expect).into_data()
    }));
    Ok(report)
}

/// `true` iff the data generates a linear deformation of `pair`.
pub fn is_linear_deformation(pair: &LieYRepPair, d: &DeformationData) -> Result<bool> {
    Ok(linear_deformation_report(pair, d)?.all_passed())
}

/// Axioms of `(g, φ, φ₂)` and the representation conditions of `(V; ϱ, ϖ₂)`.
pub fn deformation_of_pair_report(d: &DeformationData) -> Result<CheckReport> {
    Ok(d.top_order_pair()?.check())
}

/// `true` iff `((g, φ, φ₂), (V; ϱ, ϖ₂))` is itself a valid pair.
pub fn is_deformation_of_pair(d: &DeformationData) -> Result<bool> {
    Ok(deformation_of_pair_report(d)?.all_passed())
}

/// The degree-2 pair cochain of a linear deformation:
/// `(φ, φ₁)` in the g-valued component, `ϱ` as `f₂(x,v) = ϱ(x)v`, `𝒟₁` as
/// `g₂(x∧y, v) = 𝒟₁(x,y)v`, and the mixed ternary slot
/// `g₃((x,v), z) = −ϖ₁(x,z)v`.
pub fn deformation_cocycle(pair: &LieYRepPair, d: &DeformationData) -> Result<PairCochain> {
    let (n, m) = (pair.dim_g(), pair.dim_v());
    let d1 = d.d1(pair)?;
    let wb = WedgeBasis::new(n);
    let mut out = PairCochain::zeros(n, m, 2);
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
    for (w, &(i, j)) in wb.pairs().iter().enumerate() {
        comp1_f.fiber_mut(&[w]).clone_from_slice(d.phi.fiber(&[i, j]));
        for k in 0..n {
            comp1_g.fiber_mut(&[w, k]).clone_from_slice(d.phi1.fiber(&[i, j, k]));
        }
        for v in 0..m {
            g2.fiber_mut(&[w, v]).clone_from_slice(&d1[i][j].column(v));
        }
    }
    for x in 0..n {
        for v in 0..m {
            f_mixed[0].fiber_mut(&[x, v]).clone_from_slice(&d.varrho[x].column(v));
            for z in 0..n {
                let col: Vec<Rational> = d.varpi1[x][z].column(v).iter().map(|c| -c).collect();
                g_mixed[0].fiber_mut(&[x, v, z]).clone_from_slice(&col);
            }
        }
    }
    Ok(out)
}

fn id_plus_t(a: &Matrix) -> Matrix<Poly> {
    let t = Poly::t();
    Matrix::<Poly>::identity(a.rows()).add(&a.to_poly().scale(&t))
}

/// Equivalence `(Id_g + tN, Id_V + tS)` from the deformation generated by
/// `d_prime` to the one generated by `d`:
/// `(Id+tN)[x,y]'_t = [(Id+tN)x,(Id+tN)y]_t`, the same for the ternary
/// bracket, and `(Id+tS)ρ'_t(x) = ρ_t((Id+tN)x)(Id+tS)`, likewise for `μ` and
/// the derived `D`. Check names: `ee1`, `ee2`, `eqv1`, `eqv2`, `eqv3`.
pub fn equivalence_report(
    pair: &LieYRepPair,
    d: &DeformationData,
    d_prime: &DeformationData,
    n: &Matrix,
    s: &Matrix,
) -> Result<CheckReport> {
    check_square(n, pair.dim_g(), "N")?;
    check_square(s, pair.dim_v(), "S")?;
    let target = d.deformed_pair(pair)?;
    let source = d_prime.deformed_pair(pair)?;
    let r = source.pair_homomorphism_report(&id_plus_t(n), &id_plus_t(s), &target)?;
    let rename = |name: &str| match name {
        "hom-binary" => "ee1",
        "hom-ternary" => "ee2",
        "homo1" => "eqv1",
        "homo2" => "eqv2",
        "homo3" => "eqv3",
        other => unreachable!("unexpected check {other}"),
    };
    Ok(CheckReport {
        checks: r
            .checks
            .into_iter()
            .map(|mut c| {
                c.name = rename(&c.name).to_string();
                c
            })
            .collect(),
    })
}

/// `true` iff `(Id+tN, Id+tS)` is an isomorphism from the `d_prime`
/// deformation to the `d` deformation, as polynomial identities in `t`.
pub fn are_equivalent_deformations(
    pair: &LieYRepPair,
    d: &DeformationData,
    d_prime: &DeformationData,
    n: &Matrix,
    s: &Matrix,
) -> Result<bool> {
    Ok(equivalence_report(pair, d, d_prime, n, s)?.all_passed())
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

/// `ρ̂(x) = ρ(Nx) + ρ(x)S − Sρ(x)` on basis vectors.
fn hat_rho_table(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Vec<Matrix> {
    let rep = &pair.rep;
    (0..pair.dim_g())
        .map(|i| {
            rep.rho_of(&n.column(i))
                .add(&rep.rho()[i].mul(s))
                .sub(&s.mul(&rep.rho()[i]))
        })
        .collect()
}

/// `F(Nx,y) + F(x,Ny) + F(x,y)S − SF(x,y)` for a bilinear family `F`.
fn first_order_table(
    f: impl Fn(&[Rational], &[Rational]) -> Matrix,
    d: usize,
    n: &Matrix,
    s: &Matrix,
) -> MatrixTable {
    let e = |i: usize| crate::exact::unit::<Rational>(d, i);
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let (x, y) = (e(i), e(j));
                    let fxy = f(&x, &y);
                    f(&n.column(i), &y)
                        .add(&f(&x, &n.column(j)))
                        .add(&fxy.mul(s))
                        .sub(&s.mul(&fxy))
                })
                .collect()
        })
        .collect()
}

/// `F(Nx,y)S + F(x,Ny)S + F(Nx,Ny) − S(F(Nx,y) + F(x,Ny) + F(x,y)S) + S²F(x,y)`.
fn second_order_table(
    f: impl Fn(&[Rational], &[Rational]) -> Matrix,
    d: usize,
    n: &Matrix,
    s: &Matrix,
) -> MatrixTable {
    let e = |i: usize| crate::exact::unit::<Rational>(d, i);
    let s2 = s.mul(s);
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let (x, y) = (e(i), e(j));
                    let (nx, ny) = (n.column(i), n.column(j));
                    let fnx_y = f(&nx, &y);
                    let fx_ny = f(&x, &ny);
                    let fxy = f(&x, &y);
                    fnx_y
                        .mul(s)
                        .add(&fx_ny.mul(s))
                        .add(&f(&nx, &ny))
                        .sub(&s.mul(&fnx_y.add(&fx_ny).add(&fxy.mul(s))))
                        .add(&s2.mul(&fxy))
                })
                .collect()
        })
        .collect()
}

/// The closed form `D̂(x,y) = D(Nx,y)S + D(x,Ny)S + D(Nx,Ny)
/// − S(D(Nx,y) + D(x,Ny) + D(x,y)S) + S²D(x,y)` on basis pairs.
pub fn hat_d_closed_form(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<MatrixTable> {
    check_square(n, pair.dim_g(), "N")?;
    check_square(s, pair.dim_v(), "S")?;
    let dd = pair.derived_d();
    Ok(second_order_table(|x, y| dd.of(x, y), pair.dim_g(), n, s))
}

/// Conditions for `(N, S)` to be a Nijenhuis structure:
/// `nijenhuis-binary`/`nijenhuis-ternary` (N is a Nijenhuis operator),
/// `structure-rho`: `ρ(Nx)S = Sϱ(x)` with `ϱ(x) = ρ(Nx)+ρ(x)S−Sρ(x)`,
/// `structure-mu`: `μ(Nx,Ny)S = Sϖ₂(x,y)`, and the derived consequence
/// `structure-D`: `D(Nx,Ny)S = S·D̂(x,y)`.
pub fn nijenhuis_structure_report(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<CheckReport> {
    check_square(n, pair.dim_g(), "N")?;
    check_square(s, pair.dim_v(), "S")?;
    let d = pair.dim_g();
    let mut report = pair.algebra.nijenhuis_report(n)?;
    let rep = &pair.rep;
    let varrho = hat_rho_table(pair, n, s);
    report.push(check_identity("structure-rho", &[d], |ix| {
        let i = ix[0];
        rep.rho_of(&n.column(i)).mul(s).sub(&s.mul(&varrho[i])).into_data()
    }));
    let varpi2 = second_order_table(|x, y| rep.mu_of(x, y), d, n, s);
    report.push(check_identity("structure-mu", &[d, d], |ix| {
        let (i, j) = (ix[0], ix[1]);
        rep.mu_of(&n.column(i), &n.column(j))
            .mul(s)
            .sub(&s.mul(&varpi2[i][j]))
            .into_data()
    }));
    let dd = pair.derived_d();
    let hat_d = hat_d_closed_form(pair, n, s)?;
    report.push(check_identity("structure-D", &[d, d], |ix| {
        let (i, j) = (ix[0], ix[1]);
        dd.of(&n.column(i), &n.column(j))
            .mul(s)
            .sub(&s.mul(&hat_d[i][j]))
            .into_data()
    }));
    Ok(report)
}

/// `true` iff `(N, S)` is a Nijenhuis structure on `pair`. The derived
/// condition on `D` failing while all defining conditions hold is reported
/// as an internal-consistency error.
pub fn is_nijenhuis_structure(pair: &LieYRepPair, n: &Matrix, s: &Matrix) -> Result<bool> {
    let r = nijenhuis_structure_report(pair, n, s)?;
    let defining = r.checks.iter().filter(|c| c.name != "structure-D").all(|c| c.passed);
    if defining && !r.passed("structure-D") {
        return Err(Error::InternalConsistency(
            "the D-condition fails for a pair satisfying the Nijenhuis structure conditions".into(),
        ));
    }
    Ok(defining)
}

/// A Nijenhuis structure `(N, S)` validated against its pair.
#[derive(Clone, Debug, PartialEq)]
pub struct NijenhuisStructure {
    pair: LieYRepPair,
    n: Matrix,
    s: Matrix,
}

impl NijenhuisStructure {
    /// Validates `(N, S)`; fails with `NotNijenhuis` naming the first
    /// violated condition.
    pub fn new(pair: &LieYRepPair, n: Matrix, s: Matrix) -> Result<Self> {
        let r = nijenhuis_structure_report(pair, &n, &s)?;
        if !is_nijenhuis_structure(pair, &n, &s)? {
            let f = r.first_failure().expect("some condition fails");
            return Err(Error::NotNijenhuis(f.name.clone()));
        }
        Ok(NijenhuisStructure {
            pair: pair.clone(),
            n,
            s,
        })
    }

    pub fn pair(&self) -> &LieYRepPair {
        &self.pair
    }

    pub fn n(&self) -> &Matrix {
        &self.n
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    /// The deformation generated by the structure:
    /// `φ = [Nx,y]+[x,Ny]−N[x,y]`,
    /// `φ₁ = ⟪Nx,y,z⟫+⟪x,Ny,z⟫+⟪x,y,Nz⟫−N⟪x,y,z⟫`,
    /// `φ₂ = ⟪Nx,Ny,z⟫+⟪x,Ny,Nz⟫+⟪Nx,y,Nz⟫−Nφ₁`,
    /// `ϱ = ρ̂`, `ϖ₁(x,y) = μ(Nx,y)+μ(x,Ny)+μ(x,y)S−Sμ(x,y)`, `ϖ₂ = μ̂`.
    pub fn trivial_deformation(&self) -> DeformationData {
        let a = &self.pair.algebra;
        let (d, n) = (a.dim(), &self.n);
        let (phi, phi2) = a.deformed_brackets(n).expect("validated dimensions");
        let mut phi1 = Tensor::zeros(&[d, d, d, d]);
        let ncol: Vec<Vec<Rational>> = (0..d).map(|i| n.column(i)).collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = a.phi1_at(n, &ncol, i, j, k);
                    phi1.fiber_mut(&[i, j, k]).clone_from_slice(&v);
                }
            }
        }
        let rep = &self.pair.rep;
        DeformationData {
            phi,
            phi1,
            phi2,
            varrho: hat_rho_table(&self.pair, n, &self.s),
            varpi1: first_order_table(|x, y| rep.mu_of(x, y), d, n, &self.s),
            varpi2: second_order_table(|x, y| rep.mu_of(x, y), d, n, &self.s),
        }
    }

    /// Certificate that the generated deformation is linear and trivial:
    /// the linear-deformation checks plus the equivalence `(Id+tN, Id+tS)`
    /// from it to the undeformed pair.
    pub fn triviality_report(&self) -> Result<CheckReport> {
        let dd = self.trivial_deformation();
        let zero = DeformationData::zeros(self.pair.dim_g(), self.pair.dim_v());
        let mut r = CheckReport::new();
        r.extend_prefixed("deformation/", linear_deformation_report(&self.pair, &dd)?);
        r.extend_prefixed(
            "equivalence/",
            equivalence_report(&self.pair, &zero, &dd, &self.n, &self.s)?,
        );
        Ok(r)
    }

    /// `N ⊕ S` on `g ⋉ V`, asserted to be a Nijenhuis operator there.
    pub fn semidirect_operator(&self) -> Result<Matrix> {
        let op = self.n.direct_sum(&self.s);
        let sd = self.pair.semidirect()?;
        if !sd.is_nijenhuis(&op)? {
            return Err(Error::ConsequenceViolated(
                "N ⊕ S is not a Nijenhuis operator on the semidirect product".into(),
            ));
        }
        Ok(op)
    }

    /// `(ρ̂, μ̂)` with `ρ̂(x) = ρ(Nx)+ρ(x)S−Sρ(x)` and
    /// `μ̂(x,y) = μ(Nx,y)S+μ(x,Ny)S+μ(Nx,Ny)−S(μ(Nx,y)+μ(x,Ny)+μ(x,y)S)+S²μ(x,y)`,
    /// unchecked.
    pub fn hat_rep_unchecked(&self) -> Representation {
        let d = self.pair.dim_g();
        let rep = &self.pair.rep;
        Representation::new(
            d,
            self.pair.dim_v(),
            hat_rho_table(&self.pair, &self.n, &self.s),
            second_order_table(|x, y| rep.mu_of(x, y), d, &self.n, &self.s),
        )
        .expect("consistent shapes")
    }

    /// The pair `((g, [,]_N, ⟪⟫_N), (V; ρ̂, μ̂))`, unchecked.
    pub fn hat_pair_unchecked(&self) -> LieYRepPair {
        let algebra = self.pair.algebra.deformed_algebra(&self.n).expect("validated dimensions");
        LieYRepPair::new(algebra, self.hat_rep_unchecked()).expect("consistent dimensions")
    }

    /// Checks of the hatted representation: its derived map against the
    /// closed form (`hatD`), the deformed pair's axioms and representation
    /// conditions (`hat-pair/…`), and `(N, S)` as a homomorphism to the
    /// original pair (`homomorphism/…`).
    pub fn hat_rep_report(&self) -> Result<CheckReport> {
        let hp = self.hat_pair_unchecked();
        let d = self.pair.dim_g();
        let closed = hat_d_closed_form(&self.pair, &self.n, &self.s)?;
        let derived = hp.rep.derived_d(&hp.algebra)?;
        let mut r = CheckReport::new();
        r.push(check_identity("hatD", &[d, d], |ix| {
            derived.at(ix[0], ix[1]).sub(&closed[ix[0]][ix[1]]).into_data()
        }));
        r.extend_prefixed("hat-pair/", hp.check());
        r.extend_prefixed(
            "homomorphism/",
            hp.pair_homomorphism_report(&self.n, &self.s, &self.pair)?,
        );
        Ok(r)
    }

    /// `(ρ̂, μ̂)`, with all consequences of [`Self::hat_rep_report`] asserted.
    pub fn hat_rep(&self) -> Result<Representation> {
        let r = self.hat_rep_report()?;
        if let Some(f) = r.first_failure() {
            return Err(Error::ConsequenceViolated(format!("hatted representation: {}", f.name)));
        }
        Ok(self.hat_rep_unchecked())
    }
}

/// Free-function form of [`NijenhuisStructure::trivial_deformation`].
pub fn trivial_deformation_from(ns: &NijenhuisStructure) -> DeformationData {
    ns.trivial_deformation()
}

/// Free-function form of [`NijenhuisStructure::semidirect_operator`].
pub fn semidirect_nijenhuis(ns: &NijenhuisStructure) -> Result<Matrix> {
    ns.semidirect_operator()
}

/// Free-function form of [`NijenhuisStructure::hat_rep`].
pub fn hat_rep(ns: &NijenhuisStructure) -> Result<Representation> {
    ns.hat_rep()
}
