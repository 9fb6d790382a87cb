//! Representations `(V; ρ, μ)`, the derived operator `D`, and the standard
//! constructions built from them.

use crate::algebra::LieYamagutiAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly, Rational, Scalar, Tensor};
use crate::report::{check_identity, CheckReport};

/// `rho[i] = ρ(eᵢ)`, `mu[i][j] = μ(eᵢ,eⱼ)`, all `module_dim × module_dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S: Scalar = Rational> {
    algebra_dim: usize,
    module_dim: usize,
    rho: Vec<Matrix<S>>,
    mu: Vec<Vec<Matrix<S>>>,
}

/// `d[i][j] = D(eᵢ,eⱼ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedD<S: Scalar = Rational> {
    pub d: Vec<Vec<Matrix<S>>>,
}

impl<S: Scalar> DerivedD<S> {
    pub fn at(&self, i: usize, j: usize) -> &Matrix<S> {
        &self.d[i][j]
    }

    /// `D(x,y)` for coordinate vectors.
    pub fn of(&self, x: &[S], y: &[S]) -> Matrix<S> {
        bilinear_combination(&self.d, x, y)
    }
}

pub(crate) fn linear_combination<S: Scalar>(ms: &[Matrix<S>], x: &[S]) -> Matrix<S> {
    let n = ms[0].rows();
    let mut out = Matrix::zeros(n, n);
    for (m, c) in ms.iter().zip(x) {
        out.add_scaled(c, m);
    }
    out
}

pub(crate) fn bilinear_combination<S: Scalar>(ms: &[Vec<Matrix<S>>], x: &[S], y: &[S]) -> Matrix<S> {
    let n = ms[0][0].rows();
    let mut out = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out.add_scaled(&xi.mul(yj), &ms[i][j]);
            }
        }
    }
    out
}

fn flat<S: Scalar>(m: Matrix<S>) -> Vec<S> {
    m.into_data()
}

impl<S: Scalar> Representation<S> {
    pub fn new(
        algebra_dim: usize,
        module_dim: usize,
        rho: Vec<Matrix<S>>,
        mu: Vec<Vec<Matrix<S>>>,
    ) -> Result<Self> {
        let ok_shape = |m: &Matrix<S>| m.rows() == module_dim && m.cols() == module_dim;
        if rho.len() != algebra_dim
            || mu.len() != algebra_dim
            || mu.iter().any(|r| r.len() != algebra_dim)
            || !rho.iter().all(ok_shape)
            || !mu.iter().flatten().all(ok_shape)
        {
            return Err(Error::DimMismatch(format!(
                "representation data does not match dim(g) = {algebra_dim}, dim(V) = {module_dim}"
            )));
        }
        Ok(Representation {
            algebra_dim,
            module_dim,
            rho,
            mu,
        })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let z = Matrix::zeros(module_dim, module_dim);
        Representation {
            algebra_dim,
            module_dim,
            rho: vec![z.clone(); algebra_dim],
            mu: vec![vec![z; algebra_dim]; algebra_dim],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self) -> &[Matrix<S>] {
        &self.rho
    }

    pub fn mu(&self) -> &[Vec<Matrix<S>>] {
        &self.mu
    }

    pub fn rho_mut(&mut self) -> &mut Vec<Matrix<S>> {
        &mut self.rho
    }

    pub fn mu_mut(&mut self) -> &mut Vec<Vec<Matrix<S>>> {
        &mut self.mu
    }

    /// `ρ(x)`.
    pub fn rho_of(&self, x: &[S]) -> Matrix<S> {
        linear_combination(&self.rho, x)
    }

    /// `μ(x, y)`.
    pub fn mu_of(&self, x: &[S], y: &[S]) -> Matrix<S> {
        bilinear_combination(&self.mu, x, y)
    }

    fn check_algebra(&self, a: &LieYamagutiAlgebra<S>) -> Result<()> {
        if a.dim() != self.algebra_dim {
            return Err(Error::DimMismatch(format!(
                "representation of a {}-dimensional algebra used with dimension {}",
                self.algebra_dim,
                a.dim()
            )));
        }
        Ok(())
    }

    /// `D(x,y) = μ(y,x) − μ(x,y) + [ρ(x),ρ(y)] − ρ([x,y])` on basis pairs.
    pub fn derived_d(&self, a: &LieYamagutiAlgebra<S>) -> Result<DerivedD<S>> {
        self.check_algebra(a)?;
        let n = self.algebra_dim;
        let mut d = vec![vec![Matrix::zeros(self.module_dim, self.module_dim); n]; n];
        for i in 0..n {
            for j in 0..n {
                d[i][j] = self.mu[j][i]
                    .sub(&self.mu[i][j])
                    .add(&self.rho[i].commutator(&self.rho[j]))
                    .sub(&self.rho_of(a.bracket_basis(i, j)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !d[i][j].add(&d[j][i]).is_zero() {
                    return Err(Error::InternalConsistency(format!(
                        "D(e{i},e{j}) is not skew-symmetric"
                    )));
                }
            }
        }
        Ok(DerivedD { d })
    }

    /// The five defining conditions RLYb, RLYd, RLYe, RYT4, RLY5.
    pub fn check_representation(&self, a: &LieYamagutiAlgebra<S>) -> Result<CheckReport> {
        let dd = self.derived_d(a)?;
        let n = self.algebra_dim;
        let e = |i: usize| a.e(i);
        let rho = &self.rho;
        let mu = &self.mu;
        let mut rep = CheckReport::new();
        rep.push(check_identity("RLYb", &[n, n, n], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            flat(
                self.mu_of(a.bracket_basis(x, y), &e(z))
                    .sub(&mu[x][z].mul(&rho[y]))
                    .add(&mu[y][z].mul(&rho[x])),
            )
        }));
        rep.push(check_identity("RLYd", &[n, n, n], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            flat(
                self.mu_of(&e(x), a.bracket_basis(y, z))
                    .sub(&rho[y].mul(&mu[x][z]))
                    .add(&rho[z].mul(&mu[x][y])),
            )
        }));
        rep.push(check_identity("RLYe", &[n, n, n], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            flat(
                self.rho_of(a.triple_basis(x, y, z))
                    .sub(&dd.at(x, y).commutator(&rho[z])),
            )
        }));
        rep.push(check_identity("RYT4", &[n, n, n, n], |t| {
            let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
            flat(
                mu[z][w]
                    .mul(&mu[x][y])
                    .sub(&mu[y][w].mul(&mu[x][z]))
                    .sub(&self.mu_of(&e(x), a.triple_basis(y, z, w)))
                    .add(&dd.at(y, z).mul(&mu[x][w])),
            )
        }));
        rep.push(check_identity("RLY5", &[n, n, n, n], |t| {
            let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
            flat(
                self.mu_of(a.triple_basis(x, y, z), &e(w))
                    .add(&self.mu_of(&e(z), a.triple_basis(x, y, w)))
                    .sub(&dd.at(x, y).commutator(&mu[z][w])),
            )
        }));
        Ok(rep)
    }

    pub fn is_representation(&self, a: &LieYamagutiAlgebra<S>) -> bool {
        self.check_representation(a).is_ok_and(|r| r.all_passed())
    }

    /// The three identities implied by the representation conditions:
    /// RLYc `D([x,y],z)+c.p. = 0`,
    /// RLY5a `D(⟪x,y,z⟫,w)+D(z,⟪x,y,w⟫) = [D(x,y),D(z,w)]`,
    /// RLY6 `μ(⟪x,y,z⟫,w) = μ(x,w)μ(z,y) − μ(y,w)μ(z,x) − μ(z,w)D(x,y)`.
    pub fn check_derived_identities(&self, a: &LieYamagutiAlgebra<S>) -> Result<CheckReport> {
        let dd = self.derived_d(a)?;
        let n = self.algebra_dim;
        let e = |i: usize| a.e(i);
        let mu = &self.mu;
        let mut rep = CheckReport::new();
        rep.push(check_identity("RLYc", &[n, n, n], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            flat(
                dd.of(a.bracket_basis(x, y), &e(z))
                    .add(&dd.of(a.bracket_basis(y, z), &e(x)))
                    .add(&dd.of(a.bracket_basis(z, x), &e(y))),
            )
        }));
        rep.push(check_identity("RLY5a", &[n, n, n, n], |t| {
            let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
            flat(
                dd.of(a.triple_basis(x, y, z), &e(w))
                    .add(&dd.of(&e(z), a.triple_basis(x, y, w)))
                    .sub(&dd.at(x, y).commutator(dd.at(z, w))),
            )
        }));
        rep.push(check_identity("RLY6", &[n, n, n, n], |t| {
            let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
            flat(
                self.mu_of(a.triple_basis(x, y, z), &e(w))
                    .sub(&mu[x][w].mul(&mu[z][y]))
                    .add(&mu[y][w].mul(&mu[z][x]))
                    .add(&mu[z][w].mul(dd.at(x, y))),
            )
        }));
        Ok(rep)
    }

    /// The adjoint representation `(g; ad, ℜ)` with `ad_x z = [x,z]` and
    /// `ℜ(x,y)z = ⟪z,x,y⟫`; its derived `D` is `𝔏(x,y)z = ⟪x,y,z⟫`.
    pub fn adjoint(a: &LieYamagutiAlgebra<S>) -> Self {
        let n = a.dim();
        let rho = (0..n)
            .map(|i| {
                let cols: Vec<Vec<S>> = (0..n).map(|k| a.bracket_basis(i, k).to_vec()).collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        let mu = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let cols: Vec<Vec<S>> =
                            (0..n).map(|k| a.triple_basis(k, i, j).to_vec()).collect();
                        Matrix::from_columns(n, &cols)
                    })
                    .collect()
            })
            .collect();
        Representation {
            algebra_dim: n,
            module_dim: n,
            rho,
            mu,
        }
    }

    /// Dual representation `(V*; ρ*, −μ*τ)` under the coordinate pairing,
    /// where `ρ*`, `μ*` are dual to `−ρ`, `−μ`: `ρ'(x) = −ρ(x)ᵀ` and
    /// `μ'(x,y) = μ(y,x)ᵀ`.
    pub fn dual(&self) -> Self {
        let n = self.algebra_dim;
        Representation {
            algebra_dim: n,
            module_dim: self.module_dim,
            rho: self.rho.iter().map(|r| r.transpose().neg()).collect(),
            mu: (0..n)
                .map(|i| (0..n).map(|j| self.mu[j][i].transpose()).collect())
                .collect(),
        }
    }

    /// Coadjoint representation: the dual of the adjoint.
    pub fn coadjoint(a: &LieYamagutiAlgebra<S>) -> Self {
        Self::adjoint(a).dual()
    }

    /// Semidirect product `g ⋉ V` on `g ⊕ V` (basis: g first, then V):
    /// `[x+u,y+v] = [x,y] + ρ(x)v − ρ(y)u`,
    /// `⟪x+u,y+v,z+w⟫ = ⟪x,y,z⟫ + D(x,y)w + μ(y,z)u − μ(x,z)v`.
    pub fn semidirect(&self, a: &LieYamagutiAlgebra<S>) -> Result<LieYamagutiAlgebra<S>> {
        let rep = self.check_representation(a)?;
        if let Some(f) = rep.first_failure() {
            return Err(Error::InvalidRep(f.name.clone()));
        }
        self.semidirect_unchecked(a)
    }

    /// Semidirect structure constants without validating the representation.
    pub fn semidirect_unchecked(&self, a: &LieYamagutiAlgebra<S>) -> Result<LieYamagutiAlgebra<S>> {
        let dd = self.derived_d(a)?;
        let (n, m) = (self.algebra_dim, self.module_dim);
        let t = n + m;
        let mut bin = Tensor::zeros(&[t, t, t]);
        let mut ter = Tensor::zeros(&[t, t, t, t]);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    bin.set(&[i, j, k], a.bracket_basis(i, j)[k].clone());
                    for l in 0..n {
                        ter.set(&[i, j, k, l], a.triple_basis(i, j, k)[l].clone());
                    }
                }
            }
        }
        for i in 0..n {
            for v in 0..m {
                for o in 0..m {
                    let r = self.rho[i].get(o, v).clone();
                    bin.set(&[i, n + v, n + o], r.clone());
                    bin.set(&[n + v, i, n + o], r.neg());
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for v in 0..m {
                    for o in 0..m {
                        // ⟪eᵢ, eⱼ, w⟫ = D(eᵢ,eⱼ)w
                        ter.set(&[i, j, n + v, n + o], dd.at(i, j).get(o, v).clone());
                        // ⟪u, eⱼ, eₖ⟫ = μ(eⱼ,eₖ)u with (j,k) = (i,j) here
                        ter.set(&[n + v, i, j, n + o], self.mu[i][j].get(o, v).clone());
                        // ⟪eᵢ, v, eₖ⟫ = −μ(eᵢ,eₖ)v
                        ter.set(&[i, n + v, j, n + o], self.mu[i][j].get(o, v).neg());
                    }
                }
            }
        }
        LieYamagutiAlgebra::new(t, bin, ter)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Representation<T> {
        Representation {
            algebra_dim: self.algebra_dim,
            module_dim: self.module_dim,
            rho: self.rho.iter().map(|m| m.map(&f)).collect(),
            mu: self
                .mu
                .iter()
                .map(|r| r.iter().map(|m| m.map(&f)).collect())
                .collect(),
        }
    }
}

impl Representation<Rational> {
    pub fn to_poly(&self) -> Representation<Poly> {
        self.map_scalars(|x| Poly::constant(x.clone()))
    }
}

/// A Lie-Yamaguti algebra together with a representation of it.
#[derive(Clone, Debug, PartialEq)]
pub struct LieYRepPair<S: Scalar = Rational> {
    pub algebra: LieYamagutiAlgebra<S>,
    pub rep: Representation<S>,
}

impl<S: Scalar> LieYRepPair<S> {
    /// Pairs the data after checking dimensions only.
    pub fn new(algebra: LieYamagutiAlgebra<S>, rep: Representation<S>) -> Result<Self> {
        if algebra.dim() != rep.algebra_dim() {
            return Err(Error::DimMismatch(format!(
                "algebra of dimension {} with a representation of a {}-dimensional algebra",
                algebra.dim(),
                rep.algebra_dim()
            )));
        }
        Ok(LieYRepPair { algebra, rep })
    }

    /// Pairs the data and requires both the axioms and the representation
    /// conditions to hold.
    pub fn validated(algebra: LieYamagutiAlgebra<S>, rep: Representation<S>) -> Result<Self> {
        let p = Self::new(algebra, rep)?;
        let r = p.check();
        if let Some(f) = r.first_failure() {
            return Err(Error::InvalidRep(f.name.clone()));
        }
        Ok(p)
    }

    pub fn adjoint(algebra: LieYamagutiAlgebra<S>) -> Self {
        let rep = Representation::adjoint(&algebra);
        LieYRepPair { algebra, rep }
    }

    pub fn coadjoint(algebra: LieYamagutiAlgebra<S>) -> Self {
        let rep = Representation::coadjoint(&algebra);
        LieYRepPair { algebra, rep }
    }

    pub fn dual(&self) -> Self {
        LieYRepPair {
            algebra: self.algebra.clone(),
            rep: self.rep.dual(),
        }
    }

    pub fn dim_g(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.rep.module_dim()
    }

    pub fn derived_d(&self) -> DerivedD<S> {
        self.rep
            .derived_d(&self.algebra)
            .expect("pair dimensions are consistent by construction")
    }

    /// Axioms of the algebra followed by the representation conditions.
    pub fn check(&self) -> CheckReport {
        let mut r = self.algebra.check_axioms();
        match self.rep.check_representation(&self.algebra) {
            Ok(rr) => r.checks.extend(rr.checks),
            Err(e) => r.push(crate::report::CheckResult::fail(format!("rep: {e}"), None)),
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_passed()
    }

    pub fn semidirect(&self) -> Result<LieYamagutiAlgebra<S>> {
        self.rep.semidirect(&self.algebra)
    }

    /// Homomorphism `(φ, ψ)` from `self` to `target`: φ is an algebra
    /// homomorphism, `ψρ(x) = ρ'(φx)ψ`, `ψμ(x,y) = μ'(φx,φy)ψ`, and the
    /// derived `ψD(x,y) = D'(φx,φy)ψ`.
    pub fn pair_homomorphism_report(
        &self,
        phi: &Matrix<S>,
        psi: &Matrix<S>,
        target: &Self,
    ) -> Result<CheckReport> {
        if psi.rows() != target.dim_v() || psi.cols() != self.dim_v() {
            return Err(Error::DimMismatch("ψ does not map V to W".into()));
        }
        let mut rep = self.algebra.homomorphism_report(phi, &target.algebra)?;
        let n = self.dim_g();
        let col: Vec<Vec<S>> = (0..n).map(|i| phi.column(i)).collect();
        let d_src = self.derived_d();
        let d_tgt = target.derived_d();
        rep.push(check_identity("homo1", &[n], |t| {
            flat(psi
                .mul(&self.rep.rho[t[0]])
                .sub(&target.rep.rho_of(&col[t[0]]).mul(psi)))
        }));
        rep.push(check_identity("homo2", &[n, n], |t| {
            flat(psi
                .mul(&self.rep.mu[t[0]][t[1]])
                .sub(&target.rep.mu_of(&col[t[0]], &col[t[1]]).mul(psi)))
        }));
        rep.push(check_identity("homo3", &[n, n], |t| {
            flat(psi
                .mul(d_src.at(t[0], t[1]))
                .sub(&d_tgt.of(&col[t[0]], &col[t[1]]).mul(psi)))
        }));
        Ok(rep)
    }

    pub fn is_pair_homomorphism(&self, phi: &Matrix<S>, psi: &Matrix<S>, target: &Self) -> Result<bool> {
        Ok(self.pair_homomorphism_report(phi, psi, target)?.all_passed())
    }
}

impl LieYRepPair<Rational> {
    pub fn to_poly(&self) -> LieYRepPair<Poly> {
        LieYRepPair {
            algebra: self.algebra.to_poly(),
            rep: self.rep.to_poly(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::a2;

    #[test]
    fn adjoint_and_coadjoint_of_a2() {
        let a = a2();
        for rep in [Representation::adjoint(&a), Representation::coadjoint(&a)] {
            let r = rep.check_representation(&a).unwrap();
            assert!(r.all_passed(), "{:?}", r.failed_names());
            assert!(rep.check_derived_identities(&a).unwrap().all_passed());
            assert!(rep.semidirect(&a).unwrap().is_lie_yamaguti());
        }
        let ad = Representation::adjoint(&a);
        assert_eq!(ad.rho()[0], Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(ad.rho()[1], Matrix::from_ints(&[&[-1, 0], &[0, 0]]));
        assert_eq!(ad.mu()[1][1], Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        let d = ad.derived_d(&a).unwrap();
        assert_eq!(d.at(0, 1), &Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(ad.dual().dual(), ad);
    }

    #[test]
    fn perturbed_adjoint_fails() {
        let a = a2();
        let mut rep = Representation::adjoint(&a);
        rep.mu_mut()[1][1].set(1, 1, Rational::one());
        assert!(!rep.is_representation(&a));
        assert!(matches!(rep.semidirect(&a), Err(Error::InvalidRep(_))));
    }
}
