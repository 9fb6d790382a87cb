//! Lie-Yamaguti algebras given by structure constants.

use crate::error::{Error, Result};
use crate::exact::{unit, vec_is_zero, vec_sub, Matrix, Poly, Rational, Scalar, Tensor};
use crate::report::{check_identity, CheckReport};

/// A Lie-Yamaguti algebra on `kᵈ`:
/// `[eᵢ,eⱼ] = Σₖ binary[i][j][k] eₖ` and
/// `⟪eᵢ,eⱼ,eₖ⟫ = Σₗ ternary[i][j][k][l] eₗ`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieYamagutiAlgebra<S = Rational> {
    dim: usize,
    basis: Vec<String>,
    binary: Tensor<S>,
    ternary: Tensor<S>,
}

fn default_basis(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl<S: Scalar> LieYamagutiAlgebra<S> {
    /// Validates shapes and the antisymmetry of both brackets in their first
    /// two slots.
    pub fn new(dim: usize, binary: Tensor<S>, ternary: Tensor<S>) -> Result<Self> {
        if binary.shape() != [dim, dim, dim] || ternary.shape() != [dim, dim, dim, dim] {
            return Err(Error::DimMismatch(format!(
                "structure tensors {:?}, {:?} for dimension {dim}",
                binary.shape(),
                ternary.shape()
            )));
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if !binary.get(&[i, j, k]).add(binary.get(&[j, i, k])).is_zero() {
                        return Err(Error::ConflictingEntry(format!(
                            "binary ({i},{j},{k}) is not antisymmetric"
                        )));
                    }
                    for l in 0..dim {
                        if !ternary
                            .get(&[i, j, k, l])
                            .add(ternary.get(&[j, i, k, l]))
                            .is_zero()
                        {
                            return Err(Error::ConflictingEntry(format!(
                                "ternary ({i},{j},{k},{l}) is not antisymmetric in the first two slots"
                            )));
                        }
                    }
                }
            }
        }
        Ok(LieYamagutiAlgebra {
            dim,
            basis: default_basis(dim),
            binary,
            ternary,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieYamagutiAlgebra {
            dim,
            basis: default_basis(dim),
            binary: Tensor::zeros(&[dim, dim, dim]),
            ternary: Tensor::zeros(&[dim, dim, dim, dim]),
        }
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimMismatch(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.basis = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn binary(&self) -> &Tensor<S> {
        &self.binary
    }

    pub fn ternary(&self) -> &Tensor<S> {
        &self.ternary
    }

    /// `[eᵢ, eⱼ]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        self.binary.fiber(&[i, j])
    }

    /// `⟪eᵢ, eⱼ, eₖ⟫` as a coordinate slice.
    pub fn triple_basis(&self, i: usize, j: usize, k: usize) -> &[S] {
        self.ternary.fiber(&[i, j, k])
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimMismatch(format!(
                "vector of length {} in a {}-dimensional algebra",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.br(x, y))
    }

    pub fn triple(&self, x: &[S], y: &[S], z: &[S]) -> Result<Vec<S>> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        Ok(self.tr(x, y, z))
    }

    /// Unchecked bilinear contraction.
    pub(crate) fn br(&self, x: &[S], y: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut out = vec![S::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (o, b) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    o.add_mul(&c, b);
                }
            }
        }
        out
    }

    /// Unchecked trilinear contraction.
    pub(crate) fn tr(&self, x: &[S], y: &[S], z: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut out = vec![S::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    let c2 = c.mul(zk);
                    for (o, b) in out.iter_mut().zip(self.triple_basis(i, j, k)) {
                        o.add_mul(&c2, b);
                    }
                }
            }
        }
        out
    }

    pub(crate) fn e(&self, i: usize) -> Vec<S> {
        unit(self.dim, i)
    }

    /// The four defining identities, each checked on every basis tuple.
    pub fn check_axioms(&self) -> CheckReport {
        let d = self.dim;
        let e = |i: usize| self.e(i);
        let mut rep = CheckReport::new();
        rep.push(check_identity("LY1", &[d, d, d], |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            let mut r = vec![S::zero(); d];
            for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                let s1 = self.br(&self.br(a, b), c);
                let s2 = self.tr(a, b, c);
                for k in 0..d {
                    r[k].add_assign(&s1[k]);
                    r[k].add_assign(&s2[k]);
                }
            }
            r
        }));
        rep.push(check_identity("LY2", &[d, d, d, d], |t| {
            let (x, y, z, w) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]));
            let mut r = vec![S::zero(); d];
            for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                let s = self.tr(&self.br(a, b), c, &w);
                for k in 0..d {
                    r[k].add_assign(&s[k]);
                }
            }
            r
        }));
        rep.push(check_identity("LY3", &[d, d, d, d], |t| {
            let (x, y, z, w) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]));
            let lhs = self.tr(&x, &y, &self.br(&z, &w));
            let r1 = self.br(&self.tr(&x, &y, &z), &w);
            let r2 = self.br(&z, &self.tr(&x, &y, &w));
            (0..d).map(|k| lhs[k].sub(&r1[k]).sub(&r2[k])).collect()
        }));
        rep.push(check_identity("LY4", &[d, d, d, d, d], |t| {
            let (x, y, z, w, u) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]), e(t[4]));
            let lhs = self.tr(&x, &y, &self.tr(&z, &w, &u));
            let r1 = self.tr(&self.tr(&x, &y, &z), &w, &u);
            let r2 = self.tr(&z, &self.tr(&x, &y, &w), &u);
            let r3 = self.tr(&z, &w, &self.tr(&x, &y, &u));
            (0..d)
                .map(|k| lhs[k].sub(&r1[k]).sub(&r2[k]).sub(&r3[k]))
                .collect()
        }));
        rep
    }

    pub fn is_lie_yamaguti(&self) -> bool {
        self.check_axioms().all_passed()
    }

    /// Deformed brackets `([,]_N, ⟪⟫_N)` of a linear map `N`:
    /// `[x,y]_N = [Nx,y]+[x,Ny]−N[x,y]` and `⟪x,y,z⟫_N = φ₂` where
    /// `φ₁ = ⟪Nx,y,z⟫+⟪x,Ny,z⟫+⟪x,y,Nz⟫−N⟪x,y,z⟫`,
    /// `φ₂ = ⟪Nx,Ny,z⟫+⟪x,Ny,Nz⟫+⟪Nx,y,Nz⟫−Nφ₁`.
    pub fn deformed_brackets(&self, n: &Matrix<S>) -> Result<(Tensor<S>, Tensor<S>)> {
        self.check_map(n)?;
        let d = self.dim;
        let ncol: Vec<Vec<S>> = (0..d).map(|i| n.column(i)).collect();
        let mut bin = Tensor::zeros(&[d, d, d]);
        let mut ter = Tensor::zeros(&[d, d, d, d]);
        for i in 0..d {
            for j in 0..d {
                let (x, y) = (self.e(i), self.e(j));
                let v = sum3(
                    &self.br(&ncol[i], &y),
                    &self.br(&x, &ncol[j]),
                    &n.mul_vec(self.bracket_basis(i, j)).iter().map(|a| a.neg()).collect::<Vec<_>>(),
                );
                bin.fiber_mut(&[i, j]).clone_from_slice(&v);
                for k in 0..d {
                    let z = self.e(k);
                    let phi1 = self.phi1_at(n, &ncol, i, j, k);
                    let a = self.tr(&ncol[i], &ncol[j], &z);
                    let b = self.tr(&x, &ncol[j], &ncol[k]);
                    let c = self.tr(&ncol[i], &y, &ncol[k]);
                    let np = n.mul_vec(&phi1);
                    let v: Vec<S> = (0..d)
                        .map(|l| a[l].add(&b[l]).add(&c[l]).sub(&np[l]))
                        .collect();
                    ter.fiber_mut(&[i, j, k]).clone_from_slice(&v);
                }
            }
        }
        Ok((bin, ter))
    }

    pub(crate) fn phi1_at(&self, n: &Matrix<S>, ncol: &[Vec<S>], i: usize, j: usize, k: usize) -> Vec<S> {
        let (x, y, z) = (self.e(i), self.e(j), self.e(k));
        let a = self.tr(&ncol[i], &y, &z);
        let b = self.tr(&x, &ncol[j], &z);
        let c = self.tr(&x, &y, &ncol[k]);
        let nt = n.mul_vec(self.triple_basis(i, j, k));
        (0..self.dim)
            .map(|l| a[l].add(&b[l]).add(&c[l]).sub(&nt[l]))
            .collect()
    }

    /// The algebra `(g, [,]_N, ⟪⟫_N)`. Not checked against the axioms.
    pub fn deformed_algebra(&self, n: &Matrix<S>) -> Result<Self> {
        let (b, t) = self.deformed_brackets(n)?;
        Ok(LieYamagutiAlgebra {
            dim: self.dim,
            basis: self.basis.clone(),
            binary: b,
            ternary: t,
        })
    }

    fn check_map(&self, n: &Matrix<S>) -> Result<()> {
        if n.rows() != self.dim || n.cols() != self.dim {
            return Err(Error::DimMismatch(format!(
                "{}x{} map on a {}-dimensional algebra",
                n.rows(),
                n.cols(),
                self.dim
            )));
        }
        Ok(())
    }

    /// `N[x,y]_N = [Nx,Ny]` and `N⟪x,y,z⟫_N = ⟪Nx,Ny,Nz⟫` on basis tuples.
    pub fn nijenhuis_report(&self, n: &Matrix<S>) -> Result<CheckReport> {
        let (b, t) = self.deformed_brackets(n)?;
        let d = self.dim;
        let ncol: Vec<Vec<S>> = (0..d).map(|i| n.column(i)).collect();
        let mut rep = CheckReport::new();
        rep.push(check_identity("nijenhuis-binary", &[d, d], |ix| {
            vec_sub(&n.mul_vec(b.fiber(&[ix[0], ix[1]])), &self.br(&ncol[ix[0]], &ncol[ix[1]]))
        }));
        rep.push(check_identity("nijenhuis-ternary", &[d, d, d], |ix| {
            vec_sub(
                &n.mul_vec(t.fiber(&[ix[0], ix[1], ix[2]])),
                &self.tr(&ncol[ix[0]], &ncol[ix[1]], &ncol[ix[2]]),
            )
        }));
        Ok(rep)
    }

    pub fn is_nijenhuis(&self, n: &Matrix<S>) -> Result<bool> {
        Ok(self.nijenhuis_report(n)?.all_passed())
    }

    /// Structure-preservation of `phi: self → target` on basis tuples.
    pub fn homomorphism_report(&self, phi: &Matrix<S>, target: &Self) -> Result<CheckReport> {
        if phi.rows() != target.dim || phi.cols() != self.dim {
            return Err(Error::DimMismatch(format!(
                "{}x{} map from dimension {} to {}",
                phi.rows(),
                phi.cols(),
                self.dim,
                target.dim
            )));
        }
        let d = self.dim;
        let col: Vec<Vec<S>> = (0..d).map(|i| phi.column(i)).collect();
        let mut rep = CheckReport::new();
        rep.push(check_identity("hom-binary", &[d, d], |ix| {
            vec_sub(
                &phi.mul_vec(self.bracket_basis(ix[0], ix[1])),
                &target.br(&col[ix[0]], &col[ix[1]]),
            )
        }));
        rep.push(check_identity("hom-ternary", &[d, d, d], |ix| {
            vec_sub(
                &phi.mul_vec(self.triple_basis(ix[0], ix[1], ix[2])),
                &target.tr(&col[ix[0]], &col[ix[1]], &col[ix[2]]),
            )
        }));
        Ok(rep)
    }

    /// `φ[x,y]_A = [φx,φy]_B` and `φ⟪x,y,z⟫_A = ⟪φx,φy,φz⟫_B`.
    pub fn is_homomorphism(&self, phi: &Matrix<S>, target: &Self) -> Result<bool> {
        Ok(self.homomorphism_report(phi, target)?.all_passed())
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieYamagutiAlgebra<T> {
        LieYamagutiAlgebra {
            dim: self.dim,
            basis: self.basis.clone(),
            binary: self.binary.map(&f),
            ternary: self.ternary.map(&f),
        }
    }

    /// `true` iff `[eᵢ,eⱼ] = 0` and `⟪eᵢ,eⱼ,eₖ⟫ = 0` for all basis vectors.
    pub fn is_abelian(&self) -> bool {
        self.binary.is_zero() && self.ternary.is_zero()
    }

    /// `[x,y]` is zero for the given basis pair.
    pub fn bracket_vanishes(&self, i: usize, j: usize) -> bool {
        vec_is_zero(self.bracket_basis(i, j))
    }
}

impl LieYamagutiAlgebra<Rational> {
    pub fn to_poly(&self) -> LieYamagutiAlgebra<Poly> {
        self.map_scalars(|x| Poly::constant(x.clone()))
    }

    /// Lie-Yamaguti structure `(g, [,], c·[[x,y],z])` on a Lie algebra given
    /// by its bracket constants. Only the Jacobi identity is assumed.
    pub fn from_lie_bracket(binary: Tensor<Rational>, c: &Rational) -> Result<Self> {
        let d = binary.shape()[0];
        let tmp = LieYamagutiAlgebra::new(d, binary, Tensor::zeros(&[d, d, d, d]))?;
        let mut ter = Tensor::zeros(&[d, d, d, d]);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = tmp.br(tmp.bracket_basis(i, j), &tmp.e(k));
                    for (l, x) in v.into_iter().enumerate() {
                        ter.set(&[i, j, k, l], &x * c);
                    }
                }
            }
        }
        LieYamagutiAlgebra::new(d, tmp.binary, ter)
    }
}

fn sum3<S: Scalar>(a: &[S], b: &[S], c: &[S]) -> Vec<S> {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| x.add(y).add(z))
        .collect()
}

/// Incremental constructor used by loaders: entries are antisymmetrized on
/// insertion and contradictory duplicates are rejected.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    dim: usize,
    binary: Tensor<Rational>,
    ternary: Tensor<Rational>,
    bin_seen: Vec<bool>,
    ter_seen: Vec<bool>,
}

impl AlgebraBuilder {
    pub fn new(dim: usize) -> Self {
        AlgebraBuilder {
            dim,
            binary: Tensor::zeros(&[dim, dim, dim]),
            ternary: Tensor::zeros(&[dim, dim, dim, dim]),
            bin_seen: vec![false; dim * dim * dim],
            ter_seen: vec![false; dim * dim * dim * dim],
        }
    }

    fn in_range(&self, idx: &[usize]) -> Result<()> {
        if idx.iter().any(|&i| i >= self.dim) {
            return Err(Error::DimMismatch(format!(
                "index {idx:?} out of range for dimension {}",
                self.dim
            )));
        }
        Ok(())
    }

    /// Sets the `k`-th coordinate of `[eᵢ,eⱼ]` (and `[eⱼ,eᵢ]` to its negative).
    pub fn binary(&mut self, i: usize, j: usize, k: usize, v: Rational) -> Result<&mut Self> {
        self.in_range(&[i, j, k])?;
        let a = self.binary.offset(&[i, j, k]);
        let b = self.binary.offset(&[j, i, k]);
        if i == j {
            if !v.is_zero() {
                return Err(Error::ConflictingEntry(format!(
                    "binary ({i},{j},{k}) must vanish by antisymmetry, got {v}"
                )));
            }
            return Ok(self);
        }
        let neg = -&v;
        for (off, val) in [(a, &v), (b, &neg)] {
            if self.bin_seen[off] && self.binary.data()[off] != *val {
                return Err(Error::ConflictingEntry(format!(
                    "binary ({i},{j},{k}): {} vs {}",
                    self.binary.data()[off],
                    val
                )));
            }
        }
        self.binary.data_mut()[a] = v;
        self.binary.data_mut()[b] = neg;
        self.bin_seen[a] = true;
        self.bin_seen[b] = true;
        Ok(self)
    }

    /// Sets the `l`-th coordinate of `⟪eᵢ,eⱼ,eₖ⟫` (antisymmetric in `i, j`).
    pub fn ternary(&mut self, i: usize, j: usize, k: usize, l: usize, v: Rational) -> Result<&mut Self> {
        self.in_range(&[i, j, k, l])?;
        let a = self.ternary.offset(&[i, j, k, l]);
        let b = self.ternary.offset(&[j, i, k, l]);
        if i == j {
            if !v.is_zero() {
                return Err(Error::ConflictingEntry(format!(
                    "ternary ({i},{j},{k},{l}) must vanish by antisymmetry, got {v}"
                )));
            }
            return Ok(self);
        }
        let neg = -&v;
        for (off, val) in [(a, &v), (b, &neg)] {
            if self.ter_seen[off] && self.ternary.data()[off] != *val {
                return Err(Error::ConflictingEntry(format!(
                    "ternary ({i},{j},{k},{l}): {} vs {}",
                    self.ternary.data()[off],
                    val
                )));
            }
        }
        self.ternary.data_mut()[a] = v;
        self.ternary.data_mut()[b] = neg;
        self.ter_seen[a] = true;
        self.ter_seen[b] = true;
        Ok(self)
    }

    pub fn build(&self) -> Result<LieYamagutiAlgebra> {
        LieYamagutiAlgebra::new(self.dim, self.binary.clone(), self.ternary.clone())
    }
}
