//! Standard small algebras, representations and a seeded generator of valid
//! random pairs used by tests, the CLI `search` command and fixture files.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::LieYamagutiAlgebra;
use crate::exact::{invert, Matrix, Rational, Tensor};
use crate::rep::{LieYRepPair, Representation};

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Lie bracket constants from a list of `([eᵢ,eⱼ] = Σ c eₖ)` entries with `i < j`.
pub fn lie_bracket(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Tensor<Rational> {
    let mut t = Tensor::zeros(&[dim, dim, dim]);
    for (i, j, k, c) in entries {
        t.set(&[*i, *j, *k], c.clone());
        t.set(&[*j, *i, *k], -c);
    }
    t
}

/// The two-dimensional algebra with `[e₁,e₂] = e₁` and `⟪e₁,e₂,e₂⟫ = e₁`
/// (0-based indices `[0,1] → 0`, `⟪0,1,1⟫ → 0`).
pub fn a2() -> LieYamagutiAlgebra {
    LieYamagutiAlgebra::from_lie_bracket(lie_bracket(2, &[(0, 1, 0, r(1))]), &r(1))
        .expect("valid constants")
}

/// `[[0,a],[0,0]]` in the column convention: `e₂ ↦ a·e₁`.
pub fn upper_nilpotent(a: Rational) -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    m.set(0, 1, a);
    m
}

/// Named Lie algebras of dimension at most three (bracket constants only).
pub fn named_lie_algebras() -> Vec<(&'static str, Tensor<Rational>)> {
    vec![
        ("abelian-1", lie_bracket(1, &[])),
        ("abelian-2", lie_bracket(2, &[])),
        ("abelian-3", lie_bracket(3, &[])),
        ("affine-2", lie_bracket(2, &[(0, 1, 1, r(1))])),
        ("affine-2+k", lie_bracket(3, &[(0, 1, 1, r(1))])),
        ("heisenberg", lie_bracket(3, &[(0, 1, 2, r(1))])),
        ("r3(1)", lie_bracket(3, &[(0, 1, 1, r(1)), (0, 2, 2, r(1))])),
        ("r3(-1)", lie_bracket(3, &[(0, 1, 1, r(1)), (0, 2, 2, r(-1))])),
        ("r3(2)", lie_bracket(3, &[(0, 1, 1, r(1)), (0, 2, 2, r(2))])),
        ("r3-jordan", lie_bracket(3, &[(0, 1, 1, r(1)), (0, 2, 1, r(1)), (0, 2, 2, r(1))])),
        (
            "sl2",
            lie_bracket(3, &[(0, 1, 1, r(2)), (0, 2, 2, r(-2)), (1, 2, 0, r(1))]),
        ),
        (
            "so3",
            lie_bracket(3, &[(0, 1, 2, r(1)), (1, 2, 0, r(1)), (0, 2, 1, r(-1))]),
        ),
    ]
}

/// The algebra in the basis given by the columns of `p`:
/// `[eᵢ',eⱼ']' = P⁻¹[Peᵢ,Peⱼ]`, and likewise for the ternary bracket.
pub fn change_basis(a: &LieYamagutiAlgebra, p: &Matrix) -> crate::error::Result<LieYamagutiAlgebra> {
    let pinv = invert(p)?;
    let d = a.dim();
    let cols: Vec<Vec<Rational>> = (0..d).map(|i| p.column(i)).collect();
    let mut bin = Tensor::zeros(&[d, d, d]);
    let mut ter = Tensor::zeros(&[d, d, d, d]);
    for i in 0..d {
        for j in 0..d {
            let b = pinv.mul_vec(&a.bracket(&cols[i], &cols[j])?);
            bin.fiber_mut(&[i, j]).clone_from_slice(&b);
            for k in 0..d {
                let t = pinv.mul_vec(&a.triple(&cols[i], &cols[j], &cols[k])?);
                ter.fiber_mut(&[i, j, k]).clone_from_slice(&t);
            }
        }
    }
    LieYamagutiAlgebra::new(d, bin, ter)
}

/// Representation of a Lie-type algebra `⟪x,y,z⟫ = c[[x,y],z]` induced by a
/// Lie representation `ρ`: `μ(x,y) = c·ρ(y)ρ(x)`.
pub fn lie_induced_rep(rho: Vec<Matrix>, c: &Rational) -> Representation {
    let n = rho.len();
    let m = rho.first().map_or(0, |x| x.rows());
    let mu = (0..n)
        .map(|i| (0..n).map(|j| rho[j].mul(&rho[i]).scale(c)).collect())
        .collect();
    Representation::new(n, m, rho, mu).expect("consistent shapes")
}

fn random_invertible<R: Rng>(rng: &mut R, d: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let v = if i == j { rng.gen_range(-1..=2) } else { rng.gen_range(-1..=1) };
                m.set(i, j, r(v));
            }
        }
        if invert(&m).is_ok() {
            return m;
        }
    }
}

/// A random Lie-Yamaguti algebra of dimension ≤ `max_dim` obtained from a
/// named Lie algebra by a random change of basis and a triple bracket
/// `c·[[x,y],z]` (optionally with the binary bracket dropped, which yields a
/// Lie triple system), together with its Lie bracket constants when the
/// binary bracket is kept.
fn random_algebra<R: Rng>(
    rng: &mut R,
    max_dim: usize,
) -> (String, LieYamagutiAlgebra, Option<(Tensor<Rational>, Rational)>) {
    let all = named_lie_algebras();
    let cands: Vec<_> = all
        .into_iter()
        .filter(|(_, t)| t.shape()[0] <= max_dim)
        .collect();
    let (name, lie) = cands.choose(rng).expect("nonempty").clone();
    let d = lie.shape()[0];
    let cs = [r(1), r(-1), r(2), Rational::new(1, 2), r(0)];
    let c = cs.choose(rng).expect("nonempty").clone();
    let p = random_invertible(rng, d);
    let base = LieYamagutiAlgebra::from_lie_bracket(lie, &c).expect("Lie constants");
    let a = change_basis(&base, &p).expect("invertible");
    if rng.gen_bool(0.2) {
        let lts = LieYamagutiAlgebra::new(d, Tensor::zeros(&[d, d, d]), a.ternary().clone())
            .expect("antisymmetric");
        (format!("{name}/lts c={c}"), lts, None)
    } else {
        let bin = a.binary().clone();
        (format!("{name} c={c}"), a, Some((bin, c)))
    }
}

/// Seeded generator of valid pairs with `dim g ≤ max_dim`, `dim V ≤ 3`.
/// Every returned pair passes the axiom and representation checks.
pub fn random_valid_pair<R: Rng>(rng: &mut R, max_dim: usize) -> (String, LieYRepPair) {
    loop {
        let (name, a, lie) = random_algebra(rng, max_dim);
        let d = a.dim();
        let choice = rng.gen_range(0..4);
        let (label, rep) = match choice {
            0 => ("adjoint".to_string(), Representation::adjoint(&a)),
            1 => ("coadjoint".to_string(), Representation::coadjoint(&a)),
            2 => {
                let m = rng.gen_range(1..=2);
                (format!("zero({m})"), Representation::zero(d, m))
            }
            _ => {
                let Some((bin, c)) = lie else { continue };
                // Lie representations: coadjoint of the Lie algebra.
                let ad: Vec<Matrix> = (0..d)
                    .map(|i| {
                        let cols: Vec<Vec<Rational>> =
                            (0..d).map(|k| bin.fiber(&[i, k]).to_vec()).collect();
                        Matrix::from_columns(d, &cols).transpose().neg()
                    })
                    .collect();
                ("lie-coadjoint-induced".to_string(), lie_induced_rep(ad, &c))
            }
        };
        let Ok(pair) = LieYRepPair::new(a, rep) else { continue };
        if pair.is_valid() {
            return (format!("{name} / {label}"), pair);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_algebras_are_lie_yamaguti() {
        for (name, t) in named_lie_algebras() {
            for c in [r(1), r(0), r(-1)] {
                let a = LieYamagutiAlgebra::from_lie_bracket(t.clone(), &c).unwrap();
                assert!(a.is_lie_yamaguti(), "{name} c={c}");
            }
        }
        assert!(a2().is_lie_yamaguti());
    }

    #[test]
    fn random_pairs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let (_, p) = random_valid_pair(&mut rng, 3);
            assert!(p.is_valid());
        }
    }
}

/// `sl₂` in the basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = −2f`,
/// `[e,f] = h`, as a Lie-Yamaguti algebra with `⟪x,y,z⟫ = c[[x,y],z]`.
pub fn sl2(c: &Rational) -> LieYamagutiAlgebra {
    let br = lie_bracket(3, &[(0, 1, 1, r(2)), (0, 2, 2, r(-2)), (1, 2, 0, r(1))]);
    LieYamagutiAlgebra::from_lie_bracket(br, c).expect("valid constants")
}

/// The invariant form on [`sl2`] with `B(h,h) = 2`, `B(e,f) = 1`
/// (half the Killing form).
pub fn sl2_form() -> Matrix {
    Matrix::from_ints(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]])
}
