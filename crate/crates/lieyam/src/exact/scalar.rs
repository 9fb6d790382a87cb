use std::fmt;

use super::poly::Poly;
use super::rational::Rational;

/// Commutative ring of exact scalars. Implemented by [`Rational`] and by
/// [`Poly`] (polynomials in the deformation parameter `t`), so every
/// structure check can run unchanged on deformed data.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = Scalar::add(self, o);
    }

    fn sub_assign(&mut self, o: &Self) {
        *self = Scalar::sub(self, o);
    }

    /// `self += a * b`, skipping the product when either factor is zero.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = Scalar::add(self, &a.mul(b));
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r))
    }

    /// Lowest power of `t` with a nonzero coefficient; `None` for zero.
    /// Constants (rationals) report order 0.
    fn t_order(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(0)
        }
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
}

/// `true` iff `s` is the canonical zero of its ring.
pub fn poly_is_zero<S: Scalar>(s: &S) -> bool {
    s.is_zero()
}

impl Scalar for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self.add_poly(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add_poly(&o.neg_poly())
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_poly(o)
    }
    fn neg(&self) -> Self {
        self.neg_poly()
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
    fn t_order(&self) -> Option<usize> {
        self.first_nonzero().map(|(k, _)| k)
    }
}
