use std::fmt;

use super::rational::Rational;

/// Univariate polynomial in `t` with rational coefficients, lowest degree
/// first. Trailing zeros are always stripped, so the zero polynomial is the
/// empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Lowest-degree nonzero coefficient, with its degree.
    pub fn first_nonzero(&self) -> Option<(usize, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub(crate) fn add_poly(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), o.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Self::from_coeffs(out)
    }

    pub(crate) fn neg_poly(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub(crate) fn mul_poly(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::from_coeffs(out)
    }
}

impl From<Rational> for Poly {
    fn from(r: Rational) -> Self {
        Poly::constant(r)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct PolyWire {
    poly: Vec<Rational>,
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyWire {
            poly: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        Ok(Poly::from_coeffs(w.poly))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;
    use crate::exact::scalar::Scalar;

    #[test]
    fn cancellation_is_structural_zero() {
        let t = Poly::t();
        assert!(Scalar::sub(&t, &t).is_zero());
        let one = <Poly as Scalar>::one();
        let lhs = Scalar::mul(&Scalar::add(&one, &t), &Scalar::add(&one, &t));
        let rhs = Poly::from_coeffs(vec![q(1, 1), q(2, 1), q(1, 1)]);
        assert!(Scalar::sub(&lhs, &rhs).is_zero());
    }

    #[test]
    fn json_form() {
        let p = Poly::from_coeffs(vec![q(1, 1), q(0, 1), q(-1, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"poly":["1","0","-1/2"]}"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "1 - 1/2*t^2");
    }
}
