//! Gaussian rationals: exact complex numbers with rational real and
//! imaginary parts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        GaussianRational { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `p/q` as a real rational.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// `(a + b i)/q`.
    pub fn from_parts(a: i64, b: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(a), BigInt::from(q)),
            im: BigRational::new(BigInt::from(b), BigInt::from(q)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `|z|^2`, a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm_sq();
        GaussianRational { re: &self.re / &n, im: -&self.im / &n }
    }

    /// Exact square root when the value is a square in `Q(i)` of a simple
    /// form (real square of a rational, or negative of one).  Used only for
    /// solving the quadratic `p^2 - alpha p - 1 = 0` at rational parameter
    /// points; returns `None` when no rational-form square root exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.im.is_zero() {
            if self.re.is_positive() {
                let r = ratio_sqrt(&self.re)?;
                return Some(GaussianRational { re: r, im: BigRational::zero() });
            } else {
                let r = ratio_sqrt(&(-self.re.clone()))?;
                return Some(GaussianRational { re: BigRational::zero(), im: r });
            }
        }
        None
    }
}

/// Square root of a positive rational when it is a perfect square.
fn ratio_sqrt(r: &BigRational) -> Option<BigRational> {
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}{}*i)", self.re, self.im)
        } else {
            write!(f, "({}+{}*i)", self.re, self.im)
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> Self {
        (&self).mul(&rhs.inv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_spot_checks() {
        let z = GaussianRational::from_parts(3, 4, 5); // (3+4i)/5
        let w = GaussianRational::from_parts(-1, 2, 7);
        assert_eq!(z.clone() * z.inv(), GaussianRational::one());
        assert_eq!(
            (&z * &w).conj(),
            (&z.conj() * &w.conj())
        );
        assert_eq!(z.norm_sq(), (&z * &z.conj()).re);
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn exact_square_roots() {
        // 9/4 -> 3/2 ; -4 -> 2i ; 2 has none.
        assert_eq!(
            GaussianRational::from_ratio(9, 4).sqrt_exact(),
            Some(GaussianRational::from_ratio(3, 2))
        );
        assert_eq!(
            GaussianRational::from_int(-4).sqrt_exact(),
            Some(GaussianRational::from_parts(0, 2, 1))
        );
        assert!(GaussianRational::from_int(2).sqrt_exact().is_none());
    }
}
