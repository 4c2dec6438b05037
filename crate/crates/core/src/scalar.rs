//! Coefficient fields.
//!
//! Every algebraic object in the crate is generic over a [`Scalar`]: a
//! commutative field-like type with a conjugation. The exact default is
//! [`Coefficient`], the Gaussian rationals `Q(i)`; floating point types are
//! supported for experimentation but compare with `==`, so identities that
//! hold exactly over `Q(i)` may fail under rounding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

/// Gaussian rational `p/q + (r/s)·i`, always in lowest terms.
pub type Coefficient = Complex<BigRational>;

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Complex conjugation; the identity on real types.
    fn conj(&self) -> Self;

    /// Splits off a leading minus sign for display: `(true, |x|)` when `x`
    /// is a negative real number.
    fn split_sign(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// Writes the value in the surface syntax accepted by the expression
    /// parser. Non-atomic values are parenthesized.
    fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

macro_rules! real_float {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn conj(&self) -> Self {
                *self
            }
            fn split_sign(&self) -> (bool, Self) {
                (*self < 0.0, self.abs())
            }
            fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if *self < 0.0 {
                    write!(f, "({})", self)
                } else {
                    write!(f, "{}", self)
                }
            }
        }
    )*};
}
real_float!(f32, f64);

fn write_ratio<T>(r: &Ratio<T>, f: &mut fmt::Formatter<'_>) -> fmt::Result
where
    T: Clone + num_integer::Integer + fmt::Display,
{
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

macro_rules! real_ratio {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn conj(&self) -> Self {
                self.clone()
            }
            fn split_sign(&self) -> (bool, Self) {
                (self.is_negative(), self.abs())
            }
            fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.is_negative() {
                    f.write_str("(")?;
                    write_ratio(self, f)?;
                    f.write_str(")")
                } else {
                    write_ratio(self, f)
                }
            }
        }
    )*};
}
real_ratio!(i64, BigInt);

/// Complex scalars over any real [`Scalar`] that can also report its sign.
impl<T> Scalar for Complex<T>
where
    T: Scalar + num_traits::Num,
{
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn split_sign(&self) -> (bool, Self) {
        if self.im.is_zero() {
            let (neg, re) = self.re.split_sign();
            (neg, Complex::new(re, T::zero()))
        } else {
            (false, self.clone())
        }
    }

    fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return self.re.write_scalar(f);
        }
        if self.re.is_zero() {
            return write_imaginary(&self.im, f, true);
        }
        f.write_str("(")?;
        self.re.write_scalar(f)?;
        let (neg, mag) = self.im.split_sign();
        f.write_str(if neg { "-" } else { "+" })?;
        write_imaginary(&mag, f, false)?;
        f.write_str(")")
    }
}

fn write_imaginary<T: Scalar>(im: &T, f: &mut fmt::Formatter<'_>, standalone: bool) -> fmt::Result {
    let (neg, mag) = im.split_sign();
    if neg && standalone {
        f.write_str("(-")?;
        write_imaginary(&mag, f, false)?;
        return f.write_str(")");
    }
    if im.is_one() {
        f.write_str("i")
    } else {
        im.write_scalar(f)?;
        f.write_str("*i")
    }
}

/// Adapter so any scalar can be used with `{}`.
pub struct Show<'a, S>(pub &'a S);

impl<S: Scalar> fmt::Display for Show<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_scalar(f)
    }
}

/// The rational `p/q` as an exact coefficient. Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> Coefficient {
    Complex::new(BigRational::new(p.into(), q.into()), BigRational::zero())
}

/// The integer `z` as an exact coefficient.
pub fn integer(z: i64) -> Coefficient {
    rational(z, 1)
}

/// `re + im·i` with integer parts.
pub fn gaussian(re: i64, im: i64) -> Coefficient {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

/// The imaginary unit.
pub fn imaginary_unit() -> Coefficient {
    gaussian(0, 1)
}

/// True for a real, nonnegative exact coefficient.
pub fn is_nonnegative_real(c: &Coefficient) -> bool {
    c.im.is_zero() && !c.re.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show<S: Scalar>(s: &S) -> String {
        format!("{}", Show(s))
    }

    #[test]
    fn gaussian_rationals_reduce_and_conjugate() {
        let c = Complex::new(BigRational::new(6.into(), 4.into()), BigRational::new((-2).into(), 8.into()));
        assert_eq!(show(&c), "(3/2-1/4*i)");
        assert_eq!(show(&c.conj()), "(3/2+1/4*i)");
        assert_eq!(show(&rational(-3, 2)), "(-3/2)");
        assert_eq!(show(&imaginary_unit()), "i");
        assert_eq!(show(&gaussian(0, -2)), "(-2*i)");
    }

    #[test]
    fn split_sign_only_for_negative_reals() {
        assert_eq!(rational(-1, 3).split_sign(), (true, rational(1, 3)));
        assert!(!gaussian(-1, 1).split_sign().0);
        assert_eq!((-2.5f64).split_sign(), (true, 2.5));
    }
}
