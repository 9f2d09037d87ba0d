//! Exact scalar fields.
//!
//! Everything in the algebra, linear algebra and Gröbner layers is generic
//! over [`Field`]. Only exact fields are supported: equality tests are used
//! for zero-detection throughout, which rules out floating point.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};

/// An exact field of characteristic zero.
pub trait Field:
    Num + Clone + Eq + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    /// Sign used only for presentation (leading minus signs).
    fn is_neg(&self) -> bool;

    /// Rescales a row in place so that its entries are "integral" for the
    /// field's notion of integrality, preserving the row's span. Used before
    /// fraction-free elimination; the default leaves the row untouched.
    fn clear_denominators(_row: &mut [Self]) {}

    /// Quotient `self / rhs` where `rhs` is known to divide `self`.
    fn exact_div(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }
}

macro_rules! impl_ratio_field {
    ($int:ty) => {
        impl Field for Ratio<$int> {
            fn from_int(v: i64) -> Self {
                Ratio::from_integer(<$int>::from(v))
            }

            fn is_neg(&self) -> bool {
                Signed::is_negative(self)
            }

            fn clear_denominators(row: &mut [Self]) {
                let mut lcm = <$int>::one();
                let mut content = <$int>::zero();
                for x in row.iter() {
                    if !x.is_zero() {
                        lcm = lcm.lcm(x.denom());
                    }
                }
                for x in row.iter_mut() {
                    *x = x.clone() * Ratio::from_integer(lcm.clone());
                    content = content.gcd(x.numer());
                }
                if !content.is_zero() && !content.is_one() {
                    let c = Ratio::from_integer(content);
                    for x in row.iter_mut() {
                        *x = x.clone() / c.clone();
                    }
                }
            }
        }
    };
}

impl_ratio_field!(BigInt);
impl_ratio_field!(i64);
impl_ratio_field!(i128);

/// Signed exact fields that can report a sign, needed for discriminants and
/// root isolation.
pub trait OrderedField: Field + PartialOrd + Signed {}

impl<T> OrderedField for T where T: Field + PartialOrd + Signed {}

/// Integer or `p/q` rendering, always in lowest terms.
pub fn fmt_rational(q: &Ratio<BigInt>) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integer-valued rational.
pub fn q(v: i64) -> Ratio<BigInt> {
    Ratio::from_integer(BigInt::from(v))
}

/// `n/d` as a normalized rational. Panics on `d == 0`.
pub fn qf(n: i64, d: i64) -> Ratio<BigInt> {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn clearing_denominators_keeps_direction() {
        let mut row = vec![qf(1, 2), qf(-1, 3), q(0)];
        Field::clear_denominators(&mut row);
        assert_eq!(row, vec![q(3), q(-2), q(0)]);

        let mut row = vec![Rational64::new(4, 1), Rational64::new(6, 1)];
        Field::clear_denominators(&mut row);
        assert_eq!(row, vec![Rational64::from_integer(2), Rational64::from_integer(3)]);
    }

    #[test]
    fn rationals_are_normalized() {
        let x = qf(6, -4);
        assert_eq!(fmt_rational(&x), "-3/2");
        assert_eq!(fmt_rational(&q(0)), "0");
        assert_eq!(*q(0).denom(), BigInt::from(1));
    }
}
