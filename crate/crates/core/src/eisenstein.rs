//! Exact arithmetic in ℤ[ω], ω = e^{2πi/3}, in the basis {1, ω} with
//! ω² = −1−ω.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// a + bω with arbitrary-precision integer a, b.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        EisensteinInt::new(0, 0)
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    pub fn omega() -> Self {
        EisensteinInt::new(0, 1)
    }

    /// ω^k for k mod 3.
    pub fn omega_pow(k: u32) -> Self {
        match k % 3 {
            0 => Self::one(),
            1 => Self::omega(),
            _ => EisensteinInt::new(-1, -1),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        EisensteinInt::new(a, 0)
    }

    /// Complex conjugate: conj(a+bω) = (a−b) − bω.
    pub fn conj(&self) -> Self {
        EisensteinInt { a: &self.a - &self.b, b: -&self.b }
    }

    /// z·conj(z) = a² − ab + b², a non-negative rational integer.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The value as a rational integer; fails if the ω-component is nonzero.
    pub fn as_rational_integer(&self) -> Result<BigInt> {
        if self.b.is_zero() {
            Ok(self.a.clone())
        } else {
            Err(Error::NonRealValue(self.a.clone(), self.b.clone()))
        }
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { a: -&self.a, b: -&self.b }
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    // (a+bω)(c+dω) = (ac−bd) + (ad+bc−bd)ω
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        let bd = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - &bd,
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}w", self.b)
        } else if self.b.is_one() {
            write!(f, "{}+w", self.a)
        } else if self.b.sign() == num_bigint::Sign::Minus {
            write!(f, "{}{}w", self.a, self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eis(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn omega_squared() {
        let w = EisensteinInt::omega();
        assert_eq!(&w * &w, eis(-1, -1));
        assert_eq!(EisensteinInt::omega_pow(2), eis(-1, -1));
    }

    #[test]
    fn omega_cubed_is_one() {
        let w = EisensteinInt::omega();
        assert_eq!(&(&w * &w) * &w, EisensteinInt::one());
    }

    #[test]
    fn omega_sum_vanishes() {
        let s = &(&EisensteinInt::one() + &EisensteinInt::omega())
            + &EisensteinInt::omega_pow(2);
        assert!(s.is_zero());
    }

    #[test]
    fn multiplicative_identity() {
        let z = eis(5, -3);
        assert_eq!(&EisensteinInt::one() * &z, z);
    }

    #[test]
    fn hand_expanded_product() {
        // (1−ω)(2+ω) = 3
        assert_eq!(&eis(1, -1) * &eis(2, 1), eis(3, 0));
    }

    #[test]
    fn conjugation() {
        assert_eq!(EisensteinInt::omega().conj(), eis(-1, -1));
        assert_eq!(eis(7, 0).conj(), eis(7, 0));
        let z = eis(4, -9);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn norm_of_one_minus_omega() {
        assert_eq!(eis(1, -1).norm(), BigInt::from(3));
        assert_eq!(
            (&eis(1, -1) * &eis(1, -1).conj()).as_rational_integer().unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn as_rational_integer_cases() {
        assert_eq!(eis(7, 0).as_rational_integer().unwrap(), BigInt::from(7));
        assert_eq!(eis(0, 0).as_rational_integer().unwrap(), BigInt::from(0));
        assert!(matches!(eis(1, 1).as_rational_integer(), Err(Error::NonRealValue(_, _))));
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -100i64..100, b in -100i64..100,
                                  c in -100i64..100, d in -100i64..100) {
            let (x, y) = (eis(a, b), eis(c, d));
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn times_conjugate_is_real(a in -1000i64..1000, b in -1000i64..1000) {
            let x = eis(a, b);
            let n = &x * &x.conj();
            prop_assert!(n.b.is_zero());
            prop_assert_eq!(n.a, x.norm());
            prop_assert!(x.norm() >= BigInt::from(0));
        }

        #[test]
        fn conj_is_ring_hom(a in -100i64..100, b in -100i64..100,
                            c in -100i64..100, d in -100i64..100) {
            let (x, y) = (eis(a, b), eis(c, d));
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        }
    }
}
