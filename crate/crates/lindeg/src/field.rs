//! Exact scalars: arbitrary-precision rationals and prime fields.
//! No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// An exact field element. Implementations: `BigRational` and `Fp`.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Scalar for BigRational {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as One>::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Element of the prime field F_p. The modulus travels with the value so that
/// matrices stay generic over `Scalar`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub val: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(val: i64, p: u64) -> Self {
        let m = val.rem_euclid(p as i64) as u64;
        Fp { val: m, p }
    }
}

impl Scalar for Fp {
    fn zero(&self) -> Self {
        Fp { val: 0, p: self.p }
    }
    fn one(&self) -> Self {
        Fp {
            val: 1 % self.p,
            p: self.p,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val + rhs.val) % self.p,
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val + self.p - rhs.val) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val as u128 * rhs.val as u128 % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            val: (self.p - self.val) % self.p,
            p: self.p,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.val == 0 {
            return None;
        }
        // Fermat: p is prime.
        let mut result: u64 = 1;
        let mut base = self.val;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = (result as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            e >>= 1;
        }
        Some(Fp {
            val: result,
            p: self.p,
        })
    }
    fn is_zero(&self) -> bool {
        self.val == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse() {
        for p in [2u64, 3, 5, 101] {
            for v in 1..p.min(20) {
                let x = Fp { val: v, p };
                let inv = x.inv().unwrap();
                assert_eq!(x.mul(&inv).val, 1 % p);
            }
        }
    }
}
