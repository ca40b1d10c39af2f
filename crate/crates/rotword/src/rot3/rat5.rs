//! Rationals with denominator a power of five, kept normalized.
//!
//! Entries of rotations through multiples of arctan(4/3) are exactly these:
//! cos and sin of c·arctan(4/3) are integers divided by 5^|c|. Normalization
//! keeps the numerator prime to 5 whenever the exponent is positive, which
//! makes equality structural and mod-5 reasoning immediate.

use super::Scalar;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat5 {
    num: BigInt,
    exp5: u32,
}

impl fmt::Debug for Rat5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat5({self})")
    }
}

impl fmt::Display for Rat5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp5 == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/5^{}", self.num, self.exp5)
        }
    }
}

impl Rat5 {
    /// num / 5^exp5, normalized.
    pub fn new(num: BigInt, exp5: u32) -> Self {
        let mut r = Rat5 { num, exp5 };
        r.normalize();
        r
    }

    pub fn from_integer(n: i64) -> Self {
        Rat5 {
            num: BigInt::from(n),
            exp5: 0,
        }
    }

    fn normalize(&mut self) {
        let five = BigInt::from(5);
        while self.exp5 > 0 && (&self.num % &five).is_zero() {
            self.num /= &five;
            self.exp5 -= 1;
        }
        if self.num.is_zero() {
            self.exp5 = 0;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exp5(&self) -> u32 {
        self.exp5
    }

    /// The value multiplied by 5^k.
    pub fn scaled_by_pow5(&self, k: u32) -> Rat5 {
        if self.exp5 >= k {
            Rat5 {
                num: self.num.clone(),
                exp5: self.exp5 - k,
            }
        } else {
            Rat5 {
                num: &self.num * BigInt::from(5).pow(k - self.exp5),
                exp5: 0,
            }
        }
    }

    /// The numerator, provided the value is an integer.
    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.exp5 == 0).then_some(&self.num)
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.num.to_f64().expect("numerator out of f64 range");
        n / 5f64.powi(self.exp5 as i32)
    }
}

impl Scalar for Rat5 {
    fn add(&self, other: &Self) -> Self {
        let e = self.exp5.max(other.exp5);
        let five = BigInt::from(5);
        let a = &self.num * five.pow(e - self.exp5);
        let b = &other.num * five.pow(e - other.exp5);
        Rat5::new(a + b, e)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&Scalar::neg(other))
    }

    fn mul(&self, other: &Self) -> Self {
        Rat5::new(&self.num * &other.num, self.exp5 + other.exp5)
    }

    fn neg(&self) -> Self {
        Rat5 {
            num: -&self.num,
            exp5: self.exp5,
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.exp5 == 0 && self.num == BigInt::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_cancels_fives() {
        let r = Rat5::new(BigInt::from(50), 2);
        assert_eq!(r.numerator(), &BigInt::from(2));
        assert_eq!(r.exp5(), 0);
        let r = Rat5::new(BigInt::from(10), 2);
        assert_eq!(r.numerator(), &BigInt::from(2));
        assert_eq!(r.exp5(), 1);
        let z = Rat5::new(BigInt::zero(), 7);
        assert!(Scalar::is_zero(&z));
        assert_eq!(z.exp5(), 0);
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let a = Rat5::new(BigInt::from(3), 1); // 3/5
        let b = Rat5::new(BigInt::from(4), 1); // 4/5
        assert_eq!(a.add(&b), Rat5::new(BigInt::from(7), 1));
        assert_eq!(a.mul(&b), Rat5::new(BigInt::from(12), 2));
        assert_eq!(a.sub(&a), Rat5::from_integer(0));
        // 3/5 + 2 = 13/5
        assert_eq!(
            a.add(&Rat5::from_integer(2)),
            Rat5::new(BigInt::from(13), 1)
        );
        // (3/5)(4/5) + (4/5)(-3/5) = 0
        let zero = a.mul(&b).add(&b.mul(&Scalar::neg(&a)));
        assert!(Scalar::is_zero(&zero));
    }

    #[test]
    fn pow5_scaling_produces_integers() {
        let a = Rat5::new(BigInt::from(-7), 2);
        assert!(a.as_integer().is_none());
        let scaled = a.scaled_by_pow5(2);
        assert_eq!(scaled.as_integer(), Some(&BigInt::from(-7)));
        let over = a.scaled_by_pow5(3);
        assert_eq!(over.as_integer(), Some(&BigInt::from(-35)));
    }
}
