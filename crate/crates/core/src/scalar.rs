//! Exact scalars: arbitrary-precision rationals in characteristic zero and
//! reduced residues modulo a prime otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_i128(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((v % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn zero(characteristic: u64) -> Self {
        Self::from_i64(0, characteristic)
    }

    pub fn one(characteristic: u64) -> Self {
        Self::from_i64(1, characteristic)
    }

    pub fn from_i64(v: i64, characteristic: u64) -> Self {
        if characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            Scalar::Modular { value: reduce_i128(v as i128, characteristic), modulus: characteristic }
        }
    }

    pub fn from_bigint(v: &BigInt, characteristic: u64) -> Self {
        if characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(v.clone()))
        } else {
            Scalar::Modular { value: reduce_bigint(v, characteristic), modulus: characteristic }
        }
    }

    /// `num / den` in the field; fails when `den` vanishes there.
    pub fn from_fraction(num: &BigInt, den: &BigInt, characteristic: u64) -> Result<Self> {
        let den = Self::from_bigint(den, characteristic);
        Self::from_bigint(num, characteristic).checked_div(&den)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Modular { modulus, .. } => *modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            _ if self.is_zero() => Err(AlgebraError::DivisionByZero),
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Modular { value, modulus } => {
                Ok(Scalar::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
            }
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), exp as usize)),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: pow_mod(*value, exp as u64, *modulus), modulus: *modulus }
            }
        }
    }

    /// Integer `k` viewed in the same field as `self`.
    pub fn same_field(&self, k: i64) -> Self {
        Self::from_i64(k, self.characteristic())
    }

    /// Rational value when in characteristic zero.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }
}

fn check_same(a: &Scalar, b: &Scalar) {
    assert_eq!(a.characteristic(), b.characteristic(), "scalar characteristic mismatch");
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u128 + *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u128 * *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse() {
        for p in [2u64, 3, 5, 7, 101] {
            for v in 1..p {
                let a = Scalar::from_i64(v as i64, p);
                assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(Scalar::zero(0).inv(), Err(AlgebraError::DivisionByZero));
        assert_eq!(Scalar::from_i64(4, 2).inv(), Err(AlgebraError::DivisionByZero));
        let half = Scalar::from_fraction(&BigInt::from(1), &BigInt::from(2), 2);
        assert!(half.is_err());
    }

    #[test]
    fn negative_residues_reduce() {
        assert_eq!(Scalar::from_i64(-1, 5), Scalar::from_i64(4, 5));
        assert_eq!(-Scalar::from_i64(0, 5), Scalar::zero(5));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
