//! Exact coefficient fields: arbitrary-precision rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The coefficient field of a computation: `Q` or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => FieldElem::Mod(0),
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rat(BigRational::one()),
            FieldSpec::Prime(_) => FieldElem::Mod(1),
        }
    }

    /// Image of an integer in the field.
    pub fn from_int(&self, n: i64) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => FieldElem::Mod(n.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (FieldSpec::Rationals, FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x + y),
            (FieldSpec::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => {
                FieldElem::Mod((x + y) % p)
            }
            _ => panic!("field element does not match field"),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rat(x)) => FieldElem::Rat(-x),
            (FieldSpec::Prime(p), FieldElem::Mod(x)) => FieldElem::Mod((p - x) % p),
            _ => panic!("field element does not match field"),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (FieldSpec::Rationals, FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x * y),
            (FieldSpec::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => {
                // p < 2^32 is ample for every coefficient field we use
                FieldElem::Mod((x * y) % p)
            }
            _ => panic!("field element does not match field"),
        }
    }

    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                FieldElem::Rat(x.recip())
            }
            (FieldSpec::Prime(p), FieldElem::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                FieldElem::Mod(mod_inverse(*x, *p))
            }
            _ => panic!("field element does not match field"),
        }
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul(a, &self.inv(b))
    }
}

/// An element of `Q` or of `F_p`, tagged by representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rat(BigRational),
    Mod(u64),
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(x) => x.is_zero(),
            FieldElem::Mod(x) => *x == 0,
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "element not invertible mod p");
    s0.rem_euclid(p as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn characteristic_must_be_prime() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(7).is_ok());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::Rationals;
        let third = f.div(&f.one(), &f.from_int(3));
        let sum = f.add(&f.add(&third, &third), &third);
        assert_eq!(sum, f.one());
    }

    proptest! {
        // Field axioms on random elements of F_p for the small primes the
        // homology pipeline actually uses.
        #[test]
        fn prime_field_axioms(pidx in 0usize..4, a in 0u64..1000, b in 0u64..1000, c in 0u64..1000) {
            let p = [2u64, 3, 5, 7][pidx];
            let f = FieldSpec::Prime(p);
            let (a, b, c) = (FieldElem::Mod(a % p), FieldElem::Mod(b % p), FieldElem::Mod(c % p));
            // associativity
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            // commutativity and distributivity
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            // identities and inverses
            prop_assert_eq!(f.add(&a, &f.zero()), a.clone());
            prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
            prop_assert!(f.add(&a, &f.neg(&a)).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
            }
        }
    }
}
