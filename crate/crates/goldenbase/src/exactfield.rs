//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Elements are stored as `a + b√5` with reduced arbitrary-precision
//! rational components, so equality is plain componentwise equality.
//! The golden ratio `α = (1+√5)/2` and its conjugate `β = (1−√5)/2`
//! satisfy `αβ = −1` and `α + β = 1`; integer powers of both are exact
//! values of this type. Fibonacci and Lucas numbers are produced by
//! integer fast doubling, independently of the field arithmetic.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Reduced arbitrary-precision rational (canonical: denominator > 0).
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero in Q(√5)")]
    DivisionByZero,
}

/// An element `a + b√5` of Q(√5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Q5 {
    pub a: Rational,
    pub b: Rational,
}

impl Q5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Q5 { a, b }
    }

    pub fn zero() -> Self {
        Q5::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Q5::new(Rational::one(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Q5::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    pub fn from_rational(q: Rational) -> Self {
        Q5::new(q, Rational::zero())
    }

    /// √5 = 0 + 1·√5.
    pub fn sqrt5() -> Self {
        Q5::new(Rational::zero(), Rational::one())
    }

    /// α = (1+√5)/2.
    pub fn alpha() -> Self {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        Q5::new(half.clone(), half)
    }

    /// β = (1−√5)/2 = −1/α.
    pub fn beta() -> Self {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        Q5::new(half.clone(), -half)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the √5-component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conj(&self) -> Self {
        Q5::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 5b²` (a rational).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    /// Multiplicative inverse, via the conjugate over the norm.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.norm();
        // The norm of a nonzero element is nonzero since √5 is irrational.
        debug_assert!(!n.is_zero());
        Ok(Q5::new(&self.a / &n, -&self.b / &n))
    }

    /// Exact integer power, binary exponentiation; negative exponents
    /// go through the inverse.
    pub fn pow(&self, k: i64) -> Result<Self, FieldError> {
        let (base, mut e) = if k < 0 {
            (self.inv()?, k.unsigned_abs())
        } else {
            (self.clone(), k as u64)
        };
        let mut acc = Q5::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Q5::new(&self.a * c, &self.b * c)
    }

    /// Sign of the real embedding (with √5 > 0): −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let sa = if self.a.is_zero() {
            0
        } else if self.a.is_positive() {
            1
        } else {
            -1
        };
        let sb = if self.b.is_zero() {
            0
        } else if self.b.is_positive() {
            1
        } else {
            -1
        };
        if sa >= 0 && sb >= 0 {
            return 1;
        }
        if sa <= 0 && sb <= 0 {
            return -1;
        }
        // Mixed signs: compare a² with 5b².
        let five = Rational::from_integer(BigInt::from(5));
        let lhs = &self.a * &self.a;
        let rhs = five * &self.b * &self.b;
        match (sa, lhs.cmp(&rhs)) {
            (1, std::cmp::Ordering::Greater) => 1,
            (1, std::cmp::Ordering::Less) => -1,
            (-1, std::cmp::Ordering::Greater) => -1,
            (-1, std::cmp::Ordering::Less) => 1,
            _ => 0, // |a| = |b|√5 impossible for nonzero rationals, but keep total
        }
    }

    /// True when the real embedding is ≥ that of `other`.
    pub fn ge(&self, other: &Q5) -> bool {
        (self - other).signum() >= 0
    }
}

/// Exact α^k for any integer k.
pub fn alpha_pow(k: i64) -> Q5 {
    // α is a unit, so the inverse always exists.
    Q5::alpha().pow(k).expect("alpha is invertible")
}

/// Exact β^k for any integer k.
pub fn beta_pow(k: i64) -> Q5 {
    Q5::beta().pow(k).expect("beta is invertible")
}

impl Add for &Q5 {
    type Output = Q5;
    fn add(self, rhs: &Q5) -> Q5 {
        Q5::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Q5 {
    type Output = Q5;
    fn sub(self, rhs: &Q5) -> Q5 {
        Q5::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Q5 {
    type Output = Q5;
    fn mul(self, rhs: &Q5) -> Q5 {
        let five = Rational::from_integer(BigInt::from(5));
        Q5::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &Q5 {
    type Output = Q5;
    fn neg(self) -> Q5 {
        Q5::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for Q5 {
    type Output = Q5;
    fn neg(self) -> Q5 {
        Q5::new(-self.a, -self.b)
    }
}

impl fmt::Display for Q5 {
    /// Canonical rendering "a+b√5" with reduced rationals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}√5", self.b);
        }
        if self.b.is_positive() {
            write!(f, "{}+{}√5", self.a, self.b)
        } else {
            write!(f, "{}{}√5", self.a, self.b)
        }
    }
}

impl fmt::Debug for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Fibonacci/Lucas pair (F_n, L_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibPair {
    pub f: BigInt,
    pub l: BigInt,
}

/// Exact (F_n, L_n) by integer fast doubling in O(log n) big-integer steps.
pub fn fib_lucas(n: u64) -> FibPair {
    let (f, f1) = fib_doubling(n);
    let l = BigInt::from(2) * f1 - &f;
    FibPair { f, l }
}

// Returns (F_n, F_{n+1}).
fn fib_doubling(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (f, f1) = fib_doubling(n >> 1);
    // F_{2k} = F_k (2F_{k+1} − F_k),  F_{2k+1} = F_k² + F_{k+1}²
    let two_f1_minus_f = BigInt::from(2) * &f1 - &f;
    let even = &f * &two_f1_minus_f;
    let odd = &f * &f + &f1 * &f1;
    if n & 1 == 0 {
        (even, odd)
    } else {
        let next = &even + &odd;
        (odd, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q5(an: i64, ad: i64, bn: i64, bd: i64) -> Q5 {
        Q5::new(
            Rational::new(BigInt::from(an), BigInt::from(ad)),
            Rational::new(BigInt::from(bn), BigInt::from(bd)),
        )
    }

    #[test]
    fn alpha_plus_beta_is_one() {
        assert_eq!(&Q5::alpha() + &Q5::beta(), Q5::one());
    }

    #[test]
    fn alpha_times_beta_is_minus_one() {
        assert_eq!(&Q5::alpha() * &Q5::beta(), Q5::from_int(-1));
    }

    #[test]
    fn alpha_squared_is_alpha_plus_one() {
        let a2 = &Q5::alpha() * &Q5::alpha();
        assert_eq!(a2, q5(3, 2, 1, 2));
        assert_eq!(a2, &Q5::alpha() + &Q5::one());
    }

    #[test]
    fn add_identity() {
        let x = q5(7, 3, -2, 5);
        assert_eq!(&x + &Q5::zero(), x);
    }

    #[test]
    fn add_by_components() {
        assert_eq!(&q5(1, 2, 1, 2) + &q5(1, 2, -1, 2), Q5::from_int(1));
    }

    #[test]
    fn inv_alpha_is_minus_beta() {
        assert_eq!(Q5::alpha().inv().unwrap(), q5(-1, 2, 1, 2));
    }

    #[test]
    fn inv_sqrt5() {
        assert_eq!(Q5::sqrt5().inv().unwrap(), q5(0, 1, 1, 5));
    }

    #[test]
    fn inv_beta_squared_is_alpha_squared() {
        let b2 = beta_pow(2);
        let got = b2.inv().unwrap();
        assert_eq!(got, q5(3, 2, 1, 2));
        assert_eq!(&got * &b2, Q5::one());
    }

    #[test]
    fn inv_zero_errors() {
        assert_eq!(Q5::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn alpha_pow_examples() {
        assert_eq!(alpha_pow(0), Q5::one());
        assert_eq!(alpha_pow(2), q5(3, 2, 1, 2));
        assert_eq!(alpha_pow(-1), q5(-1, 2, 1, 2)); // −β
    }

    #[test]
    fn beta_pow_examples() {
        assert_eq!(beta_pow(2), q5(3, 2, -1, 2));
        assert_eq!(beta_pow(-1), q5(-1, 2, -1, 2)); // −α
        // α⁶ − β⁶ = F₆√5 = 8√5
        assert_eq!(&alpha_pow(6) - &beta_pow(6), q5(0, 1, 8, 1));
    }

    #[test]
    fn fib_lucas_examples() {
        assert_eq!(fib_lucas(0), FibPair { f: BigInt::from(0), l: BigInt::from(2) });
        assert_eq!(fib_lucas(6).l, BigInt::from(18));
        assert_eq!(fib_lucas(8).f, BigInt::from(21));
        assert_eq!(fib_lucas(12).f, BigInt::from(144));
    }

    #[test]
    fn binet_consistency_small() {
        for n in 0..=60i64 {
            let p = fib_lucas(n as u64);
            let an = alpha_pow(n);
            let bn = beta_pow(n);
            assert_eq!(&an + &bn, Q5::from_rational(Rational::from_integer(p.l.clone())));
            assert_eq!(
                &an - &bn,
                Q5::new(Rational::zero(), Rational::from_integer(p.f.clone()))
            );
        }
    }

    #[test]
    fn fibpair_invariant() {
        // L_n² − 5F_n² = 4(−1)^n
        for n in 0..=100u64 {
            let p = fib_lucas(n);
            let lhs = &p.l * &p.l - BigInt::from(5) * &p.f * &p.f;
            let rhs = if n % 2 == 0 { BigInt::from(4) } else { BigInt::from(-4) };
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn signum_mixed() {
        assert_eq!(Q5::beta().signum(), -1);
        assert_eq!(Q5::alpha().signum(), 1);
        assert_eq!(q5(2, 1, -1, 1).signum(), -1); // 2 − √5 < 0
        assert_eq!(q5(3, 1, -1, 1).signum(), 1); // 3 − √5 > 0
        assert_eq!(Q5::zero().signum(), 0);
    }

    fn arb_q5() -> impl Strategy<Value = Q5> {
        (
            -50i64..50,
            1i64..20,
            -50i64..50,
            1i64..20,
        )
            .prop_map(|(an, ad, bn, bd)| q5(an, ad, bn, bd))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_q5(), y in arb_q5(), z in arb_q5()) {
            // associativity and commutativity
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            // distributivity
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            // inverses
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), Q5::one());
            }
            prop_assert_eq!(&x + &(-&x), Q5::zero());
        }

        #[test]
        fn pow_additivity(k in -20i64..20, m in -20i64..20) {
            prop_assert_eq!(&alpha_pow(k) * &alpha_pow(m), alpha_pow(k + m));
        }
    }
}
