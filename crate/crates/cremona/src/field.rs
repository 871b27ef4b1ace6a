//! Coefficient fields: prime fields F_p (p < 2^31) and the rationals.
//!
//! A [`FieldSpec`] owns the arithmetic; a [`Coeff`] is a bare element.
//! F_p elements are stored reduced in `[0, p)`; rationals are kept in
//! lowest terms with positive denominator (the `BigRational` invariant).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field: characteristic 0 (rationals) or a prime p < 2^31.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

/// An element of a [`FieldSpec`]. All arithmetic goes through the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Rat(Box<BigRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    TooLarge(u64),
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(n) => write!(f, "characteristic {} is not prime", n),
            FieldError::TooLarge(n) => write!(f, "characteristic {} exceeds 2^31", n),
            FieldError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for FieldError {}

/// Deterministic Miller-Rabin, valid for all n < 3_215_031_751 (covers 2^31).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let pow_mod = |mut base: u64, mut exp: u64, m: u64| -> u64 {
        let mut acc = 1u64;
        base %= m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl FieldSpec {
    /// Build a field from a characteristic: 0 for the rationals, otherwise
    /// a prime below 2^31 (primality is verified here).
    pub fn new(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic == 0 {
            return Ok(FieldSpec::Rational);
        }
        if characteristic >= (1 << 31) {
            return Err(FieldError::TooLarge(characteristic));
        }
        if !is_prime_u64(characteristic) {
            return Err(FieldError::NotPrime(characteristic));
        }
        Ok(FieldSpec::Prime(characteristic))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rational => Coeff::Rat(Box::new(BigRational::zero())),
            FieldSpec::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldSpec::Rational => Coeff::Rat(Box::new(BigRational::one())),
            FieldSpec::Prime(_) => Coeff::Fp(1),
        }
    }

    /// Image of a signed integer in the field.
    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldSpec::Rational => Coeff::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::Prime(p) => Coeff::Fp(n.rem_euclid(*p as i64) as u64),
        }
    }

    /// Image of an arbitrary-precision integer in the field.
    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            FieldSpec::Rational => Coeff::Rat(Box::new(BigRational::from_integer(n.clone()))),
            FieldSpec::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let digits = r.to_u64_digits().1;
                Coeff::Fp(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            (FieldSpec::Rational, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x + &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + p - y) % p),
            (FieldSpec::Rational, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x - &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rational, Coeff::Rat(x)) => Coeff::Rat(Box::new(-&**x)),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(x * y % p),
            (FieldSpec::Rational, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x * &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        match (self, a) {
            (FieldSpec::Prime(p), Coeff::Fp(x)) => Ok(Coeff::Fp(mod_inverse(*x, *p))),
            (FieldSpec::Rational, Coeff::Rat(x)) => Ok(Coeff::Rat(Box::new(x.recip()))),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Inverse of x mod p by extended Euclid. Requires 0 < x < p, p prime.
fn mod_inverse(x: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, x as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    s0.rem_euclid(p as i64) as u64
}

impl Coeff {
    /// Render the "absolute value" for the printer; the printer folds the
    /// sign reported by [`Coeff::prints_negative`] into `-`. F_p elements are
    /// stored in `[0, p)` but print as symmetric representatives
    /// `(-p/2, p/2]`, the customary readable form; parsing restores the
    /// canonical value, so printing round-trips exactly.
    pub fn render_abs(&self, field: &FieldSpec) -> String {
        match self {
            Coeff::Fp(x) => {
                let p = field.characteristic();
                if *x > p / 2 {
                    (p - x).to_string()
                } else {
                    x.to_string()
                }
            }
            Coeff::Rat(r) => {
                let n = if r.is_negative() { -r.numer() } else { r.numer().clone() };
                if r.denom().is_one() {
                    n.to_string()
                } else {
                    format!("{}/{}", n, r.denom())
                }
            }
        }
    }

    /// Whether the printer should fold this coefficient into a `-` sign.
    pub fn prints_negative(&self, field: &FieldSpec) -> bool {
        match self {
            Coeff::Fp(x) => *x > field.characteristic() / 2,
            Coeff::Rat(r) => r.is_negative(),
        }
    }
}
