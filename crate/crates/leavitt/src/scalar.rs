//! Exact ground-field scalars: arbitrary-precision rationals and prime fields.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Descriptor of the coefficient field an algebra is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers, exact.
    Rationals,
    /// The prime field F_p.
    Prime(u64),
}

impl FieldSpec {
    /// Parses a field descriptor: `rat` or `fp:P` with P prime.
    pub fn parse(text: &str) -> Result<FieldSpec> {
        if text == "rat" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = text.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::input(format!("invalid prime field modulus `{p}`")))?;
            if !is_prime(p) {
                return Err(Error::input(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::input(format!(
            "unknown field descriptor `{text}` (expected `rat` or `fp:P`)"
        )))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: 1 % *p,
                modulus: *p,
            },
        }
    }

    /// The image of the integer `n` in this field.
    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Prime {
                    value: m,
                    modulus: *p,
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rat"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An element of the ground field.
///
/// Rationals are kept in lowest terms with positive denominator (enforced by
/// `BigRational`); prime-field residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, modulus } => *value == 1 % *modulus,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers pivot on nonzero entries.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rational(a.recip())
            }
            Scalar::Prime { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Prime {
                    value: mod_pow(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Strictly negative as a rational; prime-field residues are never
    /// negative (they print as representatives in [0, p)).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Parses a coefficient literal: integer or `p/q` (rationals), residue (prime fields).
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        match field {
            FieldSpec::Rationals => {
                if let Some((num, den)) = text.split_once('/') {
                    let n: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::input(format!("malformed scalar `{text}`")))?;
                    let d: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::input(format!("malformed scalar `{text}`")))?;
                    if d.is_zero() {
                        return Err(Error::input(format!("zero denominator in `{text}`")));
                    }
                    Ok(Scalar::Rational(BigRational::new(n, d)))
                } else {
                    let n: BigInt = text
                        .parse()
                        .map_err(|_| Error::input(format!("malformed scalar `{text}`")))?;
                    Ok(Scalar::Rational(BigRational::from_integer(n)))
                }
            }
            FieldSpec::Prime(p) => {
                if text.contains('/') {
                    let (num, den) = text.split_once('/').unwrap();
                    let a = Scalar::parse(num.trim(), field)?;
                    let b = Scalar::parse(den.trim(), field)?;
                    if b.is_zero() {
                        return Err(Error::input(format!("zero denominator in `{text}`")));
                    }
                    return Ok(a.div(&b));
                }
                let n: i64 = text
                    .parse()
                    .map_err(|_| Error::input(format!("malformed residue `{text}`")))?;
                Ok(FieldSpec::Prime(p).from_integer(n))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
