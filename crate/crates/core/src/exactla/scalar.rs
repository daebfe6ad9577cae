//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field, so residue products fit in `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    Rationals,
    Prime(u64),
}

impl FieldDesc {
    /// Builds `GF(p)`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^32")));
        }
        Ok(FieldDesc::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero(self)
    }

    pub fn one(self) -> Scalar {
        Scalar::one(self)
    }

    pub fn int(self, n: i64) -> Scalar {
        Scalar::from_int(self, n)
    }

    /// `Q` or `F <p>`, matching the structure-file field line.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldDesc::Rationals);
        }
        let rest = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix('F'))
            .map(str::trim)
            .ok_or_else(|| Error::InvalidField(format!("unknown field `{s}`")))?;
        let p = rest
            .parse::<u64>()
            .map_err(|_| Error::InvalidField(format!("bad modulus `{rest}`")))?;
        FieldDesc::prime(p)
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::Prime(p) => write!(f, "F {p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept reduced with a positive
/// denominator; residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary field operation.
pub fn field_ops(a: &Scalar, b: &Scalar, op: FieldOp) -> Result<Scalar> {
    match op {
        FieldOp::Add => a.try_add(b),
        FieldOp::Sub => a.try_sub(b),
        FieldOp::Mul => a.try_mul(b),
        FieldOp::Div => a.try_div(b),
    }
}

impl Scalar {
    pub fn zero(field: FieldDesc) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: FieldDesc) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: FieldDesc, n: i64) -> Self {
        match field {
            FieldDesc::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldDesc::Prime(p) => Scalar::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(field: FieldDesc, num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field {
            FieldDesc::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldDesc::Prime(p) => {
                let n = reduce_big(&num, p);
                let d = reduce_big(&den, p);
                let n = Scalar::Residue { value: n, modulus: p };
                n.try_div(&Scalar::Residue { value: d, modulus: p })
            }
        }
    }

    pub fn field(&self) -> FieldDesc {
        match self {
            Scalar::Rational(_) => FieldDesc::Rationals,
            Scalar::Residue { modulus, .. } => FieldDesc::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue { value: (a + b) % p, modulus: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a - b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue { value: (a + p - b) % p, modulus: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue { value: a * b % p, modulus: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Parses `[+-]digits` or `[+-]digits/digits` in the given field.
    pub fn parse(field: FieldDesc, s: &str) -> Result<Scalar, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = parse_int(num).ok_or_else(|| format!("bad scalar `{s}`"))?;
        let den = match den {
            Some(d) => {
                if d.starts_with(['+', '-']) {
                    return Err(format!("bad scalar `{s}`"));
                }
                parse_int(d).ok_or_else(|| format!("bad scalar `{s}`"))?
            }
            None => BigInt::one(),
        };
        Scalar::from_ratio(field, num, den).map_err(|_| format!("zero denominator in `{s}`"))
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn reduce_big(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
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
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator impls are for kernel code where all operands share one field,
// which is checked when structures are built. Mixing fields panics.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Scalar {
    /// `true` when the rational is negative; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}
