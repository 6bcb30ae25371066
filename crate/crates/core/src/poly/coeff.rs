use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default characteristic for all computations: large enough that random
/// coefficient draws behave like draws from an infinite field.
pub const DEFAULT_PRIME: u32 = 32003;

/// An exact field element.
///
/// Residues are kept in `[0, p)`; rationals are kept reduced with a positive
/// denominator (guaranteed by `BigRational`). The modulus is not stored in the
/// value: arithmetic goes through the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Mod(u32),
    Rat(BigRational),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Mod(v) => *v == 0,
            Coefficient::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Mod(v) => *v == 1,
            Coefficient::Rat(r) => r.is_one(),
        }
    }
}

/// Coefficient field: the rationals or a prime field `F_p` with odd `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Field for a characteristic given as `0` (rationals) or an odd prime.
    pub fn from_characteristic(ch: u64) -> Result<Field> {
        if ch == 0 {
            return Ok(Field::Rational);
        }
        if ch > (1 << 31) || ch == 2 || !is_prime(ch as u32) {
            return Err(Error::InvalidRing(format!("characteristic {ch} must be 0 or an odd prime below 2^31")));
        }
        Ok(Field::Prime(ch as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rat(BigRational::zero()),
            Field::Prime(_) => Coefficient::Mod(0),
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rat(BigRational::one()),
            Field::Prime(_) => Coefficient::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coefficient::Mod(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coefficient::Mod(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    pub fn add(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (self, a, b) {
            (Field::Prime(p), Coefficient::Mod(x), Coefficient::Mod(y)) => {
                let s = *x as u64 + *y as u64;
                Coefficient::Mod((s % *p as u64) as u32)
            }
            (Field::Rational, Coefficient::Rat(x), Coefficient::Rat(y)) => Coefficient::Rat(x + y),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coefficient) -> Coefficient {
        match (self, a) {
            (Field::Prime(p), Coefficient::Mod(x)) => Coefficient::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Coefficient::Rat(x)) => Coefficient::Rat(-x),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (self, a, b) {
            (Field::Prime(p), Coefficient::Mod(x), Coefficient::Mod(y)) => {
                Coefficient::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (Field::Rational, Coefficient::Rat(x), Coefficient::Rat(y)) => Coefficient::Rat(x * y),
            _ => panic!("coefficient does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self, a: &Coefficient) -> Result<Coefficient> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (Field::Prime(p), Coefficient::Mod(x)) => Coefficient::Mod(pow_mod(*x, p - 2, *p)),
            (Field::Rational, Coefficient::Rat(x)) => Coefficient::Rat(x.recip()),
            _ => panic!("coefficient does not belong to field {self:?}"),
        })
    }

    pub fn div(&self, a: &Coefficient, b: &Coefficient) -> Result<Coefficient> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Signed integer printing; residues use the balanced representative.
    pub fn format(&self, c: &Coefficient) -> String {
        match c {
            Coefficient::Mod(v) => {
                let p = self.characteristic();
                if *v > p / 2 {
                    format!("-{}", p - v)
                } else {
                    v.to_string()
                }
            }
            Coefficient::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self, c: &Coefficient) -> bool {
        match c {
            Coefficient::Mod(v) => *v > self.characteristic() / 2,
            Coefficient::Rat(r) => r.is_negative(),
        }
    }
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}
