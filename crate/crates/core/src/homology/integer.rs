//! Integers that stay in a machine word until they outgrow it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub fn zero() -> Self {
        Integer::Small(0)
    }

    pub fn one() -> Self {
        Integer::Small(1)
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(s) => Integer::Small(s),
            None => Integer::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(s) => BigInt::from(*s),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(s) => Some(*s),
            Integer::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1 | -1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(s) => *s < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Compares absolute values.
    pub fn cmp_abs(&self, other: &Integer) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_bigint().abs().cmp(&other.to_bigint().abs()),
        }
    }

    /// Quotient rounded toward zero.
    pub fn div_trunc(&self, other: &Integer) -> Integer {
        assert!(!other.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(q) = a.checked_div(*b) {
                return Integer::Small(q);
            }
        }
        Integer::from_big(self.to_bigint() / other.to_bigint())
    }

    /// Remainder of truncated division; zero iff `other` divides `self`.
    pub fn rem_trunc(&self, other: &Integer) -> Integer {
        assert!(!other.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(r) = a.checked_rem(*b) {
                return Integer::Small(r);
            }
        }
        Integer::from_big(self.to_bigint() % other.to_bigint())
    }

    /// `self - factor * other`.
    pub fn sub_mul(&self, factor: &Integer, other: &Integer) -> Integer {
        self - &(factor * other)
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer::from_big(v)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl Add for &Integer {
    type Output = Integer;

    fn add(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl Sub for &Integer {
    type Output = Integer;

    fn sub(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() - rhs.to_bigint())
    }
}

impl Mul for &Integer {
    type Output = Integer;

    fn mul(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for &Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        match self {
            Integer::Small(a) => match a.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*a)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        -&self
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::Small(0)
    }

    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl Add for Integer {
    type Output = Integer;

    fn add(self, rhs: Integer) -> Integer {
        &self + &rhs
    }
}

impl Mul for Integer {
    type Output = Integer;

    fn mul(self, rhs: Integer) -> Integer {
        &self * &rhs
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::Small(1)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(s) => write!(f, "{s}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}
