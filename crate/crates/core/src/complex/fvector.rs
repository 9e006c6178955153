use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Face counts `f_0, ..., f_n`.
///
/// The f-polynomial is `1 + f_0 t + f_1 t^2 + ...`, the constant term standing
/// for the empty face. It is multiplicative under joins, which is how the
/// f-vectors of very large join complexes are obtained without enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    pub fn new(counts: Vec<BigUint>) -> Self {
        Self { counts }
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        Self { counts: counts.iter().map(|&c| BigUint::from(c)).collect() }
    }

    /// Drops the constant term of an f-polynomial coefficient list.
    pub fn from_polynomial(coeffs: &[BigUint]) -> Self {
        assert!(coeffs.first().is_some_and(|c| c.is_one()), "f-polynomial must have constant term 1");
        Self { counts: coeffs[1..].to_vec() }
    }

    pub fn polynomial(&self) -> Vec<BigUint> {
        let mut out = Vec::with_capacity(self.counts.len() + 1);
        out.push(BigUint::one());
        out.extend(self.counts.iter().cloned());
        out
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `f_k`, or zero above the top dimension.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn num_facets(&self) -> BigUint {
        self.counts.last().cloned().unwrap_or_default()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.counts.iter().enumerate().fold(BigInt::zero(), |acc, (k, c)| {
            let c = BigInt::from(c.clone());
            if k % 2 == 0 {
                acc + c
            } else {
                acc - c
            }
        })
    }

    /// f-vector of the join, by multiplying f-polynomials.
    pub fn join_product(&self, other: &FVector) -> FVector {
        let a = self.polynomial();
        let b = other.polynomial();
        let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        FVector::from_polynomial(&out)
    }

    /// Counts as `u64` when all of them fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.to_u64()).collect()
    }
}

/// Multiplies two f-polynomials.
pub fn f_polynomial_product(a: &FVector, b: &FVector) -> FVector {
    a.join_product(b)
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for FVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let counts = strs
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FVector { counts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_squared() {
        let tri = FVector::from_u64s(&[3, 3]);
        assert_eq!(tri.join_product(&tri), FVector::from_u64s(&[6, 15, 18, 9]));
    }

    #[test]
    fn join_with_s0() {
        let tri = FVector::from_u64s(&[3, 3]);
        let s0 = FVector::from_u64s(&[2]);
        assert_eq!(f_polynomial_product(&tri, &s0), FVector::from_u64s(&[5, 9, 6]));
    }

    #[test]
    fn euler() {
        assert_eq!(FVector::from_u64s(&[5, 10, 10, 5]).euler_characteristic(), BigInt::from(0));
        assert_eq!(FVector::from_u64s(&[4, 6, 4]).euler_characteristic(), BigInt::from(2));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let f = FVector::from_u64s(&[6, 15]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["6","15"]"#);
        assert_eq!(serde_json::from_str::<FVector>(&s).unwrap(), f);
    }
}
