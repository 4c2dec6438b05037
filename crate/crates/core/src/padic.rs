//! Truncated `p`-adic integers `Z_p = lim Z/p^k Z`, as digit vectors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAdicInt {
    p: u64,
    /// Little-endian base-`p` digits `a_0, …, a_{N-1}`.
    digits: Vec<u64>,
}

impl PAdicInt {
    /// `z mod p^N` in base `p`.
    pub fn from_integer_p(z: impl Into<BigInt>, p: u64, precision: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!("p = {p} is not a valid base")));
        }
        let base = BigInt::from(p);
        let mut rest = z.into().mod_floor(&num_traits::pow(base.clone(), precision));
        let mut digits = Vec::with_capacity(precision);
        for _ in 0..precision {
            let (q, r) = rest.div_mod_floor(&base);
            digits.push(r.to_u64().expect("digit below p"));
            rest = q;
        }
        Ok(PAdicInt { p, digits })
    }

    pub fn from_digits(p: u64, digits: Vec<u64>) -> Result<Self> {
        if p < 2 || digits.iter().any(|&a| a >= p) {
            return Err(Error::InvalidArgument(format!("digits {digits:?} out of range for p = {p}")));
        }
        Ok(PAdicInt { p, digits })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// The representative in `[0, p^N)`.
    pub fn value(&self) -> BigInt {
        self.digits.iter().rev().fold(BigInt::zero(), |acc, &a| acc * self.p + a)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.digits.len() != other.digits.len() {
            return Err(Error::PrecisionMismatch(self.p, self.digits.len(), other.p, other.digits.len()));
        }
        Ok(())
    }

    /// Digit-wise addition with carries, dropping the carry out of `p^N`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut carry = 0u128;
        let p = self.p as u128;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| {
                let s = a as u128 + b as u128 + carry;
                carry = s / p;
                (s % p) as u64
            })
            .collect();
        Ok(PAdicInt { p: self.p, digits })
    }

    /// Schoolbook multiplication truncated at `p^N`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let n = self.digits.len();
        let p = self.p as u128;
        let mut acc = vec![0u128; n];
        for (i, &a) in self.digits.iter().enumerate() {
            let mut carry = 0u128;
            for j in 0..n - i {
                let t = acc[i + j] + a as u128 * other.digits[j] as u128 + carry;
                acc[i + j] = t % p;
                carry = t / p;
            }
        }
        Ok(PAdicInt { p: self.p, digits: acc.into_iter().map(|d| d as u64).collect() })
    }

    pub fn neg(&self) -> Self {
        PAdicInt::from_integer_p(-self.value(), self.p, self.digits.len()).expect("valid base")
    }

    /// `x mod p^k`, `k ≤ N`.
    pub fn project_pk(&self, k: usize) -> Result<BigInt> {
        if k > self.digits.len() {
            return Err(Error::PrecisionMismatch(self.p, k, self.p, self.digits.len()));
        }
        Ok(self.digits[..k].iter().rev().fold(BigInt::zero(), |acc, &a| acc * self.p + a))
    }
}

impl fmt::Display for PAdicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(f, "({}) in Z_{}", ds.join(","), self.p)
    }
}
