//! Truncated profinite integers `Ẑ = lim Z/nZ`.
//!
//! The factorials are cofinal in `(N, ⪯)`, so a truncation at depth `d`
//! is an element of `Z/(d+1)!Z`, written in the factorial base
//! `x = Σ_{k=1}^{d} c_k k!`, `0 ≤ c_k ≤ k`. Its residues modulo every
//! `n | (d+1)!` are determined, coherently.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProfiniteInt {
    depth: usize,
    /// Representative in `[0, (depth+1)!)`.
    value: BigInt,
}

impl ProfiniteInt {
    /// The image of `z ∈ Z` at depth `d`.
    pub fn from_integer(z: impl Into<BigInt>, depth: usize) -> Self {
        let modulus = factorial(depth + 1);
        ProfiniteInt { depth, value: z.into().mod_floor(&modulus) }
    }

    /// The element with factorial digits `(c_1, …, c_d)`.
    pub fn from_digits(digits: &[u64]) -> Result<Self> {
        let mut value = BigInt::zero();
        for (idx, &c) in digits.iter().enumerate() {
            let k = idx + 1;
            if c > k as u64 {
                return Err(Error::InvalidArgument(format!("factorial digit c_{k} = {c} exceeds {k}")));
            }
            value += factorial(k) * c;
        }
        Ok(ProfiniteInt { depth: digits.len(), value })
    }

    /// The element whose factorial digits are all `1`: `Σ_k k!`.
    pub fn all_ones(depth: usize) -> Self {
        ProfiniteInt::from_digits(&vec![1; depth]).expect("1 <= k")
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `(d+1)!`, the modulus of the truncation.
    pub fn modulus(&self) -> BigInt {
        factorial(self.depth + 1)
    }

    /// The representative in `[0, (d+1)!)`.
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn digits(&self) -> Vec<u64> {
        let mut rest = self.value.clone();
        let mut out = vec![0; self.depth];
        for k in (1..=self.depth).rev() {
            let (q, r) = rest.div_mod_floor(&factorial(k));
            out[k - 1] = q.to_u64().expect("digit <= k");
            rest = r;
        }
        out
    }

    /// Residues modulo `(j+1)!` for `j = 1..=d`.
    pub fn residues(&self) -> Vec<BigInt> {
        (1..=self.depth).map(|j| self.value.mod_floor(&factorial(j + 1))).collect()
    }

    fn same_depth(&self, other: &Self) -> Result<()> {
        if self.depth != other.depth {
            return Err(Error::DepthMismatch(self.depth, other.depth));
        }
        Ok(())
    }

    fn reduced(&self, value: BigInt) -> Self {
        ProfiniteInt { depth: self.depth, value: value.mod_floor(&self.modulus()) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_depth(other)?;
        Ok(self.reduced(&self.value + &other.value))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_depth(other)?;
        Ok(self.reduced(&self.value * &other.value))
    }

    pub fn neg(&self) -> Self {
        self.reduced(-&self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for ProfiniteInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}!", self.value, self.depth + 1)
    }
}

/// `x mod n` for `n | (d+1)!`.
pub fn project(x: &ProfiniteInt, n: u64) -> Result<u64> {
    if n == 0 || !(x.modulus() % n).is_zero() {
        return Err(Error::ModulusNotDividing { modulus: n, of: format!("{}!", x.depth + 1) });
    }
    Ok(x.value.mod_floor(&BigInt::from(n)).to_u64().expect("residue below n"))
}

/// The reduction `Z/mZ → Z/nZ` for `n | m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Surjection {
    pub from: u64,
    pub to: u64,
}

pub fn natural_surjection(m: u64, n: u64) -> Result<Surjection> {
    if n == 0 || m % n != 0 {
        return Err(Error::NotDivisible { n, m });
    }
    Ok(Surjection { from: m, to: n })
}

impl Surjection {
    pub fn apply(&self, residue: u64) -> u64 {
        (residue % self.from) % self.to
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Surjection) -> Result<Surjection> {
        if inner.to != self.from {
            return Err(Error::InvalidArgument(format!("cannot compose Z/{} -> Z/{} after Z/{} -> Z/{}", self.from, self.to, inner.from, inner.to)));
        }
        natural_surjection(inner.from, self.to)
    }
}

/// Smallest `d' ≤ d` such that no integer `|z| ≤ bound` is congruent to `x`
/// modulo `(d'+1)!`; `None` means inconclusive.
pub fn nonintegrality_witness(x: &ProfiniteInt, bound: &BigInt) -> Option<usize> {
    (1..=x.depth).find(|&j| {
        let m = factorial(j + 1);
        let r = x.value.mod_floor(&m);
        &r > bound && (&m - &r).abs() > *bound
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(z: i64) -> BigInt {
        BigInt::from(z)
    }

    #[test]
    fn residues_examples() {
        assert_eq!(ProfiniteInt::from_integer(5, 3).residues(), vec![big(1), big(5), big(5)]);
        let zero = ProfiniteInt::from_integer(-1, 3).add(&ProfiniteInt::from_integer(1, 3)).unwrap();
        assert!(zero.is_zero());
        assert_eq!(ProfiniteInt::all_ones(3).residues(), vec![big(1), big(3), big(9)]);
        assert_eq!(ProfiniteInt::all_ones(4).digits(), vec![1, 1, 1, 1]);
        assert!(ProfiniteInt::from_integer(1, 2).add(&ProfiniteInt::from_integer(1, 3)).is_err());
        assert!(ProfiniteInt::from_digits(&[2]).is_err());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(&ProfiniteInt::from_integer(7, 4), 6).unwrap(), 1);
        assert!(project(&ProfiniteInt::from_integer(7, 2), 5).is_err());
        assert_eq!(natural_surjection(4, 2).unwrap().apply(3), 1);
        assert!(natural_surjection(4, 3).is_err());
        let twelve_two = natural_surjection(6, 2).unwrap().compose(&natural_surjection(12, 6).unwrap()).unwrap();
        assert_eq!(twelve_two, natural_surjection(12, 2).unwrap());
        for r in 0..12 {
            assert_eq!(twelve_two.apply(r), natural_surjection(6, 2).unwrap().apply(natural_surjection(12, 6).unwrap().apply(r)));
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(nonintegrality_witness(&ProfiniteInt::all_ones(8), &big(100)), Some(5));
        assert_eq!(ProfiniteInt::all_ones(5).value(), &big(153));
        assert_eq!(nonintegrality_witness(&ProfiniteInt::from_integer(7, 8), &big(7)), None);
        assert_eq!(nonintegrality_witness(&ProfiniteInt::all_ones(9), &big(1_000_000)), None);
        assert_eq!(nonintegrality_witness(&ProfiniteInt::all_ones(10), &big(1_000_000)), Some(10));
    }

    #[test]
    fn ring_homomorphism_and_coherence() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (x, y) = (ProfiniteInt::from_integer(a, 4), ProfiniteInt::from_integer(b, 4));
                assert_eq!(x.add(&y).unwrap(), ProfiniteInt::from_integer(a + b, 4));
                assert_eq!(x.mul(&y).unwrap(), ProfiniteInt::from_integer(a * b, 4));
                assert_eq!(x.neg(), ProfiniteInt::from_integer(-a, 4));
                let p = x.mul(&y).unwrap();
                for n in [2u64, 3, 4, 6, 8, 12, 24, 60, 120] {
                    for m in [n, 2 * n, 120] {
                        if m % n == 0 && 120 % m == 0 {
                            assert_eq!(project(&p, m).unwrap() % n, project(&p, n).unwrap());
                        }
                    }
                }
            }
        }
    }
}
