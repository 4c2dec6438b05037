//! K₀ bookkeeping: `K₀(O_{n+1}) ≅ Z/nZ`, `K₀(O_∞) ≅ Z`,
//! `K₀(UHF_r) ≅ Z[1/r]`, and the maps induced by unital homs, which are
//! pinned down by sending the unit class (a generator) to the unit class.

use std::fmt;

use crate::error::{Error, Result};
use crate::hom::GenHom;
use crate::scalar::Scalar;
use crate::word::AlgebraTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum K0Descriptor {
    /// `Z/nZ`, `n ≥ 1`.
    CyclicMod(u64),
    /// `Z`.
    FreeRankOne,
    /// `Z[1/r]`, the `r`-adic rationals.
    DenominatorGroup(u64),
}

impl fmt::Display for K0Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K0Descriptor::CyclicMod(n) => write!(f, "CyclicMod({n})"),
            K0Descriptor::FreeRankOne => f.write_str("FreeRankOne"),
            K0Descriptor::DenominatorGroup(r) => write!(f, "DenominatorGroup({r})"),
        }
    }
}

/// The algebras whose K₀ is tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K0Source {
    Cuntz(AlgebraTag),
    Uhf(u64),
}

impl From<AlgebraTag> for K0Source {
    fn from(tag: AlgebraTag) -> Self {
        K0Source::Cuntz(tag)
    }
}

pub fn k0(source: impl Into<K0Source>) -> K0Descriptor {
    match source.into() {
        K0Source::Cuntz(AlgebraTag::Finite(n)) => K0Descriptor::CyclicMod(n as u64 - 1),
        K0Source::Cuntz(AlgebraTag::Infinite) => K0Descriptor::FreeRankOne,
        K0Source::Uhf(r) => K0Descriptor::DenominatorGroup(r),
    }
}

/// A group map `Z/mZ → Z/nZ` or `Z → Z/nZ` with `[1] ↦ [1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K0Map {
    pub source: K0Descriptor,
    pub target: K0Descriptor,
    /// Image of the unit class, as a residue of the target.
    pub unit_image: u64,
    pub surjective: bool,
}

impl K0Map {
    fn unit_preserving(source: K0Descriptor, target: K0Descriptor) -> Result<Self> {
        let n = match target {
            K0Descriptor::CyclicMod(n) => n,
            other => return Err(Error::NotCuntz(format!("target {other} is not the K0 group of a finite Cuntz algebra"))),
        };
        match source {
            K0Descriptor::CyclicMod(m) if m % n != 0 => {
                return Err(Error::NotDivisible { n, m });
            }
            K0Descriptor::DenominatorGroup(r) => {
                return Err(Error::NotCuntz(format!("source DenominatorGroup({r}) is not the K0 group of a Cuntz algebra")));
            }
            _ => {}
        }
        Ok(K0Map { source, target, unit_image: 1 % n, surjective: true })
    }

    /// Image of the class `k·[1]` (`k` taken in the source).
    pub fn apply(&self, k: i64) -> u64 {
        let n = match self.target {
            K0Descriptor::CyclicMod(n) => n as i64,
            _ => unreachable!("targets are cyclic"),
        };
        (k * self.unit_image as i64).rem_euclid(n) as u64
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &K0Map) -> Result<K0Map> {
        if inner.target != self.source {
            return Err(Error::InvalidArgument(format!("cannot compose {} -> {} after {} -> {}", self.source, self.target, inner.source, inner.target)));
        }
        let composed = K0Map::unit_preserving(inner.source, self.target)?;
        Ok(K0Map { unit_image: self.apply(inner.unit_image as i64), ..composed })
    }
}

impl fmt::Display for K0Map {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}, 1 |-> {}", self.source, self.target, self.unit_image)
    }
}

/// The map on K₀ induced by a unital hom between Cuntz algebras.
pub fn induced_k0_map<S: Scalar>(h: &GenHom<S>) -> Result<K0Map> {
    K0Map::unit_preserving(k0(h.domain()), k0(h.codomain()))
}
