//! Truncated inverse limits of the system `(R_n, f_{n,m})`.
//!
//! A point of `lim R_n` restricted to a chain `n_1 ⪯ … ⪯ n_k` is a tuple
//! `(x_{n_1}, …, x_{n_k})`, `x_{n_j} ∈ R_{n_j}`, subject to
//! `f_{n_j,n_l}(x_{n_l}) = x_{n_j}` for `j ≤ l`.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::families::{f, f_inf};
use crate::hom::GenHom;
use crate::oracle::equals;
use crate::poset::Chain;
use crate::scalar::Scalar;
use crate::word::AlgebraTag;

#[derive(Debug, Clone, PartialEq)]
pub struct CoherentFamily<S: Scalar> {
    chain: Chain,
    entries: Vec<Element<S>>,
}

/// A failed constraint `f_{n,m}(x_m) ≠ x_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Incoherence<S: Scalar> {
    pub n: u64,
    pub m: u64,
    pub pushed: Element<S>,
    pub entry: Element<S>,
}

fn index(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("chain element {n} too large")))
}

impl<S: Scalar> CoherentFamily<S> {
    /// Checks the entry tags (`entries[j] ∈ R_{n_j}`), not coherence.
    pub fn new(chain: Chain, entries: Vec<Element<S>>) -> Result<Self> {
        if chain.len() != entries.len() {
            return Err(Error::InvalidArgument(format!("{} entries for a chain of length {}", entries.len(), chain.len())));
        }
        for (&n, e) in chain.elements().iter().zip(&entries) {
            AlgebraTag::r(index(n)?).ensure_same(e.tag())?;
        }
        Ok(CoherentFamily { chain, entries })
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn entries(&self) -> &[Element<S>] {
        &self.entries
    }

    /// All pairwise constraints, using `connect(n, m)` for `f_{n,m}`.
    pub fn violations_with(&self, connect: impl Fn(u32, u32) -> Result<GenHom<S>>) -> Result<Vec<Incoherence<S>>> {
        let ns = self.chain.elements();
        let mut bad = Vec::new();
        for j in 0..ns.len() {
            for l in j + 1..ns.len() {
                let h = connect(index(ns[j])?, index(ns[l])?)?;
                let pushed = h.apply(&self.entries[l])?;
                if !equals(&pushed, &self.entries[j])? {
                    bad.push(Incoherence { n: ns[j], m: ns[l], pushed, entry: self.entries[j].clone() });
                }
            }
        }
        Ok(bad)
    }

    pub fn violations(&self) -> Result<Vec<Incoherence<S>>> {
        self.violations_with(f)
    }

    /// Every constraint `f_{n_j,n_l}(x_{n_l}) = x_{n_j}`, `j < l`, holds.
    /// Consecutive pairs would suffice; all pairs are checked.
    pub fn check_coherent(&self) -> Result<bool> {
        Ok(self.violations()?.is_empty())
    }
}

/// `ψ_Λ(x) = (f_{n,∞}(x))_{n ∈ Λ}` on a chain.
pub fn psi<S: Scalar>(chain: &Chain, x: &Element<S>) -> Result<CoherentFamily<S>> {
    psi_with(chain, x, f_inf)
}

/// [`psi`] with a caller-supplied `n ↦ f_{n,∞}`.
pub fn psi_with<S: Scalar>(chain: &Chain, x: &Element<S>, embed: impl Fn(u32) -> Result<GenHom<S>>) -> Result<CoherentFamily<S>> {
    AlgebraTag::Infinite.ensure_same(x.tag())?;
    let entries = chain.elements().iter().map(|&n| embed(index(n)?)?.apply(x)).collect::<Result<Vec<_>>>()?;
    CoherentFamily::new(chain.clone(), entries)
}
