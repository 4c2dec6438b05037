//! The divisibility order `(N, ⪯)`: `m ⪯ n` iff `m | n`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `n ⪯ m`.
pub fn leq(n: u64, m: u64) -> bool {
    n != 0 && m % n == 0
}

/// Least upper bound under `⪯`: the lcm.
pub fn join(n: u64, m: u64) -> u64 {
    n.lcm(&m)
}

/// A point of `N ∪ {∞}` with `∞` as top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(u64),
    Top,
}

impl Extended {
    pub fn leq(self, other: Extended) -> bool {
        match (self, other) {
            (_, Extended::Top) => true,
            (Extended::Top, Extended::Finite(_)) => false,
            (Extended::Finite(a), Extended::Finite(b)) => leq(a, b),
        }
    }
}

/// A strictly increasing chain `n_1 ⪯ n_2 ⪯ …`, `n_i ≠ n_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain(Vec<u64>);

impl Chain {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidChain("empty".into()));
        }
        if elements.contains(&0) {
            return Err(Error::InvalidChain("0 is not a positive integer".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| !leq(w[0], w[1]) || w[0] == w[1]) {
            return Err(Error::InvalidChain(format!("{} does not strictly precede {}", w[0], w[1])));
        }
        Ok(Chain(elements))
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top(&self) -> u64 {
        *self.0.last().expect("chains are nonempty")
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        f.write_str(&parts.join(" ⪯ "))
    }
}

impl std::str::FromStr for Chain {
    type Err = Error;

    /// Comma-separated, e.g. `1,2,6`.
    fn from_str(s: &str) -> Result<Self> {
        let elements = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidChain(format!("bad element `{}`", t.trim()))))
            .collect::<Result<Vec<_>>>()?;
        Chain::new(elements)
    }
}

/// Totally ordered cofinal chain from an enumeration of a countable
/// directed set: `y_1 = x_1`, `y_k = lcm(y_{k-1}, x_k)`.
///
/// Repeated values are skipped, so the chain is strictly increasing and may
/// be shorter than `length` when the enumeration runs out.
pub fn cofinal_chain(enumeration: &[u64], length: usize) -> Result<Chain> {
    let first = *enumeration.first().ok_or(Error::EmptyEnumeration)?;
    if enumeration.contains(&0) {
        return Err(Error::InvalidChain("0 is not a positive integer".into()));
    }
    let mut out = vec![first];
    for &x in &enumeration[1..] {
        if out.len() >= length {
            break;
        }
        let y = join(*out.last().unwrap(), x);
        if y != *out.last().unwrap() {
            out.push(y);
        }
    }
    Chain::new(out)
}

/// First sampled pair `(d, e)` with `d ≤ e` but not `F(d) ⪯ F(e)`.
pub fn order_hom_violation<D: Clone>(ranks: &[(D, u64)], order: impl Fn(&D, &D) -> bool) -> Option<(D, D)> {
    for (d, nd) in ranks {
        for (e, ne) in ranks {
            if order(d, e) && !leq(*nd, *ne) {
                return Some((d.clone(), e.clone()));
            }
        }
    }
    None
}

/// Whether `d ↦ F(d)` is an order homomorphism into `(N, ⪯)` on the sample.
pub fn check_order_hom<D: Clone>(ranks: &[(D, u64)], order: impl Fn(&D, &D) -> bool) -> bool {
    order_hom_violation(ranks, order).is_none()
}
