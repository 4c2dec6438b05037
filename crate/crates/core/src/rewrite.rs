//! Step-by-step collapse rewriting.
//!
//! A second route to the canonical form: the element is expanded by
//! [`leveled_expansion`] and then rewritten one collapse step at a time,
//! `Σ_i c·s_{J·i} s_{K·i}* → c·s_J s_K*`, with the next redex chosen by the
//! caller. Every order reaches the same fixpoint, which must coincide with
//! [`Element::normalize`].

use std::collections::BTreeMap;

use crate::element::Element;
use crate::oracle::leveled_expansion;
use crate::scalar::Scalar;
use crate::word::{AlgebraTag, Monomial};

/// A full sibling set `{(J·i, K·i) : i = 1..N}` with one common coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Redex {
    pub parent: Monomial,
}

/// All collapsible sibling sets of `terms` over `N` generators.
pub fn redexes<S: Scalar>(n: u32, terms: &BTreeMap<Monomial, S>) -> Vec<Redex> {
    let mut out = Vec::new();
    for (m, c) in terms {
        let (Some(a), Some(b)) = (m.left.last(), m.right.last()) else { continue };
        // Visit each sibling set once, from its first child.
        if a != 1 || b != 1 {
            continue;
        }
        let parent = Monomial::new(&m.left.letters()[..m.left.len() - 1], &m.right.letters()[..m.right.len() - 1]);
        let full = (2..=n).all(|i| terms.get(&parent.extend(&[i])) == Some(c));
        if full {
            out.push(Redex { parent });
        }
    }
    out
}

/// Applies one collapse step.
pub fn collapse<S: Scalar>(n: u32, terms: &mut BTreeMap<Monomial, S>, redex: &Redex) {
    let mut c = None;
    for i in 1..=n {
        c = terms.remove(&redex.parent.extend(&[i]));
    }
    if let Some(c) = c {
        let entry = terms.entry(redex.parent.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            terms.remove(&redex.parent);
        }
    }
}

/// Expands `e` and collapses to a fixpoint; `pick(k)` chooses which of the
/// `k` currently available redexes fires next.
pub fn normalize_by_rewriting<S: Scalar>(e: &Element<S>, mut pick: impl FnMut(usize) -> usize) -> Element<S> {
    let mut combined: BTreeMap<Monomial, S> = BTreeMap::new();
    for (m, c) in e.terms() {
        let entry = combined.entry(m.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + c.clone();
    }
    combined.retain(|_, c| !c.is_zero());
    let n = match e.tag() {
        AlgebraTag::Finite(n) => n,
        AlgebraTag::Infinite => return Element::from_raw(e.tag(), combined),
    };
    let mut terms = leveled_expansion(e.tag(), &combined);
    terms.retain(|_, c| !c.is_zero());
    loop {
        let available = redexes(n, &terms);
        if available.is_empty() {
            break;
        }
        let k = pick(available.len()) % available.len();
        collapse(n, &mut terms, &available[k]);
    }
    Element::from_raw(e.tag(), terms)
}
