//! Equality by leveled expansion.
//!
//! Independent of [`Element::normalize`]: the difference `a - b` is only
//! like-term combined, then every cone tree of each grade is expanded with
//! `s_J s_K* = Σ_{|L|=d} s_{J·L} s_{K·L}*` down to its deepest node and the
//! resulting coefficient tables are compared with zero.

use std::collections::BTreeMap;

use crate::element::Element;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::word::{words_of_length, AlgebraTag, Monomial};

/// `a = b` in the algebra.
pub fn equals<S: Scalar>(a: &Element<S>, b: &Element<S>) -> Result<bool> {
    a.tag().ensure_same(b.tag())?;
    let mut diff: BTreeMap<Monomial, S> = a.terms().clone();
    for (m, c) in b.terms() {
        let entry = diff.entry(m.clone()).or_insert_with(S::zero);
        *entry = entry.clone() - c.clone();
    }
    diff.retain(|_, c| !c.is_zero());
    Ok(leveled_expansion(a.tag(), &diff).values().all(|c| c.is_zero()))
}

/// Expands every cone tree of `terms` to a common depth and sums.
///
/// Trees are keyed by their root `(J0, K0)`; each grade is a disjoint union
/// of such trees, and within one tree all expanded monomials have the same
/// right length, so the result is a table over linearly independent
/// monomials. For `O_∞` no relation applies and the table is returned
/// combined but unexpanded.
pub fn leveled_expansion<S: Scalar>(tag: AlgebraTag, terms: &BTreeMap<Monomial, S>) -> BTreeMap<Monomial, S> {
    let n = match tag {
        AlgebraTag::Finite(n) => n,
        AlgebraTag::Infinite => return terms.clone(),
    };
    let mut trees: BTreeMap<(i64, Monomial), Vec<(Vec<u32>, S)>> = BTreeMap::new();
    for (m, c) in terms {
        let (root, path) = m.split_root();
        trees.entry((m.grade(), root)).or_default().push((path, c.clone()));
    }
    let mut out = BTreeMap::new();
    for ((_, root), nodes) in trees {
        let depth = nodes.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
        for (path, c) in nodes {
            for tail in words_of_length(n, depth - path.len()) {
                let mut full = path.clone();
                full.extend_from_slice(tail.letters());
                let entry = out.entry(root.extend(&full)).or_insert_with(S::zero);
                *entry = entry.clone() + c.clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, Coefficient};

    type E = Element<Coefficient>;
    const O2: AlgebraTag = AlgebraTag::Finite(2);

    fn mono(j: &[u32], k: &[u32]) -> E {
        E::monomial(O2, Monomial::new(j, k), integer(1)).unwrap()
    }

    fn raw(terms: &[(&[u32], &[u32], i64)]) -> E {
        E::from_raw(O2, terms.iter().map(|(j, k, c)| (Monomial::new(*j, *k), integer(*c))).collect())
    }

    #[test]
    fn completeness_relation() {
        let sum = raw(&[(&[1], &[1], 1), (&[2], &[2], 1)]);
        assert!(equals(&E::one(O2), &sum).unwrap());
        assert!(!equals(&mono(&[1], &[1]), &E::one(O2)).unwrap());
    }

    #[test]
    fn power_of_last_generator() {
        let lhs = mono(&[2, 2], &[2, 2]);
        let rhs = raw(&[(&[], &[], 1), (&[1], &[1], -1), (&[2, 1], &[2, 1], -1)]);
        assert!(equals(&lhs, &rhs).unwrap());
    }

    #[test]
    fn infinite_tags_compare_tables() {
        let inf = AlgebraTag::Infinite;
        let a = E::from_raw(inf, [(Monomial::new(vec![1], vec![1]), integer(1)), (Monomial::new(vec![2], vec![2]), integer(1))].into_iter().collect());
        assert!(!equals(&E::one(inf), &a).unwrap());
        assert!(equals(&a, &a.clone()).unwrap());
    }

    #[test]
    fn mismatched_tags() {
        assert!(equals(&E::one(O2), &E::one(AlgebraTag::Finite(3))).is_err());
    }
}
