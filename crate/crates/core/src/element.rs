//! Finite linear combinations of reduced monomials.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::Result;
use crate::scalar::{Scalar, Show};
use crate::word::{AlgebraTag, Monomial, Word};

/// An element of the dense *-subalgebra spanned by `s_J s_K*`.
///
/// Values produced by the arithmetic methods are always in canonical form
/// (see [`Element::normalize`]), so structural equality of two canonical
/// elements coincides with equality in the algebra.
#[derive(Clone, PartialEq)]
pub struct Element<S> {
    tag: AlgebraTag,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Element<S> {
    pub fn zero(tag: AlgebraTag) -> Self {
        Element { tag, terms: BTreeMap::new() }
    }

    pub fn one(tag: AlgebraTag) -> Self {
        Self::from_monomial(tag, Monomial::unit())
    }

    /// The generator `s_k`.
    pub fn generator(tag: AlgebraTag, k: u32) -> Result<Self> {
        Self::monomial(tag, Monomial::new(vec![k], vec![]), S::one())
    }

    /// The isometry `s_w = s_{w_1} … s_{w_m}`.
    pub fn word(tag: AlgebraTag, w: impl Into<Word>) -> Result<Self> {
        Self::monomial(tag, Monomial::new(w.into(), Word::empty()), S::one())
    }

    /// `c · s_J s_K*`, with both words checked against `tag`.
    pub fn monomial(tag: AlgebraTag, m: Monomial, c: S) -> Result<Self> {
        tag.check_word(&m.left)?;
        tag.check_word(&m.right)?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Ok(Element { tag, terms })
    }

    pub(crate) fn from_monomial(tag: AlgebraTag, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, S::one());
        Element { tag, terms }
    }

    /// Builds an element from raw terms, combining repeats and normalizing.
    pub fn from_terms(tag: AlgebraTag, terms: impl IntoIterator<Item = (Monomial, S)>) -> Result<Self> {
        let mut e = Element { tag, terms: BTreeMap::new() };
        for (m, c) in terms {
            tag.check_word(&m.left)?;
            tag.check_word(&m.right)?;
            e.accumulate(m, c);
        }
        Ok(e.normalize())
    }

    /// Raw accumulation without normalization. Callers must either
    /// normalize afterwards or only rely on the combined table.
    /// Combines like terms and drops zeros, but keeps the given monomials
    /// instead of collapsing them: a presentation, not a canonical form.
    /// Compare such elements with [`crate::oracle::equals`].
    pub fn from_terms_uncollapsed(tag: AlgebraTag, terms: impl IntoIterator<Item = (Monomial, S)>) -> Result<Self> {
        let mut e = Element::zero(tag);
        for (m, c) in terms {
            tag.check_word(&m.left)?;
            tag.check_word(&m.right)?;
            e.accumulate(m, c);
        }
        Ok(e)
    }

    pub(crate) fn from_raw(tag: AlgebraTag, terms: BTreeMap<Monomial, S>) -> Self {
        Element { tag, terms }
    }

    pub(crate) fn accumulate(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, S> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, S> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// The single monomial if the element is `1 · s_J s_K*`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    /// The word `w` if the element is the isometry `s_w`.
    pub fn as_isometry_word(&self) -> Option<&Word> {
        self.as_monomial().filter(|m| m.right.is_empty()).map(|m| &m.left)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.tag.ensure_same(other.tag)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out.normalize())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Element {
            tag: self.tag,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Element::zero(self.tag);
        }
        Element {
            tag: self.tag,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), c.clone() * x.clone())).collect(),
        }
    }

    /// Bilinear extension of the monomial prefix rule.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.tag.ensure_same(other.tag)?;
        let mut out = Element::zero(self.tag);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(p) = a.multiply(b) {
                    out.accumulate(p, x.clone() * y.clone());
                }
            }
        }
        Ok(out.normalize())
    }

    /// Conjugate-linear involution `(c s_J s_K*)* = c̄ s_K s_J*`.
    pub fn adjoint(&self) -> Self {
        let out = Element {
            tag: self.tag,
            terms: self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())).collect(),
        };
        out.normalize()
    }

    /// Partitions the terms by gauge grade `|J| - |K|`.
    pub fn grade_components(&self) -> BTreeMap<i64, Element<S>> {
        let mut out: BTreeMap<i64, Element<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.grade())
                .or_insert_with(|| Element::zero(self.tag))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Canonical form.
    ///
    /// Monomials of one grade are organized into cone trees: `(J, K)` is the
    /// parent of the siblings `(J·i, K·i)`, `i = 1..N`, and the relation
    /// `s_J s_K* = Σ_i s_{J·i} s_{K·i}*` says a node equals the sum of its
    /// children. An element therefore determines a value on every
    /// sufficiently deep node. The canonical form keeps exactly the maximal
    /// nodes on which that value is constant, i.e. the fixpoint of
    /// collapsing every full sibling set that carries one common
    /// coefficient. For `O_∞` only like terms are combined.
    pub fn normalize(&self) -> Self {
        let n = match self.tag {
            AlgebraTag::Finite(n) => n,
            AlgebraTag::Infinite => {
                let terms = self.terms.iter().filter(|(_, c)| !c.is_zero());
                return Element {
                    tag: self.tag,
                    terms: terms.map(|(m, c)| (m.clone(), c.clone())).collect(),
                };
            }
        };

        let mut trees: BTreeMap<Monomial, HashMap<Vec<u32>, S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let (root, path) = m.split_root();
            trees.entry(root).or_default().insert(path, c.clone());
        }

        let mut out = BTreeMap::new();
        for (root, weights) in trees {
            let mut relevant: HashSet<Vec<u32>> = HashSet::new();
            for path in weights.keys() {
                for l in 0..=path.len() {
                    relevant.insert(path[..l].to_vec());
                }
            }
            let tree = ConeTree { n, weights: &weights, relevant: &relevant };
            let mut path = Vec::new();
            match tree.canon(&mut path, S::zero()) {
                Cone::Uniform(v) => {
                    if !v.is_zero() {
                        out.insert(root.clone(), v);
                    }
                }
                Cone::Mixed(list) => {
                    for (p, v) in list {
                        out.insert(root.extend(&p), v);
                    }
                }
            }
        }
        Element { tag: self.tag, terms: out }
    }

    /// True when no full sibling set with a common coefficient remains.
    pub fn is_canonical(&self) -> bool {
        *self == self.normalize()
    }
}

enum Cone<S> {
    Uniform(S),
    Mixed(Vec<(Vec<u32>, S)>),
}

struct ConeTree<'a, S> {
    n: u32,
    weights: &'a HashMap<Vec<u32>, S>,
    relevant: &'a HashSet<Vec<u32>>,
}

impl<S: Scalar> ConeTree<'_, S> {
    /// `acc` is the sum of the weights strictly above `path`.
    fn canon(&self, path: &mut Vec<u32>, acc: S) -> Cone<S> {
        let here = match self.weights.get(path.as_slice()) {
            Some(w) => acc + w.clone(),
            None => acc,
        };
        let mut children = Vec::with_capacity(self.n as usize);
        let mut any_relevant = false;
        for i in 1..=self.n {
            path.push(i);
            let child = if self.relevant.contains(path.as_slice()) {
                any_relevant = true;
                self.canon(path, here.clone())
            } else {
                Cone::Uniform(here.clone())
            };
            path.pop();
            children.push(child);
        }
        if !any_relevant {
            return Cone::Uniform(here);
        }
        if let Cone::Uniform(first) = &children[0] {
            if children.iter().all(|c| matches!(c, Cone::Uniform(v) if v == first)) {
                return Cone::Uniform(first.clone());
            }
        }
        let mut list = Vec::new();
        for (i, child) in children.into_iter().enumerate() {
            match child {
                Cone::Uniform(v) => {
                    if !v.is_zero() {
                        let mut p = path.clone();
                        p.push(i as u32 + 1);
                        list.push((p, v));
                    }
                }
                Cone::Mixed(sub) => list.extend(sub),
            }
        }
        Cone::Mixed(list)
    }
}

impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.split_sign();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{}", m)?;
            } else if m.is_unit() {
                write!(f, "{}", Show(&mag))?;
            } else {
                write!(f, "{} {}", Show(&mag), m)?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.tag, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian, integer, Coefficient};

    type E = Element<Coefficient>;
    const O2: AlgebraTag = AlgebraTag::Finite(2);

    fn mono(tag: AlgebraTag, j: &[u32], k: &[u32]) -> E {
        E::monomial(tag, Monomial::new(j, k), integer(1)).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let a = mono(O2, &[1], &[2]);
        assert_eq!(a.multiply(&mono(O2, &[2], &[1])).unwrap(), mono(O2, &[1], &[1]));
        assert!(a.multiply(&mono(O2, &[1], &[1])).unwrap().is_zero());
        let b = mono(O2, &[2, 1], &[1]);
        assert_eq!(b.multiply(&mono(O2, &[1], &[2])).unwrap(), mono(O2, &[2, 1], &[2]));
    }

    #[test]
    fn algebra_mismatch_is_an_error() {
        let a = mono(O2, &[1], &[]);
        let b = mono(AlgebraTag::Finite(3), &[1], &[]);
        assert!(a.multiply(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(mono(O2, &[1], &[2]).adjoint(), mono(O2, &[2], &[1]));
        let c = E::one(O2).scale(&gaussian(1, 1));
        assert_eq!(c.adjoint(), E::one(O2).scale(&gaussian(1, -1)));
    }

    #[test]
    fn add_and_scale_examples() {
        let sum = mono(O2, &[1], &[1]).add(&mono(O2, &[2], &[2])).unwrap();
        assert_eq!(sum, E::one(O2));
        let e = mono(O2, &[1, 2], &[2]);
        assert!(e.add(&e.scale(&integer(-1))).unwrap().is_zero());
        let p = mono(O2, &[1], &[1]);
        let five = p.scale(&integer(2)).add(&p.scale(&integer(3))).unwrap();
        assert_eq!(five, p.scale(&integer(5)));
    }

    #[test]
    fn normalize_examples() {
        let e = E::from_terms(O2, [(Monomial::new(vec![2, 1], vec![2, 1]), integer(1)), (Monomial::new(vec![2, 2], vec![2, 2]), integer(1))]).unwrap();
        assert_eq!(e, mono(O2, &[2], &[2]));
        let inf = AlgebraTag::Infinite;
        let e = mono(inf, &[1], &[1]).add(&mono(inf, &[2], &[2])).unwrap();
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn normalize_expands_partial_cones() {
        // I + s1 s1* has value 2 on the s1 cone and 1 on the s2 cone.
        let e = E::one(O2).add(&mono(O2, &[1], &[1])).unwrap();
        let expect = E::from_raw(
            O2,
            [(Monomial::new(vec![1], vec![1]), integer(2)), (Monomial::new(vec![2], vec![2]), integer(1))].into_iter().collect(),
        );
        assert_eq!(e, expect);
        assert!(e.is_canonical());
    }

    #[test]
    fn grade_components_partition() {
        let e = E::one(O2).add(&mono(O2, &[1], &[])).unwrap();
        let g = e.grade_components();
        assert_eq!(g.len(), 2);
        assert_eq!(g[&0], E::one(O2));
        assert_eq!(g[&1], mono(O2, &[1], &[]));
        let g = mono(O2, &[1], &[2, 1]).grade_components();
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![-1]);
    }

    #[test]
    fn display_is_readable() {
        let e = E::one(O2).scale(&integer(3)).sub(&mono(O2, &[1], &[2])).unwrap();
        assert_eq!(e.to_string(), "3 - s1 s2'");
        assert_eq!(E::zero(O2).to_string(), "0");
    }
}
