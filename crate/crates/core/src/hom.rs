//! *-homomorphisms given by generator images.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::code::{validate_prefix_code, CodeReport};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::oracle::equals;
use crate::scalar::Scalar;
use crate::word::{AlgebraTag, Monomial, Word};

/// Number of `O_∞` generators checked when validating a rule-defined hom.
pub const DEFAULT_INFINITE_BOUND: u32 = 32;

type Rule<S> = Arc<dyn Fn(u32) -> Element<S> + Send + Sync>;

#[derive(Clone)]
enum Images<S> {
    List(Vec<Element<S>>),
    Rule(Rule<S>),
}

/// A unital *-homomorphism determined by the images of the generators.
///
/// Constructed only through validating constructors, so a `GenHom` always
/// satisfies the Cuntz relations on its (finitely checked) generators.
#[derive(Clone)]
pub struct GenHom<S> {
    domain: AlgebraTag,
    codomain: AlgebraTag,
    images: Images<S>,
    bound: u32,
}

impl<S: Scalar> GenHom<S> {
    /// Validates `images[i-1] = f(s_i)` for a finite domain `O_N`.
    pub fn new(domain: AlgebraTag, codomain: AlgebraTag, images: Vec<Element<S>>) -> Result<Self> {
        let n = match domain {
            AlgebraTag::Finite(n) => n as usize,
            AlgebraTag::Infinite => {
                return Err(Error::InvalidArgument("O_inf domains take an index rule".into()));
            }
        };
        if images.len() != n {
            return Err(Error::ImageCount { expected: n, got: images.len() });
        }
        for img in &images {
            codomain.ensure_same(img.tag())?;
        }
        let h = GenHom { domain, codomain, images: Images::List(images), bound: n as u32 };
        h.validate()?;
        Ok(h)
    }

    /// An `O_∞ → codomain` hom given by `k ↦ f(s_k)`; the relations are
    /// checked for generators `1..=bound`.
    pub fn from_rule(codomain: AlgebraTag, bound: u32, rule: impl Fn(u32) -> Element<S> + Send + Sync + 'static) -> Result<Self> {
        let h = GenHom { domain: AlgebraTag::Infinite, codomain, images: Images::Rule(Arc::new(rule)), bound };
        for k in 1..=bound {
            codomain.ensure_same(h.image(k).tag())?;
        }
        h.validate()?;
        Ok(h)
    }

    pub fn identity(tag: AlgebraTag) -> Self {
        match tag {
            AlgebraTag::Finite(n) => GenHom {
                domain: tag,
                codomain: tag,
                images: Images::List((1..=n).map(|k| Element::from_monomial(tag, Monomial::new(vec![k], vec![]))).collect()),
                bound: n,
            },
            AlgebraTag::Infinite => GenHom {
                domain: tag,
                codomain: tag,
                images: Images::Rule(Arc::new(move |k| Element::from_monomial(tag, Monomial::new(vec![k], vec![])))),
                bound: DEFAULT_INFINITE_BOUND,
            },
        }
    }

    pub fn domain(&self) -> AlgebraTag {
        self.domain
    }

    pub fn codomain(&self) -> AlgebraTag {
        self.codomain
    }

    /// Number of generators the relations were checked on.
    pub fn checked_generators(&self) -> u32 {
        self.bound
    }

    /// `f(s_k)`.
    pub fn image(&self, k: u32) -> Element<S> {
        match &self.images {
            Images::List(v) => v[(k - 1) as usize].clone(),
            Images::Rule(r) => r(k),
        }
    }

    /// Images of generators `1..=checked_generators()`.
    pub fn images(&self) -> Vec<Element<S>> {
        (1..=self.bound).map(|k| self.image(k)).collect()
    }

    /// The image words, when every checked image is an isometry `s_w`.
    pub fn image_words(&self) -> Option<Vec<Word>> {
        self.images().iter().map(|e| e.as_isometry_word().cloned()).collect()
    }

    /// Prefix-code certificate of the image words over the codomain alphabet.
    pub fn code_report(&self) -> Option<CodeReport> {
        let words = self.image_words()?;
        let n = self.codomain.generators()?;
        validate_prefix_code(&words, n).ok()
    }

    fn validate(&self) -> Result<()> {
        let n = self.bound;
        let one = Element::one(self.codomain);
        let images = self.images();
        let words = self.image_words();

        let prefix_free = words
            .as_ref()
            .map(|ws| ws.iter().all(|w| self.codomain.check_word(w).is_ok()) && validate_prefix_code(ws, 2).map(|r| r.prefix_free).unwrap_or(false));
        // Isometry words: orthogonality is exactly prefix-incomparability,
        // and each s_w* s_w = I holds automatically.
        if prefix_free != Some(true) {
            let adj: Vec<Element<S>> = images.iter().map(|e| e.adjoint()).collect();
            for i in 1..=n {
                for j in 1..=n {
                    let prod = adj[(i - 1) as usize].multiply(&images[(j - 1) as usize])?;
                    let target = if i == j { one.clone() } else { Element::zero(self.codomain) };
                    if !equals(&prod, &target)? {
                        let residual = prod.sub(&target)?;
                        return Err(Error::RelationViolated { i, j, residual: residual.to_string() });
                    }
                }
            }
        }

        if let AlgebraTag::Finite(_) = self.domain {
            let mut sum = Element::zero(self.codomain);
            for img in &images {
                for (m, c) in img.multiply(&img.adjoint())?.into_terms() {
                    sum.accumulate(m, c);
                }
            }
            let sum = sum.normalize();
            if !equals(&sum, &one)? {
                let residual = sum.sub(&one)?;
                return Err(Error::CompletenessViolated { residual: residual.to_string() });
            }
        }
        Ok(())
    }

    /// Image of a word of generators, `f(s_{w_1}) ⋯ f(s_{w_m})`.
    fn word_image(&self, w: &Word, cache: &mut HashMap<u32, Element<S>>) -> Result<Element<S>> {
        let mut acc = Element::one(self.codomain);
        for &k in w.letters() {
            let img = cache.entry(k).or_insert_with(|| self.image(k));
            acc = acc.multiply(img)?;
        }
        Ok(acc)
    }

    /// Linear, multiplicative and *-preserving extension to all elements.
    pub fn apply(&self, e: &Element<S>) -> Result<Element<S>> {
        self.domain.ensure_same(e.tag())?;
        let mut cache = HashMap::new();
        let mut out = Element::zero(self.codomain);
        for (m, c) in e.terms() {
            let left = self.word_image(&m.left, &mut cache)?;
            let right = self.word_image(&m.right, &mut cache)?;
            for (mm, cc) in left.multiply(&right.adjoint())?.terms() {
                out.accumulate(mm.clone(), c.clone() * cc.clone());
            }
        }
        Ok(out.normalize())
    }

    /// `self ∘ inner`, re-validated.
    pub fn compose(&self, inner: &GenHom<S>) -> Result<GenHom<S>> {
        self.domain.ensure_same(inner.codomain)?;
        match &inner.images {
            Images::List(v) => {
                let images = v.iter().map(|e| self.apply(e)).collect::<Result<Vec<_>>>()?;
                GenHom::new(inner.domain, self.codomain, images)
            }
            Images::Rule(_) => {
                let (outer, inner_c) = (self.clone(), inner.clone());
                GenHom::from_rule(self.codomain, inner.bound, move |k| outer.apply(&inner_c.image(k)).expect("tags checked at compose"))
            }
        }
    }

    /// Generators `k <= upto` on which `self` and `other` differ.
    pub fn disagreements(&self, other: &GenHom<S>, upto: u32) -> Result<Vec<u32>> {
        self.domain.ensure_same(other.domain)?;
        self.codomain.ensure_same(other.codomain)?;
        let mut bad = Vec::new();
        for k in 1..=upto {
            if !equals(&self.image(k), &other.image(k))? {
                bad.push(k);
            }
        }
        Ok(bad)
    }

    /// Generator-wise equality on the checked generators of both.
    pub fn agrees_with(&self, other: &GenHom<S>) -> Result<bool> {
        Ok(self.disagreements(other, self.bound.min(other.bound))?.is_empty())
    }
}

impl<S: Scalar> fmt::Debug for GenHom<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenHom({} -> {}: ", self.domain, self.codomain)?;
        for k in 1..=self.bound.min(8) {
            write!(f, "s{} ↦ {}; ", k, self.image(k))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, Coefficient};

    type E = Element<Coefficient>;
    const O2: AlgebraTag = AlgebraTag::Finite(2);
    const O3: AlgebraTag = AlgebraTag::Finite(3);

    fn word(tag: AlgebraTag, w: &[u32]) -> E {
        E::word(tag, w.to_vec()).unwrap()
    }

    #[test]
    fn asada_map_is_valid() {
        let h = GenHom::new(O3, O2, vec![word(O2, &[1]), word(O2, &[2, 1]), word(O2, &[2, 2])]).unwrap();
        assert!(h.code_report().unwrap().maximal);
        assert_eq!(h.apply(&E::one(O3)).unwrap(), E::one(O2));
    }

    #[test]
    fn rejects_non_orthogonal_images() {
        let err = GenHom::new(O2, O2, vec![word(O2, &[1]), word(O2, &[1])]).unwrap_err();
        assert!(matches!(err, Error::RelationViolated { i: 1, j: 2, .. }), "{err}");
        let err = GenHom::new(O3, O2, vec![word(O2, &[1]), word(O2, &[2, 1]), word(O2, &[2, 1])]).unwrap_err();
        assert!(matches!(err, Error::RelationViolated { i: 2, j: 3, .. }));
    }

    #[test]
    fn rejects_incomplete_images() {
        let err = GenHom::new(O2, O3, vec![word(O3, &[1]), word(O3, &[2])]).unwrap_err();
        assert!(matches!(err, Error::CompletenessViolated { .. }));
    }

    #[test]
    fn non_isometry_images_are_checked_symbolically() {
        // Conjugation by the self-adjoint unitary s1 s2* + s2 s1* swaps the generators.
        let u = E::from_terms(O2, [(Monomial::new(vec![1], vec![2]), integer(1)), (Monomial::new(vec![2], vec![1]), integer(1))]).unwrap();
        let images = (1..=2).map(|k| u.multiply(&E::generator(O2, k).unwrap()).unwrap().multiply(&u).unwrap()).collect();
        let h = GenHom::new(O2, O2, images).unwrap();
        assert!(h.code_report().is_none());
        let x = E::generator(O2, 1).unwrap();
        assert_eq!(h.apply(&x.multiply(&x.adjoint()).unwrap()).unwrap(), h.image(1).multiply(&h.image(1).adjoint()).unwrap());
    }

    #[test]
    fn wrong_arity_and_tags() {
        assert!(matches!(GenHom::new(O3, O2, vec![word(O2, &[1])]), Err(Error::ImageCount { .. })));
        assert!(GenHom::new(O2, O2, vec![word(O2, &[1]), word(O3, &[2])]).is_err());
        let h = GenHom::<Coefficient>::identity(O2);
        assert!(h.apply(&E::one(O3)).is_err());
    }

    #[test]
    fn identity_composes_trivially() {
        let h = GenHom::new(O3, O2, vec![word(O2, &[1]), word(O2, &[2, 1]), word(O2, &[2, 2])]).unwrap();
        assert!(h.compose(&GenHom::identity(O3)).unwrap().agrees_with(&h).unwrap());
        assert!(GenHom::identity(O2).compose(&h).unwrap().agrees_with(&h).unwrap());
    }
}
