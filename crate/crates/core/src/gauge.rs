//! Gauge (`U(1)`) and torus-diagonal fixed points.
//!
//! `s_J s_K*` is gauge invariant iff `|J| = |K|` and diagonal iff `J = K`.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::hom::GenHom;
use crate::scalar::Scalar;
use crate::word::{words_up_to, AlgebraTag, Monomial};

pub fn is_gauge_invariant<S: Scalar>(e: &Element<S>) -> bool {
    e.terms().keys().all(|m| m.grade() == 0)
}

pub fn is_diagonal<S: Scalar>(e: &Element<S>) -> bool {
    e.terms().keys().all(|m| m.left == m.right)
}

/// A domain monomial and its image under the hom.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<S: Scalar> {
    pub monomial: Monomial,
    pub image: Element<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointReport<S: Scalar> {
    pub sample_len: usize,
    /// Number of diagonal monomials whose images were checked.
    pub diagonal_checked: usize,
    /// A diagonal monomial with a non-diagonal image.
    pub diagonal_failure: Option<Witness<S>>,
    /// A gauge-invariant monomial with a non-gauge-invariant image.
    pub gauge_witness: Option<Witness<S>>,
}

impl<S: Scalar> FixedPointReport<S> {
    pub fn diagonal_preserved(&self) -> bool {
        self.diagonal_failure.is_none()
    }
}

/// Checks `h(C_m) ⊂ C_n` on diagonal monomials `s_J s_J*` with
/// `2|J| ≤ sample_len`, and searches the gauge-invariant monomials
/// `s_J s_K*`, `|J| = |K|`, `|J| + |K| ≤ sample_len` for one whose image
/// leaves the fixed-point algebra. Monomial length is `|J| + |K|`.
pub fn fixed_point_report<S: Scalar>(h: &GenHom<S>, sample_len: usize) -> Result<FixedPointReport<S>> {
    let n = match (h.domain(), h.codomain()) {
        (AlgebraTag::Finite(n), AlgebraTag::Finite(_)) => n,
        _ => return Err(Error::InvalidArgument("fixed-point reports need finite Cuntz algebras".into())),
    };
    let words = words_up_to(n, sample_len / 2);
    let image_of = |m: &Monomial| -> Result<Element<S>> { h.apply(&Element::monomial(h.domain(), m.clone(), S::one())?) };
    let mut diagonal_failure = None;
    for w in &words {
        let m = Monomial::new(w.clone(), w.clone());
        let image = image_of(&m)?;
        if !is_diagonal(&image) {
            diagonal_failure = Some(Witness { monomial: m, image });
            break;
        }
    }
    let mut gauge_witness = None;
    'search: for len in 0..=sample_len / 2 {
        for j in words.iter().filter(|w| w.len() == len) {
            for k in words.iter().filter(|w| w.len() == len) {
                let m = Monomial::new(j.clone(), k.clone());
                let image = image_of(&m)?;
                if !is_gauge_invariant(&image) {
                    gauge_witness = Some(Witness { monomial: m, image });
                    break 'search;
                }
            }
        }
    }
    Ok(FixedPointReport { sample_len, diagonal_checked: words.len(), diagonal_failure, gauge_witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::f;
    use crate::parse::parse;
    use crate::scalar::Coefficient;

    #[test]
    fn predicates() {
        let o2 = AlgebraTag::Finite(2);
        let e = |t: &str| parse(o2, t).unwrap();
        assert!(is_gauge_invariant(&e("s1 s2'")) && !is_diagonal(&e("s1 s2'")));
        assert!(is_gauge_invariant(&e("s2 s1 (s2 s1)'")) && is_diagonal(&e("s2 s1 (s2 s1)'")));
        assert!(!is_gauge_invariant(&e("s1 s1' s2'")) && !is_diagonal(&e("s1 s1' s2'")));
    }

    #[test]
    fn witness_for_f_1_2() {
        let r = fixed_point_report(&f::<Coefficient>(1, 2).unwrap(), 2).unwrap();
        let w = r.gauge_witness.unwrap();
        assert_eq!(w.monomial, Monomial::new(vec![1], vec![2]));
        assert_eq!(w.image, parse(AlgebraTag::Finite(2), "s1 s1' s2'").unwrap());
        assert!(r.diagonal_failure.is_none());
        let d = f::<Coefficient>(1, 2).unwrap().apply(&parse(AlgebraTag::Finite(3), "s2 s2'").unwrap()).unwrap();
        assert_eq!(d, parse(AlgebraTag::Finite(2), "s2 s1 (s2 s1)'").unwrap());
    }

    #[test]
    fn identity_has_no_witness() {
        let r = fixed_point_report(&GenHom::<Coefficient>::identity(AlgebraTag::Finite(3)), 4).unwrap();
        assert!(r.gauge_witness.is_none() && r.diagonal_preserved());
    }
}
