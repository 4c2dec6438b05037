//! The concrete homomorphism families of the inverse systems.
//!
//! * `f(n, m): R_m → R_n` for `n | m`, where `R_n = O_{n+1}`;
//! * `f_inf(n): O_∞ → R_n`;
//! * `q(r, n): A_{r,n+1} → A_{r,n}`, where `A_{r,n} = O_{r_n}`, `r_n = r^(2^(n-1))`.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::hom::{GenHom, DEFAULT_INFINITE_BOUND};
use crate::scalar::Scalar;
use crate::word::{AlgebraTag, Monomial, Word};

/// Image word of generator `k = l·n + i` (`1 <= i <= n`): `(n+1)^l · i`.
fn block_word(n: u32, k: u32) -> Word {
    let (l, i) = ((k - 1) / n, (k - 1) % n + 1);
    let mut w = vec![n + 1; l as usize];
    w.push(i);
    Word(w)
}

/// Image words of `f(n, m)`, generator `1..=m+1` in order.
pub fn f_words(n: u32, m: u32) -> Result<Vec<Word>> {
    if n == 0 || m == 0 || m % n != 0 {
        return Err(Error::NotDivisible { n: n as u64, m: m as u64 });
    }
    if n == m {
        return Ok((1..=m + 1).map(Word::letter).collect());
    }
    let mut words: Vec<Word> = (1..=m).map(|k| block_word(n, k)).collect();
    words.push(Word::power(n + 1, (m / n) as usize));
    Ok(words)
}

/// `f_{n,m}: O_{m+1} → O_{n+1}`.
pub fn f<S: Scalar>(n: u32, m: u32) -> Result<GenHom<S>> {
    let words = f_words(n, m)?;
    let codomain = AlgebraTag::r(n);
    if n == m {
        return Ok(GenHom::identity(codomain));
    }
    let images = words.into_iter().map(|w| Element::from_monomial(codomain, Monomial::new(w, Word::empty()))).collect();
    GenHom::new(AlgebraTag::r(m), codomain, images)
}

/// `f_{n,∞}: O_∞ → O_{n+1}`, checked on the default number of generators.
pub fn f_inf<S: Scalar>(n: u32) -> Result<GenHom<S>> {
    f_inf_checked(n, DEFAULT_INFINITE_BOUND)
}

/// `f_{n,∞}` validated on generators `1..=bound`.
pub fn f_inf_checked<S: Scalar>(n: u32, bound: u32) -> Result<GenHom<S>> {
    if n == 0 {
        return Err(Error::InvalidArgument("f_inf needs n >= 1".into()));
    }
    let codomain = AlgebraTag::r(n);
    GenHom::from_rule(codomain, bound, move |k| Element::from_monomial(codomain, Monomial::new(block_word(n, k), Word::empty())))
}

/// Image word of `s_k` under `f_{n,∞}`.
pub fn f_inf_word(n: u32, k: u32) -> Word {
    block_word(n, k)
}

/// `r_n = r^(2^(n-1))`.
pub fn r_n(r: u32, n: u32) -> Result<u32> {
    if r < 2 || n == 0 {
        return Err(Error::InvalidArgument(format!("need r >= 2 and n >= 1, got r={r}, n={n}")));
    }
    let exp = 1u32.checked_shl(n - 1).filter(|_| n <= 32);
    exp.and_then(|e| r.checked_pow(e))
        .ok_or_else(|| Error::InvalidArgument(format!("r_n overflows for r={r}, n={n}")))
}

/// Image words of `q(r, n)`: generator `r_n(i-1)+j ↦ i·j`.
pub fn q_words(r: u32, n: u32) -> Result<Vec<Word>> {
    let rn = r_n(r, n)?;
    r_n(r, n + 1)?;
    Ok((1..=rn).flat_map(|i| (1..=rn).map(move |j| Word(vec![i, j]))).collect())
}

/// `q_n: A_{r,n+1} = O_{r_{n+1}} → A_{r,n} = O_{r_n}`.
pub fn q<S: Scalar>(r: u32, n: u32) -> Result<GenHom<S>> {
    let codomain = AlgebraTag::Finite(r_n(r, n)?);
    let domain = AlgebraTag::Finite(r_n(r, n + 1)?);
    let images = q_words(r, n)?.into_iter().map(|w| Element::from_monomial(codomain, Monomial::new(w, Word::empty()))).collect();
    GenHom::new(domain, codomain, images)
}

/// Whether a unital *-homomorphism `domain → codomain` exists.
///
/// `O_m → O_n` iff `(n-1) | (m-1)`; `O_m → O_∞` never; `O_∞ → O_n` always.
pub fn hom_exists(domain: AlgebraTag, codomain: AlgebraTag) -> bool {
    match (domain, codomain) {
        (AlgebraTag::Finite(m), AlgebraTag::Finite(n)) => (m - 1) % (n - 1) == 0,
        (AlgebraTag::Finite(_), AlgebraTag::Infinite) => false,
        (AlgebraTag::Infinite, _) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Coefficient;

    type H = GenHom<Coefficient>;

    fn words(ws: &[&[u32]]) -> Vec<Word> {
        ws.iter().map(|w| Word(w.to_vec())).collect()
    }

    #[test]
    fn f_images_match_the_worked_examples() {
        assert_eq!(f_words(1, 2).unwrap(), words(&[&[1], &[2, 1], &[2, 2]]));
        assert_eq!(f_words(2, 4).unwrap(), words(&[&[1], &[2], &[3, 1], &[3, 2], &[3, 3]]));
        assert_eq!(f_words(1, 4).unwrap(), words(&[&[1], &[2, 1], &[2, 2, 1], &[2, 2, 2, 1], &[2, 2, 2, 2]]));
        assert!(matches!(f_words(2, 3), Err(Error::NotDivisible { n: 2, m: 3 })));
    }

    #[test]
    fn f_apply_examples() {
        let f12: H = f(1, 2).unwrap();
        let s2 = Element::generator(AlgebraTag::Finite(3), 2).unwrap();
        assert_eq!(f12.apply(&s2).unwrap().to_string(), "s2 s1");
        let f24: H = f(2, 4).unwrap();
        let s5 = Element::generator(AlgebraTag::Finite(5), 5).unwrap();
        assert_eq!(f24.apply(&s5).unwrap().to_string(), "s3 s3");
        let id: H = f(3, 3).unwrap();
        assert_eq!(id.domain(), AlgebraTag::Finite(4));
    }

    #[test]
    fn f_inf_examples() {
        assert_eq!(f_inf_word(1, 4), Word(vec![2, 2, 2, 1]));
        assert_eq!(f_inf_word(2, 5), Word(vec![3, 3, 1]));
        let h: H = f_inf(3).unwrap();
        assert_eq!(h.checked_generators(), 32);
        let r = crate::code::validate_prefix_code(&h.image_words().unwrap(), 4).unwrap();
        assert!(r.prefix_free && !r.maximal);
    }

    #[test]
    fn q_examples() {
        let q21: H = q(2, 1).unwrap();
        assert_eq!(q21.domain(), AlgebraTag::Finite(4));
        assert_eq!(q21.image(3).as_isometry_word(), Some(&Word(vec![2, 1])));
        assert!(q21.code_report().unwrap().maximal);
        let q31: H = q(3, 1).unwrap();
        assert_eq!(q31.image(4).as_isometry_word(), Some(&Word(vec![2, 1])));
        assert_eq!(r_n(2, 3).unwrap(), 16);
        assert!(r_n(2, 7).is_err());
    }

    #[test]
    fn existence_predicate() {
        let o = AlgebraTag::Finite;
        assert!(hom_exists(o(5), o(3)));
        assert!(!hom_exists(o(3), o(4)));
        assert!(hom_exists(o(7), o(7)));
        assert!(!hom_exists(o(3), AlgebraTag::Infinite));
        assert!(hom_exists(AlgebraTag::Infinite, o(4)));
    }
}
