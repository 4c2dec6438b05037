//! The vector state `ω` with `ω(s_1) = 1`.
//!
//! Cauchy–Schwarz forces `ω(s_J s_K*) = 1` when `J` and `K` consist of the
//! letter `1` only (the unit included) and `0` otherwise. The value is
//! compatible with the Cuntz relations: of the children `(J·i, K·i)` only
//! `i = 1` can contribute, and it does exactly when `(J, K)` does.

use crate::element::Element;
use crate::scalar::Scalar;
use crate::word::Word;

fn only_ones(w: &Word) -> bool {
    w.letters().iter().all(|&k| k == 1)
}

/// `ω_n(e)` for `e ∈ R_n` (or any Cuntz algebra).
pub fn state_omega<S: Scalar>(e: &Element<S>) -> S {
    e.terms()
        .iter()
        .filter(|(m, _)| only_ones(&m.left) && only_ones(&m.right))
        .fold(S::zero(), |acc, (_, c)| acc + c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::scalar::{integer, Coefficient};
    use crate::word::AlgebraTag;

    fn omega(tag: AlgebraTag, text: &str) -> Coefficient {
        state_omega(&parse(tag, text).unwrap())
    }

    #[test]
    fn examples() {
        let o2 = AlgebraTag::r(1);
        assert_eq!(omega(o2, "s1"), integer(1));
        assert_eq!(omega(o2, "s2 s1'"), integer(0));
        for n in 2..6 {
            assert_eq!(omega(AlgebraTag::Finite(n), "I"), integer(1));
        }
        assert_eq!(omega(o2, "3 s1 s1 s1' + 2 s2"), integer(3));
    }

    #[test]
    fn independent_of_presentation() {
        let o3 = AlgebraTag::Finite(3);
        let collapsed = parse(o3, "s1 s1'").unwrap();
        let expanded = crate::element::Element::from_raw(o3, (1..=3).map(|i| (crate::word::Monomial::new(vec![1, i], vec![1, i]), integer(1))).collect());
        assert_eq!(state_omega(&collapsed), state_omega(&expanded));
    }
}
