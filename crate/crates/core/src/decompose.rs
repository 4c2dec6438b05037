//! The direct-sum decomposition `Q_n = Q_∞ ⊕ V_n ⊕ V_n*` inside `O_2`.
//!
//! `Q_n` is spanned by `x y*` with `x, y ∈ L_n ∪ {ε}`. Writing
//! `x = x'·2^{an}`, `y = y'·2^{bn}` with `x', y'` ending in `1` (or empty):
//!
//! * `a = b = 0` lies in `Q_∞`;
//! * `a > 0 = b` lies in `V_n`, `a = 0 < b` in `V_n*`;
//! * `a, b > 0` is rewritten with
//!   `t_2^m t_2^{*m} = I - Σ_{k<m} t_2^k t_1 t_1^* t_2^{*k}`
//!   into one `V_n` (or `V_n*`) monomial plus `Q_∞` terms, or into `Q_∞`
//!   terms only when `a = b`.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semigroup::{in_l, trailing_twos};
use crate::word::{AlgebraTag, Monomial, Word};

const O2: AlgebraTag = AlgebraTag::Finite(2);

/// The three components of an element of `Q_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<S: Scalar> {
    pub q_inf: Element<S>,
    pub v: Element<S>,
    pub v_star: Element<S>,
}

/// Which summand a monomial shape belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    QInf,
    V,
    VStar,
}

fn in_l_inf_or_empty(w: &Word) -> bool {
    w.is_empty() || (w.last() == Some(1) && w.letters().iter().all(|&k| k == 1 || k == 2))
}

fn ends_in_k(n: u32, w: &Word) -> bool {
    let t = trailing_twos(w);
    t > 0 && t % n as usize == 0 && w.letters().iter().all(|&k| k == 1 || k == 2)
}

/// Shape predicate of a monomial after rewriting; the three shapes are
/// pairwise exclusive (they differ in how `J` and `K` end).
pub fn component_of(n: u32, m: &Monomial) -> Option<Component> {
    let (j, k) = (&m.left, &m.right);
    if in_l_inf_or_empty(j) && in_l_inf_or_empty(k) {
        Some(Component::QInf)
    } else if ends_in_k(n, j) && in_l_inf_or_empty(k) {
        Some(Component::V)
    } else if in_l_inf_or_empty(j) && ends_in_k(n, k) {
        Some(Component::VStar)
    } else {
        None
    }
}

fn split(w: &Word) -> (Word, usize) {
    let t = trailing_twos(w);
    (Word(w.letters()[..w.len() - t].to_vec()), t)
}

fn with_tail(prefix: &Word, twos: usize, then_one: bool) -> Word {
    let mut v = prefix.letters().to_vec();
    v.extend(std::iter::repeat(2).take(twos));
    if then_one {
        v.push(1);
    }
    Word(v)
}

/// Raw rewriting of one monomial into `(component, monomial, sign)` pieces.
fn pieces(n: u32, m: &Monomial) -> Result<Vec<(Component, Monomial, bool)>> {
    let ok = |w: &Word| w.is_empty() || in_l(n, w);
    if n == 0 || !ok(&m.left) || !ok(&m.right) {
        return Err(Error::Unclassifiable(m.to_string()));
    }
    let (x, a) = split(&m.left);
    let (y, b) = split(&m.right);
    let mono = |j: Word, k: Word| Monomial { left: j, right: k };
    let out = match (a, b) {
        (0, 0) => vec![(Component::QInf, m.clone(), false)],
        (_, 0) => vec![(Component::V, m.clone(), false)],
        (0, _) => vec![(Component::VStar, m.clone(), false)],
        _ => {
            let common = a.min(b);
            let mut out = Vec::with_capacity(common + 1);
            // x t2^{a-c} (t2^c t2*^c) t2*^{b-c} y* with c = min(a, b)
            let (la, lb) = (a - common, b - common);
            let head = mono(with_tail(&x, la, false), with_tail(&y, lb, false));
            let head_component = match (la, lb) {
                (0, 0) => Component::QInf,
                (_, 0) => Component::V,
                _ => Component::VStar,
            };
            out.push((head_component, head, false));
            for k in 0..common {
                out.push((Component::QInf, mono(with_tail(&x, la + k, true), with_tail(&y, lb + k, true)), true));
            }
            out
        }
    };
    Ok(out)
}

/// Splits a monomial `s_J s_K*` with `J, K ∈ L_n ∪ {ε}` into its
/// `(Q_∞, V_n, V_n*)` parts.
pub fn classify_monomial<S: Scalar>(n: u32, m: &Monomial) -> Result<Decomposition<S>> {
    decompose_element(n, &Element::monomial(O2, m.clone(), S::one())?)
}

/// Linear extension of [`classify_monomial`] to elements of `O_2`.
///
/// The parts are like-term combined but deliberately not collapsed: the
/// canonical form of a `Q_∞` element may use monomials such as
/// `t_2^2 t_2^{*2}`, whereas the parts are kept in the spanning monomials of
/// their summand. Compare them with [`crate::oracle::equals`].
pub fn decompose_element<S: Scalar>(n: u32, e: &Element<S>) -> Result<Decomposition<S>> {
    O2.ensure_same(e.tag())?;
    let mut parts = [Element::zero(O2), Element::zero(O2), Element::zero(O2)];
    for (m, c) in e.terms() {
        for (comp, piece, negative) in pieces(n, m)? {
            let coeff = if negative { -c.clone() } else { c.clone() };
            let slot = match comp {
                Component::QInf => 0,
                Component::V => 1,
                Component::VStar => 2,
            };
            parts[slot].accumulate(piece, coeff);
        }
    }
    let [q_inf, v, v_star] = parts;
    Ok(Decomposition { q_inf, v, v_star })
}

impl<S: Scalar> Decomposition<S> {
    pub fn sum(&self) -> Result<Element<S>> {
        self.q_inf.add(&self.v)?.add(&self.v_star)
    }

    /// First monomial of a part that fails its own shape predicate.
    pub fn shape_violation(&self, n: u32) -> Option<(Component, Monomial)> {
        let parts = [(Component::QInf, &self.q_inf), (Component::V, &self.v), (Component::VStar, &self.v_star)];
        for (comp, part) in parts {
            for m in part.terms().keys() {
                if component_of(n, m) != Some(comp) {
                    return Some((comp, m.clone()));
                }
            }
        }
        None
    }
}
