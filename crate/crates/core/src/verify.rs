//! Verification suites behind the `verify` commands.
//!
//! Each suite can be run with a deliberately corrupted homomorphism
//! (`inject_fault`), which must make it report a counterexample.

use std::fmt;

use num_traits::One;

use crate::decompose::{component_of, decompose_element};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::families::{f, f_inf_checked, f_inf_word, q};
use crate::hom::GenHom;
use crate::inverse::psi_with;
use crate::oracle::equals;
use crate::poset::Chain;
use crate::scalar::{Coefficient, Scalar};
use crate::semigroup::{decompose_word, in_k, in_l, in_l_inf, WordSplit};
use crate::state::state_omega;
use crate::uhf::{uhf_chain_check_with, UhfReport};
use crate::word::{words_of_length, AlgebraTag, Monomial, Word};

/// Outcome of a suite: how many checks ran and the first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub checks: u64,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: {} checks passed", self.suite, self.checks),
            Some(c) => write!(f, "{}: refuted after {} checks\ncounterexample: {}", self.suite, self.checks, c),
        }
    }
}

/// `h` with the images of `s_1` and `s_2` exchanged (still a valid hom).
pub fn swap_first_two<S: Scalar>(h: &GenHom<S>) -> Result<GenHom<S>> {
    let mut images = h.images();
    if images.len() < 2 {
        return Err(Error::InvalidArgument("need at least two generators to swap".into()));
    }
    images.swap(0, 1);
    GenHom::new(h.domain(), h.codomain(), images)
}

fn exact_f(n: u32, m: u32, inject_fault: bool) -> Result<GenHom<Coefficient>> {
    let h = f(n, m)?;
    if inject_fault {
        swap_first_two(&h)
    } else {
        Ok(h)
    }
}

/// `f(n, m) ∘ f(m, l) = f(n, l)` on all generators, for `n | m | l ≤ max`.
pub fn inverse_system(max: u32, inject_fault: bool) -> Result<SuiteResult> {
    let mut checks = 0;
    for l in 1..=max {
        for m in (1..=l).filter(|m| l % m == 0) {
            for n in (1..=m).filter(|n| m % n == 0) {
                let composed = exact_f(n, m, inject_fault)?.compose(&f(m, l)?)?;
                let direct = f(n, l)?;
                checks += 1;
                if let Some(&k) = composed.disagreements(&direct, l + 1)?.first() {
                    return Ok(SuiteResult {
                        suite: "inverse-system",
                        checks,
                        counterexample: Some(format!(
                            "f({n},{m}) o f({m},{l}) sends s{k} to {} but f({n},{l}) sends it to {}",
                            composed.image(k),
                            direct.image(k)
                        )),
                    });
                }
            }
        }
    }
    Ok(SuiteResult { suite: "inverse-system", checks, counterexample: None })
}

fn embedding(n: u32, bound: u32, corrupt: bool) -> Result<GenHom<Coefficient>> {
    if !corrupt {
        return f_inf_checked(n, bound);
    }
    let codomain = AlgebraTag::r(n);
    GenHom::from_rule(codomain, bound, move |k| {
        let k = match k {
            1 => 2,
            2 => 1,
            k => k,
        };
        Element::word(codomain, f_inf_word(n, k)).expect("block words are in range")
    })
}

/// `ψ_Λ(x)` is coherent, and `f(n, m) ∘ f_inf(m) = f_inf(n)` on generators
/// `≤ bound` for consecutive chain elements. With a fault the embedding at
/// the top of the chain is corrupted.
pub fn psi_suite(chain: &Chain, x: &Element<Coefficient>, bound: u32, inject_fault: bool) -> Result<SuiteResult> {
    let top = chain.top();
    let embed = |n: u32| embedding(n, bound, inject_fault && n as u64 == top);
    let fam = psi_with(chain, x, embed)?;
    let mut checks = 0;
    let ns = chain.elements();
    for j in 0..ns.len() {
        for l in j + 1..ns.len() {
            let (n, m) = (ns[j] as u32, ns[l] as u32);
            checks += 1;
            let pushed = f(n, m)?.apply(&fam.entries()[l])?;
            if !equals(&pushed, &fam.entries()[j])? {
                return Ok(SuiteResult {
                    suite: "psi",
                    checks,
                    counterexample: Some(format!("f({n},{m}) of the O{} entry is {pushed}, but the O{} entry is {}", m + 1, n + 1, fam.entries()[j])),
                });
            }
            let lhs = f(n, m)?.compose(&embed(m)?)?;
            let rhs = embed(n)?;
            checks += 1;
            if let Some(&k) = lhs.disagreements(&rhs, bound)?.first() {
                return Ok(SuiteResult {
                    suite: "psi",
                    checks,
                    counterexample: Some(format!("f({n},{m}) o f_inf({m}) sends s{k} to {} but f_inf({n}) sends it to {}", lhs.image(k), rhs.image(k))),
                });
            }
        }
    }
    Ok(SuiteResult { suite: "psi", checks, counterexample: None })
}

/// Every monomial `s_J s_K*` over `J, K ∈ L_n ∪ {ε}` with `|J|, |K| ≤
/// max_len` decomposes into parts summing back to it and satisfying the
/// disjoint shape predicates; and every binary word of length `≤ 10`
/// (at least `max_len`) in `L_n` splits as `L_∞ ⊔ Y_n`.
pub fn decomposition_suite(n: u32, max_len: usize, inject_fault: bool) -> Result<SuiteResult> {
    let o2 = AlgebraTag::Finite(2);
    let mut checks = 0;
    let fail = |checks, c: String| Ok(SuiteResult { suite: "decomposition", checks, counterexample: Some(c) });
    for len in 1..=max_len.max(10) {
        for w in words_of_length(2, len) {
            checks += 1;
            let member = in_l(n, &w);
            let ok = match decompose_word(n, &w) {
                Ok(WordSplit::LInf) => member && in_l_inf(&w),
                Ok(WordSplit::Y { prefix, run }) => {
                    member && !in_l_inf(&w) && in_k(n, &run) && (prefix.is_empty() || in_l_inf(&prefix)) && prefix.concat(&run) == w
                }
                Err(_) => !member,
            };
            if !ok {
                return fail(checks, format!("word {w} splits incorrectly in L_{n}"));
            }
        }
    }
    let mut words = vec![Word::empty()];
    for len in 1..=max_len {
        words.extend(words_of_length(2, len).into_iter().filter(|w| in_l(n, w)));
    }
    for j in &words {
        for k in &words {
            let m = Monomial::new(j.clone(), k.clone());
            let input = Element::<Coefficient>::monomial(o2, m.clone(), Coefficient::one())?;
            let mut d = decompose_element(n, &input)?;
            if inject_fault {
                d.v = Element::zero(o2);
            }
            checks += 1;
            if !equals(&d.sum()?, &input)? {
                return fail(checks, format!("parts of {m} sum to {}", d.sum()?));
            }
            if let Some((comp, bad)) = d.shape_violation(n) {
                return fail(checks, format!("{comp:?} part of {m} contains {bad} (shape {:?})", component_of(n, &bad)));
            }
        }
    }
    Ok(SuiteResult { suite: "decomposition", checks, counterexample: None })
}

/// The UHF chain check; with a fault the image of `s_1` under `q(r, 1)`
/// loses its last letter.
pub fn uhf_suite(r: u32, depth: u32, inject_fault: bool) -> Result<(SuiteResult, UhfReport)> {
    let report = uhf_chain_check_with(r, depth, |r, n| {
        let h = q::<Coefficient>(r, n)?;
        if !(inject_fault && n == 1) {
            return Ok(h);
        }
        let mut images = h.images();
        let w = images[0].as_isometry_word().expect("q images are words").clone();
        images[0] = Element::word(h.codomain(), w.letters()[..w.len() - 1].to_vec())?;
        GenHom::new(h.domain(), h.codomain(), images)
    })?;
    let counterexample = if report.passed() {
        None
    } else {
        report.levels.iter().find(|lv| !lv.passed()).map(|lv| match &lv.failure {
            Some(f) => f.clone(),
            None => format!("q({r}, {}) failed: code {}, blocks {}, grades {:?}", lv.n, lv.code_ok, lv.block_ok, lv.grade_map),
        })
    };
    let checks = report.levels.len() as u64;
    Ok((SuiteResult { suite: "uhf", checks, counterexample }, report))
}

/// Words over `{1..alphabet}` of length `len`, encoded big-endian in
/// base `alphabet`, flagged by whether every letter is flagged.
fn word_flags(letter_flags: &[bool], len: usize) -> Vec<bool> {
    let mut flags = vec![true];
    for _ in 0..len {
        flags = flags.iter().flat_map(|&f| letter_flags.iter().map(move |&g| f && g)).collect();
    }
    flags
}

/// Counterexample to `ω_n(h(s_J s_K*)) = ω_m(s_J s_K*)` among monomials with
/// `|J| + |K| ≤ max_size`.
///
/// For isometry-word images `h(s_J s_K*) = s_{w_J} s_{w_K}*`, and `ω` of a
/// single monomial is `1` exactly when both words consist of the letter
/// `1`; so it suffices to know which generators have an all-ones image.
/// Other homs go through [`GenHom::apply`].
pub fn state_mismatch(h: &GenHom<Coefficient>, max_size: usize) -> Result<Option<(Monomial, Coefficient, Coefficient)>> {
    let letters = h.domain().generators().ok_or_else(|| Error::InvalidArgument("state checks need a finite domain".into()))?;
    let as_words = |code: usize, len: usize| -> Word { (0..len).rev().map(|i| (code / (letters as usize).pow(i as u32)) % letters as usize + 1).map(|k| k as u32).collect() };
    let Some(images) = h.image_words() else {
        for size in 0..=max_size {
            for a in 0..=size {
                for j in words_of_length(letters, a) {
                    for k in words_of_length(letters, size - a) {
                        let m = Monomial::new(j.clone(), k);
                        let e = Element::monomial(h.domain(), m.clone(), Coefficient::one())?;
                        let (lhs, rhs) = (state_omega(&h.apply(&e)?), state_omega(&e));
                        if lhs != rhs {
                            return Ok(Some((m, lhs, rhs)));
                        }
                    }
                }
            }
        }
        return Ok(None);
    };
    let image_ones: Vec<bool> = images.iter().map(|w| w.letters().iter().all(|&k| k == 1)).collect();
    let domain_ones: Vec<bool> = (1..=letters).map(|k| k == 1).collect();
    let img: Vec<Vec<bool>> = (0..=max_size).map(|l| word_flags(&image_ones, l)).collect();
    let dom: Vec<Vec<bool>> = (0..=max_size).map(|l| word_flags(&domain_ones, l)).collect();
    for size in 0..=max_size {
        for a in 0..=size {
            let b = size - a;
            for (cj, (&ij, &dj)) in img[a].iter().zip(&dom[a]).enumerate() {
                for (ck, (&ik, &dk)) in img[b].iter().zip(&dom[b]).enumerate() {
                    if (ij && ik) != (dj && dk) {
                        let value = |x: bool| if x { Coefficient::one() } else { num_traits::Zero::zero() };
                        return Ok(Some((Monomial::new(as_words(cj, a), as_words(ck, b)), value(ij && ik), value(dj && dk))));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `ω_n ∘ f(n, m) = ω_m` on monomials with `|J| + |K| ≤ max_size`, for
/// `n | m ≤ max`.
pub fn state_suite(max: u32, max_size: usize, inject_fault: bool) -> Result<SuiteResult> {
    let mut checks = 0;
    for m in 1..=max {
        for n in (1..=m).filter(|n| m % n == 0) {
            let h = exact_f(n, m, inject_fault)?;
            checks += 1;
            if let Some((mono, lhs, rhs)) = state_mismatch(&h, max_size)? {
                return Ok(SuiteResult {
                    suite: "state",
                    checks,
                    counterexample: Some(format!(
                        "omega_{n}(f({n},{m})({mono})) = {} but omega_{m}({mono}) = {}",
                        crate::scalar::Show(&lhs),
                        crate::scalar::Show(&rhs)
                    )),
                });
            }
        }
    }
    Ok(SuiteResult { suite: "state", checks, counterexample: None })
}
