//! The UHF example: `A_{r,n} = O_{r_n}` embedded in `A_{r,1} = O_r` by
//! block words of length `2^{n-1}`, and its gauge grading.

use crate::element::Element;
use crate::error::Result;
use crate::families::{q, r_n};
use crate::hom::GenHom;
use crate::scalar::Coefficient;
use crate::word::{AlgebraTag, Monomial, Word};

fn block(n: u32) -> usize {
    1usize << (n - 1)
}

/// `s_J s_K*` over `O_r` lies in the block presentation of `A_{r,n}`:
/// both word lengths are multiples of `2^{n-1}`.
pub fn uhf_member(r: u32, n: u32, m: &Monomial) -> bool {
    let in_range = |w: &Word| w.letters().iter().all(|&k| 1 <= k && k <= r);
    r >= 2 && n >= 1 && in_range(&m.left) && in_range(&m.right) && m.left.len() % block(n) == 0 && m.right.len() % block(n) == 0
}

/// An `A_{r,n}` monomial of grade `l` with both lengths `≤ max_len`, found
/// by enumerating length pairs.
pub fn graded_witness(r: u32, n: u32, l: i64, max_len: usize) -> Option<Monomial> {
    let b = block(n);
    for a in (0..=max_len).step_by(b) {
        for c in (0..=max_len).step_by(b) {
            if a as i64 - c as i64 == l {
                let m = Monomial::new(Word::power(1, a), Word::power(1, c));
                debug_assert!(uhf_member(r, n, &m));
                return Some(m);
            }
        }
    }
    None
}

/// `A_{r,n}^{(l)}` has no spanning monomial up to `max_len`.
pub fn uhf_graded_vanishing(r: u32, n: u32, l: i64, max_len: usize) -> bool {
    graded_witness(r, n, l, max_len).is_none()
}

/// One checked link `q(r, n)` of the chain.
#[derive(Debug, Clone, PartialEq)]
pub struct UhfLevel {
    pub n: u32,
    pub domain_generators: u32,
    pub codomain_generators: u32,
    /// The image words form a maximal prefix code of words of length 2.
    pub code_ok: bool,
    /// Images of `A_{r,n+1}` generators composed down to `O_r` lie in the
    /// block subalgebra of `A_{r,n+1}`.
    pub block_ok: bool,
    /// Sampled domain grades `l` map to grade `2l`.
    pub grade_map: Vec<(i64, i64)>,
    pub grade_ok: bool,
    /// `(l, vanishes)` for `|l| ≤ 6`, `2^{n-1} ∤ l`, up to length 12.
    pub vanishing: Vec<(i64, bool)>,
    pub failure: Option<String>,
}

impl UhfLevel {
    pub fn passed(&self) -> bool {
        self.code_ok && self.block_ok && self.grade_ok && self.vanishing.iter().all(|&(_, v)| v) && self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UhfReport {
    pub r: u32,
    pub depth: u32,
    pub levels: Vec<UhfLevel>,
}

impl UhfReport {
    pub fn passed(&self) -> bool {
        !self.levels.is_empty() && self.levels.iter().all(UhfLevel::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("UHF chain r = {}, depth {}\n", self.r, self.depth);
        for lv in &self.levels {
            out += &format!(
                "  q({}, {}): O{} -> O{}  code {}  blocks {}  grades {}  vanishing {}/{}{}\n",
                self.r,
                lv.n,
                lv.domain_generators,
                lv.codomain_generators,
                ok(lv.code_ok),
                ok(lv.block_ok),
                ok(lv.grade_ok),
                lv.vanishing.iter().filter(|v| v.1).count(),
                lv.vanishing.len(),
                lv.failure.as_ref().map(|f| format!("  failure: {f}")).unwrap_or_default()
            );
        }
        out += &format!("verdict: {}\n", if self.passed() { "pass" } else { "fail" });
        out
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

const VANISHING_GRADE: i64 = 6;
const VANISHING_LEN: usize = 12;

/// Checks `q(r, n)` for `n = 1..=depth` with the given links (so that a
/// caller can substitute a corrupted one).
pub fn uhf_chain_check_with(r: u32, depth: u32, link: impl Fn(u32, u32) -> Result<GenHom<Coefficient>>) -> Result<UhfReport> {
    let base = AlgebraTag::Finite(r_n(r, 1)?);
    let mut levels = Vec::new();
    let mut down: GenHom<Coefficient> = GenHom::identity(base);
    for n in 1..=depth {
        let (dn, cn) = (r_n(r, n + 1)?, r_n(r, n)?);
        let mut failure = None;
        let qn = match link(r, n) {
            Ok(h) => Some(h),
            Err(e) => {
                failure = Some(format!("q({r}, {n}) rejected: {e}"));
                None
            }
        };
        let (mut code_ok, mut block_ok, mut grade_ok, mut grade_map) = (false, false, false, Vec::new());
        if let Some(qn) = &qn {
            let words = qn.image_words();
            code_ok = qn.code_report().is_some_and(|c| c.prefix_free && c.maximal)
                && words.as_ref().is_some_and(|ws| ws.len() == dn as usize && ws.iter().all(|w| w.len() == 2));
            // grade l ↦ 2l on s_i^l and (s_i*)^l style samples
            grade_ok = true;
            for l in -2i64..=2 {
                let m = if l >= 0 { Monomial::new(Word::power(1, l as usize), Word::empty()) } else { Monomial::new(Word::empty(), Word::power(dn, (-l) as usize)) };
                let img = qn.apply(&Element::monomial(qn.domain(), m, num_traits::One::one())?)?;
                let grades: Vec<i64> = img.terms().keys().map(|mm| mm.grade()).collect();
                let observed = grades.first().copied().unwrap_or(0);
                grade_ok &= !grades.is_empty() && grades.iter().all(|&g| g == 2 * l);
                grade_map.push((l, observed));
            }
            match down.compose(qn) {
                Ok(composed) => {
                    block_ok = (1..=dn).all(|k| composed.image(k).terms().keys().all(|m| uhf_member(r, n + 1, m) && m.left.len() == block(n + 1)));
                    down = composed;
                }
                Err(e) => failure = Some(format!("composite down to O{} rejected: {e}", base)),
            }
        }
        let vanishing = (-VANISHING_GRADE..=VANISHING_GRADE)
            .filter(|l| l % block(n) as i64 != 0)
            .map(|l| (l, uhf_graded_vanishing(r, n, l, VANISHING_LEN)))
            .collect();
        levels.push(UhfLevel { n, domain_generators: dn, codomain_generators: cn, code_ok, block_ok, grade_map, grade_ok, vanishing, failure });
        if qn.is_none() {
            break;
        }
    }
    Ok(UhfReport { r, depth, levels })
}

pub fn uhf_chain_check(r: u32, depth: u32) -> Result<UhfReport> {
    uhf_chain_check_with(r, depth, q)
}
