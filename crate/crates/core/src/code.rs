//! Prefix-code certificates for isometry-word homomorphisms.
//!
//! If every generator image is an isometry `s_w`, the Cuntz relations among
//! the images reduce to combinatorics of the words: `s_u* s_v = 0` iff `u`
//! and `v` are prefix-incomparable, and `Σ s_w s_w* = I` iff the code is
//! maximal (Kraft sum exactly 1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub prefix_free: bool,
    /// `Σ N^{-|w|}`, exact.
    pub kraft_sum: BigRational,
    /// `prefix_free && kraft_sum == 1`.
    pub maximal: bool,
    /// Positions `(i, j)`, `i < j`, of one word pair where one is a prefix
    /// of the other (equal words included).
    pub conflict: Option<(usize, usize)>,
}

pub fn validate_prefix_code(words: &[Word], alphabet: u32) -> Result<CodeReport> {
    if words.is_empty() {
        return Err(Error::EmptyCode);
    }
    let base = BigRational::from_integer(BigInt::from(alphabet));
    let kraft_sum = words.iter().fold(BigRational::zero(), |acc, w| acc + (&base).pow(w.len() as i32).recip());

    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_by(|&a, &b| words[a].cmp(&words[b]));
    // In lexicographic order a prefix is immediately followed by a word it
    // prefixes, so adjacent pairs suffice.
    let conflict = order.windows(2).find(|p| words[p[0]].is_prefix_of(&words[p[1]])).map(|p| (p[0].min(p[1]), p[0].max(p[1])));

    let prefix_free = conflict.is_none();
    let maximal = prefix_free && kraft_sum.is_one();
    Ok(CodeReport { prefix_free, kraft_sum, maximal, conflict })
}
