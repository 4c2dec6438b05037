//! An embedding `O_{m+1} → O_{n+1}` as a refinement of a partition of the
//! unit interval.
//!
//! A word `J` over `N` letters names the `N`-adic interval
//! `[Σ_k (j_k - 1) N^{-k}, … + N^{-|J|})`; the ranges of the generators of a
//! Cuntz algebra partition `[0, 1)`. Along a chain `n_1 ⪯ … ⪯ n_k`, the
//! generators of `R_{n_j}` are pushed to `R_{n_1}` by `f_{n_1,n_j}`; each
//! row of the picture refines the one above it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::f_words;
use crate::poset::Chain;
use crate::word::Word;

/// `[start, end)` of the interval named by `w` over `alphabet` letters.
pub fn interval(w: &Word, alphabet: u32) -> (BigRational, BigRational) {
    let base = BigRational::from_integer(BigInt::from(alphabet));
    let mut start = BigRational::zero();
    let mut width = BigRational::one();
    for &k in w.letters() {
        width = width / &base;
        start += &width * BigRational::from_integer(BigInt::from(k - 1));
    }
    let end = &start + &width;
    (start, end)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionRow {
    /// The chain element `n`; the row shows the generators of `R_n`.
    pub n: u64,
    /// Images in the bottom algebra of the generators `1..=n+1`.
    pub words: Vec<Word>,
    /// Cut points in `(0, 1)`, increasing.
    pub cuts: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionPicture {
    pub chain: Chain,
    pub rows: Vec<PartitionRow>,
}

fn index(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("chain element {n} too large")))
}

pub fn partition_picture(chain: &Chain) -> Result<PartitionPicture> {
    let bottom = index(chain.elements()[0])?;
    let alphabet = bottom + 1;
    let mut rows = Vec::new();
    for &n in chain.elements() {
        let words = f_words(bottom, index(n)?)?;
        let mut intervals: Vec<_> = words.iter().map(|w| interval(w, alphabet)).collect();
        intervals.sort();
        let cuts = intervals.iter().skip(1).map(|(s, _)| s.clone()).collect();
        rows.push(PartitionRow { n, words, cuts });
    }
    Ok(PartitionPicture { chain: chain.clone(), rows })
}

impl PartitionPicture {
    /// First consecutive pair of rows where the lower row fails to refine
    /// the upper one (a cut of the upper row missing below).
    pub fn refinement_failure(&self) -> Option<(u64, u64, BigRational)> {
        for pair in self.rows.windows(2) {
            if let Some(c) = pair[0].cuts.iter().find(|c| !pair[1].cuts.contains(c)) {
                return Some((pair[0].n, pair[1].n, c.clone()));
            }
        }
        None
    }

    /// Aligned text rows of the given character width, one per chain
    /// element, with `|` at every cut.
    pub fn render(&self, width: usize) -> String {
        let label_width = self.rows.iter().map(|r| format!("O{}", r.n + 1).len()).max().unwrap_or(0);
        let mut out = String::new();
        for row in &self.rows {
            let mut line = vec!['-'; width + 1];
            line[0] = '|';
            line[width] = '|';
            for c in &row.cuts {
                let pos = (c * BigRational::from_integer(BigInt::from(width))).round().to_integer().to_usize().unwrap_or(0);
                line[pos.min(width)] = '|';
            }
            let words: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
            out += &format!("{:>lw$} {}  {}\n", format!("O{}", row.n + 1), line.into_iter().collect::<String>(), words.join(" "), lw = label_width);
        }
        out
    }
}
