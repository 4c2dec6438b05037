//! Algebra tags, generator words and reduced monomials `s_J s_K*`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The ambient algebra: `O_N` with `N >= 2` generators, or `O_∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    Finite(u32),
    Infinite,
}

impl AlgebraTag {
    pub fn finite(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTag(n));
        }
        Ok(AlgebraTag::Finite(n))
    }

    /// `R_n = O_{n+1}`.
    pub fn r(n: u32) -> Self {
        assert!(n >= 1, "R_n needs n >= 1");
        AlgebraTag::Finite(n + 1)
    }

    pub fn generators(self) -> Option<u32> {
        match self {
            AlgebraTag::Finite(n) => Some(n),
            AlgebraTag::Infinite => None,
        }
    }

    pub fn contains_index(self, k: u32) -> bool {
        k >= 1
            && match self {
                AlgebraTag::Finite(n) => k <= n,
                AlgebraTag::Infinite => true,
            }
    }

    pub fn check_word(self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&k| !self.contains_index(k)) {
            Some(&index) => Err(Error::IndexOutOfRange { index, tag: self }),
            None => Ok(()),
        }
    }

    pub(crate) fn ensure_same(self, other: AlgebraTag) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch { left: self, right: other })
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraTag::Finite(n) => write!(f, "O{}", n),
            AlgebraTag::Infinite => f.write_str("Oinf"),
        }
    }
}

impl FromStr for AlgebraTag {
    type Err = Error;

    /// Accepts `O3`, `O_3`, `Oinf`, `O_inf`, `O∞`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix("O_")
            .or_else(|| t.strip_prefix('O'))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown algebra `{}`", s)))?;
        match body {
            "inf" | "∞" => Ok(AlgebraTag::Infinite),
            digits => {
                let n: u32 = digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("unknown algebra `{}`", s)))?;
                AlgebraTag::finite(n)
            }
        }
    }
}

/// A word `j_1 j_2 … j_m` of 1-based generator indices; empty is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(k: u32) -> Self {
        Word(vec![k])
    }

    /// `k` repeated `times` times.
    pub fn power(k: u32, times: usize) -> Self {
        Word(vec![k; times])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// `other = self · rest` ⇒ `Some(rest)`.
    pub fn strip_prefix_of(&self, other: &Word) -> Option<Word> {
        other.0.strip_prefix(self.0.as_slice()).map(|r| Word(r.to_vec()))
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl From<&[u32]> for Word {
    fn from(v: &[u32]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<u32> for Word {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Compact digit form for single-digit alphabets (`2211`), dotted otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let compact = self.0.iter().all(|&k| k < 10);
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(".")?;
            }
            write!(f, "{}", k)?;
        }
        Ok(())
    }
}

/// `s_J s_K*`, stored as the pair `(J, K)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub left: Word,
    pub right: Word,
}

impl Monomial {
    pub fn new(left: impl Into<Word>, right: impl Into<Word>) -> Self {
        Monomial { left: left.into(), right: right.into() }
    }

    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn is_unit(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// Gauge grade `|J| - |K|`.
    pub fn grade(&self) -> i64 {
        self.left.len() as i64 - self.right.len() as i64
    }

    /// Total number of generator letters, `|J| + |K|`.
    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn adjoint(&self) -> Monomial {
        Monomial { left: self.right.clone(), right: self.left.clone() }
    }

    /// `(s_J s_K*)(s_L s_M*)` under the Cuntz relations, or `None` for zero.
    pub fn multiply(&self, other: &Monomial) -> Option<Monomial> {
        let (k, l) = (&self.right, &other.left);
        if let Some(rest) = k.strip_prefix_of(l) {
            Some(Monomial { left: self.left.concat(&rest), right: other.right.clone() })
        } else {
            l.strip_prefix_of(k)
                .map(|rest| Monomial { left: self.left.clone(), right: other.right.concat(&rest) })
        }
    }

    /// Splits off the longest common suffix of `J` and `K`:
    /// `(J0, K0, L)` with `J = J0·L`, `K = K0·L` and `J0`, `K0` not ending
    /// in the same letter. `(J0, K0)` is the root of the expansion tree the
    /// monomial belongs to.
    pub fn split_root(&self) -> (Monomial, Vec<u32>) {
        let (j, k) = (self.left.letters(), self.right.letters());
        let common = j.iter().rev().zip(k.iter().rev()).take_while(|(a, b)| a == b).count();
        let root = Monomial::new(&j[..j.len() - common], &k[..k.len() - common]);
        (root, j[j.len() - common..].to_vec())
    }

    /// `(J·L, K·L)`.
    pub fn extend(&self, path: &[u32]) -> Monomial {
        let mut left = self.left.0.clone();
        left.extend_from_slice(path);
        let mut right = self.right.0.clone();
        right.extend_from_slice(path);
        Monomial { left: Word(left), right: Word(right) }
    }
}

impl fmt::Display for Monomial {
    /// Surface syntax: `s1 s2 s3' s1'` for `s_{12} s_{13}*`, `I` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("I");
        }
        let mut first = true;
        for k in self.left.letters() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "s{}", k)?;
        }
        for k in self.right.letters().iter().rev() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "s{}'", k)?;
        }
        Ok(())
    }
}

/// All words of exactly `len` letters over `{1..alphabet}` in lexicographic order.
pub fn words_of_length(alphabet: u32, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |k| {
                    let mut v = w.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word).collect()
}

/// All words of length `0..=max_len`.
pub fn words_up_to(alphabet: u32, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(alphabet, l)).collect()
}
