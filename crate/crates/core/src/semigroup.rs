//! Free subsemigroups of the isometries of `O_2 = ⟨t_1, t_2⟩`.
//!
//! * `K_n = {t_2^{kn} : k ≥ 1}`
//! * `L_n` generated by `t_1, t_2 t_1, …, t_2^{n-1} t_1, t_2^n`
//! * `L_∞ = L_1 t_1`, the words ending in `1`
//! * `L_n = L_∞ ⊔ Y_n`, `Y_n = {u, x u : x ∈ L_∞, u ∈ K_n}`

use crate::error::{Error, Result};
use crate::word::Word;

fn is_binary(w: &Word) -> bool {
    w.letters().iter().all(|&k| k == 1 || k == 2)
}

/// Length of the maximal trailing run of `2`s.
pub fn trailing_twos(w: &Word) -> usize {
    w.letters().iter().rev().take_while(|&&k| k == 2).count()
}

/// `w ∈ K_n`.
pub fn in_k(n: u32, w: &Word) -> bool {
    n >= 1 && !w.is_empty() && w.letters().iter().all(|&k| k == 2) && w.len() % n as usize == 0
}

/// `w ∈ L_∞`.
pub fn in_l_inf(w: &Word) -> bool {
    is_binary(w) && w.last() == Some(1)
}

/// `w ∈ L_n`: `w` is a nonempty concatenation of the blocks
/// `1, 21, …, 2^{n-1}1, 2^n`.
///
/// Greedy parse: every 2-run followed by a `1` splits into `2^n` blocks and
/// one `2^s 1` block with `s < n`, so only the trailing 2-run constrains
/// membership; it must have length divisible by `n`.
pub fn in_l(n: u32, w: &Word) -> bool {
    n >= 1 && !w.is_empty() && is_binary(w) && trailing_twos(w) % n as usize == 0
}

/// Which side of `L_n = L_∞ ⊔ Y_n` a word lies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSplit {
    LInf,
    /// `w = prefix · u` with `prefix ∈ L_∞ ∪ {ε}` and `u = 2^{kn} ∈ K_n`.
    Y { prefix: Word, run: Word },
}

pub fn decompose_word(n: u32, w: &Word) -> Result<WordSplit> {
    if !in_l(n, w) {
        return Err(Error::NotInSemigroup { n, word: w.to_string() });
    }
    let t = trailing_twos(w);
    if t == 0 {
        return Ok(WordSplit::LInf);
    }
    let cut = w.len() - t;
    Ok(WordSplit::Y { prefix: Word(w.letters()[..cut].to_vec()), run: Word(w.letters()[cut..].to_vec()) })
}

/// The blocks of a greedy parse of `w ∈ L_n`.
pub fn parse_blocks(n: u32, w: &Word) -> Result<Vec<Word>> {
    if !in_l(n, w) {
        return Err(Error::NotInSemigroup { n, word: w.to_string() });
    }
    let n = n as usize;
    let mut blocks = Vec::new();
    let mut run = 0usize;
    for &k in w.letters() {
        if k == 2 {
            run += 1;
            if run == n {
                blocks.push(Word::power(2, n));
                run = 0;
            }
        } else {
            let mut b = vec![2; run];
            b.push(1);
            blocks.push(Word(b));
            run = 0;
        }
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str) -> Word {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    /// Every concatenation of generator blocks of total length <= max_len.
    fn brute_force_l(n: u32, max_len: usize) -> BTreeSet<Word> {
        let mut gens: Vec<Word> = (0..n as usize).map(|k| { let mut v = vec![2; k]; v.push(1); Word(v) }).collect();
        gens.push(Word::power(2, n as usize));
        let mut found = BTreeSet::new();
        let mut frontier = vec![Word::empty()];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let c = p.concat(g);
                if c.len() <= max_len && found.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        found
    }

    #[test]
    fn membership_examples() {
        assert!(in_l(2, &w("2211")));
        assert!(!in_l(2, &w("222")));
        assert!(in_k(2, &w("2222")));
        assert!(!in_k(2, &w("222")));
        assert!(in_l_inf(&w("121")));
        assert!(!in_l(2, &Word::empty()));
    }

    #[test]
    fn greedy_parse_agrees_with_enumeration() {
        for n in 1..=4 {
            let brute = brute_force_l(n, 10);
            for len in 1..=10 {
                for word in crate::word::words_of_length(2, len) {
                    assert_eq!(in_l(n, &word), brute.contains(&word), "n={n} w={word}");
                    if in_l(n, &word) {
                        let blocks = parse_blocks(n, &word).unwrap();
                        assert_eq!(blocks.iter().fold(Word::empty(), |a, b| a.concat(b)), word);
                    }
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        assert_eq!(decompose_word(2, &w("121")).unwrap(), WordSplit::LInf);
        assert_eq!(decompose_word(2, &w("122")).unwrap(), WordSplit::Y { prefix: w("1"), run: w("22") });
        assert_eq!(decompose_word(3, &w("222222")).unwrap(), WordSplit::Y { prefix: Word::empty(), run: w("222222") });
        assert!(decompose_word(2, &w("12")).is_err());
    }
}
