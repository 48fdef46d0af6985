//! Permutations in one-line notation, cycle types, conjugacy-class
//! enumeration and the reverse-complement conjugation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::IntegerPartition;

/// A permutation of `[n]` stored in one-line notation with 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection on [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }


    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at the 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { word: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`: the right factor acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(Self { word: other.word.iter().map(|&v| self.word[v - 1]).collect() })
    }

    /// `sigma ∘ self ∘ sigma⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Self> {
        sigma.compose(self)?.compose(&sigma.inverse())
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] - 1;
                len += 1;
            }
            parts.push(len);
        }
        IntegerPartition::from_parts_unsorted(parts)
    }

    /// `τ_i = n + 1 − π_{n+1−i}`, i.e. conjugation by the reversal `n … 2 1`.
    pub fn psi_conjugate(&self) -> Self {
        let n = self.n();
        Self { word: (1..=n).map(|i| n + 1 - self.word[n - i]).collect() }
    }

    /// Rearranges to the next permutation in lexicographic order; returns
    /// false (leaving the word untouched) at the last one.
    pub(crate) fn advance_lex(word: &mut [usize]) -> bool {
        let n = word.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && word[i - 1] >= word[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while word[j] <= word[i - 1] {
            j -= 1;
        }
        word.swap(i - 1, j);
        word[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Accepts space- or comma-separated values (`"2 3 1"`, `"2,3,1"`), or a
/// bare digit string (`"231"`) when every value is a single digit.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let word: Vec<usize> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Self::new(word)
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some((1..=n).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if Permutation::advance_lex(&mut succ) {
            next = Some(succ);
        }
        Some(Permutation { word: current })
    })
}

/// Every permutation with cycle type `lambda`, in lexicographic order of the
/// one-line word. The class is built directly from its cycle structure and
/// sorted before being yielded.
pub fn enumerate_class(n: usize, lambda: &IntegerPartition) -> Result<impl Iterator<Item = Permutation>> {
    if lambda.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: lambda.n() });
    }
    let mut out = Vec::new();
    let mut remaining: Vec<usize> = lambda.parts().to_vec();
    let mut used = vec![false; n + 1];
    let mut word = vec![0usize; n];
    build_cycles(n, &mut remaining, &mut used, &mut word, &mut out);
    out.sort_unstable();
    Ok(out.into_iter().map(|word| Permutation { word }))
}

// Each cycle is anchored at its smallest element, so choosing (length, ordered
// tail) for the smallest unused element yields every class member once.
fn build_cycles(
    n: usize,
    remaining: &mut Vec<usize>,
    used: &mut [bool],
    word: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    let Some(anchor) = (1..=n).find(|&i| !used[i]) else {
        out.push(word.to_vec());
        return;
    };
    let mut lengths = remaining.clone();
    lengths.dedup();
    for len in lengths {
        let pos = remaining.iter().position(|&l| l == len).expect("length present");
        remaining.remove(pos);
        used[anchor] = true;
        let mut cycle = vec![anchor];
        extend_cycle(n, len, &mut cycle, remaining, used, word, out);
        used[anchor] = false;
        remaining.insert(pos, len);
    }
}

fn extend_cycle(
    n: usize,
    len: usize,
    cycle: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    used: &mut [bool],
    word: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if cycle.len() == len {
        for k in 0..len {
            word[cycle[k] - 1] = cycle[(k + 1) % len];
        }
        build_cycles(n, remaining, used, word, out);
        return;
    }
    for next in 1..=n {
        if used[next] {
            continue;
        }
        used[next] = true;
        cycle.push(next);
        extend_cycle(n, len, cycle, remaining, used, word, out);
        cycle.pop();
        used[next] = false;
    }
}

/// A fixed member of `C_lambda`: consecutive cycles `(1 2 … λ₁)(λ₁+1 …)…`.
pub fn class_representative(lambda: &IntegerPartition) -> Permutation {
    let mut word = Vec::with_capacity(lambda.n());
    let mut start = 1;
    for &part in lambda.parts() {
        for k in 0..part {
            word.push(start + (k + 1) % part);
        }
        start += part;
    }
    Permutation { word }
}
