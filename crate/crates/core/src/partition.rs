//! Integer partitions of `n`, used both as cycle types (conjugacy classes)
//! and as labels of irreducible characters.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A partition `λ ⊢ n` with parts stored weakly decreasing.
///
/// The derived `Ord` compares part lists lexicographically; listings that
/// are part of the public contract ([`partitions`], character combinations)
/// run in the reverse of that order, so `(n)` comes first and `(1^n)` last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Validates that `parts` is non-empty, positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let text = || parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        if parts.is_empty() {
            return Err(Error::PartitionParse { input: text(), reason: "no parts".into() });
        }
        if parts.contains(&0) {
            return Err(Error::PartitionParse { input: text(), reason: "zero part".into() });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartitionParse {
                input: text(),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `(1, 1, …, 1)`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The cycle type of a transposition in `S_n` (`n ≥ 2`).
    pub fn transposition(n: usize) -> Self {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    /// Number of fixed points (`p`).
    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    /// `(p, q, r)`: the numbers of parts of size 1, 2 and 3.
    pub fn pqr(&self) -> (i64, i64, i64) {
        (self.multiplicity(1) as i64, self.multiplicity(2) as i64, self.multiplicity(3) as i64)
    }

    /// `|C_λ| = n! / ∏ ℓ^{τ_ℓ} τ_ℓ!`.
    pub fn class_size(&self) -> BigInt {
        let mut den = BigInt::from(1);
        let mut i = 0;
        while i < self.parts.len() {
            let size = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == size).count();
            den *= BigInt::from(size).pow(mult as u32) * factorial(mult as u64);
            i += mult;
        }
        factorial(self.n() as u64) / den
    }

    /// Builds `(n - s_1 - s_2 - …, s_1, s_2, …)`; `None` when the result is
    /// not a partition (used for the shapes `(n-3,3)` etc. at small `n`).
    pub fn with_first_row(n: usize, tail: &[usize]) -> Option<Self> {
        let used: usize = tail.iter().sum();
        if used > n {
            return None;
        }
        let mut parts = vec![n - used];
        parts.extend_from_slice(tail);
        Self::new(parts).ok()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses the text form `a,b^k,…`, e.g. `"2,1^6"`. Exponents expand in
/// place; the expanded sequence must be positive and weakly decreasing.
impl FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PartitionParse { input: s.to_string(), reason: reason.into() };
        if s.is_empty() {
            return Err(fail("empty"));
        }
        let mut parts = Vec::new();
        for item in s.split(',') {
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b, e),
                None => (item, "1"),
            };
            let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
            if !digits(base) || !digits(exp) {
                return Err(fail("expected comma-separated parts with optional ^exponent"));
            }
            let base: usize = base.parse().map_err(|_| fail("part too large"))?;
            let exp: usize = exp.parse().map_err(|_| fail("exponent too large"))?;
            if base == 0 || exp == 0 {
                return Err(fail("zero part or exponent"));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Self::new(parts).map_err(|e| match e {
            Error::PartitionParse { reason, .. } => fail(&reason),
            other => other,
        })
    }
}

/// All partitions of `n`, `(n)` first and `(1^n)` last (reverse
/// lexicographic order). Empty for `n = 0`.
pub fn partitions(n: usize) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
    if rest == 0 {
        out.push(IntegerPartition { parts: current.clone() });
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill(rest - part, part, current, out);
        current.pop();
    }
}
