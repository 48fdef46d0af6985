//! Vincular 3-patterns: parsing, occurrence counting and the pairing induced
//! by reverse-complement conjugation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An element of `S_3`, written as its one-line word (`123`, `132`, …).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Classical([u8; 3]);

impl Classical {
    pub const ALL: [Classical; 6] = [
        Classical([1, 2, 3]),
        Classical([1, 3, 2]),
        Classical([2, 1, 3]),
        Classical([2, 3, 1]),
        Classical([3, 1, 2]),
        Classical([3, 2, 1]),
    ];

    pub fn new(letters: [u8; 3]) -> Option<Self> {
        let mut sorted = letters;
        sorted.sort_unstable();
        (sorted == [1, 2, 3]).then_some(Self(letters))
    }

    pub fn letters(self) -> [u8; 3] {
        self.0
    }

    /// The pattern formed by three distinct values (in position order).
    pub fn standardize<T: Ord>(a: T, b: T, c: T) -> Self {
        let rank = |x: &T| 1 + [&a, &b, &c].iter().filter(|y| **y < x).count() as u8;
        Self([rank(&a), rank(&b), rank(&c)])
    }

    /// Reverse then complement: `123↔123, 132↔213, 231↔312, 321↔321`.
    pub fn reverse_complement(self) -> Self {
        let [a, b, c] = self.0;
        Self([4 - c, 4 - b, 4 - a])
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a}{b}{c}")
    }
}

impl FromStr for Classical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let bad = || Error::PatternParse { input: s.into(), reason: "not a permutation of 123".into() };
        if bytes.len() != 3 || !bytes.iter().all(|b| (b'1'..=b'3').contains(b)) {
            return Err(bad());
        }
        Self::new([bytes[0] - b'0', bytes[1] - b'0', bytes[2] - b'0']).ok_or_else(bad)
    }
}

/// A vincular pattern of length 3.
///
/// `adj12`/`adj23` mean the corresponding letters carry no dash and must be
/// adjacent in an occurrence; `left_anchor`/`right_anchor` correspond to a
/// square bracket and pin the occurrence to the first/last position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VincularPattern {
    pub letters: Classical,
    pub adj12: bool,
    pub adj23: bool,
    pub left_anchor: bool,
    pub right_anchor: bool,
}

impl VincularPattern {
    /// Rejects the four-condition patterns `[abc]`.
    pub fn new(letters: Classical, adj12: bool, adj23: bool, left_anchor: bool, right_anchor: bool) -> Result<Self> {
        let p = Self { letters, adj12, adj23, left_anchor, right_anchor };
        if p.k() > 3 {
            return Err(Error::PatternParse {
                input: p.to_string(),
                reason: format!(
                    "k = 4 is not supported; [{l}] only occurs in S_3 where it is identical to ({l})",
                    l = letters
                ),
            });
        }
        Ok(p)
    }

    /// The classical pattern `(a-b-c)`.
    pub fn classical(letters: Classical) -> Self {
        Self { letters, adj12: false, adj23: false, left_anchor: false, right_anchor: false }
    }

    /// Number of adjacency and anchor conditions.
    pub fn k(&self) -> usize {
        [self.adj12, self.adj23, self.left_anchor, self.right_anchor]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn is_classical(&self) -> bool {
        self.k() == 0
    }

    /// Drops every adjacency and anchor condition.
    pub fn classical_closure(&self) -> Self {
        Self::classical(self.letters)
    }

    /// The partner pattern under `π ↦ σ⁻¹πσ` with `σ = n…21`: the bracket and
    /// dash layout is mirrored and the letters are reverse-complemented.
    pub fn pattern_pair(&self) -> Self {
        Self {
            letters: self.letters.reverse_complement(),
            adj12: self.adj23,
            adj23: self.adj12,
            left_anchor: self.right_anchor,
            right_anchor: self.left_anchor,
        }
    }

    /// Whether 0-based positions `a < b < c` in a word of length `n` satisfy
    /// the adjacency and anchor conditions.
    pub fn positions_allowed(&self, n: usize, a: usize, b: usize, c: usize) -> bool {
        (!self.adj12 || b == a + 1)
            && (!self.adj23 || c == b + 1)
            && (!self.left_anchor || a == 0)
            && (!self.right_anchor || c + 1 == n)
    }

    /// Number of occurrences in `pi`; 0 when `pi` has fewer than 3 letters.
    pub fn count_occurrences(&self, pi: &Permutation) -> u64 {
        let w = pi.word();
        let n = w.len();
        if n < 3 {
            return 0;
        }
        let target = self.letters;
        let mut count = 0;
        let a_range = if self.left_anchor { 0..1 } else { 0..n - 2 };
        for a in a_range {
            let b_range = if self.adj12 { a + 1..a + 2 } else { a + 1..n - 1 };
            for b in b_range {
                let c_range = match (self.adj23, self.right_anchor) {
                    (true, _) => b + 1..b + 2,
                    (false, true) => n - 1..n,
                    (false, false) => b + 1..n,
                };
                for c in c_range {
                    if c <= b || c >= n || !self.positions_allowed(n, a, b, c) {
                        continue;
                    }
                    if Classical::standardize(w[a], w[b], w[c]) == target {
                        count += 1;
                    }
                }
            }
        }
        count
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.letters.letters();
        let open = if self.left_anchor { '[' } else { '(' };
        let close = if self.right_anchor { ']' } else { ')' };
        let s12 = if self.adj12 { "" } else { "-" };
        let s23 = if self.adj23 { "" } else { "-" };
        write!(f, "{open}{a}{s12}{b}{s23}{c}{close}")
    }
}

/// Grammar: `open d1 sep d2 sep d3 close` with `open ∈ {(, [}`,
/// `close ∈ {), ]}`, `sep ∈ {-, ε}` and `d1d2d3` a permutation of `123`.
/// No whitespace is accepted anywhere.
impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PatternParse { input: s.into(), reason: reason.into() };
        let chars: Vec<char> = s.chars().collect();
        if chars.len() < 5 {
            return Err(fail("too short"));
        }
        let left_anchor = match chars[0] {
            '[' => true,
            '(' => false,
            _ => return Err(fail("must start with '(' or '['")),
        };
        let right_anchor = match chars[chars.len() - 1] {
            ']' => true,
            ')' => false,
            _ => return Err(fail("must end with ')' or ']'")),
        };
        let body = &chars[1..chars.len() - 1];
        let mut digits = Vec::with_capacity(3);
        let mut dashes = Vec::with_capacity(2);
        let mut pending_dash = false;
        for (i, &ch) in body.iter().enumerate() {
            match ch {
                '1'..='3' => {
                    if !digits.is_empty() {
                        dashes.push(pending_dash);
                    } else if pending_dash {
                        return Err(fail("dash before the first letter"));
                    }
                    pending_dash = false;
                    digits.push(ch as u8 - b'0');
                }
                '-' => {
                    if pending_dash || i + 1 == body.len() {
                        return Err(fail("misplaced dash"));
                    }
                    pending_dash = true;
                }
                c if c.is_whitespace() => return Err(fail("whitespace is not allowed")),
                _ => return Err(fail("unexpected character")),
            }
        }
        if digits.len() != 3 {
            return Err(fail("expected exactly three letters"));
        }
        let letters = Classical::new([digits[0], digits[1], digits[2]])
            .ok_or_else(|| fail("letters must be a permutation of 1, 2, 3"))?;
        Self::new(letters, !dashes[0], !dashes[1], left_anchor, right_anchor).map_err(|e| match e {
            Error::PatternParse { reason, .. } => fail(&reason),
            other => other,
        })
    }
}

/// Every vincular 3-pattern with at most three conditions (90 patterns),
/// ordered by `k`, then by condition layout, then by letters.
pub fn all_patterns() -> Vec<VincularPattern> {
    let mut out = Vec::with_capacity(90);
    for k in 0..=3 {
        for mask in 0u8..16 {
            if mask.count_ones() as usize != k {
                continue;
            }
            for letters in Classical::ALL {
                let p = VincularPattern {
                    letters,
                    left_anchor: mask & 8 != 0,
                    adj12: mask & 4 != 0,
                    adj23: mask & 2 != 0,
                    right_anchor: mask & 1 != 0,
                };
                out.push(p);
            }
        }
    }
    out
}
