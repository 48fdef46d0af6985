//! Character expansions of vincular 3-pattern means.
//!
//! For fixed positions `i₁ < i₂ < i₃`, the permutations of a conjugacy class
//! split into M-sets according to the values taken at those positions. The
//! M-sets fall into ten classes `(j, ℓ)` of equal cardinality
//! `H_{jℓ}(λ)|C_λ|/(n)_j`, where `j` counts the distinct symbols among the
//! positions and values. Each `H_{jℓ}` is a fixed combination of the seven
//! closed-form characters, and the mean of a pattern count is
//!
//! ```text
//!   mean(o_φ) = 1/(n)_k · Σ_j Σ_ℓ u_{jℓ}(φ) H_{jℓ} / (j−k)!
//! ```
//!
//! with `u_{jℓ}(φ)` obtained by scanning every template of class `(j, ℓ)`
//! against every relative order of `(i₁, i₂, i₃, a₄, …, a_j)` that respects
//! the pattern's adjacency and anchor conditions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::Zero;

use crate::character::{char7, reduce_basis, CharacterCombination};
use crate::error::{Error, Result};
use crate::partition::IntegerPartition;
use crate::pattern::{Classical, VincularPattern};
use crate::rational::{big, binomial, factorial, falling, int, ExactRational};

/// Index symbols: `I1..I3` are the chosen positions, `A4..A6` further
/// distinct indices that appear as values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    I1,
    I2,
    I3,
    A4,
    A5,
    A6,
}

impl Symbol {
    pub const ALL: [Symbol; 6] = [Symbol::I1, Symbol::I2, Symbol::I3, Symbol::A4, Symbol::A5, Symbol::A6];

    pub fn is_position(self) -> bool {
        matches!(self, Symbol::I1 | Symbol::I2 | Symbol::I3)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::I1 => "i1",
            Symbol::I2 => "i2",
            Symbol::I3 => "i3",
            Symbol::A4 => "a4",
            Symbol::A5 => "a5",
            Symbol::A6 => "a6",
        })
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.to_string() == s)
            .ok_or_else(|| Error::SymbolMismatch(s.to_string()))
    }
}

/// One of the ten M-set classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HClass {
    pub j: usize,
    pub ell: usize,
}

impl HClass {
    pub const fn new(j: usize, ell: usize) -> Self {
        Self { j, ell }
    }

    pub fn index(self) -> usize {
        H_CLASSES.iter().position(|&c| c == self).expect("valid class")
    }

    pub fn try_new(j: usize, ell: usize) -> Result<Self> {
        let c = Self { j, ell };
        if H_CLASSES.contains(&c) {
            Ok(c)
        } else {
            Err(Error::InvalidClass { j, ell })
        }
    }
}

impl fmt::Display for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.ell)
    }
}

pub const H_CLASSES: [HClass; 10] = [
    HClass::new(3, 1),
    HClass::new(3, 2),
    HClass::new(3, 3),
    HClass::new(4, 1),
    HClass::new(4, 2),
    HClass::new(4, 3),
    HClass::new(4, 4),
    HClass::new(5, 1),
    HClass::new(5, 2),
    HClass::new(6, 1),
];

/// Number of classes for each `j = 3..6`.
pub fn classes_per_j(j: usize) -> usize {
    H_CLASSES.iter().filter(|c| c.j == j).count()
}

/// The M-set `M(x, y, z)`: the values prescribed at `i₁`, `i₂`, `i₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MSetTemplate {
    pub slots: [Symbol; 3],
}

impl MSetTemplate {
    /// Number of distinct symbols among the slots and `{i1, i2, i3}`.
    pub fn j(&self) -> usize {
        3 + self.slots.iter().filter(|s| !s.is_position()).count()
    }
}

impl fmt::Display for MSetTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.slots;
        write!(f, "M({a},{b},{c})")
    }
}

/// The M-set templates of class `(j, ℓ)`.
pub fn templates_for_class(j: usize, ell: usize) -> Result<Vec<MSetTemplate>> {
    use Symbol::*;
    let class = HClass::try_new(j, ell)?;
    let lists: &[[Symbol; 3]] = match (class.j, class.ell) {
        (3, 1) => &[[I1, I2, I3]],
        (3, 2) => &[[I1, I3, I2], [I3, I2, I1], [I2, I1, I3]],
        (3, 3) => &[[I2, I3, I1], [I3, I1, I2]],
        (4, 1) => &[[I1, I2, A4], [I1, A4, I3], [A4, I2, I3]],
        (4, 2) => &[[I2, I1, A4], [I3, A4, I1], [A4, I3, I2]],
        (4, 3) => &[[I1, I3, A4], [I1, A4, I2], [I3, I2, A4], [A4, I2, I1], [I2, A4, I3], [A4, I1, I3]],
        (4, 4) => &[[I2, I3, A4], [I3, A4, I2], [I3, I1, A4], [A4, I3, I1], [I2, A4, I1], [A4, I1, I2]],
        (5, 1) => &[[I1, A4, A5], [A4, I2, A5], [A4, A5, I3]],
        (5, 2) => &[[I2, A4, A5], [I3, A4, A5], [A4, I1, A5], [A4, I3, A5], [A4, A5, I1], [A4, A5, I2]],
        (6, 1) => &[[A4, A5, A6]],
        _ => unreachable!(),
    };
    Ok(lists.iter().map(|&slots| MSetTemplate { slots }).collect())
}

/// A total order of the symbols `i1, i2, i3, a4, …, a_j` with
/// `i1 < i2 < i3`, listed from smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelativeOrder {
    ranking: Vec<Symbol>,
}

impl RelativeOrder {
    pub fn new(ranking: Vec<Symbol>) -> Result<Self> {
        let j = ranking.len();
        let bad = |why: &str| Error::SymbolMismatch(format!("{ranking:?}: {why}"));
        if !(3..=6).contains(&j) {
            return Err(bad("needs 3 to 6 symbols"));
        }
        let mut sorted = ranking.clone();
        sorted.sort_unstable();
        if sorted != Symbol::ALL[..j] {
            return Err(bad("symbols must be i1, i2, i3, a4, …, a_j each once"));
        }
        let positions: Vec<Symbol> = ranking.iter().copied().filter(|s| s.is_position()).collect();
        if positions != [Symbol::I1, Symbol::I2, Symbol::I3] {
            return Err(bad("i1 < i2 < i3 is required"));
        }
        Ok(Self { ranking })
    }

    pub fn j(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[Symbol] {
        &self.ranking
    }

    pub fn rank(&self, s: Symbol) -> Option<usize> {
        self.ranking.iter().position(|&x| x == s)
    }

    /// Whether the order contradicts the pattern's adjacency or anchor
    /// conditions: an `a` strictly between `i1` and `i2` (resp. `i2`, `i3`)
    /// when those letters are adjacent, below `i1` with a left anchor, or
    /// above `i3` with a right anchor.
    pub fn violates(&self, phi: &VincularPattern) -> bool {
        let r = |s| self.rank(s).expect("positions always present");
        let (r1, r2, r3) = (r(Symbol::I1), r(Symbol::I2), r(Symbol::I3));
        (phi.adj12 && r2 > r1 + 1)
            || (phi.adj23 && r3 > r2 + 1)
            || (phi.left_anchor && r1 > 0)
            || (phi.right_anchor && r3 + 1 < self.j())
    }
}

impl fmt::Display for RelativeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.ranking.iter().map(|s| s.to_string()).collect();
        f.write_str(&s.join("<"))
    }
}

impl FromStr for RelativeOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ranking = s.split('<').map(|t| t.trim().parse()).collect::<Result<Vec<Symbol>>>()?;
        Self::new(ranking)
    }
}

/// All `j!/6` relative orders for `3 ≤ j ≤ 6`, in lexicographic order of
/// the ranking (with `i1 < i2 < i3 < a4 < …` as the symbol order).
pub fn relative_orders(j: usize) -> Vec<RelativeOrder> {
    if !(3..=6).contains(&j) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(j);
    let mut used = [false; 6];
    fn rec(j: usize, current: &mut Vec<Symbol>, used: &mut [bool; 6], out: &mut Vec<RelativeOrder>) {
        if current.len() == j {
            out.push(RelativeOrder { ranking: current.clone() });
            return;
        }
        // The next position symbol may only appear after its predecessors.
        let next_position = (0..3).find(|&i| !used[i]);
        for idx in 0..j {
            if used[idx] || (idx < 3 && Some(idx) != next_position) {
                continue;
            }
            used[idx] = true;
            current.push(Symbol::ALL[idx]);
            rec(j, current, used, out);
            current.pop();
            used[idx] = false;
        }
    }
    rec(j, &mut current, &mut used, &mut out);
    out
}

pub fn order_violates(order: &RelativeOrder, phi: &VincularPattern) -> bool {
    order.violates(phi)
}

/// The classical pattern `π_{i₁}π_{i₂}π_{i₃}` shared by every permutation of
/// the M-set, given the relative order of all indices involved.
pub fn mset_pattern(template: &MSetTemplate, order: &RelativeOrder) -> Result<Classical> {
    let rank = |s: Symbol| order.rank(s).ok_or_else(|| Error::SymbolMismatch(s.to_string()));
    let [a, b, c] = template.slots;
    Ok(Classical::standardize(rank(a)?, rank(b)?, rank(c)?))
}

/// `H_{jℓ}(λ)` for the ten classes, in [`H_CLASSES`] order.
pub fn h_values(lambda: &IntegerPartition) -> Result<[BigInt; 10]> {
    let n = lambda.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let (p, q, r) = lambda.pqr();
    let (p, q, r, n) = (p as i128, q as i128, r as i128, n as i128);
    let vals: [i128; 10] = [
        p * (p - 1) * (p - 2),
        2 * p * q,
        3 * r,
        p * (p - 1) * (n - p),
        2 * q * (n - p - 2),
        p * (n - p - 2 * q),
        n - p - 2 * q - 3 * r,
        p * p * p + 3 * p * p + 2 * p * q - n * (2 * p * p + 3 * p) + n * n * p,
        p * p + 4 * p + 2 * p * q + 8 * q + 3 * r - n * (2 * p + 2 * q + 4) + n * n,
        -p * p * p - 9 * p * p - 20 * p - 6 * p * q - 24 * q - 6 * r + n * (3 * p * p + 18 * p + 6 * q + 20)
            - n * n * (3 * p + 9)
            + n * n * n,
    ];
    Ok(vals.map(BigInt::from))
}

/// Coefficients of each `H_{jℓ}` on the seven closed-form characters, for
/// one concrete `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCharRows {
    n: usize,
    rows: [[ExactRational; 7]; 10],
}

impl HCharRows {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, class: HClass) -> &[ExactRational; 7] {
        &self.rows[class.index()]
    }

    /// Adds `delta` to the first entry of one row. Used to check that the
    /// verification report localizes a corrupted row.
    pub fn perturb(&mut self, class: HClass, delta: ExactRational) {
        self.rows[class.index()][0] += delta;
    }

    /// `row · χ₇(λ)`.
    pub fn evaluate(&self, class: HClass, lambda: &IntegerPartition) -> Result<ExactRational> {
        let chi = char7(lambda)?;
        Ok(self.row(class).iter().zip(chi).map(|(a, x)| a * big(x)).sum())
    }
}

pub fn h_char_rows(n: usize) -> Result<HCharRows> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let m = n as i64;
    let rows: [[i64; 7]; 10] = [
        [1, 3, 3, 3, 1, 2, 1],
        [1, 1, 1, -1, 1, 0, -1],
        [1, 0, 0, 0, 1, -1, 1],
        [m - 3, 2 * m - 7, m - 5, m - 5, -1, -2, -1],
        [m - 3, -1, m - 3, -m + 3, -1, 0, 1],
        [m - 3, m - 4, -2, 0, -1, 0, 1],
        [m - 3, -1, -1, 1, -1, 1, -1],
        [m * m - 7 * m + 12, m * m - 9 * m + 20, -2 * m + 10, -2 * m + 8, 2, 2, 0],
        [m * m - 7 * m + 12, -2 * m + 8, -m + 6, m - 4, 2, -1, 0],
        [m * m * m - 12 * m * m + 47 * m - 60, -3 * m * m + 27 * m - 60, 6 * m - 30, 0, -6, 0, 0],
    ];
    Ok(HCharRows { n, rows: rows.map(|r| r.map(int)) })
}

/// `u_{jℓ}(φ)` for all ten classes.
pub fn u_coefficients(phi: &VincularPattern) -> BTreeMap<HClass, u64> {
    let mut out = BTreeMap::new();
    for class in H_CLASSES {
        let templates = templates_for_class(class.j, class.ell).expect("listed class");
        let mut count = 0;
        for order in relative_orders(class.j).iter().filter(|o| !o.violates(phi)) {
            for t in &templates {
                if mset_pattern(t, order).expect("template fits order") == phi.letters {
                    count += 1;
                }
            }
        }
        out.insert(class, count);
    }
    out
}

/// `v_ℓ(φ) = C(n − k, ℓ − k)`: index suites `(i₁, i₂, i₃, y₄, …, y_ℓ)` with a
/// fixed admissible relative order.
pub fn v_count(phi: &VincularPattern, ell: usize, n: usize) -> BigInt {
    let k = phi.k();
    if n < k || ell < k || n - k < ell - k {
        return BigInt::zero();
    }
    binomial((n - k) as i64, (ell - k) as u32)
}

/// Coefficients of the mean of `o_φ` on the seven closed-form characters,
/// before rewriting into irreducibles of `S_n`.
pub fn mean_vector7(phi: &VincularPattern, n: usize) -> Result<[ExactRational; 7]> {
    mean_vector7_with_rows(phi, &h_char_rows(n)?)
}

pub fn mean_vector7_with_rows(phi: &VincularPattern, rows: &HCharRows) -> Result<[ExactRational; 7]> {
    let n = rows.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let k = phi.k();
    let nk = big(falling(n as u64, k as u64));
    let mut acc: [ExactRational; 7] = std::array::from_fn(|_| ExactRational::zero());
    for (class, u) in u_coefficients(phi) {
        if u == 0 {
            continue;
        }
        let weight = int(u as i64) / (&nk * big(factorial((class.j - k) as u64)));
        for (slot, a) in rows.row(class).iter().enumerate() {
            acc[slot] += &weight * a;
        }
    }
    Ok(acc)
}

/// Mean of `o_φ` over each conjugacy class, as a combination of irreducible
/// characters of `S_n`.
pub fn mean_coefficients(phi: &VincularPattern, n: usize) -> Result<CharacterCombination> {
    reduce_basis(&mean_vector7(phi, n)?, n)
}

pub fn mean_coefficients_with_rows(phi: &VincularPattern, rows: &HCharRows) -> Result<CharacterCombination> {
    reduce_basis(&mean_vector7_with_rows(phi, rows)?, rows.n())
}
