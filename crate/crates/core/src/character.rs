//! Irreducible characters of `S_n`: the Murnaghan–Nakayama rule, the seven
//! closed-form characters indexed by shapes with first row at least `n - 3`,
//! character combinations and the class-function inner product.

use std::collections::{BTreeMap, HashMap};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions, IntegerPartition};
use crate::rational::{big, binomial, factorial, ExactRational};

/// Tails of the seven shapes `(n), (n-1,1), (n-2,2), (n-2,1,1), (n-3,3),
/// (n-3,2,1), (n-3,1,1,1)`, in slot order.
pub const SLOT_TAILS: [&[usize]; 7] = [&[], &[1], &[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];

/// Shape of slot `i` (0-based) for size `n`, if it is a partition of `n`.
pub fn slot_shape(n: usize, slot: usize) -> Option<IntegerPartition> {
    IntegerPartition::with_first_row(n, SLOT_TAILS[slot])
}

/// Memoizing evaluator for `χ^λ(μ)` by border-strip removal.
///
/// Shapes are handled as beta-sets (first-column hook lengths); removing a
/// border strip of length `k` moves one bead from `b` to `b - k`, with sign
/// given by the parity of the beads jumped over.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn character(&mut self, lambda: &IntegerPartition, mu: &IntegerPartition) -> Result<BigInt> {
        if lambda.n() != mu.n() {
            return Err(Error::SizeMismatch { expected: lambda.n(), found: mu.n() });
        }
        Ok(self.eval(lambda.parts().to_vec(), mu.parts()))
    }

    fn eval(&mut self, shape: Vec<usize>, mu: &[usize]) -> BigInt {
        let Some((&strip, rest)) = mu.split_first() else {
            return BigInt::one();
        };
        let key = (shape, mu.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let shape = &key.0;
        let len = shape.len();
        let beads: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = BigInt::zero();
        for (idx, &b) in beads.iter().enumerate() {
            if b < strip || beads.contains(&(b - strip)) {
                continue;
            }
            let target = b - strip;
            let jumped = beads.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beads.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|a, c| c.cmp(a));
            let m = moved.len();
            let next: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (m - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let value = self.eval(next, rest);
            if jumped % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &IntegerPartition, mu: &IntegerPartition) -> Result<BigInt> {
    MnEvaluator::new().character(lambda, mu)
}

/// Degree `χ^λ(1^n)` by the hook length formula.
pub fn dimension(lambda: &IntegerPartition) -> BigInt {
    let parts = lambda.parts();
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(lambda.n() as u64) / hooks
}

/// The seven closed-form characters evaluated at a class with `p` fixed
/// points, `q` 2-cycles and `r` 3-cycles. For `n ≤ 5` some entries are not
/// irreducible characters of `S_n`; they then obey the relations applied by
/// [`reduce_basis`].
pub fn char7(lambda: &IntegerPartition) -> Result<[BigInt; 7]> {
    let n = lambda.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let (p, q, r) = lambda.pqr();
    let (bp, bq, br) = (BigInt::from(p), BigInt::from(q), BigInt::from(r));
    let c2 = binomial(p - 1, 2);
    let c3 = binomial(p - 1, 3);
    Ok([
        BigInt::one(),
        &bp - 1,
        &c2 + &bq - 1,
        &c2 - &bq,
        &c3 + (&bp - 1) * (&bq - 1) + &br,
        BigInt::from(2) * &c3 - &bp - &br + 2,
        &c3 - &bq * (&bp - 1) + &br,
    ])
}

/// A finite linear combination `Σ a_λ χ^λ` over partitions of one `n`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterCombination {
    n: usize,
    coeffs: BTreeMap<IntegerPartition, ExactRational>,
}

impl CharacterCombination {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, lambda: IntegerPartition, coeff: ExactRational) -> Result<()> {
        if lambda.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: lambda.n() });
        }
        let entry = self.coeffs.entry(lambda).or_insert_with(ExactRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn get(&self, lambda: &IntegerPartition) -> ExactRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Terms with `(n)` first (reverse lexicographic order of partitions).
    pub fn iter(&self) -> impl Iterator<Item = (&IntegerPartition, &ExactRational)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, factor: &ExactRational) -> Self {
        let mut out = Self::zero(self.n);
        if !factor.is_zero() {
            for (k, v) in &self.coeffs {
                out.coeffs.insert(k.clone(), v * factor);
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &CharacterCombination) -> Result<()> {
        if other.n != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        for (k, v) in &other.coeffs {
            self.add_term(k.clone(), v.clone())?;
        }
        Ok(())
    }

    /// `Σ a_λ χ^λ(μ)` with characters from the Murnaghan–Nakayama rule.
    pub fn evaluate(&self, mu: &IntegerPartition, mn: &mut MnEvaluator) -> Result<ExactRational> {
        if mu.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: mu.n() });
        }
        let mut total = ExactRational::zero();
        for (lambda, a) in &self.coeffs {
            total += a * big(mn.character(lambda, mu)?);
        }
        Ok(total)
    }

    /// Values on every class, as a class function.
    pub fn to_class_function(&self) -> Result<ClassFunction> {
        let mut mn = MnEvaluator::new();
        ClassFunction::try_from_fn(self.n, |mu| self.evaluate(mu, &mut mn))
    }
}

/// Rewrites `v · χ₇` in the basis of irreducible characters of `S_n`.
///
/// For `n ≥ 6` the seven shapes are distinct partitions. For smaller `n` the
/// slots that are not partitions are eliminated using
/// `n=5: χ₅ = 0`; `n=4: χ₅ = −χ₃, χ₆ = 0`;
/// `n=3: χ₃ = 0, χ₅ = −χ₂, χ₆ = −χ₄, χ₇ = 0`.
pub fn reduce_basis(v: &[ExactRational; 7], n: usize) -> Result<CharacterCombination> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    // (source slot, target slot, sign)
    let folds: &[(usize, usize, i64)] = match n {
        3 => &[(4, 1, -1), (5, 3, -1)],
        4 => &[(4, 2, -1)],
        _ => &[],
    };
    let mut w = v.clone();
    for &(from, to, sign) in folds {
        let moved = w[from].clone() * ExactRational::from_integer(sign.into());
        w[to] += moved;
        w[from] = ExactRational::zero();
    }
    let mut out = CharacterCombination::zero(n);
    for (slot, coeff) in w.into_iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        // Remaining slots without a valid shape are identically zero as functions.
        if let Some(shape) = slot_shape(n, slot) {
            out.add_term(shape, coeff)?;
        }
    }
    Ok(out)
}

/// A rational-valued class function on `S_n`, stored by cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<IntegerPartition, ExactRational>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&IntegerPartition) -> ExactRational) -> Self {
        let values = partitions(n).into_iter().map(|mu| {
            let v = f(&mu);
            (mu, v)
        });
        Self { n, values: values.collect() }
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(&IntegerPartition) -> Result<ExactRational>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for mu in partitions(n) {
            let v = f(&mu)?;
            values.insert(mu, v);
        }
        Ok(Self { n, values })
    }

    /// The irreducible character `χ^λ` as a class function.
    pub fn character(lambda: &IntegerPartition, mn: &mut MnEvaluator) -> Self {
        Self::from_fn(lambda.n(), |mu| big(mn.character(lambda, mu).expect("same n")))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &IntegerPartition) -> Option<&ExactRational> {
        self.values.get(mu)
    }
}

/// `⟨f, g⟩ = (1/n!) Σ_λ |C_λ| f(λ) g(λ)`; every value is real, so no
/// conjugation is needed.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<ExactRational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch { expected: f.n, found: g.n });
    }
    let mut sum = ExactRational::zero();
    for (mu, fv) in &f.values {
        let gv = &g.values[mu];
        sum += big(mu.class_size()) * fv * gv;
    }
    Ok(sum / big(factorial(f.n as u64)))
}
