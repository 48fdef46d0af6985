//! Expected values of class-mean statistics after `t` steps drawn uniformly
//! from a single conjugacy class.

use num::bigint::BigInt;
use num::Zero;

use crate::character::{dimension, CharacterCombination, MnEvaluator};
use crate::error::{Error, Result};
use crate::partition::IntegerPartition;
use crate::pattern::{Classical, VincularPattern};
use crate::rational::{big, binomial, factorial, frac, int, pow, ExactRational};

/// A walk of `t` steps, each drawn uniformly from the class `C_μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSpec {
    pub mu: IntegerPartition,
    pub t: u32,
}

impl WalkSpec {
    pub fn new(mu: IntegerPartition, t: u32) -> Self {
        Self { mu, t }
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }
}

/// `b_λ^(t) = (|Γ| χ^λ(μ))^t / (n! · (χ^λ(1^n))^(t−1))`.
pub fn b_coefficient(lambda: &IntegerPartition, spec: &WalkSpec) -> Result<ExactRational> {
    b_coefficient_with(lambda, spec, &mut MnEvaluator::new())
}

fn b_coefficient_with(lambda: &IntegerPartition, spec: &WalkSpec, mn: &mut MnEvaluator) -> Result<ExactRational> {
    let n = spec.n();
    if lambda.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: lambda.n() });
    }
    let gamma = big(spec.mu.class_size());
    let chi = big(mn.character(lambda, &spec.mu)?);
    let dim = big(dimension(lambda));
    let t = spec.t as i64;
    Ok(pow(&(gamma * chi), t) / (big(factorial(n as u64)) * pow(&dim, t - 1)))
}

/// `E_Γ(s, t) = n!/|Γ|^t · Σ_λ a_λ b_λ^(t)`.
pub fn expected_value(stat: &CharacterCombination, spec: &WalkSpec) -> Result<ExactRational> {
    expected_value_with(stat, spec, &mut MnEvaluator::new())
}

fn expected_value_with(stat: &CharacterCombination, spec: &WalkSpec, mn: &mut MnEvaluator) -> Result<ExactRational> {
    let n = spec.n();
    if stat.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: stat.n() });
    }
    let mut sum = ExactRational::zero();
    for (lambda, a) in stat.iter() {
        sum += a * b_coefficient_with(lambda, spec, mn)?;
    }
    let gamma = big(spec.mu.class_size());
    Ok(big(factorial(n as u64)) / pow(&gamma, spec.t as i64) * sum)
}

/// `[E(s, 0), E(s, 1), …, E(s, t_max)]` for steps from `C_μ`.
pub fn expected_series(stat: &CharacterCombination, mu: &IntegerPartition, t_max: u32) -> Result<Vec<ExactRational>> {
    let mut mn = MnEvaluator::new();
    (0..=t_max)
        .map(|t| expected_value_with(stat, &WalkSpec::new(mu.clone(), t), &mut mn))
        .collect()
}

/// Which sign to use for the `(1 − 4/(n−1))^t` term of the `(3-2-1)`
/// transposition formula. The printed `+` contradicts both the coefficient
/// table and the `t = 0` value (an increasing permutation has no `321`
/// occurrence); `Corrected` uses `−`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignReading {
    #[default]
    Corrected,
    AsPrinted,
}

/// Closed forms for `E_T(o_φ, t)`, `T` the transpositions of `S_n` and `φ`
/// a classical pattern:
///
/// `E = C(n,3)/6 + c₁ (1−2/(n−1))^t + c₂ (1−4/n)^t + c₃ (1−4/(n−1))^t + c₄ (1−6/n)^t`.
pub fn transposition_closed_form(phi: &VincularPattern, n: usize, t: u32, reading: SignReading) -> Result<ExactRational> {
    if !phi.is_classical() {
        return Err(Error::NotClassical(phi.to_string()));
    }
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let m = n as i64;
    let r = |num: i64, den: i64| frac(num, den);
    let ratio = [r(m - 3, m - 1), r(m - 4, m), r(m - 5, m - 1), r(m - 6, m)];
    let constant = big(binomial(m, 3)) / int(6);
    let a = (m + 1) * (m - 1);
    let b = (m + 1) * m * (m - 3);
    let c = (m - 1) * (m - 2);
    let d = m * (m - 2) * (m - 4);
    let c321 = match reading {
        SignReading::Corrected => r(-(2 * m - 3) * c, 60),
        SignReading::AsPrinted => r((2 * m - 3) * c, 60),
    };
    let coeffs: [ExactRational; 4] = match phi.letters.letters() {
        [1, 2, 3] => [r(a * (3 * m - 4), 60), r(b, 60), r((3 * m - 2) * c, 60), r(d, 45)],
        [3, 2, 1] => [r(-a * (m - 3), 30), r(b, 60), c321, r(d, 45)],
        [1, 3, 2] | [2, 1, 3] => [r(a * (m - 3), 60), r(-b, 120), r(-(m + 1) * c, 40), r(-d, 90)],
        [2, 3, 1] | [3, 1, 2] => [r(-a * (3 * m - 4), 120), r(-b, 120), r((m + 1) * c, 60), r(-d, 90)],
        _ => unreachable!("Classical holds a permutation of 123"),
    };
    let t = t as i64;
    Ok(coeffs.iter().zip(&ratio).fold(constant, |acc, (k, x)| acc + k * pow(x, t)))
}

/// The six classical patterns as vincular patterns.
pub fn classical_patterns() -> [VincularPattern; 6] {
    Classical::ALL.map(VincularPattern::classical)
}

/// `|C_μ|^t` as an integer, used for product-count caps.
pub fn walk_count(mu: &IntegerPartition, t: u32) -> BigInt {
    mu.class_size().pow(t)
}
