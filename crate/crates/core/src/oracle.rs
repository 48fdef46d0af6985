//! Ground truth by enumeration and sampling, and the verification report
//! that runs every identity the library relies on.

use std::fmt;
use std::thread;

use num::bigint::BigInt;
use num::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::character::{char7, inner_product, reduce_basis, slot_shape, ClassFunction, MnEvaluator};
use crate::error::{Error, Result};
use crate::expectation::{expected_value, transposition_closed_form, classical_patterns, SignReading, WalkSpec};
use crate::mset::{h_char_rows, h_values, mean_coefficients_with_rows, mean_vector7, u_coefficients, HCharRows, HClass, H_CLASSES};
use crate::partition::{partitions, IntegerPartition};
use crate::pattern::{all_patterns, Classical, VincularPattern};
use crate::perm::{all_permutations, class_representative, enumerate_class, Permutation};
use crate::rational::{big, binomial, factorial, frac, int, to_f64, ExactRational};
use crate::statistic::CompositeStatistic;

/// Enumeration limits and parallelism for the exhaustive oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` for which a conjugacy class is enumerated.
    pub size_cap: usize,
    /// Largest number of `t`-tuples of generators enumerated.
    pub product_cap: u128,
    /// Worker threads; results do not depend on this.
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { size_cap: 8, product_cap: 10_000_000, workers: 1 }
    }
}

/// Splits `0..len` into `workers` contiguous ranges and folds each on its
/// own thread. Partial results are combined in range order.
fn chunked<T: Send>(len: usize, workers: usize, f: impl Fn(std::ops::Range<usize>) -> T + Sync) -> Vec<T> {
    let workers = workers.max(1).min(len.max(1));
    let step = len.div_ceil(workers);
    if workers == 1 {
        return vec![f(0..len)];
    }
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                let range = (w * step).min(len)..((w + 1) * step).min(len);
                scope.spawn(move || f(range))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle worker panicked")).collect()
    })
}

/// Per-term integer sums of a composite statistic over a set of permutations.
fn term_sums(stat: &CompositeStatistic, perms: &[Permutation], workers: usize) -> Vec<u128> {
    let parts = chunked(perms.len(), workers, |range| {
        let mut sums = vec![0u128; stat.terms.len()];
        for pi in &perms[range] {
            for (acc, (_, s)) in sums.iter_mut().zip(&stat.terms) {
                *acc += s.evaluate(pi) as u128;
            }
        }
        sums
    });
    parts.into_iter().fold(vec![0u128; stat.terms.len()], |mut acc, p| {
        acc.iter_mut().zip(p).for_each(|(a, b)| *a += b);
        acc
    })
}

fn combine(stat: &CompositeStatistic, sums: &[u128], count: &BigInt) -> ExactRational {
    let total: ExactRational = stat
        .terms
        .iter()
        .zip(sums)
        .map(|((c, _), &s)| c * big(BigInt::from(s)))
        .sum();
    total / big(count.clone())
}

/// Exact mean of a statistic over `C_μ` by full enumeration of the class.
pub fn brute_mean(stat: &CompositeStatistic, mu: &IntegerPartition, config: &OracleConfig) -> Result<ExactRational> {
    let n = mu.n();
    if n > config.size_cap {
        return Err(Error::SizeCap { n, cap: config.size_cap });
    }
    let members: Vec<Permutation> = enumerate_class(n, mu)?.collect();
    let sums = term_sums(stat, &members, config.workers);
    Ok(combine(stat, &sums, &BigInt::from(members.len())))
}

/// Exact mean of `o_φ` over `C_μ`.
pub fn brute_pattern_mean(phi: &VincularPattern, mu: &IntegerPartition, config: &OracleConfig) -> Result<ExactRational> {
    brute_mean(&CompositeStatistic::from(*phi), mu, config)
}

/// Exact average of `s(γ₁ ⋯ γ_t)` over all `|G|^t` tuples of generators.
pub fn brute_expected(
    stat: &CompositeStatistic,
    generators: &[Permutation],
    n: usize,
    t: u32,
    config: &OracleConfig,
) -> Result<ExactRational> {
    if t == 0 {
        return Ok(stat.evaluate(&Permutation::identity(n)));
    }
    if generators.is_empty() {
        return Err(Error::EmptyGenerators(t as usize));
    }
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(Error::SizeMismatch { expected: n, found: g.n() });
    }
    let g = generators.len() as u128;
    let count = (0..t).try_fold(1u128, |acc, _| acc.checked_mul(g)).unwrap_or(u128::MAX);
    if count > config.product_cap {
        return Err(Error::ProductCap { count, cap: config.product_cap });
    }
    let gl = generators.len();
    let parts = chunked(gl, config.workers, |range| {
        let mut sums = vec![0u128; stat.terms.len()];
        let mut digits = vec![0usize; t as usize];
        for first in range {
            digits.iter_mut().for_each(|d| *d = 0);
            digits[0] = first;
            loop {
                let mut product = generators[digits[0]].clone();
                for &d in &digits[1..] {
                    product = product.compose(&generators[d]).expect("sizes checked");
                }
                for (acc, (_, s)) in sums.iter_mut().zip(&stat.terms) {
                    *acc += s.evaluate(&product) as u128;
                }
                // odometer over digits[1..]
                let mut i = digits.len();
                loop {
                    if i == 1 {
                        break;
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < gl {
                        break;
                    }
                    digits[i] = 0;
                }
                if i == 1 && (digits.len() == 1 || digits[1..].iter().all(|&d| d == 0)) {
                    break;
                }
            }
        }
        sums
    });
    let sums = parts.into_iter().fold(vec![0u128; stat.terms.len()], |mut acc, p| {
        acc.iter_mut().zip(p).for_each(|(a, b)| *a += b);
        acc
    });
    Ok(combine(stat, &sums, &BigInt::from(count)))
}

/// A uniform element of `C_μ`: a fixed representative conjugated by a
/// uniform permutation.
pub fn sample_class<R: Rng + ?Sized>(mu: &IntegerPartition, rng: &mut R) -> Permutation {
    let rep = class_representative(mu);
    let mut word: Vec<usize> = (1..=mu.n()).collect();
    word.shuffle(rng);
    let sigma = Permutation::new(word).expect("shuffled identity");
    rep.conjugate_by(&sigma).expect("same size")
}

#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Seed of worker `w`; worker 0 uses the base seed itself.
fn worker_seed(seed: u64, w: usize) -> u64 {
    if w == 0 {
        return seed;
    }
    // splitmix64 step
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(w as u64));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Monte Carlo estimate of `E(s(γ₁ ⋯ γ_t))` with each `γ_i` uniform on `C_μ`.
/// Bit-reproducible for a fixed `(seed, samples, workers)`.
pub fn mc_expected(
    stat: &CompositeStatistic,
    mu: &IntegerPartition,
    t: u32,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let n = mu.n();
    if t == 0 {
        let v = to_f64(&stat.evaluate(&Permutation::identity(n)));
        return Ok(McEstimate { mean: v, stderr: 0.0, samples, seed });
    }
    let coeffs: Vec<f64> = stat.terms.iter().map(|(c, _)| to_f64(c)).collect();
    let workers = workers.max(1).min(samples as usize);
    let per = samples / workers as u64;
    let extra = samples % workers as u64;
    let parts = chunked(workers, workers, |range| {
        let mut acc = (0.0f64, 0.0f64);
        for w in range {
            let quota = per + u64::from((w as u64) < extra);
            let mut rng = ChaCha8Rng::seed_from_u64(worker_seed(seed, w));
            for _ in 0..quota {
                let mut product = sample_class(mu, &mut rng);
                for _ in 1..t {
                    product = product.compose(&sample_class(mu, &mut rng)).expect("same size");
                }
                let v: f64 = stat
                    .terms
                    .iter()
                    .zip(&coeffs)
                    .map(|((_, s), c)| c * s.evaluate(&product) as f64)
                    .sum();
                acc.0 += v;
                acc.1 += v * v;
            }
        }
        acc
    });
    let (sum, sumsq) = parts.into_iter().fold((0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
    let k = samples as f64;
    let mean = sum / k;
    let var = if samples > 1 { ((sumsq - k * mean * mean) / (k - 1.0)).max(0.0) } else { 0.0 };
    Ok(McEstimate { mean, stderr: (var / k).sqrt(), samples, seed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyMode {
    /// Exhaustive enumeration only.
    #[default]
    Brute,
    /// Exhaustive checks plus Monte Carlo walk and sampling checks.
    MonteCarlo,
}

/// A deliberate corruption, used to confirm that the report names the
/// failing identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds 1 to the first coefficient of one `H_{jℓ}` character row.
    PerturbHRow(HClass),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub mode: VerifyMode,
    pub seed: u64,
    pub samples: u64,
    pub oracle: OracleConfig,
    pub fault: Option<Fault>,
}

impl VerifyConfig {
    pub fn new(n_max: usize) -> Self {
        Self { n_max, mode: VerifyMode::Brute, seed: 42, samples: 20_000, oracle: OracleConfig::default(), fault: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub cases: u64,
    /// First mismatch found, if any.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {} ({} cases)", c.name, c.cases)?;
            if let Some(ce) = &c.counterexample {
                write!(f, ": {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Collects comparisons for one named check, keeping the first mismatch.
struct Check {
    name: &'static str,
    cases: u64,
    counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, counterexample: None }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn fail_with(&mut self, err: Error) {
        self.expect(false, || format!("error: {err}"));
    }

    fn finish(self) -> CheckResult {
        CheckResult { name: self.name, passed: self.counterexample.is_none(), cases: self.cases, counterexample: self.counterexample }
    }
}

fn rows_for(n: usize, fault: Option<Fault>) -> Result<HCharRows> {
    let mut rows = h_char_rows(n)?;
    if let Some(Fault::PerturbHRow(class)) = fault {
        rows.perturb(class, int(1));
    }
    Ok(rows)
}

/// Runs every identity check up to `n_max` (individual checks apply their
/// own caps, e.g. class enumeration stops at `oracle.size_cap`).
pub fn verify_suite(config: &VerifyConfig) -> VerifyReport {
    let n_max = config.n_max.max(3);
    let enum_cap = n_max.min(config.oracle.size_cap);
    let mut checks = Vec::new();

    let mut c = Check::new("occurrence-sum");
    for n in 1..=n_max.min(7) {
        let triples = if n >= 3 { (n * (n - 1) * (n - 2) / 6) as u64 } else { 0 };
        for pi in all_permutations(n) {
            let total: u64 = classical_patterns().iter().map(|p| p.count_occurrences(&pi)).sum();
            c.expect(total == triples, || format!("classical counts of {pi} sum to {total}, not {triples}"));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("psi-occurrence-symmetry");
    for n in 1..=n_max.min(6) {
        for pi in all_permutations(n) {
            let tau = pi.psi_conjugate();
            for phi in all_patterns() {
                let (a, b) = (phi.count_occurrences(&pi), phi.pattern_pair().count_occurrences(&tau));
                c.expect(a == b, || format!("{phi} on {pi} gives {a}, its pair on {tau} gives {b}"));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("class-sizes");
    for n in 1..=n_max.min(12) {
        let total: BigInt = partitions(n).iter().map(|l| l.class_size()).sum();
        c.expect(total == factorial(n as u64), || format!("class sizes of S_{n} sum to {total}"));
    }
    for n in 1..=enum_cap {
        for mu in partitions(n) {
            let count = enumerate_class(n, &mu).map(|it| it.count()).unwrap_or(0);
            c.expect(BigInt::from(count) == mu.class_size(), || format!("enumerated {count} members of C_{mu}"));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("char7-vs-mn");
    for n in 3..=n_max.min(10) {
        let mut mn = MnEvaluator::new();
        for mu in partitions(n) {
            let v = char7(&mu).expect("n >= 3");
            for (slot, want) in v.iter().enumerate() {
                if let Some(shape) = slot_shape(n, slot) {
                    let x = mn.character(&shape, &mu).expect("same n");
                    c.expect(&x == want, || format!("slot {} at λ={mu}: closed form {want} vs MN {x}", slot + 1));
                }
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("orthonormality");
    for n in 1..=n_max.min(8) {
        let mut mn = MnEvaluator::new();
        let ps = partitions(n);
        let chars: Vec<ClassFunction> = ps.iter().map(|l| ClassFunction::character(l, &mut mn)).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate().skip(i) {
                let ip = inner_product(a, b).expect("same n");
                let want = if i == j { int(1) } else { int(0) };
                c.expect(ip == want, || format!("<χ^{}, χ^{}> = {ip}", ps[i], ps[j]));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("reduce-basis");
    for n in 3..=n_max.min(8) {
        let v: [ExactRational; 7] = std::array::from_fn(|i| frac(2 * i as i64 - 5, i as i64 + 1));
        match reduce_basis(&v, n) {
            Ok(comb) => {
                let mut mn = MnEvaluator::new();
                for mu in partitions(n) {
                    let direct: ExactRational =
                        char7(&mu).expect("n >= 3").into_iter().zip(&v).map(|(x, a)| big(x) * a).sum();
                    let via = comb.evaluate(&mu, &mut mn).expect("same n");
                    c.expect(direct == via, || format!("n={n} λ={mu}: {via} vs {direct}"));
                }
            }
            Err(e) => c.fail_with(e),
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("h-rows");
    for n in 3..=n_max.min(10) {
        let rows = match rows_for(n, config.fault) {
            Ok(r) => r,
            Err(e) => {
                c.fail_with(e);
                continue;
            }
        };
        for mu in partitions(n) {
            let h = h_values(&mu).expect("n >= 3");
            for class in H_CLASSES {
                let v = rows.evaluate(class, &mu).expect("n >= 3");
                let want = big(h[class.index()].clone());
                c.expect(v == want, || format!("h-row {class} mismatch at λ={mu} (n={n}): row gives {v}, H gives {want}"));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("u61-binomial");
    for phi in all_patterns() {
        let u = u_coefficients(&phi)[&HClass::new(6, 1)];
        let want = binomial(6 - phi.k() as i64, 3);
        c.expect(BigInt::from(u) == want, || format!("u61({phi}) = {u}, expected {want}"));
    }
    checks.push(c.finish());

    let mut c = Check::new("mean-oracle-equivalence");
    for n in 3..=enum_cap {
        let rows = match rows_for(n, config.fault) {
            Ok(r) => r,
            Err(e) => {
                c.fail_with(e);
                continue;
            }
        };
        let mut mn = MnEvaluator::new();
        let classes: Vec<(IntegerPartition, Vec<Permutation>)> = partitions(n)
            .into_iter()
            .map(|mu| {
                let members = enumerate_class(n, &mu).expect("same n").collect();
                (mu, members)
            })
            .collect();
        for phi in all_patterns() {
            let comb = mean_coefficients_with_rows(&phi, &rows).expect("n >= 3");
            let stat = CompositeStatistic::from(phi);
            for (mu, members) in &classes {
                let sums = term_sums(&stat, members, config.oracle.workers);
                let brute = combine(&stat, &sums, &BigInt::from(members.len()));
                let formula = comb.evaluate(mu, &mut mn).expect("same n");
                c.expect(formula == brute, || format!("{phi} at n={n}, μ={mu}: formula {formula}, enumeration {brute}"));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("psi-mean-symmetry");
    for n in 3..=n_max.min(10) {
        for phi in all_patterns() {
            let a = mean_vector7(&phi, n).expect("n >= 3");
            let b = mean_vector7(&phi.pattern_pair(), n).expect("n >= 3");
            c.expect(a == b, || format!("{phi} and {} differ at n={n}", phi.pattern_pair()));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("caption-relations");
    let pat = |s: &str| s.parse::<VincularPattern>().expect("literal pattern");
    for n in 3..=n_max {
        let m = n as i64;
        let v = |s: &str| mean_vector7(&pat(s), n).expect("n >= 3");
        let scale = |x: [ExactRational; 7], k: ExactRational| x.map(|e| e * &k);
        let pairs = [
            ("(32-1)", "(32-1]", frac(m - 1, 2)),
            ("(123)", "[123)", int(m - 2)),
            ("(321)", "[321)", int(m - 2)),
        ];
        for (lhs, rhs, k) in pairs {
            let ok = v(lhs) == scale(v(rhs), k.clone());
            c.expect(ok, || format!("mean {lhs} != {} · mean {rhs} at n={n}", crate::rational::format_rational(&k)));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("d-n-support");
    for n in 6..=n_max.clamp(6, 12) {
        for phi in all_patterns() {
            let v = mean_vector7(&phi, n).expect("n >= 3");
            c.expect(v[4].is_zero() && v[6].is_zero(), || format!("{phi} at n={n} has e5={} e7={}", v[4], v[6]));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("t0-identity");
    for n in 3..=n_max.min(10) {
        let id = Permutation::identity(n);
        let mu = IntegerPartition::transposition(n);
        for phi in all_patterns() {
            let comb = crate::mset::mean_coefficients(&phi, n).expect("n >= 3");
            match expected_value(&comb, &WalkSpec::new(mu.clone(), 0)) {
                Ok(e) => {
                    let want = int(phi.count_occurrences(&id) as i64);
                    c.expect(e == want, || format!("{phi} at n={n}: E(t=0) = {e}, identity has {want}"));
                }
                Err(err) => c.fail_with(err),
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("transposition-closed-forms");
    for n in 3..=n_max.min(12) {
        let mu = IntegerPartition::transposition(n);
        for phi in classical_patterns() {
            let comb = crate::mset::mean_coefficients(&phi, n).expect("n >= 3");
            for t in 0..=6 {
                let lhs = transposition_closed_form(&phi, n, t, SignReading::Corrected).expect("classical");
                let rhs = expected_value(&comb, &WalkSpec::new(mu.clone(), t)).expect("same n");
                c.expect(lhs == rhs, || format!("{phi} n={n} t={t}: closed form {lhs}, pipeline {rhs}"));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("walk-exhaustive");
    {
        let n = 4;
        let mu: IntegerPartition = "2,1,1".parse().expect("literal");
        let gens: Vec<Permutation> = enumerate_class(n, &mu).expect("same n").collect();
        for phi in all_patterns() {
            let comb = crate::mset::mean_coefficients(&phi, n).expect("n >= 3");
            let stat = CompositeStatistic::from(phi);
            for t in 1..=3 {
                let formula = expected_value(&comb, &WalkSpec::new(mu.clone(), t)).expect("same n");
                match brute_expected(&stat, &gens, n, t, &config.oracle) {
                    Ok(b) => c.expect(b == formula, || format!("{phi} t={t}: formula {formula}, enumeration {b}")),
                    Err(e) => c.fail_with(e),
                }
            }
        }
    }
    checks.push(c.finish());

    if config.mode == VerifyMode::MonteCarlo {
        checks.push(check_mc_walk(config));
        checks.push(check_sampling_uniformity(config));
    }

    VerifyReport { n_max, checks }
}

fn check_mc_walk(config: &VerifyConfig) -> CheckResult {
    let mut c = Check::new("walk-monte-carlo");
    let stat = CompositeStatistic::from(VincularPattern::classical(Classical::ALL[0]));
    for n in 4..=config.n_max.clamp(4, 10) {
        let mu = IntegerPartition::transposition(n);
        let comb = stat.mean(n).expect("n >= 3");
        let t = 4;
        let exact = to_f64(&expected_value(&comb, &WalkSpec::new(mu.clone(), t)).expect("same n"));
        match mc_expected(&stat, &mu, t, config.samples, config.seed, config.oracle.workers) {
            Ok(est) => {
                let ok = (est.mean - exact).abs() <= 5.0 * est.stderr + 1e-12;
                c.expect(ok, || format!("n={n}: estimate {} ± {} vs exact {exact}", est.mean, est.stderr));
            }
            Err(e) => c.fail_with(e),
        }
    }
    c.finish()
}

fn check_sampling_uniformity(config: &VerifyConfig) -> CheckResult {
    let mut c = Check::new("class-sampling-uniformity");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for n in 2..=config.n_max.min(5) {
        for mu in partitions(n) {
            let members: Vec<Permutation> = enumerate_class(n, &mu).expect("same n").collect();
            let size = members.len();
            let draws = config.samples;
            let mut freq = std::collections::HashMap::new();
            for _ in 0..draws {
                *freq.entry(sample_class(&mu, &mut rng)).or_insert(0u64) += 1;
            }
            let p = 1.0 / size as f64;
            let expect = draws as f64 * p;
            let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
            for m in &members {
                let got = freq.get(m).copied().unwrap_or(0);
                let ok = (got as f64 - expect).abs() <= 5.0 * sigma + 1e-9;
                c.expect(ok, || format!("{m} in C_{mu}: {got} draws, expected {expect:.1}"));
            }
            let strays = freq.keys().filter(|k| k.cycle_type() != mu).count();
            c.expect(strays == 0, || format!("{strays} sampled permutations outside C_{mu}"));
        }
    }
    c.finish()
}

/// `|C_μ|` as `u128` when it fits.
pub fn class_size_u128(mu: &IntegerPartition) -> Option<u128> {
    mu.class_size().to_u128()
}
