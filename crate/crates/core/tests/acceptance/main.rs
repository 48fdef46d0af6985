//! Acceptance criteria 1 to 10. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line; the process fails if
//! any criterion does.

mod fixtures;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num::{BigInt, Zero};
use vincmean::character::{char7, slot_shape};
use vincmean::expectation::classical_patterns;
use vincmean::mset::{mset_pattern, relative_orders, templates_for_class, u_coefficients, Symbol, H_CLASSES};
use vincmean::oracle::{brute_expected, brute_mean, mc_expected, OracleConfig};
use vincmean::rational::{binomial, factorial, frac, int, to_f64};
use vincmean::{
    all_patterns, enumerate_class, expected_value, inner_product, mean_coefficients, mean_vector7, partitions,
    transposition_closed_form, Classical, ClassFunction, CompositeStatistic, ExactRational, HClass, IntegerPartition,
    MSetTemplate, MnEvaluator, Permutation, RelativeOrder, SignReading, Statistic, VincularPattern, WalkSpec,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn pat(s: &str) -> VincularPattern {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn part(s: &str) -> IntegerPartition {
    s.parse().unwrap()
}

/// Brute-force class means agree with the character expansion.
fn oracle_equivalence() -> Outcome {
    let cfg = OracleConfig::default();
    let mut cases = 0;
    for n in 3..=7 {
        let mut mn = MnEvaluator::new();
        let combos: Vec<_> = all_patterns().into_iter().map(|p| (p, mean_coefficients(&p, n).unwrap())).collect();
        for mu in partitions(n) {
            for (phi, comb) in &combos {
                let brute = brute_mean(&CompositeStatistic::from(*phi), &mu, &cfg).unwrap();
                let formula = comb.evaluate(&mu, &mut mn).unwrap();
                ensure!(brute == formula, "{phi} at n={n}, mu={mu}: formula {formula}, enumeration {brute}");
                cases += 1;
            }
        }
    }
    Ok(format!("{} patterns, n=3..7, {cases} class means", all_patterns().len()))
}

/// Transcribed coefficient tables and the relations noted under them.
fn table_fixtures() -> Outcome {
    ensure!(expr::eval("((n+1)(3n-4))/60", 8) == int(3), "fixture evaluator");
    ensure!(expr::eval("-(n^2-4n+9)/(6F(n,2))", 7) == frac(-30, 252), "fixture evaluator");
    let mut seen = BTreeSet::new();
    let mut cells = 0;
    for (patterns, row) in fixtures::TABLE_ONE.iter().chain(fixtures::TABLE_TWO) {
        for p in *patterns {
            let phi = pat(p);
            ensure!(seen.insert(phi), "{p} listed twice");
            for n in 6..=12usize {
                let got = mean_vector7(&phi, n).unwrap();
                for (slot, text) in row.iter().enumerate() {
                    let want = expr::eval(text, n as i64);
                    ensure!(
                        got[slot] == want,
                        "{p} e{} at n={n}: computed {}, table {want} ({text})",
                        slot + 1,
                        got[slot]
                    );
                    cells += 1;
                }
            }
        }
    }
    ensure!(seen.len() == all_patterns().len(), "tables cover {} of {} patterns", seen.len(), all_patterns().len());
    for n in 6..=12usize {
        let m = n as i64;
        let v = |s: &str| mean_vector7(&pat(s), n).unwrap();
        let scaled = |s: &str, k: ExactRational| v(s).map(|x| x * &k);
        ensure!(v("(32-1)") == scaled("(32-1]", frac(m - 1, 2)), "(32-1) relation fails at n={n}");
        ensure!(v("(123)") == scaled("[123)", int(m - 2)), "(123) relation fails at n={n}");
        ensure!(v("(321)") == scaled("[321)", int(m - 2)), "(321) relation fails at n={n}");
    }
    Ok(format!("{} patterns, {cells} cells for n=6..12, 3 relations", seen.len()))
}

/// The worked `[21-3)` example.
fn worked_example() -> Outcome {
    let phi = pat("[21-3)");
    let u = u_coefficients(&phi);
    let got: Vec<u64> = H_CLASSES.iter().map(|c| u[c]).collect();
    ensure!(got == [0, 1, 0, 1, 2, 2, 1, 4, 5, 4], "u-values {got:?}");

    // Weights u / (j - k)! before the common factor 1/(n)_2.
    let k = phi.k() as u64;
    let weights: Vec<ExactRational> = H_CLASSES
        .iter()
        .map(|c| int(u[c] as i64) / ExactRational::from_integer(factorial(c.j as u64 - k)))
        .collect();
    let want = [int(0), int(1), int(0), frac(1, 2), int(1), int(1), frac(1, 2), frac(2, 3), frac(5, 6), frac(1, 6)];
    ensure!(weights == want, "H weights {weights:?}");

    for n in 3..=12i64 {
        let v = mean_vector7(&phi, n as usize).unwrap();
        let want = [
            frac(n - 2, 6),
            frac((n - 3) * (n - 4), 6 * n * (n - 1)),
            frac(1, 3 * n),
            frac(-(n - 2), n * (n - 1)),
            int(0),
            int(0),
            int(0),
        ];
        ensure!(v == want, "vector at n={n}: {v:?}");
    }
    for p in all_patterns() {
        let u61 = u_coefficients(&p)[&HClass::new(6, 1)];
        ensure!(BigInt::from(u61) == binomial(6 - p.k() as i64, 3), "u61({p}) = {u61}");
    }
    Ok("u-values, H weights, vector for n=3..12, u61 for all patterns".into())
}

fn parse_template(s: &str) -> MSetTemplate {
    let syms: Vec<Symbol> = s.split(',').map(|x| x.parse().unwrap()).collect();
    MSetTemplate { slots: [syms[0], syms[1], syms[2]] }
}

/// Regenerated M-set pattern tables.
fn appendix_tables() -> Outcome {
    let example = pat("[21-3)");
    let mut cells = 0;
    for table in fixtures::MSET_TABLES {
        let (j, ell) = table.class;
        let want_templates: BTreeSet<String> = templates_for_class(j, ell).unwrap().iter().map(|t| t.to_string()).collect();
        let mut got_templates = BTreeSet::new();
        for block in table.blocks {
            let mut orders = HashSet::new();
            for (order_text, row) in block.rows {
                let underlined = order_text.starts_with('_');
                let order: RelativeOrder = order_text.trim_start_matches('_').parse().unwrap();
                ensure!(
                    underlined == !order.violates(&example),
                    "H{j}{ell} row {order}: marking disagrees with the [21-3) conditions"
                );
                orders.insert(order.clone());
                for (template, cell) in block.templates.iter().zip(*row) {
                    let t = parse_template(template);
                    let want: Classical = cell.trim_start_matches('_').parse().unwrap();
                    let got = mset_pattern(&t, &order).unwrap();
                    ensure!(got == want, "H{j}{ell} {t} under {order}: generated {got}, table {want}");
                    let marked = cell.starts_with('_');
                    ensure!(
                        marked == (underlined && want == example.letters),
                        "H{j}{ell} {t} under {order}: occurrence marking"
                    );
                    cells += 1;
                }
            }
            let all: HashSet<RelativeOrder> = relative_orders(j).into_iter().collect();
            ensure!(orders == all, "H{j}{ell}: rows are not the {} relative orders", all.len());
            got_templates.extend(block.templates.iter().map(|t| parse_template(t).to_string()));
        }
        ensure!(got_templates == want_templates, "H{j}{ell}: columns {got_templates:?} vs {want_templates:?}");
    }
    Ok(format!("{} tables, {cells} cells", fixtures::MSET_TABLES.len()))
}

/// Character values, orthonormality and class sizes.
fn character_layer() -> Outcome {
    let mut cases = 0;
    for n in 3..=10usize {
        let mut mn = MnEvaluator::new();
        for mu in partitions(n) {
            let v = char7(&mu).unwrap();
            for (slot, want) in v.iter().enumerate() {
                if let Some(shape) = slot_shape(n, slot) {
                    let x = mn.character(&shape, &mu).unwrap();
                    ensure!(&x == want, "slot {} at mu={mu}, n={n}: closed form {want}, MN {x}", slot + 1);
                    cases += 1;
                }
            }
            // Closed forms at shapes that are not partitions of small n.
            let deg = match n {
                3 => v[2].is_zero() && v[5] == -&v[3] && v[4] == -&v[1],
                4 => v[5].is_zero() && v[4] == -&v[2],
                5 => v[4].is_zero(),
                _ => true,
            };
            ensure!(deg, "degenerate shapes at n={n}, mu={mu}: {v:?}");
        }
    }
    for n in 1..=8usize {
        let mut mn = MnEvaluator::new();
        let ps = partitions(n);
        let chars: Vec<ClassFunction> = ps.iter().map(|l| ClassFunction::character(l, &mut mn)).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = inner_product(a, b).unwrap();
                ensure!(ip == int((i == j) as i64), "<chi^{}, chi^{}> = {ip}", ps[i], ps[j]);
                cases += 1;
            }
        }
    }
    for n in 1..=12usize {
        let total: BigInt = partitions(n).iter().map(|l| l.class_size()).sum();
        ensure!(total == factorial(n as u64), "class sizes of S_{n} sum to {total}");
        cases += 1;
    }
    Ok(format!("{cases} identities"))
}

/// Closed forms for random transpositions.
fn closed_forms() -> Outcome {
    for n in [7usize, 10] {
        let mu = IntegerPartition::transposition(n);
        for phi in classical_patterns() {
            let comb = mean_coefficients(&phi, n).unwrap();
            for t in 0..=6 {
                let closed = transposition_closed_form(&phi, n, t, SignReading::Corrected).unwrap();
                let pipeline = expected_value(&comb, &WalkSpec::new(mu.clone(), t)).unwrap();
                ensure!(closed == pipeline, "{phi} n={n} t={t}: closed form {closed}, pipeline {pipeline}");
            }
            let identity = int(phi.count_occurrences(&Permutation::identity(n)) as i64);
            ensure!(
                transposition_closed_form(&phi, n, 0, SignReading::Corrected).unwrap() == identity,
                "{phi} n={n}: t=0 value is not the identity count"
            );
        }
        ensure!(transposition_closed_form(&pat("(3-2-1)"), n, 0, SignReading::Corrected).unwrap().is_zero(), "(3-2-1) t=0");
        ensure!(
            transposition_closed_form(&pat("(1-2-3)"), n, 0, SignReading::Corrected).unwrap()
                == ExactRational::from_integer(binomial(n as i64, 3)),
            "(1-2-3) t=0"
        );
    }
    let printed = transposition_closed_form(&pat("(3-2-1)"), 7, 0, SignReading::AsPrinted).unwrap();
    Ok(format!("6 patterns, n in {{7,10}}, t=0..6; printed (3-2-1) sign would give {printed} at n=7, t=0"))
}

/// Exact walk expectations against all products of generators.
fn walk_ground_truth() -> Outcome {
    let n = 4;
    let mu = part("2,1,1");
    let gens: Vec<Permutation> = enumerate_class(n, &mu).unwrap().collect();
    let cfg = OracleConfig::default();
    for phi in all_patterns() {
        let comb = mean_coefficients(&phi, n).unwrap();
        for t in 1..=3 {
            let exact = expected_value(&comb, &WalkSpec::new(mu.clone(), t)).unwrap();
            let brute = brute_expected(&CompositeStatistic::from(phi), &gens, n, t, &cfg).unwrap();
            ensure!(exact == brute, "{phi} t={t}: formula {exact}, enumeration {brute}");
        }
    }
    Ok(format!("{} patterns, t=1..3, {} generators", all_patterns().len(), gens.len()))
}

/// Seeded Monte Carlo estimate against the exact value.
fn monte_carlo() -> Outcome {
    let start = Instant::now();
    let n = 8;
    let mu = IntegerPartition::transposition(n);
    let stat = CompositeStatistic::from(pat("(1-2-3)"));
    let exact = to_f64(&expected_value(&stat.mean(n).unwrap(), &WalkSpec::new(mu.clone(), 4)).unwrap());
    let est = mc_expected(&stat, &mu, 4, 100_000, 20240611, 1).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let gap = (est.mean - exact).abs();
    ensure!(gap <= 4.0 * est.stderr, "estimate {} vs exact {exact}: gap {gap} exceeds 4 x {}", est.mean, est.stderr);
    ensure!(secs < 30.0, "took {secs:.1}s");
    Ok(format!("exact {exact:.6}, estimate {:.6} +/- {:.6}, {secs:.2}s", est.mean, est.stderr))
}

/// Peaks, descents and ascents.
fn composite_statistics() -> Outcome {
    for n in 6..=10usize {
        let m = n as i64;
        let comb = Statistic::Peak.mean(n).unwrap();
        let mut want = BTreeMap::new();
        want.insert(part(&format!("{n}")), frac(m - 2, 3));
        for tail in [&[1][..], &[2], &[1, 1], &[2, 1]] {
            want.insert(IntegerPartition::with_first_row(n, tail).unwrap(), frac(-1, m * (m - 1)));
        }
        let got: BTreeMap<IntegerPartition, ExactRational> = comb.iter().map(|(l, a)| (l.clone(), a.clone())).collect();
        ensure!(got == want, "peak coefficients at n={n}: {got:?}");
    }
    let cfg = OracleConfig::default();
    for n in 3..=6usize {
        let mut mn = MnEvaluator::new();
        for stat in [Statistic::Des, Statistic::Asc] {
            let comb = stat.mean(n).unwrap();
            for mu in partitions(n) {
                let brute = brute_mean(&CompositeStatistic::single(stat), &mu, &cfg).unwrap();
                let formula = comb.evaluate(&mu, &mut mn).unwrap();
                ensure!(brute == formula, "{stat} at mu={mu}: formula {formula}, enumeration {brute}");
            }
        }
    }
    Ok("peak for n=6..10; des and asc over every class for n=3..6".into())
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_vincmean")).args(args).output().expect("running vincmean");
    (out.status.code().unwrap_or(-1), out.stdout)
}

/// Worker-count invariance and reproducible CLI output.
fn determinism() -> Outcome {
    let mu = part("2,2,1");
    let gens: Vec<Permutation> = enumerate_class(5, &mu).unwrap().collect();
    let stat: CompositeStatistic = "(1-32);peak;-1/3*des".parse().unwrap();
    let base = OracleConfig::default();
    let e1 = brute_expected(&stat, &gens, 5, 3, &base).unwrap();
    let m1 = brute_mean(&stat, &part("3,2,1,1"), &base).unwrap();
    for workers in [2, 3, 4, 8] {
        let cfg = OracleConfig { workers, ..base.clone() };
        ensure!(brute_expected(&stat, &gens, 5, 3, &cfg).unwrap() == e1, "brute_expected differs with {workers} workers");
        ensure!(brute_mean(&stat, &part("3,2,1,1"), &cfg).unwrap() == m1, "brute_mean differs with {workers} workers");
    }
    let a = mc_expected(&stat, &mu, 3, 5_000, 99, 3).unwrap();
    let b = mc_expected(&stat, &mu, 3, 5_000, 99, 3).unwrap();
    ensure!(a == b, "Monte Carlo estimate not reproducible");

    let commands: &[&[&str]] = &[
        &["coeffs", "--pattern", "(123)", "--n", "8", "--format", "json"],
        &["coeffs", "--stat", "peak", "--n", "6", "--format", "csv", "--approx"],
        &["table", "--n", "7", "--format", "tsv"],
        &["expect", "--pattern", "(1-2-3)", "--n", "6", "--gamma", "2,1^4", "--t-max", "4", "--samples", "2000", "--seed", "7"],
        &["verify", "--n-max", "5", "--mode", "mc", "--seed", "42", "--samples", "2000"],
        &["characters", "--n", "5", "--format", "csv"],
    ];
    for args in commands {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        ensure!(c1 == 0 && c2 == 0, "{args:?} exited with {c1}/{c2}");
        ensure!(o1 == o2 && !o1.is_empty(), "{args:?} output differs between runs");
    }
    let (_, w1) = cli(&["verify", "--n-max", "5", "--workers", "1"]);
    let (_, w4) = cli(&["verify", "--n-max", "5", "--workers", "4"]);
    ensure!(w1 == w4, "verify output depends on worker count");
    Ok(format!("4 worker counts, {} CLI commands run twice", commands.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("table fixtures", table_fixtures),
        ("worked example", worked_example),
        ("M-set tables", appendix_tables),
        ("character layer", character_layer),
        ("transposition closed forms", closed_forms),
        ("walk ground truth", walk_ground_truth),
        ("Monte Carlo consistency", monte_carlo),
        ("composite statistics", composite_statistics),
        ("determinism", determinism),
    ];
    // Panics are reported on the criterion's line instead.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
