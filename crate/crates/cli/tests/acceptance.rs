//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines are never
//! captured.

use std::process::{Command, ExitCode};

use biorder_core::corpus;
use biorder_core::exactalg::oracle::char_poly_cofactor;
use biorder_core::exactalg::{factor_over_q, rational_roots, sturm_count, RootInterval};
use biorder_core::freegroup::{random_automorphism, random_word};
use biorder_core::lcs::lcs_action;
use biorder_core::magnus::{compare, expand, series_mul};
use biorder_core::orderprops::{
    commutator_infinitesimal_probe, normality_probe, subgroup_probe, ProbeConfig,
};
use biorder_core::verdict::{analyze, level_report, Outcome, Rule};
use biorder_core::{IntMatrix, IntPoly, KnotRecord, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn knot(name: &str) -> Result<KnotRecord, String> {
    corpus::get(name)
        .map(|e| e.record)
        .map_err(|e| e.to_string())
}

fn charpoly(k: &KnotRecord, level: usize) -> Result<IntPoly, String> {
    level_report(k, level)
        .map(|r| r.charpoly)
        .map_err(|e| e.to_string())
}

fn verdict(k: &KnotRecord) -> Result<(Outcome, Rule, Option<usize>), String> {
    let v = analyze(k, 1).map_err(|e| e.to_string())?.verdict;
    Ok((v.outcome, v.rule, v.level))
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

/// Division by `(λ − 1)` on descending coefficients, done by hand.
fn synthetic_division(desc: &[i64]) -> (Vec<i64>, i64) {
    let mut acc = 0;
    let mut out: Vec<i64> = desc
        .iter()
        .map(|&c| {
            acc += c;
            acc
        })
        .collect();
    let rem = out.pop().unwrap_or(0);
    (out, rem)
}

fn criterion_1() -> Check {
    let m = charpoly(&knot("6_2")?, 0)?;
    ensure!(m == poly(&[1, -3, 3, -3, 1]), "char(M) = {m}");
    ensure!(
        rational_roots(&m).map_err(err)?.is_empty(),
        "unexpected rational root"
    );
    let pos = sturm_count(&m, &RootInterval::Positive).map_err(err)?;
    ensure!(pos == 2, "{pos} positive roots");
    ensure!(
        factor_over_q(&m).map_err(err)?.is_irreducible(),
        "char(M) factors"
    );
    Ok(())
}

fn criterion_2() -> Check {
    let k = knot("6_2")?;
    let n = charpoly(&k, 1)?;
    ensure!(n == poly(&[1, -3, 8, -12, 8, -3, 1]), "char(N) = {n}");

    let (q1, r1) = synthetic_division(&[1, -3, 8, -12, 8, -3, 1]);
    let (q2, r2) = synthetic_division(&q1);
    ensure!(
        r1 == 0 && r2 == 0 && q2 == [1, -1, 5, -1, 1],
        "hand division gave {q2:?}"
    );

    let f = factor_over_q(&n).map_err(err)?.factors;
    let shape: Vec<(IntPoly, usize)> = f.iter().map(|x| (x.poly.clone(), x.multiplicity)).collect();
    ensure!(
        shape == [(poly(&[-1, 1]), 2), (poly(&[1, -1, 5, -1, 1]), 1)],
        "factorization {shape:?}"
    );
    ensure!(
        f[1].real_roots == 0,
        "quartic has {} real roots",
        f[1].real_roots
    );
    let v = verdict(&k)?;
    ensure!(
        v == (Outcome::NotBiorderable, Rule::R3, Some(1)),
        "verdict {v:?}"
    );
    Ok(())
}

fn criterion_3() -> Check {
    let k = knot("7_6")?;
    let m = charpoly(&k, 0)?;
    ensure!(m == poly(&[1, -5, 7, -5, 1]), "char(M) = {m}");
    ensure!(
        factor_over_q(&m).map_err(err)?.is_irreducible(),
        "char(M) factors"
    );
    ensure!(
        rational_roots(&m).map_err(err)?.is_empty(),
        "unexpected rational root"
    );
    let pos = sturm_count(&m, &RootInterval::Positive).map_err(err)?;
    ensure!(pos == 2, "{pos} positive roots");

    let n = charpoly(&k, 1)?;
    ensure!(
        n.eval(&1.into()) == 0.into(),
        "p(1) = {}",
        n.eval(&1.into())
    );
    ensure!(n.derivative().eval(&1.into()) == 0.into(), "p'(1) != 0");
    let rest = n.div_exact(&poly(&[1, -2, 1])).map_err(err)?;
    let real = sturm_count(&rest, &RootInterval::All).map_err(err)?;
    ensure!(real == 0, "p/(λ-1)² has {real} real roots");
    let v = verdict(&k)?;
    ensure!(v.0 == Outcome::NotBiorderable, "verdict {v:?}");
    Ok(())
}

fn criterion_4() -> Check {
    let t = knot("trefoil")?;
    let tp = t.alexander_polynomial();
    ensure!(tp == poly(&[1, -1, 1]), "trefoil Δ = {tp}");
    let real = sturm_count(&tp, &RootInterval::All).map_err(err)?;
    ensure!(real == 0, "trefoil Δ has {real} real roots");
    let v = verdict(&t)?;
    ensure!(
        v.0 == Outcome::NotBiorderable && matches!(v.1, Rule::R1 | Rule::R2),
        "trefoil verdict {v:?}"
    );

    let f = knot("figure8")?;
    let fp = f.alexander_polynomial();
    ensure!(fp == poly(&[1, -3, 1]), "figure-8 Δ = {fp}");
    ensure!(
        sturm_count(&fp, &RootInterval::Positive).map_err(err)? == 2,
        "figure-8 roots"
    );
    let v = verdict(&f)?;
    ensure!(
        v == (Outcome::Biorderable, Rule::R4, None),
        "figure-8 verdict {v:?}"
    );
    Ok(())
}

fn criterion_5() -> Check {
    for (name, value) in [("6_2", -1), ("7_6", -1), ("trefoil", 1), ("figure8", -1)] {
        let at_one = knot(name)?.alexander_polynomial().eval(&1.into());
        ensure!(at_one == value.into(), "{name}: Δ(1) = {at_one}");
    }
    Ok(())
}

fn magnus_multiplicativity(r: &mut ChaCha8Rng) -> Check {
    for trial in 0..1000 {
        let rank = r.gen_range(1..=3);
        let d = r.gen_range(1..=4);
        let u = random_word(r, rank, 8);
        let v = random_word(r, rank, 8);
        let lhs = expand(&u.multiply(&v).map_err(err)?, d);
        let rhs = series_mul(&expand(&u, d), &expand(&v, d), d);
        ensure!(lhs == rhs, "multiplicativity fails at trial {trial}");
    }
    Ok(())
}

fn bi_invariance(r: &mut ChaCha8Rng) -> Check {
    for trial in 0..1000 {
        let (u, v, w) = (
            random_word(r, 2, 8),
            random_word(r, 2, 8),
            random_word(r, 2, 8),
        );
        let base = compare(&u, &v).map_err(err)?;
        let left =
            compare(&w.multiply(&u).map_err(err)?, &w.multiply(&v).map_err(err)?).map_err(err)?;
        let right =
            compare(&u.multiply(&w).map_err(err)?, &v.multiply(&w).map_err(err)?).map_err(err)?;
        ensure!(
            left == base && right == base,
            "bi-invariance fails at trial {trial}"
        );
    }
    Ok(())
}

fn probes() -> Check {
    let cfg = ProbeConfig {
        seed: 2024,
        samples: 1000,
        max_word_length: 10,
        bound: 3,
    };
    let x = Word::generator(2, 0).map_err(err)?;
    for result in [
        subgroup_probe(&x, &cfg).map_err(err)?,
        normality_probe(&x, &cfg).map_err(err)?,
        commutator_infinitesimal_probe(2, &cfg).map_err(err)?,
    ] {
        ensure!(
            result.passed(),
            "{} probe: {} counterexamples",
            result.property,
            result.failure_count
        );
    }
    Ok(())
}

fn char_poly_oracle(r: &mut ChaCha8Rng) -> Check {
    for trial in 0..200 {
        let d = r.gen_range(1..=5);
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| r.gen_range(-6..=6)).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
        let a = IntMatrix::from_i64_rows(&refs).map_err(err)?;
        ensure!(
            a.char_poly() == char_poly_cofactor(&a),
            "char poly differs at trial {trial}"
        );
    }
    Ok(())
}

/// Distinct planted roots `num/den` plus root-free quadratics `λ² + c`.
fn sturm_oracle(r: &mut ChaCha8Rng) -> Check {
    for trial in 0..200 {
        let mut roots: Vec<(i64, i64)> = Vec::new();
        let count = r.gen_range(0..=5);
        while roots.len() < count {
            let (num, den) = (r.gen_range(-12..=12), r.gen_range(1..=3));
            if !roots.iter().any(|&(n, d)| n * den == num * d) {
                roots.push((num, den));
            }
        }
        let mut p = IntPoly::one();
        for &(num, den) in &roots {
            p = p.mul(&poly(&[-num, den]));
        }
        let c = r.gen_range(1..=5);
        for extra in 0..r.gen_range(0..=2) {
            p = p.mul(&poly(&[c + 3 * extra, 0, 1]));
        }
        if p.is_constant() {
            p = poly(&[1, 0, 1]);
        }
        let a = r.gen_range(-5..=2);
        let b = a + r.gen_range(1..=6);
        let inside = |lo: Option<i64>, hi: Option<i64>| {
            roots
                .iter()
                .filter(|&&(n, d)| {
                    lo.is_none_or(|lo| n > lo * d) && hi.is_none_or(|hi| n <= hi * d)
                })
                .count()
        };
        let got = [
            sturm_count(&p, &RootInterval::All).map_err(err)?,
            sturm_count(&p, &RootInterval::Positive).map_err(err)?,
            sturm_count(&p, &RootInterval::half_open(a, b)).map_err(err)?,
        ];
        let want = [roots.len(), inside(Some(0), None), inside(Some(a), Some(b))];
        ensure!(
            got == want,
            "Sturm counts {got:?} != planted {want:?} at trial {trial}"
        );
    }
    Ok(())
}

fn functoriality(r: &mut ChaCha8Rng) -> Check {
    for trial in 0..50 {
        let rank = r.gen_range(2..=3);
        let phi = random_automorphism(r, rank, 4);
        let psi = random_automorphism(r, rank, 4);
        let both = phi.compose(&psi).map_err(err)?;
        for k in 1..=2 {
            let lhs = lcs_action(&both, k).map_err(err)?.matrix;
            let rhs = lcs_action(&phi, k)
                .map_err(err)?
                .matrix
                .mul(&lcs_action(&psi, k).map_err(err)?.matrix)
                .map_err(err)?;
            ensure!(lhs == rhs, "functoriality fails at trial {trial}, k = {k}");
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    magnus_multiplicativity(&mut r)?;
    bi_invariance(&mut r)?;
    probes()?;
    char_poly_oracle(&mut r)?;
    sturm_oracle(&mut r)?;
    functoriality(&mut r)
}

fn criterion_7() -> Check {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_biorder"))
            .args(["corpus", "verify", "--format", "json"])
            .output()
            .map_err(err)?;
        ensure!(
            out.status.success(),
            "corpus verify exited with {}",
            out.status
        );
        Ok(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    ensure!(!a.is_empty(), "empty output");
    ensure!(a == b, "outputs differ");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "6_2 level 0 polynomial, roots and irreducibility",
            criterion_1,
        ),
        (
            "6_2 level 1 polynomial, factorization and verdict",
            criterion_2,
        ),
        ("7_6 level 0 and level 1", criterion_3),
        ("trefoil and figure-8", criterion_4),
        ("homology sanity", criterion_5),
        ("property suites", criterion_6),
        ("deterministic corpus verify", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 7 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
