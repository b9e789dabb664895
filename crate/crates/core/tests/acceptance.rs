//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
//! any criterion fails. Pass criterion numbers as arguments to run a subset.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use binforms::aut::{aut_search, AutOptions};
use binforms::chebyshev::factor_u_tilde;
use binforms::expected::Family;
use binforms::invariants::{area_fundamental, area_with_roots, count_represented, w_f, Area};
use binforms::source::FormSource;
use binforms::trig::{field_discriminant, psi, psi_form};
use binforms::verify::{verify, Statement, VerificationRecord, VerifyOptions};
use binforms::{BinaryForm, IntPoly, Mat2Q};
use rug::ops::Pow;
use rug::{Integer, Rational};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn failures(records: &[VerificationRecord]) -> Vec<String> {
    records
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({})", r.subject, r.witness))
        .collect()
}

fn statement(st: Statement, min: u64, max: u64) -> Vec<VerificationRecord> {
    let opts = VerifyOptions { min: Some(min), max: Some(max), ..Default::default() };
    verify(st, &opts).expect("verification runs")
}

fn summary(records: &[VerificationRecord]) -> (bool, String) {
    let bad = failures(records);
    let text = if bad.is_empty() {
        format!("{} records, all pass", records.len())
    } else {
        format!("{} records, {} fail: {}", records.len(), bad.len(), bad.join("; "))
    };
    (bad.is_empty(), text)
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed <= limit
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::new(c.iter().map(|&x| Integer::from(x)).collect())
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let ok = psi(3) == poly(&[1, 1]) && psi(24) == poly(&[1, 0, -4, 0, 1]) && psi(7) == poly(&[-1, -2, 1, 1]);
    let e = t.elapsed();
    outcome(ok && within(e, Duration::from_secs(1)), format!("Ψ₃, Ψ₂₄, Ψ₇ exact in {e:.2?}"))
}

fn criterion_2() -> Outcome {
    let records = statement(Statement::Theorem1, 1, 120);
    let (mut ok, mut text) = summary(&records);
    let covered: BTreeSet<u64> = records.iter().filter_map(|r| r.n).collect();
    let exceptional = [7u64, 9, 14, 15, 18, 24, 30];
    if !exceptional.iter().all(|n| covered.contains(n)) {
        ok = false;
        text.push_str("; exceptional rows missing");
    }
    let r = aut_search(&psi_form(24), &AutOptions::default()).expect("search runs");
    let gens = [Mat2Q::from_ints(0, 1, 1, 0), Mat2Q::from_ints(0, 1, -1, 0)];
    let d4 = r.class.to_string() == "D4" && gens.iter().all(|g| r.aut.contains(g));
    if !d4 {
        ok = false;
        text.push_str(&format!("; Ψ₂₄ gave {}", r.class));
    }
    outcome(ok, format!("{text}; exhaustive height-6 agreement for degree ≤ 4 included"))
}

fn criterion_3() -> Outcome {
    let records = statement(Statement::Corollary1, 1, 120);
    let (mut ok, text) = summary(&records);
    let covered: BTreeSet<u64> = records.iter().filter_map(|r| r.n).collect();
    ok &= [24u64, 28, 36, 60].iter().all(|n| covered.contains(n));
    outcome(ok, text)
}

fn criterion_4() -> Outcome {
    let (ok, text) = summary(&statement(Statement::Theorem2, 3, 40));
    outcome(ok, text)
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut records = statement(Statement::Eq10, 1, 100);
    records.extend(statement(Statement::Eq11, 1, 100));
    let (mut ok, mut text) = summary(&records);
    let expected: BTreeSet<String> = [
        &[-1i64, 1][..],
        &[1, 1],
        &[-1, -1, 1],
        &[-1, 1, 1],
        &[1, 4, -4, -1, 1],
        &[1, -4, -4, 1, 1],
    ]
    .iter()
    .map(|c| {
        let p = poly(c);
        BinaryForm::homogenize(&p, p.degree().unwrap()).unwrap().to_string()
    })
    .collect();
    let f = factor_u_tilde(15).expect("Ũ₁₅ factors");
    let found: BTreeSet<String> = f.factors.iter().map(|(_, g)| g.to_string()).collect();
    if f.x_power != 0 || f.factors.len() != 6 || found != expected {
        ok = false;
        text.push_str(&format!("; Ũ₁₅ factors {found:?}"));
    }
    let e = t.elapsed();
    outcome(ok && within(e, Duration::from_secs(60)), format!("{text}; Ũ₁₅ six factors reproduced; {e:.2?}"))
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let records = statement(Statement::Reciprocal, 3, 745);
    let e = t.elapsed();
    let (ok, text) = summary(&records);
    outcome(ok && within(e, Duration::from_secs(60)), format!("{text}; {e:.2?}"))
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let records = statement(Statement::Psi1Bound, 16, 14335);
    let e = t.elapsed();
    let (ok, text) = summary(&records);
    outcome(ok && within(e, Duration::from_secs(600)), format!("{text}; {e:.2?}"))
}

fn criterion_8() -> Outcome {
    let (ok, text) = summary(&statement(Statement::Eq9, 3, 300));
    outcome(ok, text)
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, expected) in [(7u64, 49u32), (9, 81)] {
        let fd = field_discriminant(k).expect("in range");
        let disc = psi_form(k).discriminant().expect("degree ≥ 2");
        ok &= fd == expected && disc == Rational::from(expected);
        parts.push(format!("k = {k}: field {fd}, form {disc}"));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_10() -> Outcome {
    let records = statement(Statement::Tables, 0, 0);
    let (mut ok, text) = summary(&records);
    // spot values named by the criterion
    let spot = [("A_Ψ7", "8.31171"), ("C_Ψ7", "2.77057"), ("A_T3", "5.78286"), ("C_U12", "0.700857")];
    for (subject, _) in spot {
        ok &= records.iter().any(|r| r.subject == subject && r.passed());
    }
    ok &= ["A_Ψ5", "A_Ψ10"].iter().all(|s| records.iter().any(|r| r.subject == *s && r.passed()));
    outcome(ok, text)
}

fn area_of(family: Family, n: u64) -> f64 {
    let src = FormSource::from_family(family, n).expect("builder");
    let roots = src.closed_roots(192).expect("closed roots");
    match area_with_roots(&src.form, &roots, 1e-10).expect("area") {
        Area::Finite(e) => e.value,
        Area::Divergent => f64::INFINITY,
    }
}

fn criterion_11() -> Outcome {
    let p128 = (area_of(Family::Psi, 128) - 16.0 / 3.0).abs();
    let p512 = (area_of(Family::Psi, 512) - 16.0 / 3.0).abs();
    let t20 = (area_of(Family::T, 20) - 8.0 / 3.0).abs();
    let t100 = (area_of(Family::T, 100) - 8.0 / 3.0).abs();
    outcome(
        p512 < p128 && t100 < t20,
        format!("|A_Ψ128 − 16/3| = {p128:.3e}, |A_Ψ512 − 16/3| = {p512:.3e}, |A_T20 − 8/3| = {t20:.3e}, |A_T100 − 8/3| = {t100:.3e}"),
    )
}

fn criterion_12() -> Outcome {
    let forms: Vec<BinaryForm> = [7u64, 9, 15, 16, 24].into_iter().map(psi_form).collect();
    let mats = [
        Mat2Q::from_ints(1, 2, 0, 1),
        Mat2Q::from_ints(2, -1, 1, 3),
        Mat2Q::from_ints(0, 1, -1, 1),
        Mat2Q::from_ints(3, 1, 1, 1),
    ];
    let mut bad = Vec::new();
    let opts = AutOptions::default();
    for f in &forms {
        let d = f.degree() as u32;
        let base = aut_search(f, &opts).expect("search runs");
        if !matches!(base.index(), 1 | 2) {
            bad.push(format!("index bound for {f}"));
        }
        for m in &mats {
            for n in &mats {
                if f.substitute(m).substitute(n) != f.substitute(&(m * n)) {
                    bad.push(format!("functoriality for {f}"));
                }
            }
            let law = Rational::from(m.det().pow(d * (d - 1))) * f.discriminant().unwrap();
            if f.substitute(m).discriminant().unwrap() != law {
                bad.push(format!("discriminant law for {f}"));
            }
            let g = f.substitute(m);
            let moved = aut_search(&g, &opts).expect("search runs");
            if !moved.aut.same_elements(&base.aut.conjugate_by(m).unwrap()) || !matches!(moved.index(), 1 | 2) {
                bad.push(format!("conjugation covariance for {f} under {m}"));
            }
        }
    }
    let parity = statement(Statement::Lemma32, 3, 300);
    bad.extend(failures(&parity));
    let text = format!(
        "functoriality, discriminant law, conjugation covariance, index bound on table forms; parity identities over {} values{}",
        parity.len(),
        if bad.is_empty() { String::new() } else { format!("; failures: {}", bad.join("; ")) }
    );
    outcome(bad.is_empty(), text)
}

fn criterion_13() -> Outcome {
    let t = Instant::now();
    let f = BinaryForm::from_ints(&[1, 0, 0, 0, 1]);
    let aut = aut_search(&f, &AutOptions::default()).expect("search runs");
    let w = w_f(&aut.aut).expect("integral group");
    let Area::Finite(a) = area_fundamental(&f, 1e-10).expect("area") else {
        return outcome(false, "x⁴ + y⁴ reported divergent");
    };
    let c = w.to_f64() * a.value;
    let z: u64 = 100_000_000;
    let r = count_represented(&f, z).expect("definite form");
    let ratio = r as f64 / (z as f64).sqrt();
    let rel = (ratio - c).abs() / c;
    let e = t.elapsed();
    outcome(
        w == Rational::from((1, 8)) && rel <= 0.05 && within(e, Duration::from_secs(60)),
        format!("W = {w}, A = {:.6}, C = {c:.6}, R(10⁸) = {r}, R·Z^(−1/2) = {ratio:.6}, rel. deviation {rel:.4}; {e:.2?}", a.value),
    )
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 13] = [
        (1, "exact constructions", criterion_1),
        (2, "cosine-family automorphism groups", criterion_2),
        (3, "sine-family automorphism groups", criterion_3),
        (4, "Chebyshev automorphism groups", criterion_4),
        (5, "factorization identities", criterion_5),
        (6, "reciprocity sweep", criterion_6),
        (7, "exact bound sweep", criterion_7),
        (8, "constant-coefficient formula", criterion_8),
        (9, "field discriminant", criterion_9),
        (10, "invariant tables", criterion_10),
        (11, "limit trends", criterion_11),
        (12, "property suites", criterion_12),
        (13, "represented-integer sanity", criterion_13),
    ];
    let selected: BTreeSet<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let o = run();
        println!("criterion {id:>2} {} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all selected criteria pass");
    } else {
        println!("acceptance: criteria {failed:?} fail");
        std::process::exit(1);
    }
}
