use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use threeiet::arith::{in_integer_span, QuadraticNumber, Rational};
use threeiet::iet::{first_return, idoc, IetParameters, Rotation, ThreeIet, DEFAULT_RETURN_CAP};
use threeiet::subst::{
    characteristic_polynomial, spectral_class, Classification, IncidenceMatrix, Morphism,
};
use threeiet::theorems::{
    facts_check, facts_check_with_translations, is_sturm, recover_parameters, search,
    theorem_a_certificate, theorem_b_audit, CertificateOptions, CertificateVerdict, SearchBounds,
    REGENERATION_THRESHOLD,
};
use threeiet::words::{balance, complexity, Word};

const SEED: u64 = 0x3137;

enum Status {
    Pass,
    Fail(String),
    Inconclusive(String),
}

type Outcome = Result<(Status, String), String>;

fn pass(detail: impl Into<String>) -> Outcome {
    Ok((Status::Pass, detail.into()))
}

fn fail(reason: impl Into<String>) -> Outcome {
    Ok((Status::Fail(reason.into()), String::new()))
}

fn check(holds: bool, detail: impl Into<String>) -> Outcome {
    let detail = detail.into();
    if holds {
        Ok((Status::Pass, detail))
    } else {
        Ok((Status::Fail(detail), String::new()))
    }
}

fn q(text: &str) -> QuadraticNumber {
    text.parse().unwrap()
}

fn p1() -> IetParameters {
    IetParameters::parse("(-1+sqrt(5))/2", "(1+sqrt(5))/4", "0").unwrap()
}

fn p1_word(n: usize) -> Word {
    ThreeIet::new(p1()).code_orbit(n).unwrap()
}

fn induction_matches(params: &IetParameters) -> Result<(), String> {
    let t = ThreeIet::new(params.clone());
    let (lo, hi) = t.domain();
    let induced = first_return(&Rotation::r(params), lo, hi, DEFAULT_RETURN_CAP)
        .map_err(|e| e.to_string())?;
    if !induced.same_exchange_as(&t) {
        return Err("induced map differs from the exchange".into());
    }
    let orbit = t.orbit(1000).map_err(|e| e.to_string())?;
    match orbit.points[..1000]
        .iter()
        .position(|x| induced.apply(x) != t.map(x))
    {
        Some(k) => Err(format!("maps disagree at orbit point {k}")),
        None => Ok(()),
    }
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let sets = [
        ("P1", "(-1+sqrt(5))/2", "(1+sqrt(5))/4", "0"),
        ("P3", "1/2*sqrt(2)", "3/4-1/8*sqrt(2)", "-1/10"),
    ];
    for (name, eps, l, c) in sets {
        match IetParameters::parse(eps, l, c) {
            Ok(params) => {
                if let Err(e) = induction_matches(&params) {
                    failures.push(format!("{name}: {e}"));
                }
            }
            Err(e) => failures.push(format!("{name} rejected: {e}")),
        }
    }
    let flipped = IetParameters::parse("1/2*sqrt(2)", "3/4+1/8*sqrt(2)", "-1/10").unwrap();
    let note = match induction_matches(&flipped) {
        Ok(()) => "l=3/4+√2/8 variant of P3 matches",
        Err(_) => "l=3/4+√2/8 variant of P3 also fails",
    };
    if failures.is_empty() {
        pass(format!("P1 and P3 exact, 1000 orbit points; {note}"))
    } else {
        fail(format!("{}; {note}", failures.join("; ")))
    }
}

fn criterion_2() -> Outcome {
    let p = p1();
    let u = p1_word(10_000);
    let v = Morphism::sigma().apply(&u).unwrap();
    let v_prime = Morphism::sigma_prime().apply(&u).unwrap();
    let r = Rotation::r(&p).code(v.len()).unwrap();
    let r_prime = Rotation::r_prime(&p).code(v_prime.len()).unwrap();
    check(
        v == r && v_prime == r_prime,
        format!("{} and {} letters compared", v.len(), v_prime.len()),
    )
}

fn criterion_3() -> Outcome {
    let u = p1_word(100_000);
    let profile = complexity(&u, 30).unwrap();
    let reliable = profile.reliable_up_to.min(30);
    if reliable == 0 {
        return fail("no reliable length");
    }
    if let Some(n) = (1..=reliable).find(|&n| profile.count(n) != 2 * n + 1) {
        return fail(format!("P1: C({n}) = {}", profile.count(n)));
    }
    let v = Morphism::sigma().apply(&u).unwrap();
    let sturmian = complexity(&v, 30).unwrap();
    if let Some(n) = (1..=reliable).find(|&n| sturmian.count(n) != n + 1) {
        return fail(format!("σ(P1): C({n}) = {}", sturmian.count(n)));
    }
    let degenerate = IetParameters::parse("(-1+sqrt(5))/2", "3-sqrt(5)", "0").unwrap();
    let d = ThreeIet::new(degenerate).code_orbit(100_000).unwrap();
    let dp = complexity(&d, 20).unwrap();
    match (1..=20).find(|&n| dp.count(n) < 2 * n + 1) {
        Some(n) => pass(format!(
            "C(n)=2n+1 and σ: n+1 for n ≤ {reliable}; degenerate C({n}) = {} < {}",
            dp.count(n),
            2 * n + 1
        )),
        None => fail("degenerate word has full complexity up to 20"),
    }
}

fn criterion_4() -> Outcome {
    let u = p1_word(100_000);
    for m in [Morphism::sigma(), Morphism::sigma_prime()] {
        let v = m.apply(&u).unwrap();
        let report = balance(&v, 300).unwrap();
        if !report.is_balanced(1) {
            return fail(format!("image {m} has imbalance {}", report.max_imbalance));
        }
    }
    let report = balance(&u, 300).unwrap();
    let witness = report.witness.clone().unwrap();
    check(
        report.max_imbalance >= 2,
        format!(
            "σ, σ′ 1-balanced up to 300; P1 imbalance {} for letter {} at length {}",
            report.max_imbalance, witness.letter, witness.length
        ),
    )
}

fn criterion_5() -> Outcome {
    let cases = [
        ("(-1+sqrt(5))/2", true),
        ("1/2*sqrt(2)", true),
        ("(2-sqrt(2))/4", false),
        ("1/2", false),
    ];
    let wrong: Vec<_> = cases
        .iter()
        .filter(|(x, expected)| is_sturm(&q(x)).is_sturm != *expected)
        .collect();
    check(
        wrong.is_empty(),
        format!("{} values; wrong: {wrong:?}", cases.len()),
    )
}

/// Brute force over `|p|, |q| ≤ 1000` for `x = p + qε`, both given as `(a + b√d)/den`.
fn brute_force_span(x: (i64, i64, i64), eps: (i64, i64, i64)) -> bool {
    let (xa, xb, xden) = x;
    let (ea, eb, eden) = eps;
    (-1000i64..=1000).any(|q| {
        xb * eden == q * eb * xden
            && (-1000i64..=1000).any(|p| xa * eden == (p * eden + q * ea) * xden)
    })
}

fn criterion_6() -> Outcome {
    let golden_conjugate_case = IetParameters::parse("(-1+sqrt(5))/2", "3-sqrt(5)", "0").unwrap();
    let half = IetParameters::parse("1/2", "3/4", "-1/3").unwrap();
    if !idoc(&p1()) || idoc(&golden_conjugate_case) || idoc(&half) {
        return fail("idoc examples disagree");
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut members = 0;
    for case in 0..100 {
        let d = [2u64, 3, 5, 7, 11][rng.gen_range(0..5)];
        let (ea, eb, eden) = (
            rng.gen_range(-9..10),
            rng.gen_range(1..10),
            rng.gen_range(1..8),
        );
        let (p, qq) = (rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        let x = if rng.gen_bool(0.5) {
            (p * eden + qq * ea, qq * eb, eden)
        } else {
            let (pa, pden) = (rng.gen_range(-30..30), rng.gen_range(2..5));
            (
                p * eden * pden + qq * ea * pden + pa,
                qq * eb * pden,
                eden * pden,
            )
        };
        let build = |(a, b, den): (i64, i64, i64)| {
            QuadraticNumber::from_ratio(a, den)
                + QuadraticNumber::sqrt(d)
                    .unwrap()
                    .scale(&Rational::new(b.into(), den.into()))
        };
        let exact = in_integer_span(&build(x), &build((ea, eb, eden))).unwrap();
        let brute = brute_force_span(x, (ea, eb, eden));
        if exact != brute {
            return fail(format!("case {case}: exact {exact}, brute force {brute}"));
        }
        members += brute as usize;
    }
    pass(format!(
        "idoc examples; 100 Z[ε] cases agree ({members} members)"
    ))
}

fn criterion_7() -> Outcome {
    let p = p1();
    let u = p1_word(100_000);
    let recovered = recover_parameters(&u, Some(p.epsilon())).map_err(|e| e.to_string())?;
    let gap = (&recovered.l_hat - p.l()).to_f64();
    let fraction = recovered.regeneration.fraction;
    let holds = recovered.c_hat.is_zero()
        && &recovered.l_hat >= p.l()
        && gap < 1e-3
        && fraction >= REGENERATION_THRESHOLD;
    check(
        holds,
        format!(
            "c_hat = {}, l_hat − l = {gap:.3e}, regeneration {fraction}",
            recovered.c_hat
        ),
    )
}

fn cofactor_det(m: &[[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `det(xI − M)` by cofactor expansion.
fn oracle_char_value(m: &[[i64; 3]; 3], x: i128) -> i128 {
    let mut a = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = if i == j { x } else { 0 } - m[i][j] as i128;
        }
    }
    cofactor_det(&a)
}

fn eval(poly: &[i128], x: i128) -> i128 {
    poly.iter().fold(0, |acc, &c| acc * x + c)
}

fn oracle_float_value(m: &[[i64; 3]; 3], y: f64) -> f64 {
    let mut a = [[0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = if i == j { y } else { 0.0 } - m[i][j] as f64;
        }
    }
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Classification from integer roots found by scanning, a scanned Perron root and
/// the norm of the remaining quadratic factor.
fn oracle_class(m: &[[i64; 3]; 3]) -> Classification {
    let p = |x: i128| oracle_char_value(m, x);
    // p(x) = x³ + a x² + b x + c, read off p(0), p(1), p(−1).
    let c = p(0);
    let a = (p(1) + p(-1)) / 2 - c;
    let b = (p(1) - p(-1)) / 2 - 1;
    let bound: i128 = 1 + a.abs().max(b.abs()).max(c.abs());
    let roots: Vec<i128> = (-bound..=bound).filter(|&r| p(r) == 0).collect();
    let steps = 1_000_000;
    let perron = (0..=steps)
        .map(|k| bound as f64 * (1.0 - k as f64 / steps as f64))
        .find(|&x| oracle_float_value(m, x) <= 0.0)
        .unwrap_or(0.0);
    if roots.iter().any(|&r| (r as f64 - perron).abs() < 1e-3) {
        return Classification::Rational;
    }
    match roots.first() {
        None => Classification::Cubic,
        Some(&r) => {
            let q1 = a + r;
            let q0 = b + r * q1;
            if q0.abs() == 1 {
                Classification::QuadraticUnit
            } else {
                Classification::QuadraticNonunit
            }
        }
    }
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut classes = Vec::new();
    for case in 0..20 {
        let mut rows = [[0i64; 3]; 3];
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = rng.gen_range(0..=5);
            }
        }
        let m = IncidenceMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        let poly = characteristic_polynomial(&m).map_err(|e| e.to_string())?;
        if let Some(x) = (-3..=3).find(|&x| eval(&poly, x) != oracle_char_value(&rows, x)) {
            return fail(format!(
                "case {case}: characteristic polynomial differs at x = {x}"
            ));
        }
        let class = spectral_class(&m)
            .map_err(|e| e.to_string())?
            .classification;
        let expected = oracle_class(&rows);
        if class != expected {
            return fail(format!(
                "case {case} {rows:?}: {class:?} vs oracle {expected:?}"
            ));
        }
        classes.push(class);
    }
    let units = classes
        .iter()
        .filter(|c| **c == Classification::QuadraticUnit)
        .count();
    let cubic = classes
        .iter()
        .filter(|c| **c == Classification::Cubic)
        .count();
    pass(format!(
        "20 matrices agree ({cubic} cubic, {units} quadratic units)"
    ))
}

fn criterion_9() -> Outcome {
    let bounds = SearchBounds {
        max_image_length: 8,
        max_total_length: 8,
        prefix_length: 1000,
    };
    let report = search(bounds).map_err(|e| e.to_string())?;
    let mut in_scope = 0;
    let mut degenerate = 0;
    let mut violations = Vec::new();
    for audit in &report.candidates {
        let certified = audit
            .certificate
            .as_ref()
            .is_some_and(|c| c.is_consistent());
        if !(certified && audit.recovery_passed()) {
            continue;
        }
        if audit.non_degenerate == Some(false) {
            degenerate += 1;
            continue;
        }
        in_scope += 1;
        let sturm = audit.sturm_verdict.as_ref().is_some_and(|v| v.is_sturm);
        let holds = sturm
            && audit.determinant.abs() == 1
            && audit.conjugate_eigenvector_uniform_sign == Some(true)
            && audit.scaling_relation_holds == Some(true);
        if !holds {
            violations.push(audit.morphism.clone());
        }
    }
    let summary = format!(
        "{} enumerated, {} candidates, {in_scope} non-degenerate passing certificate and recovery, {degenerate} degenerate excluded",
        report.enumerated,
        report.candidates.len()
    );
    if in_scope == 0 {
        return Ok((Status::Inconclusive(summary), String::new()));
    }
    if violations.is_empty() {
        pass(format!("{summary}; 0 violations"))
    } else {
        fail(format!("{summary}; violations: {violations:?}"))
    }
}

fn criterion_10() -> Outcome {
    let u = Word::ternary(&"AABBBC".repeat(200)).unwrap();
    let certificate =
        theorem_a_certificate(&u, CertificateOptions::default()).map_err(|e| e.to_string())?;
    let CertificateVerdict::Refuted {
        witness, factors, ..
    } = &certificate.verdict
    else {
        return fail(format!("not refuted: {:?}", certificate.verdict));
    };
    let count = |s: &str| s.chars().filter(|&c| c == witness.letter).count();
    if factors.0.len() != factors.1.len() || count(&factors.0).abs_diff(count(&factors.1)) < 2 {
        return fail(format!("witness {factors:?} does not show imbalance ≥ 2"));
    }
    let m = Morphism::parse("A>AB;B>ACAB;C>B").unwrap();
    let audit = theorem_b_audit(&m, 1000).map_err(|e| e.to_string())?;
    let params = audit.exact_parameters.ok_or("no exact parameters")?.params;
    if !facts_check(&m, &params, 300)
        .map_err(|e| e.to_string())?
        .all_hold()
    {
        return fail("facts fail before perturbation");
    }
    let mut t = params.translations();
    t[0] = &t[0] + &QuadraticNumber::from_ratio(1, 50);
    let perturbed =
        facts_check_with_translations(&m, &params, 300, &t).map_err(|e| e.to_string())?;
    check(
        !perturbed.all_hold(),
        format!(
            "witness {:?} / {:?}; perturbed t_A gives {} findings",
            factors.0,
            factors.1,
            perturbed.findings.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("induction equivalence", criterion_1, 5),
        ("morphism/coding identity", criterion_2, 10),
        ("complexity", criterion_3, 60),
        ("balance", criterion_4, 120),
        ("Sturm predicate", criterion_5, 1),
        ("idoc and Z[ε] membership", criterion_6, 10),
        ("parameter recovery", criterion_7, 60),
        ("spectral oracle", criterion_8, 5),
        ("audit soundness", criterion_9, 600),
        ("negative controls", criterion_10, 5),
    ];
    let mut failed = 0;
    for (index, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let timing = format!("{:.2}s / limit {limit}s", elapsed.as_secs_f64());
        let line = match outcome {
            Ok((Status::Pass, detail)) if !over => {
                format!("PASS {}: {name} ({timing}) {detail}", index + 1)
            }
            Ok((Status::Pass, detail)) => {
                format!("FAIL {}: {name} ({timing}, over time) {detail}", index + 1)
            }
            Ok((Status::Inconclusive(detail), _)) => {
                format!("INCONCLUSIVE {}: {name} ({timing}) {detail}", index + 1)
            }
            Ok((Status::Fail(reason), _)) => {
                format!("FAIL {}: {name} ({timing}) {reason}", index + 1)
            }
            Err(error) => format!("FAIL {}: {name} ({timing}) error: {error}", index + 1),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("{} of 10 criteria failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
