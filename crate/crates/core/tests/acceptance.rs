//! Acceptance criteria, one PASS/FAIL line each with its runtime budget.
//!
//! Runs without the libtest harness: the criteria execute one after another
//! (so timings are not distorted by parallel tests) and the lines are always
//! printed, not captured.

use std::time::{Duration, Instant};

use racah::cli::{centrality_suite, Command, Verb};
use racah::independence::{self, basis_tuples, DEFAULT_TUPLE_LIMIT};
use racah::natural;
use racah::rep::{build_irrep, evaluate, random_points, Matrix};
use racah::scalar::frac;
use racah::tensor::TensorElement;
use racah::usl2::{self, USl2Element};
use racah::VerificationReport;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_report(rep: &VerificationReport, expected_checks: Option<usize>) -> Outcome {
    let mut ok = rep.passed();
    let mut detail = format!("{}/{} checks", rep.pass_count(), rep.checks.len());
    if let Some(n) = expected_checks {
        if rep.checks.len() != n {
            ok = false;
            detail.push_str(&format!(", expected {n} checks"));
        }
    }
    if let Some(f) = rep.failures().next() {
        detail.push_str(&format!(", first failure {}: {}", f.id, f.witness.clone().unwrap_or_default()));
    }
    Outcome { ok, detail }
}

fn criterion(failures: &mut Vec<String>, n: usize, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = body();
    let elapsed = start.elapsed();
    let in_time = elapsed < budget;
    let pass = out.ok && in_time;
    println!(
        "{} {n:>2} {name}: {} in {:.2} s (budget {} s)",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    if !pass {
        failures.push(format!("{n} {name}"));
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() {
    let mut failures = Vec::new();
    let f = &mut failures;

    criterion(f, 1, "commutator identities and the element w", secs(1), || {
        from_report(&usl2::verify_commutator_lemmas(), Some(27))
    });

    criterion(f, 2, "PBW bases and the e^i f^i product law", secs(5), || {
        let rep = usl2::verify_pbw_bases(3, 6);
        let powers = rep.checks.iter().filter(|c| c.id.starts_with("ef-power.")).count();
        let mut out = from_report(&rep, None);
        if powers != 7 {
            out.ok = false;
            out.detail.push_str(&format!(", {powers} product checks instead of 7"));
        }
        out
    });

    criterion(f, 3, "homomorphism relations and coefficient table", secs(5), || {
        from_report(&natural::verify_homomorphism(), None)
    });

    criterion(f, 4, "homogeneous component tables", secs(30), || {
        from_report(&natural::verify_homogeneous_tables(), None)
    });

    criterion(f, 5, "Casimir images and intermediate tables", secs(30), || {
        from_report(&natural::verify_casimir_images(), None)
    });

    criterion(f, 6, "normal-form oracle on 1000 random expressions", secs(300), || {
        from_report(&natural::verify_normal_form_oracle(20_261_015, 1000, 6, 6), Some(3))
    });

    criterion(f, 7, "centrality in the algebra and of the images", secs(10), || {
        from_report(&centrality_suite(), None)
    });

    criterion(f, 8, "leading-monomial law and theta independence", secs(120), || {
        let law = independence::verify_leading_monomial_law(2);
        let cases = law.checks.iter().filter(|c| c.id.starts_with("leading.")).count();
        let theta = independence::verify_theta_independence(2);
        let mut rep = VerificationReport::new("independence");
        rep.extend(law);
        rep.extend(theta);
        let mut out = from_report(&rep, None);
        if cases != 81 {
            out.ok = false;
            out.detail.push_str(&format!(", {cases} leading-monomial cases instead of 81"));
        }
        out
    });

    criterion(f, 9, "injectivity certificate with all caps 1", secs(600), || {
        let caps = [1; 7];
        match independence::injectivity_certificate(caps, DEFAULT_TUPLE_LIMIT) {
            Ok(cert) => Outcome {
                ok: cert.passed() && cert.dimension == basis_tuples(caps).len() && cert.rank == cert.dimension,
                detail: format!("rank {} of {} tuples", cert.rank, cert.dimension),
            },
            Err(e) => Outcome {
                ok: false,
                detail: e.to_string(),
            },
        }
    });

    criterion(f, 10, "representation oracle, d = 1..5 at 5 points", secs(60), || {
        let dims = [1, 2, 3, 4, 5];
        let points = random_points(7, 5);
        let mut out = match racah::rep::oracle_check_relations(&dims, &points) {
            Ok(rep) => from_report(&rep, None),
            Err(e) => Outcome {
                ok: false,
                detail: e.to_string(),
            },
        };
        let lambda = TensorElement::usl2(&USl2Element::casimir());
        for d in dims {
            let irrep = build_irrep(d).expect("positive dimension");
            let expected = Matrix::scalar(d, frac(d as i64 * d as i64 - 1, 4));
            for p in &points {
                if evaluate(&lambda, &irrep, p) != expected {
                    out.ok = false;
                    out.detail.push_str(&format!(", 1⊗Λ is not (d²-1)/4 at d = {d}"));
                }
            }
        }
        out
    });

    criterion(f, 11, "no zero divisors on 200 random pairs", secs(60), || {
        from_report(&natural::verify_no_zero_divisors(20_261_015, 200, 2), Some(2))
    });

    // The command-line driver reaches the same suites.
    let out = racah::cli::run(&Command {
        suite: Some("homomorphism".into()),
        ..Command::new(Verb::Verify)
    });
    assert_eq!(out.code, 0, "{}", out.output);

    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
    println!("all 11 acceptance criteria passed");
}
