//! Runs every verification suite and prints a one-line summary per suite.

use std::time::Instant;

use racah::cli::{run_suite, Command, Verb, SUITES};

fn main() -> Result<(), racah::Error> {
    let cmd = Command::new(Verb::Verify);
    let mut all = true;
    for name in SUITES {
        let start = Instant::now();
        let rep = run_suite(name, &cmd)?;
        all &= rep.passed();
        println!(
            "{:<16} {:>5}/{:<5} {:>7.2} s",
            name,
            rep.pass_count(),
            rep.checks.len(),
            start.elapsed().as_secs_f64()
        );
        for f in rep.failures() {
            println!("    FAIL {}: {}", f.id, f.witness.as_deref().unwrap_or(""));
        }
    }
    println!("{}", if all { "all suites pass" } else { "some checks failed" });
    Ok(())
}
