//! Leading monomials, algebraic independence and the injectivity certificate.

use racah::independence::{
    injectivity_certificate, leading_monomial, verify_leading_monomial_law, verify_theta_independence, y,
    y_product, DEFAULT_TUPLE_LIMIT,
};

fn main() -> Result<(), racah::Error> {
    for n in 1..=4 {
        println!("y{n} = {}, leading {}", y(n), leading_monomial(&y(n))?);
    }
    let p = y_product(1, 2, 0, 1);
    println!("\nleading monomial of y1 y2^2 y4: {}", leading_monomial(&p)?);

    let law = verify_leading_monomial_law(2);
    println!("leading-monomial law: {}/{} checks", law.pass_count(), law.checks.len());
    let theta = verify_theta_independence(2);
    for note in &theta.notes {
        println!("  {note}");
    }

    let cert = injectivity_certificate([1, 1, 1, 1, 0, 0, 0], DEFAULT_TUPLE_LIMIT)?;
    println!("\n{cert}");
    Ok(())
}
