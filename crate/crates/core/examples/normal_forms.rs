//! Rewrites Racah-algebra expressions into the basis A^i D^j B^k Ω^l α^r δ^s β^t.

use racah::parse::parse_racah;
use racah::racah::{bilinear_form, casimir_element, CasimirKind};
use racah::normalize;

fn main() -> Result<(), racah::Error> {
    for input in ["B A", "{A,B}", "C", "gamma", "D^2", "D A - A D", "[A, D^2]", "(A + B)^3"] {
        let nf = normalize(&parse_racah(input)?);
        println!("{input:>12}  =  {nf}");
    }

    // Ω_B and Ω_C land in the same coset of the center as Ω_A.
    for which in CasimirKind::ALL {
        let nf = normalize(&casimir_element(which));
        println!("\n{} has {} terms, central: {}", which.generator(), nf.len(), nf.is_central_polynomial());
    }

    // Coordinates are read off with the bilinear form.
    let u = parse_racah("3 A D B - 1/2 OmegaA alpha + delta^2")?;
    println!("\n<u, A D B> = {}", bilinear_form(&u, &[1, 1, 1, 0, 0, 0, 0])?);
    println!("<u, Ω α> = {}", bilinear_form(&u, &[0, 0, 0, 1, 1, 0, 0])?);
    Ok(())
}
