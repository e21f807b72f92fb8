//! The homomorphism from the Racah algebra into F[a,b,c] ⊗ U(sl2).

use racah::natural::{casimir_image_closed_form, verify_casimir_images, GeneratorImageTable};
use racah::parse::parse_racah;
use racah::racah::{casimir_element, CasimirKind};
use racah::{embed, normalize};

fn main() -> Result<(), racah::Error> {
    for (gen, image) in GeneratorImageTable::shared().entries() {
        println!("{gen}♮ = {image}\n");
    }

    // The bracket relation survives the embedding.
    let u = parse_racah("[A,B] - 2 D")?;
    println!("([A,B] - 2D)♮ = {}", embed(&u));

    // A normal form and the expression it came from have the same image.
    let u = parse_racah("D B A C")?;
    println!("image agrees with normal form: {}", embed(&normalize(&u).to_expr()) == embed(&u));

    for which in CasimirKind::ALL {
        let ok = embed(&casimir_element(which)) == casimir_image_closed_form(which);
        println!("{}♮ matches its closed form: {ok}", which.generator());
    }

    let rep = verify_casimir_images();
    println!("\n{} of {} table entries match", rep.pass_count(), rep.checks.len());

    // Homogeneous components of D♮.
    for (n, part) in racah::embed(&parse_racah("D")?).components() {
        println!("degree {n:>2}: {} terms", part.len());
    }
    Ok(())
}
