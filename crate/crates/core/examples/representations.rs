//! Evaluates images in finite-dimensional irreducible representations.

use racah::natural::GeneratorImageTable;
use racah::rep::{build_irrep, evaluate, oracle_check_relations, random_points};
use racah::{RacahGen, TensorElement, USl2Element};

fn main() -> Result<(), racah::Error> {
    let irrep = build_irrep(3)?;
    println!("H =\n{}\n", irrep.h.to_text());

    let points = random_points(42, 2);
    let lambda = TensorElement::usl2(&USl2Element::casimir());
    for p in &points {
        println!("at (a, b, c) = {p}:");
        println!("  1⊗Λ = {:?}", evaluate(&lambda, &irrep, p).as_scalar().map(|c| c.to_string()));
        let table = GeneratorImageTable::shared();
        let alpha = evaluate(table.get(RacahGen::Alpha), &irrep, p);
        println!("  α♮ acts as {:?}", alpha.as_scalar().map(|c| c.to_string()));
        println!("  A♮ =\n{}", evaluate(table.get(RacahGen::A), &irrep, p).to_text());
    }

    let rep = oracle_check_relations(&[1, 2, 3, 4], &points)?;
    println!("\n{} of {} matrix identities hold", rep.pass_count(), rep.checks.len());
    Ok(())
}
