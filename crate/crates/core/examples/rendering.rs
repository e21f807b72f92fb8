//! Parsing input and rendering results as text, LaTeX and JSON.

use racah::parse::{parse, Parsed};
use racah::tensor::evaluate_expr;
use racah::{embed, normalize};

fn main() -> Result<(), racah::Error> {
    for input in ["A^2 D B - 3/4 OmegaA", "b ox e f + a^2 h", "[x, y]", "{A, D} + gamma"] {
        println!("{input}");
        match parse(input)? {
            Parsed::Racah(u) => {
                let nf = normalize(&u);
                println!("  text   {}", nf.to_text());
                println!("  latex  {}", nf.to_latex());
                println!("  json   {}", nf.to_structured());
                println!("  image  {}", embed(&u).to_latex());
            }
            Parsed::Tensor(t) => {
                let v = evaluate_expr(&t);
                println!("  text   {}", v.to_text());
                println!("  latex  {}", v.to_latex());
            }
        }
    }
    if let Err(e) = parse("A + * B") {
        println!("\n{e}");
    }
    Ok(())
}
