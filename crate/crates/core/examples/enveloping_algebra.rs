//! PBW arithmetic in U(sl2), the equitable generators and the Z-grading.

use racah::usl2::{commutator, USl2Element};

fn main() {
    let (e, h, f) = (USl2Element::e(), USl2Element::h(), USl2Element::f());
    println!("f e = {}", &f * &e);
    println!("h e = {}", &h * &e);
    println!("f^2 e^2 = {}", &f.pow(2) * &e.pow(2));

    let (x, y, z) = (USl2Element::x(), USl2Element::y(), USl2Element::z());
    println!("\n[x, y] - x - y = {}", &(&commutator(&x, &y) - &x) - &y);
    println!("[z, x] - z - x = {}", &(&commutator(&z, &x) - &z) - &x);
    println!("w = {}", USl2Element::w());

    let lambda = USl2Element::casimir();
    println!("\nΛ = {lambda}");
    println!("[Λ, e] = {}", commutator(&lambda, &e));

    let u = &(&(&e * &f) + &f.pow(3)) + &(&e * &h);
    for (n, part) in &u.decompose().components {
        println!("degree {n:>2}: {part}");
    }
}
