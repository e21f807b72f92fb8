//! Verification suites for identities that live entirely in U(sl2).

use crate::linalg::rank_of;
use crate::report::VerificationReport;
use crate::scalar::{frac, int};

use super::{commutator, USl2Element};

/// Product of equitable generators spelled by `letters` (e.g. `"xyz"`).
fn word(letters: &str) -> USl2Element {
    letters.chars().fold(USl2Element::one(), |acc, c| {
        let g = match c {
            'x' => USl2Element::x(),
            'y' => USl2Element::y(),
            'z' => USl2Element::z(),
            _ => unreachable!("equitable words use x, y, z only"),
        };
        &acc * &g
    })
}

fn br(a: &USl2Element, b: &USl2Element) -> USl2Element {
    commutator(a, b)
}

/// Commutator identities among the equitable generators, the common
/// element `w` and its brackets.
pub fn verify_commutator_lemmas() -> VerificationReport {
    let mut r = VerificationReport::new("commutators");
    let s = |t: &str| word(t);
    let two = int(2);

    let relations = [
        ("equitable.xy", "xy - yx = x + y", "xy", "yx", "x", "y"),
        ("equitable.yz", "yz - zy = y + z", "yz", "zy", "y", "z"),
        ("equitable.zx", "zx - xz = z + x", "zx", "xz", "z", "x"),
    ];
    for (id, statement, a, b, c, d) in relations {
        r.check_eq(id, statement, &(&s(a) - &s(b)), &(&s(c) + &s(d)));
    }

    // [g, uv] identities: (id, g, uv, rhs terms with signs)
    let single: [(&str, &str, &str, &[(i64, &str)]); 9] = [
        ("x.xy", "x", "xy", &[(1, "xx"), (1, "xy")]),
        ("x.yz", "x", "yz", &[(1, "xz"), (-1, "yx")]),
        ("x.zx", "x", "zx", &[(-1, "xx"), (-1, "zx")]),
        ("y.yz", "y", "yz", &[(1, "yy"), (1, "yz")]),
        ("y.zx", "y", "zx", &[(1, "yx"), (-1, "zy")]),
        ("y.xy", "y", "xy", &[(-1, "yy"), (-1, "xy")]),
        ("z.zx", "z", "zx", &[(1, "zz"), (1, "zx")]),
        ("z.xy", "z", "xy", &[(1, "zy"), (-1, "xz")]),
        ("z.yz", "z", "yz", &[(-1, "zz"), (-1, "yz")]),
    ];
    let combo = |terms: &[(i64, &str)]| {
        terms.iter().fold(USl2Element::zero(), |acc, (k, t)| {
            &acc + &s(t).scale(&int(*k))
        })
    };
    let pretty = |terms: &[(i64, &str)]| {
        terms
            .iter()
            .enumerate()
            .map(|(i, (k, t))| match (i, *k < 0) {
                (0, true) => format!("-{t}"),
                (0, false) => t.to_string(),
                (_, true) => format!(" - {t}"),
                (_, false) => format!(" + {t}"),
            })
            .collect::<String>()
    };
    for (id, g, uv, rhs) in single {
        let statement = format!("[{g},{uv}] = {}", pretty(rhs));
        r.check_eq(format!("bracket.{id}"), statement, &br(&s(g), &s(uv)), &combo(rhs));
    }

    let pairs: [(&str, &str, &str, &str, &str); 3] = [
        ("xy", "yz", "xyz", "yy", "xz"),
        ("yz", "zx", "yzx", "zz", "yx"),
        ("zx", "xy", "zxy", "xx", "zy"),
    ];
    for (u, v, triple, sq, tail) in pairs {
        let rhs = &(&s(triple).scale(&two) + &s(sq)) - &s(tail);
        r.check_eq(
            format!("bracket.{u}.{v}"),
            format!("[{u},{v}] = 2{triple} + {sq} - {tail}"),
            &br(&s(u), &s(v)),
            &rhs,
        );
    }

    let w = USl2Element::w();
    let forms: [(&str, i64, &str); 6] = [
        ("zyx", 1, "zx"),
        ("zxy", -1, "zy"),
        ("yzx", -1, "yx"),
        ("xzy", 1, "xy"),
        ("yxz", 1, "yz"),
        ("xyz", -1, "xz"),
    ];
    for (cubic, sign, quad) in forms {
        let value = &s(cubic) + &s(quad).scale(&int(sign));
        let op = if sign > 0 { '+' } else { '-' };
        r.check_eq(
            format!("w.{cubic}"),
            format!("w = {cubic} {op} {quad}"),
            &value,
            &w,
        );
    }

    let w_single = [
        ("x", "xyx", "xzx"),
        ("y", "yzy", "yxy"),
        ("z", "zxz", "zyz"),
    ];
    for (g, p, q) in w_single {
        r.check_eq(
            format!("w-bracket.{g}"),
            format!("[w,{g}] = {p} - {q}"),
            &br(&w, &s(g)),
            &(&s(p) - &s(q)),
        );
    }

    let w_pairs = [
        ("xy", "yzxy", "xyzx", "xyx", "yxy"),
        ("yz", "zxyz", "yzxy", "yzy", "zyz"),
        ("zx", "xyzx", "zxyz", "zxz", "xzx"),
    ];
    for (uv, a, b, c, d) in w_pairs {
        let rhs = &(&(&s(a) - &s(b)) + &s(c)) - &s(d);
        r.check_eq(
            format!("w-bracket.{uv}"),
            format!("[w,{uv}] = {a} - {b} + {c} - {d}"),
            &br(&w, &s(uv)),
            &rhs,
        );
    }
    r
}

/// Centrality and the alternative forms of the normalized Casimir, the
/// `ν` relations and the inverse of the equitable change of generators.
pub fn verify_casimir_properties() -> VerificationReport {
    let mut r = VerificationReport::new("casimir-usl2");
    let lam = USl2Element::casimir();
    let (e, f, h) = (USl2Element::e(), USl2Element::f(), USl2Element::h());
    let (x, y, z) = (USl2Element::x(), USl2Element::y(), USl2Element::z());
    let (nx, nz) = (USl2Element::nu_x(), USl2Element::nu_z());

    for (name, g) in [("e", &e), ("f", &f), ("h", &h)] {
        r.check_zero(
            format!("central.{name}"),
            format!("[Λ,{name}] = 0"),
            &commutator(&lam, g),
        );
    }
    let sym = [&x * &y, &y * &z, &z * &x, &y * &x, &z * &y, &x * &z]
        .iter()
        .fold(USl2Element::zero(), |acc, t| &acc + t);
    r.check_eq(
        "equitable-form",
        "Λ = -(xy+yz+zx+yx+zy+xz)/2",
        &lam,
        &sym.scale(&frac(-1, 2)),
    );
    let four = int(4);
    r.check_eq(
        "nu-form.xz",
        "Λ = 4ν_xν_z + y(y+1)",
        &lam,
        &(&(&nx * &nz).scale(&four) + &(&y * &y.shifted(1))),
    );
    r.check_eq(
        "nu-form.zx",
        "Λ = 4ν_zν_x + y(y-1)",
        &lam,
        &(&(&nz * &nx).scale(&four) + &(&y * &y.shifted(-1))),
    );
    r.check_eq("nu.x-y", "[ν_x,y] = ν_x", &commutator(&nx, &y), &nx);
    r.check_eq("nu.y-z", "[y,ν_z] = ν_z", &commutator(&y, &nz), &nz);
    r.check_eq(
        "nu.z-x",
        "[ν_z,ν_x] = y/2",
        &commutator(&nz, &nx),
        &y.scale(&frac(1, 2)),
    );
    r.check_eq(
        "nu.x-equitable",
        "ν_x = -(x+y)/2",
        &nx,
        &(&x + &y).scale(&frac(-1, 2)),
    );
    r.check_eq(
        "nu.z-equitable",
        "ν_z = (y+z)/2",
        &nz,
        &(&y + &z).scale(&frac(1, 2)),
    );
    r.check_eq("inverse.e", "e = y + z", &e, &(&y + &z));
    r.check_eq("inverse.f", "f = -x - y", &f, &-(&x + &y));
    r.check_eq("inverse.h", "h = 2y", &h, &y.scale(&int(2)));
    r
}

/// Returns `(e^i f^i, ∏_{j=1}^{i} (Λ - (h-2j+2)(h-2j)/4))`.
pub fn ef_power_identity(i: u32) -> (USl2Element, USl2Element) {
    let lhs = &USl2Element::e().pow(i) * &USl2Element::f().pow(i);
    let lam = USl2Element::casimir();
    let h = USl2Element::h();
    let rhs = (1..=i64::from(i)).fold(USl2Element::one(), |acc, j| {
        let factor = &lam - &(&h.shifted(-2 * j + 2) * &h.shifted(-2 * j)).scale(&frac(1, 4));
        &acc * &factor
    });
    (lhs, rhs)
}

fn as_vector(u: &USl2Element) -> Vec<((u32, u32, u32), crate::scalar::Scalar)> {
    u.terms().map(|(m, c)| ((m.e, m.h, m.f), c.clone())).collect()
}

/// Basis claims for U(sl2): independence of products `e^i h^j f^k`, of
/// `Λ^i h^j f^n`, `Λ^i h^j e^n`, `Λ^i y^j ν_x^n`, `Λ^i y^j ν_z^n` (all
/// exponents up to `max_exp`), together with their homogeneity, and the
/// product formula for `e^i f^i` up to `max_i`.
pub fn verify_pbw_bases(max_exp: u32, max_i: u32) -> VerificationReport {
    let mut r = VerificationReport::new("pbw");
    let (e, f, h) = (USl2Element::e(), USl2Element::f(), USl2Element::h());
    let lam = USl2Element::casimir();
    let (y, nx, nz) = (USl2Element::y(), USl2Element::nu_x(), USl2Element::nu_z());
    let range = || 0..=max_exp;

    let mut products = Vec::new();
    for i in range() {
        for j in range() {
            for k in range() {
                products.push(&(&e.pow(i) * &h.pow(j)) * &f.pow(k));
            }
        }
    }
    let count = products.len();
    let rank = rank_of(products.iter().map(as_vector));
    r.record(
        "pbw.independent",
        format!("e^i h^j f^k (exponents ≤ {max_exp}) are linearly independent"),
        rank == count,
        || format!("rank {rank} of {count} vectors"),
    );

    let families: [(&str, &USl2Element, &USl2Element, i64); 4] = [
        ("lambda-h-f", &h, &f, 1),
        ("lambda-h-e", &h, &e, -1),
        ("lambda-y-nux", &y, &nx, 1),
        ("lambda-y-nuz", &y, &nz, -1),
    ];
    for (name, mid, last, sign) in families {
        let mut vectors = Vec::new();
        let mut homogeneous = true;
        for n in range() {
            for i in range() {
                for j in range() {
                    let v = &(&lam.pow(i) * &mid.pow(j)) * &last.pow(n);
                    homogeneous &= v.is_homogeneous(sign * i64::from(n));
                    vectors.push(v);
                }
            }
        }
        let count = vectors.len();
        let rank = rank_of(vectors.iter().map(as_vector));
        r.record(
            format!("{name}.independent"),
            format!("{name} family (exponents ≤ {max_exp}) is linearly independent"),
            rank == count,
            || format!("rank {rank} of {count} vectors"),
        );
        r.record(
            format!("{name}.homogeneous"),
            format!("{name} family elements lie in U_(±n)"),
            homogeneous,
            || "an element is not homogeneous of the expected degree".to_string(),
        );
    }

    for i in 0..=max_i {
        let (lhs, rhs) = ef_power_identity(i);
        r.check_eq(
            format!("ef-power.{i}"),
            format!("e^{i} f^{i} = ∏_(j=1..{i}) (Λ - (h-2j+2)(h-2j)/4)"),
            &lhs,
            &rhs,
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_suites_pass() {
        let r = verify_commutator_lemmas();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 3 + 9 + 3 + 6 + 3 + 3);
        let r = verify_casimir_properties();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn ef_identity_small_cases() {
        let (l, r) = ef_power_identity(0);
        assert_eq!(l, USl2Element::one());
        assert_eq!(r, USl2Element::one());
        let (l, r) = ef_power_identity(1);
        assert_eq!(l, USl2Element::monomial(1, 0, 1));
        assert_eq!(l, r);
        let (l, r) = ef_power_identity(3);
        assert_eq!(l, r);
    }

    #[test]
    fn specific_brackets() {
        let (x, y, z) = (USl2Element::x(), USl2Element::y(), USl2Element::z());
        assert_eq!(commutator(&x, &(&x * &y)), &(&x * &x) + &(&x * &y));
        let xy = &x * &y;
        let yz = &y * &z;
        let rhs = &(&(&xy * &z).scale(&int(2)) + &(&y * &y)) - &(&x * &z);
        assert_eq!(commutator(&xy, &yz), rhs);
    }
}
