//! Homogeneous-component tables of the generator images and of the
//! products entering the Casimir images.

use std::collections::HashMap;

use crate::racah::{g, CasimirKind};
use crate::report::VerificationReport;
use crate::scalar::frac;
use crate::tensor::{commutator, Structural, TensorElement};

use super::{casimir_image_closed_form, closed_form_beta, closed_form_delta, closed_form_gamma, embed, GeneratorImageTable};

struct Graded<'a> {
    rep: &'a mut VerificationReport,
}

impl Graded<'_> {
    /// Checks each listed component and that every unlisted one vanishes.
    fn exact(&mut self, name: &str, value: &TensorElement, expected: &[(i64, TensorElement, &str)]) {
        for (n, e, shown) in expected {
            self.rep.check_eq(
                format!("{name}.deg{n}"),
                format!("π̃_{n}({name}) = {shown}"),
                &value.project(*n),
                e,
            );
        }
        let listed: Vec<i64> = expected.iter().map(|(n, _, _)| *n).collect();
        let stray: Vec<i64> = value.degrees().into_iter().filter(|n| !listed.contains(n)).collect();
        self.rep.record(
            format!("{name}.others"),
            format!("all other components of {name} vanish"),
            stray.is_empty(),
            || format!("nonzero components in degrees {stray:?}"),
        );
    }

    /// Checks the degree range and the listed (extreme) components.
    fn bounded(&mut self, name: &str, value: &TensorElement, lo: i64, hi: i64, expected: &[(i64, TensorElement, &str)]) {
        let stray: Vec<i64> = value.degrees().into_iter().filter(|n| *n < lo || *n > hi).collect();
        self.rep.record(
            format!("{name}.range"),
            format!("components of {name} vanish outside [{lo},{hi}]"),
            stray.is_empty(),
            || format!("nonzero components in degrees {stray:?}"),
        );
        for (n, e, shown) in expected {
            self.rep.check_eq(
                format!("{name}.deg{n}"),
                format!("π̃_{n}({name}) = {shown}"),
                &value.project(*n),
                e,
            );
        }
    }
}

/// `Π_{j∈range} (v + j)`.
fn shifted_product(v: &TensorElement, shifts: impl IntoIterator<Item = i64>) -> TensorElement {
    shifts
        .into_iter()
        .fold(TensorElement::one(), |acc, j| &acc * &v.shifted(j))
}

/// Component tables of `A♮, B♮, C♮, D♮`, the power laws for exponents up to
/// 4, and the extreme components of `(A♮)^i (D♮)^j (B♮)^k` for `i+j+k ≤ 4`.
pub fn verify_homogeneous_tables() -> VerificationReport {
    let mut rep = VerificationReport::new("components");
    let Structural { r, l, theta, vartheta } = Structural::new();
    let table = GeneratorImageTable::shared();
    let (a, b, c, d) = (
        table.get(crate::racah::RacahGen::A),
        table.get(crate::racah::RacahGen::B),
        table.get(crate::racah::RacahGen::C),
        table.get(crate::racah::RacahGen::D),
    );
    let delta = closed_form_delta();
    let zero = TensorElement::zero();
    let vt_vt1 = &vartheta * &vartheta.shifted(1);
    let th_th1 = &theta * &theta.shifted(-1);
    let rl = commutator(&r, &l);
    {
        let mut gr = Graded { rep: &mut rep };
        gr.exact(
            "A♮",
            a,
            &[(-1, zero.clone(), "0"), (0, vt_vt1.clone(), "ϑ(ϑ+1)"), (1, r.clone(), "R")],
        );
        gr.exact(
            "B♮",
            b,
            &[(-1, l.clone(), "L"), (0, th_th1.clone(), "θ(θ-1)"), (1, zero.clone(), "0")],
        );
        gr.exact(
            "C♮",
            c,
            &[
                (-1, -&l, "-L"),
                (0, &(&delta - &vt_vt1) - &th_th1, "δ♮ - ϑ(ϑ+1) - θ(θ-1)"),
                (1, -&r, "-R"),
            ],
        );
        gr.exact(
            "D♮",
            d,
            &[
                (-1, &vartheta * &l, "ϑL"),
                (0, rl.scale(&frac(1, 2)), "[R,L]/2"),
                (1, &theta * &r, "θR"),
            ],
        );
        for (name, v) in [
            ("α♮", super::closed_form_alpha()),
            ("β♮", closed_form_beta()),
            ("γ♮", closed_form_gamma()),
            ("δ♮", delta.clone()),
        ] {
            gr.rep.record(
                format!("{name}.homogeneous"),
                format!("{name} is homogeneous of degree 0"),
                v.is_homogeneous(0),
                || format!("degrees {:?}", v.degrees()),
            );
        }
    }

    let mut powers: HashMap<(char, u32), TensorElement> = HashMap::new();
    for (key, base) in [('A', a), ('B', b), ('C', c), ('D', d)] {
        let mut acc = TensorElement::one();
        powers.insert((key, 0), acc.clone());
        for i in 1..=4 {
            acc = &acc * base;
            powers.insert((key, i), acc.clone());
        }
    }
    let mut gr = Graded { rep: &mut rep };
    for i in 1..=4u32 {
        let n = i as i64;
        gr.bounded(
            &format!("(A♮)^{i}"),
            &powers[&('A', i)],
            0,
            n,
            &[(0, vt_vt1.pow(i), "ϑ^i(ϑ+1)^i"), (n, r.pow(i), "R^i")],
        );
        gr.bounded(
            &format!("(B♮)^{i}"),
            &powers[&('B', i)],
            -n,
            0,
            &[(-n, l.pow(i), "L^i"), (0, th_th1.pow(i), "θ^i(θ-1)^i")],
        );
        gr.bounded(
            &format!("(C♮)^{i}"),
            &powers[&('C', i)],
            -n,
            n,
            &[(-n, (-&l).pow(i), "(-L)^i"), (n, (-&r).pow(i), "(-R)^i")],
        );
        gr.bounded(
            &format!("(D♮)^{i}"),
            &powers[&('D', i)],
            -n,
            n,
            &[
                (-n, &shifted_product(&vartheta, (0..n).map(|j| -j)) * &l.pow(i), "Π(ϑ-j) L^i"),
                (n, &r.pow(i) * &shifted_product(&theta, (1..=n).map(|j| -j)), "R^i Π(θ-j)"),
            ],
        );
    }
    for i in 0..=4u32 {
        for j in 0..=(4 - i) {
            for k in 0..=(4 - i - j) {
                let v = &(&powers[&('A', i)] * &powers[&('D', j)]) * &powers[&('B', k)];
                let (ni, nj, nk) = (i as i64, j as i64, k as i64);
                let top = &(&r.pow(i + j) * &th_th1.pow(k)) * &shifted_product(&theta, (1..=nj).map(|l| -l));
                let bottom = &(&vt_vt1.pow(i) * &shifted_product(&vartheta, (0..nj).map(|l| -l))) * &l.pow(j + k);
                let (lo, hi) = (-nj - nk, ni + nj);
                let expected = if lo == hi {
                    vec![(hi, top.clone(), "top and bottom")]
                } else {
                    vec![
                        (hi, top, "R^{i+j} θ^k(θ-1)^k Π(θ-l)"),
                        (lo, bottom, "ϑ^i(ϑ+1)^i Π(ϑ-l) L^{j+k}"),
                    ]
                };
                gr.bounded(&format!("A^{i}D^{j}B^{k}"), &v, lo, hi, &expected);
                if lo == hi {
                    let bottom = &(&vt_vt1.pow(i) * &shifted_product(&vartheta, (0..nj).map(|l| -l))) * &l.pow(j + k);
                    gr.rep.check_eq(
                        format!("A^{i}D^{j}B^{k}.deg{lo}.bottom"),
                        "bottom component formula",
                        &v.project(lo),
                        &bottom,
                    );
                }
            }
        }
    }
    rep
}

/// Images of `Ω_A, Ω_B, Ω_C` against their closed forms, and the component
/// tables of the seven products whose combination gives `Ω_A♮`.
pub fn verify_casimir_images() -> VerificationReport {
    let mut rep = VerificationReport::new("casimir-images");
    for which in CasimirKind::ALL {
        let name = format!("{:?}", which);
        rep.check_eq(
            format!("Omega{name}"),
            format!("Ω_{name}♮ equals its closed form"),
            &embed(&g(which.generator())),
            &casimir_image_closed_form(which),
        );
    }

    let Structural { r, l, theta, vartheta } = Structural::new();
    let table = GeneratorImageTable::shared();
    use crate::racah::RacahGen::*;
    let (a, b, c, d) = (table.get(A), table.get(B), table.get(C), table.get(D));
    let (beta, gamma, delta) = (table.get(Beta), table.get(Gamma), table.get(Delta));
    let half = frac(1, 2);
    let rl = commutator(&r, &l);
    let th = |k: i64| theta.shifted(k);
    let vt = |k: i64| vartheta.shifted(k);
    let th_th1 = &theta * &th(-1);
    let vt_vt1 = &vartheta * &vt(1);
    let r2 = r.pow(2);
    let l2 = l.pow(2);
    let deg0_c = &(delta - &vt_vt1) - &th_th1;

    let mut gr = Graded { rep: &mut rep };

    let d2 = d * d;
    gr.exact(
        "(D♮)^2",
        &d2,
        &[
            (2, &(&theta * &th(1)) * &r2, "θ(θ+1)R²"),
            (1, (&(&(&theta * &r) * &rl) + &(&(&theta * &rl) * &r)).scale(&half), "θR[R,L]/2 + θ[R,L]R/2"),
            (
                0,
                &(&rl.pow(2).scale(&frac(1, 4)) + &(&(&theta * &vt(1)) * &(&r * &l)))
                    + &(&(&vartheta * &th(-1)) * &(&l * &r)),
                "[R,L]²/4 + θ(ϑ+1)RL + ϑ(θ-1)LR",
            ),
            (-1, (&(&(&vartheta * &l) * &rl) + &(&(&vartheta * &rl) * &l)).scale(&half), "ϑL[R,L]/2 + ϑ[R,L]L/2"),
            (-2, &(&vartheta * &vt(-1)) * &l2, "ϑ(ϑ-1)L²"),
        ],
    );

    let lrl = &(&l * &r) * &l;
    let bac = &(b * a) * c;
    let two_vt1_sq = vt(1).pow(2).scale(&crate::scalar::int(2));
    gr.exact(
        "B♮A♮C♮",
        &bac,
        &[
            (2, -&(&th_th1 * &r2), "-θ(θ-1)R²"),
            (
                1,
                &(&(&th_th1 * &(&(delta - &two_vt1_sq) - &(&theta * &th(1)))) * &r) - &(&l * &r2),
                "θ(θ-1)(δ♮ - 2(ϑ+1)² - θ(θ+1))R - LR²",
            ),
            (
                0,
                &(&(&(&th_th1 * &vt_vt1) * &deg0_c) - &(&th_th1 * &(&r * &l)))
                    + &(&(&(delta - &vartheta.pow(2).scale(&crate::scalar::int(2))) - &th_th1) * &(&l * &r)),
                "θ(θ-1)ϑ(ϑ+1)(δ♮ - ϑ(ϑ+1) - θ(θ-1)) - θ(θ-1)RL + (δ♮ - 2ϑ² - θ(θ-1))LR",
            ),
            (
                -1,
                &(&(&(&(&vartheta * &vt(-1)) * &(&(delta - &(&vartheta * &vt(-1))) - &(&th(-1) * &th(-2))))
                    - &(&th_th1 * &vt_vt1))
                    * &l)
                    - &lrl,
                "(ϑ(ϑ-1)(δ♮ - ϑ(ϑ-1) - (θ-1)(θ-2)) - θ(θ-1)ϑ(ϑ+1))L - LRL",
            ),
            (-2, -&(&(&vartheta * &vt(-1)) * &l2), "-ϑ(ϑ-1)L²"),
        ],
    );

    let cab = &(c * a) * b;
    gr.exact(
        "C♮A♮B♮",
        &cab,
        &[
            (2, -&(&(&th(1) * &th(2)) * &r2), "-(θ+1)(θ+2)R²"),
            (
                1,
                &(&(&(&theta * &th(1)) * &(&(delta - &two_vt1_sq) - &th_th1)) * &r) - &(&r2 * &l),
                "θ(θ+1)(δ♮ - 2(ϑ+1)² - θ(θ-1))R - R²L",
            ),
            (
                0,
                &(&(&(&th_th1 * &vt_vt1) * &deg0_c) + &(&(&(delta - &two_vt1_sq) - &th_th1) * &(&r * &l)))
                    - &(&th_th1 * &(&l * &r)),
                "θ(θ-1)ϑ(ϑ+1)(δ♮ - ϑ(ϑ+1) - θ(θ-1)) + (δ♮ - 2(ϑ+1)² - θ(θ-1))RL - θ(θ-1)LR",
            ),
            (
                -1,
                &(&(&(&vt_vt1 * &deg0_c) - &(&(&vartheta * &vt(-1)) * &(&th(-1) * &th(-2)))) * &l) - &lrl,
                "(ϑ(ϑ+1)(δ♮ - ϑ(ϑ+1) - θ(θ-1)) - ϑ(ϑ-1)(θ-1)(θ-2))L - LRL",
            ),
            (-2, -&(&(&vartheta * &vt(-1)) * &l2), "-ϑ(ϑ-1)L²"),
        ],
    );

    gr.exact(
        "(A♮)^2",
        &(a * a),
        &[
            (2, r2.clone(), "R²"),
            (1, &two_vt1_sq * &r, "2(ϑ+1)²R"),
            (0, vt_vt1.pow(2), "ϑ²(ϑ+1)²"),
        ],
    );
    gr.exact(
        "B♮γ♮",
        &(b * gamma),
        &[(0, &th_th1 * gamma, "θ(θ-1)γ♮"), (-1, gamma * &l, "γ♮L")],
    );
    gr.exact(
        "C♮β♮",
        &(c * beta),
        &[
            (1, -&(beta * &r), "-β♮R"),
            (0, beta * &deg0_c, "β♮(δ♮ - ϑ(ϑ+1) - θ(θ-1))"),
            (-1, -&(beta * &l), "-β♮L"),
        ],
    );
    gr.exact(
        "A♮δ♮",
        &(a * delta),
        &[(1, delta * &r, "δ♮R"), (0, &vt_vt1 * delta, "ϑ(ϑ+1)δ♮")],
    );
    rep
}
