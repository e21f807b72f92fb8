//! Shared helpers for rendering sparse sums as text and LaTeX.

use num_traits::{One, Signed};

use crate::scalar::{self, Scalar};

/// Joins `(coefficient, monomial)` pairs into `c m + c m - ...`.
///
/// An empty monomial string stands for the unit and always shows its
/// coefficient.
pub fn sum_text<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Scalar, String)>,
{
    join(terms, scalar::render, " ")
}

pub fn sum_latex<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Scalar, String)>,
{
    join(terms, scalar::render_latex, "")
}

fn join<I, F>(terms: I, render: F, sep: &str) -> String
where
    I: IntoIterator<Item = (Scalar, String)>,
    F: Fn(&Scalar) -> String,
{
    let mut out = String::new();
    for (i, (c, m)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_empty() {
            out.push_str(&render(&mag));
        } else if mag.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&render(&mag));
            out.push_str(sep);
            out.push_str(&m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `name^n` in text form, `name` for n = 1, nothing for n = 0.
pub fn power_text(name: &str, n: u32) -> Option<String> {
    match n {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{n}")),
    }
}

pub fn power_latex(name: &str, n: u32) -> Option<String> {
    match n {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{{{n}}}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn signs_and_units() {
        let s = sum_text(vec![
            (int(-1), "A B".to_string()),
            (int(2), "D".to_string()),
            (frac(-1, 2), String::new()),
        ]);
        assert_eq!(s, "-A B + 2 D - 1/2");
        assert_eq!(sum_text(Vec::new()), "0");
    }
}
