//! The expression grammar shared by the Racah and tensor sides.
//!
//! ```text
//! sum     := signed (('+' | '-') signed)*
//! signed  := '-' signed | product
//! product := power (('*' | '⊗' | 'ox')? power)*
//! power   := atom ('^' integer)?
//! atom    := integer | integer '/' integer | identifier
//!          | '(' sum ')' | '[' sum ',' sum ']' | '{' sum ',' sum '}'
//! ```
//!
//! Juxtaposition multiplies. A word that is not a known identifier is read
//! as a run of one-letter identifiers, so `xy` is `x y` and `AB` is `A B`.
//! Positions in errors count characters from 0.

use num_traits::Zero;

use crate::error::Error;
use crate::expr::Expr;
use crate::racah::{RacahExpr, RacahGen};
use crate::scalar::{self, Scalar};
use crate::tensor::{TensorExpr, TensorSym};

#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Racah(RacahExpr),
    Tensor(TensorExpr),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ident {
    Racah(RacahGen),
    Tensor(TensorSym),
}

fn lookup(word: &str) -> Option<Ident> {
    RacahGen::from_name(word)
        .map(Ident::Racah)
        .or_else(|| TensorSym::from_name(word).map(Ident::Tensor))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(Ident),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '⊗' | '·' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(scalar::parse(&text)?)));
            continue;
        }
        if is_word_char(c) {
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word == "ox" {
                out.push((start, Tok::Star));
                continue;
            }
            if let Some(id) = lookup(&word) {
                out.push((start, Tok::Ident(id)));
                continue;
            }
            // A run of one-letter identifiers.
            let mut pieces = Vec::new();
            for (k, ch) in word.chars().enumerate() {
                match lookup(&ch.to_string()) {
                    Some(id) => pieces.push((start + k, Tok::Ident(id))),
                    None => {
                        return Err(Error::UnknownIdentifier {
                            pos: start,
                            name: word,
                        })
                    }
                }
            }
            out.extend(pieces);
            continue;
        }
        return Err(Error::Syntax {
            pos: start,
            message: format!("unexpected character `{c}`"),
        });
    }
    Ok(out)
}

type Untyped = Expr<Ident>;

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax {
            pos: self.here(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), Error> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn sum(&mut self) -> Result<Untyped, Error> {
        let mut acc = self.signed()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc + self.signed()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.signed()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed(&mut self) -> Result<Untyped, Error> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return match self.signed()? {
                Expr::Scalar(c) => Ok(Expr::Scalar(-c)),
                e => Ok(-e),
            };
        }
        self.product()
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket | Tok::LBrace)
        )
    }

    fn product(&mut self) -> Result<Untyped, Error> {
        let mut acc = self.power()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                acc = acc * self.power()?;
            } else if self.starts_atom() {
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Untyped, Error> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() && *n >= Scalar::zero() => {
                let exp: u32 = n
                    .to_integer()
                    .try_into()
                    .or_else(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(exp))
            }
            _ => self.error("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Untyped, Error> {
        let Some(tok) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Num(c) => Ok(Expr::Scalar(c)),
            Tok::Ident(id) => Ok(Expr::Symbol(id)),
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::LBracket | Tok::LBrace => {
                let left = self.sum()?;
                self.expect(Tok::Comma, "`,`")?;
                let right = self.sum()?;
                if tok == Tok::LBracket {
                    self.expect(Tok::RBracket, "`]`")?;
                    Ok(Expr::comm(left, right))
                } else {
                    self.expect(Tok::RBrace, "`}`")?;
                    Ok(Expr::anti(left, right))
                }
            }
            _ => {
                self.pos -= 1;
                self.error("expected an operand")
            }
        }
    }
}

fn map_symbols<S, T>(e: Expr<S>, f: &impl Fn(S) -> Option<T>) -> Option<Expr<T>> {
    let bx = |x: Box<Expr<S>>| map_symbols(*x, f).map(Box::new);
    Some(match e {
        Expr::Symbol(s) => Expr::Symbol(f(s)?),
        Expr::Scalar(c) => Expr::Scalar(c),
        Expr::Add(a, b) => Expr::Add(bx(a)?, bx(b)?),
        Expr::Sub(a, b) => Expr::Sub(bx(a)?, bx(b)?),
        Expr::Neg(a) => Expr::Neg(bx(a)?),
        Expr::Mul(a, b) => Expr::Mul(bx(a)?, bx(b)?),
        Expr::Scale(c, a) => Expr::Scale(c, bx(a)?),
        Expr::Commutator(a, b) => Expr::Commutator(bx(a)?, bx(b)?),
        Expr::Anticommutator(a, b) => Expr::Anticommutator(bx(a)?, bx(b)?),
        Expr::Pow(a, n) => Expr::Pow(bx(a)?, n),
    })
}

/// Parses an expression; it is a Racah expression when every identifier is
/// a Racah-algebra name (or there are none), and a tensor expression when
/// every identifier is a tensor-side name.
pub fn parse(input: &str) -> Result<Parsed, Error> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.chars().count(),
    };
    let tree = p.sum()?;
    if p.pos < p.toks.len() {
        return p.error("unexpected trailing input");
    }
    let symbols = tree.symbols();
    let any_racah = symbols.iter().any(|s| matches!(s, Ident::Racah(_)));
    let any_tensor = symbols.iter().any(|s| matches!(s, Ident::Tensor(_)));
    match (any_racah, any_tensor) {
        (true, true) => Err(Error::MixedExpression),
        (_, false) => Ok(Parsed::Racah(
            map_symbols(tree, &|s| match s {
                Ident::Racah(g) => Some(g),
                Ident::Tensor(_) => None,
            })
            .expect("only Racah identifiers"),
        )),
        (false, true) => Ok(Parsed::Tensor(
            map_symbols(tree, &|s| match s {
                Ident::Tensor(t) => Some(t),
                Ident::Racah(_) => None,
            })
            .expect("only tensor identifiers"),
        )),
    }
}

/// Parses a Racah-algebra expression.
pub fn parse_racah(input: &str) -> Result<RacahExpr, Error> {
    match parse(input)? {
        Parsed::Racah(e) => Ok(e),
        Parsed::Tensor(_) => Err(Error::MixedExpression),
    }
}

/// Parses a tensor-side expression; constants alone count as tensor
/// expressions here.
pub fn parse_tensor(input: &str) -> Result<TensorExpr, Error> {
    match parse(input)? {
        Parsed::Tensor(e) => Ok(e),
        Parsed::Racah(e) if e.symbols().is_empty() => {
            Ok(map_symbols(e, &|_| None::<TensorSym>).expect("no symbols"))
        }
        Parsed::Racah(_) => Err(Error::MixedExpression),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::racah::normalize;
    use crate::tensor::evaluate_expr;

    #[test]
    fn racah_examples() {
        assert!(normalize(&parse_racah("[A,B] - 2*D").unwrap()).is_zero());
        assert_eq!(parse_racah("OmegaA").unwrap(), Expr::sym(RacahGen::OmegaA));
        let anti = parse_racah("{A,B}").unwrap();
        assert_eq!(normalize(&anti), normalize(&parse_racah("A*B + B*A").unwrap()));
        assert_eq!(normalize(&parse_racah("AB").unwrap()), normalize(&parse_racah("A B").unwrap()));
        assert_eq!(
            normalize(&parse_racah("−1/2 A^2 + alpha δ").unwrap()),
            normalize(&parse_racah("-(1/2)*A*A + delta*alpha").unwrap())
        );
    }

    #[test]
    fn tensor_examples() {
        let u = parse_tensor("a(a+1) ox 1 + (b - c - a) ⊗ x + (a+b-c+1) x y - xy").unwrap();
        let v = parse_tensor("a^2 + a + (b-c-a) x + (a+b-c+1) x y - x y").unwrap();
        assert_eq!(evaluate_expr(&u), evaluate_expr(&v));
        assert_eq!(
            evaluate_expr(&parse_tensor("e f - f e - h").unwrap()),
            crate::tensor::TensorElement::zero()
        );
        assert_eq!(
            evaluate_expr(&parse_tensor("Lambda").unwrap()),
            evaluate_expr(&parse_tensor("ef + 1/4 h^2 - 1/2 h").unwrap())
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("A + a"), Err(Error::MixedExpression)));
        assert!(matches!(parse("A + Q"), Err(Error::UnknownIdentifier { pos: 4, .. })));
        assert!(matches!(parse("A + (B"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse("A $ B"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("A^B"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("[A B]"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn print_parse_round_trip() {
        let mut rng = crate::random::rng(4);
        for _ in 0..200 {
            let e = crate::random::racah_expr(&mut rng, 5, 5);
            let back = parse_racah(&e.to_string()).unwrap();
            assert_eq!(normalize(&back), normalize(&e), "{e}");
        }
    }
}
