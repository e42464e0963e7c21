//! Polynomial expressions: integers, `x<i>`, `y<p>`, `z<j>`, unary minus,
//! `+ - * / ^` and parentheses. `^` binds tighter than `*` and `/`, which
//! bind tighter than `+` and `-`. Division is only by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use springer_core::{Ambient, Polynomial, Var};
use thiserror::Error;

/// Largest total degree an expression may reach.
pub const MAX_DEGREE: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos} for ambient {ambient}")]
    UnknownVariable { pos: usize, name: String, ambient: Ambient },
    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error("division by a non-constant at position {pos}")]
    NonConstantDivisor { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::UnknownVariable { pos, .. }
            | ParseError::ExponentOverflow { pos }
            | ParseError::DivisionByZero { pos }
            | ParseError::NonConstantDivisor { pos } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(char, usize),
    Op(char),
    Open,
    Close,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let digits_from = |mut j: usize| {
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            j
        };
        match c {
            '0'..='9' => {
                i = digits_from(i);
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Num(n), start));
            }
            'x' | 'y' | 'z' => {
                i = digits_from(i + 1);
                if i == start + 1 {
                    return Err(ParseError::Syntax { pos: start, msg: format!("`{c}` needs an index") });
                }
                let idx = text[start + 1..i]
                    .parse::<usize>()
                    .map_err(|_| ParseError::UnknownVariable { pos: start, name: text[start..i].into(), ambient: Ambient::x_only(0) })?;
                out.push((Tok::Var(c, idx), start));
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push((Tok::Op(c), start));
                i += 1;
            }
            '(' => {
                out.push((Tok::Open, start));
                i += 1;
            }
            ')' => {
                out.push((Tok::Close, start));
                i += 1;
            }
            _ => {
                let ch = text[start..].chars().next().expect("non-empty");
                return Err(ParseError::Syntax { pos: start, msg: format!("unexpected character `{ch}`") });
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ambient: Ambient,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn check_degree(&self, p: &Polynomial, pos: usize) -> Result<(), ParseError> {
        if p.degree() > MAX_DEGREE {
            return Err(ParseError::ExponentOverflow { pos });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Tok::Op(c @ ('+' | '-')) = *self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Tok::Op(c @ ('*' | '/')) = *self.peek() {
            let pos = self.bump().1;
            let rhs = self.unary()?;
            if c == '*' {
                acc = &acc * &rhs;
                self.check_degree(&acc, pos)?;
            } else {
                if rhs.is_zero() {
                    return Err(ParseError::DivisionByZero { pos });
                }
                if rhs.degree() != 0 {
                    return Err(ParseError::NonConstantDivisor { pos });
                }
                let (_, c) = rhs.leading_term().expect("nonzero");
                acc = acc.scale(&(BigRational::from_integer(1.into()) / c));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek() == Tok::Op('-') {
            self.bump();
            return Ok(-&self.unary()?);
        }
        if *self.peek() == Tok::Op('+') {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        let pos = self.bump().1;
        let (tok, epos) = self.bump();
        let Tok::Num(e) = tok else {
            return Err(ParseError::Syntax { pos: epos, msg: "exponent must be a non-negative integer".into() });
        };
        let e: u32 = u32::try_from(&e).map_err(|_| ParseError::ExponentOverflow { pos })?;
        if base.degree().saturating_mul(e as usize) > MAX_DEGREE {
            return Err(ParseError::ExponentOverflow { pos });
        }
        if *self.peek() == Tok::Op('^') {
            return Err(ParseError::Syntax { pos: self.pos(), msg: "chained `^` needs parentheses".into() });
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Polynomial::constant(self.ambient, BigRational::from_integer(n))),
            Tok::Var(kind, idx) => {
                let var = match kind {
                    'x' => Var::X(idx),
                    'y' => Var::Y(idx),
                    _ => Var::Z(idx),
                };
                Polynomial::var(self.ambient, var).map_err(|_| ParseError::UnknownVariable {
                    pos,
                    name: format!("{kind}{idx}"),
                    ambient: self.ambient,
                })
            }
            Tok::Open => {
                let inner = self.expr()?;
                let (close, cpos) = self.bump();
                if close != Tok::Close {
                    return Err(ParseError::Syntax { pos: cpos, msg: "expected `)`".into() });
                }
                Ok(inner)
            }
            Tok::Close => Err(ParseError::Syntax { pos, msg: "unexpected `)`".into() }),
            Tok::Op(c) => Err(ParseError::Syntax { pos, msg: format!("unexpected `{c}`") }),
            Tok::End => Err(ParseError::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses `text` into a polynomial over `ambient`. Whitespace is ignored.
pub fn parse_poly(text: &str, ambient: Ambient) -> Result<Polynomial, ParseError> {
    let toks = lex(text).map_err(|e| match e {
        ParseError::UnknownVariable { pos, name, .. } => ParseError::UnknownVariable { pos, name, ambient },
        other => other,
    })?;
    let mut p = Parser { toks, at: 0, ambient };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::Close => Err(ParseError::Syntax { pos: p.pos(), msg: "unbalanced `)`".into() }),
        _ => Err(ParseError::Syntax { pos: p.pos(), msg: "expected an operator".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use springer_core::poly::rat;

    fn amb() -> Ambient {
        Ambient::new(6, 2)
    }

    fn v(var: Var) -> Polynomial {
        Polynomial::var(amb(), var).unwrap()
    }

    #[test]
    fn worked_example_input() {
        let p = parse_poly("x1 + x2 + x3 - 2*z1 - z2", Ambient::new(4, 2)).unwrap();
        assert_eq!(p.to_string(), "x1 + x2 + x3 - 2*z1 - z2");
    }

    #[test]
    fn p_delta_input() {
        let p = parse_poly("(x2-z2)*(x3-z2)*(x5-z2)", amb()).unwrap();
        let b = |i| &v(Var::X(i)) - &v(Var::Z(2));
        assert_eq!(p, &(&b(2) * &b(3)) * &b(5));
    }

    #[test]
    fn zero_and_precedence() {
        assert!(parse_poly("0", amb()).unwrap().is_zero());
        assert_eq!(parse_poly("-x1^2", amb()).unwrap(), -&v(Var::X(1)).pow(2));
        assert_eq!(parse_poly("2*x1^2 - x1*x2", amb()).unwrap(), &v(Var::X(1)).pow(2).scale(&rat(2)) - &(&v(Var::X(1)) * &v(Var::X(2))));
        assert_eq!(parse_poly("x1 - x2 - x3", amb()).unwrap(), &(&v(Var::X(1)) - &v(Var::X(2))) - &v(Var::X(3)));
        assert_eq!(parse_poly("3/2*x1", amb()).unwrap(), v(Var::X(1)).scale(&(rat(3) / rat(2))));
        assert_eq!(parse_poly(" ( x1 ) ^ 0 ", amb()).unwrap(), Polynomial::one(amb()));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("x1 + * x2", amb()).unwrap_err().position(), 5);
        assert!(matches!(parse_poly("x7", amb()), Err(ParseError::UnknownVariable { pos: 0, .. })));
        assert!(matches!(parse_poly("x1 + z3", amb()), Err(ParseError::UnknownVariable { pos: 5, .. })));
        assert!(matches!(parse_poly("y1", amb()), Err(ParseError::UnknownVariable { .. })));
        assert!(matches!(parse_poly("x1^99999999999", amb()), Err(ParseError::ExponentOverflow { pos: 2 })));
        assert!(matches!(parse_poly("x1/0", amb()), Err(ParseError::DivisionByZero { pos: 2 })));
        assert!(matches!(parse_poly("x1/x2", amb()), Err(ParseError::NonConstantDivisor { .. })));
        assert!(matches!(parse_poly("(x1", amb()), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("x1)", amb()), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x1 x2", amb()), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("x1 # 2", amb()), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("", amb()), Err(ParseError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn printed_forms_round_trip() {
        let amb = Ambient::with_y(4, 4, 2);
        for text in ["x1*x2 - x1*z1 - x2*z1 + z1^2", "-3/2", "x1^3*y2 - 1/3*z2", "-x4 + y1*z2^2"] {
            let p = parse_poly(text, amb).unwrap();
            assert_eq!(parse_poly(&p.to_string(), amb).unwrap(), p);
        }
    }
}
