//! Recursive-descent parser for scalar and polynomial expressions.
//!
//! Accepts the scalar grammar (`+ - * /`, integers, `i`, `sqrt(..)`,
//! `root4(..)`, parentheses) extended with unary minus, `^` with integer
//! exponents and named variables.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::FieldElement;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(text: &str, line: usize) -> Result<Lexer> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            toks.push((Tok::Num(s.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            toks.push((Tok::Ident(chars[start..k].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Sym(c), col));
            k += 1;
        } else {
            return Err(Error::Parse {
                line,
                col,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                let Some(c) = d.as_constant() else {
                    return Err(Error::Parse {
                        line: self.line,
                        col,
                        msg: "division by a non-constant".into(),
                    });
                };
                let Some(inv) = c.inv() else {
                    return Err(Error::Parse {
                        line: self.line,
                        col,
                        msg: "division by zero".into(),
                    });
                };
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn constant_arg(&mut self, name: &str) -> Result<FieldElement> {
        self.expect('(')?;
        let col = self.col();
        let arg = self.expr()?;
        self.expect(')')?;
        arg.as_constant().ok_or(Error::Parse {
            line: self.line,
            col,
            msg: format!("argument of {name} must be a constant"),
        })
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.nvars();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(n, FieldElement::from_rational(BigRational::from_integer(v))))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "i" => Ok(Poly::constant(n, FieldElement::i())),
                    "sqrt" => {
                        let c = self.constant_arg("sqrt")?;
                        Ok(Poly::constant(n, field_sqrt(&c)?))
                    }
                    "root4" => {
                        let c = self.constant_arg("root4")?;
                        let r = field_sqrt(&c).and_then(|s| field_sqrt(&s))?;
                        Ok(Poly::constant(n, r))
                    }
                    _ => match self.vars.iter().position(|v| *v == name) {
                        Some(k) => Ok(Poly::var(n, k)),
                        None => {
                            self.pos -= 1;
                            self.err(format!("unknown identifier '{name}'"))
                        }
                    },
                }
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Principal square root within `K`: the positive root of a positive real,
/// `i` times the positive root of a negative real. Nonreal arguments are
/// accepted when `K` contains a root; the root with positive real part (or
/// positive imaginary part on the imaginary axis) is taken.
pub fn field_sqrt(c: &FieldElement) -> Result<FieldElement> {
    let not_in_field = || Error::NotInField(format!("sqrt({c})"));
    if c.is_real() {
        if c.sign()? >= 0 {
            return c.sqrt_positive().ok_or_else(not_in_field);
        }
        let r = (-c).sqrt_positive().ok_or_else(not_in_field)?;
        return Ok(&r * &FieldElement::i());
    }
    let r = c.sqrt().ok_or_else(not_in_field)?;
    let re = r.re().sign()?;
    let flip = re < 0 || (re == 0 && r.im().sign()? < 0);
    Ok(if flip { -r } else { r })
}

/// Parse an expression in the given variables, reporting errors at `line`.
pub fn parse_poly_at(text: &str, vars: &[&str], line: usize) -> Result<Poly> {
    let lexer = lex(text, line)?;
    let mut p = Parser {
        toks: lexer.toks,
        pos: 0,
        line,
        end_col: text.chars().count() + 1,
        vars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_poly(text: &str, vars: &[&str]) -> Result<Poly> {
    parse_poly_at(text, vars, 1)
}

pub fn parse_scalar_at(text: &str, line: usize) -> Result<FieldElement> {
    let p = parse_poly_at(text, &[], line)?;
    Ok(p.as_constant().expect("no variables"))
}

pub fn parse_scalar(text: &str) -> Result<FieldElement> {
    parse_scalar_at(text, 1)
}

/// A right-hand side of the form `sqrt(r)*(poly)` whose root is kept as a
/// separate positive weight `r`, or a plain polynomial with weight 1.
pub fn parse_weighted_poly_at(text: &str, vars: &[&str], line: usize) -> Result<(FieldElement, Poly)> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("sqrt(") {
        if let Some((inner, tail)) = split_balanced(rest) {
            let tail = tail.trim_start();
            if let Some(body) = tail.strip_prefix('*') {
                let body = body.trim();
                if body.starts_with('(') && body.ends_with(')') && split_balanced(&body[1..]).is_some_and(|(_, r)| r.is_empty()) {
                    let w = parse_scalar_at(inner, line)?;
                    let offset = text.len() - body.len() + 1;
                    let poly = parse_poly_at(&body[1..body.len() - 1], vars, line).map_err(|e| shift_col(e, offset))?;
                    if !w.is_real() || w.sign()? <= 0 {
                        return Err(Error::Parse {
                            line,
                            col: 6,
                            msg: "weight must be a positive real".into(),
                        });
                    }
                    return Ok(match field_sqrt(&w) {
                        Ok(r) => (FieldElement::one(), poly.scale(&r)),
                        Err(_) => (w, poly),
                    });
                }
            }
        }
    }
    Ok((FieldElement::one(), parse_poly_at(text, vars, line)?))
}

fn shift_col(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col: col + by, msg },
        other => other,
    }
}

/// Split `s` (just after an opening parenthesis) at its matching `)`.
fn split_balanced(s: &str) -> Option<(&str, &str)> {
    let mut depth = 1usize;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some((&s[..k], &s[k + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/4").unwrap(), FieldElement::from_ratio(3, 4));
        assert_eq!(parse_scalar("sqrt(2)*i").unwrap(), FieldElement::sqrt2() * FieldElement::i());
        assert_eq!(parse_scalar("sqrt(12)").unwrap(), FieldElement::sqrt3() * FieldElement::from_int(2));
        assert_eq!(parse_scalar("root4(2)^4").unwrap(), FieldElement::from_int(2));
        assert!(matches!(parse_scalar("sqrt(5)"), Err(Error::NotInField(_))));
        assert_eq!(parse_scalar("sqrt(-1)").unwrap(), FieldElement::i());
        assert_eq!(parse_scalar("sqrt(18/8)").unwrap(), FieldElement::from_ratio(3, 2));
    }

    #[test]
    fn errors_cite_columns() {
        match parse_scalar("1 + * 2") {
            Err(Error::Parse { line: 1, col: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_poly_at("z1 + q", &["z1"], 3) {
            Err(Error::Parse { line: 3, col: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar("(1").is_err());
        assert!(parse_poly("1/z1", &["z1"]).is_err());
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("z1^2 - sqrt(3)*z1*z2 + 1/2", &["z1", "z2"]).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[1, 1]), -FieldElement::sqrt3());
    }

    #[test]
    fn weighted() {
        let (w, p) = parse_weighted_poly_at("sqrt(5)*(z1 + 1)", &["z1"], 1).unwrap();
        assert_eq!(w, FieldElement::from_int(5));
        assert_eq!(p.len(), 2);
        let (w, p) = parse_weighted_poly_at("sqrt(4)*(z1)", &["z1"], 1).unwrap();
        assert!(w.is_one());
        assert_eq!(p.coeff(&[1]), FieldElement::from_int(2));
    }
}
