//! Text format for polynomials and ideal files.
//!
//! Polynomials: identifiers `[A-Za-z_][A-Za-z0-9_]*`, integer literals,
//! `+ - * ^`, parentheses, and `/` by a nonzero constant (needed to print
//! rational coefficients). Ideal files hold a `ring: <vars> over Q|Fp:<p>`
//! header followed by one generator per line; `#` starts a comment.

use std::sync::Arc;

use num_bigint::BigInt;

use super::field::FieldSpec;
use super::poly::{Polynomial, Ring};
use super::PolyError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    line_start: usize,
    _src: &'a str,
}

type Spanned = (Tok, usize, usize);

fn syntax(line: usize, column: usize, message: impl Into<String>) -> PolyError {
    PolyError::Syntax { line, column, message: message.into() }
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer { chars: src.chars().collect(), pos: 0, line, line_start: 0, _src: src }
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, PolyError> {
        let mut out = Vec::new();
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            let col = self.pos - self.line_start + 1;
            if c == '\n' {
                self.pos += 1;
                self.line += 1;
                self.line_start = self.pos;
                continue;
            }
            if c.is_whitespace() {
                self.pos += 1;
                continue;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                c if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let s: String = self.chars[start..self.pos].iter().collect();
                    out.push((Tok::Int(s.parse().expect("digits")), self.line, col));
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.pos < self.chars.len()
                        && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                    {
                        self.pos += 1;
                    }
                    let s: String = self.chars[start..self.pos].iter().collect();
                    out.push((Tok::Ident(s), self.line, col));
                    continue;
                }
                other => return Err(syntax(self.line, col, format!("unexpected character '{other}'"))),
            };
            out.push((tok, self.line, col));
            self.pos += 1;
        }
        Ok(out)
    }
}

struct Parser<'r> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'r Arc<Ring>,
    end: (usize, usize),
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.1, t.2)).unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        let (l, c) = self.here();
        syntax(l, c, msg)
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(syntax(at.0, at.1, "division by a non-constant"));
                    }
                    let c = d.constant_term();
                    let field = self.ring.field();
                    if field.is_zero(&c) {
                        return Err(PolyError::NotInvertible(format!(
                            "divisor at line {} column {} is zero in {}",
                            at.0, at.1, field
                        )));
                    }
                    acc = acc.scale(&field.inv(&c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some((Tok::Int(e), l, c)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| syntax(l, c, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let Some((tok, line, col)) = self.toks.get(self.pos).cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(v) => Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&v))),
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(PolyError::UnknownIdentifier(format!("{name} (line {line}, column {col})"))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            other => Err(syntax(line, col, format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_at(text: &str, ring: &Arc<Ring>, line: usize) -> Result<Polynomial, PolyError> {
    let toks = Lexer::new(text, line).tokens()?;
    let last_line = line + text.matches('\n').count();
    let last_col = text.rsplit('\n').next().map(|s| s.chars().count()).unwrap_or(0) + 1;
    if toks.is_empty() {
        return Err(syntax(line, 1, "empty polynomial"));
    }
    let mut p = Parser { toks, pos: 0, ring, end: (last_line, last_col) };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parse a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
    parse_at(text, ring, 1)
}

/// Parse an ideal file, returning its ring and generator list.
pub fn parse_ideal_file(text: &str) -> Result<(Arc<Ring>, Vec<Polynomial>), PolyError> {
    let mut ring: Option<Arc<Ring>> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        match &ring {
            None => {
                let header = line
                    .trim()
                    .strip_prefix("ring:")
                    .ok_or_else(|| syntax(lineno, 1, "expected header 'ring: <vars> over <field>'"))?;
                let (vars, field) = header
                    .rsplit_once(" over ")
                    .ok_or_else(|| syntax(lineno, 1, "header is missing ' over <field>'"))?;
                let field: FieldSpec = field.trim().parse()?;
                let vars: Vec<String> = vars
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                for v in &vars {
                    let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok {
                        return Err(syntax(lineno, 1, format!("invalid variable name '{v}'")));
                    }
                }
                ring = Some(Ring::new(vars, field));
            }
            Some(r) => gens.push(parse_at(line, r, lineno)?),
        }
    }
    let ring = ring.ok_or_else(|| syntax(1, 1, "missing ring header"))?;
    Ok((ring, gens))
}

/// Render an ideal file; generators are printed in the given order.
pub fn format_ideal_file(ring: &Ring, gens: &[Polynomial]) -> String {
    let mut s = format!("ring: {} over {}\n", ring.vars().join(", "), ring.field());
    for g in gens {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_sum() {
        let r = Ring::new(["a", "b", "c", "d"], FieldSpec::Rationals);
        let p = parse_poly("a + d", &r).unwrap();
        assert_eq!(p, &Polynomial::var(&r, 0) + &Polynomial::var(&r, 3));
    }

    #[test]
    fn expansion_matches_term_by_term_product() {
        let r = Ring::new(["a", "b", "c", "d"], FieldSpec::Rationals);
        let p = parse_poly("(a+d)^2 - 4*(a*d - b*c)", &r).unwrap();
        // a^2 - 2ad + d^2 + 4bc, computed independently from the term list
        let expected = parse_poly("a^2 - 2*a*d + d^2 + 4*b*c", &r).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn reduces_mod_p() {
        let r = Ring::new(["x"], FieldSpec::Prime(3));
        assert!(parse_poly("3*x", &r).unwrap().is_zero());
        assert!(matches!(parse_poly("x/3", &r), Err(PolyError::NotInvertible(_))));
    }

    #[test]
    fn errors_carry_position() {
        let r = Ring::new(["x"], FieldSpec::Rationals);
        match parse_poly("x + * 2", &r) {
            Err(PolyError::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("x + y", &r), Err(PolyError::UnknownIdentifier(_))));
        assert!(parse_poly("x^-1", &r).is_err());
        assert!(parse_poly("x/x", &r).is_err());
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "# N_{1,1}\nring: a_1_1, b over Fp:5\n a_1_1^2 + 4*b  # trailing\n\nb - 1\n";
        let (ring, gens) = parse_ideal_file(text).unwrap();
        assert_eq!(ring.field(), FieldSpec::Prime(5));
        assert_eq!(gens.len(), 2);
        let printed = format_ideal_file(&ring, &gens);
        let (ring2, gens2) = parse_ideal_file(&printed).unwrap();
        assert_eq!(*ring, *ring2);
        assert_eq!(gens, gens2);
    }

    #[test]
    fn ideal_file_error_line() {
        let text = "ring: x over Q\nx\nx +\n";
        match parse_ideal_file(text) {
            Err(PolyError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
