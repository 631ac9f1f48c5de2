//! Canonical text for elements and the expression grammar.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braidlie::{Generator, PnLieElement, PureBraidLie};
use crate::freelie::LyndonWord;
use crate::{Error, Result};

/// Joins `(label, coeff)` terms canonically: `2*ab-c+de`, or `0` if empty.
pub fn format_terms<S: AsRef<str>, C: std::borrow::Borrow<BigInt>>(
    terms: impl IntoIterator<Item = (S, C)>,
) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let c = c.borrow();
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(label.as_ref());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parsed element or bracket expression.
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := ['-'] [INT ['*']] factor
/// factor := '[' expr ',' expr ']' | '(' expr ')' | '0' | word
/// word   := gen+            (a Lyndon basis word of one component)
/// gen    := 'B(' INT ',' INT ')'   (B(j,i) means B(i,j))
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Word(Vec<Generator>),
    Bracket(Box<Expr>, Box<Expr>),
    Sum(Vec<(BigInt, Expr)>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser { text, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, lie: &PureBraidLie) -> Result<PnLieElement> {
        let n = lie.n();
        match self {
            Expr::Zero => Ok(PnLieElement::zero(n)),
            Expr::Word(gens) => word_element(n, gens),
            Expr::Bracket(a, b) => lie.bracket(&a.eval(lie)?, &b.eval(lie)?),
            Expr::Sum(terms) => {
                let mut acc = PnLieElement::zero(n);
                for (c, e) in terms {
                    acc.add_scaled(&e.eval(lie)?, c);
                }
                Ok(acc)
            }
        }
    }
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, lie: &PureBraidLie) -> Result<PnLieElement> {
    Expr::parse(text)?.eval(lie)
}

fn word_element(n: usize, gens: &[Generator]) -> Result<PnLieElement> {
    for g in gens {
        if g.j() > n {
            return Err(Error::InvalidGenerator { i: g.i(), j: g.j(), n });
        }
    }
    let m = gens[0].component();
    if gens.iter().any(|g| g.component() != m) {
        let label: String = gens.iter().map(ToString::to_string).collect();
        return Err(Error::Parse { pos: 0, message: format!("{label} mixes components") });
    }
    let letters: Vec<u8> = gens.iter().map(Generator::letter).collect();
    Ok(PnLieElement::basis_element(n, m, LyndonWord::new(letters)?))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { pos: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek_token(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek_token() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| Error::Parse { pos: start, message: "bad integer".into() })
    }

    fn small_integer(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.integer()?;
        usize::try_from(&v).map_err(|_| Error::Parse { pos: start, message: "index too large".into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek_token() {
                Some('+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    let (c, e) = self.term()?;
                    terms.push((-c, e));
                }
                _ => break,
            }
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<(BigInt, Expr)> {
        let mut coeff = BigInt::one();
        if self.peek_token() == Some('-') {
            self.pos += 1;
            coeff = -coeff;
        }
        if self.peek_token().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let v = self.integer()?;
            match self.peek_token() {
                Some('*') => self.pos += 1,
                Some('[' | '(' | 'B') => {}
                // A bare integer is only meaningful as zero.
                _ if v.is_zero() => return Ok((coeff, Expr::Zero)),
                _ => return Err(Error::Parse { pos: start, message: "nonzero integers are not elements".into() }),
            }
            coeff *= v;
        }
        Ok((coeff, self.factor()?))
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek_token() {
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('B') => {
                let mut gens = Vec::new();
                while self.peek_token() == Some('B') {
                    let start = self.pos;
                    self.pos += 1;
                    self.expect('(')?;
                    let a = self.small_integer()?;
                    self.expect(',')?;
                    let b = self.small_integer()?;
                    self.expect(')')?;
                    if a == 0 || b == 0 || a == b {
                        return Err(Error::Parse { pos: start, message: format!("B({a},{b}) needs distinct positive indices") });
                    }
                    gens.push(Generator::new(a, b)?);
                }
                Ok(Expr::Word(gens))
            }
            Some(c) => Err(self.error(&format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
