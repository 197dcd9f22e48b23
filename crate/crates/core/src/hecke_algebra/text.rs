//! Text form of algebra elements: a sum of terms `coef*monomial*word`, e.g.
//! `e1*s1 - 1/2*sbar + 3`. Variables are `e1..ek`; generators are `s1..s{k-1}`
//! together with `sbar` (types B, C) or `sd` (type D). Parsing accepts any
//! product of these, with `^n` powers and parentheses.

use num_traits::{One, Signed};

use super::{HeckeAlgebra, HeckeElement};
use crate::error::{Error, Result};
use crate::exact_kernel::{parse_rational, NuPoly, Rational};

impl HeckeAlgebra {
    pub fn format_element(&self, x: &HeckeElement) -> String {
        let mut out = String::new();
        for w in &self.weyl {
            let p = x.coefficient(w);
            if num_traits::Zero::is_zero(&p) {
                continue;
            }
            let word: Vec<&str> = self.words[w].iter().map(|&i| self.names[i].as_str()).collect();
            for (m, c) in p.sorted_terms() {
                let neg = c.is_negative();
                let a = c.abs();
                let mut factors = Vec::new();
                if !a.is_one() || (m.is_empty() && word.is_empty()) {
                    factors.push(a.to_string());
                }
                for (i, &e) in m.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(format!("e{}", i + 1)),
                        _ => factors.push(format!("e{}^{}", i + 1, e)),
                    }
                }
                factors.extend(word.iter().map(|s| s.to_string()));
                if out.is_empty() {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                out.push_str(&factors.join("*"));
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<HeckeElement> {
        let toks = tokenize(s)?;
        let mut p = Parser { alg: self, toks, pos: 0 };
        let x = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '/') {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(parse_rational(&t)?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a HeckeAlgebra,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<HeckeElement> {
        let mut neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let mut acc = HeckeElement::zero();
        loop {
            let t = self.term()?;
            acc = if neg { acc - t } else { acc + t };
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<HeckeElement> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = self.alg.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<HeckeElement> {
        let base = self.atom()?;
        if self.eat('^') {
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(Error::Parse("expected exponent".into()));
            };
            self.pos += 1;
            if !n.is_integer() || n.is_negative() {
                return Err(Error::Parse(format!("bad exponent {n}")));
            }
            let e: usize = n.to_integer().try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            let mut acc = self.alg.one();
            for _ in 0..e {
                acc = self.alg.mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<HeckeElement> {
        let k = self.alg.k();
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(self.alg.scalar(r))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let x = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(x)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if let Some(i) = self.alg.names.iter().position(|n| *n == id) {
                    return Ok(self.alg.s(i));
                }
                if let Some(n) = id.strip_prefix('e') {
                    if let Ok(i) = n.parse::<usize>() {
                        if (1..=k).contains(&i) {
                            return Ok(self.alg.poly(NuPoly::var(i - 1)));
                        }
                    }
                }
                Err(Error::Parse(format!("unknown symbol {id:?} for {}", self.alg)))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
