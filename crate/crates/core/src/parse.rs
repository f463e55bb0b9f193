//! Plain-text polynomial syntax.
//!
//! ```text
//! expr    := ['+'|'-'] circ (('+'|'-') circ)*
//! circ    := product ('o' product)*
//! product := factor (['*'] factor)*
//! factor  := INT ['/' INT] | VAR | '(' expr ')' | '[' expr (',' expr)+ ']'
//!          | 'sgn' '(' VAR ')' | 'std' '(' VAR (',' VAR)* ')'
//! ```
//!
//! Variable letters depend on the mode: `x` (ungraded), `y`/`z` (graded and
//! involution), `yp`/`ym`/`zp`/`zm` (graded-involution). A letter that names a
//! family of kinds is a wildcard: `x` over `{y, z}` in the graded and
//! involution modes, and `y` over `{yp, ym}`, `z` over `{zp, zm}`, `x` over
//! all four in the graded-involution mode. A template with wildcards expands to
//! one polynomial per choice. `sgn(v)` is `+1` when `v` is instantiated as a
//! symmetric variable and `-1` when skew.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::free::{circ, left_normed, standard_polynomial, Kind, Mode, Polynomial, Variable};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String, Option<u32>),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((s, Tok::Int(src[s..i].to_string())));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            let name = src[s..i].to_string();
            let d = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index = if d < i { Some(src[d..i].parse::<u32>().map_err(|_| Error::Parse { pos: d, msg: "index out of range".into() })?) } else { None };
            out.push((s, Tok::Ident(name, index)));
        } else if "+-*/()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
struct VarTok {
    letter: String,
    index: u32,
    pos: usize,
}

#[derive(Clone, Debug)]
enum Expr {
    Num(Rational),
    Var(VarTok),
    Sgn(VarTok),
    Std(Vec<VarTok>),
    Sum(Vec<(bool, Expr)>),
    Prod(Vec<Expr>),
    Comm(Vec<Expr>),
    Circ(Vec<Expr>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.len, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected {c:?}"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            terms.push((neg, self.circ()?));
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Expr::Sum(terms) })
    }

    fn circ(&mut self) -> Result<Expr> {
        let mut parts = vec![self.product()?];
        while matches!(self.peek(), Some(Tok::Ident(n, None)) if n == "o") {
            self.at += 1;
            parts.push(self.product()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Expr::Circ(parts) })
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Int(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('[')) => true,
            Some(Tok::Ident(n, None)) => n == "sgn" || n == "std",
            Some(Tok::Ident(_, Some(_))) => true,
            _ => false,
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut fs = vec![self.factor()?];
        loop {
            if self.eat('*') || self.starts_factor() {
                fs.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { Expr::Prod(fs) })
    }

    fn var(&mut self) -> Result<VarTok> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Ident(letter, Some(index))) => {
                self.at += 1;
                if index == 0 {
                    return Err(Error::Parse { pos, msg: "variable indices start at 1".into() });
                }
                Ok(VarTok { letter, index, pos })
            }
            _ => self.err("expected a variable"),
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let mut s = n;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.at += 1;
                            s = format!("{s}/{d}");
                        }
                        _ => return self.err("expected a denominator"),
                    }
                }
                let r: Rational = s.parse().map_err(|_| Error::Parse { pos, msg: format!("bad rational {s:?}") })?;
                Ok(Expr::Num(r))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.at += 1;
                let mut parts = vec![self.expr()?];
                while self.eat(',') {
                    parts.push(self.expr()?);
                }
                self.expect(']')?;
                if parts.len() < 2 {
                    return Err(Error::Parse { pos, msg: "commutator needs at least two entries".into() });
                }
                Ok(Expr::Comm(parts))
            }
            Some(Tok::Ident(name, None)) if name == "sgn" => {
                self.at += 1;
                self.expect('(')?;
                let v = self.var()?;
                self.expect(')')?;
                Ok(Expr::Sgn(v))
            }
            Some(Tok::Ident(name, None)) if name == "std" => {
                self.at += 1;
                self.expect('(')?;
                let mut vs = vec![self.var()?];
                while self.eat(',') {
                    vs.push(self.var()?);
                }
                self.expect(')')?;
                Ok(Expr::Std(vs))
            }
            Some(Tok::Ident(_, Some(_))) => Ok(Expr::Var(self.var()?)),
            Some(Tok::Ident(name, None)) => self.err(format!("{name:?} is missing an index")),
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Kinds a letter may denote in `mode`; more than one means a wildcard.
fn letter_kinds(letter: &str, mode: Mode) -> Option<&'static [Kind]> {
    use Kind::*;
    Some(match (mode, letter) {
        (Mode::Ungraded, "x") => &[EvenSym],
        (Mode::Graded, "y") => &[EvenSym],
        (Mode::Graded, "z") => &[OddSym],
        (Mode::Graded, "x") => &[EvenSym, OddSym],
        (Mode::Involution, "y") => &[EvenSym],
        (Mode::Involution, "z") => &[EvenSkew],
        (Mode::Involution, "x") => &[EvenSym, EvenSkew],
        (Mode::GradedInvolution, "yp") => &[EvenSym],
        (Mode::GradedInvolution, "ym") => &[EvenSkew],
        (Mode::GradedInvolution, "zp") => &[OddSym],
        (Mode::GradedInvolution, "zm") => &[OddSkew],
        (Mode::GradedInvolution, "y") => &[EvenSym, EvenSkew],
        (Mode::GradedInvolution, "z") => &[OddSym, OddSkew],
        (Mode::GradedInvolution, "x") => &Kind::ALL,
        _ => return None,
    })
}

/// A parsed polynomial expression, possibly containing wildcard letters.
#[derive(Clone, Debug)]
pub struct Template {
    expr: Expr,
    mode: Mode,
    wildcards: Vec<(String, u32)>,
}

type Choice = BTreeMap<(String, u32), Kind>;

impl Template {
    pub fn parse(src: &str, mode: Mode) -> Result<Template> {
        let toks = lex(src)?;
        let mut p = Parser { toks, at: 0, len: src.len() };
        if p.peek().is_none() {
            return p.err("empty expression");
        }
        let expr = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        let mut wildcards = Vec::new();
        let mut vars = Vec::new();
        collect_vars(&expr, &mut vars);
        for v in vars {
            let kinds = letter_kinds(&v.letter, mode)
                .ok_or_else(|| Error::Parse { pos: v.pos, msg: format!("letter {:?} is not available in {} mode", v.letter, mode.name()) })?;
            let key = (v.letter.clone(), v.index);
            if kinds.len() > 1 && !wildcards.contains(&key) {
                wildcards.push(key);
            }
        }
        Ok(Template { expr, mode, wildcards })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn has_wildcards(&self) -> bool {
        !self.wildcards.is_empty()
    }

    /// One polynomial per assignment of kinds to the wildcard letters, in
    /// lexicographic order of the choices. Zero instances are dropped.
    pub fn instances(&self) -> Result<Vec<Polynomial>> {
        let options: Vec<&[Kind]> = self.wildcards.iter().map(|(l, _)| letter_kinds(l, self.mode).unwrap()).collect();
        let mut pick = vec![0usize; options.len()];
        let mut out = Vec::new();
        loop {
            let choice: Choice = self.wildcards.iter().cloned().zip(pick.iter().zip(&options).map(|(&k, o)| o[k])).collect();
            let p = self.eval(&self.expr, &choice)?;
            if !p.is_zero() {
                out.push(p);
            }
            let mut k = options.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                pick[k] += 1;
                if pick[k] < options[k].len() {
                    break;
                }
                pick[k] = 0;
            }
        }
    }

    fn variable(&self, v: &VarTok, choice: &Choice) -> Variable {
        let kinds = letter_kinds(&v.letter, self.mode).unwrap();
        let kind = if kinds.len() == 1 { kinds[0] } else { choice[&(v.letter.clone(), v.index)] };
        Variable::new(kind, v.index)
    }

    fn eval(&self, e: &Expr, choice: &Choice) -> Result<Polynomial> {
        Ok(match e {
            Expr::Num(r) => Polynomial::constant(r.clone()),
            Expr::Var(v) => Polynomial::var(self.variable(v, choice)),
            Expr::Sgn(v) => Polynomial::constant(Rational::int(self.variable(v, choice).kind.sign())),
            Expr::Std(vs) => standard_polynomial(&vs.iter().map(|v| self.variable(v, choice)).collect::<Vec<_>>()),
            Expr::Sum(ts) => {
                let mut acc = Polynomial::zero();
                for (neg, t) in ts {
                    let p = self.eval(t, choice)?;
                    acc = if *neg { &acc - &p } else { &acc + &p };
                }
                acc
            }
            Expr::Prod(fs) => {
                let mut acc = Polynomial::one();
                for f in fs {
                    acc = &acc * &self.eval(f, choice)?;
                }
                acc
            }
            Expr::Comm(parts) => {
                let ps = parts.iter().map(|p| self.eval(p, choice)).collect::<Result<Vec<_>>>()?;
                left_normed(&ps)?
            }
            Expr::Circ(parts) => {
                let mut acc = self.eval(&parts[0], choice)?;
                for p in &parts[1..] {
                    acc = circ(&acc, &self.eval(p, choice)?);
                }
                acc
            }
        })
    }
}

fn collect_vars(e: &Expr, out: &mut Vec<VarTok>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(v) | Expr::Sgn(v) => out.push(v.clone()),
        Expr::Std(vs) => out.extend(vs.iter().cloned()),
        Expr::Sum(ts) => ts.iter().for_each(|(_, t)| collect_vars(t, out)),
        Expr::Prod(xs) | Expr::Comm(xs) | Expr::Circ(xs) => xs.iter().for_each(|x| collect_vars(x, out)),
    }
}

/// Parses a polynomial without wildcards.
pub fn parse_polynomial(src: &str, mode: Mode) -> Result<Polynomial> {
    let t = Template::parse(src, mode)?;
    if t.has_wildcards() {
        return Err(Error::Parse { pos: 0, msg: "wildcard letters need template expansion".into() });
    }
    Ok(t.instances()?.pop().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{commutator, Monomial};

    fn v(kind: Kind, i: u32) -> Polynomial {
        Polynomial::var(Variable::new(kind, i))
    }

    #[test]
    fn parses_commutators_and_coefficients() {
        let p = parse_polynomial("[y1,y2] - 1/2 z1 y1", Mode::Graded).unwrap();
        let expect = &commutator(&v(Kind::EvenSym, 1), &v(Kind::EvenSym, 2)) - &(&v(Kind::OddSym, 1) * &v(Kind::EvenSym, 1)).scale(&Rational::new(1, 2));
        assert_eq!(p, expect);
        let q = parse_polynomial("zp1 o zm1", Mode::GradedInvolution).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.coefficient(&Monomial(vec![Variable::new(Kind::OddSym, 1), Variable::new(Kind::OddSkew, 1)])), Rational::int(1));
    }

    #[test]
    fn reports_errors_with_position() {
        assert!(matches!(parse_polynomial("[y1]", Mode::Graded), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("y1 +", Mode::Graded), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_polynomial("yp1", Mode::Graded), Err(Error::Parse { pos: 0, .. })));
        assert!(parse_polynomial("y0", Mode::Graded).is_err());
        assert!(parse_polynomial("x1 x2", Mode::Involution).is_err());
    }

    #[test]
    fn wildcards_expand_with_signs() {
        let t = Template::parse("sgn(x1) sgn(x2) [x1,x2]", Mode::Involution).unwrap();
        let inst = t.instances().unwrap();
        // yy, yz, zy, zz
        assert_eq!(inst.len(), 4);
        let yz = &commutator(&v(Kind::EvenSym, 1), &v(Kind::EvenSkew, 2)).scale(&Rational::int(-1));
        assert_eq!(&inst[1], yz);
        let g = Template::parse("[yp1, z1 z2]", Mode::GradedInvolution).unwrap();
        assert_eq!(g.instances().unwrap().len(), 4);
    }

    #[test]
    fn printer_round_trips() {
        for (src, mode) in [
            ("[[y1,y2]z1,y3]", Mode::Graded),
            ("zm1 yp1 zp2 + 3/4 zp2 yp1 zm1 - 2", Mode::GradedInvolution),
            ("std(x1,x2,x3)", Mode::Ungraded),
            ("z1 y1 z2 - z2 y1 z1", Mode::Involution),
        ] {
            let p = parse_polynomial(src, mode).unwrap();
            let printed = p.display(mode).to_string();
            assert_eq!(parse_polynomial(&printed, mode).unwrap(), p, "{printed}");
        }
    }
}
