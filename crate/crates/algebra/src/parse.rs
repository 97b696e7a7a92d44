use num::BigInt;

use crate::error::AlgebraError;
use crate::ratfn::RationalFn;
use crate::vars::VarTable;
use crate::{Rational, Result};

/// Parses the canonical expression syntax over a fixed variable table.
///
/// Grammar: `+ - * /` with usual precedence, unary minus, parentheses, and
/// `^` on atoms with an integer or parenthesized `p/2` exponent. This is the
/// inverse of the `render` methods.
pub fn parse_rational_fn(src: &str, vars: &VarTable) -> Result<RationalFn> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        vars,
    };
    let f = p.expr()?;
    match p.peek() {
        None => Ok(f),
        Some(t) => Err(AlgebraError::Parse {
            pos: t.pos,
            msg: format!("unexpected `{}`", t.kind.describe()),
        }),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum TokKind {
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

impl TokKind {
    fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => s.clone(),
            TokKind::Int(n) => n.to_string(),
            TokKind::Plus => "+".into(),
            TokKind::Minus => "-".into(),
            TokKind::Star => "*".into(),
            TokKind::Slash => "/".into(),
            TokKind::Caret => "^".into(),
            TokKind::LParen => "(".into(),
            TokKind::RParen => ")".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Tok {
    kind: TokKind,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                out.push(Tok {
                    kind: TokKind::Plus,
                    pos,
                });
                i += 1;
            }
            b'-' => {
                out.push(Tok {
                    kind: TokKind::Minus,
                    pos,
                });
                i += 1;
            }
            b'*' => {
                out.push(Tok {
                    kind: TokKind::Star,
                    pos,
                });
                i += 1;
            }
            b'/' => {
                out.push(Tok {
                    kind: TokKind::Slash,
                    pos,
                });
                i += 1;
            }
            b'^' => {
                out.push(Tok {
                    kind: TokKind::Caret,
                    pos,
                });
                i += 1;
            }
            b'(' => {
                out.push(Tok {
                    kind: TokKind::LParen,
                    pos,
                });
                i += 1;
            }
            b')' => {
                out.push(Tok {
                    kind: TokKind::RParen,
                    pos,
                });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push(Tok {
                    kind: TokKind::Int(n),
                    pos,
                });
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Tok {
                    kind: TokKind::Ident(src[start..i].to_string()),
                    pos,
                });
            }
            _ => {
                return Err(AlgebraError::Parse {
                    pos,
                    msg: format!("unexpected byte `{}`", b as char),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    vars: &'a VarTable,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, kind: &TokKind) -> bool {
        if self.peek().map(|t| &t.kind == kind).unwrap_or(false) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokKind) -> Result<()> {
        match self.next() {
            Some(t) if t.kind == kind => Ok(()),
            Some(t) => Err(AlgebraError::Parse {
                pos: t.pos,
                msg: format!("expected `{}`, found `{}`", kind.describe(), t.kind.describe()),
            }),
            None => Err(AlgebraError::Parse {
                pos: usize::MAX,
                msg: format!("expected `{}`, found end of input", kind.describe()),
            }),
        }
    }

    fn expr(&mut self) -> Result<RationalFn> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&TokKind::Plus) {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(&TokKind::Minus) {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFn> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&TokKind::Star) {
                let f = self.factor()?;
                acc = &acc * &f;
            } else if self.eat(&TokKind::Slash) {
                let f = self.factor()?;
                acc = acc.div(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFn> {
        if self.eat(&TokKind::Minus) {
            let f = self.factor()?;
            return Ok(-&f);
        }
        let base = self.atom()?;
        if self.eat(&TokKind::Caret) {
            let (p, half) = self.exponent()?;
            if half {
                base.pow_half(p)
            } else {
                base.pow(p)
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RationalFn> {
        match self.next() {
            Some(Tok {
                kind: TokKind::Ident(name),
                pos,
            }) => match self.vars.index(&name) {
                Some(i) => Ok(RationalFn::var(self.vars.len(), i)),
                None => Err(AlgebraError::Parse {
                    pos,
                    msg: format!("unknown variable `{name}`"),
                }),
            },
            Some(Tok {
                kind: TokKind::Int(n),
                ..
            }) => Ok(RationalFn::constant(
                self.vars.len(),
                Rational::from_integer(n),
            )),
            Some(Tok {
                kind: TokKind::LParen,
                ..
            }) => {
                let f = self.expr()?;
                self.expect(TokKind::RParen)?;
                Ok(f)
            }
            Some(t) => Err(AlgebraError::Parse {
                pos: t.pos,
                msg: format!("expected an atom, found `{}`", t.kind.describe()),
            }),
            None => Err(AlgebraError::Parse {
                pos: usize::MAX,
                msg: "expected an atom, found end of input".to_string(),
            }),
        }
    }

    /// Returns `(p, half)` for an exponent `p` or `p/2`.
    fn exponent(&mut self) -> Result<(i64, bool)> {
        let parenthesized = self.eat(&TokKind::LParen);
        let neg = self.eat(&TokKind::Minus);
        let p = match self.next() {
            Some(Tok {
                kind: TokKind::Int(n),
                pos,
            }) => i64::try_from(&n).map_err(|_| AlgebraError::Parse {
                pos,
                msg: "exponent too large".to_string(),
            })?,
            Some(t) => {
                return Err(AlgebraError::Parse {
                    pos: t.pos,
                    msg: format!("expected an exponent, found `{}`", t.kind.describe()),
                })
            }
            None => {
                return Err(AlgebraError::Parse {
                    pos: usize::MAX,
                    msg: "expected an exponent, found end of input".to_string(),
                })
            }
        };
        let p = if neg { -p } else { p };
        let mut half = false;
        if parenthesized {
            if self.eat(&TokKind::Slash) {
                match self.next() {
                    Some(Tok {
                        kind: TokKind::Int(d),
                        pos,
                    }) => {
                        if d == BigInt::from(2) {
                            half = true;
                        } else {
                            return Err(AlgebraError::Parse {
                                pos,
                                msg: "only denominators of 2 are supported in exponents"
                                    .to_string(),
                            });
                        }
                    }
                    Some(t) => {
                        return Err(AlgebraError::Parse {
                            pos: t.pos,
                            msg: format!(
                                "expected an exponent denominator, found `{}`",
                                t.kind.describe()
                            ),
                        })
                    }
                    None => {
                        return Err(AlgebraError::Parse {
                            pos: usize::MAX,
                            msg: "expected an exponent denominator, found end of input"
                                .to_string(),
                        })
                    }
                }
            }
            self.expect(TokKind::RParen)?;
        }
        Ok((p, half))
    }
}
