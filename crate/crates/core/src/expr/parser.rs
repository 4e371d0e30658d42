use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::lexer::{tokenize, Tok, Token};
use super::{Ast, Func, ParseOptions, UnitLit, Variable};
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 128;
const MAX_EXPONENT: u32 = 64;

pub fn parse_ast(src: &str, opts: ParseOptions) -> Result<Ast> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        cursor: 0,
        depth: 0,
        opts,
    };
    let first = p.expr()?;
    let ast = if p.peek() == &Tok::Pipe {
        let pos = p.pos();
        p.advance();
        let second = p.expr()?;
        Ast::Split(Box::new(first), Box::new(second), pos)
    } else {
        first
    };
    match p.peek() {
        Tok::Eof => Ok(ast),
        other => Err(p.error(format!("unexpected {}", other.describe()))),
    }
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
    depth: usize,
    opts: ParseOptions,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.cursor].tok
    }

    fn pos(&self) -> usize {
        self.tokens[self.cursor].pos
    }

    fn advance(&mut self) -> Tok {
        let t = self.tokens[self.cursor].tok.clone();
        if t != Tok::Eof {
            self.cursor += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos(),
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", tok.describe(), self.peek().describe())))
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Ast> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.advance();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.advance();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    let pos = self.pos();
                    self.advance();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                Tok::Slash => {
                    let pos = self.pos();
                    self.advance();
                    let divisor = match self.peek() {
                        Tok::Number(_) => self.atom()?,
                        Tok::LParen => self.atom()?,
                        other => {
                            return Err(self.error(format!(
                                "division is only allowed by a rational literal, found {}",
                                other.describe()
                            )))
                        }
                    };
                    lhs = Ast::Div(Box::new(lhs), Box::new(divisor), pos);
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if *self.peek() == Tok::Minus {
            self.enter()?;
            self.advance();
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Ast::Neg(Box::new(inner)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            let pos = self.pos();
            self.advance();
            let exp = match self.advance() {
                Tok::Number(n) => n,
                other => {
                    return Err(Error::Parse {
                        pos,
                        message: format!("exponent must be a nonnegative integer, found {}", other.describe()),
                    })
                }
            };
            let exp = exponent(&exp).ok_or_else(|| Error::Parse {
                pos,
                message: format!("exponent exceeds the limit of {MAX_EXPONENT}"),
            })?;
            return Ok(Ast::Pow(Box::new(base), exp, pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        let pos = self.pos();
        match self.advance() {
            Tok::Number(n) => Ok(Ast::Int(n)),
            Tok::EPlus => Ok(Ast::Unit(UnitLit::EPlus)),
            Tok::EMinus => Ok(Ast::Unit(UnitLit::EMinus)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(word) => self.word(&word, pos),
            other => Err(Error::Parse {
                pos,
                message: format!("unexpected {}", other.describe()),
            }),
        }
    }

    fn word(&mut self, word: &str, pos: usize) -> Result<Ast> {
        let raw = |v: Variable| -> Result<Ast> {
            if self.opts.raw_idempotent {
                Ok(Ast::Var(v))
            } else {
                Err(Error::Parse {
                    pos,
                    message: format!("`{word}` is an idempotent coordinate; enable raw idempotent mode to use it"),
                })
            }
        };
        match word {
            "i" => Ok(Ast::Unit(UnitLit::I)),
            "j" => Ok(Ast::Unit(UnitLit::J)),
            "k" => Ok(Ast::Unit(UnitLit::K)),
            "Z" => Ok(Ast::Var(Variable::Z)),
            "a" => raw(Variable::A),
            "ac" => raw(Variable::Ac),
            "b" => raw(Variable::B),
            "bc" => raw(Variable::Bc),
            _ => {
                let func = match word {
                    "dag" => Func::Dag,
                    "til" => Func::Til,
                    "star" => Func::Star,
                    "rehyp" => Func::Rehyp,
                    "rec" => Func::Rec,
                    _ => {
                        return Err(Error::Parse {
                            pos,
                            message: format!("unknown identifier `{word}`"),
                        })
                    }
                };
                self.expect(Tok::LParen)?;
                let arg = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Ast::Call(func, Box::new(arg)))
            }
        }
    }
}

fn exponent(n: &BigInt) -> Option<u32> {
    if n.is_zero() {
        return Some(0);
    }
    n.to_u32().filter(|&e| e <= MAX_EXPONENT)
}
