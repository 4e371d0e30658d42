use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Number(BigInt),
    Ident(String),
    EPlus,
    EMinus,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Pipe,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::EPlus => "`e+`".into(),
            Tok::EMinus => "`e-`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'|' => Some(Tok::Pipe),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, pos: start });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("ascii digits");
            out.push(Token {
                tok: Tok::Number(n),
                pos: start,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word = &src[start..i];
            if word == "e" {
                let tok = match bytes.get(i) {
                    Some(b'+') => Tok::EPlus,
                    Some(b'-') => Tok::EMinus,
                    _ => {
                        return Err(Error::Parse {
                            pos: start,
                            message: "`e` must be followed by `+` or `-`".into(),
                        })
                    }
                };
                i += 1;
                out.push(Token { tok, pos: start });
            } else {
                out.push(Token {
                    tok: Tok::Ident(word.to_string()),
                    pos: start,
                });
            }
            continue;
        }
        let ch = src[start..].chars().next().unwrap_or('?');
        return Err(Error::Parse {
            pos: start,
            message: format!("unexpected character {ch:?}"),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: src.len(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn idempotent_units() {
        assert_eq!(toks("e+ * e-"), vec![Tok::EPlus, Tok::Star, Tok::EMinus, Tok::Eof]);
        assert_eq!(toks("e+e-"), vec![Tok::EPlus, Tok::EMinus, Tok::Eof]);
    }

    #[test]
    fn words_and_numbers() {
        assert_eq!(
            toks("ac^12"),
            vec![Tok::Ident("ac".into()), Tok::Caret, Tok::Number(12.into()), Tok::Eof]
        );
    }

    #[test]
    fn rejects_bare_e_and_unknown_chars() {
        assert!(matches!(tokenize("e * 2"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(tokenize("Z + é"), Err(Error::Parse { pos: 4, .. })));
    }
}
