//! Tokenizer shared by the algebra file format and the expression parser.

use std::fmt;

use crate::scalar::Scalar;

/// Half-open byte range into the source line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }

    /// 1-based column of the first character.
    pub fn column(self) -> usize {
        self.start + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Number(Scalar),
    Plus,
    Minus,
    Star,
    Comma,
    Eq,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(c) => write!(f, "`{c}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexError {
    pub span: Span,
    pub message: String,
}

/// Splits `src` into tokens. Rational literals are `p` or `p/q` with no
/// inner whitespace; decimals are rejected.
pub fn tokenize(src: &str) -> Result<Vec<(Tok, Span)>, LexError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b',' => Some(Tok::Comma),
            b'=' => Some(Tok::Eq),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, Span::new(start, start + 1)));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'/' {
                i += 1;
                let den_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if den_start == i {
                    return Err(LexError {
                        span: Span::new(start, i),
                        message: format!("malformed rational `{}`", &src[start..i]),
                    });
                }
            } else if i < bytes.len() && bytes[i] == b'.' {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'.') {
                    i += 1;
                }
                return Err(LexError {
                    span: Span::new(start, i),
                    message: format!(
                        "decimal literal `{}` is not accepted; write an exact rational p/q",
                        &src[start..i]
                    ),
                });
            }
            if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                // `2e1` would silently read as 2 * e1 otherwise
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                return Err(LexError {
                    span: Span::new(start, i),
                    message: format!(
                        "malformed token `{}`; separate the coefficient from the generator",
                        &src[start..i]
                    ),
                });
            }
            let text = &src[start..i];
            let value = text.parse::<Scalar>().map_err(|e| LexError {
                span: Span::new(start, i),
                message: e.to_string(),
            })?;
            out.push((Tok::Number(value), Span::new(start, i)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), Span::new(start, i)));
            continue;
        }
        let ch = src[start..].chars().next().unwrap();
        return Err(LexError {
            span: Span::new(start, start + ch.len_utf8()),
            message: format!("unexpected character `{ch}`"),
        });
    }
    Ok(out)
}
