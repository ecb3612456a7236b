//! Tokenizer for the `.alg` algebra-definition language. Every token
//! carries its line and column for diagnostics.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    /// `->` in coproduct/counit/antipode statements.
    Arrow,
    /// `<->` in star statements.
    BiArrow,
    /// The tensor separator, written literally as `(x)`.
    TensorSep,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::BiArrow => write!(f, "`<->`"),
            Tok::TensorSep => write!(f, "`(x)`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub pos: Pos,
}

#[derive(Clone, Debug)]
pub struct LexError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

/// Tokenize the whole input. `#` starts a comment running to end of line.
pub fn lex(text: &str) -> Result<Vec<Spanned>, LexError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut idx = 0usize;
    let mut line = 1u32;
    let mut col = 1u32;
    let err = |pos: Pos, message: String| LexError { pos, message };
    let advance = |idx: &mut usize, col: &mut u32, n: usize| {
        *idx += n;
        *col += n as u32;
    };
    while idx < chars.len() {
        let pos = Pos { line, col };
        let c = chars[idx];
        match c {
            '\n' => {
                idx += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(&mut idx, &mut col, 1),
            '#' => {
                while idx < chars.len() && chars[idx] != '\n' {
                    idx += 1;
                }
            }
            '{' => {
                out.push(Spanned { tok: Tok::LBrace, pos });
                advance(&mut idx, &mut col, 1);
            }
            '}' => {
                out.push(Spanned { tok: Tok::RBrace, pos });
                advance(&mut idx, &mut col, 1);
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, pos });
                advance(&mut idx, &mut col, 1);
            }
            ':' => {
                out.push(Spanned { tok: Tok::Colon, pos });
                advance(&mut idx, &mut col, 1);
            }
            ';' => {
                out.push(Spanned { tok: Tok::Semi, pos });
                advance(&mut idx, &mut col, 1);
            }
            ',' => {
                out.push(Spanned { tok: Tok::Comma, pos });
                advance(&mut idx, &mut col, 1);
            }
            '+' => {
                out.push(Spanned { tok: Tok::Plus, pos });
                advance(&mut idx, &mut col, 1);
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, pos });
                advance(&mut idx, &mut col, 1);
            }
            '/' => {
                out.push(Spanned { tok: Tok::Slash, pos });
                advance(&mut idx, &mut col, 1);
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, pos });
                advance(&mut idx, &mut col, 1);
            }
            '(' => {
                // the exact sequence `(x)` is the tensor separator; any
                // other parenthesis opens a grouped expression
                if idx + 2 < chars.len() && chars[idx + 1] == 'x' && chars[idx + 2] == ')' {
                    out.push(Spanned { tok: Tok::TensorSep, pos });
                    advance(&mut idx, &mut col, 3);
                } else {
                    out.push(Spanned { tok: Tok::LParen, pos });
                    advance(&mut idx, &mut col, 1);
                }
            }
            '-' => {
                if idx + 1 < chars.len() && chars[idx + 1] == '>' {
                    out.push(Spanned { tok: Tok::Arrow, pos });
                    advance(&mut idx, &mut col, 2);
                } else {
                    out.push(Spanned { tok: Tok::Minus, pos });
                    advance(&mut idx, &mut col, 1);
                }
            }
            '<' => {
                if idx + 2 < chars.len() && chars[idx + 1] == '-' && chars[idx + 2] == '>' {
                    out.push(Spanned { tok: Tok::BiArrow, pos });
                    advance(&mut idx, &mut col, 3);
                } else {
                    return Err(err(pos, "expected `<->`".into()));
                }
            }
            c if c.is_ascii_digit() => {
                let start = idx;
                while idx < chars.len() && chars[idx].is_ascii_digit() {
                    idx += 1;
                }
                let text: String = chars[start..idx].iter().collect();
                col += (idx - start) as u32;
                let n: i64 = text
                    .parse()
                    .map_err(|_| err(pos, format!("integer literal `{text}` is out of range")))?;
                out.push(Spanned { tok: Tok::Int(n), pos });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = idx;
                while idx < chars.len()
                    && (chars[idx].is_ascii_alphanumeric() || chars[idx] == '_')
                {
                    idx += 1;
                }
                let name: String = chars[start..idx].iter().collect();
                col += (idx - start) as u32;
                out.push(Spanned {
                    tok: Tok::Ident(name),
                    pos,
                });
            }
            other => {
                return Err(err(pos, format!("unexpected character `{other}`")));
            }
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_separator_is_one_token() {
        let toks = lex("x0 (x) 1 (x0)").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|s| &s.tok).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::Ident("x0".into()),
                &Tok::TensorSep,
                &Tok::Int(1),
                &Tok::LParen,
                &Tok::Ident("x0".into()),
                &Tok::RParen,
                &Tok::Eof,
            ]
        );
    }

    #[test]
    fn arrows_and_comments() {
        let toks = lex("a -> b <-> c # ignored -> junk\n;").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|s| &s.tok).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::Ident("a".into()),
                &Tok::Arrow,
                &Tok::Ident("b".into()),
                &Tok::BiArrow,
                &Tok::Ident("c".into()),
                &Tok::Semi,
                &Tok::Eof,
            ]
        );
        assert_eq!(toks[5].pos, Pos { line: 2, col: 1 });
    }

    #[test]
    fn bad_character_reports_position() {
        let e = lex("abc\n  $").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, col: 3 });
    }
}
