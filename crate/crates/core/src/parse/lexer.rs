use num_bigint::BigInt;

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Nat(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    /// `|`
    Pipe,
    /// `|R`
    PipeRight,
    Amp,
    Bang,
    Arrow,
    Eq,
    Dot,
    Comma,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

/// ASCII-only tokenizer shared by the element and formula grammars.
pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token { tok: Tok::Nat(src[pos..i].parse().expect("digits")), pos });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(src[pos..i].to_string()), pos });
                continue;
            }
            b'+' => Tok::Plus,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'|' => {
                let right = bytes.get(i + 1) == Some(&b'R')
                    && !bytes.get(i + 2).map_or(false, |b| b.is_ascii_alphanumeric() || *b == b'_');
                if right {
                    i += 1;
                    Tok::PipeRight
                } else {
                    Tok::Pipe
                }
            }
            b'&' => Tok::Amp,
            b'!' => Tok::Bang,
            b'=' => Tok::Eq,
            b'.' => Tok::Dot,
            b',' => Tok::Comma,
            _ => {
                let ch = src[pos..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax { position: pos, message: format!("unexpected character {ch:?}") });
            }
        };
        i += 1;
        out.push(Token { tok, pos });
    }
    Ok(out)
}

/// Cursor over a token list; `end` is the byte length of the source, used
/// as the position of end-of-input errors.
pub(crate) struct Cursor {
    toks: Vec<Token>,
    idx: usize,
    end: usize,
}

impl Cursor {
    pub fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Cursor { toks: tokenize(src)?, idx: 0, end: src.len() })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |t| t.pos)
    }

    pub fn mark(&self) -> usize {
        self.idx
    }

    pub fn reset(&mut self, mark: usize) {
        self.idx = mark;
    }

    pub fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|t| t.tok.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    pub fn at_end(&self) -> bool {
        self.idx >= self.toks.len()
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(t) => format!("{t:?}"),
        };
        ParseError::Syntax { position: self.pos(), message: format!("{}, found {found}", message.into()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipe_variants() {
        let toks: Vec<_> = tokenize("a |R b | c |Rx").unwrap().into_iter().map(|t| t.tok).collect();
        assert_eq!(toks[1], Tok::PipeRight);
        assert_eq!(toks[3], Tok::Pipe);
        assert_eq!(toks[5], Tok::Pipe);
        assert_eq!(toks[6], Tok::Ident("Rx".into()));
    }

    #[test]
    fn unicode_minus_rejected() {
        match tokenize("x \u{2212} 1") {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn arrow_and_minus() {
        let toks: Vec<_> = tokenize("a->-b").unwrap().into_iter().map(|t| t.tok).collect();
        assert_eq!(toks, vec![Tok::Ident("a".into()), Tok::Arrow, Tok::Minus, Tok::Ident("b".into())]);
    }
}
