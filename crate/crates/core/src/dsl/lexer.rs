use serde::Serialize;

use crate::error::{Position, SyntaxError};
use crate::registry::KEYWORDS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TokenKind {
    Name,
    Int,
    Keyword,
    Dot,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    CaretDot,
    LParen,
    RParen,
    Comma,
    Prime,
    Whitespace,
}

impl TokenKind {
    /// How the kind is named in error messages.
    pub fn describe(self) -> &'static str {
        match self {
            TokenKind::Name => "name",
            TokenKind::Int => "integer",
            TokenKind::Keyword => "keyword",
            TokenKind::Dot => "'.'",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::Caret => "'^'",
            TokenKind::CaretDot => "'^.'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Comma => "','",
            TokenKind::Prime => "'''",
            TokenKind::Whitespace => "whitespace",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    #[serde(skip)]
    pub position: Position,
}

impl Token {
    pub fn end(&self) -> usize {
        self.position.offset + self.lexeme.len()
    }
}

struct Cursor<'a> {
    src: &'a str,
    offset: usize,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.offset..].chars().next()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.src[self.offset..].chars();
        it.next();
        it.next()
    }

    fn position(&self) -> Position {
        Position { offset: self.offset, line: self.line, column: self.column }
    }

    fn bump(&mut self) -> char {
        let c = self.peek().expect("bump past end");
        self.offset += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        c
    }

    fn eat_while(&mut self, f: impl Fn(char) -> bool) {
        while matches!(self.peek(), Some(c) if f(c)) {
            self.bump();
        }
    }
}

/// Splits `input` into tokens, whitespace included, so that concatenating
/// the lexemes gives back the input.
pub fn tokenize(input: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut cur = Cursor { src: input, offset: 0, line: 1, column: 1 };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        let start = cur.position();
        let kind = match c {
            c if c.is_whitespace() => {
                cur.eat_while(char::is_whitespace);
                TokenKind::Whitespace
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                cur.eat_while(|c| c.is_ascii_alphanumeric() || c == '_');
                if KEYWORDS.contains(&&input[start.offset..cur.offset]) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Name
                }
            }
            c if c.is_ascii_digit() => {
                cur.eat_while(|c| c.is_ascii_digit());
                TokenKind::Int
            }
            '.' => {
                if cur.peek2() == Some('.') {
                    return Err(SyntaxError { message: "unexpected '..'".into(), position: start, expected: vec![] });
                }
                cur.bump();
                TokenKind::Dot
            }
            '^' => {
                cur.bump();
                if cur.peek() == Some('.') {
                    cur.bump();
                    TokenKind::CaretDot
                } else {
                    TokenKind::Caret
                }
            }
            _ => {
                let kind = match c {
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '/' => TokenKind::Slash,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ',' => TokenKind::Comma,
                    '\'' => TokenKind::Prime,
                    other => {
                        return Err(SyntaxError {
                            message: format!("unexpected character {other:?}"),
                            position: start,
                            expected: vec![],
                        })
                    }
                };
                cur.bump();
                kind
            }
        };
        tokens.push(Token { kind, lexeme: input[start.offset..cur.offset].to_string(), position: start });
    }
    Ok(tokens)
}

/// Position just past the end of `input`.
pub fn end_position(input: &str) -> Position {
    let mut line = 1;
    let mut column = 1;
    for c in input.chars() {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    Position { offset: input.len(), line, column }
}
