use num_traits::Zero;

use super::lexer::{end_position, tokenize, Token, TokenKind};
use crate::error::{Position, SyntaxError};
use crate::expr::{Expr, ExprKind, Span};
use crate::poly::Var;
use crate::scalar::Rational;

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Expr, SyntaxError> {
    let tokens: Vec<Token> = tokenize(input)?.into_iter().filter(|t| t.kind != TokenKind::Whitespace).collect();
    let mut p = Parser { tokens, pos: 0, end: end_position(input) };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.unexpected(&[TokenKind::Plus, TokenKind::Minus, TokenKind::Star, TokenKind::Dot]));
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: Position,
}

fn node(kind: ExprKind, start: usize, end: usize) -> Expr {
    Expr { kind, span: Span { start, end } }
}

impl Parser {
    fn peek(&self) -> Option<TokenKind> {
        self.tokens.get(self.pos).map(|t| t.kind)
    }

    fn peek_at(&self, k: usize) -> Option<TokenKind> {
        self.tokens.get(self.pos + k).map(|t| t.kind)
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        self.pos += 1;
        t
    }

    fn last_end(&self) -> usize {
        self.tokens[self.pos - 1].end()
    }

    fn unexpected(&self, expected: &[TokenKind]) -> SyntaxError {
        let expected: Vec<String> = expected.iter().map(|k| k.describe().to_string()).collect();
        match self.tokens.get(self.pos) {
            Some(t) => SyntaxError {
                message: match t.kind {
                    TokenKind::Name | TokenKind::Int | TokenKind::Keyword => {
                        format!("unexpected {} `{}`", t.kind.describe(), t.lexeme)
                    }
                    kind => format!("unexpected {}", kind.describe()),
                },
                position: t.position,
                expected,
            },
            None => SyntaxError { message: "unexpected end of input".into(), position: self.end, expected },
        }
    }

    fn error_at(&self, t: &Token, message: String) -> SyntaxError {
        SyntaxError { message, position: t.position, expected: vec![] }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, SyntaxError> {
        if self.peek() == Some(kind) {
            Ok(self.next())
        } else {
            Err(self.unexpected(&[kind]))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut left = self.term()?;
        while let Some(op @ (TokenKind::Plus | TokenKind::Minus)) = self.peek() {
            self.next();
            let right = self.term()?;
            let (start, end) = (left.span.start, right.span.end);
            let right = if op == TokenKind::Minus {
                let span = right.span;
                node(ExprKind::InverseDot(Box::new(right)), span.start, span.end)
            } else {
                right
            };
            left = node(ExprKind::Sum(Box::new(left), Box::new(right)), start, end);
        }
        Ok(left)
    }

    /// Whether tokens `from..self.pos` are exactly a bare rational literal.
    fn is_bare_literal(&self, from: usize) -> bool {
        let kinds: Vec<TokenKind> = self.tokens[from..self.pos].iter().map(|t| t.kind).collect();
        use TokenKind::*;
        matches!(kinds.as_slice(), [Int] | [Int, Slash, Int] | [Minus, Int] | [Minus, Int, Slash, Int])
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let from = self.pos;
        let mut left = self.chain()?;
        let mut bare = self.is_bare_literal(from);
        while self.peek() == Some(TokenKind::Star) {
            self.next();
            let right = self.chain()?;
            let (start, end) = (left.span.start, right.span.end);
            left = match &left.kind {
                ExprKind::Number(c) if bare => node(ExprKind::ScalarMul(c.clone(), Box::new(right)), start, end),
                _ => node(ExprKind::Product(Box::new(left), Box::new(right)), start, end),
            };
            bare = false;
        }
        Ok(left)
    }

    fn chain(&mut self) -> Result<Expr, SyntaxError> {
        let left = self.unary()?;
        if self.peek() == Some(TokenKind::Dot) {
            self.next();
            let right = self.chain()?;
            let (start, end) = (left.span.start, right.span.end);
            return Ok(node(ExprKind::Dot(Box::new(left), Box::new(right)), start, end));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek() == Some(TokenKind::Minus) && self.peek_at(1) != Some(TokenKind::Int) {
            let start = self.next().position.offset;
            let inner = self.unary()?;
            let end = inner.span.end;
            return Ok(node(ExprKind::InverseDot(Box::new(inner)), start, end));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.primary()?;
        let mut primable = matches!(e.kind, ExprKind::Atom { .. });
        loop {
            match self.peek() {
                Some(TokenKind::Prime) => {
                    let t = self.next();
                    match (&mut e.kind, primable) {
                        (ExprKind::Atom { primes, .. }, true) => {
                            *primes += 1;
                            e.span.end = t.end();
                        }
                        _ => return Err(self.error_at(&t, "a prime may only follow an umbra name".into())),
                    }
                }
                Some(op @ (TokenKind::Caret | TokenKind::CaretDot)) => {
                    self.next();
                    let k = self.exponent()?;
                    let (start, end) = (e.span.start, self.last_end());
                    let kind = if op == TokenKind::Caret {
                        ExprKind::Power(Box::new(e), k)
                    } else {
                        ExprKind::DotPower(Box::new(e), k)
                    };
                    e = node(kind, start, end);
                    primable = false;
                }
                _ => return Ok(e),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32, SyntaxError> {
        let t = self.expect(TokenKind::Int)?;
        t.lexeme.parse::<u32>().map_err(|_| self.error_at(&t, format!("exponent `{}` is too large", t.lexeme)))
    }

    fn integer(&mut self) -> Result<Rational, SyntaxError> {
        let t = self.expect(TokenKind::Int)?;
        t.lexeme
            .parse::<num_bigint::BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| self.error_at(&t, "invalid integer".into()))
    }

    fn number(&mut self) -> Result<Expr, SyntaxError> {
        let start = self.tokens[self.pos].position.offset;
        let negative = if self.peek() == Some(TokenKind::Minus) {
            self.next();
            true
        } else {
            false
        };
        let mut value = self.integer()?;
        if self.peek() == Some(TokenKind::Slash) {
            self.next();
            let den_tok = self.tokens.get(self.pos).cloned();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error_at(&den_tok.expect("integer consumed"), "division by zero".into()));
            }
            value /= den;
        }
        if negative {
            value = -value;
        }
        Ok(node(ExprKind::Number(value), start, self.last_end()))
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        use TokenKind::*;
        match self.peek() {
            Some(Int) | Some(Minus) => self.number(),
            Some(Name) => {
                let t = self.next();
                let kind = match t.lexeme.as_str() {
                    "x" => ExprKind::Indeterminate(Var::X),
                    "y" => ExprKind::Indeterminate(Var::Y),
                    name => ExprKind::Atom { name: name.to_string(), primes: 0 },
                };
                Ok(node(kind, t.position.offset, t.end()))
            }
            Some(LParen) => {
                self.next();
                let e = self.expr()?;
                self.expect(RParen)?;
                Ok(e)
            }
            Some(Keyword) => self.call(),
            _ => Err(self.unexpected(&[Name, Int, Minus, LParen, Keyword])),
        }
    }

    fn call(&mut self) -> Result<Expr, SyntaxError> {
        let kw = self.next();
        self.expect(TokenKind::LParen)?;
        let mut args = vec![self.expr()?];
        while self.peek() == Some(TokenKind::Comma) {
            self.next();
            args.push(self.expr()?);
        }
        let close = self.expect(TokenKind::RParen)?;
        let arity = if matches!(kw.lexeme.as_str(), "dsum" | "ddiff") { 2 } else { 1 };
        if args.len() != arity {
            return Err(self.error_at(
                &kw,
                format!(
                    "`{}` takes {arity} argument{}, found {}",
                    kw.lexeme,
                    if arity == 1 { "" } else { "s" },
                    args.len()
                ),
            ));
        }
        let mut it = args.into_iter().map(Box::new);
        let mut arg = || it.next().expect("arity checked");
        let kind = match kw.lexeme.as_str() {
            "inv" => ExprKind::InverseDot(arg()),
            "cinv" => ExprKind::CompInv(arg()),
            "adj" => ExprKind::Adjoint(arg()),
            "d" => ExprKind::Deriv(arg()),
            "bar" => ExprKind::Bar(arg()),
            "fresh" => ExprKind::Fresh(arg()),
            "dsum" => {
                let a = arg();
                ExprKind::DisjointSum(a, arg())
            }
            "ddiff" => {
                let a = arg();
                ExprKind::DisjointDiff(a, arg())
            }
            other => unreachable!("unhandled keyword {other}"),
        };
        Ok(node(kind, kw.position.offset, close.end()))
    }
}
