//! The umbral expression language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := chain ('*' chain)*
//! chain   := unary ('.' unary)*          right-grouped
//! unary   := '-' unary | postfix
//! postfix := primary ('^' INT | '^.' INT | "'")*
//! primary := NAME | ['-'] INT ['/' INT] | '(' expr ')' | KEYWORD '(' expr (',' expr)* ')'
//! ```

mod lexer;
mod parser;
mod pretty;

pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;
pub use pretty::pretty_print;
