//! The umbral expression tree.
//!
//! Within one expression, atoms with the same name and prime count denote
//! the same umbra; a different prime count gives a similar but
//! uncorrelated copy. Every dot-product, adjoint, inverse, derivative,
//! overbar or disjoint operation yields a fresh auxiliary umbra that is
//! uncorrelated with everything else in the expression.

use crate::poly::Var;
use crate::scalar::Rational;

/// Byte range in the source text; empty for programmatically built nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

/// An expression node. Equality compares structure and ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    /// A named umbra; `primes` selects the correlation label.
    Atom {
        name: String,
        primes: u32,
    },
    Indeterminate(Var),
    Number(Rational),
    /// Sum under `E`.
    Sum(Box<Expr>, Box<Expr>),
    /// Product of umbral polynomials under `E`.
    Product(Box<Expr>, Box<Expr>),
    ScalarMul(Rational, Box<Expr>),
    /// Ordinary power `e^k`.
    Power(Box<Expr>, u32),
    /// Dot-power `e^{.n}`.
    DotPower(Box<Expr>, u32),
    /// Dot-product `left.right`.
    Dot(Box<Expr>, Box<Expr>),
    /// `-1.e`
    InverseDot(Box<Expr>),
    /// `e^{<-1>}`
    CompInv(Box<Expr>),
    /// `e*`
    Adjoint(Box<Expr>),
    /// `e_D`
    Deriv(Box<Expr>),
    DisjointSum(Box<Expr>, Box<Expr>),
    DisjointDiff(Box<Expr>, Box<Expr>),
    /// `ē` with moments `g_{n+1} / (g_1 (n+1))`.
    Bar(Box<Expr>),
    /// An uncorrelated copy of `e`.
    Fresh(Box<Expr>),
}

impl From<ExprKind> for Expr {
    fn from(kind: ExprKind) -> Expr {
        Expr { kind, span: Span::default() }
    }
}

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

impl Expr {
    pub fn atom(name: &str) -> Expr {
        ExprKind::Atom { name: name.into(), primes: 0 }.into()
    }

    pub fn primed(name: &str, primes: u32) -> Expr {
        ExprKind::Atom { name: name.into(), primes }.into()
    }

    pub fn var(v: Var) -> Expr {
        ExprKind::Indeterminate(v).into()
    }

    pub fn number(r: Rational) -> Expr {
        ExprKind::Number(r).into()
    }

    pub fn int(n: i64) -> Expr {
        Expr::number(crate::scalar::int(n))
    }

    pub fn sum(self, rhs: Expr) -> Expr {
        ExprKind::Sum(b(self), b(rhs)).into()
    }

    /// `self - rhs`, i.e. `self + (-1.rhs)`.
    pub fn minus(self, rhs: Expr) -> Expr {
        self.sum(rhs.inv())
    }

    pub fn times(self, rhs: Expr) -> Expr {
        ExprKind::Product(b(self), b(rhs)).into()
    }

    pub fn scaled(self, c: Rational) -> Expr {
        ExprKind::ScalarMul(c, b(self)).into()
    }

    pub fn pow(self, k: u32) -> Expr {
        ExprKind::Power(b(self), k).into()
    }

    pub fn dot_pow(self, n: u32) -> Expr {
        ExprKind::DotPower(b(self), n).into()
    }

    pub fn dot(self, rhs: Expr) -> Expr {
        ExprKind::Dot(b(self), b(rhs)).into()
    }

    pub fn inv(self) -> Expr {
        ExprKind::InverseDot(b(self)).into()
    }

    pub fn cinv(self) -> Expr {
        ExprKind::CompInv(b(self)).into()
    }

    pub fn adj(self) -> Expr {
        ExprKind::Adjoint(b(self)).into()
    }

    pub fn deriv(self) -> Expr {
        ExprKind::Deriv(b(self)).into()
    }

    pub fn bar(self) -> Expr {
        ExprKind::Bar(b(self)).into()
    }

    pub fn fresh(self) -> Expr {
        ExprKind::Fresh(b(self)).into()
    }

    pub fn dsum(self, rhs: Expr) -> Expr {
        ExprKind::DisjointSum(b(self), b(rhs)).into()
    }

    pub fn ddiff(self, rhs: Expr) -> Expr {
        ExprKind::DisjointDiff(b(self), b(rhs)).into()
    }

    /// Direct children, left to right.
    pub fn children(&self) -> Vec<&Expr> {
        use ExprKind::*;
        match &self.kind {
            Atom { .. } | Indeterminate(_) | Number(_) => vec![],
            Sum(l, r) | Product(l, r) | Dot(l, r) | DisjointSum(l, r) | DisjointDiff(l, r) => {
                vec![l, r]
            }
            ScalarMul(_, e)
            | Power(e, _)
            | DotPower(e, _)
            | InverseDot(e)
            | CompInv(e)
            | Adjoint(e)
            | Deriv(e)
            | Bar(e)
            | Fresh(e) => vec![e],
        }
    }

    /// Names of all atoms in the tree.
    pub fn atom_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            if let ExprKind::Atom { name, .. } = &e.kind {
                out.push(name.as_str());
            }
            stack.extend(e.children());
        }
        out
    }
}
