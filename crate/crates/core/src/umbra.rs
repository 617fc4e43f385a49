//! Umbrae as truncated moment sequences, and the dot-product algebra on them.
//!
//! An [`Umbra`] of order `N` stores `a_0 = 1, a_1, ..., a_N` where
//! `a_n = E[α^n]`. Entries are [`Poly`] so polynomial umbrae such as
//! `x.β` use the same representation as scalar ones.

use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{bell_partial_table, partition_coefficient, partitions_of, pascal, stirling_first_table};
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::scalar::{int, Rational};
use crate::series::TruncatedEGF;

#[derive(Clone, PartialEq, Eq)]
pub struct Umbra {
    moments: Vec<Poly>,
    name: Option<String>,
}

impl Umbra {
    /// Builds an umbra from `a_0..=a_N`, rejecting non-unital sequences.
    pub fn new(moments: Vec<Poly>) -> Result<Umbra> {
        match moments.first() {
            None => Err(Error::Argument("an umbra needs at least a_0".into())),
            Some(a0) if !a0.is_one() => Err(Error::NonUnital(a0.to_string())),
            Some(_) => Ok(Umbra { moments, name: None }),
        }
    }

    pub fn from_rationals(moments: &[Rational]) -> Result<Umbra> {
        Umbra::new(moments.iter().cloned().map(Poly::constant).collect())
    }

    pub fn from_ints(moments: &[i64]) -> Result<Umbra> {
        Umbra::new(moments.iter().map(|&n| Poly::from_int(n)).collect())
    }

    /// Umbra whose g.f. is `f`; `f(0)` must be 1.
    pub fn from_egf(f: &TruncatedEGF) -> Result<Umbra> {
        Umbra::new(f.moments())
    }

    /// The scalar `c` viewed as an umbra: moments `c^n`.
    pub fn scalar(c: &Poly, order: usize) -> Umbra {
        Umbra { moments: (0..=order).map(|n| c.pow(n as u32)).collect(), name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Umbra {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moments(&self) -> &[Poly] {
        &self.moments
    }

    pub fn moment(&self, n: usize) -> &Poly {
        &self.moments[n]
    }

    /// The moments as rationals, failing if any is a genuine polynomial.
    pub fn rational_moments(&self) -> Result<Vec<Rational>> {
        self.moments.iter().map(|m| m.as_constant().ok_or_else(|| Error::NotConstant(m.to_string()))).collect()
    }

    pub fn egf(&self) -> TruncatedEGF {
        TruncatedEGF::from_moments(&self.moments)
    }

    pub fn truncate(&self, order: usize) -> Result<Umbra> {
        if order > self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: order });
        }
        Ok(Umbra { moments: self.moments[..=order].to_vec(), name: self.name.clone() })
    }

    /// True when the moments carry no polynomial dependence.
    pub fn is_scalar(&self) -> bool {
        self.moments.iter().all(Poly::is_constant)
    }

    fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "umbra".into())
    }

    /// `E[α]`, required to be a nonzero rational for the inverse-type operations.
    fn first_moment_unit(&self) -> Result<Rational> {
        if self.order() == 0 {
            return Err(Error::Argument(format!("{} has no first moment", self.label())));
        }
        match self.moments[1].as_constant() {
            Some(c) if !c.is_zero() => Ok(c),
            Some(_) => Err(Error::ZeroFirstMoment(self.label())),
            None => Err(Error::NotConstant(self.moments[1].to_string())),
        }
    }
}

impl fmt::Debug for Umbra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moments.iter().map(|m| m.to_string()).collect();
        match &self.name {
            Some(n) => write!(f, "{n}[{}]", parts.join(", ")),
            None => write!(f, "[{}]", parts.join(", ")),
        }
    }
}

fn same_order(a: &Umbra, b: &Umbra) -> Result<usize> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    Ok(a.order())
}

/// Moments of `α + γ` for uncorrelated `α, γ`: the binomial convolution
/// `Σ_k C(n,k) a_k g_{n-k}`.
pub fn umbral_sum(alpha: &Umbra, gamma: &Umbra) -> Result<Umbra> {
    same_order(alpha, gamma)?;
    Umbra::from_egf(&alpha.egf().mul(&gamma.egf())?)
}

/// Left operand of a dot-product.
#[derive(Debug, Clone, PartialEq)]
pub enum DotLeft {
    /// An integer, rational, or polynomial such as `x`.
    Scalar(Poly),
    Umbra(Umbra),
}

impl From<i64> for DotLeft {
    fn from(n: i64) -> DotLeft {
        DotLeft::Scalar(Poly::from_int(n))
    }
}

impl From<Rational> for DotLeft {
    fn from(r: Rational) -> DotLeft {
        DotLeft::Scalar(Poly::constant(r))
    }
}

impl From<Poly> for DotLeft {
    fn from(p: Poly) -> DotLeft {
        DotLeft::Scalar(p)
    }
}

impl From<Umbra> for DotLeft {
    fn from(u: Umbra) -> DotLeft {
        DotLeft::Umbra(u)
    }
}

impl From<&Umbra> for DotLeft {
    fn from(u: &Umbra) -> DotLeft {
        DotLeft::Umbra(u.clone())
    }
}

/// The dot-product `left.α`.
///
/// A scalar `c` (integer, rational, or polynomial) gives the umbra with
/// g.f. `f(α,t)^c`. An umbra `γ` goes through its factorial moments:
/// `E[(γ.α)^i] = Σ_j g_(j) B_{i,j}(a_1, a_2, ...)`.
pub fn dot(left: impl Into<DotLeft>, alpha: &Umbra) -> Result<Umbra> {
    match left.into() {
        DotLeft::Scalar(c) => dot_scalar(&c, alpha),
        DotLeft::Umbra(gamma) => dot_umbra(&gamma, alpha),
    }
}

/// `c.α` with g.f. `f(α,t)^c`.
pub fn dot_scalar(c: &Poly, alpha: &Umbra) -> Result<Umbra> {
    Umbra::from_egf(&alpha.egf().power(c)?)
}

/// `γ.α` through the factorial moments of `γ` and the partial Bell
/// polynomials in the moments of `α`.
pub fn dot_umbra(gamma: &Umbra, alpha: &Umbra) -> Result<Umbra> {
    let order = same_order(gamma, alpha)?;
    let g = factorial_moments(gamma);
    let bell = bell_partial_table(order, alpha.moments());
    let mut moments = Vec::with_capacity(order + 1);
    moments.push(Poly::one());
    for i in 1..=order {
        let mut acc = Poly::zero();
        for j in 1..=i {
            if !g[j].is_zero() && !bell[i][j].is_zero() {
                acc += &(&g[j] * &bell[i][j]);
            }
        }
        moments.push(acc);
    }
    Umbra::new(moments)
}

/// `γ.α` through g.f. composition: `f(γ.α, t) = f(γ, log f(α, t))`.
pub fn dot_umbra_egf(gamma: &Umbra, alpha: &Umbra) -> Result<Umbra> {
    same_order(gamma, alpha)?;
    Umbra::from_egf(&gamma.egf().compose(&alpha.egf().log()?)?)
}

/// `α^{.n}`: the product of `n` uncorrelated copies, moments `a_k^n`.
pub fn dot_power(alpha: &Umbra, n: u32) -> Umbra {
    Umbra { moments: alpha.moments.iter().map(|a| a.pow(n)).collect(), name: None }
}

/// `-1.α`, the umbra with g.f. `1/f(α,t)`.
pub fn inverse_dot(alpha: &Umbra) -> Result<Umbra> {
    Umbra::from_egf(&alpha.egf().reciprocal()?)
}

/// `α^{<-1>}`, with `f(α^{<-1>}, t) - 1` the reversion of `f(α, t) - 1`.
pub fn comp_inverse(alpha: &Umbra) -> Result<Umbra> {
    alpha.first_moment_unit()?;
    let order = alpha.order();
    let h = alpha.egf().sub(&TruncatedEGF::one(order))?;
    let r = h.revert()?;
    Umbra::from_egf(&r.add(&TruncatedEGF::one(order))?)
}

/// The adjoint `γ* = β.γ^{<-1>}`, with g.f. `exp(f^{<-1>}(γ,t) - 1)`.
pub fn adjoint(gamma: &Umbra) -> Result<Umbra> {
    gamma.first_moment_unit()?;
    let order = gamma.order();
    let h = gamma.egf().sub(&TruncatedEGF::one(order))?;
    Umbra::from_egf(&h.revert()?.exp()?)
}

/// `α_D`, with moments `n a_{n-1}` and g.f. `1 + t f(α, t)`.
pub fn derivative_umbra(alpha: &Umbra) -> Umbra {
    let mut moments = Vec::with_capacity(alpha.moments.len());
    moments.push(Poly::one());
    for n in 1..=alpha.order() {
        moments.push(alpha.moments[n - 1].scale(&int(n as i64)));
    }
    Umbra { moments, name: None }
}

fn disjoint(alpha: &Umbra, gamma: &Umbra, sign: i64) -> Result<Umbra> {
    same_order(alpha, gamma)?;
    let mut moments = vec![Poly::one()];
    for n in 1..=alpha.order() {
        moments.push(&alpha.moments[n] + &gamma.moments[n].scale(&int(sign)));
    }
    Umbra::new(moments)
}

/// Disjoint sum: moments `a_n + g_n` for `n >= 1`.
pub fn disjoint_sum(alpha: &Umbra, gamma: &Umbra) -> Result<Umbra> {
    disjoint(alpha, gamma, 1)
}

/// Disjoint difference: moments `a_n - g_n` for `n >= 1`.
pub fn disjoint_diff(alpha: &Umbra, gamma: &Umbra) -> Result<Umbra> {
    disjoint(alpha, gamma, -1)
}

/// Factorial moments `a_(n) = E[(α)_n] = Σ_k s(n,k) a_k`.
pub fn factorial_moments(alpha: &Umbra) -> Vec<Poly> {
    let s = stirling_first_table(alpha.order());
    (0..=alpha.order())
        .map(|n| {
            let mut acc = Poly::zero();
            for k in 0..=n {
                if !s[n][k].is_zero() {
                    acc += &alpha.moments[k].scale(&s[n][k]);
                }
            }
            acc
        })
        .collect()
}

/// The cumulant umbra `χ.α`, with g.f. `1 + log f(α, t)`.
pub fn cumulant(alpha: &Umbra) -> Result<Umbra> {
    dot_umbra(&named::chi(alpha.order()), alpha)
}

/// The umbra `χ.w.β.α`: moments `w a_n` for `n >= 1`.
pub fn scale_moments(w: &Rational, alpha: &Umbra) -> Umbra {
    let mut moments = vec![Poly::one()];
    moments.extend(alpha.moments[1..].iter().map(|a| a.scale(w)));
    Umbra { moments, name: None }
}

/// Left side of a partition expansion.
#[derive(Debug, Clone)]
pub enum ExpandLeft<'a> {
    /// `(n.α)^i = Σ_{λ ⊢ i} (n)_{ν_λ} d_λ α_λ`.
    Scalar(&'a Poly),
    /// `(γ.β.α)^i = Σ_{λ ⊢ i} g_{ν_λ} d_λ α_λ`.
    Umbra(&'a Umbra),
}

/// The `i`-th moment of `n.α` (or `γ.β.α`) summed over the partitions of `i`.
pub fn partition_expand(left: ExpandLeft<'_>, alpha: &Umbra, i: usize) -> Result<Poly> {
    if i < 1 {
        return Err(Error::Argument("partition expansion needs i >= 1".into()));
    }
    if i > alpha.order() {
        return Err(Error::OrderMismatch { left: alpha.order(), right: i });
    }
    let mut acc = Poly::zero();
    for lambda in partitions_of(i) {
        let nu = lambda.length();
        let weight = match &left {
            ExpandLeft::Scalar(c) => crate::combinatorics::falling_factorial(*c, nu),
            ExpandLeft::Umbra(g) => {
                if nu > g.order() {
                    return Err(Error::OrderMismatch { left: g.order(), right: nu });
                }
                g.moments[nu].clone()
            }
        };
        if weight.is_zero() {
            continue;
        }
        let mut term = weight.scale(&partition_coefficient(&lambda)?);
        for &p in lambda.parts() {
            term = &term * &alpha.moments[p];
        }
        acc += &term;
    }
    Ok(acc)
}

/// `E[q_n(α)]` for each `q_n`, replacing `x^k` by `a_k` (one correlation
/// label). Powers of `y` pass through as coefficients.
pub fn substitute(q: &[Poly], alpha: &Umbra) -> Result<Vec<Poly>> {
    q.iter().map(|p| substitute_one(p, alpha)).collect()
}

pub fn substitute_one(p: &Poly, alpha: &Umbra) -> Result<Poly> {
    let deg = p.degree(Var::X) as usize;
    if deg > alpha.order() {
        return Err(Error::OrderMismatch { left: alpha.order(), right: deg });
    }
    let mut out = Poly::zero();
    for (&(dx, dy), c) in p.terms() {
        let coeff = Poly::monomial(c.clone(), 0, dy);
        out += &(&coeff * &alpha.moments[dx as usize]);
    }
    Ok(out)
}

/// Binomial convolution of two moment sequences; used where the caller has
/// plain vectors rather than umbrae.
pub fn binomial_convolution(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = a.len().min(b.len());
    let binom = pascal(n.saturating_sub(1));
    (0..n)
        .map(|m| {
            let mut acc = Poly::zero();
            for k in 0..=m {
                acc += &(&a[k] * &b[m - k]).scale(&binom[m][k]);
            }
            acc
        })
        .collect()
}

/// Generators for the built-in umbrae.
pub mod named {
    use super::*;
    use crate::combinatorics::bell_numbers;
    use crate::scalar::factorial;
    use crate::special::bernoulli_numbers;

    pub const NAMES: [&str; 7] = ["eps", "u", "chi", "bell", "bern", "ubar", "uinv"];

    fn build(name: &str, moments: Vec<Poly>) -> Umbra {
        Umbra { moments, name: Some(name.into()) }
    }

    /// Augmentation `ε`: `E[ε^n] = δ_{0,n}`.
    pub fn eps(order: usize) -> Umbra {
        build("eps", (0..=order).map(|n| if n == 0 { Poly::one() } else { Poly::zero() }).collect())
    }

    /// Unity `u`: all moments 1.
    pub fn u(order: usize) -> Umbra {
        build("u", vec![Poly::one(); order + 1])
    }

    /// Singleton `χ`: moments `1, 1, 0, 0, ...`.
    pub fn chi(order: usize) -> Umbra {
        build("chi", (0..=order).map(|n| if n <= 1 { Poly::one() } else { Poly::zero() }).collect())
    }

    /// Bell umbra `β`: the Bell numbers.
    pub fn bell(order: usize) -> Umbra {
        build("bell", bell_numbers(order).into_iter().map(Poly::constant).collect())
    }

    /// Bernoulli umbra `ι`: the Bernoulli numbers with `B_1 = -1/2`.
    pub fn bern(order: usize) -> Umbra {
        build("bern", bernoulli_numbers(order).into_iter().map(Poly::constant).collect())
    }

    /// `ū = -1.(-χ)`: moments `n!`.
    pub fn ubar(order: usize) -> Umbra {
        build("ubar", (0..=order).map(|n| Poly::constant(factorial(n))).collect())
    }

    /// `u^{<-1>}`: moments `(-1)^{n-1} (n-1)!` for `n >= 1`.
    pub fn uinv(order: usize) -> Umbra {
        let moments = (0..=order)
            .map(|n| {
                if n == 0 {
                    Poly::one()
                } else {
                    let sign = if n % 2 == 1 { 1 } else { -1 };
                    Poly::constant(factorial(n - 1) * int(sign))
                }
            })
            .collect();
        build("uinv", moments)
    }

    /// Looks up a built-in by name.
    pub fn builtin(name: &str, order: usize) -> Option<Umbra> {
        Some(match name {
            "eps" => eps(order),
            "u" => u(order),
            "chi" => chi(order),
            "bell" => bell(order),
            "bern" => bern(order),
            "ubar" => ubar(order),
            "uinv" => uinv(order),
            _ => return None,
        })
    }
}
