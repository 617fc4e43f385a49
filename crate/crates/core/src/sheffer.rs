//! Sheffer, associated and Appell sequences, umbral composition and
//! inversion of sequences, and connection constants.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::pascal;
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::scalar::{format_rational, Rational};
use crate::series::TruncatedEGF;
use crate::umbra::{self, named, Umbra};

/// A pair `(α, γ)` with `E[γ] ≠ 0`; its Sheffer umbra is
/// `(-1.α + x.u).γ*`.
#[derive(Debug, Clone)]
pub struct ShefferPair {
    alpha: Umbra,
    gamma: Umbra,
}

impl ShefferPair {
    pub fn new(alpha: Umbra, gamma: Umbra) -> Result<ShefferPair> {
        if alpha.order() != gamma.order() {
            return Err(Error::OrderMismatch { left: alpha.order(), right: gamma.order() });
        }
        if gamma.order() == 0 {
            return Err(Error::Argument("a Sheffer pair needs order >= 1".into()));
        }
        match gamma.moment(1).as_constant() {
            Some(g1) if !g1.is_zero() => {}
            Some(_) => return Err(Error::ZeroFirstMoment(label(&gamma))),
            None => return Err(Error::NotConstant(gamma.moment(1).to_string())),
        }
        Ok(ShefferPair { alpha, gamma })
    }

    pub fn alpha(&self) -> &Umbra {
        &self.alpha
    }

    pub fn gamma(&self) -> &Umbra {
        &self.gamma
    }

    pub fn order(&self) -> usize {
        self.alpha.order()
    }

    fn provenance(&self) -> Provenance {
        Provenance::Sheffer { alpha: label(&self.alpha), gamma: label(&self.gamma) }
    }
}

fn label(u: &Umbra) -> String {
    u.name().unwrap_or("anonymous").to_string()
}

/// Where a polynomial sequence came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Sheffer { alpha: String, gamma: String },
    Associated { gamma: String },
    Appell { alpha: String },
    Abel { gamma: String },
    Composition,
    Exponential,
    Recurrence { example: String },
    Moments { expression: String },
}

/// `s_0(x), ..., s_N(x)` together with how they were produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolySequence {
    pub polynomials: Vec<Poly>,
    pub provenance: Provenance,
}

impl PolySequence {
    pub fn new(polynomials: Vec<Poly>, provenance: Provenance) -> PolySequence {
        PolySequence { polynomials, provenance }
    }

    pub fn from_umbra(u: &Umbra, provenance: Provenance) -> PolySequence {
        PolySequence::new(u.moments().to_vec(), provenance)
    }

    pub fn order(&self) -> usize {
        self.polynomials.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> &Poly {
        &self.polynomials[n]
    }

    /// Row `n` holds the coefficients of `x^0, ..., x^N` in `s_n`.
    pub fn coefficient_matrix(&self) -> Result<Vec<Vec<Rational>>> {
        let width = self.polynomials.len();
        self.polynomials
            .iter()
            .map(|p| {
                if p.degree(Var::Y) > 0 {
                    return Err(Error::NotConstant(p.to_string()));
                }
                Ok((0..width).map(|k| p.coeff(k as u32, 0)).collect())
            })
            .collect()
    }

    /// `n,k0,...,kN` header and one row per polynomial.
    pub fn to_csv(&self) -> Result<String> {
        matrix_csv(&self.coefficient_matrix()?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.polynomials).expect("polynomials serialize")
    }

    pub fn is_triangular(&self) -> bool {
        self.polynomials
            .iter()
            .enumerate()
            .all(|(n, p)| p.degree(Var::Y) == 0 && p.degree(Var::X) as usize == n && !p.coeff(n as u32, 0).is_zero())
    }
}

/// CSV for a square matrix of rationals.
pub fn matrix_csv(rows: &[Vec<Rational>]) -> Result<String> {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::from("n");
    for k in 0..width {
        let _ = write!(out, ",k{k}");
    }
    out.push('\n');
    for (n, row) in rows.iter().enumerate() {
        let _ = write!(out, "{n}");
        for k in 0..width {
            let v = row.get(k).cloned().unwrap_or_else(Rational::zero);
            let _ = write!(out, ",{}", format_rational(&v));
        }
        out.push('\n');
    }
    Ok(out)
}

fn x_umbra(order: usize) -> Umbra {
    Umbra::scalar(&Poly::x(), order)
}

/// Sheffer moments through the generating function
/// `e^{x r(t)} / f(α, r(t))` with `r` the reversion of `f(γ, t) - 1`.
pub fn sheffer_moments_gf(pair: &ShefferPair) -> Result<Vec<Poly>> {
    let order = pair.order();
    let r = pair.gamma.egf().sub(&TruncatedEGF::one(order))?.revert()?;
    let denom = pair.alpha.egf().compose(&r)?.reciprocal()?;
    let growth = r.scale(&Poly::x()).exp()?;
    Ok(denom.mul(&growth)?.moments())
}

/// Sheffer moments as `(-1.α + x.u).γ*`.
pub fn sheffer_moments_umbral(pair: &ShefferPair) -> Result<Vec<Poly>> {
    let order = pair.order();
    let base = umbra::umbral_sum(&umbra::inverse_dot(&pair.alpha)?, &x_umbra(order))?;
    Ok(umbra::dot_umbra(&base, &umbra::adjoint(&pair.gamma)?)?.moments().to_vec())
}

/// Moments of the Sheffer umbra for `pair`; both computations must agree.
pub fn sheffer_moments(pair: &ShefferPair) -> Result<PolySequence> {
    let gf = sheffer_moments_gf(pair)?;
    let um = sheffer_moments_umbral(pair)?;
    if let Some(n) = (0..gf.len()).find(|&n| gf[n] != um[n]) {
        return Err(Error::Inconsistent(format!(
            "Sheffer moment {n}: generating function gives {}, dot-product gives {}",
            gf[n], um[n]
        )));
    }
    Ok(PolySequence::new(gf, pair.provenance()))
}

/// `E[p(γ + x)] = Σ_j g_j p^{(j)}(x) / j!` for `γ` uncorrelated with `x`.
pub fn substitute_shift(p: &Poly, gamma: &Umbra) -> Result<Poly> {
    let deg = p.degree(Var::X) as usize;
    if deg > gamma.order() {
        return Err(Error::OrderMismatch { left: gamma.order(), right: deg });
    }
    let mut acc = Poly::zero();
    let mut d = p.clone();
    let mut fact = Rational::one();
    for j in 0..=deg {
        if j > 0 {
            d = d.derivative(Var::X);
            fact *= Rational::from_integer(j.into());
        }
        acc += &(&d * gamma.moment(j)).scale(&fact.recip());
    }
    Ok(acc)
}

/// Moments of `x.γ*`, checked against `p_n(ε) = ε^n` and
/// `p_n(γ + x.u) = p_n(x) + n p_{n-1}(x)`.
pub fn associated_moments(gamma: &Umbra) -> Result<PolySequence> {
    let p = umbra::dot_scalar(&Poly::x(), &umbra::adjoint(gamma)?)?.moments().to_vec();
    for (n, pn) in p.iter().enumerate() {
        let at_zero = pn.eval(Var::X, &Rational::zero());
        let expected = if n == 0 { Poly::one() } else { Poly::zero() };
        if at_zero != expected {
            return Err(Error::Inconsistent(format!("associated p_{n}(0) = {at_zero}")));
        }
        if n >= 1 {
            let lhs = substitute_shift(pn, gamma)?;
            let rhs = pn + &p[n - 1].scale(&Rational::from_integer(n.into()));
            if lhs != rhs {
                return Err(Error::Inconsistent(format!("associated recurrence fails at n = {n}: {lhs} vs {rhs}")));
            }
        }
    }
    Ok(PolySequence::new(p, Provenance::Associated { gamma: label(gamma) }))
}

/// Moments of `-1.α + x.u`.
pub fn appell_moments(alpha: &Umbra) -> Result<PolySequence> {
    let order = alpha.order();
    let s = umbra::umbral_sum(&umbra::inverse_dot(alpha)?, &x_umbra(order))?;
    Ok(PolySequence::new(s.moments().to_vec(), Provenance::Appell { alpha: label(alpha) }))
}

/// `Σ_k s_{n,k} r_k(x)` for each `n`.
pub fn umbral_compose(s: &PolySequence, r: &PolySequence) -> Result<PolySequence> {
    let coeffs = s.coefficient_matrix()?;
    if r.polynomials.len() < s.polynomials.len() {
        return Err(Error::OrderMismatch { left: r.order(), right: s.order() });
    }
    let polys = coeffs
        .iter()
        .map(|row| {
            let mut acc = Poly::zero();
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc += &r.polynomials[k].scale(c);
                }
            }
            acc
        })
        .collect();
    Ok(PolySequence::new(polys, Provenance::Composition))
}

/// The pair `(-1.α.γ*, γ^{<-1>})` whose Sheffer sequence inverts that of
/// `pair` under umbral composition.
pub fn inverse_pair(pair: &ShefferPair) -> Result<ShefferPair> {
    let a = umbra::inverse_dot(&umbra::dot_umbra(&pair.alpha, &umbra::adjoint(&pair.gamma)?)?)?;
    ShefferPair::new(a, umbra::comp_inverse(&pair.gamma)?)
}

pub fn inverse_sequence(pair: &ShefferPair) -> Result<PolySequence> {
    sheffer_moments(&inverse_pair(pair)?)
}

/// `c_{n,k}` with `s_n = Σ_k c_{n,k} r_k`, from the moments of
/// `η_x = [(δ - 1.α).ζ* + x.u].(γ.β.ζ^{<-1>})*` where `from = (α, γ)` and
/// `to = (δ, ζ)`.
pub fn connection_constants_umbral(from: &ShefferPair, to: &ShefferPair) -> Result<Vec<Vec<Rational>>> {
    let order = from.order();
    if to.order() != order {
        return Err(Error::OrderMismatch { left: order, right: to.order() });
    }
    let shift = umbra::umbral_sum(&to.alpha, &umbra::inverse_dot(&from.alpha)?)?;
    let left = umbra::umbral_sum(&umbra::dot_umbra(&shift, &umbra::adjoint(&to.gamma)?)?, &x_umbra(order))?;
    let inner =
        umbra::dot_umbra(&from.gamma, &umbra::dot_umbra(&named::bell(order), &umbra::comp_inverse(&to.gamma)?)?)?;
    let eta = umbra::dot_umbra(&left, &umbra::adjoint(&inner)?)?;
    PolySequence::new(eta.moments().to_vec(), Provenance::Composition).coefficient_matrix()
}

/// `c_{n,k}` by back-substitution in the triangular basis `r`.
pub fn connection_constants_solve(s: &PolySequence, r: &PolySequence) -> Result<Vec<Vec<Rational>>> {
    if !r.is_triangular() {
        return Err(Error::Argument("target sequence is not triangular".into()));
    }
    if r.polynomials.len() < s.polynomials.len() {
        return Err(Error::OrderMismatch { left: r.order(), right: s.order() });
    }
    let width = s.polynomials.len();
    let mut out = Vec::with_capacity(width);
    for sn in &s.polynomials {
        let mut residual = sn.clone();
        let mut row = vec![Rational::zero(); width];
        for k in (0..=residual.degree(Var::X) as usize).rev() {
            let lead = residual.coeff(k as u32, 0);
            if lead.is_zero() {
                continue;
            }
            let c = lead / r.polynomials[k].coeff(k as u32, 0);
            residual -= &r.polynomials[k].scale(&c);
            row[k] = c;
        }
        if !residual.is_zero() {
            return Err(Error::Inconsistent(format!("cannot express {sn} in the target basis")));
        }
        out.push(row);
    }
    Ok(out)
}

/// Connection constants from `from` to `to`; the umbral formula and the
/// triangular solve must agree.
pub fn connection_constants(from: &ShefferPair, to: &ShefferPair) -> Result<Vec<Vec<Rational>>> {
    let umbral = connection_constants_umbral(from, to)?;
    let solved = connection_constants_solve(&sheffer_moments(from)?, &sheffer_moments(to)?)?;
    if umbral != solved {
        return Err(Error::Inconsistent("connection constants: umbral formula and triangular solve differ".into()));
    }
    Ok(umbral)
}

/// First coefficient at which an identity fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub n: usize,
    pub x_degree: u32,
    pub y_degree: u32,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub passed: bool,
    pub violation: Option<Violation>,
}

impl IdentityReport {
    /// Compares `lhs[n]` against `rhs[n]` monomial by monomial.
    pub fn compare(identity: &str, lhs: &[Poly], rhs: &[Poly]) -> IdentityReport {
        let order = lhs.len().min(rhs.len()).saturating_sub(1);
        let violation = lhs.iter().zip(rhs).enumerate().find_map(|(n, (l, r))| first_difference(n, l, r));
        IdentityReport { identity: identity.into(), order, passed: violation.is_none(), violation }
    }
}

fn first_difference(n: usize, expected: &Poly, actual: &Poly) -> Option<Violation> {
    let diff = expected - actual;
    let (&(dx, dy), _) = diff.terms().next()?;
    Some(Violation {
        n,
        x_degree: dx,
        y_degree: dy,
        expected: format_rational(&expected.coeff(dx, dy)),
        actual: format_rational(&actual.coeff(dx, dy)),
    })
}

fn shift_xy(p: &Poly) -> Poly {
    p.substitute(Var::X, &(&Poly::x() + &Poly::y()))
}

fn in_y(p: &Poly) -> Poly {
    p.swap_vars()
}

fn binomial_sum(left: &[Poly], right: &[Poly], n: usize, binom: &[Vec<Rational>]) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=n {
        acc += &(&left[k] * &right[n - k]).scale(&binom[n][k]);
    }
    acc
}

/// `s_n(x + y) = Σ_k C(n,k) s_k(x) p_{n-k}(y)` with `p` associated to `γ`.
pub fn check_sheffer_identity(pair: &ShefferPair, order: usize) -> Result<IdentityReport> {
    let pair = truncate_pair(pair, order)?;
    let s = sheffer_moments(&pair)?.polynomials;
    let p: Vec<Poly> = associated_moments(&pair.gamma)?.polynomials.iter().map(in_y).collect();
    let binom = pascal(order);
    let lhs: Vec<Poly> = s.iter().map(shift_xy).collect();
    let rhs: Vec<Poly> = (0..=order).map(|n| binomial_sum(&s, &p, n, &binom)).collect();
    Ok(IdentityReport::compare("sheffer", &lhs, &rhs))
}

/// `p_n(x + y) = Σ_k C(n,k) p_k(x) p_{n-k}(y)` for `p` associated to `γ`.
pub fn check_binomial_identity(gamma: &Umbra, order: usize) -> Result<IdentityReport> {
    let p = associated_moments(&gamma.truncate(order)?)?.polynomials;
    let py: Vec<Poly> = p.iter().map(in_y).collect();
    let binom = pascal(order);
    let lhs: Vec<Poly> = p.iter().map(shift_xy).collect();
    let rhs: Vec<Poly> = (0..=order).map(|n| binomial_sum(&p, &py, n, &binom)).collect();
    Ok(IdentityReport::compare("binomial", &lhs, &rhs))
}

/// `p_n(x + y) = Σ_k C(n,k) p_k(x) y^{n-k}` for the Appell sequence of `α`.
pub fn check_appell_identity(alpha: &Umbra, order: usize) -> Result<IdentityReport> {
    let p = appell_moments(&alpha.truncate(order)?)?.polynomials;
    let ys: Vec<Poly> = (0..=order as u32).map(|k| Poly::y().pow(k)).collect();
    let binom = pascal(order);
    let lhs: Vec<Poly> = p.iter().map(shift_xy).collect();
    let rhs: Vec<Poly> = (0..=order).map(|n| binomial_sum(&p, &ys, n, &binom)).collect();
    Ok(IdentityReport::compare("appell", &lhs, &rhs))
}

/// `s_n(γ + x.u) = s_n(x) + n s_{n-1}(x)`.
pub fn check_derivative_characterization(pair: &ShefferPair, order: usize) -> Result<IdentityReport> {
    let pair = truncate_pair(pair, order)?;
    let s = sheffer_moments(&pair)?.polynomials;
    let lhs = s.iter().map(|p| substitute_shift(p, &pair.gamma)).collect::<Result<Vec<_>>>()?;
    let rhs: Vec<Poly> = (0..=order)
        .map(|n| if n == 0 { s[0].clone() } else { &s[n] + &s[n - 1].scale(&Rational::from_integer(n.into())) })
        .collect();
    Ok(IdentityReport::compare("derivative characterization", &lhs, &rhs))
}

fn truncate_pair(pair: &ShefferPair, order: usize) -> Result<ShefferPair> {
    ShefferPair::new(pair.alpha.truncate(order)?, pair.gamma.truncate(order)?)
}

/// Named pairs used by examples and tests.
pub mod pool {
    use super::*;
    use crate::umbra::dot_scalar;

    /// `(ε, χ)`: the powers `x^n`.
    pub fn power(order: usize) -> ShefferPair {
        ShefferPair::new(named::eps(order), named::chi(order)).expect("valid pair")
    }

    /// `(a.β, χ.a.β)`: the Poisson–Charlier polynomials `c_n(x; a)`.
    pub fn poisson_charlier(a: &Rational, order: usize) -> Result<ShefferPair> {
        if a.is_zero() {
            return Err(Error::Argument("Poisson-Charlier parameter must be nonzero".into()));
        }
        let ab = dot_scalar(&Poly::constant(a.clone()), &named::bell(order))?;
        let gamma = umbra::dot_umbra(&named::chi(order), &ab)?;
        let name = format!("{}.bell", format_rational(a));
        ShefferPair::new(ab.with_name(name.clone()), gamma.with_name(format!("chi.{name}")))
    }

    /// `(-1.ι, χ)`: the Bernoulli polynomials.
    pub fn bernoulli_appell(order: usize) -> ShefferPair {
        let alpha = umbra::inverse_dot(&named::bern(order)).expect("unital").with_name("-1.bern");
        ShefferPair::new(alpha, named::chi(order)).expect("valid pair")
    }

    /// `(ε, u)`: the falling factorials `(x)_n`.
    pub fn factorial(order: usize) -> ShefferPair {
        ShefferPair::new(named::eps(order), named::u(order)).expect("valid pair")
    }

    /// `(ε, u^{<-1>})`: the exponential polynomials `Φ_n(x)`.
    pub fn exponential(order: usize) -> ShefferPair {
        ShefferPair::new(named::eps(order), named::uinv(order)).expect("valid pair")
    }
}
