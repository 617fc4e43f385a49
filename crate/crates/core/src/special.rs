//! Classical sequences in umbral form: Bernoulli numbers, Abel polynomials,
//! Lagrange inversion, umbral Stirling numbers, and three difference
//! equations solved with Sheffer umbrae.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial_poly, falling_factorial, pascal, stirling_second_table};
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::scalar::{factorial, int, Rational};
use crate::series::TruncatedEGF;
use crate::sheffer::{IdentityReport, PolySequence, Provenance};
use crate::umbra::{self, named, Umbra};

/// `B_0, ..., B_N` from `Σ_{k<n} C(n,k) B_k = 0` for `n >= 2`, so that
/// `B_1 = -1/2`.
pub fn bernoulli_numbers(order: usize) -> Vec<Rational> {
    let binom = pascal(order + 1);
    let mut b: Vec<Rational> = Vec::with_capacity(order + 1);
    b.push(Rational::one());
    for m in 1..=order {
        // Row n = m + 1 of the relation determines B_m.
        let n = m + 1;
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += &binom[n][k] * bk;
        }
        b.push(-acc / &binom[n][m]);
    }
    b
}

/// `γ̄` with moments `g_{n+1} / (g_1 (n+1))`; one order lower than `γ`.
pub fn overbar(gamma: &Umbra) -> Result<Umbra> {
    if gamma.order() == 0 {
        return Err(Error::Argument("overbar needs at least one moment".into()));
    }
    let g1 = match gamma.moment(1).as_constant() {
        Some(c) if !c.is_zero() => c,
        Some(_) => return Err(Error::ZeroFirstMoment(gamma.name().unwrap_or("umbra").into())),
        None => return Err(Error::NotConstant(gamma.moment(1).to_string())),
    };
    let moments =
        (0..gamma.order()).map(|n| gamma.moment(n + 1).scale(&(g1.clone() * int(n as i64 + 1)).recip())).collect();
    Umbra::new(moments)
}

/// `1, 1, 2, 3, 5, ...`: coefficients of `1/(1 - t - t^2)`.
pub fn fibonacci_numbers(order: usize) -> Vec<Rational> {
    let mut f = vec![Rational::one(); order + 1];
    for n in 2..=order {
        f[n] = &f[n - 1] + &f[n - 2];
    }
    f
}

/// `δ̄` with moments `n! F_n`, i.e. g.f. `1/(1 - t - t^2)`.
pub fn fibonacci_bar(order: usize) -> Umbra {
    let m = fibonacci_numbers(order).into_iter().enumerate().map(|(n, f)| Poly::constant(f * factorial(n))).collect();
    Umbra::new(m).expect("unital").with_name("fibbar")
}

/// `δ` with the Fibonacci numbers as moments.
pub fn fibonacci_delta(order: usize) -> Umbra {
    Umbra::from_rationals(&fibonacci_numbers(order)).expect("unital").with_name("fib")
}

/// `p_n(x) = x E[(x - n.γ)^{n-1}]`, the Abel representation of the
/// sequence associated to `γ_D`. Needs `γ` to order `N - 1`.
pub fn abel_polynomials(gamma: &Umbra, order: usize) -> Result<PolySequence> {
    let mut polys = vec![Poly::one()];
    if order > 0 && gamma.order() + 1 < order {
        return Err(Error::OrderMismatch { left: gamma.order(), right: order - 1 });
    }
    for n in 1..=order {
        let g = gamma.truncate(n - 1)?;
        let m = umbra::dot_scalar(&Poly::from_int(-(n as i64)), &g)?;
        let binom = pascal(n - 1);
        let mut acc = Poly::zero();
        for k in 0..n {
            acc += &(m.moment(n - 1 - k) * &Poly::x().pow(k as u32)).scale(&binom[n - 1][k]);
        }
        polys.push(&acc * &Poly::x());
    }
    Ok(PolySequence::new(polys, Provenance::Abel { gamma: gamma.name().unwrap_or("anonymous").into() }))
}

/// `E[(-n.γ)^{n-1}]`, checked against moment `n` of `(γ_D)^{<-1>}`.
pub fn lagrange_inversion(gamma: &Umbra, n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Argument("Lagrange inversion needs n >= 1".into()));
    }
    let g = gamma.truncate(n - 1)?;
    let value = umbra::dot_scalar(&Poly::from_int(-(n as i64)), &g)?.moment(n - 1).clone();
    let check = umbra::comp_inverse(&umbra::derivative_umbra(&gamma.truncate(n)?))?;
    if check.moment(n) != &value {
        return Err(Error::Inconsistent(format!("Lagrange inversion at n = {n}: {value} vs {}", check.moment(n))));
    }
    Ok(value)
}

/// `E[(-n.γ̄)^{n-1}]`, checked against `g_1^n` times moment `n` of
/// `γ^{<-1>}`.
pub fn lagrange_inversion_general(gamma: &Umbra, n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Argument("Lagrange inversion needs n >= 1".into()));
    }
    let g = gamma.truncate(n)?;
    let bar = overbar(&g)?;
    let value = umbra::dot_scalar(&Poly::from_int(-(n as i64)), &bar.truncate(n - 1)?)?.moment(n - 1).clone();
    let g1 = g.moment(1).clone();
    let check = &g1.pow(n as u32) * umbra::comp_inverse(&g)?.moment(n);
    if check != value {
        return Err(Error::Inconsistent(format!("generalized Lagrange inversion at n = {n}: {value} vs {check}")));
    }
    Ok(value)
}

/// `S(n,k) = C(n,k) E[(-k.ι)^{n-k}]`.
pub fn stirling_second_umbral(n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Ok(Rational::zero());
    }
    let m = umbra::dot_scalar(&Poly::from_int(-(k as i64)), &named::bern(n - k))?;
    scaled_moment(&m, n, k)
}

/// `s(n,k) = C(n,k) E[(k.(ι.χ))^{n-k}]`.
pub fn stirling_first_umbral(n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Ok(Rational::zero());
    }
    let d = n - k;
    let ic = umbra::dot_umbra(&named::bern(d), &named::chi(d))?;
    let m = umbra::dot_scalar(&Poly::from_int(k as i64), &ic)?;
    scaled_moment(&m, n, k)
}

fn scaled_moment(m: &Umbra, n: usize, k: usize) -> Result<Rational> {
    let v = m.moment(n - k).as_constant().ok_or_else(|| Error::NotConstant(m.moment(n - k).to_string()))?;
    Ok(v * &pascal(n)[n][k])
}

/// `c_n(x; a) = a^{-n} Σ_k C(n,k) (-a)^{n-k} (x)_k`.
pub fn poisson_charlier(n: usize, a: &Rational) -> Result<Poly> {
    if a.is_zero() {
        return Err(Error::Argument("Poisson-Charlier parameter must be nonzero".into()));
    }
    let binom = pascal(n);
    let mut acc = Poly::zero();
    for k in 0..=n {
        let c = &binom[n][k] * num_traits::pow(-a.clone(), n - k);
        acc += &falling_factorial(&Poly::x(), k).scale(&c);
    }
    Ok(acc.scale(&num_traits::pow(a.recip(), n)))
}

/// `Φ_n(x) = Σ_i S(n,i) x^i`.
pub fn exponential_polynomials(order: usize) -> PolySequence {
    let s = stirling_second_table(order);
    let polys = s.iter().map(|row| Poly::from_x_coeffs(row)).collect();
    PolySequence::new(polys, Provenance::Exponential)
}

/// `(x + y)^n = Σ_k C(n,k) p_k(y) E[(x + k.γ)^{n-k}]` with `p_k` the Abel
/// polynomials of `γ`; the `k = 0` term is `x^n`.
pub fn abel_identity_check(gamma: &Umbra, order: usize) -> Result<IdentityReport> {
    let abel = abel_polynomials(gamma, order)?.polynomials;
    let binom = pascal(order);
    let g = gamma.truncate(order)?;
    let mut lhs = Vec::with_capacity(order + 1);
    let mut rhs = Vec::with_capacity(order + 1);
    let shifted: Vec<Umbra> =
        (0..=order).map(|k| umbra::dot_scalar(&Poly::from_int(k as i64), &g)).collect::<Result<_>>()?;
    for n in 0..=order {
        lhs.push((&Poly::x() + &Poly::y()).pow(n as u32));
        let mut acc = Poly::x().pow(n as u32);
        for k in 1..=n {
            let mut tail = Poly::zero();
            for j in 0..=n - k {
                tail += &(shifted[k].moment(n - k - j) * &Poly::x().pow(j as u32)).scale(&binom[n - k][j]);
            }
            acc += &(&abel[k].swap_vars() * &tail).scale(&binom[n][k]);
        }
        rhs.push(acc);
    }
    Ok(IdentityReport::compare("abel", &lhs, &rhs))
}

/// Coefficients of `p` in the Abel basis of `γ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbelExpansion {
    /// `E[p^{(k)}(k.γ)] / k!`.
    pub coefficients: Vec<Poly>,
    pub reconstruction: Poly,
}

/// `p(x) = Σ_k E[p^{(k)}(k.γ)] / k! · x(x - k.γ)^{k-1}`.
pub fn polynomial_expand_abel(p: &Poly, gamma: &Umbra) -> Result<AbelExpansion> {
    let deg = p.degree(Var::X) as usize;
    let g = gamma.truncate(deg)?;
    let abel = abel_polynomials(&g, deg)?.polynomials;
    let mut coefficients = Vec::with_capacity(deg + 1);
    let mut reconstruction = Poly::zero();
    let mut d = p.clone();
    for k in 0..=deg {
        if k > 0 {
            d = d.derivative(Var::X);
        }
        let kg = umbra::dot_scalar(&Poly::from_int(k as i64), &g)?;
        let c = umbra::substitute_one(&d, &kg)?.scale(&factorial(k).recip());
        reconstruction += &(&c * &abel[k]);
        coefficients.push(c);
    }
    if &reconstruction != p {
        return Err(Error::Inconsistent(format!("Abel expansion reconstructs {reconstruction}, not {p}")));
    }
    Ok(AbelExpansion { coefficients, reconstruction })
}

/// `E[(x.β.γ_D)^n]`, checked against `Σ_k C(n,k) E[(k.γ)^{n-k}] x^k`.
pub fn bell_expansion(gamma: &Umbra, n: usize) -> Result<Poly> {
    let g = gamma.truncate(n)?;
    let chain = umbra::dot_umbra(&named::bell(n), &umbra::derivative_umbra(&g))?;
    let left = umbra::dot_scalar(&Poly::x(), &chain)?.moment(n).clone();
    let binom = pascal(n);
    let mut right = Poly::zero();
    for k in 0..=n {
        let kg = umbra::dot_scalar(&Poly::from_int(k as i64), &g)?;
        right += &(kg.moment(n - k) * &Poly::x().pow(k as u32)).scale(&binom[n][k]);
    }
    if left != right {
        return Err(Error::Inconsistent(format!("Bell expansion at n = {n}: {left} vs {right}")));
    }
    Ok(left)
}

/// `E[(x.β.γ)^n]`, checked against `Σ_k C(n,k) g_1^k E[(k.γ̄)^{n-k}] x^k`.
pub fn bell_expansion_general(gamma: &Umbra, n: usize) -> Result<Poly> {
    if n == 0 {
        return Ok(Poly::one());
    }
    let g = gamma.truncate(n)?;
    let left = umbra::dot_scalar(&Poly::x(), &umbra::dot_umbra(&named::bell(n), &g)?)?.moment(n).clone();
    let bar = overbar(&g)?;
    let g1 = g.moment(1).clone();
    let binom = pascal(n);
    // the k = 0 term is ε_n = 0
    let mut right = Poly::zero();
    for k in 1..=n {
        let kb = umbra::dot_scalar(&Poly::from_int(k as i64), &bar)?;
        let term = &(&g1.pow(k as u32) * kb.moment(n - k)) * &Poly::x().pow(k as u32);
        right += &term.scale(&binom[n][k]);
    }
    if left != right {
        return Err(Error::Inconsistent(format!("Bell expansion at n = {n}: {left} vs {right}")));
    }
    Ok(left)
}

/// One named assertion inside a worked example.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// A value computed and reported without being asserted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub sequence: PolySequence,
    pub checks: Vec<Check>,
    pub observations: Vec<Observation>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool) -> Check {
    Check { name: name.into(), passed }
}

fn shift(p: &Poly, by: i64) -> Poly {
    p.substitute(Var::X, &(&Poly::x() + &Poly::from_int(by)))
}

fn at(p: &Poly, x: i64) -> Poly {
    p.eval(Var::X, &int(x))
}

/// Normalized moments `E[((a + x.u).χ)^n] / n!` of a Sheffer umbra with
/// `γ = u`.
fn forward_difference_solution(a: &Umbra, order: usize) -> Result<Vec<Poly>> {
    let base = umbra::umbral_sum(a, &Umbra::scalar(&Poly::x(), order))?;
    let sigma = umbra::dot_umbra(&base, &named::chi(order))?;
    Ok((0..=order).map(|n| sigma.moment(n).scale(&factorial(n).recip())).collect())
}

fn unit_integral(p: &Poly) -> Poly {
    p.definite_integral(Var::X, &Rational::zero(), &Rational::one())
}

/// `s_n(x+1) = s_n(x) + s_{n-1}(x)` with `∫_0^1 s_n = 1`.
///
/// The integral condition asks for `E[σ_δ^n] = n!` with `δ ≡ -1.ι`, so the
/// solution is `(ι + ū.β + x.u).χ` normalized by `n!`. The umbra
/// `(ι + β + x.u).χ` solves the difference equation with `∫_0^1 s_n = 1/n!`
/// instead; its integrals are reported as observations.
pub fn recurrence_example_bernoulli(order: usize) -> Result<RecurrenceReport> {
    let bern = named::bern(order);
    let ubar_bell = umbra::dot_umbra(&named::ubar(order), &named::bell(order))?;
    let s = forward_difference_solution(&umbra::umbral_sum(&bern, &ubar_bell)?, order)?;
    let difference = (1..=order).all(|n| shift(&s[n], 1) == &s[n] + &s[n - 1]);
    let integral = s.iter().all(|p| unit_integral(p) == Poly::one());

    let plain = forward_difference_solution(&umbra::umbral_sum(&bern, &named::bell(order))?, order)?;
    let plain_difference = (1..=order).all(|n| shift(&plain[n], 1) == &plain[n] + &plain[n - 1]);
    let observations = plain
        .iter()
        .enumerate()
        .map(|(n, p)| Observation {
            label: format!("integral of E[((bern + bell + x.u).chi)^{n}]/{n}!"),
            value: unit_integral(p).to_string(),
        })
        .collect();
    Ok(RecurrenceReport {
        sequence: PolySequence::new(s, Provenance::Recurrence { example: "bernoulli-diff".into() }),
        checks: vec![
            check("s_n(x+1) = s_n(x) + s_{n-1}(x)", difference),
            check("integral over [0,1] is 1", integral),
            check("(bern + bell + x.u).chi also solves the difference equation", plain_difference),
        ],
        observations,
    })
}

/// `s_n(x) = s_n(x-1) + s_{n-1}(x)` with `s_n(1-n) = Σ_{i<n} s_i(n-2i)`,
/// solved both in closed form `[ū.β.δ̄_D + (x+n-1).χ]^n / n!` and by the
/// initial-condition recursion.
pub fn recurrence_example_backward(order: usize) -> Result<RecurrenceReport> {
    let fib = fibonacci_bar(order);
    let a =
        umbra::dot_umbra(&named::ubar(order), &umbra::dot_umbra(&named::bell(order), &umbra::derivative_umbra(&fib))?)?;
    let mut closed = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let binom = pascal(n);
        let shifted = &Poly::x() + &Poly::from_int(n as i64 - 1);
        let mut acc = Poly::zero();
        for k in 0..=n {
            acc += &(a.moment(k) * &falling_factorial(&shifted, n - k)).scale(&binom[n][k]);
        }
        closed.push(acc.scale(&factorial(n).recip()));
    }

    let mut recursive: Vec<Poly> = Vec::with_capacity(order + 1);
    let mut initial: Vec<Poly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let v = if n == 0 {
            Poly::one()
        } else {
            let mut acc = Poly::zero();
            for (i, si) in recursive.iter().enumerate() {
                acc += &at(si, n as i64 - 2 * i as i64);
            }
            acc
        };
        initial.push(v);
        let shifted = &Poly::x() + &Poly::from_int(n as i64 - 1);
        let mut s = Poly::zero();
        for (k, vk) in initial.iter().enumerate() {
            s += &(vk * &binomial_poly(&shifted, n - k));
        }
        recursive.push(s);
    }

    let agree = closed == recursive;
    let difference = (1..=order).all(|n| closed[n] == &shift(&closed[n], -1) + &closed[n - 1]);
    let init = at(&closed[0], -1) == Poly::one()
        && (1..=order).all(|n| {
            let mut rhs = Poly::zero();
            for (i, si) in closed.iter().enumerate().take(n) {
                rhs += &at(si, n as i64 - 2 * i as i64);
            }
            at(&closed[n], 1 - n as i64) == rhs
        });
    let mut denom = vec![Rational::zero(); order + 1];
    for (k, c) in [1, -1, -1].into_iter().enumerate().take(order + 1) {
        denom[k] = int(c);
    }
    let gf = fib.egf().mul(&TruncatedEGF::from_rational_coeffs(&denom))?;
    let gf_ok = gf == TruncatedEGF::one(order);
    let boolean = umbra::dot_umbra(
        &named::ubar(order),
        &umbra::dot_umbra(&named::bell(order), &umbra::derivative_umbra(&named::chi(order)))?,
    )?;
    let boolean_ok = boolean.moments() == fib.moments();
    Ok(RecurrenceReport {
        sequence: PolySequence::new(closed, Provenance::Recurrence { example: "backward-diff".into() }),
        checks: vec![
            check("closed form equals recursion", agree),
            check("s_n(x) = s_n(x-1) + s_{n-1}(x)", difference),
            check("initial condition", init),
            check("f(fibbar, t) = 1/(1 - t - t^2)", gf_ok),
            check("ubar.bell.chi_D equals fibbar", boolean_ok),
        ],
        observations: vec![],
    })
}

/// `F_n(m) = F_n(m-1) + F_{n-1}(m-2)`: returns `F_n(x+n) = Σ_k C(x+k, n-k)`.
/// `F_n(0)` is reported, not asserted.
pub fn recurrence_example_fibonacci(order: usize) -> Result<RecurrenceReport> {
    let g: Vec<Poly> = (0..=order)
        .map(|n| {
            let mut acc = Poly::zero();
            for k in 0..=n {
                acc += &binomial_poly(&(&Poly::x() + &Poly::from_int(k as i64)), n - k);
            }
            acc
        })
        .collect();
    let fib = fibonacci_bar(order);
    let sigma = umbra::umbral_sum(&fib, &umbra::dot_scalar(&Poly::x(), &named::chi(order))?)?;
    let umbral = (0..=order).all(|n| sigma.moment(n).scale(&factorial(n).recip()) == g[n]);
    let recurrence = (1..=order).all(|n| shift(&g[n], 1) == &g[n] + &g[n - 1]);
    let numbers = fibonacci_numbers(order);
    let diagonal = (0..=order).all(|n| at(&g[n], 0) == Poly::constant(numbers[n].clone()));
    let observations = (0..=order)
        .map(|n| Observation { label: format!("F_{n}(0)"), value: at(&g[n], -(n as i64)).to_string() })
        .collect();
    Ok(RecurrenceReport {
        sequence: PolySequence::new(g, Provenance::Recurrence { example: "fibonacci".into() }),
        checks: vec![
            check("closed form equals (fibbar + x.chi)^n / n!", umbral),
            check("F_n(x+n+1) = F_n(x+n) + F_{n-1}(x+n-1)", recurrence),
            check("F_n(n) is the n-th Fibonacci number", diagonal),
        ],
        observations,
    })
}
