//! Truncated exponential generating functions.
//!
//! A [`TruncatedEGF`] of order `N` holds the ordinary coefficients
//! `c_0..=c_N` of a series modulo `t^{N+1}`. The moment form of the same
//! series is `a_n = n! c_n`. Binary operations require equal orders;
//! use [`TruncatedEGF::truncate`] to bring operands to a common order.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{factorial, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedEGF {
    coeffs: Vec<Poly>,
}

impl TruncatedEGF {
    /// Series from ordinary coefficients `c_0..=c_N`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> TruncatedEGF {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncatedEGF { coeffs }
    }

    pub fn from_rational_coeffs(coeffs: &[Rational]) -> TruncatedEGF {
        TruncatedEGF::from_coeffs(coeffs.iter().cloned().map(Poly::constant).collect())
    }

    /// `c_n = a_n / n!`.
    pub fn from_moments(moments: &[Poly]) -> TruncatedEGF {
        let coeffs = moments.iter().enumerate().map(|(n, a)| a.scale(&(Rational::one() / factorial(n)))).collect();
        TruncatedEGF::from_coeffs(coeffs)
    }

    /// `a_n = n! c_n`.
    pub fn moments(&self) -> Vec<Poly> {
        self.coeffs.iter().enumerate().map(|(n, c)| c.scale(&factorial(n))).collect()
    }

    pub fn zero(order: usize) -> TruncatedEGF {
        TruncatedEGF::from_coeffs(vec![Poly::zero(); order + 1])
    }

    pub fn one(order: usize) -> TruncatedEGF {
        TruncatedEGF::constant(Poly::one(), order)
    }

    pub fn constant(c: Poly, order: usize) -> TruncatedEGF {
        let mut s = TruncatedEGF::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn identity(order: usize) -> TruncatedEGF {
        let mut s = TruncatedEGF::zero(order);
        if order >= 1 {
            s.coeffs[1] = Poly::one();
        }
        s
    }

    /// `e^{c t}`.
    pub fn exp_linear(c: &Poly, order: usize) -> TruncatedEGF {
        let moments: Vec<Poly> = (0..=order).map(|n| c.pow(n as u32)).collect();
        TruncatedEGF::from_moments(&moments)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Result<TruncatedEGF> {
        if order > self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: order });
        }
        Ok(TruncatedEGF::from_coeffs(self.coeffs[..=order].to_vec()))
    }

    fn same_order(&self, other: &TruncatedEGF) -> Result<usize> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(self.order())
    }

    pub fn add(&self, other: &TruncatedEGF) -> Result<TruncatedEGF> {
        self.same_order(other)?;
        Ok(TruncatedEGF::from_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &TruncatedEGF) -> Result<TruncatedEGF> {
        self.same_order(other)?;
        Ok(TruncatedEGF::from_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale(&self, c: &Poly) -> TruncatedEGF {
        TruncatedEGF::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `t · f(t)`, dropping the coefficient pushed past the order.
    pub fn shift_up(&self) -> TruncatedEGF {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Poly::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        TruncatedEGF::from_coeffs(coeffs)
    }

    /// The formal derivative `d/dt`, whose top coefficient is unknown and
    /// therefore has order one less.
    pub fn derivative(&self) -> TruncatedEGF {
        if self.order() == 0 {
            return TruncatedEGF::zero(0);
        }
        TruncatedEGF::from_coeffs((1..=self.order()).map(|n| self.coeffs[n].scale(&int(n as i64))).collect())
    }

    /// Cauchy product modulo `t^{N+1}`.
    pub fn mul(&self, other: &TruncatedEGF) -> Result<TruncatedEGF> {
        let order = self.same_order(other)?;
        let mut out = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(TruncatedEGF::from_coeffs(out))
    }

    /// Inverse of a nonzero rational constant term.
    fn unit_constant(&self) -> Result<Rational> {
        match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => Ok(Rational::one() / c),
            Some(_) => Err(Error::SingularSeries),
            None => {
                Err(Error::Argument(format!("constant term {} is not a unit of the coefficient ring", self.coeffs[0])))
            }
        }
    }

    /// `1 / f` by the triangular recursion `g_n = -(1/c_0) Σ_{k=1}^n c_k g_{n-k}`.
    pub fn reciprocal(&self) -> Result<TruncatedEGF> {
        let inv0 = self.unit_constant()?;
        let order = self.order();
        let mut g: Vec<Poly> = Vec::with_capacity(order + 1);
        g.push(Poly::constant(inv0.clone()));
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &g[n - k]);
                }
            }
            g.push(acc.scale(&-inv0.clone()));
        }
        Ok(TruncatedEGF::from_coeffs(g))
    }

    /// `outer(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncatedEGF) -> Result<TruncatedEGF> {
        let order = self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Argument("inner series of a composition must have zero constant term".into()));
        }
        // Horner: c_N, then acc * h + c_{N-1}, ...
        let mut acc = TruncatedEGF::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse `r` with `h(r(t)) = t`, for `h(0) = 0` and a
    /// nonzero rational `h'(0)`.
    ///
    /// Solves `[t^n] h(r) = 0` for `n >= 2` one coefficient at a time,
    /// keeping the table `P[k][n] = [t^n] r^k` so every step is a short sum.
    pub fn revert(&self) -> Result<TruncatedEGF> {
        let order = self.order();
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible("constant term is not zero".into()));
        }
        if order == 0 {
            return Ok(TruncatedEGF::zero(0));
        }
        let h1 = match self.coeffs[1].as_constant() {
            Some(c) if !c.is_zero() => c,
            Some(_) => return Err(Error::NotInvertible("linear coefficient is zero".into())),
            None => {
                return Err(Error::NotInvertible(format!(
                    "linear coefficient {} is not a rational unit",
                    self.coeffs[1]
                )))
            }
        };
        let inv1 = Rational::one() / h1;
        let mut r = vec![Poly::zero(); order + 1];
        // powers[k][n] = [t^n] r^k, k >= 1
        let mut powers: Vec<Vec<Poly>> = vec![vec![Poly::zero(); order + 1]; order + 1];
        r[1] = Poly::constant(inv1.clone());
        powers[1][1] = r[1].clone();
        for n in 2..=order {
            let mut rest = Poly::zero();
            for k in 2..=n {
                let mut pk = Poly::zero();
                for m in 1..=(n - k + 1) {
                    if !r[m].is_zero() && !powers[k - 1][n - m].is_zero() {
                        pk += &(&r[m] * &powers[k - 1][n - m]);
                    }
                }
                if !self.coeffs[k].is_zero() {
                    rest += &(&self.coeffs[k] * &pk);
                }
                powers[k][n] = pk;
            }
            r[n] = rest.scale(&-inv1.clone());
            powers[1][n] = r[n].clone();
        }
        Ok(TruncatedEGF::from_coeffs(r))
    }

    /// `log f` for `f(0) = 1`, as `∫ f'/f`.
    pub fn log(&self) -> Result<TruncatedEGF> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Argument("log requires constant term 1".into()));
        }
        let order = self.order();
        let recip = self.reciprocal()?;
        // (f'/f) needs only orders up to N-1.
        let fprime = self.derivative();
        let recip_short = recip.truncate(fprime.order())?;
        let q = fprime.mul(&recip_short)?;
        let mut out = vec![Poly::zero(); order + 1];
        for n in 1..=order {
            out[n] = q.coeffs[n - 1].scale(&(Rational::one() / int(n as i64)));
        }
        Ok(TruncatedEGF::from_coeffs(out))
    }

    /// `exp h` for `h(0) = 0`, via `n E_n = Σ_{k=1}^n k h_k E_{n-k}`.
    pub fn exp(&self) -> Result<TruncatedEGF> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Argument("exp requires constant term 0".into()));
        }
        let order = self.order();
        let mut e: Vec<Poly> = Vec::with_capacity(order + 1);
        e.push(Poly::one());
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &e[n - k]).scale(&int(k as i64));
                }
            }
            e.push(acc.scale(&(Rational::one() / int(n as i64))));
        }
        Ok(TruncatedEGF::from_coeffs(e))
    }

    /// `f^e = exp(e log f)` for `f(0) = 1`. The exponent may be any ring
    /// element, e.g. a rational or the indeterminate `x`.
    pub fn power(&self, e: &Poly) -> Result<TruncatedEGF> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Argument("power requires constant term 1".into()));
        }
        self.log()?.scale(e).exp()
    }

    pub fn power_rational(&self, e: &Rational) -> Result<TruncatedEGF> {
        self.power(&Poly::constant(e.clone()))
    }
}
