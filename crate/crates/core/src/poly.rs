//! Dense polynomials in the two indeterminates `x` and `y` with rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::scalar::{format_rational, int, parse_rational, Rational, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

/// Exponent pair `(deg_x, deg_y)`.
pub type Exponents = (u32, u32);

/// Polynomial in `R[x, y]`. Zero coefficients are never stored, so a
/// constant polynomial holds at most the `(0, 0)` key.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Poly {
        Poly::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Poly {
        Poly::constant(int(n))
    }

    pub fn monomial(c: Rational, dx: u32, dy: u32) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dx, dy), c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Poly {
        match v {
            Var::X => Poly::monomial(Rational::one(), 1, 0),
            Var::Y => Poly::monomial(Rational::one(), 0, 1),
        }
    }

    pub fn x() -> Poly {
        Poly::var(Var::X)
    }

    pub fn y() -> Poly {
        Poly::var(Var::Y)
    }

    /// Univariate polynomial in `x` from coefficients of `1, x, x^2, ...`.
    pub fn from_x_coeffs(coeffs: &[Rational]) -> Poly {
        let mut p = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term((k as u32, 0), c.clone());
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rational {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(dx, dy)| match v {
                Var::X => dx,
                Var::Y => dy,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(dx, dy)| dx + dy).max().unwrap_or(0)
    }

    /// Coefficient of `x^k`, as a polynomial in `y`.
    pub fn coeff_x(&self, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (&(dx, dy), c) in &self.terms {
            if dx == k {
                out.add_term((0, dy), c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, key: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (&(dx, dy), c) in &self.terms {
            match v {
                Var::X if dx > 0 => out.add_term((dx - 1, dy), c * int(dx as i64)),
                Var::Y if dy > 0 => out.add_term((dx, dy - 1), c * int(dy as i64)),
                _ => {}
            }
        }
        out
    }

    /// The antiderivative with zero constant of integration.
    pub fn antiderivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (&(dx, dy), c) in &self.terms {
            match v {
                Var::X => out.add_term((dx + 1, dy), c / int(dx as i64 + 1)),
                Var::Y => out.add_term((dx, dy + 1), c / int(dy as i64 + 1)),
            }
        }
        out
    }

    /// `∫_lo^hi p dv`. The result is constant when `p` depends only on `v`.
    pub fn definite_integral(&self, v: Var, lo: &Rational, hi: &Rational) -> Poly {
        let anti = self.antiderivative(v);
        anti.eval(v, hi) - anti.eval(v, lo)
    }

    pub fn eval(&self, v: Var, at: &Rational) -> Poly {
        self.substitute(v, &Poly::constant(at.clone()))
    }

    /// Replaces every occurrence of `v` by `q`.
    pub fn substitute(&self, v: Var, q: &Poly) -> Poly {
        let max = self.degree(v) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(Poly::one());
        for i in 1..=max {
            let next = &powers[i - 1] * q;
            powers.push(next);
        }
        let mut out = Poly::zero();
        for (&(dx, dy), c) in &self.terms {
            let (k, rest) = match v {
                Var::X => (dx, Poly::monomial(c.clone(), 0, dy)),
                Var::Y => (dy, Poly::monomial(c.clone(), dx, 0)),
            };
            out += &(&rest * &powers[k as usize]);
        }
        out
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    /// Renders the polynomial as a LaTeX fragment.
    pub fn to_latex(&self) -> String {
        render(
            self,
            |c| {
                if c.is_integer() {
                    c.to_string()
                } else {
                    format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
                }
            },
            "",
            |name, e| {
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{{{e}}}")
                }
            },
        )
    }
}

fn ordered_terms(p: &Poly) -> Vec<(Exponents, Rational)> {
    let mut terms: Vec<_> = p.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
    terms.sort_by_key(|&((a, b), _)| std::cmp::Reverse((a + b, a)));
    terms
}

fn render(p: &Poly, coef: impl Fn(&Rational) -> String, times: &str, power: impl Fn(&str, u32) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((dx, dy), c)) in ordered_terms(p).into_iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        if dx > 0 {
            factors.push(power("x", dx));
        }
        if dy > 0 {
            factors.push(power("y", dy));
        }
        let sep = if times.is_empty() { " " } else { times };
        if factors.is_empty() {
            out.push_str(&coef(&mag));
        } else if mag.is_one() {
            out.push_str(&factors.join(sep));
        } else {
            out.push_str(&coef(&mag));
            out.push_str(sep);
            out.push_str(&factors.join(sep));
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text =
            render(self, format_rational, "*", |name, e| if e == 1 { name.to_string() } else { format!("{name}^{e}") });
        f.write_str(&text)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl From<Rational> for Poly {
    fn from(r: Rational) -> Poly {
        Poly::constant(r)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::from_int(n)
    }
}

impl Zero for Poly {
    fn zero() -> Poly {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Poly {
        Poly::constant(Rational::one())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(p, q), d) in &rhs.terms {
                out.add_term((a + p, b + q), c * d);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl Ring for Poly {
    fn from_rational(r: Rational) -> Poly {
        Poly::constant(r)
    }

    fn scale(&self, r: &Rational) -> Poly {
        Poly::scale(self, r)
    }
}

fn key_string((dx, dy): Exponents) -> String {
    format!("x^{dx}*y^{dy}")
}

fn parse_key(key: &str) -> Option<Exponents> {
    let (xs, ys) = key.split_once('*')?;
    let dx = xs.strip_prefix("x^")?.parse().ok()?;
    let dy = ys.strip_prefix("y^")?.parse().ok()?;
    Some((dx, dy))
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&key_string(*k), &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Poly, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut p = Poly::zero();
        for (k, v) in raw {
            let key = parse_key(&k).ok_or_else(|| de::Error::custom(format!("bad monomial key `{k}`")))?;
            let c = parse_rational(&v).map_err(de::Error::custom)?;
            p.add_term(key, c);
        }
        Ok(p)
    }
}
