//! The evaluation functional `E` over expression trees.
//!
//! An expression is first normalized into an umbral polynomial: a linear
//! combination of monomials in labeled atoms, with coefficients in
//! `R[x, y]`. Operator nodes (dot-products, adjoints, ...) are computed
//! into moment sequences and enter the polynomial as fresh atoms. The
//! `n`-th moment of the expression is then `E[P^n]`, where
//! `E[α^i γ^j] = a_i g_j` for distinct labels and `E[α^i α^j] = a_{i+j}`
//! for a shared one.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::expr::{Expr, ExprKind};
use crate::poly::Poly;
use crate::registry::Registry;
use crate::special::overbar;
use crate::umbra::{self, Umbra};

/// Sorted `(atom id, exponent)` pairs.
type Monomial = Vec<(usize, u32)>;

#[derive(Debug, Clone, Default, PartialEq)]
struct UmbralPoly {
    terms: BTreeMap<Monomial, Poly>,
}

impl UmbralPoly {
    fn scalar(c: Poly) -> UmbralPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        UmbralPoly { terms }
    }

    fn atom(id: usize) -> UmbralPoly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(id, 1)], Poly::one());
        UmbralPoly { terms }
    }

    fn as_scalar(&self) -> Option<Poly> {
        match self.terms.len() {
            0 => Some(Poly::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Poly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn add(&self, other: &UmbralPoly) -> UmbralPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn scale(&self, c: &Poly) -> UmbralPoly {
        let mut out = UmbralPoly::default();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d * c);
        }
        out
    }

    fn mul(&self, other: &UmbralPoly) -> UmbralPoly {
        let mut out = UmbralPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(merge(m1, m2), c1 * c2);
            }
        }
        out
    }

    fn pow(&self, k: u32) -> UmbralPoly {
        let mut acc = UmbralPoly::scalar(Poly::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out: Monomial = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ia, ea)), Some(&(ib, eb))) if ia == ib => {
                out.push((ia, ea + eb));
                i += 1;
                j += 1;
            }
            (Some(&(ia, ea)), Some(&(ib, _))) if ia < ib => {
                out.push((ia, ea));
                i += 1;
            }
            (Some(_), Some(&(ib, eb))) => {
                out.push((ib, eb));
                j += 1;
            }
            (Some(&p), None) => {
                out.push(p);
                i += 1;
            }
            (None, Some(&p)) => {
                out.push(p);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// The value of `e` when it involves no umbrae at all: numbers,
/// indeterminates, and operations that keep those scalar.
pub fn scalar_value(e: &Expr) -> Option<Poly> {
    use ExprKind::*;
    match &e.kind {
        Number(r) => Some(Poly::constant(r.clone())),
        Indeterminate(v) => Some(Poly::var(*v)),
        Sum(l, r) => Some(&scalar_value(l)? + &scalar_value(r)?),
        Product(l, r) => Some(&scalar_value(l)? * &scalar_value(r)?),
        // c.d for scalars is the scalar cd: f = e^{dt}, f^c = e^{cdt}.
        Dot(l, r) => Some(&scalar_value(l)? * &scalar_value(r)?),
        ScalarMul(c, e) => Some(scalar_value(e)?.scale(c)),
        Power(e, k) => Some(scalar_value(e)?.pow(*k)),
        InverseDot(e) => Some(-scalar_value(e)?),
        _ => None,
    }
}

/// Degree of `e` as a polynomial in its atoms; opaque operator nodes
/// count as one atom.
fn degree(e: &Expr) -> usize {
    use ExprKind::*;
    if scalar_value(e).is_some() {
        return 0;
    }
    match &e.kind {
        Atom { .. } => 1,
        Sum(l, r) => degree(l).max(degree(r)),
        Product(l, r) => degree(l) + degree(r),
        ScalarMul(_, e) => degree(e),
        Power(e, k) => degree(e) * (*k as usize),
        _ => 1,
    }
}

struct Scope<'a> {
    registry: &'a Registry,
    atom_order: usize,
    atoms: Vec<Umbra>,
    labels: HashMap<(String, u32), usize>,
}

impl Scope<'_> {
    fn opaque(&mut self, u: Umbra) -> UmbralPoly {
        self.atoms.push(u);
        UmbralPoly::atom(self.atoms.len() - 1)
    }

    fn sub_umbra(&self, e: &Expr) -> Result<Umbra> {
        evaluate(e, self.atom_order, self.registry)
    }

    fn poly_of(&mut self, e: &Expr) -> Result<UmbralPoly> {
        use ExprKind::*;
        if let Some(c) = scalar_value(e) {
            return Ok(UmbralPoly::scalar(c));
        }
        Ok(match &e.kind {
            Atom { name, primes } => {
                let key = (name.clone(), *primes);
                match self.labels.get(&key) {
                    Some(&id) => UmbralPoly::atom(id),
                    None => {
                        let u = self.registry.resolve(name, self.atom_order)?;
                        let p = self.opaque(u);
                        self.labels.insert(key, self.atoms.len() - 1);
                        p
                    }
                }
            }
            Sum(l, r) => self.poly_of(l)?.add(&self.poly_of(r)?),
            Product(l, r) => self.poly_of(l)?.mul(&self.poly_of(r)?),
            ScalarMul(c, e) => self.poly_of(e)?.scale(&Poly::constant(c.clone())),
            Power(e, k) => self.poly_of(e)?.pow(*k),
            InverseDot(e) => {
                let u = umbra::inverse_dot(&self.sub_umbra(e)?)?;
                self.opaque(u)
            }
            Dot(l, r) => {
                let right = self.sub_umbra(r)?;
                let u = match scalar_value(l) {
                    Some(c) => umbra::dot_scalar(&c, &right)?,
                    None => umbra::dot_umbra(&self.sub_umbra(l)?, &right)?,
                };
                self.opaque(u)
            }
            DotPower(e, n) => {
                let u = umbra::dot_power(&self.sub_umbra(e)?, *n);
                self.opaque(u)
            }
            CompInv(e) => {
                let u = umbra::comp_inverse(&self.sub_umbra(e)?)?;
                self.opaque(u)
            }
            Adjoint(e) => {
                let u = umbra::adjoint(&self.sub_umbra(e)?)?;
                self.opaque(u)
            }
            Deriv(e) => {
                let u = umbra::derivative_umbra(&self.sub_umbra(e)?);
                self.opaque(u)
            }
            DisjointSum(l, r) => {
                let u = umbra::disjoint_sum(&self.sub_umbra(l)?, &self.sub_umbra(r)?)?;
                self.opaque(u)
            }
            DisjointDiff(l, r) => {
                let u = umbra::disjoint_diff(&self.sub_umbra(l)?, &self.sub_umbra(r)?)?;
                self.opaque(u)
            }
            Bar(e) => {
                let src = evaluate(e, self.atom_order + 1, self.registry)?;
                let u = overbar(&src)?;
                self.opaque(u)
            }
            Fresh(e) => {
                let u = self.sub_umbra(e)?;
                self.opaque(u)
            }
            Number(_) | Indeterminate(_) => unreachable!("handled by scalar_value"),
        })
    }

    fn expectation(&self, p: &UmbralPoly) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &p.terms {
            let mut term = c.clone();
            for &(id, e) in m {
                term = &term * self.atoms[id].moment(e as usize);
                if term.is_zero() {
                    break;
                }
            }
            acc += &term;
        }
        acc
    }
}

/// Moments `E[e^0], ..., E[e^order]` of the umbra denoted by `e`.
pub fn evaluate(e: &Expr, order: usize, registry: &Registry) -> Result<Umbra> {
    let atom_order = order * degree(e).max(1);
    let mut scope = Scope { registry, atom_order, atoms: Vec::new(), labels: HashMap::new() };
    let p = scope.poly_of(e)?;
    if let Some(c) = p.as_scalar() {
        return Ok(Umbra::scalar(&c, order));
    }
    if p.terms.len() == 1 {
        if let Some((m, c)) = p.terms.iter().next() {
            if m.len() == 1 && m[0].1 == 1 && c.is_one() {
                return scope.atoms[m[0].0].truncate(order);
            }
        }
    }
    let mut moments = Vec::with_capacity(order + 1);
    moments.push(Poly::one());
    let mut power = UmbralPoly::scalar(Poly::one());
    for _ in 1..=order {
        power = power.mul(&p);
        moments.push(scope.expectation(&power));
    }
    Umbra::new(moments)
}
