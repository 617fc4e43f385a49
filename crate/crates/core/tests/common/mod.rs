//! Independent reference computations: plain coefficient vectors, textbook
//! recurrences, brute-force enumeration. Nothing here calls the algorithms
//! under test.
#![allow(dead_code)]

pub mod dsl;

use num_traits::{One, Zero};
use umbral::{Poly, Rational, Umbra};

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

pub fn z(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn fact(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * z(k))
}

pub fn choose(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    fact(n) / (fact(k) * fact(n - k))
}

/// Ordinary power series, truncated to its length.
pub type Series = Vec<Rational>;

pub fn mul(a: &Series, b: &Series) -> Series {
    let n = a.len().min(b.len());
    (0..n).map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum()).collect()
}

pub fn recip(a: &Series) -> Series {
    let mut r = vec![Rational::zero(); a.len()];
    r[0] = a[0].recip();
    for k in 1..a.len() {
        let s: Rational = (1..=k).map(|i| &a[i] * &r[k - i]).sum();
        r[k] = -s / &a[0];
    }
    r
}

pub fn pow(a: &Series, k: i64) -> Series {
    let mut acc = one(a.len());
    let base = if k < 0 { recip(a) } else { a.clone() };
    for _ in 0..k.abs() {
        acc = mul(&acc, &base);
    }
    acc
}

pub fn one(len: usize) -> Series {
    let mut s = vec![Rational::zero(); len];
    s[0] = Rational::one();
    s
}

/// `f(g(t))` by Horner's scheme; `g(0) = 0`.
pub fn compose(f: &Series, g: &Series) -> Series {
    assert!(g[0].is_zero());
    let n = f.len().min(g.len());
    let mut acc = vec![Rational::zero(); n];
    for c in f[..n].iter().rev() {
        acc = mul(&acc, &g[..n].to_vec());
        acc[0] += c;
    }
    acc
}

/// Compositional inverse by Lagrange: `[t^n] h^{-1} = [w^{n-1}] (w/h(w))^n / n`.
pub fn revert(h: &Series) -> Series {
    assert!(h[0].is_zero() && !h[1].is_zero());
    let len = h.len();
    let quotient: Series = (0..len).map(|k| if k + 1 < len { h[k + 1].clone() } else { Rational::zero() }).collect();
    let phi = recip(&quotient);
    let mut r = vec![Rational::zero(); len];
    for n in 1..len {
        r[n] = pow(&phi, n as i64)[n - 1].clone() / z(n as i64);
    }
    r
}

/// `exp(h)` for `h(0) = 0`, summing `h^k / k!`.
pub fn exp(h: &Series) -> Series {
    assert!(h[0].is_zero());
    let mut acc = one(h.len());
    let mut term = one(h.len());
    for k in 1..h.len() {
        term = mul(&term, h);
        for (a, t) in acc.iter_mut().zip(&term) {
            *a += t / fact(k);
        }
    }
    acc
}

/// `log(1 + h)` for `h(0) = 0`, summing `(-1)^{k+1} h^k / k`.
pub fn log1p(h: &Series) -> Series {
    assert!(h[0].is_zero());
    let mut acc = vec![Rational::zero(); h.len()];
    let mut term = one(h.len());
    for k in 1..h.len() {
        term = mul(&term, h);
        let sign = if k % 2 == 1 { z(1) } else { z(-1) };
        for (a, t) in acc.iter_mut().zip(&term) {
            *a += t * &sign / z(k as i64);
        }
    }
    acc
}

pub fn from_moments(m: &[Rational]) -> Series {
    m.iter().enumerate().map(|(n, a)| a / fact(n)).collect()
}

pub fn to_moments(s: &Series) -> Vec<Rational> {
    s.iter().enumerate().map(|(n, c)| c * fact(n)).collect()
}

pub fn minus_one(s: &Series) -> Series {
    let mut h = s.clone();
    h[0] -= Rational::one();
    h
}

pub fn plus_one(s: &Series) -> Series {
    let mut h = s.clone();
    h[0] += Rational::one();
    h
}

pub fn rationals(u: &Umbra) -> Vec<Rational> {
    u.rational_moments().expect("scalar umbra")
}

pub fn umbra(m: &[Rational]) -> Umbra {
    Umbra::from_rationals(m).expect("unital")
}

/// Bell numbers from the Bell triangle.
pub fn bell(order: usize) -> Vec<Rational> {
    let mut out = vec![z(1)];
    let mut row = vec![z(1)];
    for _ in 1..=order {
        out.push(row.last().unwrap().clone());
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let x = next.last().unwrap() + v;
            next.push(x);
        }
        row = next;
    }
    out.truncate(order + 1);
    out
}

/// Bernoulli numbers from `Σ_{k<=n} C(n+1,k) B_k = 0`, `B_1 = -1/2`.
pub fn bernoulli(order: usize) -> Vec<Rational> {
    let mut b = vec![z(1)];
    for n in 1..=order {
        let s: Rational = (0..n).map(|k| choose(n + 1, k) * &b[k]).sum();
        b.push(-s / z(n as i64 + 1));
    }
    b
}

/// `S(n,k)` from `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(max: usize) -> Vec<Vec<Rational>> {
    let mut t = vec![vec![Rational::zero(); max + 1]; max + 1];
    t[0][0] = z(1);
    for n in 1..=max {
        for k in 1..=n {
            t[n][k] = z(k as i64) * &t[n - 1][k] + &t[n - 1][k - 1];
        }
    }
    t
}

/// Signed `s(n,k)` from `s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)`.
pub fn stirling1(max: usize) -> Vec<Vec<Rational>> {
    let mut t = vec![vec![Rational::zero(); max + 1]; max + 1];
    t[0][0] = z(1);
    for n in 1..=max {
        for k in 1..=n {
            t[n][k] = &t[n - 1][k - 1] - z(n as i64 - 1) * &t[n - 1][k];
        }
    }
    t
}

pub fn fibonacci(count: usize) -> Vec<Rational> {
    let mut f = vec![z(1), z(1)];
    while f.len() < count {
        let n = f.len();
        let next = &f[n - 1] + &f[n - 2];
        f.push(next);
    }
    f.truncate(count);
    f
}

/// Set partitions of `{0..n}` by restricted growth strings, as block-size lists.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] += 1;
            go(i + 1, n, blocks, out);
            blocks[b] -= 1;
        }
        blocks.push(1);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn x() -> Poly {
    Poly::x()
}

pub fn c(r: Rational) -> Poly {
    Poly::constant(r)
}

pub fn falling(p: &Poly, n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, i| &acc * &(p - &Poly::from_int(i as i64)))
}

/// `Σ_k coeffs[k] x^k`.
pub fn poly_x(coeffs: &[Rational]) -> Poly {
    coeffs.iter().enumerate().fold(Poly::zero(), |acc, (k, a)| &acc + &Poly::monomial(a.clone(), k as u32, 0))
}
