//! Binomials, falling factorials, integer partitions, Bell polynomials and
//! the classical Stirling triangles.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{factorial, int, Rational, Ring};

/// `C(n, k)` for an integer `n` (possibly negative), via the falling factorial.
pub fn binomial(n: i64, k: i64) -> Result<Rational> {
    if k < 0 {
        return Err(Error::Argument(format!("binomial lower index {k} is negative")));
    }
    Ok(generalized_binomial(&int(n), k as usize))
}

/// `C(p, k) = (p)_k / k!` for any ring element, e.g. `C(x + 3, 2)`.
pub fn generalized_binomial<T: Ring>(p: &T, k: usize) -> T {
    falling_factorial(p, k).scale(&(Rational::one() / factorial(k)))
}

pub fn binomial_poly(p: &Poly, k: usize) -> Poly {
    generalized_binomial(p, k)
}

/// `(a)_n = a (a - 1) ... (a - n + 1)`; `(a)_0 = 1`.
pub fn falling_factorial<T: Ring>(a: &T, n: usize) -> T {
    let mut acc = T::one();
    for i in 0..n {
        acc = acc * (a.clone() - T::from_int(i as i64));
    }
    acc
}

/// Table of binomial coefficients `C(n, k)` for `0 <= k <= n <= max`.
pub fn pascal(max: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![Rational::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// An integer partition `λ = (λ_1 >= λ_2 >= ... >= λ_t)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::Argument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `ν_λ`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `r[j]` = number of parts equal to `j`, for `j = 0..=size` (`r[0] = 0`).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut r = vec![0; self.size() + 1];
        for &p in &self.parts {
            r[p] += 1;
        }
        r
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// All partitions of `i` in reverse-lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(i: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(i, i, &mut Vec::new(), &mut out);
    out
}

/// `d_λ = i! / (r_1! r_2! ...) · 1 / ((1!)^{r_1} (2!)^{r_2} ...)`, the number of
/// set partitions of an `i`-set whose block sizes are the parts of `λ`.
pub fn partition_coefficient(lambda: &Partition) -> Result<Rational> {
    if lambda.length() == 0 {
        return Err(Error::Argument("partition coefficient of the empty partition".into()));
    }
    let mut denom = Rational::one();
    for (j, &r) in lambda.multiplicities().iter().enumerate().skip(1) {
        if r > 0 {
            denom *= factorial(r);
            for _ in 0..r {
                denom *= factorial(j);
            }
        }
    }
    Ok(factorial(lambda.size()) / denom)
}

/// Table `B[n][k]` of partial Bell polynomials `B_{n,k}(a_1, a_2, ...)` for
/// `0 <= k <= n <= max`, where `a[m]` is `a_m` (`a[0]` is ignored).
///
/// Uses `B_{n,k} = Σ_{m=1}^{n-k+1} C(n-1, m-1) a_m B_{n-m,k-1}`.
pub fn bell_partial_table<T: Ring>(max: usize, a: &[T]) -> Vec<Vec<T>> {
    assert!(a.len() > max || max == 0, "need a_1..a_{max}");
    let binom = pascal(max);
    let mut table: Vec<Vec<T>> = vec![vec![T::zero(); max + 1]; max + 1];
    table[0][0] = T::one();
    for n in 1..=max {
        for k in 1..=n {
            let mut acc = T::zero();
            for m in 1..=(n - k + 1) {
                let prev = &table[n - m][k - 1];
                if prev.is_zero() || a[m].is_zero() {
                    continue;
                }
                acc = acc + (a[m].clone() * prev.clone()).scale(&binom[n - 1][m - 1]);
            }
            table[n][k] = acc;
        }
    }
    table
}

fn check_bell_args<T>(i: usize, j: usize, a: &[T]) -> Result<()> {
    if j < 1 || j > i {
        return Err(Error::Argument(format!("B_{{{i},{j}}} requires 1 <= j <= i")));
    }
    if a.len() < i - j + 1 {
        return Err(Error::Argument(format!("B_{{{i},{j}}} needs a_1..a_{}, got {} values", i - j + 1, a.len())));
    }
    Ok(())
}

/// Partial Bell polynomial `B_{i,j}(a_1, ..., a_{i-j+1})`; `a[0]` is `a_1`.
pub fn bell_partial<T: Ring>(i: usize, j: usize, a: &[T]) -> Result<T> {
    check_bell_args(i, j, a)?;
    let shifted = shift_in(a, i);
    Ok(bell_partial_table(i, &shifted)[i][j].clone())
}

/// The same polynomial summed directly over partitions of `i` with `j` parts.
pub fn bell_partial_by_partitions<T: Ring>(i: usize, j: usize, a: &[T]) -> Result<T> {
    check_bell_args(i, j, a)?;
    let mut acc = T::zero();
    for lambda in partitions_of(i).into_iter().filter(|l| l.length() == j) {
        let mut term = T::one();
        for &p in lambda.parts() {
            term = term * a[p - 1].clone();
        }
        acc = acc + term.scale(&partition_coefficient(&lambda)?);
    }
    Ok(acc)
}

/// Complete Bell polynomial `Y_i(a_1, ..., a_i) = Σ_j B_{i,j}`; `a[0]` is `a_1`.
pub fn bell_complete<T: Ring>(i: usize, a: &[T]) -> Result<T> {
    if i < 1 {
        return Err(Error::Argument("Y_i requires i >= 1".into()));
    }
    if a.len() < i {
        return Err(Error::Argument(format!("Y_{i} needs a_1..a_{i}")));
    }
    let table = bell_partial_table(i, &shift_in(a, i));
    Ok(table[i][1..=i].iter().cloned().fold(T::zero(), |s, v| s + v))
}

fn shift_in<T: Ring>(a: &[T], i: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(i + 1);
    out.push(T::zero());
    for m in 0..i {
        out.push(a.get(m).cloned().unwrap_or_else(T::zero));
    }
    out
}

/// Stirling numbers of the second kind, `S[n][k]` for `0 <= k <= n <= max`.
pub fn stirling_second_table(max: usize) -> Vec<Vec<Rational>> {
    let mut s = vec![vec![Rational::zero(); max + 1]; max + 1];
    s[0][0] = Rational::one();
    for n in 1..=max {
        for k in 1..=n {
            s[n][k] = &s[n - 1][k - 1] + &s[n - 1][k] * int(k as i64);
        }
    }
    s
}

/// Signed Stirling numbers of the first kind, `s[n][k]`.
pub fn stirling_first_table(max: usize) -> Vec<Vec<Rational>> {
    let mut s = vec![vec![Rational::zero(); max + 1]; max + 1];
    s[0][0] = Rational::one();
    for n in 1..=max {
        for k in 1..=n {
            s[n][k] = &s[n - 1][k - 1] - &s[n - 1][k] * int(n as i64 - 1);
        }
    }
    s
}

/// `S(n, k)`; zero when `k > n`.
pub fn stirling_second_classical(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    stirling_second_table(n)[n][k].clone()
}

/// Signed `s(n, k)`; zero when `k > n`.
pub fn stirling_first_classical(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    stirling_first_table(n)[n][k].clone()
}

/// Bell numbers `B_0..=B_max`.
pub fn bell_numbers(max: usize) -> Vec<Rational> {
    let binom = pascal(max);
    let mut b = vec![Rational::one()];
    for n in 0..max {
        let next = (0..=n).map(|k| &binom[n][k] * &b[k]).sum();
        b.push(next);
    }
    b
}
