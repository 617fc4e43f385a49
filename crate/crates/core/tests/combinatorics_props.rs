mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use umbral::combinatorics::{
    bell_complete, bell_partial, bell_partial_by_partitions, binomial, partition_coefficient, partitions_of,
    stirling_first_table, stirling_second_table,
};
use umbral::poly::Var;
use umbral::{Poly, Rational};

#[test]
fn bell_polynomials_count_set_partitions() {
    let ones = vec![Rational::one(); 11];
    for i in 1..=10 {
        let count = z(set_partitions(i).len() as i64);
        let partial: Rational = (1..=i).map(|j| bell_partial(i, j, &ones).unwrap()).sum();
        assert_eq!(partial, count, "i = {i}");
        assert_eq!(bell_complete(i, &ones).unwrap(), count, "i = {i}");
    }
}

#[test]
fn partial_bell_by_block_count_matches_enumeration() {
    // B_{i,j}(1,1,...) counts set partitions of an i-set into j blocks.
    let ones = vec![Rational::one(); 9];
    for i in 1..=8 {
        let parts = set_partitions(i);
        for j in 1..=i {
            let count = parts.iter().filter(|p| p.len() == j).count();
            assert_eq!(bell_partial(i, j, &ones).unwrap(), z(count as i64), "B({i},{j})");
        }
    }
}

#[test]
fn partition_sum_matches_bell_recurrence_symbolically() {
    // a_k = y^k x: symbolic enough that distinct monomials cannot cancel.
    let a: Vec<Poly> = (0..=10).map(|k| Poly::monomial(Rational::one(), 1, k)).collect();
    for i in 1..=10 {
        for j in 1..=i {
            let mut by_partitions = Poly::zero();
            for lambda in partitions_of(i).into_iter().filter(|l| l.length() == j) {
                let mut term = Poly::constant(partition_coefficient(&lambda).unwrap());
                for &p in lambda.parts() {
                    term = &term * &a[p];
                }
                by_partitions += &term;
            }
            assert_eq!(bell_partial(i, j, &a[1..]).unwrap(), by_partitions, "B({i},{j})");
            assert_eq!(bell_partial_by_partitions(i, j, &a[1..]).unwrap(), by_partitions);
        }
    }
}

#[test]
fn stirling_triangles_are_mutually_inverse() {
    let s1 = stirling_first_table(10);
    let s2 = stirling_second_table(10);
    for n in 0..=10 {
        for m in 0..=10 {
            let sum: Rational = (0..=10).map(|k| &s1[n][k] * &s2[k][m]).sum();
            let delta = if n == m { Rational::one() } else { Rational::zero() };
            assert_eq!(sum, delta, "({n},{m})");
        }
    }
    assert_eq!(s1, stirling1(10));
    assert_eq!(s2, stirling2(10));
}

#[test]
fn pascal_rule() {
    for n in 1..=20i64 {
        for k in 1..=n {
            assert_eq!(binomial(n, k).unwrap(), binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap());
            assert_eq!(binomial(n, k).unwrap(), choose(n as usize, k as usize));
        }
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, d)| q(p, d))
}

proptest! {
    #[test]
    fn integral_of_derivative_is_difference(coeffs in prop::collection::vec(small_rational(), 1..=9)) {
        let p = poly_x(&coeffs);
        let (zero, one) = (Rational::zero(), Rational::one());
        let lhs = p.derivative(Var::X).definite_integral(Var::X, &zero, &one);
        let rhs = &p.eval(Var::X, &one) - &p.eval(Var::X, &zero);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn negative_binomial_matches_falling_factorial(n in -15i64..=15, k in 0i64..=8) {
        let expected = (0..k).fold(Rational::one(), |acc, i| acc * z(n - i)) / fact(k as usize);
        prop_assert_eq!(binomial(n, k).unwrap(), expected);
    }
}
