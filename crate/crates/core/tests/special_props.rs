mod common;

use common::*;
use num_traits::{One, Zero};
use umbral::poly::Var;
use umbral::sheffer::associated_moments;
use umbral::special::{
    abel_identity_check, abel_polynomials, bell_expansion, bell_expansion_general, bernoulli_numbers,
    exponential_polynomials, fibonacci_bar, lagrange_inversion, lagrange_inversion_general, overbar, poisson_charlier,
    polynomial_expand_abel, recurrence_example_backward, recurrence_example_bernoulli, recurrence_example_fibonacci,
    stirling_first_umbral, stirling_second_umbral,
};
use umbral::umbra::{comp_inverse, derivative_umbra, dot, dot_umbra, inverse_dot, named, scale_moments};
use umbral::{Poly, Rational, Umbra};

fn gammas(order: usize) -> Vec<(&'static str, Umbra)> {
    vec![("u", named::u(order)), ("chi", named::chi(order)), ("bern", named::bern(order)), ("eps", named::eps(order))]
}

#[test]
fn abel_polynomials_are_associated_to_the_derivative_umbra() {
    for (name, gamma) in gammas(12) {
        let abel = abel_polynomials(&gamma, 12).unwrap();
        let assoc = associated_moments(&derivative_umbra(&gamma)).unwrap();
        assert_eq!(abel.polynomials, assoc.polynomials, "{name}");
    }
    // x (x - n)^{n-1} for γ = u
    let abel = abel_polynomials(&named::u(8), 8).unwrap();
    for n in 1..=8 {
        let expected = &x() * &(&x() - &Poly::from_int(n as i64)).pow(n as u32 - 1);
        assert_eq!(abel.get(n), &expected);
    }
}

#[test]
fn lagrange_inversion_matches_series_reversion() {
    for (name, gamma) in gammas(10).into_iter().filter(|(n, _)| *n != "eps") {
        let d = derivative_umbra(&gamma);
        let reverted = to_moments(&revert(&minus_one(&from_moments(&rationals(&d)))));
        for n in 1..=10 {
            let value = lagrange_inversion(&gamma, n).unwrap();
            assert_eq!(value.as_constant().unwrap(), reverted[n], "{name}, n = {n}");
        }
    }
    let values: Vec<Rational> =
        (1..=5).map(|n| lagrange_inversion(&named::u(5), n).unwrap().as_constant().unwrap()).collect();
    assert_eq!(values, [z(1), z(-2), z(9), z(-64), z(625)]);
    let minus_bern = dot(-1, &named::bern(3)).unwrap();
    assert_eq!(lagrange_inversion(&minus_bern, 3).unwrap(), Poly::from_int(2));
}

#[test]
fn generalized_lagrange_inversion() {
    for g1 in [z(2), q(1, 2), z(-1)] {
        for base in [named::u(8), named::bell(8)] {
            let gamma = scale_moments(&g1, &base);
            let reverted = to_moments(&revert(&minus_one(&from_moments(&rationals(&gamma)))));
            for n in 1..=8 {
                let value = lagrange_inversion_general(&gamma, n).unwrap().as_constant().unwrap();
                assert_eq!(value, g1.pow(n as i32) * &reverted[n], "g1 = {g1}, n = {n}");
            }
        }
    }
}

#[test]
fn stirling_numbers_umbrally() {
    let (s1, s2) = (stirling1(10), stirling2(10));
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(stirling_second_umbral(n, k).unwrap(), s2[n][k], "S({n},{k})");
            assert_eq!(stirling_first_umbral(n, k).unwrap(), s1[n][k], "s({n},{k})");
        }
    }
    for n in 1..=10 {
        let sign = if n % 2 == 1 { z(1) } else { z(-1) };
        assert_eq!(stirling_first_umbral(n, 1).unwrap(), sign * fact(n - 1));
    }
}

#[test]
fn bell_expansion_two_paths() {
    let gammas = [named::u(10), named::chi(10), dot(-1, &named::bern(10)).unwrap()];
    for gamma in &gammas {
        for n in 0..=10 {
            bell_expansion(gamma, n).unwrap();
        }
    }
    let s2 = stirling2(10);
    for n in 0..=10 {
        assert_eq!(bell_expansion(&gammas[2], n).unwrap(), poly_x(&s2[n][..=n]));
    }
    assert_eq!(exponential_polynomials(10).polynomials, (0..=10).map(|n| poly_x(&s2[n][..=n])).collect::<Vec<_>>());
    let two_u = umbra(&(0..=6).map(|n| z(1 << n)).collect::<Vec<_>>());
    // exp(x(e^{2t} - 1)) has coefficients 2^n Σ S(n,k) x^k
    for n in 0..=6 {
        let expected: Vec<Rational> = s2[n][..=n].iter().map(|s| s * z(1 << n)).collect();
        assert_eq!(bell_expansion_general(&two_u, n).unwrap(), poly_x(&expected));
    }
}

#[test]
fn derivative_umbra_generating_function() {
    for alpha in [named::u(12), named::bell(12), named::bern(12), named::chi(12)] {
        let f = from_moments(&rationals(&alpha));
        let fd = from_moments(&rationals(&derivative_umbra(&alpha)));
        let mut expected = vec![z(1)];
        expected.extend(f[..12].iter().cloned());
        assert_eq!(fd, expected);
        // (f(α_D,t) - 1)^k = t^k f(α,t)^k
        for k in 1..=3 {
            let lhs = pow(&minus_one(&fd), k);
            let fk = pow(&f, k);
            for (i, v) in lhs.iter().enumerate() {
                let rhs = if i >= k as usize { fk[i - k as usize].clone() } else { z(0) };
                assert_eq!(v, &rhs);
            }
        }
    }
}

#[test]
fn bernoulli_factorial_umbrae() {
    let inv_bern = inverse_dot(&named::bern(12)).unwrap();
    assert_eq!(derivative_umbra(&inv_bern).moments(), named::u(12).moments());
    let bern_chi = dot_umbra(&named::bern(12), &named::chi(12)).unwrap();
    assert_eq!(derivative_umbra(&bern_chi).moments(), named::uinv(12).moments());
    assert_eq!(bernoulli_numbers(12), bernoulli(12));
}

#[test]
fn overbar_moments() {
    let gamma = umbra(&[z(1), z(2), z(6), z(12), z(40)]);
    let bar = overbar(&gamma).unwrap();
    // g_{n+1} / (g_1 (n+1))
    assert_eq!(rationals(&bar), [z(1), q(6, 4), z(2), z(5)]);
    assert_eq!(comp_inverse(&named::chi(4)).unwrap().moments(), named::chi(4).moments());
}

#[test]
fn abel_identity_and_expansion() {
    for (name, gamma) in gammas(6) {
        let report = abel_identity_check(&gamma, 6).unwrap();
        assert!(report.passed, "{name}: {:?}", report.violation);
        let p = poly_x(&[z(3), q(-1, 2), z(0), z(2), z(1)]);
        let e = polynomial_expand_abel(&p, &gamma).unwrap();
        assert_eq!(e.reconstruction, p);
    }
}

#[test]
fn poisson_charlier_closed_form() {
    assert_eq!(poisson_charlier(2, &z(1)).unwrap(), poly_x(&[z(1), z(-3), z(1)]));
    assert!(poisson_charlier(2, &z(0)).is_err());
}

fn shift(p: &Poly, by: i64) -> Poly {
    p.substitute(Var::X, &(&x() + &Poly::from_int(by)))
}

#[test]
fn recurrence_examples() {
    let (zero, unit) = (Rational::zero(), Rational::one());

    let ex1 = recurrence_example_bernoulli(8).unwrap();
    assert!(ex1.passed(), "{:?}", ex1.checks);
    let s = &ex1.sequence.polynomials;
    assert_eq!(s[1], poly_x(&[q(1, 2), z(1)]));
    for n in 1..=8 {
        assert_eq!(&shift(&s[n], 1) - &s[n], s[n - 1]);
        assert_eq!(s[n].definite_integral(Var::X, &zero, &unit), Poly::one());
    }

    let ex2 = recurrence_example_backward(8).unwrap();
    assert!(ex2.passed(), "{:?}", ex2.checks);
    let s = &ex2.sequence.polynomials;
    for n in 1..=8 {
        assert_eq!(s[n], &shift(&s[n], -1) + &s[n - 1]);
        // s_n(1-n) = Σ_{i<n} s_i(n-2i)
        let lhs = s[n].eval(Var::X, &z(1 - n as i64));
        let rhs = (0..n).fold(Poly::zero(), |acc, i| &acc + &s[i].eval(Var::X, &z(n as i64 - 2 * i as i64)));
        assert_eq!(lhs, rhs, "n = {n}");
    }
    let fib = from_moments(&rationals(&fibonacci_bar(8)));
    let product = mul(&fib, &vec![z(1), z(-1), z(-1), z(0), z(0), z(0), z(0), z(0), z(0)]);
    assert_eq!(product, one(9));

    let ex3 = recurrence_example_fibonacci(8).unwrap();
    assert!(ex3.passed(), "{:?}", ex3.checks);
    let g = &ex3.sequence.polynomials;
    // G_n(x) = F_n(x + n)
    for n in 1..=8 {
        assert_eq!(g[n], &shift(&g[n], -1) + &shift(&g[n - 1], -1), "n = {n}");
    }
    let diagonal: Vec<Rational> = g.iter().map(|p| p.eval(Var::X, &zero).as_constant().unwrap()).collect();
    assert_eq!(diagonal, fibonacci(9));
    let f2_at_zero = ex3.observations.iter().find(|o| o.label == "F_2(0)").unwrap();
    assert_eq!(f2_at_zero.value, "3");
}
