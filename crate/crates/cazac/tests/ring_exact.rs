//! Exactness properties of the integer-arithmetic kernel.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use cazac::ring::{
    binomial_mod, cyclotomic, halved_power_congruence, vanishing_sum_check, IntPoly,
};

fn divisors(s: u64) -> Vec<u64> {
    (1..=s).filter(|d| s % d == 0).collect()
}

#[test]
fn cyclotomic_product_recovers_power_minus_one() {
    for s in 1..=200u64 {
        let mut prod = IntPoly::from_coeffs(vec![BigInt::one()]);
        for d in divisors(s) {
            prod = prod.mul(&cyclotomic(d));
        }
        assert_eq!(prod, IntPoly::power_minus_one(s), "index {s}");
    }
}

#[test]
fn cyclotomic_degree_is_totient() {
    let totient = |s: u64| (1..=s).filter(|&k| num_integer::gcd(k, s) == 1).count();
    for s in 1..=128u64 {
        assert_eq!(cyclotomic(s).degree(), Some(totient(s)), "index {s}");
    }
}

#[test]
fn binomial_matches_exact_arithmetic() {
    let mut pascal = vec![vec![BigInt::one()]];
    for m in 1..=64usize {
        let prev = &pascal[m - 1];
        let mut row = vec![BigInt::one(); m + 1];
        for k in 1..m {
            row[k] = &prev[k - 1] + &prev[k];
        }
        pascal.push(row);
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        for m in 0..=64u64 {
            for k in 0..=m {
                let expect = (&pascal[m as usize][k as usize] % BigInt::from(p))
                    .to_u64()
                    .unwrap();
                assert_eq!(binomial_mod(m, k, p).unwrap(), expect, "C({m},{k}) mod {p}");
            }
        }
    }
}

#[test]
fn congruence_holds_across_sweep() {
    for p in [2u64, 3, 5, 7, 11] {
        for m in 1..=40u64 {
            for n in 1..=40u64 {
                assert!(
                    halved_power_congruence(m, n, p).unwrap(),
                    "m={m} n={n} p={p}"
                );
            }
        }
    }
}

fn numeric_sum(exponents: &[u64], m: u64) -> f64 {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for &e in exponents {
        let angle = -2.0 * PI * e as f64 / m as f64;
        re += angle.cos();
        im += angle.sin();
    }
    (re * re + im * im).sqrt()
}

proptest! {
    #[test]
    fn vanishing_check_agrees_with_numeric_sum(
        m in 1u64..=128,
        picks in proptest::collection::vec(0u64..1_000_000, 0..=64),
    ) {
        let exponents: Vec<u64> = picks.iter().map(|&e| e % m).collect();
        let exact = vanishing_sum_check(&exponents, m).unwrap();
        prop_assert_eq!(exact, numeric_sum(&exponents, m) < 1e-9);
    }

    #[test]
    fn full_orbits_vanish(m in 2u64..=96, reps in 1u64..=3, shift in 0u64..=95) {
        let mut exponents = Vec::new();
        for _ in 0..reps {
            exponents.extend((0..m).map(|e| (e + shift) % m));
        }
        prop_assert!(vanishing_sum_check(&exponents, m).unwrap());
    }
}

#[test]
fn counting_polynomial_divisibility_is_sharp() {
    let phi = cyclotomic(12);
    let a = phi.mul(&IntPoly::from_i64(&[3, 0, 2, 1]));
    assert!(phi.divides(&a));
    let mut coeffs: Vec<BigInt> = a.coeffs().to_vec();
    coeffs[0] += BigInt::one();
    assert!(!phi.divides(&IntPoly::from_coeffs(coeffs)));
    assert!(cyclotomic(1).divides(&IntPoly::zero()));
}
