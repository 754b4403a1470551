//! Exact integer arithmetic: factorization, binomial coefficients modulo a
//! prime, integer-coefficient polynomials, cyclotomic polynomials, and the
//! exact vanishing test for sums of roots of unity.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const FACTORIZE_LIMIT: u64 = 1 << 40;
const TRIAL_LIMIT: u64 = 1 << 20;

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// The factored integer.
    pub n: u64,
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Prime divisors in ascending order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// Exponent of `p` in `n` (zero when `p` does not divide `n`).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// True when every prime divisor of `n` divides `a`.
    pub fn radical_divides(&self, a: u64) -> bool {
        self.primes().all(|q| a % q == 0)
    }

    /// True when `n` has no repeated prime factor.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

/// Factor a positive integer up to 2^40 into prime powers.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("factorize: n must be positive".into()));
    }
    if n > FACTORIZE_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "factorize: {n} exceeds the supported bound 2^40"
        )));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut q: u64 = 2;
    while q <= TRIAL_LIMIT && q * q <= rest {
        if rest % q == 0 {
            let mut e = 0;
            while rest % q == 0 {
                rest /= q;
                e += 1;
            }
            factors.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let mut stack = vec![rest];
        let mut extra = Vec::new();
        while let Some(m) = stack.pop() {
            if is_prime(m) {
                extra.push(m);
            } else {
                let f = pollard_rho(m);
                stack.push(f);
                stack.push(m / f);
            }
        }
        extra.sort_unstable();
        for m in extra {
            match factors.last_mut() {
                Some(last) if last.0 == m => last.1 += 1,
                _ => factors.push((m, 1)),
            }
        }
    }
    Ok(Factorization { n, factors })
}

/// Deterministic Miller-Rabin primality test, valid for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of an odd composite.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n > 3 && n % 2 == 1 && !is_prime(n));
    for c in 1..n {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, f(2), 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("pollard_rho: no factor found for composite input");
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Binomial coefficient C(m, k) modulo a prime, by base-`p` digits.
pub fn binomial_mod(m: u64, k: u64, p: u64) -> Result<u64> {
    if k > m {
        return Err(Error::InvalidArgument(format!(
            "binomial_mod: k = {k} exceeds m = {m}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::Precondition(format!("binomial_mod: {p} is not prime")));
    }
    let (mut m, mut k) = (m, k);
    let mut acc = 1u64;
    while k > 0 || m > 0 {
        let (md, kd) = (m % p, k % p);
        if kd > md {
            return Ok(0);
        }
        acc = mul_mod(acc, binomial_digit(md, kd, p), p);
        m /= p;
        k /= p;
    }
    Ok(acc)
}

/// C(m, k) mod p for digits 0 <= k <= m < p.
fn binomial_digit(m: u64, k: u64, p: u64) -> u64 {
    let k = k.min(m - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for j in 1..=k {
        num = mul_mod(num, (m - k + j) % p, p);
        den = mul_mod(den, j % p, p);
    }
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

/// Polynomial with arbitrary-precision integer coefficients, index = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// Build from coefficients (index = degree); trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The polynomial x^s - 1.
    pub fn power_minus_one(s: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); s as usize + 1];
        coeffs[0] = -BigInt::one();
        coeffs[s as usize] = BigInt::one();
        IntPoly { coeffs }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact product.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Exact division by a monic divisor; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (quot, rem) = self.div_rem_monic(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision(rem.degree().unwrap_or(0)))
        }
    }

    /// True when monic `self` divides `dividend` exactly.
    pub fn divides(&self, dividend: &IntPoly) -> bool {
        matches!(dividend.div_rem_monic(self), Ok((_, rem)) if rem.is_zero())
    }

    fn div_rem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        if !divisor.coeffs[dd].is_one() {
            return Err(Error::Precondition("divisor must be monic".into()));
        }
        if self.coeffs.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            for (j, b) in divisor.coeffs.iter().enumerate().take(dd) {
                if !b.is_zero() {
                    let t = &c * b;
                    rem[i - dd + j] -= t;
                }
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }
}

static CYCLOTOMIC_CACHE: LazyLock<Mutex<HashMap<u64, Arc<IntPoly>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The s-th cyclotomic polynomial, computed by exact division of x^s - 1
/// by the cyclotomic polynomials of the proper divisors of s. Cached.
pub fn cyclotomic(s: u64) -> IntPoly {
    cyclotomic_arc(s).as_ref().clone()
}

pub(crate) fn cyclotomic_arc(s: u64) -> Arc<IntPoly> {
    assert!(s >= 1, "cyclotomic index must be positive");
    if let Some(hit) = CYCLOTOMIC_CACHE.lock().unwrap().get(&s) {
        return hit.clone();
    }
    let mut quot = IntPoly::power_minus_one(s);
    for d in proper_divisors(s) {
        quot = quot
            .div_exact(&cyclotomic_arc(d))
            .expect("x^s - 1 is divisible by every cyclotomic factor");
    }
    let arc = Arc::new(quot);
    CYCLOTOMIC_CACHE
        .lock()
        .unwrap()
        .entry(s)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Divisors of s excluding s itself, ascending.
fn proper_divisors(s: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= s {
        if s % d == 0 {
            out.push(d);
            let q = s / d;
            if q != d && q != s {
                high.push(q);
            }
        }
        d += 1;
    }
    out.extend(high.into_iter().rev());
    out.retain(|&x| x != s);
    out
}

/// Decide exactly whether a multiset of M-th roots of unity sums to zero,
/// via divisibility of the counting polynomial by the M-th cyclotomic
/// polynomial. The empty multiset sums to zero.
pub fn vanishing_sum_check(exponents: &[u64], m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument("vanishing_sum_check: M must be positive".into()));
    }
    if exponents.is_empty() {
        return Ok(true);
    }
    let mut counts = vec![0i64; m as usize];
    for &e in exponents {
        if e >= m {
            return Err(Error::Precondition(format!(
                "vanishing_sum_check: exponent {e} outside [0, {m})"
            )));
        }
        counts[e as usize] += 1;
    }
    let a = IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect());
    Ok(cyclotomic_arc(m).divides(&a))
}

/// Verify the halved-power congruence used as an exactness oracle:
/// with A = (m+n)^(2p) + (n mod 2)(m+n)^p and B = m^(2p) + (n mod 2)m^p,
/// checks (A - B)/2 == 0 (mod n). The difference is asserted even, and for
/// odd n both halves are asserted individually even.
pub fn halved_power_congruence(m: u64, n: u64, p: u64) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "halved_power_congruence: m and n must be positive".into(),
        ));
    }
    if !is_prime(p) {
        return Err(Error::Precondition(format!(
            "halved_power_congruence: {p} is not prime"
        )));
    }
    let exp2 = u32::try_from(2 * p)
        .map_err(|_| Error::InvalidArgument("halved_power_congruence: p too large".into()))?;
    let odd = n % 2;
    let term = |base: u64| -> BigInt {
        let b = BigInt::from(base);
        b.pow(exp2) + BigInt::from(odd) * BigInt::from(base).pow(exp2 / 2)
    };
    let a = term(m + n);
    let b = term(m);
    if n % 2 == 1 && (a.is_odd() || b.is_odd()) {
        return Err(Error::Parity(
            "halved_power_congruence: summand expected to be even for odd n".into(),
        ));
    }
    let diff = a - b;
    if diff.is_odd() {
        return Err(Error::Parity(
            "halved_power_congruence: power difference expected to be even".into(),
        ));
    }
    let half = diff / BigInt::from(2);
    Ok((half % BigInt::from(n)).is_zero())
}
