//! Polynomials over Z_N as functions, permutation predicates (brute-force
//! oracle plus coefficient tests), the power-linear and quadratic
//! permutation-polynomial families, finite differences, and shift kernels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ring::{factorize, is_prime};

const MODULUS_LIMIT: u64 = 1 << 31;
const PERMUTATION_LIMIT: u64 = 1 << 22;

/// Polynomial with coefficients in Z_N, index = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Build from coefficients (index = degree), reducing into [0, N) and
    /// trimming trailing zeros.
    pub fn new(modulus: u64, coeffs: &[u64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("polynomial modulus must be positive".into()));
        }
        if modulus > MODULUS_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "polynomial modulus {modulus} exceeds the supported bound 2^31"
            )));
        }
        let mut coeffs: Vec<u64> = coeffs.iter().map(|&c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(ModPoly { modulus, coeffs })
    }

    /// The modulus N.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduced coefficients, index = degree (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Evaluate at `x` by Horner's rule.
    pub fn eval(&self, x: u64) -> u64 {
        let n = self.modulus;
        let x = x % n;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % n;
        }
        acc
    }

    /// The same polynomial reduced modulo a divisor of N.
    pub fn reduce(&self, modulus: u64) -> Result<ModPoly> {
        ModPoly::new(modulus, &self.coeffs)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> ModPoly {
        let n = self.modulus;
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % n) * c % n)
            .collect();
        ModPoly::new(n, &coeffs).expect("modulus already validated")
    }

    /// Tabulate the induced map of Z_N, or report a collision witness.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.modulus;
        if n > PERMUTATION_LIMIT {
            return Err(Error::Precondition(format!(
                "modulus {n} exceeds the tabulation bound 2^22"
            )));
        }
        let n = n as usize;
        let mut map = vec![0u32; n];
        let mut first_preimage = vec![u32::MAX; n];
        for (x, slot) in map.iter_mut().enumerate() {
            let v = self.eval(x as u64) as usize;
            if first_preimage[v] != u32::MAX {
                return Err(Error::NotBijective {
                    x1: first_preimage[v] as u64,
                    x2: x as u64,
                    value: v as u64,
                });
            }
            first_preimage[v] = x as u32;
            *slot = v as u32;
        }
        Permutation::from_map(map)
    }
}

impl fmt::Display for ModPoly {
    /// Canonical text form `N:a0,a1,...,am`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.modulus)?;
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ModPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed polynomial {s:?}, expected N:a0,a1,...,am"));
        let (head, tail) = s.trim().split_once(':').ok_or_else(bad)?;
        let modulus: u64 = head.trim().parse().map_err(|_| bad())?;
        let coeffs = tail
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<u64>>>()?;
        ModPoly::new(modulus, &coeffs)
    }
}

/// Explicit bijection of {0..N-1} stored with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<u32>,
    inv: Vec<u32>,
}

impl Permutation {
    /// Validate a map as a bijection and tabulate its inverse.
    pub fn from_map(map: Vec<u32>) -> Result<Self> {
        let n = map.len();
        let mut inv = vec![u32::MAX; n];
        for (k, &v) in map.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::InvalidArgument(format!(
                    "permutation entry {v} outside [0, {n})"
                )));
            }
            if inv[v as usize] != u32::MAX {
                return Err(Error::NotBijective {
                    x1: inv[v as usize] as u64,
                    x2: k as u64,
                    value: v as u64,
                });
            }
            inv[v as usize] = k as u32;
        }
        Ok(Permutation { map, inv })
    }

    /// The identity permutation of {0..n-1}.
    pub fn identity(n: usize) -> Self {
        let map: Vec<u32> = (0..n as u32).collect();
        Permutation { inv: map.clone(), map }
    }

    /// Domain size N.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// True for the empty permutation.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Forward map as a slice.
    pub fn map(&self) -> &[u32] {
        &self.map
    }

    /// Inverse map as a slice.
    pub fn inv(&self) -> &[u32] {
        &self.inv
    }

    /// Image of `k` under the permutation.
    pub fn apply(&self, k: usize) -> usize {
        self.map[k] as usize
    }

    /// Preimage of `k` under the permutation.
    pub fn apply_inv(&self, k: usize) -> usize {
        self.inv[k] as usize
    }

    /// The inverse bijection.
    pub fn inverse(&self) -> Permutation {
        Permutation {
            map: self.inv.clone(),
            inv: self.map.clone(),
        }
    }
}

/// Coefficient test for permutation polynomials of Z_{2^n}, n >= 2: the
/// linear coefficient must be odd and the even-index and odd-index
/// coefficient sums (degree >= 2) must both be even.
pub fn is_pp_pow2(poly: &ModPoly) -> Result<bool> {
    let n = poly.modulus();
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::Precondition(format!(
            "modulus {n} is not a power of two >= 4"
        )));
    }
    let a1 = poly.coeff(1);
    let even_sum: u64 = (2..poly.coeffs.len()).step_by(2).map(|i| poly.coeffs[i] & 1).sum();
    let odd_sum: u64 = (3..poly.coeffs.len()).step_by(2).map(|i| poly.coeffs[i] & 1).sum();
    Ok(a1 % 2 == 1 && even_sum % 2 == 0 && odd_sum % 2 == 0)
}

/// Lifting test for permutation polynomials of Z_{p^n}, n >= 2: the
/// reduction mod p must permute Z_p and the derivative must be nonzero
/// mod p at every point.
pub fn is_pp_prime_power(poly: &ModPoly, p: u64, n: u32) -> Result<bool> {
    if !is_prime(p) || n < 2 || poly.modulus() != p.checked_pow(n).unwrap_or(0) {
        return Err(Error::Precondition(format!(
            "modulus {} is not the prime power {p}^{n}",
            poly.modulus()
        )));
    }
    let base = poly.reduce(p)?;
    if !is_bijective_brute(&base) {
        return Ok(false);
    }
    let deriv = poly.derivative().reduce(p)?;
    Ok((0..p).all(|k| deriv.eval(k) != 0))
}

fn is_bijective_brute(poly: &ModPoly) -> bool {
    let n = poly.modulus() as usize;
    let mut seen = vec![false; n];
    for x in 0..n {
        let v = poly.eval(x as u64) as usize;
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Decide whether the polynomial permutes Z_N by factoring N and testing
/// each prime-power component. Must agree with `to_permutation`.
pub fn is_pp(poly: &ModPoly) -> Result<bool> {
    let n = poly.modulus();
    if n == 1 {
        return Ok(true);
    }
    for (q, e) in factorize(n)?.factors {
        let component = poly.reduce(q.pow(e))?;
        let verdict = if e == 1 {
            is_bijective_brute(&component)
        } else if q == 2 {
            is_pp_pow2(&component)?
        } else {
            is_pp_prime_power(&component, q, e)?
        };
        if !verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Admissible polynomials x^p + ax + b over Z_N, for N = p^n * N1 with N1
/// squarefree, gcd(p, N1) = 1, and gcd(p, q - 1) = 1 for every prime
/// q | N1. When p == 1 (mod q - 1) for every q | N1 the full coefficient
/// set is used; otherwise only multiples of N1. With `include_b` false,
/// b = 0; otherwise all b in Z_N. Every member is checked to permute Z_N.
pub fn power_linear_family(n: u64, p: u64, include_b: bool) -> Result<Vec<ModPoly>> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let f = factorize(n)?;
    let e = f.exponent_of(p);
    if e == 0 {
        return Err(Error::Precondition(format!("{p} does not divide {n}")));
    }
    let n1 = n / p.pow(e);
    let cofactor = factorize(n1)?;
    if !cofactor.is_squarefree() {
        return Err(Error::Precondition(format!(
            "cofactor {n1} of {n} is not squarefree"
        )));
    }
    for q in cofactor.primes() {
        if gcd(p, q - 1) != 1 {
            return Err(Error::Precondition(format!(
                "gcd({p}, {q} - 1) != 1 for prime divisor {q} of the cofactor"
            )));
        }
    }
    let full_set = cofactor.primes().all(|q| (p - 1) % (q - 1) == 0);
    let mut out = Vec::new();
    for a in 0..n {
        let p_ok = if e >= 2 {
            a % p != 0 && a % p != p - 1
        } else {
            a % p != p - 1
        };
        let cof_ok = if full_set {
            cofactor.primes().all(|q| a % q != q - 1)
        } else {
            n1 == 1 || a % n1 == 0
        };
        if !(p_ok && cof_ok) {
            continue;
        }
        let b_range = if include_b { 0..n } else { 0..1 };
        for b in b_range {
            let mut coeffs = vec![0u64; p as usize + 1];
            coeffs[0] = b;
            coeffs[1] = a;
            coeffs[p as usize] = 1;
            let poly = ModPoly::new(n, &coeffs)?;
            assert!(
                poly.to_permutation().is_ok(),
                "power-linear family member {poly} must permute Z_{n}"
            );
            out.push(poly);
        }
    }
    Ok(out)
}

/// All quadratic permutation polynomials f2 x^2 + f1 x over Z_N: when N/2
/// is odd, f1 + f2 must be odd, gcd(f1, N/2) = 1, and every prime divisor
/// of N/2 must divide f2; otherwise gcd(f1, N) = 1 and every prime divisor
/// of N must divide f2. Only f2 != 0 is emitted; every member is checked
/// to permute Z_N.
pub fn qpp_family(n: u64) -> Result<Vec<ModPoly>> {
    if n < 2 {
        return Err(Error::InvalidArgument("quadratic family needs N >= 2".into()));
    }
    let f = factorize(n)?;
    let half_odd = f.exponent_of(2) == 1;
    let base = if half_odd { factorize(n / 2)? } else { f };
    let mut out = Vec::new();
    for f1 in 0..n {
        if gcd(f1, base.n) != 1 {
            continue;
        }
        for f2 in 1..n {
            if !base.radical_divides(f2) {
                continue;
            }
            if half_odd && (f1 + f2) % 2 == 0 {
                continue;
            }
            let poly = ModPoly::new(n, &[0, f1, f2])?;
            assert!(
                poly.to_permutation().is_ok(),
                "quadratic family member {poly} must permute Z_{n}"
            );
            out.push(poly);
        }
    }
    Ok(out)
}

/// First-order finite difference f(x + d) - f(x) as a polynomial over Z_N.
pub fn finite_difference(poly: &ModPoly, d: u64) -> ModPoly {
    let n = poly.modulus();
    let d = d % n;
    let terms = poly.coeffs.len();
    let mut out = vec![0u64; terms];
    let mut row = vec![1u64];
    for (i, &a) in poly.coeffs.iter().enumerate() {
        if a != 0 {
            let mut dpow = 1u64;
            for j in (0..=i).rev() {
                out[j] = (out[j] + a * (row[j] * dpow % n)) % n;
                dpow = dpow * d % n;
            }
            out[i] = (out[i] + n - a) % n;
        }
        row = next_pascal_row(&row, n);
    }
    ModPoly::new(n, &out).expect("modulus already validated")
}

/// Second-order finite difference with shifts d1 then d2.
pub fn second_difference(poly: &ModPoly, d1: u64, d2: u64) -> ModPoly {
    finite_difference(&finite_difference(poly, d1), d2)
}

fn next_pascal_row(row: &[u64], n: u64) -> Vec<u64> {
    let mut next = vec![1u64; row.len() + 1];
    for j in 1..row.len() {
        next[j] = (row[j - 1] + row[j]) % n;
    }
    next
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Doubled shift-kernel value before halving, as an exact integer:
/// (k+d)^2p - k^2p + (N mod 2)((k+d)^p - k^p) + 2a((k+d)^{p+1} - k^{p+1})
/// + 2 a^2 d k.
fn doubled_kernel(n: u64, p: u32, a: u64, d: u64, k: u64) -> BigInt {
    let kd = BigInt::from(k + d);
    let kk = BigInt::from(k);
    let a = BigInt::from(a);
    let bracket = kd.pow(2 * p) - kk.pow(2 * p)
        + BigInt::from(n % 2) * (kd.pow(p) - kk.pow(p));
    bracket
        + BigInt::from(2) * &a * (kd.pow(p + 1) - kk.pow(p + 1))
        + BigInt::from(2) * &a * &a * BigInt::from(d) * kk
}

fn validate_kernel_args(n: u64, p: u64, a: u64, d: u64) -> Result<u32> {
    if !is_prime(p) || n % p != 0 {
        return Err(Error::Precondition(format!("{p} is not a prime divisor of {n}")));
    }
    if d == 0 || d >= n || a >= n {
        return Err(Error::InvalidArgument(format!(
            "shift {d} must lie in [1, {n}) and coefficient {a} in [0, {n})"
        )));
    }
    u32::try_from(p).map_err(|_| Error::InvalidArgument(format!("prime {p} too large")))
}

/// The autocorrelation shift kernel h_d(k) mod N for k in [0, N), where
/// h_d(k) = [(k+d)^2p - k^2p + (N mod 2)((k+d)^p - k^p)]/2
///        + a((k+d)^{p+1} - k^{p+1}) + a^2 d k.
/// The halving is performed on exact integers; an odd bracket (possible
/// only for even N with odd d) is a parity error.
pub fn shift_kernel(n: u64, p: u64, a: u64, d: u64) -> Result<Vec<u64>> {
    let p = validate_kernel_args(n, p, a, d)?;
    let modulus = BigInt::from(n);
    (0..n)
        .map(|k| {
            let doubled = doubled_kernel(n, p, a, d, k);
            if doubled.is_odd() {
                return Err(Error::Parity(format!(
                    "shift kernel is half-integral at N = {n}, d = {d}, k = {k}"
                )));
            }
            let h = doubled / BigInt::from(2);
            Ok(h.mod_floor(&modulus).to_u64().expect("residue fits"))
        })
        .collect()
}

/// The centered shift kernel h_d(k) - h_d(0) mod N for k in [0, N).
/// Centering makes the halved quantity an exact integer for every parity
/// of N and d.
pub fn centered_shift_kernel(n: u64, p: u64, a: u64, d: u64) -> Result<Vec<u64>> {
    let p = validate_kernel_args(n, p, a, d)?;
    let modulus = BigInt::from(n);
    let at_zero = doubled_kernel(n, p, a, d, 0);
    (0..n)
        .map(|k| {
            let doubled = doubled_kernel(n, p, a, d, k) - &at_zero;
            assert!(doubled.is_even(), "centered shift kernel must be integral");
            let h = doubled / BigInt::from(2);
            Ok(h.mod_floor(&modulus).to_u64().expect("residue fits"))
        })
        .collect()
}

/// Check that the centered shift kernel, divided by g = gcd(d, N), induces
/// a bijection of Z_{N/g}; every centered value must be divisible by g.
pub fn centered_kernel_permutes(n: u64, p: u64, a: u64, d: u64) -> Result<bool> {
    let values = centered_shift_kernel(n, p, a, d)?;
    let g = gcd(d, n);
    let m = (n / g) as usize;
    let mut seen = vec![false; m];
    for &v in values.iter().take(m) {
        if v % g != 0 {
            return Ok(false);
        }
        let image = (v / g) as usize % m;
        if seen[image] {
            return Ok(false);
        }
        seen[image] = true;
    }
    Ok(true)
}
