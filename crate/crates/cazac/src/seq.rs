//! Zadoff-Chu sequences in exact exponent form, permutation interleaving,
//! complex rendering, and the normalized discrete Fourier transform.

use std::f64::consts::PI;
use std::hash::{Hash, Hasher};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

const LENGTH_LIMIT: u64 = 1 << 31;

/// Unimodular sequence stored exactly: entry k encodes the value
/// xi_{2N}^{e(k)} with xi_{2N} = exp(-2 pi i / 2N) and e(k) in [0, 2N).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawExponentSeq")]
pub struct ExponentSeq {
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    root: Option<u64>,
    exps: Vec<u64>,
}

#[derive(Deserialize)]
struct RawExponentSeq {
    n: u64,
    #[serde(default)]
    root: Option<u64>,
    exps: Vec<u64>,
}

impl TryFrom<RawExponentSeq> for ExponentSeq {
    type Error = Error;

    fn try_from(raw: RawExponentSeq) -> Result<Self> {
        ExponentSeq::from_parts(raw.n, raw.root, raw.exps)
    }
}

impl PartialEq for ExponentSeq {
    /// Equality compares length and exponents; the root is metadata.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.exps == other.exps
    }
}

impl Eq for ExponentSeq {}

impl Hash for ExponentSeq {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.exps.hash(state);
    }
}

impl ExponentSeq {
    /// Build from a length-N exponent vector with entries in [0, 2N).
    pub fn from_parts(n: u64, root: Option<u64>, exps: Vec<u64>) -> Result<Self> {
        if n == 0 || n > LENGTH_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "sequence length {n} outside [1, 2^31]"
            )));
        }
        if exps.len() as u64 != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} exponents, got {}",
                exps.len()
            )));
        }
        if let Some(&e) = exps.iter().find(|&&e| e >= 2 * n) {
            return Err(Error::InvalidArgument(format!(
                "exponent {e} outside [0, {})",
                2 * n
            )));
        }
        Ok(ExponentSeq { n, root, exps })
    }

    /// Sequence length N.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of entries (equals N).
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    /// True for the empty sequence (never constructible; kept for symmetry).
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Root index metadata, if known.
    pub fn root(&self) -> Option<u64> {
        self.root
    }

    /// Exponents mod 2N.
    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    /// Exponent at position k.
    pub fn exp(&self, k: usize) -> u64 {
        self.exps[k]
    }

    /// Reindex by a permutation: out[k] = self[perm(k)].
    pub fn interleave(&self, perm: &Permutation) -> Result<ExponentSeq> {
        if perm.len() as u64 != self.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: perm.len() as u64,
            });
        }
        let exps = (0..self.len()).map(|k| self.exps[perm.apply(k)]).collect();
        Ok(ExponentSeq { n: self.n, root: self.root, exps })
    }

    /// Reindex by the inverse permutation: out[k] = self[perm^{-1}(k)].
    pub fn interleave_inverse(&self, perm: &Permutation) -> Result<ExponentSeq> {
        self.interleave(&perm.inverse())
    }
}

/// Zadoff-Chu exponent sequence of length N with root u and offset l:
/// e(k) = u (k^2 + (N mod 2) k + 2 l k) mod 2N.
pub fn zc_exponents(n: u64, u: u64, l: u64) -> Result<ExponentSeq> {
    if n == 0 || n > LENGTH_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "sequence length {n} outside [1, 2^31]"
        )));
    }
    if gcd(u % n, n) != 1 {
        return Err(Error::InvalidArgument(format!(
            "root {u} is not coprime to {n}"
        )));
    }
    let m = 2 * n as u128;
    let parity = (n % 2) as u128;
    let (root, l128) = (u as u128 % m, l as u128);
    let exps = (0..n)
        .map(|k| {
            let k = k as u128;
            let phase = (k * k + parity * k + 2 * l128 % m * k) % m;
            (root * phase % m) as u64
        })
        .collect();
    Ok(ExponentSeq { n, root: Some(u % n), exps })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Complex-valued sequence in double precision.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeq {
    values: Vec<Complex64>,
}

impl ComplexSeq {
    /// Wrap a value vector.
    pub fn new(values: Vec<Complex64>) -> Self {
        ComplexSeq { values }
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True when there are no entries.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value slice.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Render an exponent sequence to complex values exp(-pi i e(k) / N).
pub fn render_complex(seq: &ExponentSeq) -> ComplexSeq {
    let n = seq.n() as f64;
    let values = seq
        .exps()
        .iter()
        .map(|&e| Complex64::from_polar(1.0, -PI * e as f64 / n))
        .collect();
    ComplexSeq::new(values)
}

/// Normalized discrete Fourier transform with kernel exp(-2 pi i mk / N):
/// out(m) = (1/sqrt(N)) sum_k s(k) exp(-2 pi i mk / N). Direct evaluation.
pub fn dft(seq: &ComplexSeq) -> ComplexSeq {
    let n = seq.len();
    if n == 0 {
        return ComplexSeq::new(Vec::new());
    }
    let scale = 1.0 / (n as f64).sqrt();
    let values = (0..n)
        .map(|m| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, s) in seq.values().iter().enumerate() {
                let t = (m * k) % n;
                let kernel = Complex64::from_polar(1.0, -2.0 * PI * t as f64 / n as f64);
                acc += s * kernel;
            }
            acc * scale
        })
        .collect();
    ComplexSeq::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str) -> Permutation {
        text.parse::<crate::perm::ModPoly>()
            .unwrap()
            .to_permutation()
            .unwrap()
    }

    #[test]
    fn zc_small_lengths() {
        assert_eq!(zc_exponents(9, 1, 0).unwrap().exps(), &[0, 2, 6, 12, 2, 12, 6, 2, 0]);
        let n16 = zc_exponents(16, 1, 0).unwrap();
        for k in 0..16u64 {
            assert_eq!(n16.exp(k as usize), k * k % 32);
        }
        assert_eq!(zc_exponents(4, 1, 1).unwrap().exps(), &[0, 3, 0, 7]);
        assert!(zc_exponents(9, 3, 0).is_err());
        assert!(zc_exponents(0, 1, 0).is_err());
    }

    #[test]
    fn interleave_cube_plus_x() {
        let s = zc_exponents(9, 1, 0).unwrap();
        let t = s.interleave(&perm("9:0,1,0,1")).unwrap();
        assert_eq!(t.exps(), &[0, 6, 2, 12, 12, 2, 6, 0, 2]);
        assert_eq!(t.root(), Some(1));
    }

    #[test]
    fn interleave_quartic_row() {
        let s = zc_exponents(16, 1, 0).unwrap();
        let t = s.interleave(&perm("16:0,1,1,0,1")).unwrap();
        assert_eq!(
            t.exps(),
            &[0, 9, 4, 9, 16, 1, 4, 17, 0, 25, 4, 25, 16, 17, 4, 1]
        );
    }

    #[test]
    fn interleave_identity_and_mismatch() {
        let s = zc_exponents(9, 2, 0).unwrap();
        assert_eq!(s.interleave(&Permutation::identity(9)).unwrap(), s);
        assert!(matches!(
            s.interleave(&Permutation::identity(8)),
            Err(Error::ModulusMismatch { left: 9, right: 8 })
        ));
    }

    #[test]
    fn inverse_interleave_printed_row() {
        let s = zc_exponents(27, 1, 0).unwrap();
        let t = s.interleave_inverse(&perm("27:0,1,0,1")).unwrap();
        let printed = [
            0, 21, 1, 6, 24, 10, 21, 9, 1, 18, 3, 1, 24, 6, 10, 12, 18, 1, 9, 12, 1,
            15, 15, 10, 3, 0, 1,
        ];
        for (k, &half) in printed.iter().enumerate() {
            assert_eq!(t.exp(k), 2 * half % 54);
        }
        let round = t.interleave(&perm("27:0,1,0,1")).unwrap();
        assert_eq!(round, s);
    }

    #[test]
    fn render_values() {
        let s = zc_exponents(9, 1, 0).unwrap();
        let c = render_complex(&s);
        assert!((c.values()[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for v in c.values() {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        let half_turn = ExponentSeq::from_parts(4, None, vec![4, 0, 0, 0]).unwrap();
        let r = render_complex(&half_turn);
        assert!((r.values()[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn render_round_trip() {
        let s = zc_exponents(12, 5, 2).unwrap();
        let c = render_complex(&s);
        for (k, v) in c.values().iter().enumerate() {
            let angle = (-v.arg()).rem_euclid(2.0 * PI);
            let e = angle * 12.0 / PI;
            let nearest = e.round().rem_euclid(24.0) as u64;
            assert!((e - e.round()).abs() < 1e-9);
            assert_eq!(nearest % 24, s.exp(k));
        }
    }

    #[test]
    fn dft_examples() {
        let ones = ComplexSeq::new(vec![Complex64::new(1.0, 0.0); 4]);
        let f = dft(&ones);
        assert!((f.values()[0] - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        for m in 1..4 {
            assert!(f.values()[m].norm() < 1e-12);
        }
        let mut delta = vec![Complex64::new(0.0, 0.0); 4];
        delta[0] = Complex64::new(1.0, 0.0);
        let fd = dft(&ComplexSeq::new(delta));
        for v in fd.values() {
            assert!((v.norm() - 0.5).abs() < 1e-12);
        }
        let zc = dft(&render_complex(&zc_exponents(9, 1, 0).unwrap()));
        for v in zc.values() {
            assert!((v.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn json_round_trip() {
        let s = zc_exponents(9, 2, 0).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains("\"n\":9"));
        let back: ExponentSeq = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.root(), Some(2));
        let bare: ExponentSeq = serde_json::from_str(r#"{"n":2,"exps":[0,3]}"#).unwrap();
        assert_eq!(bare.root(), None);
        assert!(serde_json::from_str::<ExponentSeq>(r#"{"n":2,"exps":[0,4]}"#).is_err());
        assert!(serde_json::from_str::<ExponentSeq>(r#"{"n":3,"exps":[0,1]}"#).is_err());
    }
}
