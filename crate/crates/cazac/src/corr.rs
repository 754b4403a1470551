//! Periodic and aperiodic autocorrelation, exact zero verdicts via
//! cyclotomic divisibility, the CAZAC verdict, and the aperiodic
//! scaling scan.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{is_pp, ModPoly};
use crate::ring::vanishing_sum_check;
use crate::seq::{render_complex, zc_exponents, ExponentSeq};

/// Autocorrelation data for one sequence. The exact mask is the verdict;
/// numeric values are advisory.
#[derive(Debug, Clone)]
pub struct CorrelationProfile {
    periodic: Vec<Complex64>,
    exact_zero: Vec<bool>,
    aperiodic: Option<Vec<Complex64>>,
}

impl CorrelationProfile {
    /// Sequence length N.
    pub fn n(&self) -> usize {
        self.periodic.len()
    }

    /// Numeric periodic autocorrelation, index = shift.
    pub fn periodic(&self) -> &[Complex64] {
        &self.periodic
    }

    /// Exact zero verdict per shift.
    pub fn exact_zero(&self) -> &[bool] {
        &self.exact_zero
    }

    /// Numeric aperiodic autocorrelation, if attached.
    pub fn aperiodic(&self) -> Option<&[Complex64]> {
        self.aperiodic.as_deref()
    }

    /// Attach an aperiodic vector of matching length.
    pub fn attach_aperiodic(mut self, aperiodic: Vec<Complex64>) -> Result<Self> {
        if aperiodic.len() != self.periodic.len() {
            return Err(Error::ModulusMismatch {
                left: self.periodic.len() as u64,
                right: aperiodic.len() as u64,
            });
        }
        self.aperiodic = Some(aperiodic);
        Ok(self)
    }
}

/// Verdict on the constant-amplitude and zero-autocorrelation properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CazacVerdict {
    /// Constant amplitude; true by representation for exponent sequences.
    pub is_ca: bool,
    /// Exact zero periodic autocorrelation at every nonzero shift.
    pub is_zac: bool,
    /// Largest D such that the autocorrelation vanishes for 0 < d <= D.
    pub zcz_length: u64,
    /// Smallest nonzero shift with nonvanishing autocorrelation, if any.
    pub failing_shift: Option<u64>,
}

fn kahan_add(sum: &mut f64, comp: &mut f64, x: f64) {
    let y = x - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// Periodic autocorrelation with exact zero verdicts: for each shift d the
/// exponent-difference multiset {e(k) - e(k + d mod N) mod 2N} is tested
/// for exact vanishing as a sum of 2N-th roots of unity, and the numeric
/// sum is recorded alongside.
pub fn periodic_autocorr(seq: &ExponentSeq) -> CorrelationProfile {
    let n = seq.len();
    let m = 2 * seq.n();
    crate::ring::cyclotomic(m);
    let per_shift: Vec<(Complex64, bool)> = (0..n)
        .into_par_iter()
        .map(|d| {
            let diffs: Vec<u64> = (0..n)
                .map(|k| (seq.exp(k) + m - seq.exp((k + d) % n)) % m)
                .collect();
            let exact = vanishing_sum_check(&diffs, m).expect("diffs reduced mod 2N");
            let (mut re, mut rc, mut im, mut ic) = (0.0, 0.0, 0.0, 0.0);
            for &e in &diffs {
                let angle = -PI * e as f64 / seq.n() as f64;
                kahan_add(&mut re, &mut rc, angle.cos());
                kahan_add(&mut im, &mut ic, angle.sin());
            }
            (Complex64::new(re, im), exact)
        })
        .collect();
    CorrelationProfile {
        periodic: per_shift.iter().map(|&(v, _)| v).collect(),
        exact_zero: per_shift.iter().map(|&(_, z)| z).collect(),
        aperiodic: None,
    }
}

/// Numeric aperiodic autocorrelation, index = shift d, summed over the
/// overlap k in [0, N - d) with Kahan compensation.
pub fn aperiodic_autocorr(seq: &ExponentSeq) -> Vec<Complex64> {
    let n = seq.len();
    let values = render_complex(seq);
    let s = values.values();
    (0..n)
        .into_par_iter()
        .map(|d| {
            let (mut re, mut rc, mut im, mut ic) = (0.0, 0.0, 0.0, 0.0);
            for k in 0..n - d {
                let prod = s[k] * s[k + d].conj();
                kahan_add(&mut re, &mut rc, prod.re);
                kahan_add(&mut im, &mut ic, prod.im);
            }
            Complex64::new(re, im)
        })
        .collect()
}

/// Classify a sequence: constant amplitude, exact ZAC, zero-zone length,
/// and the first failing shift.
pub fn cazac_verdict(seq: &ExponentSeq) -> CazacVerdict {
    let profile = periodic_autocorr(seq);
    verdict_from_profile(&profile)
}

/// Derive the verdict from an existing profile.
pub fn verdict_from_profile(profile: &CorrelationProfile) -> CazacVerdict {
    let n = profile.n() as u64;
    let failing_shift = (1..n).find(|&d| !profile.exact_zero()[d as usize]);
    CazacVerdict {
        is_ca: true,
        is_zac: failing_shift.is_none(),
        zcz_length: failing_shift.map_or(n.saturating_sub(1), |d| d - 1),
        failing_shift,
    }
}

/// One length in an aperiodic scaling scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanPoint {
    /// Sequence length N = 2^n.
    pub n: u64,
    /// max_{0<d<N} of the aperiodic autocorrelation magnitude.
    pub max_abs: f64,
    /// max_abs divided by N^(3/4).
    pub ratio_to_n34: f64,
}

/// Aperiodic scaling scan over power-of-two lengths.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    /// Quadratic coefficient of the interleaving polynomial.
    pub f2: u64,
    /// Linear coefficient of the interleaving polynomial.
    pub f1: u64,
    /// Root index.
    pub u: u64,
    /// Per-length maxima.
    pub points: Vec<ScanPoint>,
    /// Least-squares slope of log max_abs against log N, if >= 2 points.
    pub slope: Option<f64>,
    /// Largest ratio_to_n34 across the scan, if nonempty.
    pub max_ratio: Option<f64>,
}

/// Scan max aperiodic autocorrelation of ZC(2^n, u) interleaved by
/// f2 x^2 + f1 x for n in [n_min, n_max]. Requires f2 even, f1 odd,
/// u odd, 2 <= n_min, and n_max <= 14; an empty range yields an empty
/// report.
pub fn aperiodic_scan(n_min: u32, n_max: u32, f2: u64, f1: u64, u: u64) -> Result<ScanReport> {
    if f2 % 2 != 0 || f1 % 2 != 1 || u % 2 != 1 {
        return Err(Error::Precondition(
            "scan hypotheses need even f2, odd f1, odd u".into(),
        ));
    }
    if n_min < 2 || n_max > 14 {
        return Err(Error::InvalidArgument(
            "scan exponents must satisfy 2 <= n_min and n_max <= 14".into(),
        ));
    }
    let mut points = Vec::new();
    for exp in n_min..=n_max {
        let n = 1u64 << exp;
        let poly = ModPoly::new(n, &[0, f1, f2])?;
        assert!(is_pp(&poly)?, "even f2 and odd f1 must permute Z_{n}");
        let seq = zc_exponents(n, u, 0)?.interleave(&poly.to_permutation()?)?;
        let aperiodic = aperiodic_autocorr(&seq);
        let max_abs = aperiodic[1..]
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max);
        points.push(ScanPoint {
            n,
            max_abs,
            ratio_to_n34: max_abs / (n as f64).powf(0.75),
        });
    }
    let slope = fit_slope(&points);
    let max_ratio = points
        .iter()
        .map(|p| p.ratio_to_n34)
        .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
    Ok(ScanReport { f2, f1, u, points, slope, max_ratio })
}

fn fit_slope(points: &[ScanPoint]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let xs = points.iter().map(|p| (p.n as f64).ln());
    let ys = points.iter().map(|p| p.max_abs.ln());
    let sx: f64 = xs.clone().sum();
    let sy: f64 = ys.clone().sum();
    let sxx: f64 = xs.clone().map(|x| x * x).sum();
    let sxy: f64 = xs.zip(ys).map(|(x, y)| x * y).sum();
    Some((m * sxy - sx * sy) / (m * sxx - sx * sx))
}
