//! The five CAZAC-preserving operations as an exact group action on
//! exponent sequences, a decision procedure for equivalence, and censuses
//! of candidate families against reference families.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{power_linear_family, qpp_family, ModPoly};
use crate::seq::{zc_exponents, ExponentSeq};

/// One generator of the equivalence group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivOp {
    /// Multiply every entry by xi_{2N}^r: adds r to each exponent mod 2N.
    Rotation(u64),
    /// Cyclic shift: out(k) = in(k + d mod N).
    Translation(u64),
    /// Reindex by a unit: out(k) = in(a k mod N); needs gcd(a, N) = 1.
    Decimation(u64),
    /// Linear frequency modulation: adds 2 v k to the exponent mod 2N.
    Lfm(u64),
    /// Complex conjugation: negates exponents mod 2N.
    Conjugation,
}

/// Parameters realizing e1(k) = s e2(a k + d mod N) + 2 v k + r (mod 2N).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivWitness {
    /// Decimation coefficient, coprime to N.
    pub a: u64,
    /// Translation offset in Z_N.
    pub d: u64,
    /// Modulation coefficient in Z_N.
    pub v: u64,
    /// Conjugation sign, +1 or -1.
    pub s: i8,
    /// Rotation exponent mod 2N.
    pub r: u64,
}

impl EquivWitness {
    /// Check the witness equation at every index.
    pub fn verify(&self, s1: &ExponentSeq, s2: &ExponentSeq) -> bool {
        if s1.n() != s2.n() {
            return false;
        }
        let n = s1.n();
        let m = 2 * n;
        (0..n).all(|k| {
            let e2 = s2.exp(((self.a * k + self.d) % n) as usize);
            let signed = if self.s >= 0 { e2 } else { (m - e2) % m };
            s1.exp(k as usize) == (signed + 2 * self.v % m * k % m + self.r) % m
        })
    }
}

/// Apply one operation, producing a new exponent sequence.
pub fn apply_op(seq: &ExponentSeq, op: EquivOp) -> Result<ExponentSeq> {
    let n = seq.n();
    let m = 2 * n;
    let exps: Vec<u64> = match op {
        EquivOp::Rotation(r) => seq.exps().iter().map(|&e| (e + r % m) % m).collect(),
        EquivOp::Translation(d) => (0..n)
            .map(|k| seq.exp(((k + d % n) % n) as usize))
            .collect(),
        EquivOp::Decimation(a) => {
            if gcd(a % n, n) != 1 {
                return Err(Error::InvalidArgument(format!(
                    "decimation coefficient {a} is not coprime to {n}"
                )));
            }
            (0..n).map(|k| seq.exp((a % n * k % n) as usize)).collect()
        }
        EquivOp::Lfm(v) => (0..n)
            .map(|k| (seq.exp(k as usize) + 2 * (v % n) * k % m) % m)
            .collect(),
        EquivOp::Conjugation => seq.exps().iter().map(|&e| (m - e) % m).collect(),
    };
    ExponentSeq::from_parts(n, seq.root(), exps)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Decide equivalence under the five operations. The search enumerates
/// (a, d, s) lexicographically with a ascending over units, d ascending,
/// and the unconjugated branch first; the rotation is fixed by k = 0, the
/// modulation by k = 1, and remaining indices verify with early exit.
/// Returns the first witness found, or `None`.
pub fn are_equivalent(s1: &ExponentSeq, s2: &ExponentSeq) -> Result<Option<EquivWitness>> {
    if s1.n() != s2.n() {
        return Err(Error::ModulusMismatch {
            left: s1.n(),
            right: s2.n(),
        });
    }
    let n = s1.n() as usize;
    let m = 2 * n as u64;
    if n == 1 {
        let r = (s1.exp(0) + m - s2.exp(0)) % m;
        return Ok(Some(EquivWitness { a: 1, d: 0, v: 0, s: 1, r }));
    }
    let e1 = s1.exps();
    let e2 = s2.exps();
    let neg2: Vec<u64> = e2.iter().map(|&e| (m - e) % m).collect();
    for a in (1..n).filter(|&a| gcd(a as u64, n as u64) == 1) {
        for d in 0..n {
            'branch: for (s, target) in [(1i8, e2), (-1i8, neg2.as_slice())] {
                let r = (e1[0] + m - target[d]) % m;
                let idx1 = (a + d) % n;
                let rho1 = (e1[1] + m - target[idx1]) % m;
                let step = (rho1 + m - r) % m;
                if step % 2 != 0 {
                    continue 'branch;
                }
                let mut idx = idx1;
                let mut lin = step;
                for &e in &e1[2..] {
                    idx += a;
                    if idx >= n {
                        idx -= n;
                    }
                    lin += step;
                    if lin >= m {
                        lin -= m;
                    }
                    if (e + m - target[idx]) % m != (r + lin) % m {
                        continue 'branch;
                    }
                }
                return Ok(Some(EquivWitness {
                    a: a as u64,
                    d: d as u64,
                    v: step / 2,
                    s,
                    r,
                }));
            }
        }
    }
    Ok(None)
}

/// Restricted equivalence by translation and rotation only: find (d, r)
/// with e1(k) = e2(k + d mod N) + r (mod 2N) for all k, if any.
pub fn shift_rotation_witness(s1: &ExponentSeq, s2: &ExponentSeq) -> Result<Option<(u64, u64)>> {
    if s1.n() != s2.n() {
        return Err(Error::ModulusMismatch {
            left: s1.n(),
            right: s2.n(),
        });
    }
    let n = s1.n() as usize;
    let m = 2 * n as u64;
    for d in 0..n {
        let r = (s1.exp(0) + m - s2.exp(d)) % m;
        if (1..n).all(|k| (s1.exp(k) + m - s2.exp((k + d) % n)) % m == r) {
            return Ok(Some((d as u64, r)));
        }
    }
    Ok(None)
}

/// How a family search visits references.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Visit every reference in order.
    Exhaustive,
    /// Visit a seeded random subset, in ascending index order.
    Sampled { count: usize, seed: u64 },
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchMode::Exhaustive => write!(f, "exhaustive"),
            SearchMode::Sampled { count, seed } => write!(f, "sampled:{count}:{seed}"),
        }
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "exhaustive" {
            return Ok(SearchMode::Exhaustive);
        }
        let bad = || {
            Error::InvalidArgument(format!(
                "unknown search mode {s:?}, expected exhaustive or sampled:COUNT:SEED"
            ))
        };
        let rest = s.strip_prefix("sampled:").ok_or_else(bad)?;
        let (count, seed) = rest.split_once(':').ok_or_else(bad)?;
        Ok(SearchMode::Sampled {
            count: count.trim().parse().map_err(|_| bad())?,
            seed: seed.trim().parse().map_err(|_| bad())?,
        })
    }
}

fn mode_indices(len: usize, mode: &SearchMode) -> Vec<usize> {
    match *mode {
        SearchMode::Exhaustive => (0..len).collect(),
        SearchMode::Sampled { count, seed } => {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let mut picked = rand::seq::index::sample(&mut rng, len, count.min(len)).into_vec();
            picked.sort_unstable();
            picked
        }
    }
}

/// Search a family for the first member equivalent to `seq`, in index
/// order (or sampled index order). Returns the member index and witness.
pub fn equivalent_to_family(
    seq: &ExponentSeq,
    family: &[ExponentSeq],
    mode: &SearchMode,
) -> Result<Option<(usize, EquivWitness)>> {
    for member in family {
        if member.n() != seq.n() {
            return Err(Error::ModulusMismatch {
                left: seq.n(),
                right: member.n(),
            });
        }
    }
    let indices = mode_indices(family.len(), mode);
    Ok(indices
        .par_iter()
        .find_map_first(|&i| {
            are_equivalent(seq, &family[i])
                .expect("lengths validated")
                .map(|w| (i, w))
        }))
}

/// Named generator for a family of exponent sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Plain ZC sequences, all valid roots, offset zero.
    Zc,
    /// ZC interleaved by every quadratic family member and by its inverse,
    /// over all valid roots.
    QppBoth,
    /// ZC interleaved by x^p + ax for every admissible a, over all roots.
    PowerLinear { p: u64 },
    /// The N = 16 grid x^4 + a2 x^2 + a1 x with a2 in {1,3,5,7}, odd a1,
    /// and roots u in {1,3,5,7}.
    Deg4Grid,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Zc => write!(f, "zc"),
            FamilySpec::QppBoth => write!(f, "qpp-both"),
            FamilySpec::PowerLinear { p } => write!(f, "xp-ax:{p}"),
            FamilySpec::Deg4Grid => write!(f, "deg4-grid"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zc" => Ok(FamilySpec::Zc),
            "qpp-both" => Ok(FamilySpec::QppBoth),
            "deg4-grid" => Ok(FamilySpec::Deg4Grid),
            other => {
                if let Some(p) = other.strip_prefix("xp-ax:") {
                    let p = p.trim().parse().map_err(|_| {
                        Error::InvalidArgument(format!("bad prime in family spec {other:?}"))
                    })?;
                    return Ok(FamilySpec::PowerLinear { p });
                }
                Err(Error::InvalidArgument(format!(
                    "unknown family spec {other:?}, expected zc, qpp-both, xp-ax:P, or deg4-grid"
                )))
            }
        }
    }
}

/// One labeled member of a generated family.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    /// Human-readable provenance of the member.
    pub label: String,
    /// The sequence itself.
    pub seq: ExponentSeq,
}

fn units(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|&u| gcd(u, n) == 1).collect()
}

/// Generate the labeled members of a family over Z_N, in deterministic
/// order (roots ascending, then polynomial order, forward before inverse).
pub fn generate_family(n: u64, spec: &FamilySpec) -> Result<Vec<FamilyMember>> {
    let mut out = Vec::new();
    match *spec {
        FamilySpec::Zc => {
            for u in units(n) {
                out.push(FamilyMember {
                    label: format!("u={u}"),
                    seq: zc_exponents(n, u, 0)?,
                });
            }
        }
        FamilySpec::QppBoth => {
            let polys = qpp_family(n)?;
            let perms = polys
                .iter()
                .map(|p| p.to_permutation())
                .collect::<Result<Vec<_>>>()?;
            for u in units(n) {
                let base = zc_exponents(n, u, 0)?;
                for (poly, perm) in polys.iter().zip(&perms) {
                    out.push(FamilyMember {
                        label: format!("u={u} poly={poly} dir=fwd"),
                        seq: base.interleave(perm)?,
                    });
                    out.push(FamilyMember {
                        label: format!("u={u} poly={poly} dir=inv"),
                        seq: base.interleave_inverse(perm)?,
                    });
                }
            }
        }
        FamilySpec::PowerLinear { p } => {
            let polys = power_linear_family(n, p, false)?;
            let perms = polys
                .iter()
                .map(|p| p.to_permutation())
                .collect::<Result<Vec<_>>>()?;
            for u in units(n) {
                let base = zc_exponents(n, u, 0)?;
                for (poly, perm) in polys.iter().zip(&perms) {
                    out.push(FamilyMember {
                        label: format!("u={u} poly={poly}"),
                        seq: base.interleave(perm)?,
                    });
                }
            }
        }
        FamilySpec::Deg4Grid => {
            if n != 16 {
                return Err(Error::InvalidArgument(
                    "the degree-4 grid is defined for N = 16".into(),
                ));
            }
            for u in [1u64, 3, 5, 7] {
                let base = zc_exponents(n, u, 0)?;
                for a2 in [1u64, 3, 5, 7] {
                    for a1 in (1..16).step_by(2) {
                        let poly = ModPoly::new(16, &[0, a1, a2, 0, 1])?;
                        out.push(FamilyMember {
                            label: format!("u={u} poly={poly}"),
                            seq: base.interleave(&poly.to_permutation()?)?,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Exact fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    /// Numerator.
    pub num: u64,
    /// Denominator (1 for the zero fraction).
    pub den: u64,
}

impl Fraction {
    fn new(num: u64, den: u64) -> Self {
        if den == 0 {
            return Fraction { num: 0, den: 1 };
        }
        let g = gcd(num, den).max(1);
        Fraction { num: num / g, den: den / g }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// One equivalence found during a census.
#[derive(Debug, Clone, Serialize)]
pub struct CensusWitness {
    /// Candidate index in generation order.
    pub candidate: usize,
    /// Candidate label.
    pub candidate_label: String,
    /// Reference index in generation order.
    pub reference: usize,
    /// Reference label.
    pub reference_label: String,
    /// The realizing parameters.
    pub witness: EquivWitness,
}

/// Outcome of a census run.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    /// Sequence length.
    pub n: u64,
    /// Candidate generator spec.
    pub candidates: String,
    /// Reference generator spec.
    pub references: String,
    /// Search mode over references.
    pub mode: String,
    /// PRNG seed, present in sampled mode.
    pub seed: Option<u64>,
    /// Candidates generated.
    pub total: u64,
    /// Candidates equal (as exponent vectors) to an earlier candidate.
    pub duplicates: u64,
    /// Distinct candidate vectors.
    pub distinct: u64,
    /// References generated before deduplication.
    pub reference_total: u64,
    /// Distinct references actually searched.
    pub references_searched: u64,
    /// Distinct candidates with no witness against any searched reference.
    pub inequivalent: u64,
    /// inequivalent / total, in lowest terms.
    pub proportion: Fraction,
    /// All equivalences found, in candidate order.
    pub witnesses: Vec<CensusWitness>,
}

/// Generate candidates and references, deduplicate candidates by exact
/// exponent-vector equality, and count the distinct candidates that admit
/// no five-operation witness against the (possibly sampled) reference
/// family.
pub fn census(
    n: u64,
    candidates: &FamilySpec,
    references: &FamilySpec,
    mode: &SearchMode,
) -> Result<CensusReport> {
    let cand = generate_family(n, candidates)?;
    let refs = generate_family(n, references)?;
    let total = cand.len() as u64;

    let mut seen: HashMap<&[u64], usize> = HashMap::new();
    let mut distinct_idx: Vec<usize> = Vec::new();
    for (i, member) in cand.iter().enumerate() {
        if !seen.contains_key(member.seq.exps()) {
            seen.insert(member.seq.exps(), i);
            distinct_idx.push(i);
        }
    }
    let distinct = distinct_idx.len() as u64;

    let mut ref_seen: HashMap<&[u64], usize> = HashMap::new();
    let mut ref_idx: Vec<usize> = Vec::new();
    for (i, member) in refs.iter().enumerate() {
        if !ref_seen.contains_key(member.seq.exps()) {
            ref_seen.insert(member.seq.exps(), i);
            ref_idx.push(i);
        }
    }
    let searched: Vec<usize> = mode_indices(ref_idx.len(), mode)
        .into_iter()
        .map(|slot| ref_idx[slot])
        .collect();

    let outcomes: Vec<Option<(usize, EquivWitness)>> = distinct_idx
        .par_iter()
        .map(|&ci| {
            searched.iter().find_map(|&ri| {
                are_equivalent(&cand[ci].seq, &refs[ri].seq)
                    .expect("uniform length by construction")
                    .map(|w| (ri, w))
            })
        })
        .collect();

    let mut witnesses = Vec::new();
    let mut inequivalent = 0u64;
    for (&ci, outcome) in distinct_idx.iter().zip(&outcomes) {
        match outcome {
            Some((ri, w)) => witnesses.push(CensusWitness {
                candidate: ci,
                candidate_label: cand[ci].label.clone(),
                reference: *ri,
                reference_label: refs[*ri].label.clone(),
                witness: *w,
            }),
            None => inequivalent += 1,
        }
    }

    Ok(CensusReport {
        n,
        candidates: candidates.to_string(),
        references: references.to_string(),
        mode: mode.to_string(),
        seed: match *mode {
            SearchMode::Sampled { seed, .. } => Some(seed),
            SearchMode::Exhaustive => None,
        },
        total,
        duplicates: total - distinct,
        distinct,
        reference_total: refs.len() as u64,
        references_searched: searched.len() as u64,
        inequivalent,
        proportion: Fraction::new(inequivalent, total),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corr::cazac_verdict;

    fn zc(n: u64, u: u64) -> ExponentSeq {
        zc_exponents(n, u, 0).unwrap()
    }

    #[test]
    fn op_identities() {
        let s = zc(9, 1);
        assert_eq!(apply_op(&s, EquivOp::Rotation(0)).unwrap(), s);
        let c = apply_op(&s, EquivOp::Conjugation).unwrap();
        assert_eq!(apply_op(&c, EquivOp::Conjugation).unwrap(), s);
        assert!(apply_op(&s, EquivOp::Decimation(3)).is_err());
    }

    #[test]
    fn ops_preserve_verdict() {
        let s = zc(9, 1);
        for op in [
            EquivOp::Rotation(5),
            EquivOp::Translation(3),
            EquivOp::Decimation(2),
            EquivOp::Lfm(4),
            EquivOp::Conjugation,
        ] {
            let t = apply_op(&s, op).unwrap();
            assert!(cazac_verdict(&t).is_zac, "{op:?}");
            assert!(are_equivalent(&t, &s).unwrap().is_some(), "{op:?}");
        }
    }

    #[test]
    fn reflexive_witness_is_identity() {
        let s = zc(9, 2);
        let w = are_equivalent(&s, &s).unwrap().unwrap();
        assert_eq!(w, EquivWitness { a: 1, d: 0, v: 0, s: 1, r: 0 });
        assert!(w.verify(&s, &s));
    }

    #[test]
    fn translation_is_recovered() {
        let s = zc(9, 1);
        let t = apply_op(&s, EquivOp::Translation(3)).unwrap();
        let w = are_equivalent(&t, &s).unwrap().unwrap();
        assert!(w.verify(&t, &s));
        let back = are_equivalent(&s, &t).unwrap().unwrap();
        assert!(back.verify(&s, &t));
    }

    #[test]
    fn qpp_interleaved_differs_from_plain_zc() {
        let poly: ModPoly = "25:0,1,5".parse().unwrap();
        let seq = zc(25, 1).interleave(&poly.to_permutation().unwrap()).unwrap();
        assert_eq!(are_equivalent(&seq, &zc(25, 1)).unwrap(), None);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        assert!(are_equivalent(&zc(9, 1), &zc(8, 1)).is_err());
        assert!(shift_rotation_witness(&zc(9, 1), &zc(8, 1)).is_err());
    }

    #[test]
    fn family_search_finds_self() {
        let interleaved = generate_family(9, &FamilySpec::PowerLinear { p: 3 }).unwrap();
        let family = vec![interleaved[0].seq.clone(), zc(9, 1)];
        let hit = equivalent_to_family(&zc(9, 1), &family, &SearchMode::Exhaustive)
            .unwrap()
            .unwrap();
        assert_eq!(hit.0, 1);
        assert_eq!(hit.1, EquivWitness { a: 1, d: 0, v: 0, s: 1, r: 0 });
        assert_eq!(
            equivalent_to_family(&zc(9, 1), &[], &SearchMode::Exhaustive).unwrap(),
            None
        );
    }

    #[test]
    fn sampled_search_is_reproducible() {
        let family: Vec<ExponentSeq> = (0..20)
            .map(|r| apply_op(&zc(9, 1), EquivOp::Rotation(r)).unwrap())
            .collect();
        let mode = SearchMode::Sampled { count: 5, seed: 7 };
        let a = equivalent_to_family(&zc(9, 1), &family, &mode).unwrap();
        let b = equivalent_to_family(&zc(9, 1), &family, &mode).unwrap();
        assert_eq!(a, b);
        assert!(a.is_some());
    }

    #[test]
    fn shift_rotation_restriction() {
        let s = zc(9, 1);
        assert_eq!(shift_rotation_witness(&s, &s).unwrap(), Some((0, 0)));
        let moved = apply_op(
            &apply_op(&s, EquivOp::Translation(4)).unwrap(),
            EquivOp::Rotation(11),
        )
        .unwrap();
        let (d, r) = shift_rotation_witness(&moved, &s).unwrap().unwrap();
        assert_eq!((d, r), (4, 11));
        let conjugated = apply_op(&s, EquivOp::Conjugation).unwrap();
        assert_eq!(shift_rotation_witness(&conjugated, &s).unwrap(), None);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("zc".parse::<FamilySpec>().unwrap(), FamilySpec::Zc);
        assert_eq!("qpp-both".parse::<FamilySpec>().unwrap(), FamilySpec::QppBoth);
        assert_eq!(
            "xp-ax:7".parse::<FamilySpec>().unwrap(),
            FamilySpec::PowerLinear { p: 7 }
        );
        assert_eq!("deg4-grid".parse::<FamilySpec>().unwrap(), FamilySpec::Deg4Grid);
        assert!("nope".parse::<FamilySpec>().is_err());
        assert_eq!(
            "sampled:200:42".parse::<SearchMode>().unwrap(),
            SearchMode::Sampled { count: 200, seed: 42 }
        );
        assert_eq!("exhaustive".parse::<SearchMode>().unwrap(), SearchMode::Exhaustive);
        assert!("sampled:x:1".parse::<SearchMode>().is_err());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(generate_family(9, &FamilySpec::Zc).unwrap().len(), 6);
        assert_eq!(generate_family(9, &FamilySpec::QppBoth).unwrap().len(), 144);
        assert_eq!(
            generate_family(9, &FamilySpec::PowerLinear { p: 3 }).unwrap().len(),
            18
        );
        assert_eq!(generate_family(16, &FamilySpec::Deg4Grid).unwrap().len(), 128);
        assert!(generate_family(9, &FamilySpec::Deg4Grid).is_err());
    }

    #[test]
    fn census_smoke() {
        let report = census(
            9,
            &FamilySpec::PowerLinear { p: 3 },
            &FamilySpec::Zc,
            &SearchMode::Exhaustive,
        )
        .unwrap();
        assert_eq!(report.total, 18);
        assert_eq!(report.duplicates + report.distinct, report.total);
        assert_eq!(
            report.inequivalent + report.witnesses.len() as u64,
            report.distinct
        );
        let cand = generate_family(9, &FamilySpec::PowerLinear { p: 3 }).unwrap();
        let refs = generate_family(9, &FamilySpec::Zc).unwrap();
        for w in &report.witnesses {
            assert!(w.witness.verify(&cand[w.candidate].seq, &refs[w.reference].seq));
        }
        let empty = census(
            9,
            &FamilySpec::PowerLinear { p: 3 },
            &FamilySpec::Zc,
            &SearchMode::Sampled { count: 0, seed: 1 },
        )
        .unwrap();
        assert_eq!(empty.references_searched, 0);
        assert_eq!(empty.inequivalent, empty.distinct);
    }
}
