//! Experiment registry: each entry regenerates a frozen result from
//! scratch and diffs it against the golden copy shipped in `golden/`.

use anyhow::{anyhow, bail, Result};
use serde_json::{json, Value};

use cazac::corr::{aperiodic_autocorr, aperiodic_scan, cazac_verdict, periodic_autocorr};
use cazac::equiv::{census, equivalent_to_family, generate_family, FamilySpec, SearchMode};
use cazac::perm::{shift_kernel, ModPoly};
use cazac::seq::{zc_exponents, ExponentSeq};

/// One reproducible experiment.
pub struct Experiment {
    /// Registry key.
    pub id: &'static str,
    /// One-line description.
    pub about: &'static str,
    /// Requires `--allow-long`.
    pub long: bool,
    golden: &'static str,
    run: fn() -> Result<Value>,
}

/// Result of regenerating one experiment.
pub struct Outcome {
    /// Full report document (schema, id, match flag, regenerated data).
    pub doc: Value,
    /// First difference, when not matched.
    pub mismatch: Option<String>,
}

const REGISTRY: &[Experiment] = &[
    Experiment {
        id: "example1-n9",
        about: "length-9 interleaved sequence and its exact verdict",
        long: false,
        golden: include_str!("../../../golden/example1-n9.json"),
        run: run_example1_n9,
    },
    Experiment {
        id: "example1-n16",
        about: "length-16 quartic-interleaved sequence and its exact verdict",
        long: false,
        golden: include_str!("../../../golden/example1-n16.json"),
        run: run_example1_n16,
    },
    Experiment {
        id: "table-tab3-n16",
        about: "all 16 published exponent rows for the length-16 quartic grid",
        long: false,
        golden: include_str!("../../../golden/table-tab3-n16.json"),
        run: run_table_tab3_n16,
    },
    Experiment {
        id: "example2-n27-inverse",
        about: "length-27 inverse-permutation interleave",
        long: false,
        golden: include_str!("../../../golden/example2-n27-inverse.json"),
        run: run_example2_n27_inverse,
    },
    Experiment {
        id: "example3ii-n18",
        about: "three length-18 candidates, each inequivalent to the quadratic reference family",
        long: false,
        golden: include_str!("../../../golden/example3ii-n18.json"),
        run: run_example3ii_n18,
    },
    Experiment {
        id: "remark2-n35",
        about: "length-35 exponent vectors, shift kernel, and zero pattern",
        long: false,
        golden: include_str!("../../../golden/remark2-n35.json"),
        run: run_remark2_n35,
    },
    Experiment {
        id: "census-n16-proportion",
        about: "length-16 census of the quartic grid against the quadratic reference family",
        long: false,
        golden: include_str!("../../../golden/census-n16-proportion.json"),
        run: run_census_n16,
    },
    Experiment {
        id: "census-n27",
        about: "length-27 census of the cubic family against the quadratic reference family",
        long: false,
        golden: include_str!("../../../golden/census-n27.json"),
        run: run_census_n27,
    },
    Experiment {
        id: "census-n150-sampled",
        about: "length-150 census with sampled references (seed recorded)",
        long: true,
        golden: include_str!("../../../golden/census-n150-sampled.json"),
        run: run_census_n150,
    },
    Experiment {
        id: "prop1-n35-zcz",
        about: "length-35 zero-zone pattern for every family coefficient",
        long: false,
        golden: include_str!("../../../golden/prop1-n35-zcz.json"),
        run: run_prop1_n35,
    },
    Experiment {
        id: "prop1-n18-zcz",
        about: "length-18 zero-zone pattern for every family coefficient",
        long: false,
        golden: include_str!("../../../golden/prop1-n18-zcz.json"),
        run: run_prop1_n18,
    },
    Experiment {
        id: "prop3-n25",
        about: "length-25 quadratic-interleaved candidates are inequivalent to every base sequence",
        long: false,
        golden: include_str!("../../../golden/prop3-n25.json"),
        run: run_prop3_n25,
    },
    Experiment {
        id: "theorem3-scan",
        about: "aperiodic scaling scan over power-of-two lengths 16..4096",
        long: false,
        golden: include_str!("../../../golden/theorem3-scan.json"),
        run: run_theorem3_scan,
    },
    Experiment {
        id: "zc-aperiodic-sanity",
        about: "aperiodic peak ratios of base sequences at lengths 64, 256, 1024",
        long: false,
        golden: include_str!("../../../golden/zc-aperiodic-sanity.json"),
        run: run_zc_aperiodic_sanity,
    },
];

fn listing() -> String {
    REGISTRY
        .iter()
        .map(|e| format!("  {:<22} {}", e.id, e.about))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Regenerate `id` and diff against its golden copy.
pub fn run(id: &str, allow_long: bool) -> Result<Outcome> {
    let exp = REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| {
        anyhow!("unknown experiment id {id:?}; registered ids:\n{}", listing())
    })?;
    if exp.long && !allow_long {
        bail!("experiment {id} is long-running; pass --allow-long to run it");
    }
    let data = (exp.run)()?;
    let golden: Value = serde_json::from_str(exp.golden)
        .map_err(|e| anyhow!("golden file for {id} is not valid JSON: {e}"))?;
    let expected = golden.get("data").cloned().unwrap_or(Value::Null);
    let mismatch = diff("data", &expected, &data);
    let doc = json!({
        "schema": 1,
        "id": id,
        "match": mismatch.is_none(),
        "data": data,
    });
    Ok(Outcome { doc, mismatch })
}

/// First difference between expected and regenerated values, if any.
/// Integers compare exactly; floats within relative 1e-9.
fn diff(path: &str, expected: &Value, actual: &Value) -> Option<String> {
    match (expected, actual) {
        (Value::Number(a), Value::Number(b)) => {
            if (a.is_i64() || a.is_u64()) && (b.is_i64() || b.is_u64()) {
                if a == b {
                    return None;
                }
                return Some(format!("{path}: expected {a}, got {b}"));
            }
            let (x, y) = (a.as_f64()?, b.as_f64()?);
            let tol = 1e-9 * x.abs().max(y.abs()).max(1.0);
            if (x - y).abs() <= tol {
                None
            } else {
                Some(format!("{path}: expected {x}, got {y}"))
            }
        }
        (Value::Array(a), Value::Array(b)) => {
            if a.len() != b.len() {
                return Some(format!(
                    "{path}: expected {} elements, got {}",
                    a.len(),
                    b.len()
                ));
            }
            a.iter()
                .zip(b)
                .enumerate()
                .find_map(|(i, (x, y))| diff(&format!("{path}[{i}]"), x, y))
        }
        (Value::Object(a), Value::Object(b)) => {
            for key in a.keys() {
                if !b.contains_key(key) {
                    return Some(format!("{path}.{key}: missing in regenerated data"));
                }
            }
            for key in b.keys() {
                if !a.contains_key(key) {
                    return Some(format!("{path}.{key}: not present in golden data"));
                }
            }
            a.iter()
                .find_map(|(key, x)| diff(&format!("{path}.{key}"), x, &b[key]))
        }
        _ => {
            if expected == actual {
                None
            } else {
                Some(format!("{path}: expected {expected}, got {actual}"))
            }
        }
    }
}

fn interleaved(n: u64, u: u64, poly: &str) -> Result<ExponentSeq> {
    let poly: ModPoly = poly.parse()?;
    let perm = poly.to_permutation()?;
    Ok(zc_exponents(n, u, 0)?.interleave(&perm)?)
}

fn halved_exps(seq: &ExponentSeq) -> Result<Vec<u64>> {
    seq.exps()
        .iter()
        .map(|&e| {
            if e % 2 != 0 {
                bail!("exponent {e} is not even; the halved convention does not apply");
            }
            Ok(e / 2)
        })
        .collect()
}

fn nonzero_shifts(seq: &ExponentSeq) -> Vec<u64> {
    periodic_autocorr(seq)
        .exact_zero()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &zero)| !zero)
        .map(|(d, _)| d as u64)
        .collect()
}

fn census_summary(report: &cazac::equiv::CensusReport) -> Value {
    json!({
        "n": report.n,
        "candidates": report.candidates,
        "references": report.references,
        "mode": report.mode,
        "seed": report.seed,
        "total": report.total,
        "duplicates": report.duplicates,
        "distinct": report.distinct,
        "reference_total": report.reference_total,
        "references_searched": report.references_searched,
        "inequivalent": report.inequivalent,
        "proportion": report.proportion,
        "witnesses_found": report.witnesses.len(),
    })
}

fn run_example1_n9() -> Result<Value> {
    let seq = interleaved(9, 1, "9:0,1,0,1")?;
    Ok(json!({
        "n": 9,
        "u": 1,
        "poly": "9:0,1,0,1",
        "exponents_mod_n": halved_exps(&seq)?,
        "is_zac": cazac_verdict(&seq).is_zac,
    }))
}

fn run_example1_n16() -> Result<Value> {
    let seq = interleaved(16, 1, "16:0,1,1,0,1")?;
    Ok(json!({
        "n": 16,
        "u": 1,
        "poly": "16:0,1,1,0,1",
        "exponents_mod_2n": seq.exps(),
        "is_zac": cazac_verdict(&seq).is_zac,
    }))
}

fn run_table_tab3_n16() -> Result<Value> {
    const ROWS: &[(u64, u64)] = &[
        (1, 1),
        (1, 3),
        (1, 5),
        (1, 7),
        (1, 9),
        (1, 11),
        (1, 13),
        (1, 15),
        (3, 1),
        (3, 3),
        (3, 9),
        (3, 11),
        (7, 1),
        (7, 3),
        (7, 5),
        (7, 7),
    ];
    let rows = ROWS
        .iter()
        .map(|&(a2, a1)| {
            let seq = interleaved(16, 1, &format!("16:0,{a1},{a2},0,1"))?;
            Ok(json!({
                "a2": a2,
                "a1": a1,
                "exponents_mod_2n": seq.exps(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "n": 16, "u": 1, "rows": rows }))
}

fn run_example2_n27_inverse() -> Result<Value> {
    let poly: ModPoly = "27:0,1,0,1".parse()?;
    let perm = poly.to_permutation()?;
    let seq = zc_exponents(27, 1, 0)?.interleave_inverse(&perm)?;
    Ok(json!({
        "n": 27,
        "u": 1,
        "poly": "27:0,1,0,1",
        "permutation": perm.map(),
        "inverse_permutation": perm.inv(),
        "exponents_mod_n": halved_exps(&seq)?,
        "is_zac": cazac_verdict(&seq).is_zac,
    }))
}

fn run_example3ii_n18() -> Result<Value> {
    let references: Vec<ExponentSeq> = generate_family(18, &FamilySpec::QppBoth)?
        .into_iter()
        .map(|m| m.seq)
        .collect();
    let rows = [4u64, 10, 16]
        .iter()
        .map(|&a| {
            let seq = interleaved(18, 1, &format!("18:0,{a},0,1"))?;
            let found = equivalent_to_family(&seq, &references, &SearchMode::Exhaustive)?;
            Ok(json!({
                "a": a,
                "exponents_mod_2n": seq.exps(),
                "inequivalent_to_references": found.is_none(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "n": 18,
        "u": 1,
        "references": "qpp-both",
        "rows": rows,
    }))
}

fn run_remark2_n35() -> Result<Value> {
    let e10 = interleaved(35, 1, "35:0,10,0,0,0,0,0,1")?;
    let e15 = interleaved(35, 1, "35:0,15,0,0,0,0,0,1")?;
    let kernel = shift_kernel(35, 7, 10, 2)?;
    let steps: Vec<u64> = (0..35)
        .map(|k| (kernel[(k + 10) % 35] + 35 - kernel[k]) % 35)
        .collect();
    if steps.iter().any(|&s| s != steps[0]) {
        bail!("shift kernel step is not constant: {steps:?}");
    }
    let nonzero = nonzero_shifts(&e10);
    let zero_pattern_holds = periodic_autocorr(&e10)
        .exact_zero()
        .iter()
        .enumerate()
        .skip(1)
        .all(|(d, &zero)| zero || d % 7 == 0);
    Ok(json!({
        "n": 35,
        "u": 1,
        "exponents_a10_mod_n": halved_exps(&e10)?,
        "exponents_a15_mod_n": halved_exps(&e15)?,
        "shift_kernel_d2": kernel,
        "kernel_shift_step": 10,
        "kernel_shift_constant": steps[0],
        "nonzero_shifts": nonzero,
        "zero_at_shifts_not_divisible_by_7": zero_pattern_holds,
    }))
}

fn run_census_n16() -> Result<Value> {
    let report = census(
        16,
        &FamilySpec::Deg4Grid,
        &FamilySpec::QppBoth,
        &SearchMode::Exhaustive,
    )?;
    Ok(census_summary(&report))
}

fn run_census_n27() -> Result<Value> {
    let report = census(
        27,
        &FamilySpec::PowerLinear { p: 3 },
        &FamilySpec::QppBoth,
        &SearchMode::Exhaustive,
    )?;
    Ok(census_summary(&report))
}

fn run_census_n150() -> Result<Value> {
    let report = census(
        150,
        &FamilySpec::PowerLinear { p: 5 },
        &FamilySpec::QppBoth,
        &SearchMode::Sampled { count: 200, seed: 1 },
    )?;
    Ok(census_summary(&report))
}

fn zero_zone_rows(n: u64, block: u64, coefficients: &[u64], poly_of: impl Fn(u64) -> String) -> Result<Value> {
    let rows = coefficients
        .iter()
        .map(|&a| {
            let seq = interleaved(n, 1, &poly_of(a))?;
            let profile = periodic_autocorr(&seq);
            let holds = profile
                .exact_zero()
                .iter()
                .enumerate()
                .skip(1)
                .all(|(d, &zero)| zero || d as u64 % block == 0);
            if !holds {
                bail!("guaranteed zero missed at n={n} a={a}");
            }
            Ok(json!({
                "a": a,
                "nonzero_shifts": nonzero_shifts(&seq),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "n": n,
        "u": 1,
        "a_values": coefficients,
        "zero_block": block,
        "rows": rows,
    }))
}

fn run_prop1_n35() -> Result<Value> {
    zero_zone_rows(35, 7, &[0, 5, 10, 15, 25, 30], |a| {
        format!("35:0,{a},0,0,0,0,0,1")
    })
}

fn run_prop1_n18() -> Result<Value> {
    zero_zone_rows(18, 9, &[4, 10, 16], |a| format!("18:0,{a},0,1"))
}

fn run_prop3_n25() -> Result<Value> {
    let report = census(
        25,
        &FamilySpec::QppBoth,
        &FamilySpec::Zc,
        &SearchMode::Exhaustive,
    )?;
    Ok(census_summary(&report))
}

fn run_theorem3_scan() -> Result<Value> {
    let report = aperiodic_scan(4, 12, 2, 1, 1)?;
    Ok(serde_json::to_value(report)?)
}

fn run_zc_aperiodic_sanity() -> Result<Value> {
    let bound = 0.55;
    let mut rows = Vec::new();
    let mut within = true;
    for n in [64u64, 256, 1024] {
        let values = aperiodic_autocorr(&zc_exponents(n, 1, 0)?);
        let peak = values[1..]
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max);
        let ratio = peak / (n as f64).sqrt();
        within &= ratio < bound;
        rows.push(json!({ "n": n, "max_ratio_sqrt": ratio }));
    }
    Ok(json!({
        "u": 1,
        "bound": bound,
        "rows": rows,
        "within_bound": within,
    }))
}
