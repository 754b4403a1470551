//! File and stream plumbing: atomic writes, sequence and permutation
//! loading, and report serialization helpers.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;

use cazac::perm::{ModPoly, Permutation};
use cazac::seq::ExponentSeq;

/// Write to `path` atomically (write-temp-then-rename), or to stdout when
/// no path is given.
pub fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
            if let Some(dir) = dir {
                fs::create_dir_all(dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
                .context("creating temporary file")?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(path)
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(())
        }
    }
}

/// Load an exponent sequence from its JSON file format.
pub fn load_seq(path: &Path) -> Result<ExponentSeq> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text)
        .with_context(|| format!("parsing sequence file {}", path.display()))
}

/// Resolve a permutation argument: inline polynomial text (`N:a0,a1,...`),
/// or a file containing either a JSON permutation array or polynomial text.
pub fn load_perm(spec: &str) -> Result<Permutation> {
    let text = if spec.contains(':') {
        spec.to_string()
    } else {
        fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?
    };
    let text = text.trim();
    if text.starts_with('[') {
        let map: Vec<u32> = serde_json::from_str(text).context("parsing permutation array")?;
        return Ok(Permutation::from_map(map)?);
    }
    let poly: ModPoly = text.parse()?;
    Ok(poly.to_permutation()?)
}

/// Attach the format version to a JSON report.
pub fn with_schema(value: Value) -> Result<Value> {
    let Value::Object(mut map) = value else {
        bail!("report serialization produced a non-object");
    };
    map.insert("schema".into(), Value::from(1));
    Ok(Value::Object(map))
}

/// Render a JSON value in the stable on-disk form.
pub fn pretty(value: &Value) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

/// Render rows as CSV with a header line.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner()?;
    Ok(String::from_utf8(bytes)?)
}

/// Fixed-precision rendering for exported samples.
pub fn sig(x: f64) -> String {
    format!("{x:.12}")
}
