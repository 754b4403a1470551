//! Command-line surface for exact interleaved-sequence experiments.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! reproduction does not match its golden data.

mod io;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cazac::corr::{aperiodic_autocorr, aperiodic_scan, cazac_verdict, periodic_autocorr};
use cazac::equiv::{are_equivalent, census, FamilySpec, SearchMode};
use cazac::perm::{is_pp, power_linear_family, qpp_family, ModPoly};
use cazac::seq::{render_complex, zc_exponents};

#[derive(Parser)]
#[command(name = "cazac", version, about = "Exact arithmetic for interleaved polyphase sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a base sequence in exponent form.
    GenZc {
        /// Sequence length.
        #[arg(long)]
        n: u64,
        /// Root index, coprime to the length.
        #[arg(long)]
        u: u64,
        /// Offset parameter.
        #[arg(long, default_value_t = 0)]
        l: u64,
        /// Emit complex samples as CSV instead of exponent JSON.
        #[arg(long)]
        render: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a polynomial permutes its residue ring.
    PpTest {
        /// Ring modulus.
        #[arg(long)]
        n: u64,
        /// Polynomial in `N:a0,a1,...` form.
        #[arg(long)]
        poly: String,
        /// Decision method.
        #[arg(long, value_enum, default_value_t = Method::Lemma)]
        method: Method,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List a permutation-polynomial family over Z_N.
    PpFamily {
        /// Ring modulus.
        #[arg(long)]
        n: u64,
        /// Prime for the power-plus-linear family.
        #[arg(long, required_unless_present = "qpp")]
        p: Option<u64>,
        /// List the quadratic family instead.
        #[arg(long)]
        qpp: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reorder a sequence through a permutation.
    Interleave {
        /// Sequence JSON file.
        #[arg(long)]
        seq: PathBuf,
        /// Permutation: inline `N:a0,a1,...` text, or a file holding a
        /// JSON permutation array or polynomial text.
        #[arg(long)]
        perm: String,
        /// Use the inverse permutation.
        #[arg(long)]
        inverse: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Autocorrelation profile of a sequence.
    Autocorr {
        /// Sequence JSON file.
        #[arg(long)]
        seq: PathBuf,
        /// Compute the aperiodic profile instead of the periodic one.
        #[arg(long)]
        aperiodic: bool,
        /// Include exact zero verdicts (periodic only).
        #[arg(long, conflicts_with = "aperiodic")]
        exact: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact constant-amplitude / zero-autocorrelation verdict.
    Cazac {
        /// Sequence JSON file.
        #[arg(long)]
        seq: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide five-operation equivalence of two sequences.
    Equiv {
        /// First sequence JSON file.
        #[arg(long)]
        seq1: PathBuf,
        /// Second sequence JSON file.
        #[arg(long)]
        seq2: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count candidates inequivalent to a reference family.
    Census {
        /// Sequence length.
        #[arg(long)]
        n: u64,
        /// Candidate family spec: zc, qpp-both, xp-ax:P, or deg4-grid.
        #[arg(long)]
        candidates: String,
        /// Reference family spec: zc, qpp-both, xp-ax:P, or deg4-grid.
        #[arg(long)]
        references: String,
        /// Search mode: exhaustive, or sampled:COUNT:SEED.
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Permit long-running parameter ranges.
        #[arg(long)]
        allow_long: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Peak aperiodic autocorrelation across power-of-two lengths.
    AperiodicScan {
        /// Smallest exponent (N = 2^n).
        #[arg(long)]
        nmin: u32,
        /// Largest exponent (at most 14).
        #[arg(long)]
        nmax: u32,
        /// Interleaving quadratic as `F2,F1`.
        #[arg(long)]
        qpp: String,
        /// Root index (odd).
        #[arg(long)]
        u: u64,
        /// Permit long-running parameter ranges.
        #[arg(long)]
        allow_long: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate a registered experiment and diff against golden data.
    Reproduce {
        /// Experiment id.
        #[arg(long)]
        id: String,
        /// Permit long-running experiments.
        #[arg(long)]
        allow_long: bool,
        /// Also write the regenerated report to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Evaluate at every point.
    Brute,
    /// Coefficient criteria with factorization.
    Lemma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::GenZc { n, u, l, render, out } => {
            let seq = zc_exponents(n, u, l)?;
            let text = if render {
                let rows: Vec<Vec<String>> = render_complex(&seq)
                    .values()
                    .iter()
                    .map(|v| vec![io::sig(v.re), io::sig(v.im)])
                    .collect();
                io::to_csv(&["re", "im"], &rows)?
            } else {
                format!("{}\n", serde_json::to_string_pretty(&seq)?)
            };
            io::write_text(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::PpTest { n, poly, method, out } => {
            let poly: ModPoly = poly.parse()?;
            if poly.modulus() != n {
                bail!(
                    "polynomial modulus {} does not match --n {n}",
                    poly.modulus()
                );
            }
            let (is_perm, method_name) = match method {
                Method::Lemma => (is_pp(&poly)?, "lemma"),
                Method::Brute => match poly.to_permutation() {
                    Ok(_) => (true, "brute"),
                    Err(cazac::Error::NotBijective { .. }) => (false, "brute"),
                    Err(e) => return Err(e.into()),
                },
            };
            let doc = json!({
                "schema": 1,
                "n": n,
                "poly": poly.to_string(),
                "method": method_name,
                "is_pp": is_perm,
            });
            io::write_text(out.as_deref(), &io::pretty(&doc)?)?;
            Ok(0)
        }
        Command::PpFamily { n, p, qpp, out } => {
            let (family, polys) = if qpp {
                ("qpp".to_string(), qpp_family(n)?)
            } else {
                let p = p.expect("clap enforces --p without --qpp");
                (format!("xp-ax:{p}"), power_linear_family(n, p, false)?)
            };
            let doc = json!({
                "schema": 1,
                "n": n,
                "family": family,
                "count": polys.len(),
                "polys": polys.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            io::write_text(out.as_deref(), &io::pretty(&doc)?)?;
            Ok(0)
        }
        Command::Interleave { seq, perm, inverse, out } => {
            let seq = io::load_seq(&seq)?;
            let perm = io::load_perm(&perm)?;
            let result = if inverse {
                seq.interleave_inverse(&perm)?
            } else {
                seq.interleave(&perm)?
            };
            let text = format!("{}\n", serde_json::to_string_pretty(&result)?);
            io::write_text(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Autocorr { seq, aperiodic, exact, format, out } => {
            let seq = io::load_seq(&seq)?;
            let text = if aperiodic {
                let values = aperiodic_autocorr(&seq);
                match format {
                    Format::Json => {
                        let rows: Vec<_> = values
                            .iter()
                            .enumerate()
                            .map(|(d, v)| {
                                json!({"d": d, "re": v.re, "im": v.im, "abs": v.norm()})
                            })
                            .collect();
                        let doc = json!({
                            "schema": 1,
                            "n": seq.n(),
                            "kind": "aperiodic",
                            "rows": rows,
                        });
                        io::pretty(&doc)?
                    }
                    Format::Csv => {
                        let rows: Vec<Vec<String>> = values
                            .iter()
                            .enumerate()
                            .map(|(d, v)| {
                                vec![
                                    d.to_string(),
                                    io::sig(v.re),
                                    io::sig(v.im),
                                    io::sig(v.norm()),
                                ]
                            })
                            .collect();
                        io::to_csv(&["d", "re", "im", "abs"], &rows)?
                    }
                }
            } else {
                let profile = periodic_autocorr(&seq);
                match format {
                    Format::Json => {
                        let rows: Vec<_> = profile
                            .periodic()
                            .iter()
                            .enumerate()
                            .map(|(d, v)| {
                                let mut row = json!({
                                    "d": d,
                                    "re": v.re,
                                    "im": v.im,
                                    "abs": v.norm(),
                                });
                                if exact {
                                    row["exact_zero"] =
                                        json!(profile.exact_zero()[d]);
                                }
                                row
                            })
                            .collect();
                        let doc = json!({
                            "schema": 1,
                            "n": seq.n(),
                            "kind": "periodic",
                            "rows": rows,
                        });
                        io::pretty(&doc)?
                    }
                    Format::Csv => {
                        let mut header = vec!["d", "re", "im", "abs"];
                        if exact {
                            header.push("exact_zero");
                        }
                        let rows: Vec<Vec<String>> = profile
                            .periodic()
                            .iter()
                            .enumerate()
                            .map(|(d, v)| {
                                let mut row = vec![
                                    d.to_string(),
                                    io::sig(v.re),
                                    io::sig(v.im),
                                    io::sig(v.norm()),
                                ];
                                if exact {
                                    row.push(profile.exact_zero()[d].to_string());
                                }
                                row
                            })
                            .collect();
                        io::to_csv(&header, &rows)?
                    }
                }
            };
            io::write_text(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Cazac { seq, out } => {
            let seq = io::load_seq(&seq)?;
            let verdict = cazac_verdict(&seq);
            let doc = json!({
                "schema": 1,
                "n": seq.n(),
                "is_ca": verdict.is_ca,
                "is_zac": verdict.is_zac,
                "zcz_length": verdict.zcz_length,
                "failing_shift": verdict.failing_shift,
            });
            io::write_text(out.as_deref(), &io::pretty(&doc)?)?;
            Ok(0)
        }
        Command::Equiv { seq1, seq2, out } => {
            let s1 = io::load_seq(&seq1)?;
            let s2 = io::load_seq(&seq2)?;
            let witness = are_equivalent(&s1, &s2)?;
            let doc = json!({
                "schema": 1,
                "n": s1.n(),
                "equivalent": witness.is_some(),
                "witness": witness,
            });
            io::write_text(out.as_deref(), &io::pretty(&doc)?)?;
            Ok(0)
        }
        Command::Census { n, candidates, references, mode, allow_long, out } => {
            let candidates: FamilySpec = candidates.parse()?;
            let references: FamilySpec = references.parse()?;
            let mode: SearchMode = mode.parse()?;
            if n <= 36 && !matches!(mode, SearchMode::Exhaustive) {
                bail!("exhaustive mode is mandatory for N <= 36");
            }
            if n > 36 && matches!(mode, SearchMode::Exhaustive) && !allow_long {
                bail!("exhaustive census above N = 36 requires --allow-long");
            }
            if n > 64 && !allow_long {
                bail!("census above N = 64 requires --allow-long");
            }
            let report = census(n, &candidates, &references, &mode)?;
            let doc = io::with_schema(serde_json::to_value(&report)?)?;
            io::write_text(out.as_deref(), &io::pretty(&doc)?)?;
            Ok(0)
        }
        Command::AperiodicScan { nmin, nmax, qpp, u, allow_long, out } => {
            let (f2, f1) = qpp
                .split_once(',')
                .ok_or_else(|| anyhow::anyhow!("--qpp expects `F2,F1`"))?;
            let f2: u64 = f2.trim().parse()?;
            let f1: u64 = f1.trim().parse()?;
            if nmax > 12 && !allow_long {
                bail!("scans above n = 12 require --allow-long");
            }
            let report = aperiodic_scan(nmin, nmax, f2, f1, u)?;
            let doc = io::with_schema(serde_json::to_value(&report)?)?;
            io::write_text(out.as_deref(), &io::pretty(&doc)?)?;
            Ok(0)
        }
        Command::Reproduce { id, allow_long, out } => {
            let outcome = reproduce::run(&id, allow_long)?;
            let text = io::pretty(&outcome.doc)?;
            if out.is_some() {
                io::write_text(out.as_deref(), &text)?;
            }
            print!("{text}");
            if let Some(detail) = outcome.mismatch {
                eprintln!("mismatch: {detail}");
                return Ok(2);
            }
            Ok(0)
        }
    }
}
