//! The `sigcycle` command line.
//!
//! [`run`] takes the full argument vector and returns the exit code with
//! the captured stdout and stderr, so the binary is a thin wrapper and the
//! whole surface is testable in-process. Exit codes: `0` success, `1`
//! domain error (one `error: <kind>: <message>` line on stderr), `2` usage
//! error. Nothing is written to stdout when a command fails.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{self, Descriptor};
use crate::cycle::{SignedCycle, VertexSet};
use crate::descriptors::{describe, DescriptorReport};
use crate::json::{self, format_float};
use crate::matrix::{build_a, build_b};
use crate::recovery::{self, RecoveryResult};
use crate::spectral::{self, ExtremeEigenvalue};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "sigcycle",
    version,
    about = "Spectral toolkit for signed cycle graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print B_β or A_β for a sign string.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        signs: String,
        #[arg(long, value_enum, default_value = "A")]
        which: Which,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Closed-form spectrum and characteristic polynomial.
    Spectrum {
        #[arg(allow_hyphen_values = true)]
        signs: String,
        /// Also run the Jacobi oracle and report the largest deviation.
        #[arg(long)]
        oracle: bool,
    },
    /// Real eigenvectors of A_β, for every j or a single one.
    Eigvecs {
        #[arg(allow_hyphen_values = true)]
        signs: String,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Recover edge signs from eigenvector(s) given as JSON arrays.
    Recover {
        #[arg(long)]
        n: usize,
        /// Cosine eigenvector for j = 0, or the ±2 eigenvector with --eigen.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Sine eigenvector for j = 0.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Treat --x as the eigenvector of +2 or -2.
        #[arg(long, allow_hyphen_values = true)]
        eigen: Option<String>,
    },
    /// Wiener-type sum, energy, norms and spectrum key.
    Descriptors {
        #[arg(allow_hyphen_values = true)]
        signs: String,
    },
    /// Partition all 2^n signings by descriptor value.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with_all = ["all", "census", "bulk"])]
        descriptor: Option<String>,
        /// Every descriptor (the default).
        #[arg(long)]
        all: bool,
        /// Switching-class census instead of descriptor partitions.
        #[arg(long, conflicts_with_all = ["all", "bulk"])]
        census: bool,
        /// One descriptor row per signing.
        #[arg(long, conflicts_with = "all")]
        bulk: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Test two sign strings for isomorphism under rotation (and reflection).
    Iso {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long)]
        unoriented: bool,
    },
    /// Switch a set of vertices.
    Switch {
        #[arg(allow_hyphen_values = true)]
        signs: String,
        /// Comma-separated 1-based vertex labels.
        #[arg(long, allow_hyphen_values = true)]
        vertices: String,
    },
    /// List the printed statements this tool deliberately departs from.
    Errata,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn domain_error(e: &Error) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", e.kind(), e),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::domain_error(&e),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = json::to_string(value).map_err(|e| Error::Input(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn parse_vector(name: &str, raw: &str) -> Result<Vec<f64>> {
    serde_json::from_str(raw).map_err(|e| Error::Input(format!("--{name}: {e}")))
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::Matrix {
            signs,
            which,
            format,
        } => {
            let c: SignedCycle = signs.parse()?;
            let (name, m) = match which {
                Which::A => ("A", build_a(&c)),
                Which::B => ("B", build_b(&c)),
            };
            match format {
                Format::Csv => Ok(m.to_csv()),
                Format::Json => {
                    to_json(&json!({ "matrix": name, "n": c.n(), "rows": m.to_rows() }))
                }
            }
        }
        Command::Spectrum { signs, oracle } => {
            let c: SignedCycle = signs.parse()?;
            spectrum_json(&c, oracle)
        }
        Command::Eigvecs { signs, j } => {
            let c: SignedCycle = signs.parse()?;
            let mut basis = spectral::full_eigenbasis(&c);
            if let Some(j) = j {
                let max = basis.pairs.len() - 1;
                basis.pairs.retain(|p| p.j == j);
                if basis.pairs.is_empty() {
                    return Err(Error::IndexOutOfRange { index: j, max });
                }
            }
            to_json(&basis)
        }
        Command::Recover { n, x, y, eigen } => {
            let x = parse_vector("x", &x)?;
            let y = y.map(|raw| parse_vector("y", &raw)).transpose()?;
            if n < 3 {
                return Err(Error::CycleTooShort(n));
            }
            for v in std::iter::once(&x).chain(y.as_ref()) {
                if v.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        actual: v.len(),
                    });
                }
            }
            let result = match eigen {
                Some(e) => {
                    if y.is_some() {
                        return Err(Error::Input("--eigen takes a single vector".into()));
                    }
                    recovery::recover_from_pm2_vector(&x, e.parse::<ExtremeEigenvalue>()?)?
                }
                None => recovery::recover_from_pair(&x, y.as_deref())?,
            };
            to_json(&recovery_json(&result))
        }
        Command::Descriptors { signs } => to_json(&describe(&signs.parse()?)),
        Command::Classify {
            n,
            descriptor,
            all: _,
            census,
            bulk,
            format,
        } => {
            if census {
                let rep = classify::switching_class_census(n)?;
                return match format {
                    Format::Json => to_json(&rep),
                    Format::Csv => census_csv(&rep),
                };
            }
            if bulk {
                let rows = classify::descriptor_rows(n)?;
                return match format {
                    Format::Csv => bulk_csv(&rows),
                    Format::Json => to_json(&rows),
                };
            }
            let rows = match descriptor {
                Some(name) => vec![classify::partition_by(name.parse::<Descriptor>()?, n)?],
                None => {
                    let rep = classify::efficacy_report(n)?;
                    if format == Format::Json {
                        return to_json(&rep);
                    }
                    rep.rows
                }
            };
            match format {
                Format::Json => to_json(&rows[0]),
                Format::Csv => partition_csv(&rows),
            }
        }
        Command::Iso {
            first,
            second,
            unoriented,
        } => {
            let a: SignedCycle = first.parse()?;
            let b: SignedCycle = second.parse()?;
            let found = if unoriented {
                a.iso_unoriented_match(&b)?
            } else {
                a.iso_oriented(&b)?.map(|k| (false, k))
            };
            to_json(&json!({
                "isomorphic": found.is_some(),
                "oriented": !unoriented,
                "reversed": found.map(|(r, _)| r),
                "shift": found.map(|(_, k)| k),
            }))
        }
        Command::Switch { signs, vertices } => {
            let c: SignedCycle = signs.parse()?;
            let labels = vertices
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Input(format!("bad vertex label {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let w = VertexSet::new(c.n(), labels)?;
            Ok(format!("{}\n", c.switch(&w)?))
        }
        Command::Errata => Ok(ERRATA.to_owned()),
    }
}

fn spectrum_json(c: &SignedCycle, oracle: bool) -> Result<String> {
    let inv = c.invariants();
    let spectrum = spectral::spectrum_of(c);
    let values = spectrum.values();
    let mut out = json!({
        "n": c.n(),
        "s": inv.s,
        "eigenvalues": values,
        "char_poly": spectral::char_poly_coefficients(c.n(), inv.s)?,
    });
    if oracle {
        let got = spectral::oracle_eigenvalues(&build_a(c))?;
        let dev = got
            .iter()
            .zip(&values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        out["oracle_eigenvalues"] = json!(got);
        out["max_deviation"] = Value::from(dev);
    }
    to_json(&out)
}

fn recovery_json(r: &RecoveryResult) -> Value {
    json!({
        "n": r.n(),
        "signs": r.sign_string(),
        "undetermined": r.undetermined(),
        "rules": r.rules,
        "inferred_s": r.inferred_s,
    })
}

fn csv_string(records: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in records {
        w.write_record(&rec)
            .map_err(|e| Error::Input(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|s| s.to_string()).collect()
}

fn bulk_csv(rows: &[DescriptorReport]) -> Result<String> {
    let head = header(&[
        "n",
        "sign_string",
        "r",
        "s",
        "wiener_sum",
        "energy",
        "n1",
        "n2",
        "n3",
        "spectrum_key",
    ]);
    csv_string(std::iter::once(head).chain(rows.iter().map(|d| {
        vec![
            d.n.to_string(),
            d.sign_string.clone(),
            d.r.to_string(),
            d.s.to_string(),
            d.wiener_sum.to_string(),
            format_float(d.energy),
            format_float(d.n1),
            format_float(d.n2),
            format_float(d.n3),
            d.spectrum_key.clone(),
        ]
    })))
}

fn join_sizes(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn partition_csv(rows: &[classify::PartitionReport]) -> Result<String> {
    let head = header(&[
        "n",
        "descriptor",
        "class_count",
        "fully_discriminating",
        "collision_rate",
        "class_sizes",
    ]);
    csv_string(std::iter::once(head).chain(rows.iter().map(|r| {
        vec![
            r.n.to_string(),
            r.descriptor_name.clone(),
            r.class_count.to_string(),
            r.fully_discriminating.to_string(),
            format_float(r.collision_rate),
            join_sizes(&r.class_sizes),
        ]
    })))
}

fn census_csv(rep: &classify::CensusReport) -> Result<String> {
    let head = header(&[
        "n",
        "representative",
        "size",
        "spectrum_constant",
        "spectrum_key",
    ]);
    csv_string(std::iter::once(head).chain(rep.classes.iter().map(|c| {
        vec![
            rep.n.to_string(),
            c.representative.clone(),
            c.size.to_string(),
            c.spectrum_constant.to_string(),
            c.spectrum_key.clone(),
        ]
    })))
}

const ERRATA: &str = "\
Printed statements this tool departs from, and what it computes instead:

1. n = 3 example spectra. Printed: even r -> 2, -sqrt3, -sqrt3; odd r -> sqrt3, sqrt3, -2.
   These do not sum to zero although tr A = 0. Computed from 2cos((2j+s)pi/n):
   even r -> 2, -1, -1; odd r -> 1, 1, -2.

2. Real eigenvector formulas. Printed: x_jk = cos((2j+s)k pi/n), y_jk = sin((2j+s)k pi/n).
   These omit the partial sign product; for C_3 with signs +-+ the bare cosine vector
   (1/2, -1/2, -1) is not an eigenvector. Used: x_jk = s_1...s_k cos((2j+s)k pi/n),
   y_jk = s_1...s_k sin((2j+s)k pi/n).

3. Wiener-type sum. Printed: 2n - 2r. The entry sum of A is 2n - 4r
   (each edge contributes 2 sigma_k), consistent with the printed range 2n, ..., -2n.

4. Energy. Printed: the eigenvalues are roots of unity so the energy is n. The eigenvalues
   of A are 2cos(.) (the roots of unity belong to B); energy is computed as sum |mu_j|,
   e.g. 4 for C_3 with r even.

5. N3 case. Printed: N3 differs from 2 only when n is odd and r is even. Since r even
   always gives eigenvalue 2, the exceptional case is n even and r odd, where
   N3 = 2cos(pi/n).

6. Undetermined pair from the cosine vector (s = 1, n = 2m). Printed statement: sigma_{m-1}
   and sigma_m. The zero component is x_m, which spoils the ratios at k = m and k = m + 1;
   this tool reports {m, m+1} as undetermined.

7. -2 as an eigenvalue. Printed: -2 occurs when r and n are odd. It occurs exactly when
   n - s is even, which also covers r even with n even (e.g. C_4 all positive).

8. Powers of B. Printed: B^k has entries s_j...s_{j+k-1} at (i, j = i+k). Repeated
   multiplication gives s_{j-k+1}...s_j, the k signs ending at column j (for C_3 with
   signs +-+, B^2 has -1 at (1, 3), not +1).
";

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut argv = vec!["sigcycle"];
        argv.extend_from_slice(args);
        let out = run(argv);
        assert_eq!(out.code, 0, "stderr: {}", out.stderr);
        out.stdout
    }

    #[test]
    fn spectrum_example() {
        assert_eq!(
            run_ok(&["spectrum", "++++"]),
            "{\"char_poly\":[1,0,-4,0,0],\"eigenvalues\":[2,0,0,-2],\"n\":4,\"s\":0}\n"
        );
    }

    #[test]
    fn hyphen_leading_sign_strings() {
        assert_eq!(run_ok(&["switch", "-+++", "--vertices", "1"]), "+-++\n");
        let out = run_ok(&["iso", "+-++", "-+++"]);
        assert!(out.contains("\"shift\":1"), "{out}");
    }

    #[test]
    fn exit_codes() {
        let out = run(["sigcycle", "spectrum", "++"]);
        assert_eq!(out.code, 1);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.starts_with("error: cycle-too-short:"));
        assert_eq!(out.stderr.lines().count(), 1);
        let out = run(["sigcycle", "frobnicate"]);
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty());
    }
}
