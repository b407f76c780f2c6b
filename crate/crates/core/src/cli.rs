//! Command-line surface: argument definitions, command execution, and text /
//! JSON rendering. `main.rs` only parses arguments and maps the outcome to an
//! exit status.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closedform::{euclid_series, pe_series};
use crate::enumeration::{
    decompose, enumerate_by_sum, enumerate_pe_by_largest_sum, enumerate_pe_by_total, is_euclidean,
    phi, weight_exponent, PEKind, Partition,
};
use crate::qalgebra::{QSeries, XPoly};
use crate::verify::{self, Bounds, VerificationReport};
use crate::{Error, Result};

pub const FORMAT_VERSION: &str = "1";

pub const DEFAULT_EUCLID_ORDER: usize = 40;
pub const DEFAULT_PE_ORDER: usize = 24;

#[derive(Debug, Parser)]
#[command(
    name = "billiard-partitions",
    version,
    about = "Enumerate billiard partitions and check their generating functions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grouping {
    /// Sum of all parts in both components.
    Total,
    /// Sum of the largest part of each component.
    LargestSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Shapes,
    Euclid,
    Decomposition,
    Pe,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List Euclidean (or, with --pe, pseudo-Euclidean) billiard partitions.
    Enumerate {
        /// Sum of the parts.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        sum: u32,
        /// Append the weight exponent w and phi = 2^w.
        #[arg(long, conflicts_with = "pe")]
        weights: bool,
        /// Enumerate two-component partitions of this type.
        #[arg(long, value_enum)]
        pe: Option<PEKind>,
        /// How --sum is read for two-component partitions.
        #[arg(long, value_enum, default_value_t = Grouping::Total, requires = "pe")]
        group: Grouping,
    },
    /// Print generating-function coefficients q^0..q^max.
    Series {
        /// Highest q-degree (default 40, or 24 with --pe).
        #[arg(long)]
        max: Option<usize>,
        /// Coefficients as polynomials in the weight marker x.
        #[arg(long, conflicts_with = "pe")]
        weighted: bool,
        #[arg(long, value_enum)]
        pe: Option<PEKind>,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Split a Euclidean partition into its irreducible core and even padding.
    Decompose {
        /// Partition such as 9+4+2.
        partition: String,
    },
    /// Weight of a Euclidean partition.
    Phi { partition: String },
    /// Run verification suites; exits 1 on any mismatch.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Series order (euclid, pe) or largest sum (decomposition).
        #[arg(long)]
        max: Option<usize>,
        /// Largest number of parts for the shapes suite.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dmax: Option<u64>,
        /// Largest part for the shapes suite.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        nmax: Option<u32>,
    },
}

/// Rendered output plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            exit_code: 0,
        }
    }
}

/// JSON wrapper around every command result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope<T> {
    pub format_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: T,
}

impl<T: Serialize> OutputEnvelope<T> {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, result: T) -> Self {
        OutputEnvelope {
            format_version: FORMAT_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            result,
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// One line of `enumerate` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedItem {
    pub partition: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight_exponent: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phi: Option<String>,
}

/// One line of `series` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diff: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub partition: String,
    pub core: String,
    pub padding: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub partition: String,
    pub weight_exponent: u32,
    pub phi: String,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Enumerate {
            sum,
            weights,
            pe,
            group,
        } => cmd_enumerate(*sum, *weights, *pe, *group, json),
        Command::Series {
            max,
            weighted,
            pe,
            method,
        } => cmd_series(*max, *weighted, *pe, *method, json),
        Command::Decompose { partition } => cmd_decompose(partition, json),
        Command::Phi { partition } => cmd_phi(partition, json),
        Command::Verify {
            suite,
            max,
            dmax,
            nmax,
        } => cmd_verify(*suite, *max, dmax.map(|d| d as usize), *nmax, json),
    }
}

pub fn cmd_enumerate(
    sum: u32,
    weights: bool,
    pe: Option<PEKind>,
    group: Grouping,
    json: bool,
) -> Result<Outcome> {
    let items: Vec<EnumeratedItem> = match pe {
        Some(kind) => {
            let members = match group {
                Grouping::Total => enumerate_pe_by_total(kind, sum),
                Grouping::LargestSum => enumerate_pe_by_largest_sum(kind, sum),
            };
            members
                .iter()
                .map(|p| EnumeratedItem {
                    partition: p.to_string(),
                    weight_exponent: None,
                    phi: None,
                })
                .collect()
        }
        None => enumerate_by_sum(sum)
            .iter()
            .map(|p| {
                let (weight_exponent, phi) = if weights {
                    (Some(weight_exponent(p)?), Some(phi(p)?.to_string()))
                } else {
                    (None, None)
                };
                Ok(EnumeratedItem {
                    partition: p.to_string(),
                    weight_exponent,
                    phi,
                })
            })
            .collect::<Result<_>>()?,
    };

    if json {
        let mut params = BTreeMap::new();
        params.insert("sum".into(), json!(sum));
        params.insert("weights".into(), json!(weights));
        params.insert("pe".into(), json!(pe));
        if pe.is_some() {
            params.insert("group".into(), json!(group));
        }
        return Ok(Outcome::ok(
            OutputEnvelope::new("enumerate", params, items).render(),
        ));
    }
    let mut out = String::new();
    for item in &items {
        match (&item.weight_exponent, &item.phi) {
            (Some(w), Some(phi)) => writeln!(out, "{} w={w} phi={phi}", item.partition),
            _ => writeln!(out, "{}", item.partition),
        }
        .expect("writing to a String");
    }
    Ok(Outcome::ok(out))
}

/// Coefficients computed straight from enumeration.
fn oracle_series(order: usize, weighted: bool, pe: Option<PEKind>) -> Result<QSeries> {
    let mut coeffs = vec![XPoly::one()];
    for k in 1..=order {
        let c = match pe {
            Some(kind) => XPoly::constant(enumerate_pe_by_total(kind, k as u32).len()),
            None => {
                let members = enumerate_by_sum(k as u32);
                if weighted {
                    let mut c = XPoly::zero();
                    for p in &members {
                        c += &XPoly::monomial(1, weight_exponent(p)? as usize);
                    }
                    c
                } else {
                    XPoly::constant(members.len())
                }
            }
        };
        coeffs.push(c);
    }
    Ok(QSeries::from_coeffs(coeffs, order))
}

pub fn cmd_series(
    max: Option<usize>,
    weighted: bool,
    pe: Option<PEKind>,
    method: Method,
    json: bool,
) -> Result<Outcome> {
    if weighted && pe.is_some() {
        return Err(Error::contract(
            "weighted series are defined only for the Euclidean class",
        ));
    }
    let order = max.unwrap_or(if pe.is_some() {
        DEFAULT_PE_ORDER
    } else {
        DEFAULT_EUCLID_ORDER
    });
    let closed = match method {
        Method::Oracle => None,
        _ => Some(match pe {
            Some(kind) => pe_series(kind, order),
            None => euclid_series(order, weighted),
        }),
    };
    let oracle = match method {
        Method::Closed => None,
        _ => Some(oracle_series(order, weighted, pe)?),
    };

    let mut rows = Vec::with_capacity(order + 1);
    let mut differing = 0;
    for k in 0..=order {
        let c = closed.as_ref().map(|s| s.coeff(k).cloned()).transpose()?;
        let o = oracle.as_ref().map(|s| s.coeff(k).cloned()).transpose()?;
        let diff = match (&c, &o) {
            (Some(c), Some(o)) => {
                let d = c - o;
                if !d.is_zero() {
                    differing += 1;
                }
                Some(d.to_string())
            }
            _ => None,
        };
        rows.push(SeriesRow {
            degree: k,
            closed: c.map(|p| p.to_string()),
            oracle: o.map(|p| p.to_string()),
            diff,
        });
    }
    let exit_code = if differing > 0 { 1 } else { 0 };

    if json {
        let mut params = BTreeMap::new();
        params.insert("max".into(), json!(order));
        params.insert("weighted".into(), json!(weighted));
        params.insert("pe".into(), json!(pe));
        params.insert("method".into(), json!(method));
        return Ok(Outcome {
            output: OutputEnvelope::new("series", params, rows).render(),
            exit_code,
        });
    }
    let mut out = String::new();
    for row in &rows {
        let line = match (&row.closed, &row.oracle, &row.diff) {
            (Some(c), Some(o), Some(d)) => format!("q^{}: {c} oracle={o} diff={d}", row.degree),
            (Some(v), None, _) | (None, Some(v), _) => format!("q^{}: {v}", row.degree),
            _ => unreachable!("at least one method runs"),
        };
        writeln!(out, "{line}").expect("writing to a String");
    }
    Ok(Outcome {
        output: out,
        exit_code,
    })
}

/// Parses a partition and explains why it is not Euclidean, if it is not.
pub fn parse_euclidean(text: &str) -> Result<Partition> {
    let p: Partition = text.parse()?;
    if is_euclidean(&p) {
        return Ok(p);
    }
    let reason = match p.smallest() {
        Some(s) if s % 2 == 1 => "smallest part must be even".to_string(),
        _ => {
            let w = p
                .parts()
                .windows(2)
                .find(|w| w[0] % 2 == 1 && w[1] % 2 == 1)
                .expect("a non-member with an even tail has two adjacent odd parts");
            format!("adjacent parts {} and {} are both odd", w[0], w[1])
        }
    };
    Err(Error::NotMember(format!(
        "{p} is not a Euclidean billiard partition: {reason}"
    )))
}

pub fn cmd_decompose(text: &str, json: bool) -> Result<Outcome> {
    let p = parse_euclidean(text)?;
    let (core, padding) = decompose(&p)?;
    if json {
        let mut params = BTreeMap::new();
        params.insert("partition".into(), json!(p.to_string()));
        let result = Decomposition {
            partition: p.to_string(),
            core: core.to_string(),
            padding: padding.to_string(),
        };
        return Ok(Outcome::ok(
            OutputEnvelope::new("decompose", params, result).render(),
        ));
    }
    Ok(Outcome::ok(format!("({core}) + ({padding})\n")))
}

pub fn cmd_phi(text: &str, json: bool) -> Result<Outcome> {
    let p = parse_euclidean(text)?;
    let w = weight_exponent(&p)?;
    let phi = phi(&p)?.to_string();
    if json {
        let mut params = BTreeMap::new();
        params.insert("partition".into(), json!(p.to_string()));
        let result = Weight {
            partition: p.to_string(),
            weight_exponent: w,
            phi,
        };
        return Ok(Outcome::ok(
            OutputEnvelope::new("phi", params, result).render(),
        ));
    }
    Ok(Outcome::ok(format!("w={w} phi={phi}\n")))
}

pub fn cmd_verify(
    suite: Suite,
    max: Option<usize>,
    dmax: Option<usize>,
    nmax: Option<u32>,
    json: bool,
) -> Result<Outcome> {
    let defaults = Bounds::default();
    let d_max = dmax.unwrap_or(defaults.d_max);
    let n_max = nmax.unwrap_or(defaults.n_max);
    let shape_order = verify::shape_order_for(d_max).max(n_max as usize);
    let reports: Vec<VerificationReport> = match suite {
        Suite::Shapes => vec![verify::verify_shapes(d_max, n_max, shape_order)?],
        Suite::Euclid => vec![verify::verify_euclid_series(
            max.unwrap_or(defaults.euclid_order),
        )?],
        Suite::Decomposition => vec![verify::verify_decomposition(
            max.map_or(defaults.sum_max, |m| m as u32),
        )?],
        Suite::Pe => vec![verify::verify_pe(max.unwrap_or(defaults.pe_order))?],
        Suite::All => verify::verify_all(Bounds {
            d_max,
            n_max,
            shape_order,
            euclid_order: max.unwrap_or(defaults.euclid_order),
            sum_max: max.map_or(defaults.sum_max, |m| m as u32),
            pe_order: max.unwrap_or(defaults.pe_order),
        })?,
    };
    let exit_code = if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    };
    let output = if json {
        let mut params = BTreeMap::new();
        params.insert("suite".into(), json!(suite));
        params.insert("max".into(), json!(max));
        params.insert("dmax".into(), json!(d_max));
        params.insert("nmax".into(), json!(n_max));
        OutputEnvelope::new("verify", params, reports).render()
    } else {
        reports.iter().map(ToString::to_string).collect()
    };
    Ok(Outcome { output, exit_code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let mut argv = vec!["billiard-partitions"];
        argv.extend_from_slice(args);
        run(&Cli::try_parse_from(argv).expect("valid arguments"))
    }

    #[test]
    fn enumerate_text() {
        let out = run_args(&["enumerate", "--sum", "15"]).unwrap();
        let lines: Vec<&str> = out.output.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[8], "6+4+3+2");
        assert_eq!(run_args(&["enumerate", "--sum", "1"]).unwrap().output, "");
        let out = run_args(&["enumerate", "--sum", "4", "--pe", "light"]).unwrap();
        assert_eq!(out.output, "2|2\n");
        let out = run_args(&["enumerate", "--sum", "12", "--weights"]).unwrap();
        assert!(out.output.contains("6+4+2 w=2 phi=4\n"), "{}", out.output);
    }

    #[test]
    fn series_text() {
        let out = run_args(&["series", "--max", "15"]).unwrap();
        assert_eq!(out.output.lines().last(), Some("q^15: 9"));
        let out = run_args(&["series", "--max", "12", "--weighted"]).unwrap();
        assert!(out.output.lines().any(|l| l == "q^12: 1+2x+x^2"));
        assert_eq!(
            run_args(&["series", "--max", "0"]).unwrap().output,
            "q^0: 1\n"
        );
        let out = run_args(&["series", "--max", "10", "--method", "both", "--weighted"]).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.output.contains("q^10: 1+2x oracle=1+2x diff=0"));
        let out = run_args(&[
            "series", "--max", "6", "--pe", "space", "--method", "oracle",
        ])
        .unwrap();
        assert!(out.output.starts_with("q^0: 1\nq^1: 0\nq^2: 0\nq^3: 1\n"));
    }

    #[test]
    fn decompose_and_phi() {
        assert_eq!(
            run_args(&["decompose", "9+4+2"]).unwrap().output,
            "(5+4+2) + (4+0+0)\n"
        );
        assert_eq!(run_args(&["decompose", "2"]).unwrap().output, "(2) + (0)\n");
        let err = run_args(&["decompose", "9"]).unwrap_err();
        assert!(err.to_string().contains("smallest part must be even"));
        let err = run_args(&["phi", "7+5+2"]).unwrap_err();
        assert!(err.to_string().contains("7 and 5"));
        assert!(matches!(
            run_args(&["decompose", "2+4"]),
            Err(Error::Parse(_))
        ));
        assert_eq!(run_args(&["phi", "6+4+2"]).unwrap().output, "w=2 phi=4\n");
    }

    #[test]
    fn verify_exit_codes() {
        let out = run_args(&["verify", "--suite", "euclid", "--max", "15"]).unwrap();
        assert_eq!(out.exit_code, 0, "{}", out.output);
        let out = run_args(&["verify", "--suite", "shapes", "--dmax", "1", "--nmax", "3"]).unwrap();
        assert_eq!(out.exit_code, 0, "{}", out.output);
        assert!(out.output.starts_with("suite shapes: PASS"));
    }

    #[test]
    fn usage_errors_are_rejected_by_the_parser() {
        for args in [
            vec!["series", "--weighted", "--pe", "light"],
            vec!["enumerate", "--sum", "0"],
            vec!["enumerate", "--sum", "4", "--weights", "--pe", "time"],
            vec!["enumerate", "--sum", "4", "--group", "largest-sum"],
            vec!["verify", "--suite", "nope"],
            vec!["enumerate"],
        ] {
            let mut argv = vec!["billiard-partitions"];
            argv.extend(args.iter().copied());
            let err = Cli::try_parse_from(&argv).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{argv:?}");
        }
    }

    #[test]
    fn enumerate_json_round_trips() {
        let out = run_args(&["enumerate", "--sum", "15", "--weights", "--format", "json"]).unwrap();
        let parsed: OutputEnvelope<Vec<EnumeratedItem>> =
            serde_json::from_str(&out.output).unwrap();
        assert_eq!(parsed.format_version, FORMAT_VERSION);
        assert_eq!(parsed.result.len(), 9);
        assert_eq!(parsed.render(), out.output);
    }
}
