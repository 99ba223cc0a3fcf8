//! Argument handling and subcommands for the `penrose` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use penrose_core::generator::{Method, Patch};
use penrose_core::similarity::{enumerate_factors, InflationCenter, ScalingFactor};
use penrose_core::{Error, GoldenNumber, GoldenVector, InternalPoint, LatticePoint};
use serde_json::json;

use crate::io::{center_to_json, export_csv, export_json, report_to_json, IoError};
use crate::par::Runner;
use crate::svg::{emit_svg, Overlay};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUNDARY: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "penrose",
    version,
    about = "Exact Penrose vertex patterns and their self-similarities"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a patch of the vertex pattern.
    Generate {
        #[command(flatten)]
        patch: PatchArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Model)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report lattice points projecting onto window boundaries.
    Audit {
        #[command(flatten)]
        patch: PatchArgs,
    },
    /// List admissible scaling factors k + m t.
    Factors {
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        k_range: (i64, i64),
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        m_range: (i64, i64),
    },
    /// Search certified inflation centers.
    Centers {
        #[arg(long, value_parser = parse_factor, allow_hyphen_values = true)]
        lambda: (i64, i64),
        #[arg(long, value_parser = parse_golden, allow_hyphen_values = true)]
        radius2: GoldenNumber,
        #[arg(long, value_parser = parse_offset, allow_hyphen_values = true, default_value = "1/4")]
        offset: InternalPoint,
    },
    /// Check that the similarity maps the pattern into itself.
    Verify {
        #[arg(long, value_parser = parse_factor, allow_hyphen_values = true)]
        lambda: (i64, i64),
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0,0,0,0")]
        center: LatticePoint,
        #[arg(long, value_parser = parse_golden, allow_hyphen_values = true)]
        inner_radius2: GoldenNumber,
        #[arg(long, value_parser = parse_offset, allow_hyphen_values = true, default_value = "1/4")]
        offset: InternalPoint,
        /// Also cross-check by lookup in a larger generated patch.
        #[arg(long)]
        lookup: bool,
    },
    /// Draw a patch as SVG.
    Svg {
        #[command(flatten)]
        patch: PatchArgs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = parse_factor, allow_hyphen_values = true)]
        overlay_lambda: Option<(i64, i64)>,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, requires = "overlay_lambda")]
        overlay_center: Option<LatticePoint>,
    },
}

#[derive(Args, Debug)]
struct PatchArgs {
    /// Squared physical radius, e.g. `64` or `10+3t`.
    #[arg(long, value_parser = parse_golden, allow_hyphen_values = true)]
    radius2: GoldenNumber,
    /// A scalar `s` for `s·π'ε₁`, or five comma-separated internal coordinates.
    #[arg(long, value_parser = parse_offset, allow_hyphen_values = true, default_value = "1/4")]
    offset: InternalPoint,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Model,
    Strip,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_golden(s: &str) -> Result<GoldenNumber, String> {
    s.trim().parse().map_err(|e| format!("{e}"))
}

fn parse_offset(s: &str) -> Result<InternalPoint, String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.len() {
        1 => Ok(InternalPoint::along_first_axis(&parse_golden(parts[0])?)),
        5 => {
            let mut v = GoldenVector::<5>::zero();
            for (i, p) in parts.iter().enumerate() {
                v[i] = parse_golden(p)?;
            }
            InternalPoint::new(v).map_err(|e| e.to_string())
        }
        _ => Err("expected one scalar or five comma-separated coordinates".into()),
    }
}

fn parse_pair(s: &str, sep: char) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| format!("expected two integers separated by `{sep}`"))?;
    let int = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((int(a)?, int(b)?))
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    parse_pair(s, ':')
}

fn parse_factor(s: &str) -> Result<(i64, i64), String> {
    parse_pair(s, ',')
}

fn parse_point(s: &str) -> Result<LatticePoint, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 5 {
        return Err("expected five comma-separated integers".into());
    }
    let mut c = [0i64; 5];
    for (slot, p) in c.iter_mut().zip(parts) {
        *slot = p.trim().parse().map_err(|e| format!("`{p}`: {e}"))?;
    }
    Ok(LatticePoint::new(c))
}

/// A failed run, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundaryHit(_) => EXIT_BOUNDARY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Core(c) => c.into(),
            other => Failure {
                code: EXIT_IO,
                message: other.to_string(),
            },
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        IoError::from(e).into()
    }
}

fn write_output(out: Option<&PathBuf>, data: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, data)?,
        None => stdout.write_all(data.as_bytes())?,
    }
    Ok(())
}

fn lines(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn factor(pair: (i64, i64)) -> Result<ScalingFactor, Failure> {
    Ok(ScalingFactor::admissible(pair.0, pair.1)?)
}

fn certified_center(
    f: &ScalingFactor,
    y: LatticePoint,
    v: &InternalPoint,
) -> Result<InflationCenter, Failure> {
    let c = InflationCenter::certify(f, y, v)?;
    if !c.certified {
        return Err(Error::NotCertified(y).into());
    }
    Ok(c)
}

fn run_command(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let runner = Runner::new(cli.threads).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    })?;
    match cli.command {
        Command::Generate {
            patch,
            method,
            format,
            out,
        } => {
            let (v, r2) = (&patch.offset, &patch.radius2);
            let p: Patch = match method {
                MethodArg::Model => runner.generate(Method::ModelSet, v, r2)?,
                MethodArg::Strip => runner.generate(Method::Strip, v, r2)?,
                MethodArg::Both => {
                    let model = runner.generate(Method::ModelSet, v, r2)?;
                    let strip = runner.generate(Method::Strip, v, r2)?;
                    if model.points() != strip.points() {
                        let only_model =
                            model.points().iter().filter(|x| !strip.contains(x)).count();
                        let only_strip =
                            strip.points().iter().filter(|x| !model.contains(x)).count();
                        return Err(Failure {
                            code: EXIT_VERIFY,
                            message: format!(
                                "definitions disagree: {only_model} points only in the model set, {only_strip} only in the strip"
                            ),
                        });
                    }
                    model
                }
            };
            let p = p.with_tiles();
            let data = match format {
                Format::Json => export_json(&p),
                Format::Csv => export_csv(&p),
            };
            write_output(out.as_ref(), &data, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Audit { patch } => {
            let report = runner.audit(&patch.offset, &patch.radius2);
            let doc = json!({
                "points_checked": report.points_checked,
                "boundary_hits": report.boundary_hits.iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>(),
            });
            write_output(None, &lines(&doc), stdout)?;
            Ok(if report.is_generic() {
                EXIT_OK
            } else {
                EXIT_BOUNDARY
            })
        }
        Command::Factors { k_range, m_range } => {
            let mut s = String::new();
            for f in enumerate_factors(k_range.0..=k_range.1, m_range.0..=m_range.1) {
                s.push_str(&format!(
                    "({},{})\tlambda={}\tconj={}\tnorm={}\n",
                    f.k,
                    f.m,
                    f.lambda(),
                    f.lambda_conj(),
                    f.norm()
                ));
            }
            write_output(None, &s, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Centers {
            lambda,
            radius2,
            offset,
        } => {
            let f = factor(lambda)?;
            let centers = runner.find_centers(&f, &offset, &radius2)?;
            let doc = json!({
                "k": f.k,
                "m": f.m,
                "search_radius_squared": radius2.to_string(),
                "count": centers.len(),
                "within_delta": centers.iter().filter(|c| c.within_delta).count(),
                "centers": centers.iter().map(center_to_json).collect::<Vec<_>>(),
            });
            write_output(None, &lines(&doc), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            lambda,
            center,
            inner_radius2,
            offset,
            lookup,
        } => {
            let f = factor(lambda)?;
            let c = certified_center(&f, center, &offset)?;
            let report = runner.verify(&f, &c, &offset, &inner_radius2)?;
            let mut doc = report_to_json(&report);
            let mut passed = report.passed();
            if lookup {
                let cross =
                    penrose_core::similarity::verify_by_lookup(&f, &c, &offset, &inner_radius2)?;
                doc["lookup_failures"] = json!(cross
                    .failures
                    .iter()
                    .map(|x| x.coords().to_vec())
                    .collect::<Vec<_>>());
                passed &= cross.passed();
            }
            write_output(None, &lines(&doc), stdout)?;
            Ok(if passed { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Svg {
            patch,
            out,
            overlay_lambda,
            overlay_center,
        } => {
            let p = runner
                .generate(Method::ModelSet, &patch.offset, &patch.radius2)?
                .with_tiles();
            let overlay = match overlay_lambda {
                Some(pair) => {
                    let f = factor(pair)?;
                    let y = overlay_center.unwrap_or_else(LatticePoint::origin);
                    Some(Overlay::new(f, y)?)
                }
                None => None,
            };
            write_output(Some(&out), &emit_svg(&p, overlay.as_ref()), stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI; returns the process exit code. Diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run_command(cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
