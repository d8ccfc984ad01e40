//! Command-line front end. `run` never panics on bad input: usage and
//! parameter errors exit 2, failed checks and I/O problems exit 1, and every
//! error is reported on stderr as one line of JSON.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinatorics::{
    count_c, count_ctilde, count_d, derive_quasipoly, enumerate_members, format_rational, necklace,
    necklace_bruteforce, quasipoly_printed, CombinatoricsError, GrooveClass,
};
use crate::families::{
    build_c, build_ctilde, build_d, build_d31, default_ctilde_groove, s_curve_side, tile_disk_radial,
    validate_tiling_with, Chirality, CtildeVariant, EdgeWord, FamilyError, Pivot, Tiling, ValidationOptions,
};
use crate::geometry::{Path, PathSegment, Point};
use crate::io::{load, locus_svg, save, to_svg, DocumentError, SvgStyle};
use crate::wedge::{critical_locus, WedgeError};

pub const SEED_ENV: &str = "MONODISK_SEED";
const DEFAULT_SEED: u64 = 42;

#[derive(Parser, Debug)]
#[command(name = "monodisk", version, about = "Monohedral disk tilings from n-wedges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    C,
    Ctilde,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuildFamily {
    Symradial,
    Radgen,
    #[value(name = "D")]
    D,
    #[value(name = "D31")]
    D31,
    #[value(name = "C")]
    C,
    #[value(name = "Ctilde")]
    Ctilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ChiralityArg {
    A,
    B,
}

impl From<ChiralityArg> for Chirality {
    fn from(c: ChiralityArg) -> Self {
        match c {
            ChiralityArg::A => Chirality::A,
            ChiralityArg::B => Chirality::B,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    AboutP,
    AboutQ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    Stroke,
    Colored,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of members of a family
    Count {
        #[arg(long, value_enum, ignore_case = true)]
        family: CountFamily,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Count the critical groove length member (D, n = 3 only)
        #[arg(long)]
        critical: bool,
    },
    /// Binary necklaces with a beads of one colour and b of the other
    Necklace {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        /// Also count by brute force and compare
        #[arg(long)]
        brute: bool,
    },
    /// Canonical edge words of every member of C_{n,k}
    Members {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Printed and fitted closed forms for |C_{n,k}|
    Quasipoly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        derive: bool,
    },
    /// Build a tiling and write it as a JSON document
    Build {
        #[arg(long, value_enum, ignore_case = true)]
        family: BuildFamily,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, ignore_case = true, default_value = "a")]
        chirality: ChiralityArg,
        #[arg(long, value_enum, default_value = "about-p")]
        variant: VariantArg,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a tiling document as SVG
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_enum, default_value = "stroke")]
        style: StyleArg,
        #[arg(long, default_value_t = 600)]
        size: u32,
    },
    /// Check a tiling document and print the report
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Critical locus of the groove endpoint
    Locus {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

/// A failure with its exit code and a short machine-readable kind.
#[derive(Debug)]
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }

    fn failed(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind,
            message: message.into(),
        }
    }
}

impl From<CombinatoricsError> for Failure {
    fn from(e: CombinatoricsError) -> Self {
        match e {
            CombinatoricsError::FitInconsistent { .. } | CombinatoricsError::NotACount { .. } => {
                Failure::failed("fit", e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Geometry(_) | FamilyError::Wedge(WedgeError::Geometry(_)) => {
                Failure::failed("geometry", e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<WedgeError> for Failure {
    fn from(e: WedgeError) -> Self {
        FamilyError::from(e).into()
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::failed("document", e.to_string())
    }
}

fn io_failure(path: &FsPath, e: std::io::Error) -> Failure {
    Failure::failed("io", format!("{}: {e}", path.display()))
}

fn read_input(path: &FsPath) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| io_failure(path, e))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| io_failure(path, e))
}

fn write_output(path: &FsPath, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| io_failure(path, e))
}

/// Seed from the flag, then the environment, then the default.
fn resolve_seed(flag: Option<u64>, env: Option<String>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        None => Ok(DEFAULT_SEED),
    }
}

fn build(
    family: BuildFamily,
    n: u32,
    k: u32,
    t: f64,
    word: Option<&str>,
    chirality: Chirality,
    variant: VariantArg,
) -> Result<Tiling, Failure> {
    if !t.is_finite() {
        return Err(Failure::usage(format!("t = {t} is not finite")));
    }
    let tiling = match family {
        BuildFamily::Symradial => {
            let side = Path::from_segments(Point::ORIGIN, vec![PathSegment::line(Point::ORIGIN, Point::new(1.0, 0.0))]);
            tile_disk_radial(&side, n)?
        }
        BuildFamily::Radgen => tile_disk_radial(&s_curve_side(), n)?,
        BuildFamily::D => build_d(n, t, chirality)?,
        BuildFamily::D31 => build_d31(chirality)?,
        BuildFamily::C => {
            let word = match word {
                Some(w) => w.parse::<EdgeWord>()?,
                None => EdgeWord::all_short(n, k),
            };
            build_c(n, k, t, &word, chirality)?
        }
        BuildFamily::Ctilde => {
            let groove = default_ctilde_groove(n, t)?;
            let pivot = match variant {
                VariantArg::AboutP => Pivot::AboutP,
                VariantArg::AboutQ => Pivot::AboutQ,
            };
            build_ctilde(n, k, &groove, CtildeVariant { pivot, chirality })?
        }
    };
    Ok(tiling)
}

fn execute(cli: Cli, out: &mut dyn Write, env_seed: Option<String>) -> Result<i32, Failure> {
    let mut emit = |s: String| -> Result<(), Failure> {
        out.write_all(s.as_bytes())
            .map_err(|e| Failure::failed("io", format!("stdout: {e}")))
    };
    match cli.command {
        Command::Count { family, n, k, critical } => {
            if critical && family != CountFamily::D {
                return Err(Failure::usage("--critical applies only to --family D"));
            }
            let value = match family {
                CountFamily::C => count_c(n, k)?,
                CountFamily::Ctilde => count_ctilde(n, k)?,
                CountFamily::D => count_d(n, if critical { GrooveClass::Critical } else { GrooveClass::Interior })?,
            };
            emit(format!("{value}\n"))?;
            Ok(0)
        }
        Command::Necklace { a, b, brute } => {
            let value = necklace(a, b)?;
            if !brute {
                emit(format!("{value}\n"))?;
                return Ok(0);
            }
            let oracle = necklace_bruteforce(a, b)?;
            if oracle == value {
                emit(format!("{value} (formula=oracle ✓)\n"))?;
                Ok(0)
            } else {
                emit(format!("{value} (formula≠oracle ✗, oracle={oracle})\n"))?;
                Ok(1)
            }
        }
        Command::Members { n, k, limit } => {
            let members = enumerate_members(n, k)?;
            let take = limit.unwrap_or(members.len());
            let mut text = String::new();
            for m in members.iter().take(take) {
                let hand = match m.chirality {
                    Chirality::A => 'A',
                    Chirality::B => 'B',
                };
                text.push_str(&format!("{} {hand}\n", m.word));
            }
            emit(text)?;
            Ok(0)
        }
        Command::Quasipoly { n, k, derive } => {
            let printed = quasipoly_printed(n);
            if printed.is_err() && !derive {
                return Err(Failure::usage(format!(
                    "no printed formula for n = {n}; pass --derive to fit one"
                )));
            }
            let mut text = String::new();
            if let Ok(q) = &printed {
                text.push_str(&format!("printed: {q}\n"));
                if let Some(k) = k {
                    let exact = count_c(n, k)?;
                    let value = q.evaluate(u64::from(k));
                    let agrees = value.is_integer() && value.to_integer() == exact.clone().into();
                    text.push_str(&format!(
                        "printed({k}) = {} ; exact = {exact} ; {}\n",
                        format_rational(&value),
                        if agrees { "match" } else { "MISMATCH" }
                    ));
                }
            }
            if derive {
                let d = derive_quasipoly(n)?;
                text.push_str(&format!("fitted: {}\n", d.fitted));
                text.push_str(&format!(
                    "fit uses k = {}..={}; exact on held-out k = {}..={}\n",
                    d.training.0, d.training.1, d.held_out.0, d.held_out.1
                ));
                if let Some(k) = k {
                    text.push_str(&format!("fitted({k}) = {}\n", format_rational(&d.fitted.evaluate(u64::from(k)))));
                }
                if let Some(cmp) = &d.comparison {
                    if cmp.term_for_term {
                        text.push_str("printed formula matches the fit term for term\n");
                    } else {
                        text.push_str("erratum: printed formula differs from the fit\n");
                        for t in &cmp.differences {
                            let cond = if t.divisor == 1 { String::new() } else { format!(" [{}|k]", t.divisor) };
                            text.push_str(&format!(
                                "  k^{}{cond}: printed {} fitted {}\n",
                                t.power,
                                format_rational(&t.printed),
                                format_rational(&t.fitted)
                            ));
                        }
                        if let Some((k, v, exact)) = cmp.value_mismatches.first() {
                            text.push_str(&format!(
                                "  first wrong value at k = {k}: printed {} exact {exact} ({} of k = 2..=50 wrong)\n",
                                format_rational(v),
                                cmp.value_mismatches.len()
                            ));
                        }
                    }
                }
            }
            emit(text)?;
            Ok(0)
        }
        Command::Build {
            family,
            n,
            k,
            t,
            word,
            chirality,
            variant,
            out: target,
        } => {
            let tiling = build(family, n, k, t, word.as_deref(), chirality.into(), variant)?;
            let bytes = save(&tiling);
            match target {
                Some(path) => write_output(&path, &bytes)?,
                None => emit(String::from_utf8(bytes).expect("JSON is UTF-8"))?,
            }
            Ok(0)
        }
        Command::Render { file, svg, style, size } => {
            let tiling = load(&read_input(&file)?)?;
            let style = match style {
                StyleArg::Stroke => SvgStyle::StrokeOnly,
                StyleArg::Colored => SvgStyle::OrientationColored,
            };
            write_output(&svg, to_svg(&tiling, style, size).as_bytes())?;
            Ok(0)
        }
        Command::Verify { file, samples, seed } => {
            let tiling = load(&read_input(&file)?)?;
            let seed = resolve_seed(seed, env_seed)?;
            let report = validate_tiling_with(&tiling, ValidationOptions { samples, seed });
            let ok = report.valid && report.monohedral;
            emit(report.to_json() + "\n")?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Locus { n, svg } => {
            let locus = critical_locus(n)?;
            if let Some(path) = svg {
                write_output(&path, locus_svg(n)?.as_bytes())?;
            }
            let value = json!({ "ray_angle": locus.ray_angle, "R": locus.radius, "t_max": locus.t_max });
            emit(format!("{value}\n"))?;
            Ok(0)
        }
    }
}

fn report(err: &mut dyn Write, kind: &str, message: &str) {
    let line = json!({ "error": kind, "message": message.trim() });
    let _ = writeln!(err, "{line}");
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. `env_seed` is the value of `MONODISK_SEED`, if set.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, env_seed: Option<String>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            report(err, "usage", &e.render().to_string());
            return 2;
        }
    };
    match execute(cli, out, env_seed) {
        Ok(code) => code,
        Err(f) => {
            report(err, f.kind, &f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("monodisk").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err, None);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_prints_one_number() {
        assert_eq!(call(&["count", "--family", "C", "--n", "3", "--k", "2"]), (0, "62\n".into(), String::new()));
    }

    #[test]
    fn brute_necklace_reports_agreement() {
        assert_eq!(call(&["necklace", "--a", "3", "--b", "6", "--brute"]).1, "10 (formula=oracle ✓)\n");
    }

    #[test]
    fn bad_flags_exit_two_with_json() {
        let (code, out, err) = call(&["count", "--family", "C", "--n", "x"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        let v: serde_json::Value = serde_json::from_str(&err).unwrap();
        assert_eq!(v["error"], "usage");
    }

    #[test]
    fn invalid_parameters_exit_two() {
        let (code, _, err) = call(&["count", "--family", "C", "--n", "4", "--k", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("odd"));
        assert_eq!(call(&["count", "--family", "C", "--n", "3", "--critical"]).0, 2);
    }

    #[test]
    fn seed_resolution() {
        assert_eq!(resolve_seed(Some(7), Some("9".into())).unwrap(), 7);
        assert_eq!(resolve_seed(None, Some("9".into())).unwrap(), 9);
        assert_eq!(resolve_seed(None, None).unwrap(), DEFAULT_SEED);
        assert!(resolve_seed(None, Some("nine".into())).is_err());
    }
}
