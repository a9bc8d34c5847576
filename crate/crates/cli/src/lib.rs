//! Front end for the `rank1-stems` binary.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};
use rank1_stems::lines::{Line, LineLabel, LineSet};
use rank1_stems::oracle::verify;
use rank1_stems::stems::{twisted_null_stalks, SEMISIMPLE_OMIT};
use rank1_stems::{stems, BlockAnswer, BlockId, GroupId, StemsError};

use crate::parse::parse_rep;
use crate::report::{render_text, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

fn parse_group(s: &str) -> Result<GroupId, String> {
    GroupId::from_name(s)
        .ok_or_else(|| format!("unknown group '{s}' (expected so2, spin2, o2, pin2, so3 or su2)"))
}

fn parse_degrees(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a range a..b")?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad lower degree '{a}'"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad upper degree '{b}'"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Rational stable stems [S^0, S^U]^G_* for the rank one compact Lie groups.
///
/// Irreducibles: z(n) over so2/spin2; delta, sigma(n) over o2 and pin2;
/// h(m), m odd, over pin2; W(2i+1) over so3 and su2; V(2i) over su2.
/// W(d) has real dimension d and V(d) complex dimension d.
#[derive(Debug, Parser)]
#[command(name = "rank1-stems", version)]
pub struct Args {
    /// so2, spin2, o2, pin2, so3 or su2
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,

    /// Virtual representation, e.g. "2*sigma(1) - sigma(3) + delta"
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub rep: String,

    /// Inclusive degree window a..b
    #[arg(long, default_value = "-10..10", allow_hyphen_values = true, value_parser = parse_degrees)]
    pub degrees: (i64, i64),

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// List the lines of every block
    #[arg(long)]
    pub blocks: bool,

    /// Report the stems of U + k (degree n of the output is degree n - k of U)
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub shift: i64,

    /// Compare against the truncated-resolution oracle; exit 2 on mismatch
    #[arg(long)]
    pub check_oracle: bool,

    /// Truncation cutoff for the oracle
    #[arg(long, default_value_t = 64)]
    pub smax: u64,

    /// Corrupt the answer before checking it (exercises the failure path)
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Add one class in the first degree of the window where the cyclic block is finite.
fn inject_fault(answer: &mut BlockAnswer, lo: i64, hi: i64) {
    let block = answer.blocks.iter_mut().find(|b| b.id == BlockId::Cyclic).expect("cyclic block");
    if let Some(k) = (lo..=hi).find(|&k| !block.lines.query(k).is_infinite()) {
        let extra = LineSet::new(vec![Line::spot(k, 1.into(), LineLabel::GenericTail)], vec![]).unwrap();
        block.lines = block.lines.sum(&extra);
    }
}

fn exit_code(err: &StemsError) -> i32 {
    match err {
        StemsError::Invariant(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

pub fn run_args(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let rep = match parse_rep(&args.rep, args.group) {
        Ok(rep) => rep,
        Err(e) => {
            writeln!(err, "error: --rep {:?}: {e}", args.rep).ok();
            return EXIT_USAGE;
        }
    };
    let mut answer = match stems(&rep) {
        Ok(a) => a,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            return exit_code(&e);
        }
    };
    let (lo, hi) = args.degrees;
    let k = args.shift;

    if args.check_oracle {
        if args.inject_fault {
            inject_fault(&mut answer, lo - k, hi - k);
        }
        match verify(&answer, lo - k, hi - k, args.smax) {
            Ok(report) if report.passed() => {
                writeln!(err, "oracle: {} checks passed", report.checks).ok();
            }
            Ok(report) => {
                for m in &report.mismatches {
                    writeln!(err, "oracle mismatch: {m}").ok();
                }
                writeln!(err, "oracle: {} of {} checks failed", report.mismatches.len(), report.checks).ok();
                return EXIT_FAILURE;
            }
            Err(e) => {
                writeln!(err, "error: oracle: {e}").ok();
                return exit_code(&e);
            }
        }
    }

    let shown = answer.shift(k);
    let report = Report::new(&shown, lo, hi);
    match args.format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(out, "{text}").ok();
        }
        Format::Table => {
            let mut notes = Vec::new();
            if !args.group.is_torus() {
                let omit: &[u64] = if args.group.has_isolated_blocks() { &SEMISIMPLE_OMIT } else { &[] };
                let ts = twisted_null_stalks(&rep, omit).unwrap_or_default();
                if !ts.is_empty() {
                    notes.push(format!(
                        "zero-dimensional stalks with sign action at t = {ts:?} are dropped from the degree-0 sections"
                    ));
                }
            }
            if k != 0 {
                notes.push(format!("degrees shifted by {k}: the table is for U + {k}"));
            }
            write!(out, "{}", render_text(&report, args.blocks, &notes)).ok();
        }
    }
    EXIT_OK
}

/// Parse `argv` and run; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Args::try_parse_from(argv) {
        Ok(args) => run_args(&args, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("rank1-stems").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn degree_ranges() {
        assert_eq!(parse_degrees("-3..3"), Ok((-3, 3)));
        assert_eq!(parse_degrees(" 2 .. 2"), Ok((2, 2)));
        assert!(parse_degrees("3..1").is_err());
        assert!(parse_degrees("3").is_err());
    }

    #[test]
    fn torus_table() {
        let (code, out, _) = call(&["--group", "so2", "--rep", "-z(1)", "--degrees", "-3..3"]);
        assert_eq!(code, 0);
        let dims: Vec<&str> = out
            .lines()
            .skip_while(|l| !l.starts_with("degree"))
            .skip(1)
            .map(|l| l.split_whitespace().nth(1).unwrap())
            .collect();
        assert_eq!(dims, ["0", "0", "0", "0", "inf", "0", "inf"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["--group", "so3", "--rep", "z(2)"]).0, EXIT_USAGE);
        assert_eq!(call(&["--group", "g2"]).0, EXIT_USAGE);
        assert_eq!(call(&["--group", "o2", "--degrees", "4..1"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["--group", "o2", "--rep", "sigma(3)", "--check-oracle"]).0, EXIT_OK);
        assert_eq!(
            call(&["--group", "o2", "--rep", "sigma(3)", "--check-oracle", "--inject-fault"]).0,
            EXIT_FAILURE
        );
        assert_eq!(call(&["--group", "o2", "--rep", "sigma(70)", "--check-oracle"]).0, EXIT_USAGE);
    }

    #[test]
    fn twisted_stalks_are_flagged() {
        let (code, out, _) = call(&["--group", "o2", "--rep", "sigma(1) - sigma(2)", "--degrees", "0..0"]);
        assert_eq!(code, 0);
        assert!(out.contains("t = [1]"), "{out}");
    }
}
