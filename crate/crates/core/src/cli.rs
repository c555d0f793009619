//! Batch front end.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure,
//! 2 on a usage error. `RAYON_NUM_THREADS` bounds the worker pool.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::betti::{
    betti_from_horizontal, check_bounds, check_divisibility, check_horizontal_constraints,
    s_k_report, HorizontalBettiSequence,
};
use crate::contact::{Axis, ContactModel, PhiStarTable};
use crate::cw::{homology_reports, Coefficients, TwistMap};
use crate::exterior::ModelDims;
use crate::operators::{phi_zeta_index, OperatorAlgebra};
use crate::report::{BettiSummary, Report};
use crate::so41::{verify_module_with, Generator};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest rank accepted by `--n`.
pub const MAX_N: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "cosymplectic", version, about = "Exact checks for the 3-cosymplectic operator algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operator identities of the rank-n model.
    VerifyIdentities(CommonArgs),
    /// so(4,1) module structure on the horizontal forms.
    So41Check(CommonArgs),
    /// Betti numbers from horizontal Betti numbers, with constraints.
    Betti(BettiArgs),
    /// Cellular homology of the twisted torus quotient M^7_f.
    Homology(HomologyArgs),
    /// Every suite at the given rank.
    Report(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Quaternionic rank; the model has dimension 4n+3.
    #[arg(long, default_value_t = 1, value_parser = parse_rank)]
    pub n: usize,
    #[arg(long)]
    pub json: bool,
    /// Treat warnings as failures.
    #[arg(long)]
    pub strict: bool,
    /// Corrupt one sign in the construction (negative control).
    #[arg(long, hide = true)]
    pub inject_sign_flip: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BettiArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Horizontal Betti numbers b^h_0..b^h_{4n}, comma separated. Defaults to the torus.
    #[arg(long, value_delimiter = ',')]
    pub bh: Option<Vec<u64>>,
}

#[derive(Args, Debug, Clone)]
pub struct HomologyArgs {
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub strict: bool,
    /// Report integral homology (ranks and torsion) instead of rational.
    #[arg(long)]
    pub integer: bool,
    #[arg(long, hide = true)]
    pub inject_sign_flip: bool,
    /// Print the boundary matrices as `degree row col value` triples.
    #[arg(long)]
    pub export_boundaries: bool,
}

fn parse_rank(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n > MAX_N {
        return Err(format!("n must be between 0 and {MAX_N}"));
    }
    Ok(n)
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn algebra(n: usize, corrupt: bool) -> Result<OperatorAlgebra, Failure> {
    if !corrupt {
        return Ok(OperatorAlgebra::new(n)?);
    }
    let dims = ModelDims::new(n)?;
    let axis = Axis::new(1)?;
    let index = phi_zeta_index(dims, axis, 1)?;
    let table = PhiStarTable::standard(dims).with_sign_flip(axis, index);
    Ok(OperatorAlgebra::with_model(ContactModel::with_table(table)))
}

fn identities(report: &mut Report, alg: &OperatorAlgebra) {
    report.checks.extend(alg.verify_identities());
}

fn so41(report: &mut Report, alg: &OperatorAlgebra, corrupt: bool) -> Result<(), Failure> {
    if alg.dims().n() == 0 {
        return Err(Failure::Usage("so41-check needs n >= 1: the operators vanish at n = 0".into()));
    }
    let negate = corrupt.then_some(Generator::K(Axis::new(3)?));
    let check = verify_module_with(alg, negate)?;
    report.checks.extend(check.reports);
    report.so41 = Some(check.summary);
    Ok(())
}

fn betti(report: &mut Report, bh: &HorizontalBettiSequence) {
    let n = bh.n();
    let b = betti_from_horizontal(bh);
    let divisibility = check_divisibility(&b);
    let bounds = check_bounds(&b, n);
    let horizontal = check_horizontal_constraints(bh);
    report.checks.push(divisibility.to_report(
        "betti_divisibility",
        "b_(k-1) + b_k = 0 mod 4 for odd k",
    ));
    report
        .checks
        .push(bounds.to_report("betti_bounds", "b_k >= C(k+2,2) for k <= 2n+1"));
    report.checks.push(horizontal.divisibility.to_report(
        "horizontal_divisibility",
        "b^h_k = 0 mod 4 for odd k",
    ));
    report.checks.push(
        horizontal
            .bounds
            .to_report("horizontal_bounds", "b^h_(2k) >= C(k+2,2) for k <= n"),
    );
    report.warnings.extend(horizontal.warnings.iter().cloned());
    report.betti = Some(BettiSummary {
        n,
        horizontal: bh.values().to_vec(),
        betti: b.values().to_vec(),
        series: b.series().to_string(),
        divisibility: divisibility.entries,
        bounds: bounds.entries,
        horizontal_divisibility: horizontal.divisibility.entries,
        horizontal_bounds: horizontal.bounds.entries,
    });
}

fn homology(report: &mut Report, coefficients: Coefficients, corrupt: bool) {
    let mut twist = TwistMap::standard();
    if corrupt {
        twist = twist.with_sign_flip(3);
    }
    let (checks, summary) = homology_reports(&twist, coefficients);
    report.checks.extend(checks);
    report.homology = summary;
}

fn s_k(report: &mut Report) {
    let (check, ranks) = s_k_report(MAX_N);
    report.checks.push(check);
    report.s_k_ranks = ranks;
}

fn execute(command: &Command) -> Result<(Report, bool, bool), Failure> {
    match command {
        Command::VerifyIdentities(a) => {
            let mut report = Report::new("verify-identities", Some(a.n));
            identities(&mut report, &algebra(a.n, a.inject_sign_flip)?);
            Ok((report, a.json, a.strict))
        }
        Command::So41Check(a) => {
            let mut report = Report::new("so41-check", Some(a.n));
            so41(&mut report, &algebra(a.n, false)?, a.inject_sign_flip)?;
            Ok((report, a.json, a.strict))
        }
        Command::Betti(a) => {
            let n = a.common.n;
            let bh = match &a.bh {
                Some(values) => HorizontalBettiSequence::new(n, values.clone())?,
                None => HorizontalBettiSequence::torus(n),
            };
            let mut report = Report::new("betti", Some(n));
            betti(&mut report, &bh);
            Ok((report, a.common.json, a.common.strict))
        }
        Command::Homology(a) => {
            let mut report = Report::new("homology", None);
            let coefficients = if a.integer {
                Coefficients::Integers
            } else {
                Coefficients::Rationals
            };
            homology(&mut report, coefficients, a.inject_sign_flip);
            Ok((report, a.json, a.strict))
        }
        Command::Report(a) => {
            let mut report = Report::new("report", Some(a.n));
            let alg = algebra(a.n, a.inject_sign_flip)?;
            identities(&mut report, &alg);
            if a.n > 0 {
                so41(&mut report, &alg, false)?;
            }
            s_k(&mut report);
            betti(&mut report, &HorizontalBettiSequence::torus(a.n));
            homology(&mut report, Coefficients::Integers, a.inject_sign_flip);
            Ok((report, a.json, a.strict))
        }
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Human-readable rendering; every number also appears in the JSON form.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let n = report.n.map(|n| format!(" (n = {n})")).unwrap_or_default();
    out.push_str(&format!("{}{n}\n", report.command));
    for c in &report.checks {
        out.push_str(&format!("{} {:<34} {}\n", c.status_word(), c.name, c.statement));
        if let Some(w) = &c.witness {
            out.push_str(&format!("     witness: {w}\n"));
        }
        if let Some(d) = &c.detail {
            out.push_str(&format!("     detail: {d}\n"));
        }
    }
    for w in &report.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    if let Some(s) = &report.so41 {
        out.push_str(&format!(
            "so(4,1): span rank {}, image rank {}, {} of {} pairs hold\n",
            s.span_rank,
            s.image_rank,
            s.pairs.iter().filter(|p| p.passed).count(),
            s.pairs.len()
        ));
    }
    for s in &report.s_k_ranks {
        out.push_str(&format!(
            "S_k rank: n = {}, k = {}, rank {} (expected {})\n",
            s.n, s.k, s.rank, s.expected
        ));
    }
    if let Some(b) = &report.betti {
        out.push_str(&format!("horizontal: {}\n", join(&b.horizontal)));
        out.push_str(&format!("betti: {}\n", join(&b.betti)));
        out.push_str(&format!("series: {}\n", b.series));
        for e in &b.divisibility {
            out.push_str(&format!(
                "  b_{} + b_{} = {} = {} mod {}\n",
                e.k - 1,
                e.k,
                e.value,
                e.residue,
                e.modulus
            ));
        }
        for e in &b.bounds {
            out.push_str(&format!(
                "  b_{} = {} >= {}: margin {}\n",
                e.k, e.value, e.required, e.margin
            ));
        }
    }
    if let Some(h) = &report.homology {
        out.push_str(&format!("homology over {}\n", h.coefficients));
        for d in &h.degrees {
            let torsion = if d.torsion.is_empty() {
                String::new()
            } else {
                format!(", torsion Z/{}", d.torsion.join(" + Z/"))
            };
            out.push_str(&format!(
                "  degree {}: {} cells, rank d_{} = {}, b_{} = {}{torsion}\n",
                d.degree, d.cells, d.degree, d.boundary_rank, d.degree, d.betti
            ));
        }
        out.push_str(&format!("betti: {}\n", join(&h.betti)));
        out.push_str(&format!("oracle horizontal: {}\n", join(&h.oracle_horizontal)));
        out.push_str(&format!("oracle betti: {}\n", join(&h.oracle_betti)));
        out.push_str(&format!("euler characteristic: {}\n", h.euler_characteristic));
        out.push_str(&format!("verdict: {}\n", h.verdict));
    }
    out.push_str(&format!("status: {}\n", if report.passed() { "pass" } else { "fail" }));
    out
}

/// Parses `args` (including the program name), runs the command and
/// writes the report to `out`; usage errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if let Command::Homology(a) = &cli.command {
        if a.export_boundaries {
            let mut twist = TwistMap::standard();
            if a.inject_sign_flip {
                twist = twist.with_sign_flip(3);
            }
            return match crate::cw::build_complex(&twist) {
                Ok(c) => {
                    let text = if a.json {
                        c.export_json().to_string() + "\n"
                    } else {
                        c.export_triples()
                    };
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_FAIL
                }
            };
        }
    }
    let (mut report, json, strict) = match execute(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    report.finalize(strict);
    let text = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        render_text(&report)
    };
    let _ = out.write_all(text.as_bytes());
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cosymplectic").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify-identities", "--n", "9"]).0, EXIT_USAGE);
        assert_eq!(call(&["so41-check", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["betti", "--n", "1", "--bh", "1,0,4"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn betti_text() {
        let (code, out, _) = call(&["betti", "--n", "1", "--bh", "1,0,4,0,1"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("betti: 1,3,7,13,13,7,3,1"));
    }

    #[test]
    fn poincare_warning_only_fails_in_strict_mode() {
        let (code, out, _) = call(&["betti", "--bh", "1,0,4,0,2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("warning:"));
        assert_eq!(call(&["betti", "--bh", "1,0,4,0,2", "--strict"]).0, EXIT_FAIL);
    }

    #[test]
    fn homology_negative_control() {
        assert_eq!(call(&["homology"]).0, EXIT_OK);
        assert_eq!(call(&["homology", "--strict", "--inject-sign-flip"]).0, EXIT_FAIL);
    }
}
