//! Command-line front end. [`run`] takes the full argument list and returns
//! what should be written to stdout and stderr together with the exit code,
//! so the binary is a thin wrapper and the behaviour is testable in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::arithmetic::{cuspidal_kernel_count, Params};
use crate::cohomology::{r_star, verify_all, verify_main_theorem, VerifyReport};
use crate::combinatorics::{
    affine_descent_classes, jacquet_consistency, levi_partition, partial, whittaker_partition,
    Partition, Rank, RootSubset,
};
use crate::ext_spectral::{e1_page, ext_poincare, ExtKind};
use crate::grothendieck::decomposition_matrix;
use crate::jacquet_langlands::{lj, lj_effective};
use crate::weil_deligne::wd_elliptic;
use crate::Error;

/// Upper bound on `d` for commands that loop over all subsets.
pub const MAX_ENUMERATIVE_D: u32 = 16;
/// Upper bound on `d` for the dense decomposition matrix.
pub const MAX_MATRIX_D: u32 = 10;
/// Default upper bound on `d` for loops over the symmetric group.
pub const DEFAULT_MAX_SYMMETRIC_D: u32 = 9;
/// Environment variable overriding [`DEFAULT_MAX_SYMMETRIC_D`].
pub const MAX_D_ENV: &str = "COXBLOCK_MAX_D";

#[derive(Debug, Parser)]
#[command(
    name = "coxblock",
    version,
    about = "Unipotent block of GL_d under the Coxeter congruence"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ii,
    Vi,
    #[value(name = "pi_i", alias = "pi-i")]
    PiI,
}

impl From<KindArg> for ExtKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Ii => ExtKind::Ii,
            KindArg::Vi => ExtKind::Vi,
            KindArg::PiI => ExtKind::PiI,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WithSubset {
    #[command(flatten)]
    pub common: Common,
    /// Bitmask (`5`) or index list (`1,3`, `[1,3]`).
    #[arg(long = "I", allow_hyphen_values = true)]
    pub subset: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row per strict subset: Levi and Whittaker partitions, LJ, WD Jordan type.
    Classify(Common),
    /// Decomposition of every `v_I` in the `pi_J` basis.
    DecompMatrix(Common),
    /// Langlands-Jacquet transfer of `pi_I`.
    Lj(WithSubset),
    /// Weil-Deligne parameter of `pi_I` with its Lefschetz-type operator.
    Wd {
        #[command(flatten)]
        args: WithSubset,
        /// Emit the monodromy (direction N) form instead.
        #[arg(long)]
        transpose: bool,
    },
    /// Bigraded table of `R_pi^*` with its Lefschetz components.
    Rstar(WithSubset),
    /// Checks the cohomology identity for one or all strict subsets.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long = "I", allow_hyphen_values = true)]
        subset: Option<String>,
        /// Also run the symmetric-group enumeration checks.
        #[arg(long)]
        enumerate: bool,
        /// Include wall-clock time in the JSON report.
        #[arg(long)]
        timing: bool,
    },
    /// Ext Poincaré polynomial between two subsets.
    Ext {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "J", allow_hyphen_values = true)]
        j: String,
        #[arg(long = "I", allow_hyphen_values = true)]
        subset: String,
    },
    /// The E_1 page computing `(R_{pi_I}^*)_{i,0}`.
    E1 {
        #[command(flatten)]
        args: WithSubset,
        #[arg(long)]
        i: u32,
    },
    /// Euler characteristic check of E_1 pages, for one `(I, i)` or all of them.
    Euler {
        #[command(flatten)]
        common: Common,
        #[arg(long = "I", allow_hyphen_values = true)]
        subset: Option<String>,
        #[arg(long)]
        i: Option<u32>,
    },
    /// Coxeter congruence check and cuspidal kernel size.
    Params {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 2,
                }
            } else {
                Output {
                    stdout: rendered,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
        Err(Failure::Verification(msg)) => Output {
            stdout: String::new(),
            stderr: msg,
            code: 1,
        },
    }
}

fn rank(d: u32) -> std::result::Result<Rank, Failure> {
    Ok(Rank::new(d)?)
}

fn enumerative_rank(d: u32) -> std::result::Result<Rank, Failure> {
    if d > MAX_ENUMERATIVE_D {
        return Err(Failure::Usage(format!(
            "d = {d} exceeds {MAX_ENUMERATIVE_D} for this command"
        )));
    }
    rank(d)
}

/// The symmetric-group cap, read from the environment if set.
pub fn max_symmetric_d() -> std::result::Result<u32, String> {
    match std::env::var(MAX_D_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_D_ENV}={v:?} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_MAX_SYMMETRIC_D),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn ok(stdout: String) -> Outcome {
    Ok(Output {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

fn execute(command: &Command) -> Outcome {
    match command {
        Command::Classify(c) => classify(c),
        Command::DecompMatrix(c) => decomp(c),
        Command::Lj(a) => lj_cmd(a),
        Command::Wd { args, transpose } => wd_cmd(args, *transpose),
        Command::Rstar(a) => rstar_cmd(a),
        Command::Verify {
            common,
            subset,
            enumerate,
            timing,
        } => verify_cmd(common, subset.as_deref(), *enumerate, *timing),
        Command::Ext {
            common,
            kind,
            j,
            subset,
        } => ext_cmd(common, *kind, j, subset),
        Command::E1 { args, i } => e1_cmd(args, *i),
        Command::Euler { common, subset, i } => euler_cmd(common, subset.as_deref(), *i),
        Command::Params { q, ell, d, format } => params_cmd(*q, *ell, *d, *format),
    }
}

fn parse_subset(d: Rank, input: &str) -> std::result::Result<RootSubset, Failure> {
    Ok(RootSubset::parse(d, input)?)
}

#[derive(Serialize)]
struct ClassifyRow {
    mask: u64,
    subset: RootSubset,
    levi: Partition,
    whittaker: Partition,
    lj_sign: i8,
    lj_support: Vec<u32>,
    wd_jordan: Partition,
}

fn classify(c: &Common) -> Outcome {
    let d = enumerative_rank(c.d)?;
    let rows = RootSubset::all_strict(d)
        .par_iter()
        .map(|i| -> crate::Result<ClassifyRow> {
            let eff = lj_effective(i)?;
            Ok(ClassifyRow {
                mask: i.bitmask(),
                subset: *i,
                levi: levi_partition(i)?,
                whittaker: whittaker_partition(i)?,
                lj_sign: eff.sign,
                lj_support: eff.chars,
                wd_jordan: wd_elliptic(i)?.jordan_type(),
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    match c.format {
        Format::Json => ok(json(&rows)),
        Format::Tsv => {
            let mut out =
                String::from("mask\tsubset\tlevi\twhittaker\tlj_sign\tlj_support\twd_jordan\n");
            for r in &rows {
                let support: Vec<String> = r.lj_support.iter().map(u32::to_string).collect();
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{{{}}}\t{}",
                    r.mask,
                    r.subset,
                    r.levi,
                    r.whittaker,
                    r.lj_sign,
                    support.join(","),
                    r.wd_jordan
                );
            }
            ok(out)
        }
    }
}

fn decomp(c: &Common) -> Outcome {
    if c.d > MAX_MATRIX_D {
        return Err(Failure::Usage(format!(
            "d = {} exceeds {MAX_MATRIX_D} for the dense matrix",
            c.d
        )));
    }
    let m = decomposition_matrix(rank(c.d)?)?;
    match c.format {
        Format::Json => ok(json(&m)),
        Format::Tsv => ok(m.to_tsv()),
    }
}

fn lj_cmd(a: &WithSubset) -> Outcome {
    let d = rank(a.common.d)?;
    let i = parse_subset(d, &a.subset)?;
    let class = lj(&i)?;
    let eff = lj_effective(&i)?;
    #[derive(Serialize)]
    struct Report {
        subset: RootSubset,
        coeffs: Vec<i64>,
        sign: i8,
        support: Vec<u32>,
    }
    match a.common.format {
        Format::Json => ok(json(&Report {
            subset: i,
            coeffs: class.coeffs().to_vec(),
            sign: eff.sign,
            support: eff.chars,
        })),
        Format::Tsv => {
            let mut out = String::from("j\tcoeff\n");
            for (j, c) in class.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{j}\t{c}");
            }
            ok(out)
        }
    }
}

fn wd_cmd(a: &WithSubset, transpose: bool) -> Outcome {
    let d = rank(a.common.d)?;
    let mut x = wd_elliptic(&parse_subset(d, &a.subset)?)?;
    if transpose {
        x = x.transpose();
    }
    match a.common.format {
        Format::Json => ok(json(&x)),
        Format::Tsv => {
            let mut out = String::from("direction\ttop\tlen\tlines\n");
            for s in x.strings() {
                let lines: Vec<String> = x.string_lines(s).iter().map(u32::to_string).collect();
                let _ = writeln!(
                    out,
                    "{:?}\t{}\t{}\t{}",
                    x.direction(),
                    s.top,
                    s.len,
                    lines.join(",")
                );
            }
            ok(out)
        }
    }
}

fn rstar_cmd(a: &WithSubset) -> Outcome {
    let d = rank(a.common.d)?;
    let r = r_star(&parse_subset(d, &a.subset)?)?;
    match a.common.format {
        Format::Json => ok(json(&r)),
        Format::Tsv => ok(r.to_tsv()),
    }
}

#[derive(Serialize)]
struct EnumerationReport {
    affine_descent_classes: usize,
    expected_classes: u64,
    jacquet_consistent: usize,
    jacquet_total: usize,
}

impl EnumerationReport {
    fn passed(&self) -> bool {
        self.affine_descent_classes as u64 == self.expected_classes
            && self.jacquet_consistent == self.jacquet_total
    }
}

fn enumeration_checks(d: Rank) -> std::result::Result<EnumerationReport, Failure> {
    let cap = max_symmetric_d().map_err(Failure::Usage)?;
    if d.get() > cap {
        return Err(Failure::Usage(format!(
            "symmetric-group enumeration is capped at d = {cap}; set {MAX_D_ENV} to raise it"
        )));
    }
    let classes = affine_descent_classes(d);
    // At d = 1 the single permutation has empty affine descent set.
    let expected_classes = if d.get() == 1 {
        1
    } else {
        (1u64 << d.get()) - 2
    };
    let s = RootSubset::classical_full(d);
    let proper: Vec<RootSubset> = RootSubset::all_classical(d)
        .into_iter()
        .filter(|i| *i != s)
        .collect();
    let jacquet_consistent = proper
        .par_iter()
        .map(jacquet_consistency)
        .collect::<crate::Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    Ok(EnumerationReport {
        affine_descent_classes: classes.len(),
        expected_classes,
        jacquet_consistent,
        jacquet_total: proper.len(),
    })
}

fn verify_cmd(c: &Common, subset: Option<&str>, enumerate: bool, timing: bool) -> Outcome {
    let d = enumerative_rank(c.d)?;
    let start = Instant::now();
    let reports: Vec<VerifyReport> = match subset {
        Some(s) => vec![verify_main_theorem(&parse_subset(d, s)?)?],
        None => verify_all(d)?.reports,
    };
    let enumeration = if enumerate {
        Some(enumeration_checks(d)?)
    } else {
        None
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let verified = reports.iter().filter(|r| r.holds).count();
    let summary = format!("{verified}/{} subsets verified", reports.len());
    let passed =
        verified == reports.len() && enumeration.as_ref().is_none_or(EnumerationReport::passed);

    #[derive(Serialize)]
    struct Report<'a> {
        d: Rank,
        summary: &'a str,
        verified: usize,
        total: usize,
        reports: &'a [VerifyReport],
        #[serde(skip_serializing_if = "Option::is_none")]
        enumeration: Option<&'a EnumerationReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        elapsed_ms: Option<f64>,
    }
    let stdout = match c.format {
        Format::Json => json(&Report {
            d,
            summary: &summary,
            verified,
            total: reports.len(),
            reports: &reports,
            enumeration: enumeration.as_ref(),
            elapsed_ms: timing.then_some(elapsed_ms),
        }),
        Format::Tsv => {
            let mut out = String::from("mask\tsubset\tstatus\tlhs\trhs\n");
            for r in &reports {
                let status = if r.holds { "ok" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    r.subset.bitmask(),
                    r.subset,
                    status,
                    r.lhs,
                    r.rhs
                );
            }
            if let Some(e) = &enumeration {
                let _ = writeln!(
                    out,
                    "# affine descent classes {}/{}, jacquet consistency {}/{}",
                    e.affine_descent_classes,
                    e.expected_classes,
                    e.jacquet_consistent,
                    e.jacquet_total
                );
            }
            let _ = writeln!(out, "# {summary}");
            out
        }
    };
    let mut stderr = format!("{summary}\nelapsed: {elapsed_ms:.1} ms\n");
    for r in reports.iter().filter(|r| !r.holds) {
        let _ = writeln!(
            stderr,
            "mismatch at I = {}:\n  lhs: {}\n  rhs: {}",
            r.subset, r.lhs, r.rhs
        );
    }
    Ok(Output {
        stdout,
        stderr,
        code: if passed { 0 } else { 1 },
    })
}

fn ext_cmd(c: &Common, kind: KindArg, j: &str, subset: &str) -> Outcome {
    let d = rank(c.d)?;
    let p = ext_poincare(kind.into(), &parse_subset(d, j)?, &parse_subset(d, subset)?)?;
    match c.format {
        Format::Json => ok(json(&p)),
        Format::Tsv => {
            let mut out = String::from("degree\tdim\n");
            for (k, n) in p.terms() {
                let _ = writeln!(out, "{k}\t{n}");
            }
            ok(out)
        }
    }
}

fn e1_cmd(a: &WithSubset, i: u32) -> Outcome {
    let d = rank(a.common.d)?;
    let page = e1_page(&parse_subset(d, &a.subset)?, i)?;
    match a.common.format {
        Format::Json => ok(json(&page)),
        Format::Tsv => ok(page.to_tsv()),
    }
}

#[derive(Serialize)]
struct EulerRow {
    mask: u64,
    subset: RootSubset,
    i: u32,
    partial: i64,
    euler: i64,
    support_ok: bool,
    ok: bool,
}

fn euler_row(subset: &RootSubset, i: u32) -> crate::Result<EulerRow> {
    let page = e1_page(subset, i)?;
    let degree = partial(subset, i as i64)?;
    let euler = page.euler_characteristic();
    let expected = if degree.rem_euclid(2) == 0 { 1 } else { -1 };
    let support_ok = page.support_within_corners()?;
    Ok(EulerRow {
        mask: subset.bitmask(),
        subset: *subset,
        i,
        partial: degree,
        euler,
        support_ok,
        ok: euler == expected && support_ok,
    })
}

fn euler_cmd(c: &Common, subset: Option<&str>, i: Option<u32>) -> Outcome {
    let d = match subset {
        Some(_) => rank(c.d)?,
        None => enumerative_rank(c.d)?,
    };
    let subsets = match subset {
        Some(s) => vec![parse_subset(d, s)?],
        None => RootSubset::all_classical(d),
    };
    let indices: Vec<u32> = match i {
        Some(i) => vec![i],
        None => (0..d.get()).collect(),
    };
    let jobs: Vec<(RootSubset, u32)> = subsets
        .iter()
        .flat_map(|s| indices.iter().map(move |&i| (*s, i)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|(s, i)| euler_row(s, *i))
        .collect::<crate::Result<Vec<_>>>()?;
    let passed = rows.iter().filter(|r| r.ok).count();
    let summary = format!("{passed}/{} pages checked", rows.len());
    let stdout = match c.format {
        Format::Json => json(&rows),
        Format::Tsv => {
            let mut out = String::from("mask\tsubset\ti\tpartial\teuler\tsupport_ok\tok\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.mask, r.subset, r.i, r.partial, r.euler, r.support_ok, r.ok
                );
            }
            out
        }
    };
    if passed != rows.len() {
        return Err(Failure::Verification(format!("{summary}\n{stdout}")));
    }
    Ok(Output {
        stdout,
        stderr: format!("{summary}\n"),
        code: 0,
    })
}

fn params_cmd(q: u64, ell: u64, d: u32, format: Format) -> Outcome {
    let params = Params::new(q, ell, d)?;
    let kernel_count = if params.coxeter {
        Some(cuspidal_kernel_count(q, ell, d)?)
    } else {
        None
    };
    #[derive(Serialize)]
    struct Report {
        coxeter: bool,
        kernel_count: Option<u64>,
    }
    match format {
        Format::Json => ok(json(&Report {
            coxeter: params.coxeter,
            kernel_count,
        })),
        Format::Tsv => {
            let count = kernel_count.map_or_else(|| "-".to_string(), |n| n.to_string());
            ok(format!(
                "coxeter\tkernel_count\n{}\t{}\n",
                params.coxeter, count
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Output {
        run(std::iter::once("coxblock").chain(args.split_whitespace()))
    }

    #[test]
    fn verify_summary() {
        let out = call("verify --d 4");
        assert_eq!(out.code, 0);
        assert!(out.stderr.starts_with("15/15 subsets verified"));
        assert!(out
            .stdout
            .contains("\"summary\": \"15/15 subsets verified\""));
        assert!(!out.stdout.contains("elapsed_ms"));
    }

    #[test]
    fn classify_tsv_rows() {
        let out = call("classify --d 2 --format tsv");
        assert_eq!(out.code, 0);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("0\t{}\t"));
        assert!(lines[2].starts_with("1\t{0}\t"));
        assert!(lines[3].starts_with("2\t{1}\t"));
    }

    #[test]
    fn params_json() {
        let out = call("params --q 2 --ell 3 --d 2");
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v, serde_json::json!({"coxeter": true, "kernel_count": 1}));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call("classify").code, 2);
        assert_eq!(call("classify --d 17").code, 2);
        assert_eq!(call("lj --d 3 --I 7").code, 2);
        assert_eq!(call("frobnicate --d 3").code, 2);
        assert_eq!(call("params --q 6 --ell 5 --d 2").code, 2);
        assert_eq!(call("decomp-matrix --d 11").code, 2);
    }
}
