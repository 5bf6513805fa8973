//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage or
//! parse error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::affine::{multiplicity_series, weight_basis, weight_of, WeightLabel};
use crate::lr::{lr_coefficient, schur_product_expand};
use crate::maya::r_decompose;
use crate::partition::{partitions_up_to, Partition};
use crate::reduce::{basic_set, basis_rank, counting_table, decompose, verify_theorem, Verification};
use crate::schur::{reduced_schur, schur_in_t};
use crate::{Error, Poly, Rational};

/// Largest partition size any command accepts.
pub const SIZE_CAP: usize = 14;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rschur", version, about = "Reduced Schur functions, r-cores and Littlewood-Richardson coefficients")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// r-core, r-quotient and r-sign of a partition
    CoreQuotient {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
    },
    /// S_λ(t) in power-sum coordinates
    Schur {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// The r-reduced Schur function S^(r)_λ(t)
    Reduce {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
    },
    /// c^ν_{λμ}, or the full expansion of s_λ·s_μ when --nu is absent
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Option<Partition>,
    },
    /// Expansion of S^(r)_λ in the basic set
    Decompose {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
    },
    /// Check the basic-set expansion for every partition up to a size
    Verify {
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Partitions of n with empty 0-th r-quotient component
    BasicSet {
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Weight of a basis label (--lambda), or the basis of the weight space
    /// with core --lambda (default empty) and depth --n
    Weights {
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare basic-set sizes, φ(q^r)/φ(q) and the rank of the basic set
    CountCheck {
        #[arg(long, value_parser = parse_modulus)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
}

/// Accepts `3,1`, `[3,1]`, and `` or `[]` for the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("bad part {x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_modulus(s: &str) -> Result<usize, String> {
    let r: usize = s.trim().parse().map_err(|e| format!("{e}"))?;
    if r < 2 {
        return Err(Error::InvalidModulus(r).to_string());
    }
    Ok(r)
}

struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn check_size(what: &str, n: usize) -> Result<(), UsageError> {
    if n > SIZE_CAP {
        return Err(UsageError(format!("{what} = {n} exceeds the size cap {SIZE_CAP}")));
    }
    Ok(())
}

fn check_partition(name: &str, p: &Partition) -> Result<(), UsageError> {
    check_size(&format!("|{name}|"), p.size())
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let _ = writeln!(out, "{}", output.text);
            output.status
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

struct Output {
    text: String,
    status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, status: EXIT_OK }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn sign_str(s: i64) -> &'static str {
    if s < 0 {
        "-1"
    } else {
        "+1"
    }
}

fn list(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn dispatch(cli: &Cli) -> Result<Output, UsageError> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::CoreQuotient { lambda, r } => {
            check_partition("lambda", lambda)?;
            let cq = r_decompose(lambda, *r)?;
            Ok(Output::ok(if text {
                format!(
                    "r         {}\ncore      {}\nquotient  {}\nsign      {}",
                    cq.r,
                    cq.core,
                    list(&cq.quotient),
                    sign_str(cq.sign.into())
                )
            } else {
                to_json(&cq)
            }))
        }
        Command::Schur { lambda } => {
            check_partition("lambda", lambda)?;
            let poly: Poly = schur_in_t(lambda);
            Ok(Output::ok(if text { poly.to_string() } else { to_json(&poly) }))
        }
        Command::Reduce { lambda, r } => {
            check_partition("lambda", lambda)?;
            let poly: Poly = reduced_schur(lambda, *r)?;
            Ok(Output::ok(if text { poly.to_string() } else { to_json(&poly) }))
        }
        Command::Lr { lambda, mu, nu } => {
            check_partition("lambda", lambda)?;
            check_partition("mu", mu)?;
            check_size("|lambda| + |mu|", lambda.size() + mu.size())?;
            match nu {
                Some(nu) => {
                    check_partition("nu", nu)?;
                    let c = lr_coefficient(nu, lambda, mu);
                    Ok(Output::ok(if text {
                        c.to_string()
                    } else {
                        to_json(&json!({"nu": nu, "lambda": lambda, "mu": mu, "coefficient": c}))
                    }))
                }
                None => {
                    let terms = schur_product_expand(lambda, mu);
                    Ok(Output::ok(if text {
                        terms
                            .iter()
                            .map(|(nu, c)| format!("{c:>4}  {nu}"))
                            .collect::<Vec<_>>()
                            .join("\n")
                    } else {
                        let terms: Vec<_> =
                            terms.iter().map(|(nu, c)| json!({"nu": nu, "coeff": c})).collect();
                        to_json(&json!({"lambda": lambda, "mu": mu, "terms": terms}))
                    }))
                }
            }
        }
        Command::Decompose { lambda, r } => {
            check_partition("lambda", lambda)?;
            let d = decompose(lambda, *r)?;
            Ok(Output::ok(if text {
                d.terms
                    .iter()
                    .map(|t| format!("{:>+6}  {}", t.coeff, t.mu))
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                to_json(&d)
            }))
        }
        Command::Verify { r, max_size, jobs } => verify(*r, *max_size, *jobs, text),
        Command::BasicSet { r, n } => {
            check_size("n", *n)?;
            let set = basic_set(*r, *n)?;
            Ok(Output::ok(if text {
                list(&set)
            } else {
                to_json(&json!({"r": r, "n": n, "basic_set": set}))
            }))
        }
        Command::Weights { r, lambda, n } => weights(*r, lambda.as_ref(), *n, text),
        Command::CountCheck { r, n } => count_check(*r, *n, text),
    }
}

fn verify(r: usize, max_size: usize, jobs: usize, text: bool) -> Result<Output, UsageError> {
    check_size("max-size", max_size)?;
    if jobs == 0 {
        return Err(UsageError("--jobs must be at least 1".into()));
    }
    let inputs = partitions_up_to(max_size);
    let check = |l: &Partition| verify_theorem::<Rational>(l, r);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| UsageError(e.to_string()))?;
    let results: Vec<Verification<Rational>> = pool
        .install(|| inputs.par_iter().map(check).collect::<Result<Vec<_>, _>>())?;
    let failures: Vec<&Verification<Rational>> = results.iter().filter(|v| !v.holds).collect();
    let status = if failures.is_empty() { EXIT_OK } else { EXIT_FAILED };
    let body = if text {
        let mut s = format!(
            "checked {} partitions of size 0..={} with r = {}: {} failure(s)",
            results.len(),
            max_size,
            r,
            failures.len()
        );
        for f in &failures {
            s.push_str(&format!("\n{}  witness: {}", f.lambda, f.witness));
        }
        s
    } else {
        let failures: Vec<_> = failures
            .iter()
            .map(|f| json!({"lambda": f.lambda, "witness": f.witness}))
            .collect();
        to_json(&json!({
            "r": r,
            "max_size": max_size,
            "checked": results.len(),
            "failures": failures,
        }))
    };
    Ok(Output { text: body, status })
}

fn weights(r: usize, lambda: Option<&Partition>, n: Option<usize>, text: bool) -> Result<Output, UsageError> {
    match n {
        None => {
            let lambda = lambda.ok_or_else(|| UsageError("weights needs --lambda or --n".into()))?;
            check_partition("lambda", lambda)?;
            let w = weight_of(lambda, r)?;
            Ok(Output::ok(if text {
                format!("core  {}\ndepth {}", w.core, w.depth)
            } else {
                to_json(&w)
            }))
        }
        Some(depth) => {
            check_size("n", depth)?;
            let core = lambda.cloned().unwrap_or_default();
            check_partition("lambda", &core)?;
            let w = WeightLabel::new(r, core, depth)?;
            check_size("|core| + r·n", w.degree())?;
            let basis = weight_basis(&w)?;
            let multiplicity = multiplicity_series(r, depth)?[depth];
            Ok(Output::ok(if text {
                format!(
                    "core          {}\ndepth         {}\nmultiplicity  {}\nbasis         {}",
                    w.core,
                    w.depth,
                    multiplicity,
                    list(&basis)
                )
            } else {
                to_json(&json!({"weight": w, "multiplicity": multiplicity, "basis": basis}))
            }))
        }
    }
}

fn count_check(r: usize, n: usize, text: bool) -> Result<Output, UsageError> {
    check_size("n", n)?;
    let table = counting_table(r, n)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for row in &table {
        let (rank, dim) = basis_rank::<Rational>(r, row.n)?;
        let row_ok = row.agrees() && rank == dim && rank == row.basic;
        ok &= row_ok;
        rows.push((row, rank, row_ok));
    }
    let body = if text {
        let mut s = String::from("   n  basic  series  restricted  rank  ok");
        for (row, rank, row_ok) in &rows {
            s.push_str(&format!(
                "\n{:>4}  {:>5}  {:>6}  {:>10}  {:>4}  {}",
                row.n, row.basic, row.series, row.restricted, rank, row_ok
            ));
        }
        s
    } else {
        let rows: Vec<_> = rows
            .iter()
            .map(|(row, rank, row_ok)| {
                json!({
                    "n": row.n,
                    "basic": row.basic,
                    "series": row.series,
                    "restricted": row.restricted,
                    "rank": rank,
                    "ok": row_ok,
                })
            })
            .collect();
        to_json(&json!({"r": r, "n": n, "rows": rows, "ok": ok}))
    };
    Ok(Output { text: body, status: if ok { EXIT_OK } else { EXIT_FAILED } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_syntax() {
        assert_eq!(parse_partition("3,1").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_partition("[3, 1]").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("[]").unwrap().is_empty());
        assert!(parse_partition("1,3").is_err());
        assert!(parse_partition("2,0").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn modulus_syntax() {
        assert_eq!(parse_modulus("3"), Ok(3));
        assert!(parse_modulus("1").is_err());
        assert!(parse_modulus("x").is_err());
    }
}
