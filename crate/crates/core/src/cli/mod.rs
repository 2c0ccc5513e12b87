//! The `fe-umbral` command line: `family`, `numbers`, `represent`, `verify`.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! or parameter errors. Output is deterministic for identical input.

mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::rational::{format_rational, latex_rational, serde_rational, serde_rational_vec, Rational};
use crate::exact::Poly;
use crate::families::{family_table, gf_oracle, FamilyKind};
use crate::identities::{check_all, Identity, IdentityParams};
use crate::numbers::{
    bernoulli_numbers, degen_fe_numbers, delta_zero, euler_numbers, frobenius_euler_numbers, harmonic,
    one_nlambda, stirling2_table, DegenParams,
};
use crate::representation::{all_variants, honours_variant, represent, verify_expansion, FormulaVariant};

#[derive(Debug, Parser)]
#[command(name = "fe-umbral", version, about = "Exact degenerate Frobenius-Euler polynomials and basis representation")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print members 0..=n of a polynomial family.
    Family(FamilyArgs),
    /// Print a special-number sequence.
    Numbers(NumbersArgs),
    /// Expand a polynomial in a family basis.
    Represent(RepresentArgs),
    /// Check identities exactly; one JSON report per line.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindName {
    Bernoulli,
    Euler,
    Fe,
    DegenEuler,
    DegenFe,
    Falling,
}

#[derive(Debug, Clone, Args)]
struct ParamArgs {
    /// Degeneration parameter, `p/q` or integer.
    #[arg(long, value_parser = input::rational, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    /// Frobenius parameter, must not be 1.
    #[arg(long, value_parser = input::rational, allow_hyphen_values = true)]
    u: Option<Rational>,
    /// Order.
    #[arg(long, default_value_t = 1)]
    r: usize,
}

impl ParamArgs {
    fn lambda(&self) -> Result<Rational> {
        self.lambda.clone().ok_or(Error::MissingParam("--lambda"))
    }

    fn u(&self) -> Result<Rational> {
        self.u.clone().ok_or(Error::MissingParam("--u"))
    }

    fn kind(&self, name: KindName) -> Result<FamilyKind> {
        let r = self.r;
        let kind = match name {
            KindName::Bernoulli => FamilyKind::Bernoulli,
            KindName::Euler => FamilyKind::Euler { r },
            KindName::Fe => FamilyKind::FrobeniusEuler { u: self.u()?, r },
            KindName::DegenEuler => FamilyKind::DegenerateEuler { lambda: self.lambda()?, r },
            KindName::DegenFe => FamilyKind::DegenerateFrobeniusEuler { lambda: self.lambda()?, u: self.u()?, r },
            KindName::Falling => FamilyKind::DegenerateFallingFactorial { lambda: self.lambda()? },
        };
        kind.validate()?;
        Ok(kind)
    }
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    kind: KindName,
    /// Highest index.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: ParamArgs,
    /// Rebuild the table from the generating function and report agreement.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sequence {
    Stirling2,
    Harmonic,
    Bernoulli,
    Euler,
    Fe,
    DegenFe,
    OneLambda,
    DeltaZero,
}

#[derive(Debug, Args)]
struct NumbersArgs {
    #[arg(long, value_enum)]
    seq: Sequence,
    /// Highest index.
    #[arg(long)]
    n: usize,
    /// Second index for `stirling2` and `delta-zero`; all `k <= n` when omitted.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantName {
    Operator,
    Delta,
    Binomial,
    Stirling,
    Ladder,
}

impl From<VariantName> for FormulaVariant {
    fn from(v: VariantName) -> Self {
        match v {
            VariantName::Operator => FormulaVariant::OperatorForm,
            VariantName::Delta => FormulaVariant::DeltaForm,
            VariantName::Binomial => FormulaVariant::BinomialSum,
            VariantName::Stirling => FormulaVariant::StirlingSum,
            VariantName::Ladder => FormulaVariant::LadderForm,
        }
    }
}

#[derive(Debug, Args)]
struct RepresentArgs {
    /// Ascending coefficients `c0,c1,...`, a JSON array, `@file.json`, or `-` for stdin.
    #[arg(allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_enum, default_value_t = KindName::DegenFe)]
    basis: KindName,
    #[command(flatten)]
    params: ParamArgs,
    /// Coefficient formula; binomial by default, stirling when lambda = 0.
    #[arg(long, value_enum, conflicts_with = "all_variants")]
    variant: Option<VariantName>,
    /// Run every formula and print their agreement.
    #[arg(long)]
    all_variants: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `miki`, `5a`..`5f`, or `all`.
    #[arg(long, default_value = "all")]
    identity: String,
    /// Sizes: `5`, `2..8` or `2,4,6`.
    #[arg(long, default_value = "2..8", value_parser = input::sizes)]
    n: input::Sizes,
    /// Second sizes for `5e` and `5f`.
    #[arg(long, default_value = "0..3", value_parser = input::sizes)]
    m: input::Sizes,
    #[arg(long, default_value = "1", value_parser = input::rational, allow_hyphen_values = true)]
    lambda: Rational,
    #[arg(long, default_value = "2", value_parser = input::rational, allow_hyphen_values = true)]
    u: Rational,
    #[arg(long, default_value = "3", value_parser = input::rational, allow_hyphen_values = true)]
    v: Rational,
    /// Order for the higher-order routes of `5e`.
    #[arg(long)]
    r: Option<usize>,
    /// Omit the polynomials from each report.
    #[arg(long)]
    brief: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

/// Parses the process arguments, runs, and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means a verification ran and failed.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Family(a) => cmd_family(a, out),
        Command::Numbers(a) => cmd_numbers(a, out),
        Command::Represent(a) => cmd_represent(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Output(e.to_string())
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serialisable");
    writeln!(out, "{text}").map_err(io_err)
}

fn write_lines(out: &mut impl Write, lines: impl IntoIterator<Item = String>) -> Result<()> {
    for line in lines {
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

/// Parameters of a kind as a JSON object, without the `kind` tag.
fn kind_params(kind: &FamilyKind) -> Value {
    let mut v = serde_json::to_value(kind).expect("serialisable");
    if let Value::Object(map) = &mut v {
        map.remove("kind");
    }
    v
}

fn latex_symbol(kind: &FamilyKind, n: usize) -> String {
    let order = |r: usize| if r == 1 { String::new() } else { format!("^{{({r})}}") };
    let q = latex_rational;
    match kind {
        FamilyKind::Bernoulli => format!("B_{{{n}}}(x)"),
        FamilyKind::Euler { r } => format!("E{}_{{{n}}}(x)", order(*r)),
        FamilyKind::FrobeniusEuler { u, r } => format!("H{}_{{{n}}}(x|{})", order(*r), q(u)),
        FamilyKind::DegenerateEuler { lambda, r } => {
            format!("\\mathcal{{E}}{}_{{{n},{}}}(x)", order(*r), q(lambda))
        }
        FamilyKind::DegenerateFrobeniusEuler { lambda, u, r } => {
            format!("h{}_{{{n},{}}}(x|{})", order(*r), q(lambda), q(u))
        }
        FamilyKind::DegenerateFallingFactorial { lambda } => format!("(x)_{{{n},{}}}", q(lambda)),
    }
}

#[derive(Serialize)]
struct FamilyOutput<'a> {
    family: &'a FamilyKind,
    members: &'a [Poly],
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

fn cmd_family(a: FamilyArgs, out: &mut impl Write) -> Result<bool> {
    let kind = a.params.kind(a.kind)?;
    let members = family_table(&kind, a.n)?;
    let oracle_agrees = if a.oracle { Some(gf_oracle(&kind, a.n)? == members) } else { None };
    match a.format {
        Format::Json => write_json(out, &FamilyOutput { family: &kind, members: &members, oracle_agrees })?,
        Format::Latex => write_lines(
            out,
            members
                .iter()
                .enumerate()
                .map(|(n, p)| format!("{} = {}", latex_symbol(&kind, n), p.to_latex())),
        )?,
        Format::Csv => write_lines(
            out,
            std::iter::once("n,k,coeff".to_string()).chain(members.iter().enumerate().flat_map(|(n, p)| {
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(move |(k, c)| format!("{n},{k},{}", format_rational(c)))
                    .collect::<Vec<_>>()
            })),
        )?,
    }
    Ok(oracle_agrees.unwrap_or(true))
}

#[derive(Serialize)]
struct NumberRow {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(with = "serde_rational")]
    value: Rational,
}

fn number_rows(a: &NumbersArgs) -> Result<Vec<NumberRow>> {
    let n_max = a.n;
    let p = &a.params;
    let row = |n: usize, value: Rational| NumberRow { n, k: None, value };
    let indexed = |values: Vec<Rational>| values.into_iter().enumerate().map(|(n, v)| row(n, v)).collect();
    let ks = |n: usize| -> Vec<usize> {
        match a.k {
            Some(k) => vec![k],
            None => (0..=n).collect(),
        }
    };
    Ok(match a.seq {
        Sequence::Stirling2 => {
            let table = stirling2_table(n_max);
            (0..=n_max)
                .flat_map(|n| {
                    let table = &table;
                    ks(n).into_iter().map(move |k| NumberRow {
                        n,
                        k: Some(k),
                        value: table[n].get(k).cloned().map(Rational::from_integer).unwrap_or_default(),
                    })
                })
                .collect()
        }
        Sequence::Harmonic => (1..=n_max.max(1))
            .map(|n| harmonic(if n_max == 0 { 0 } else { n }).map(|h| row(n, h)))
            .collect::<Result<_>>()?,
        Sequence::Bernoulli => indexed(bernoulli_numbers(n_max)),
        Sequence::Euler => indexed(euler_numbers(n_max, p.r)),
        Sequence::Fe => indexed(frobenius_euler_numbers(n_max, &p.u()?, p.r)?),
        Sequence::DegenFe => indexed(degen_fe_numbers(n_max, &DegenParams::new(p.lambda()?, p.u()?, p.r))?),
        Sequence::OneLambda => {
            let lambda = p.lambda()?;
            (0..=n_max).map(|n| row(n, one_nlambda(n, &lambda))).collect()
        }
        Sequence::DeltaZero => {
            let lambda = p.lambda()?;
            (0..=n_max)
                .flat_map(|n| {
                    let lambda = &lambda;
                    ks(n).into_iter().map(move |k| NumberRow { n, k: Some(k), value: delta_zero(n, k, lambda) })
                })
                .collect()
        }
    })
}

fn cmd_numbers(a: NumbersArgs, out: &mut impl Write) -> Result<bool> {
    let rows = number_rows(&a)?;
    match a.format {
        Format::Json => write_json(out, &rows)?,
        Format::Latex => write_lines(
            out,
            rows.iter().map(|r| match r.k {
                Some(k) => format!("{} & {k} & {} \\\\", r.n, latex_rational(&r.value)),
                None => format!("{} & {} \\\\", r.n, latex_rational(&r.value)),
            }),
        )?,
        Format::Csv => {
            let header = if rows.iter().any(|r| r.k.is_some()) { "n,k,value" } else { "n,value" };
            write_lines(
                out,
                std::iter::once(header.to_string()).chain(rows.iter().map(|r| match r.k {
                    Some(k) => format!("{},{k},{}", r.n, format_rational(&r.value)),
                    None => format!("{},{}", r.n, format_rational(&r.value)),
                })),
            )?
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct RepresentOutput {
    basis: &'static str,
    params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<&'static str>,
    #[serde(with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
    verified: bool,
}

#[derive(Serialize)]
struct VariantOutcome {
    variant: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    verified: bool,
}

#[derive(Serialize)]
struct AllVariantsOutput {
    basis: &'static str,
    params: Value,
    variants: Vec<VariantOutcome>,
    /// `agreement[i][j]`: both variants ran and produced the same coefficients.
    agreement: Vec<Vec<bool>>,
    all_agree: bool,
    verified: bool,
}

fn cmd_represent(a: RepresentArgs, out: &mut impl Write) -> Result<bool> {
    let p = input::poly_argument(&a.poly)?;
    let kind = a.params.kind(a.basis)?;
    if a.all_variants {
        return represent_all(&p, &kind, a.format, out);
    }
    let variant = a.variant.map(FormulaVariant::from).unwrap_or_else(|| FormulaVariant::default_for(&kind));
    let e = represent(&p, &kind, variant)?;
    let verified = verify_expansion(&p, &e)?;
    match a.format {
        Format::Json => write_json(
            out,
            &RepresentOutput {
                basis: kind.tag(),
                params: kind_params(&kind),
                variant: honours_variant(&kind).then(|| variant.name()),
                coeffs: e.coeffs,
                verified,
            },
        )?,
        Format::Latex => write_lines(
            out,
            e.coeffs.iter().enumerate().map(|(k, c)| format!("a_{{{k}}} = {}", latex_rational(c))),
        )?,
        Format::Csv => write_lines(
            out,
            std::iter::once("k,coeff".to_string())
                .chain(e.coeffs.iter().enumerate().map(|(k, c)| format!("{k},{}", format_rational(c)))),
        )?,
    }
    Ok(verified)
}

fn represent_all(p: &Poly, kind: &FamilyKind, format: Format, out: &mut impl Write) -> Result<bool> {
    let results = all_variants(p, kind);
    let mut variants = Vec::new();
    for (v, r) in &results {
        let outcome = match r {
            Ok(e) => VariantOutcome {
                variant: v.name(),
                coeffs: Some(e.coeffs.iter().map(format_rational).collect()),
                error: None,
                verified: verify_expansion(p, e)?,
            },
            Err(err) => VariantOutcome { variant: v.name(), coeffs: None, error: Some(err.to_string()), verified: false },
        };
        variants.push(outcome);
    }
    let agreement: Vec<Vec<bool>> = results
        .iter()
        .map(|(_, a)| {
            results
                .iter()
                .map(|(_, b)| matches!((a, b), (Ok(x), Ok(y)) if x == y))
                .collect()
        })
        .collect();
    let ran: Vec<usize> = (0..results.len()).filter(|&i| results[i].1.is_ok()).collect();
    let all_agree = ran.iter().all(|&i| ran.iter().all(|&j| agreement[i][j]));
    let verified = !ran.is_empty() && ran.iter().all(|&i| variants[i].verified);
    match format {
        Format::Json => write_json(
            out,
            &AllVariantsOutput {
                basis: kind.tag(),
                params: kind_params(kind),
                variants,
                agreement,
                all_agree,
                verified,
            },
        )?,
        Format::Latex | Format::Csv => write_lines(
            out,
            std::iter::once("variant,verified,coeffs".to_string()).chain(variants.iter().map(|v| {
                let body = match (&v.coeffs, &v.error) {
                    (Some(c), _) => c.join(";"),
                    (_, Some(e)) => format!("error: {e}"),
                    _ => String::new(),
                };
                format!("{},{},{}", v.variant, v.verified, body)
            })),
        )?,
    }
    Ok(all_agree && verified)
}

#[derive(Serialize)]
struct BriefReport<'a> {
    name: &'a str,
    params: &'a IdentityParams,
    holds: bool,
}

#[derive(Serialize)]
struct CaseError<'a> {
    identity: &'static str,
    params: &'a IdentityParams,
    error: String,
}

fn verify_cases(a: &VerifyArgs) -> Result<Vec<(Identity, IdentityParams)>> {
    let identities: Vec<Identity> = if a.identity == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![a.identity.parse()?]
    };
    let mut cases = Vec::new();
    for identity in identities {
        let ms: Vec<Option<usize>> = if identity.uses_m() { a.m.0.iter().copied().map(Some).collect() } else { vec![None] };
        for &m in &ms {
            for &n in &a.n.0 {
                let params = IdentityParams {
                    n,
                    m,
                    lambda: Some(a.lambda.clone()),
                    u: Some(a.u.clone()),
                    v: Some(a.v.clone()),
                    r: a.r,
                };
                cases.push((identity, params.restrict(identity)));
            }
        }
    }
    Ok(cases)
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialisable")
}

fn csv_opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn csv_row(name: &str, p: &IdentityParams, holds: &str, error: &str) -> String {
    let q = |v: &Option<Rational>| v.as_ref().map(format_rational).unwrap_or_default();
    format!(
        "{name},{},{},{},{},{},{},{holds},{error}",
        p.n,
        csv_opt(&p.m),
        q(&p.lambda),
        q(&p.u),
        q(&p.v),
        csv_opt(&p.r)
    )
}

fn cmd_verify(a: VerifyArgs, out: &mut impl Write) -> Result<bool> {
    let cases = verify_cases(&a)?;
    let results = check_all(&cases);
    if a.format == ReportFormat::Csv {
        writeln!(out, "name,n,m,lambda,u,v,r,holds,error").map_err(io_err)?;
    }
    let (mut total, mut held) = (0usize, 0usize);
    for ((identity, params), result) in cases.iter().zip(&results) {
        match result {
            Ok(reports) => {
                for rep in reports {
                    total += 1;
                    held += usize::from(rep.holds);
                    let text = match a.format {
                        ReportFormat::Csv => csv_row(&rep.name, &rep.params, &rep.holds.to_string(), ""),
                        ReportFormat::Json if a.brief => json_line(&BriefReport {
                            name: &rep.name,
                            params: &rep.params,
                            holds: rep.holds,
                        }),
                        ReportFormat::Json => json_line(rep),
                    };
                    writeln!(out, "{text}").map_err(io_err)?;
                }
            }
            Err(e) => {
                total += 1;
                let text = match a.format {
                    ReportFormat::Csv => csv_row(identity.name(), params, "false", &e.to_string()),
                    ReportFormat::Json => json_line(&CaseError { identity: identity.name(), params, error: e.to_string() }),
                };
                writeln!(out, "{text}").map_err(io_err)?;
            }
        }
    }
    eprintln!("{held}/{total} reports hold");
    Ok(held == total)
}
