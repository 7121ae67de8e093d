//! Batch command-line front end: exact tables, polynomial evaluation,
//! symmetry reports, subspace queries, formula validation, and Fourier
//! partial sums.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 when
//! `validate` finds formula/series mismatches (the report itself is data;
//! code 3 just flags that it contains findings).

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use appell_core::classical::{
    bernoulli_number, bernoulli_polynomial, euler_at_zero, euler_polynomial, StirlingTable,
};
use appell_core::fourier::{
    appell_fourier_variant, bernoulli_fourier, euler_fourier, euler_order_r_fourier,
    FourierEvaluation, SumVariant,
};
use appell_core::higher::{
    bernoulli_higher_number, bernoulli_higher_poly_decomp, euler_higher_number,
    euler_higher_poly_decomp, validate_formula, FormulaId,
};
use appell_core::oracle::{bernoulli_f_series, euler_f_series};
use appell_core::symmetry::{
    characterize, decompose, reconstruct_bernoulli_form, reconstruct_euler_form,
};
use appell_core::{Family, Parity, Polynomial, Rational, TruncatedSeries, ValidationReport};

use output::{
    f64_repr, join_row, BasisOutput, DecomposeOutput, Format, FourierOutput, MemberOutput,
    NumbersOutput, PolyOutput, ValueRow,
};

#[derive(Parser)]
#[command(
    name = "appell",
    version,
    about = "Exact Appell sequences: Bernoulli/Euler tables, symmetry checks, and Fourier partial sums",
    after_help = "Rational arguments are written p/q or as integers (decimals are rejected).\n\
                  The default output format comes from --format, then APPELL_FORMAT, then text."
)]
struct Cli {
    /// Output format: text, json, csv, or tsv
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a number table (Bernoulli, Euler-at-zero, order-r variants,
    /// or the signed Stirling triangle)
    Numbers(NumbersArgs),
    /// Print one polynomial, optionally evaluated at a rational point
    Poly(PolyArgs),
    /// Characterize a generating series: parity verdicts and the
    /// symmetry of its Appell sequence up to the requested order
    Symmetry(SymmetryArgs),
    /// List the basis of scaled Bernoulli/Euler polynomials spanning V_n(a)
    Basis(BasisArgs),
    /// Exact coordinates of a polynomial in a V_n(a) basis, if it lies
    /// in the span
    Member(MemberArgs),
    /// Split a series into chosen coefficients plus an odd/even remainder
    /// and reconstruct P_n from the matching closed form
    Decompose(DecomposeArgs),
    /// Compare printed closed-form formulas against the series expansion;
    /// mismatches are reported as data and flagged via exit code 3
    Validate(ValidateArgs),
    /// Fourier partial sums with exact references. Domains: bernoulli
    /// needs n >= 1 and 0 <= x <= 1 (0 < x < 1 when n = 1); euler needs
    /// 0 <= x <= 1 (0 < x < 1 when n = 0); higher-euler needs 0 < x < r
    Fourier(FourierArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NumbersKind {
    Bernoulli,
    Euler0,
    HigherBernoulli,
    HigherEuler,
    Stirling,
}

#[derive(Args)]
struct NumbersArgs {
    /// Which table to print
    #[arg(long, value_enum)]
    kind: NumbersKind,
    /// Order r for the higher-* kinds (default 1)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Largest index n
    #[arg(long)]
    max: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Bernoulli,
    Euler,
    HigherBernoulli,
    HigherEuler,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    kind: PolyKind,
    /// Order r for the higher-* kinds (default 1)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Polynomial index n
    #[arg(long)]
    n: usize,
    /// Evaluate at this rational point instead of printing coefficients only
    #[arg(long, value_parser = parse_rational)]
    at: Option<Rational>,
}

#[derive(Args)]
struct SymmetryArgs {
    /// Series: builtin `bernoulli-r`/`euler-r` (unscaled order-r kernels,
    /// e.g. bernoulli-2) or an inline comma-separated list of exponential
    /// coefficients a_k
    #[arg(long)]
    f: String,
    /// Symmetry parameter a
    #[arg(long, value_parser = parse_rational)]
    a: Rational,
    /// Series order to check up to
    #[arg(long)]
    max: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Bernoulli,
    Euler,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Bernoulli => Family::Bernoulli,
            FamilyArg::Euler => Family::Euler,
        }
    }
}

#[derive(Args)]
struct BasisArgs {
    #[arg(long, value_enum)]
    kind: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Nonzero scaling parameter a
    #[arg(long, value_parser = parse_rational)]
    a: Rational,
}

#[derive(Args)]
struct MemberArgs {
    /// Ascending coefficients of the polynomial to test, comma-separated
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    coeffs: Vec<Rational>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_rational)]
    a: Rational,
    /// Basis family (default bernoulli)
    #[arg(long, value_enum, default_value = "bernoulli")]
    kind: FamilyArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Series spec as for `symmetry`
    #[arg(long)]
    f: String,
    #[arg(long, value_parser = parse_rational)]
    a: Rational,
    /// Required parity of the remainder F = f - sum a_k t^k/k!
    #[arg(long, value_enum)]
    parity: ParityArg,
    /// Index of the polynomial to reconstruct (series is built to order n+1)
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, value_enum)]
    kind: FamilyArg,
    /// Formula id: decomp, stirling-split, order2, order3, order3-refined, euler-stirling,
    /// euler-order2, fourier-euler-order, or `all` for every applicable one
    #[arg(long, default_value = "all")]
    formula: String,
    /// Order r (>= 1)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Largest n to compare
    #[arg(long)]
    max: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Bernoulli,
    Euler,
    HigherEuler,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Derived,
    Literal,
}

#[derive(Args)]
struct FourierArgs {
    #[arg(long, value_enum)]
    target: TargetArg,
    /// Polynomial index n
    #[arg(long)]
    n: usize,
    /// Order r (higher-euler only, default 1)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Evaluation point (required unless --grid is given)
    #[arg(long, value_parser = parse_rational, conflicts_with = "grid")]
    x: Option<Rational>,
    /// Number of term pairs M
    #[arg(long)]
    terms: u64,
    /// Sum exactly as printed (literal) or as derived by substitution
    #[arg(long, value_enum, default_value = "derived")]
    variant: VariantArg,
    /// Emit K+1 equally spaced points across the valid domain as plot rows
    #[arg(long, value_name = "K")]
    grid: Option<u32>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::parse(s).map_err(|e| e.to_string())
}

enum AppError {
    Usage(String),
    Domain(appell_core::Error),
}

impl From<appell_core::Error> for AppError {
    fn from(e: appell_core::Error) -> Self {
        AppError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let format =
        cli.format
            .unwrap_or_else(|| match std::env::var("APPELL_FORMAT").ok().as_deref() {
                Some("json") => Format::Json,
                Some("csv") => Format::Csv,
                Some("tsv") => Format::Tsv,
                _ => Format::Text,
            });
    let mut out = String::new();
    let code = match run(cli.command, format, &mut out) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(AppError::Domain(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    code
}

fn run(command: Command, format: Format, out: &mut String) -> Result<ExitCode, AppError> {
    match command {
        Command::Numbers(args) => numbers(args, format, out)?,
        Command::Poly(args) => poly(args, format, out)?,
        Command::Symmetry(args) => symmetry(args, format, out)?,
        Command::Basis(args) => basis(args, format, out)?,
        Command::Member(args) => member(args, format, out)?,
        Command::Decompose(args) => decompose_cmd(args, format, out)?,
        Command::Validate(args) => return validate(args, format, out),
        Command::Fourier(args) => fourier(args, format, out)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn push_line(out: &mut String, line: &str) {
    out.push_str(line);
    out.push('\n');
}

fn coeff_strings(coeffs: &[Rational]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}

fn numbers(args: NumbersArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    let kind_name = match args.kind {
        NumbersKind::Bernoulli => "bernoulli",
        NumbersKind::Euler0 => "euler0",
        NumbersKind::HigherBernoulli => "higher-bernoulli",
        NumbersKind::HigherEuler => "higher-euler",
        NumbersKind::Stirling => "stirling",
    };
    let order = match args.kind {
        NumbersKind::HigherBernoulli | NumbersKind::HigherEuler => Some(args.order),
        _ => None,
    };
    let mut output = NumbersOutput {
        kind: kind_name.to_string(),
        order,
        max: args.max,
        values: None,
        rows: None,
    };
    if args.kind == NumbersKind::Stirling {
        let table = StirlingTable::up_to(args.max);
        output.rows = Some(
            table
                .rows()
                .iter()
                .map(|row| row.iter().map(|v| Rational::from_int(v.clone())).collect())
                .collect(),
        );
    } else {
        let value = |n: usize| match args.kind {
            NumbersKind::Bernoulli => bernoulli_number(n),
            NumbersKind::Euler0 => euler_at_zero(n),
            NumbersKind::HigherBernoulli => bernoulli_higher_number(n, args.order),
            NumbersKind::HigherEuler => euler_higher_number(n, args.order),
            NumbersKind::Stirling => unreachable!(),
        };
        output.values = Some(
            (0..=args.max)
                .map(|n| ValueRow { n, value: value(n) })
                .collect(),
        );
    }
    match format {
        Format::Json => push_line(out, &serde_json::to_string(&output).unwrap()),
        Format::Csv | Format::Tsv => {
            if let Some(rows) = &output.rows {
                for (n, row) in rows.iter().enumerate() {
                    let mut cells = vec![n.to_string()];
                    cells.extend(coeff_strings(row));
                    push_line(out, &join_row(format, cells));
                }
            }
            if let Some(values) = &output.values {
                for v in values {
                    push_line(
                        out,
                        &join_row(format, [v.n.to_string(), v.value.to_string()]),
                    );
                }
            }
        }
        Format::Text => {
            if let Some(rows) = &output.rows {
                for (n, row) in rows.iter().enumerate() {
                    push_line(out, &format!("{n}: {}", coeff_strings(row).join(" ")));
                }
            }
            if let Some(values) = &output.values {
                for v in values {
                    push_line(out, &format!("{}: {}", v.n, v.value));
                }
            }
        }
    }
    Ok(())
}

fn poly(args: PolyArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    let p = match args.kind {
        PolyKind::Bernoulli => bernoulli_polynomial(args.n),
        PolyKind::Euler => euler_polynomial(args.n),
        PolyKind::HigherBernoulli => bernoulli_higher_poly_decomp(args.n, args.order),
        PolyKind::HigherEuler => euler_higher_poly_decomp(args.n, args.order),
    };
    let value = args.at.as_ref().map(|x| p.eval(x));
    let output = PolyOutput {
        coeffs: p.coeffs().to_vec(),
        at: args.at.clone(),
        value: value.clone(),
    };
    match format {
        Format::Json => push_line(out, &serde_json::to_string(&output).unwrap()),
        Format::Csv | Format::Tsv => match (&args.at, &value) {
            (Some(_), Some(v)) => {
                push_line(out, &join_row(format, [args.n.to_string(), v.to_string()]))
            }
            _ => {
                let mut cells = vec![args.n.to_string()];
                cells.extend(coeff_strings(&output.coeffs));
                push_line(out, &join_row(format, cells));
            }
        },
        Format::Text => match (&args.at, &value) {
            (Some(x), Some(v)) => push_line(out, &format!("P_{}({}) = {}", args.n, x, v)),
            _ => push_line(out, &format!("P_{}(x) = {}", args.n, p)),
        },
    }
    Ok(())
}

/// Builtin kernels `bernoulli-r` / `euler-r`, or an inline list of
/// exponential coefficients.
fn parse_series_spec(spec: &str, order: usize) -> Result<TruncatedSeries, AppError> {
    let lower = spec.trim().to_ascii_lowercase();
    let builtin = |name: &str| -> Option<(bool, u32)> {
        if let Some(rest) = name.strip_prefix("bernoulli") {
            let r = rest.strip_prefix('-').map_or(Some(1), |v| v.parse().ok())?;
            return Some((true, r));
        }
        if let Some(rest) = name.strip_prefix("euler") {
            let r = rest.strip_prefix('-').map_or(Some(1), |v| v.parse().ok())?;
            return Some((false, r));
        }
        None
    };
    if let Some((is_bernoulli, r)) = builtin(&lower) {
        if r == 0 {
            return Err(AppError::Usage(format!("order in '{spec}' must be >= 1")));
        }
        return Ok(if is_bernoulli {
            bernoulli_f_series(r, false, order)
        } else {
            euler_f_series(r, false, order)
        });
    }
    let coeffs: Result<Vec<Rational>, _> =
        spec.split(',').map(|s| Rational::parse(s.trim())).collect();
    match coeffs {
        Ok(a) if !a.is_empty() => Ok(TruncatedSeries::from_exponential(&a, order)),
        _ => Err(AppError::Usage(format!(
            "series spec '{spec}' is neither a builtin name (bernoulli-r, euler-r) nor a \
             comma-separated coefficient list"
        ))),
    }
}

fn symmetry(args: SymmetryArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    let f = parse_series_spec(&args.f, args.max)?;
    let g = TruncatedSeries::linear(Rational::one(), args.max);
    let report = characterize(&f, &g, &args.a)?;
    match format {
        Format::Json => push_line(out, &serde_json::to_string(&report).unwrap()),
        Format::Csv | Format::Tsv => {
            push_line(
                out,
                &join_row(
                    format,
                    [
                        report.parameter_a.to_string(),
                        report.order_checked.to_string(),
                        report.symmetric.to_string(),
                        report.g_odd.to_string(),
                        report.h_even.to_string(),
                        report.psi_odd.to_string(),
                        report.kernel_identity_holds.to_string(),
                    ],
                ),
            );
        }
        Format::Text => {
            push_line(out, &format!("a = {}", report.parameter_a));
            push_line(out, &format!("order checked = {}", report.order_checked));
            push_line(out, &format!("symmetric     = {}", report.symmetric));
            push_line(out, &format!("g odd         = {}", report.g_odd));
            push_line(out, &format!("h even        = {}", report.h_even));
            push_line(out, &format!("psi odd       = {}", report.psi_odd));
            push_line(
                out,
                &format!("kernel id.    = {}", report.kernel_identity_holds),
            );
            if let Some(failure) = &report.first_failure {
                push_line(
                    out,
                    &format!(
                        "first failure at n = {}: {} vs {}",
                        failure.n, failure.lhs, failure.rhs
                    ),
                );
            }
        }
    }
    Ok(())
}

fn basis(args: BasisArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    let family: Family = args.kind.into();
    let basis = appell_core::symmetry::vn_basis(family, args.n, &args.a)?;
    let output = BasisOutput {
        kind: family.name().to_string(),
        n: args.n,
        a: args.a.clone(),
        basis: basis.iter().map(|p| p.coeffs().to_vec()).collect(),
    };
    match format {
        Format::Json => push_line(out, &serde_json::to_string(&output).unwrap()),
        Format::Csv | Format::Tsv => {
            for (k, p) in output.basis.iter().enumerate() {
                let mut cells = vec![k.to_string()];
                cells.extend(coeff_strings(p));
                push_line(out, &join_row(format, cells));
            }
        }
        Format::Text => {
            for (k, p) in basis.iter().enumerate() {
                push_line(out, &format!("k={k}: {p}"));
            }
        }
    }
    Ok(())
}

fn member(args: MemberArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    let family: Family = args.kind.into();
    let p = Polynomial::from_coeffs(args.coeffs.clone());
    let coords = appell_core::symmetry::vn_membership(&p, args.n, &args.a, family)?;
    let output = MemberOutput {
        kind: family.name().to_string(),
        n: args.n,
        a: args.a.clone(),
        in_span: coords.is_some(),
        coordinates: coords,
    };
    match format {
        Format::Json => push_line(out, &serde_json::to_string(&output).unwrap()),
        Format::Csv | Format::Tsv => {
            let mut cells = vec![output.in_span.to_string()];
            if let Some(c) = &output.coordinates {
                cells.extend(coeff_strings(c));
            }
            push_line(out, &join_row(format, cells));
        }
        Format::Text => match &output.coordinates {
            Some(c) => push_line(
                out,
                &format!("in span; coordinates: [{}]", coeff_strings(c).join(", ")),
            ),
            None => push_line(out, "not in span"),
        },
    }
    Ok(())
}

fn decompose_cmd(args: DecomposeArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    let order = args.n + 1;
    let f = parse_series_spec(&args.f, order)?;
    let parity = match args.parity {
        ParityArg::Odd => Parity::Odd,
        ParityArg::Even => Parity::Even,
    };
    let d = decompose(&f, &args.a, parity)?;
    let reconstruction = match parity {
        Parity::Odd => reconstruct_euler_form(&d, args.n)?,
        Parity::Even => reconstruct_bernoulli_form(&d, args.n)?,
    };
    let output = DecomposeOutput {
        parameter_a: d.parameter_a.clone(),
        parity: d.parity,
        a_coeffs: d.a_coeffs.clone(),
        remainder_coeffs: d.remainder.coeffs().to_vec(),
        n: args.n,
        reconstruction: reconstruction.coeffs().to_vec(),
    };
    match format {
        Format::Json => push_line(out, &serde_json::to_string(&output).unwrap()),
        Format::Csv | Format::Tsv => {
            let row = |label: &str, values: &[Rational]| {
                let mut cells = vec![label.to_string()];
                cells.extend(coeff_strings(values));
                join_row(format, cells)
            };
            push_line(out, &row("a_coeffs", &output.a_coeffs));
            push_line(out, &row("remainder", &output.remainder_coeffs));
            push_line(out, &row("reconstruction", &output.reconstruction));
        }
        Format::Text => {
            push_line(
                out,
                &format!("a = {}, parity = {:?}", output.parameter_a, parity),
            );
            push_line(
                out,
                &format!("a_k: [{}]", coeff_strings(&output.a_coeffs).join(", ")),
            );
            push_line(
                out,
                &format!(
                    "remainder coefficients: [{}]",
                    coeff_strings(&output.remainder_coeffs).join(", ")
                ),
            );
            push_line(out, &format!("P_{} = {}", args.n, reconstruction));
        }
    }
    Ok(())
}

fn validate(args: ValidateArgs, format: Format, out: &mut String) -> Result<ExitCode, AppError> {
    let family: Family = args.kind.into();
    let reports: Vec<ValidationReport> = if args.formula == "all" {
        appell_core::higher::validate_formulas(family, args.order, args.max)
    } else {
        let id = FormulaId::parse(&args.formula).ok_or_else(|| {
            AppError::Usage(format!(
                "unknown formula '{}'; expected one of decomp, stirling-split, order2, order3, \
                 order3-refined, euler-stirling, euler-order2, fourier-euler-order, all",
                args.formula
            ))
        })?;
        vec![validate_formula(family, id, args.order, args.max)?]
    };
    match format {
        Format::Json => {
            if reports.len() == 1 {
                push_line(out, &serde_json::to_string(&reports[0]).unwrap());
            } else {
                push_line(out, &serde_json::to_string(&reports).unwrap());
            }
        }
        Format::Csv | Format::Tsv => {
            for report in &reports {
                for (n, ok) in report.matches.iter().enumerate() {
                    push_line(
                        out,
                        &join_row(
                            format,
                            [
                                report.formula.name().to_string(),
                                n.to_string(),
                                ok.to_string(),
                            ],
                        ),
                    );
                }
            }
        }
        Format::Text => {
            for report in &reports {
                let status = if report.all_match() {
                    "all match".to_string()
                } else {
                    format!("{} mismatching n", report.mismatches.len())
                };
                push_line(
                    out,
                    &format!(
                        "{} (kind={}, r={}, n<={}): {}",
                        report.formula.name(),
                        report.kind.name(),
                        report.r,
                        report.max_n,
                        status
                    ),
                );
                for mm in &report.mismatches {
                    let at_m = mm.m.map(|m| format!(" (m={m})")).unwrap_or_default();
                    push_line(
                        out,
                        &format!(
                            "  n={}{}: formula [{}] vs series [{}]",
                            mm.n,
                            at_m,
                            coeff_strings(&mm.formula_coeffs).join(", "),
                            coeff_strings(&mm.oracle_coeffs).join(", ")
                        ),
                    );
                }
            }
        }
    }
    let clean = reports.iter().all(ValidationReport::all_match);
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn fourier_target_name(target: TargetArg) -> &'static str {
    match target {
        TargetArg::Bernoulli => "bernoulli",
        TargetArg::Euler => "euler",
        TargetArg::HigherEuler => "higher-euler",
    }
}

fn fourier_eval(args: &FourierArgs, x: &Rational) -> Result<FourierEvaluation, AppError> {
    let variant = match args.variant {
        VariantArg::Derived => SumVariant::Derived,
        VariantArg::Literal => SumVariant::Literal,
    };
    let eval = match args.target {
        TargetArg::Bernoulli => match variant {
            SumVariant::Derived => bernoulli_fourier(args.n, x, args.terms)?,
            SumVariant::Literal => {
                let f = bernoulli_f_series(1, false, args.n + 1);
                let d = decompose(&f, &Rational::one(), Parity::Even)?;
                appell_fourier_variant(&d, args.n, x, args.terms, args.n, SumVariant::Literal)?
            }
        },
        TargetArg::Euler => match variant {
            SumVariant::Derived => euler_fourier(args.n, x, args.terms)?,
            SumVariant::Literal => {
                let f = euler_f_series(1, false, args.n.max(1));
                let d = decompose(&f, &Rational::one(), Parity::Odd)?;
                appell_fourier_variant(&d, args.n, x, args.terms, args.n, SumVariant::Literal)?
            }
        },
        TargetArg::HigherEuler => {
            euler_order_r_fourier(args.n, args.order, x, args.terms, variant)?
        }
    };
    Ok(eval)
}

fn fourier_output(args: &FourierArgs, eval: FourierEvaluation) -> FourierOutput {
    FourierOutput {
        target: fourier_target_name(args.target).to_string(),
        n: eval.n,
        order: match args.target {
            TargetArg::HigherEuler => Some(args.order),
            _ => None,
        },
        variant: match args.variant {
            VariantArg::Derived => "derived",
            VariantArg::Literal => "literal",
        }
        .to_string(),
        x: eval.x.clone(),
        terms: eval.terms,
        partial_sum: eval.partial_sum,
        imag_residue: eval.imag_residue,
        exact: eval.exact.clone(),
        abs_error: eval.abs_error,
    }
}

/// K+1 equally spaced rational points across the target's valid domain;
/// open domains use interior points (j+1)/(K+2).
fn grid_points(target: TargetArg, n: usize, r: u32, k: u32) -> Vec<Rational> {
    let k = k.max(1) as i64;
    let closed = match target {
        TargetArg::Bernoulli => n >= 2,
        TargetArg::Euler => n >= 1,
        TargetArg::HigherEuler => false,
    };
    let width = match target {
        TargetArg::HigherEuler => Rational::from_int(i64::from(r)),
        _ => Rational::one(),
    };
    (0..=k)
        .map(|j| {
            let frac = if closed {
                Rational::new(j, k)
            } else {
                Rational::new(j + 1, k + 2)
            };
            frac * &width
        })
        .collect()
}

fn fourier(args: FourierArgs, format: Format, out: &mut String) -> Result<(), AppError> {
    match args.grid {
        None => {
            let x = args
                .x
                .clone()
                .ok_or_else(|| AppError::Usage("either --x or --grid is required".to_string()))?;
            let eval = fourier_eval(&args, &x)?;
            let output = fourier_output(&args, eval);
            match format {
                Format::Json => push_line(out, &output.to_json()),
                Format::Csv | Format::Tsv => push_line(out, &output.row(format)),
                Format::Text => {
                    push_line(
                        out,
                        &format!(
                            "{} n={} x={} terms={} ({})",
                            output.target, output.n, output.x, output.terms, output.variant
                        ),
                    );
                    push_line(
                        out,
                        &format!("partial sum  = {}", f64_repr(output.partial_sum)),
                    );
                    push_line(
                        out,
                        &format!("imag residue = {}", f64_repr(output.imag_residue)),
                    );
                    push_line(out, &format!("exact        = {}", output.exact));
                    push_line(
                        out,
                        &format!("abs error    = {}", f64_repr(output.abs_error)),
                    );
                }
            }
        }
        Some(k) => {
            let points = grid_points(args.target, args.n, args.order, k);
            let outputs: Result<Vec<FourierOutput>, AppError> = points
                .iter()
                .map(|x| fourier_eval(&args, x).map(|e| fourier_output(&args, e)))
                .collect();
            let outputs = outputs?;
            match format {
                Format::Json => {
                    let body: Vec<String> = outputs.iter().map(FourierOutput::to_json).collect();
                    push_line(out, &format!("[{}]", body.join(",")));
                }
                // plot rows are tab-separated regardless of text/csv/tsv
                _ => {
                    for o in &outputs {
                        push_line(out, &o.row(Format::Tsv));
                    }
                }
            }
        }
    }
    Ok(())
}
