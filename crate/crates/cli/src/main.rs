//! Command-line front end: basis evaluation, verification reports and
//! Bergman projection error tables.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use contrakernel::exponential::Variant;
use contrakernel::harmonics::{BasisIndex, Domain, Family, Parity, Point3};
use contrakernel::quadrature::QuadratureRule;
use contrakernel::tables::{SphereGrid, TableKind};

use commands::{GramFamily, Sampling};
use output::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] contrakernel::Error),
    #[error("maximum deviation {max:e} exceeds the tolerance {tol:e}")]
    Tolerance { report: Report, max: f64, tol: f64 },
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use contrakernel::Error as E;
        match self {
            CliError::Lib(E::Domain(_)) => 3,
            CliError::Lib(_) => 2,
            CliError::Tolerance { .. } => 4,
            CliError::Io(_) => 1,
        }
    }
}

/// Orthogonal harmonic, monogenic and contragenic bases of the unit ball
/// and its exterior.
///
/// Every default reproduces the corresponding check of the acceptance
/// suite. The worker count is capped by CONTRAKERNEL_THREADS.
#[derive(Debug, Parser)]
#[command(name = "contrakernel", version)]
struct Cli {
    #[command(flatten)]
    out: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Significant digits of CSV numbers [default: 3 for bergman-table,
    /// shortest round-trip form otherwise].
    #[arg(long, global = true, conflicts_with = "full")]
    digits: Option<usize>,
    /// Print CSV numbers in the shortest form that round-trips.
    #[arg(long, global = true)]
    full: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one basis function at a point or on a sphere.
    Eval(EvalArgs),
    /// Evaluate the monogenic exponential or its reflected variant.
    Exp(ExpArgs),
    /// Gram matrix of a family against its closed form.
    Gram(GramArgs),
    /// Closed-form squared norms against quadrature.
    Norms(NormsArgs),
    /// Residual of the relation between contragenic and monogenic bases.
    Duality(DualityArgs),
    /// Error table of a truncated Bergman projection of the exponential.
    BergmanTable(TableArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    U,
    X,
    Y,
    Yt,
    Z,
}

impl From<Kind> for Family {
    fn from(k: Kind) -> Self {
        match k {
            Kind::U => Family::Harmonic,
            Kind::X => Family::Monogenic,
            Kind::Y => Family::Ambigenic,
            Kind::Yt => Family::AmbigenicTilde,
            Kind::Z => Family::Contragenic,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    Plus,
    Minus,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Plus => Parity::Plus,
            ParityArg::Minus => Parity::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Interior,
    Exterior,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Interior => Domain::Interior,
            DomainArg::Exterior => Domain::Exterior,
        }
    }
}

fn parse_point(s: &str) -> Result<Point3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!(
            "expected three comma-separated coordinates, got {s:?}"
        ));
    };
    let f = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Point3::new(f(a)?, f(b)?, f(c)?))
}

#[derive(Debug, Args)]
#[group(skip)]
struct SampleArgs {
    /// Cartesian point `x0,x1,x2`.
    #[arg(
        long,
        value_parser = parse_point,
        allow_hyphen_values = true,
        required_unless_present = "grid",
        conflicts_with = "grid"
    )]
    point: Option<Point3>,
    /// Sample the sphere of this radius on a (theta, phi) grid.
    #[arg(long, value_name = "RHO")]
    grid: Option<f64>,
    /// Polar grid size.
    #[arg(long, default_value_t = 30)]
    theta_count: usize,
    /// Azimuthal grid size.
    #[arg(long, default_value_t = 60)]
    phi_count: usize,
}

impl SampleArgs {
    fn sampling(&self) -> Sampling {
        match (self.point, self.grid) {
            (Some(p), _) => Sampling::Point(p),
            (None, Some(rho)) => Sampling::Sphere {
                rho,
                grid: SphereGrid {
                    n_theta: self.theta_count,
                    n_phi: self.phi_count,
                },
            },
            (None, None) => unreachable!("clap requires one of --point and --grid"),
        }
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum, ignore_case = true)]
    kind: Kind,
    /// Degree; negative degrees belong to the exterior.
    #[arg(long, allow_negative_numbers = true)]
    n: i32,
    /// Order.
    #[arg(long, allow_negative_numbers = true)]
    m: i32,
    #[arg(long, value_enum, default_value_t = ParityArg::Plus)]
    parity: ParityArg,
    /// Domain [default: inferred from the sign of n].
    #[arg(long, value_enum)]
    domain: Option<DomainArg>,
    #[command(flatten)]
    at: SampleArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    E,
    Estar,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::E => Variant::E,
            VariantArg::Estar => Variant::EStar,
        }
    }
}

#[derive(Debug, Args)]
struct ExpArgs {
    #[arg(long, value_enum, ignore_case = true, default_value_t = VariantArg::E)]
    variant: VariantArg,
    #[command(flatten)]
    at: SampleArgs,
}

#[derive(Debug, Args)]
struct RuleArgs {
    /// Radial nodes [default: 16].
    #[arg(long)]
    radial: Option<usize>,
    /// Polar nodes [default: 16].
    #[arg(long)]
    polar: Option<usize>,
    /// Azimuthal nodes [default: 64].
    #[arg(long)]
    azimuthal: Option<usize>,
}

impl RuleArgs {
    fn rule(&self, domain: Domain) -> contrakernel::Result<QuadratureRule> {
        let (r, t, a) = QuadratureRule::default_for(domain).sizes();
        QuadratureRule::build(
            domain,
            self.radial.unwrap_or(r),
            self.polar.unwrap_or(t),
            self.azimuthal.unwrap_or(a),
        )
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GramFamilyArg {
    U,
    X,
    /// Both ambigenic families.
    Y,
    Z,
    /// Conjugated monogenic against monogenic.
    Mixed,
}

impl From<GramFamilyArg> for GramFamily {
    fn from(f: GramFamilyArg) -> Self {
        match f {
            GramFamilyArg::U => GramFamily::Harmonic,
            GramFamilyArg::X => GramFamily::Monogenic,
            GramFamilyArg::Y => GramFamily::Ambigenic,
            GramFamilyArg::Z => GramFamily::Contragenic,
            GramFamilyArg::Mixed => GramFamily::Mixed,
        }
    }
}

#[derive(Debug, Args)]
struct GramArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: GramFamilyArg,
    #[arg(long, value_enum, default_value_t = DomainArg::Interior)]
    domain: DomainArg,
    /// Largest |n|.
    #[arg(long, default_value_t = 4)]
    max_degree: i32,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[command(flatten)]
    rule: RuleArgs,
}

#[derive(Debug, Args)]
struct NormsArgs {
    /// Domain [default: both].
    #[arg(long, value_enum)]
    domain: Option<DomainArg>,
    /// Largest |n|.
    #[arg(long, default_value_t = 6)]
    max_degree: i32,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[command(flatten)]
    rule: RuleArgs,
}

#[derive(Debug, Args)]
struct DualityArgs {
    /// Largest |n|.
    #[arg(long, default_value_t = 5)]
    max_degree: i32,
    /// Random points per domain.
    #[arg(long, default_value_t = 20)]
    points: usize,
    #[arg(long, default_value_t = 104)]
    seed: u64,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OperatorArg {
    /// Reproduction by the vector-part monogenic kernel.
    M,
    /// First-component quotient after the contragenic kernel.
    N,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value_t = DomainArg::Interior)]
    domain: DomainArg,
    #[arg(long, value_enum, ignore_case = true, default_value_t = OperatorArg::M)]
    operator: OperatorArg,
    /// Target function [default: e inside, estar outside].
    #[arg(long, value_enum, ignore_case = true)]
    target: Option<VariantArg>,
    /// Truncation degrees [default: 5,10,15,20 for M and 15,20,25,30 for N
    /// inside, 5,10 outside].
    #[arg(long, value_delimiter = ',')]
    ns: Option<Vec<usize>>,
    /// Sphere radii [default: 0.2,0.4,0.6,0.8 inside, 1.25,1.5,2 outside].
    #[arg(long, value_delimiter = ',')]
    rhos: Option<Vec<f64>>,
    /// Polar size of the sampling grid.
    #[arg(long, default_value_t = 30)]
    theta_count: usize,
    /// Azimuthal size of the sampling grid.
    #[arg(long, default_value_t = 60)]
    phi_count: usize,
    /// Radial nodes [default: 32 for M, 40 for N inside, 16 outside].
    #[arg(long)]
    radial: Option<usize>,
    /// Polar nodes [default: 32 for M, 48 for N inside, 16 outside].
    #[arg(long)]
    polar: Option<usize>,
    /// Azimuthal nodes [default: 96 for M, 128 for N inside, 64 outside].
    #[arg(long)]
    azimuthal: Option<usize>,
}

fn run(cli: &Cli) -> Result<(Report, Option<usize>), CliError> {
    let digits = |default: Option<usize>| {
        if cli.out.full {
            None
        } else {
            cli.out.digits.or(default)
        }
    };
    let report = match &cli.command {
        Command::Eval(a) => {
            let (family, n, m, parity) = (a.kind.into(), a.n, a.m, a.parity.into());
            let idx = match a.domain {
                Some(d) => BasisIndex::new(family, d.into(), n, m, parity)?,
                None => BasisIndex::infer(family, n, m, parity)?,
            };
            commands::eval(&idx, &a.at.sampling())?
        }
        Command::Exp(a) => commands::exp(a.variant.into(), &a.at.sampling()),
        Command::Gram(a) => {
            let domain = a.domain.into();
            commands::gram_report(
                a.family.into(),
                domain,
                a.max_degree,
                &a.rule.rule(domain)?,
                a.tol,
            )?
        }
        Command::Norms(a) => {
            let domains = match a.domain {
                Some(d) => vec![d.into()],
                None => vec![Domain::Interior, Domain::Exterior],
            };
            commands::norms(&domains, a.max_degree, |d| a.rule.rule(d), a.tol)?
        }
        Command::Duality(a) => commands::duality(a.max_degree, a.points, a.seed, a.tol)?,
        Command::BergmanTable(a) => {
            let domain: Domain = a.domain.into();
            let kind = match a.operator {
                OperatorArg::M => TableKind::Reproduction,
                OperatorArg::N => TableKind::Annihilation,
            };
            let mut spec = commands::table_preset(domain, kind);
            if let Some(t) = a.target {
                spec.target = t.into();
            }
            if let Some(ns) = &a.ns {
                spec.ns = ns.clone();
            }
            if let Some(rhos) = &a.rhos {
                spec.rhos = rhos.clone();
            }
            spec.grid = SphereGrid {
                n_theta: a.theta_count,
                n_phi: a.phi_count,
            };
            let (r, t, z) = spec.rule;
            spec.rule = (
                a.radial.unwrap_or(r),
                a.polar.unwrap_or(t),
                a.azimuthal.unwrap_or(z),
            );
            if domain == Domain::Exterior {
                eprintln!(
                    "warning: the target is not square integrable on the exterior; \
                     the values depend on the quadrature rule and serve only as a regression baseline"
                );
            }
            return Ok((commands::bergman_table(&spec)?, digits(Some(3))));
        }
    };
    Ok((report, digits(None)))
}

fn emit(cli: &Cli, report: &Report, digits: Option<usize>) -> std::io::Result<()> {
    let text = match cli.out.format {
        Format::Csv => {
            eprint!("{}", report.summary_text());
            report.to_csv(digits)
        }
        Format::Json => report.to_json(),
    };
    output::write(&text, cli.out.output.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(report, digits)| Ok(emit(&cli, &report, digits)?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let CliError::Tolerance { report, .. } = &e {
                if let Err(io) = emit(&cli, report, cli.out.digits) {
                    eprintln!("error: cannot write output: {io}");
                }
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
