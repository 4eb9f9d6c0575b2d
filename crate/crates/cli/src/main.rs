//! Command-line front end: expansion queries, verification suites, fixture
//! checks, and machine-readable output.
//!
//! Exit codes: 0 on success, 1 on verification failure (with a structured
//! report on stdout), 2 on usage errors. All output is deterministic for
//! identical inputs; the sampled rational points used by the identity
//! checks derive from a documented default seed, overridable with --seed.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use jucys::catalan::{gen_catalan, CatalanMethod};
use jucys::character::CharTable;
use jucys::engine::{
    self, assemble, moment_expansion, reduced_coeffs, ClassExpansion, Family, ReducedExpansion,
    ReducedTable,
};
use jucys::genfun::{hl_phi_display, jack_phi_fixture_scaled, phi_closed_form_z1, phi_series};
use jucys::oracle::oracle_expansion_with_guard;
use jucys::partition::Partition;
use jucys::poly::Poly;
use jucys::symfun::SymFun;
use jucys::verify::{self, Bounds, Report, Suite};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "jucys",
    version,
    about = "Exact class expansions of symmetric functions in Jucys-Murphy elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    E,
    P,
    H,
    Hl,
    E1e,
    Hook,
    He,
    Pkl,
    JackP,
    Moment,
}

impl FamilyArg {
    fn symfun(self, k: u32, l: Option<u32>) -> Result<SymFun, String> {
        let f = match self {
            FamilyArg::E => SymFun::E(k),
            FamilyArg::P => SymFun::P(k),
            FamilyArg::H => SymFun::H(k),
            FamilyArg::Hl => SymFun::Hl(k),
            FamilyArg::E1e => SymFun::E1E(k),
            FamilyArg::Hook => SymFun::Hook {
                arm: k,
                leg: l.ok_or("--family hook needs --l (the leg length)")?,
            },
            FamilyArg::He => SymFun::He {
                k,
                l: l.ok_or("--family he needs --l")?,
            },
            FamilyArg::Pkl => SymFun::Pkl {
                k,
                l: l.ok_or("--family pkl needs --l")?,
            },
            FamilyArg::JackP | FamilyArg::Moment => {
                return Err("this family has no group-algebra form".to_string())
            }
        };
        f.validate().map_err(|e| e.to_string())?;
        Ok(f)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Class expansion a_mu(n) computed through the reduced recurrences.
    Expand(ExpandArgs),
    /// The n-independent reduced coefficients c_rho of one family.
    Reduced(ReducedArgs),
    /// Brute-force class expansion from the group algebra of S_n.
    Oracle(OracleArgs),
    /// Run a verification suite and report pass/fail per check.
    Verify(VerifyArgs),
    /// Generalized Catalan polynomials, optionally cross-checked.
    Catalan(CatalanArgs),
    /// Generating function phi_rho(t) of reduced coefficients.
    Genfun(GenfunArgs),
    /// Moment expansions of the transition measure.
    Moments(MomentsArgs),
    /// Full character table of S_n.
    Chartable(ChartableArgs),
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct ReducedArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    n: usize,
    /// Override the n <= 8 guard rail.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    max_k: u32,
    /// Seed for the sampled rational points of the identity checks.
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Override suite guard rails.
    #[arg(long)]
    force: bool,
    /// Include the slower fixture checks (weights 6 and 7).
    #[arg(long)]
    extended: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct CatalanArgs {
    #[arg(long, default_value_t = 20)]
    max_r: u32,
    /// Cross-check all five computation methods.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct GenfunArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Partition in text form, e.g. "2,2".
    #[arg(long)]
    rho: String,
    #[arg(long, default_value_t = 14)]
    order: usize,
    /// Compare against the transcribed closed forms where available.
    #[arg(long)]
    check_fixtures: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct MomentsArgs {
    #[arg(long)]
    k: u32,
    /// Assemble the expansion at this weight instead of printing the
    /// reduced coefficients.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Args)]
struct ChartableArgs {
    #[arg(long)]
    n: u64,
    /// Override the n <= 10 guard rail.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(2)
                }
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Expand(args) => {
            let f = args.family.symfun(args.k, args.l)?;
            let expansion = engine::class_expansion_for(&f, args.n).map_err(|e| e.to_string())?;
            print_class_expansion(&expansion, args.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduced(args) => {
            let reduced = reduced_for(args.family, args.k, args.l)?;
            print_reduced(&reduced, args.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(args) => {
            let f = args.family.symfun(args.k, args.l)?;
            let expansion =
                oracle_expansion_with_guard(&f, args.n, args.force).map_err(|e| e.to_string())?;
            print_class_expansion(&expansion, args.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let suite = Suite::parse(&args.suite).ok_or_else(|| {
                format!(
                    "unknown suite {:?}; expected oracle, characters, identities, fixtures, \
                     jack, or all",
                    args.suite
                )
            })?;
            let bounds = Bounds {
                max_n: args.max_n,
                max_k: args.max_k,
                seed: args.seed,
                force: args.force,
                extended: args.extended,
            };
            let report = verify::run_suite(suite, &bounds).map_err(|e| e.to_string())?;
            print_report(&report, args.format);
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Catalan(args) => run_catalan(args),
        Command::Genfun(args) => run_genfun(args),
        Command::Moments(args) => {
            let reduced = moment_expansion(args.k);
            match args.n {
                Some(n) => print_class_expansion(&assemble(&reduced, n), args.format),
                None => print_reduced(&reduced, args.format),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chartable(args) => run_chartable(args),
    }
}

fn reduced_for(family: FamilyArg, k: u32, l: Option<u32>) -> Result<ReducedExpansion, String> {
    let err = |e: jucys::Error| e.to_string();
    Ok(match family {
        FamilyArg::P => reduced_coeffs(Family::P, k),
        FamilyArg::H => reduced_coeffs(Family::H, k),
        FamilyArg::Hl => reduced_coeffs(Family::Hl, k),
        FamilyArg::JackP => reduced_coeffs(Family::JackP, k),
        FamilyArg::Moment => moment_expansion(k),
        FamilyArg::Hook => {
            let l = l.ok_or("--family hook needs --l (the leg length)")?;
            engine::hook_expansion(k, l).map_err(err)?
        }
        FamilyArg::He => {
            let l = l.ok_or("--family he needs --l")?;
            engine::he_expansion(k, l).map_err(err)?
        }
        FamilyArg::Pkl => {
            let l = l.ok_or("--family pkl needs --l")?;
            engine::pkl_expansion(k, l).map_err(err)?
        }
        FamilyArg::E | FamilyArg::E1e => {
            return Err(
                "e and e1e have closed class-expansion forms; use the expand subcommand"
                    .to_string(),
            )
        }
    })
}

fn run_catalan(args: CatalanArgs) -> Result<ExitCode, String> {
    let mut rows = Vec::new();
    let mut all_agree = true;
    for r in 0..=args.max_r {
        let value = gen_catalan(r, CatalanMethod::DefSum).map_err(|e| e.to_string())?;
        let mut agree = true;
        if args.check {
            for method in [
                CatalanMethod::Rec,
                CatalanMethod::Alt1,
                CatalanMethod::Alt2,
                CatalanMethod::HlSpec,
            ] {
                if r == 0 && method != CatalanMethod::HlSpec {
                    continue; // the finite sums need r >= 1
                }
                if gen_catalan(r, method).map_err(|e| e.to_string())? != value {
                    agree = false;
                }
            }
        }
        all_agree &= agree;
        rows.push((r, value, agree));
    }
    match args.format {
        OutputFormat::Tsv => {
            for (r, value, agree) in &rows {
                if args.check {
                    println!("{r}\t{value}\t{}", if *agree { "pass" } else { "fail" });
                } else {
                    println!("{r}\t{value}");
                }
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row {
                r: u32,
                value: Poly,
                #[serde(skip_serializing_if = "Option::is_none")]
                methods_agree: Option<bool>,
            }
            let rows: Vec<Row> = rows
                .into_iter()
                .map(|(r, value, agree)| Row {
                    r,
                    value,
                    methods_agree: args.check.then_some(agree),
                })
                .collect();
            println!("{}", serde_json::to_string(&rows).expect("serializable"));
        }
    }
    Ok(if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_genfun(args: GenfunArgs) -> Result<ExitCode, String> {
    let rho: Partition = args.rho.parse().map_err(|e: jucys::Error| e.to_string())?;
    let family = match args.family {
        FamilyArg::P => Family::P,
        FamilyArg::H => Family::H,
        FamilyArg::Hl => Family::Hl,
        FamilyArg::JackP => Family::JackP,
        _ => return Err("genfun supports the families p, h, hl, jack-p".to_string()),
    };
    let mut table = ReducedTable::new(family);
    let series = phi_series(&mut table, &rho, args.order);

    let fixture_status = if args.check_fixtures {
        let ok = match family {
            Family::P => {
                let closed =
                    phi_closed_form_z1(&rho, args.order, true).map_err(|e| e.to_string())?;
                series == closed
            }
            Family::Hl if (2..=7).contains(&rho.weight()) => {
                let fixture = hl_phi_display(&rho, args.order).map_err(|e| e.to_string())?;
                series == fixture
            }
            Family::JackP => match jack_phi_fixture_scaled(&rho, args.order) {
                Some((scaled, denom)) => series.scale(&denom) == scaled,
                None => {
                    return Err(format!(
                        "no jack-p fixture available at rho = {rho} (covered weights: 2, 3)"
                    ))
                }
            },
            _ => {
                return Err(format!(
                    "no fixture available for family {} at rho = {rho}",
                    family.label()
                ))
            }
        };
        Some(ok)
    } else {
        None
    };

    match args.format {
        OutputFormat::Tsv => {
            for j in 0..series.order() {
                println!("{j}\t{}", series.coeff(j));
            }
            if let Some(ok) = fixture_status {
                println!("fixture\t{}", if ok { "pass" } else { "fail" });
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                family: &'a str,
                rho: String,
                order: usize,
                coeffs: Vec<Poly>,
                #[serde(skip_serializing_if = "Option::is_none")]
                fixture: Option<bool>,
            }
            let out = Out {
                family: family.label(),
                rho: rho.to_string(),
                order: series.order(),
                coeffs: (0..series.order()).map(|j| series.coeff(j)).collect(),
                fixture: fixture_status,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
    }
    Ok(match fixture_status {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn run_chartable(args: ChartableArgs) -> Result<ExitCode, String> {
    const GUARD: u64 = 10;
    if args.n > GUARD && !args.force {
        return Err(format!(
            "n = {} exceeds the character guard rail {GUARD} (use --force to override)",
            args.n
        ));
    }
    let table = CharTable::new(args.n);
    match args.format {
        OutputFormat::Tsv => {
            for ((lambda, mu), chi) in table.entries() {
                println!("{lambda}\t{mu}\t{chi}");
            }
        }
        OutputFormat::Json => {
            use std::collections::BTreeMap;
            let mut rows: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
            for ((lambda, mu), chi) in table.entries() {
                rows.entry(lambda.to_string())
                    .or_default()
                    .insert(mu.to_string(), chi.to_string());
            }
            #[derive(Serialize)]
            struct Out {
                n: u64,
                table:
                    std::collections::BTreeMap<String, std::collections::BTreeMap<String, String>>,
            }
            println!(
                "{}",
                serde_json::to_string(&Out {
                    n: args.n,
                    table: rows
                })
                .expect("serializable")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_class_expansion(expansion: &ClassExpansion, format: OutputFormat) {
    match format {
        OutputFormat::Tsv => {
            for (mu, coeff) in expansion.coeffs() {
                println!("{mu}\t{coeff}");
            }
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string(expansion).expect("serializable")
            );
        }
    }
}

fn print_reduced(reduced: &ReducedExpansion, format: OutputFormat) {
    match format {
        OutputFormat::Tsv => {
            for (rho, coeff) in &reduced.coeffs {
                println!("{rho}\t{coeff}");
            }
        }
        OutputFormat::Json => {
            println!("{}", serde_json::to_string(reduced).expect("serializable"));
        }
    }
}

fn print_report(report: &Report, format: OutputFormat) {
    match format {
        OutputFormat::Tsv => {
            for check in &report.checks {
                println!("{}\t{}\t{}", check.id, check.status, check.detail);
            }
            println!(
                "summary\t{}\tpassed={} failed={}",
                report.suite, report.passed, report.failed
            );
        }
        OutputFormat::Json => {
            println!("{}", serde_json::to_string(report).expect("serializable"));
        }
    }
}
