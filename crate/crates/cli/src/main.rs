//! The `kleinian` command line tool: exact character tables,
//! Riemann-Roch coefficients, and
//! correction terms for the finite ADE subgroups of SL(2).
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

mod render;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use kleinian::chartab::{character_table, CharacterTable};
use kleinian::matgroup::{Group, GroupSpec};
use kleinian::rrcoeff::{
    analyze_group, delta, rr_coefficients, skyscraper_class, verify_sweep, ReportModel,
};
use kleinian::KClass;

#[derive(Parser)]
#[command(
    name = "kleinian",
    about = "Exact Riemann-Roch coefficients for ADE stabilizer groups",
    long_about = "Computes character tables, Riemann-Roch coefficients T_i, and \
correction terms delta(E) for the cyclic, binary dihedral, and binary \
polyhedral subgroups of SL(2), entirely in exact arithmetic.\n\n\
Groups are named by Dynkin label (A<k>, D<k> with k >= 3, E6, E7, E8) or \
by the raw forms cyclic:<N> and dic:<n>."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group
    Chartab {
        /// Group spec (e.g. A2, D4, E6, cyclic:5, dic:3)
        #[arg(short, long)]
        group: String,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Riemann-Roch coefficients T_i
    Rr {
        #[arg(short, long)]
        group: String,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate the correction term delta(E) = sum a_i T_i
    Delta {
        #[arg(short, long)]
        group: String,
        /// Multiplicity vector, comma-separated integers (one per irrep)
        #[arg(long, value_name = "INTS", allow_hyphen_values = true)]
        a: Option<String>,
        /// Named class, e.g. skyscraper:rho_0
        #[arg(long, value_name = "skyscraper:<irrep>")]
        class: Option<String>,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the cross-verification suite
    Verify {
        /// Verify a single group
        #[arg(short, long)]
        group: Option<String>,
        /// Verify the whole sweep (all families)
        #[arg(long)]
        all: bool,
        /// Largest cyclic group order in the sweep
        #[arg(long, default_value_t = 50)]
        max_a: u32,
        /// Largest binary dihedral index in the sweep
        #[arg(long, default_value_t = 25)]
        max_d: u32,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Input and usage problems exit 2; verification mismatches exit 1.
enum CliError {
    Input(String),
    Mismatch,
}

impl From<kleinian::Error> for CliError {
    fn from(e: kleinian::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Mismatch) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Chartab { group, format } => {
            let table = build_table(&group)?;
            match format {
                Format::Text => print!("{}", render::chartab_text(&table)),
                Format::Json => println!("{}", render::to_json(&table.to_model())?),
                Format::Csv => print!("{}", render::chartab_csv(&table)?),
            }
            Ok(())
        }
        Command::Rr { group, format } => {
            let table = build_table(&group)?;
            let coeffs = rr_coefficients(&table)?;
            let model = render::rr_model(&table, &coeffs);
            match format {
                Format::Text => print!("{}", render::rr_text(&model)),
                Format::Json => println!("{}", render::to_json(&model)?),
                Format::Csv => print!("{}", render::rr_csv(&model)?),
            }
            Ok(())
        }
        Command::Delta {
            group,
            a,
            class,
            format,
        } => {
            let table = build_table(&group)?;
            let coeffs = rr_coefficients(&table)?;
            let (k, class_name) = resolve_class(&table, a.as_deref(), class.as_deref())?;
            let value = delta(&coeffs, &k)?;
            match format {
                Format::Text => println!("{}", value),
                Format::Json => {
                    let model = render::DeltaModel {
                        group: table.group.spec.to_string(),
                        a: k.0.clone(),
                        class: class_name,
                        delta: value.to_string(),
                    };
                    println!("{}", render::to_json(&model)?);
                }
                Format::Csv => print!("{}", render::delta_csv(&table, &k, &value)?),
            }
            Ok(())
        }
        Command::Verify {
            group,
            all,
            max_a,
            max_d,
            format,
        } => {
            let entries = match (group, all) {
                (Some(_), true) | (None, false) => {
                    return Err(CliError::Input(
                        "pass exactly one of --group <spec> or --all".into(),
                    ))
                }
                (Some(g), false) => {
                    let spec = parse_spec(&g)?;
                    analyze_group(spec)?.entries
                }
                (None, true) => verify_sweep(max_a, max_d)?,
            };
            let report = ReportModel::from_entries(entries);
            match format {
                Format::Text => print!("{}", render::report_text(&report)),
                Format::Json => println!("{}", render::to_json(&report)?),
                Format::Csv => print!("{}", render::report_csv(&report)?),
            }
            if report.has_mismatch() {
                Err(CliError::Mismatch)
            } else {
                Ok(())
            }
        }
    }
}

fn parse_spec(s: &str) -> Result<GroupSpec, CliError> {
    GroupSpec::from_str(s).map_err(|e| CliError::Input(e.to_string()))
}

fn build_table(group: &str) -> Result<CharacterTable, CliError> {
    let spec = parse_spec(group)?;
    Ok(character_table(Group::build(spec)?)?)
}

fn resolve_class(
    table: &CharacterTable,
    a: Option<&str>,
    class: Option<&str>,
) -> Result<(KClass, Option<String>), CliError> {
    match (a, class) {
        (Some(_), Some(_)) | (None, None) => Err(CliError::Input(
            "pass exactly one of --a <ints> or --class skyscraper:<irrep>".into(),
        )),
        (Some(a), None) => {
            let mults: Vec<i64> = a
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::Input(format!("invalid multiplicity `{}`", t)))
                })
                .collect::<Result<_, _>>()?;
            if mults.len() != table.irreps.len() {
                return Err(CliError::Input(format!(
                    "expected {} multiplicities for {}, got {}",
                    table.irreps.len(),
                    table.group.spec,
                    mults.len()
                )));
            }
            Ok((KClass(mults), None))
        }
        (None, Some(class)) => {
            let name = class.strip_prefix("skyscraper:").ok_or_else(|| {
                CliError::Input(format!(
                    "unknown class `{}`; expected skyscraper:<irrep>",
                    class
                ))
            })?;
            let i = table
                .irreps
                .iter()
                .position(|r| r.name == name)
                .ok_or_else(|| {
                    CliError::Input(format!(
                        "unknown irrep `{}`; available: {}",
                        name,
                        table
                            .irreps
                            .iter()
                            .map(|r| r.name.as_str())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ))
                })?;
            let k = skyscraper_class(table, i)?;
            Ok((k, Some(class.to_string())))
        }
    }
}
