use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};
use tbhl_core::clifford::{
    build_mi, render_ribbon, res_mi_formula, restriction_characteristic, ResForm,
};
use tbhl_core::domino::{enumerate_sdt, g_lambda, Partition};
use tbhl_core::families::{build_family, family_report, FamilySpec};
use tbhl_core::qsym::{delta_b, fb_monomials, peak_function_b, QSymElement, Variant};
use tbhl_core::shifted::{
    enumerate_sshdt, enumerate_ssshdt, h_lambda_monomial, h_lambda_peak, two_quotient,
};
use tbhl_core::verify::{
    clifford_audit, peak_theorem_cases, run_suite, AuditConfig, AuditReport, Suite,
};
use tbhl_core::Subset;

#[derive(Parser)]
#[command(
    name = "tbhl",
    version,
    about = "Type-B 0-Hecke and 0-Hecke-Clifford computations"
)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text.
    #[arg(long, global = true)]
    text: bool,
    #[arg(long, global = true, default_value_t = AuditConfig::default().seed)]
    seed: u64,
    /// Worker threads; falls back to TBHL_THREADS, then to the rayon default.
    #[arg(long, global = true, env = "TBHL_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// A fundamental quasisymmetric function F^B_I.
    Fb {
        #[arg(long)]
        set: Subset,
        #[arg(long)]
        n: usize,
        /// Expand into monomials.
        #[arg(long)]
        monomials: bool,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
    },
    /// The type-B peak function of a set, in the F^B basis.
    Delta {
        #[arg(long)]
        set: Subset,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "literal")]
        variant: Variant,
    },
    /// K_(bit,P) in the F^B basis.
    Peakfn {
        #[arg(long)]
        bit: u8,
        #[arg(long)]
        peaks: Subset,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "literal")]
        variant: Variant,
    },
    /// Standard domino tableaux.
    Domino {
        #[command(subcommand)]
        command: DominoCommand,
    },
    /// Shifted domino tableaux.
    Shifted {
        #[command(subcommand)]
        command: ShiftedCommand,
    },
    /// Induced 0-Hecke-Clifford modules.
    Clifford {
        #[command(subcommand)]
        command: CliffordCommand,
    },
    /// A permutation family such as arc:3, dclass:{0,1}:3, luni:2:4, luni:all:4[:inv].
    Family {
        spec: FamilySpec,
        #[arg(long)]
        count: bool,
    },
    /// Theorem audits; exit code 1 when any case fails.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Args)]
struct ShapeArg {
    #[arg(long)]
    shape: Partition,
}

#[derive(Subcommand)]
enum DominoCommand {
    Sdt {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        count: bool,
    },
    /// G_λ in the F^B basis.
    G {
        #[command(flatten)]
        shape: ShapeArg,
    },
}

#[derive(Subcommand)]
enum ShiftedCommand {
    Quotient {
        #[command(flatten)]
        shape: ShapeArg,
    },
    Sshdt {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        count: bool,
    },
    Ssshdt {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        max_value: u32,
        /// Comma-separated weight, e.g. 1,4,0,1,2,2.
        #[arg(long, value_delimiter = ',')]
        weight: Option<Vec<u32>>,
        #[arg(long)]
        count: bool,
    },
    /// H_λ in the F^B basis, and as monomials when --nvars is given.
    H {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value = "literal")]
        variant: Variant,
        #[arg(long)]
        nvars: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CliffordCommand {
    /// The ribbon picture of c_D ε_I.
    Ribbon {
        #[arg(long)]
        set: Subset,
        #[arg(long, default_value = "{}")]
        barred: Subset,
        #[arg(long)]
        n: usize,
    },
    /// Restriction characteristic of M_I with the closed forms.
    Mi {
        #[arg(long)]
        set: Subset,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct Limits {
    #[arg(long, default_value_t = AuditConfig::default().max_n)]
    max_n: usize,
    #[arg(long, default_value_t = AuditConfig::default().max_partition)]
    max_partition: usize,
    #[arg(long, default_value_t = AuditConfig::default().random_sets)]
    random_sets: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Every suite.
    All {
        #[command(flatten)]
        limits: Limits,
    },
    /// M_I restrictions against the closed forms.
    CliffordAudit {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// The peak theorem on every standard shifted tableau of a shape.
    PeakTheorem {
        #[command(flatten)]
        shape: ShapeArg,
    },
}

/// A command result in both renderings.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            failed: false,
        }
    }
}

fn qsym_output(element: &QSymElement) -> Output {
    Output::new(
        json!({ "n": element.n(), "fb": element }),
        element.to_string(),
    )
}

fn count_or_list<T>(items: &[T], count: bool, label: impl Fn(&T) -> String) -> Output {
    if count {
        return Output::new(json!({ "count": items.len() }), items.len().to_string());
    }
    let labels: Vec<String> = items.iter().map(label).collect();
    Output::new(
        json!({ "count": items.len(), "items": labels }),
        labels.join("\n"),
    )
}

fn audit_output(report: AuditReport) -> Output {
    let counts = report.counts();
    Output {
        failed: report.has_failures(),
        json: json!({ "counts": counts, "cases": report.cases }),
        text: report.to_text(),
    }
}

fn run(cli: &Cli) -> tbhl_core::Result<Output> {
    Ok(match &cli.command {
        Command::Fb {
            set,
            n,
            monomials,
            nvars,
        } => {
            if *monomials {
                let poly = fb_monomials(*set, *n, *nvars)?;
                Output::new(
                    json!({ "n": n, "nvars": nvars, "monomials": poly.to_string() }),
                    poly.to_string(),
                )
            } else {
                qsym_output(&QSymElement::fb(*n, *set)?)
            }
        }
        Command::Delta { set, n, variant } => qsym_output(&delta_b(*set, *n, *variant)?),
        Command::Peakfn {
            bit,
            peaks,
            n,
            variant,
        } => qsym_output(&peak_function_b(*bit, *peaks, *n, *variant)?),
        Command::Domino { command } => match command {
            DominoCommand::Sdt { shape, count } => {
                count_or_list(&enumerate_sdt(&shape.shape)?, *count, |t| t.label())
            }
            DominoCommand::G { shape } => qsym_output(&g_lambda(&shape.shape)?),
        },
        Command::Shifted { command } => match command {
            ShiftedCommand::Quotient { shape } => {
                let q = two_quotient(&shape.shape);
                let text = format!("mu={} nu={} valid={}", q.mu, q.nu, q.valid);
                Output::new(serde_json::to_value(&q).expect("serializable"), text)
            }
            ShiftedCommand::Sshdt { shape, count } => {
                count_or_list(&enumerate_sshdt(&shape.shape)?, *count, |t| t.label())
            }
            ShiftedCommand::Ssshdt {
                shape,
                max_value,
                weight,
                count,
            } => {
                let found = enumerate_ssshdt(&shape.shape, *max_value, weight.as_deref())?;
                count_or_list(&found, *count, |t| t.label())
            }
            ShiftedCommand::H {
                shape,
                variant,
                nvars,
            } => {
                let h = h_lambda_peak(&shape.shape, *variant)?;
                match nvars {
                    Some(k) => {
                        let poly = h_lambda_monomial(&shape.shape, *k)?;
                        let text = format!("{h}\n{poly}");
                        Output::new(json!({ "fb": h, "monomials": poly.to_string() }), text)
                    }
                    None => qsym_output(&h),
                }
            }
        },
        Command::Clifford { command } => match command {
            CliffordCommand::Ribbon { set, barred, n } => {
                let picture = render_ribbon(*set, *barred, *n);
                Output::new(json!({ "ribbon": picture }), picture)
            }
            CliffordCommand::Mi { set, n } => {
                let (direct, series) = restriction_characteristic(&build_mi(*set, *n)?)?;
                let mut forms = serde_json::Map::new();
                let mut text = format!("direct {direct}");
                for form in ResForm::ALL {
                    let value = res_mi_formula(*set, *n, form)?;
                    text.push_str(&format!("\n{} {value}", form.name()));
                    forms.insert(form.name().to_string(), json!(value));
                }
                Output::new(
                    json!({ "direct": direct, "series": series, "forms": forms }),
                    text,
                )
            }
        },
        Command::Family { spec, count } => {
            let fam = build_family(*spec)?;
            if *count {
                Output::new(
                    json!({ "family": fam.name, "count": fam.members.len() }),
                    fam.members.len().to_string(),
                )
            } else {
                let report = family_report(&fam)?;
                let text = format!(
                    "{}: {} elements, ascent-compatible {}, Q = {}",
                    fam.name,
                    fam.members.len(),
                    report.ascent_compatible,
                    report.q
                );
                Output::new(json!({ "members": fam.members, "report": report }), text)
            }
        }
        Command::Verify { command } => match command {
            VerifyCommand::All { limits } => {
                let cfg = AuditConfig {
                    max_n: limits.max_n,
                    max_partition: limits.max_partition,
                    seed: cli.seed,
                    random_sets: limits.random_sets,
                };
                let cases: Vec<_> = Suite::ALL
                    .par_iter()
                    .flat_map_iter(|&s| run_suite(s, &cfg))
                    .collect();
                audit_output(AuditReport::new(cases))
            }
            VerifyCommand::CliffordAudit { max_n } => {
                audit_output(AuditReport::new(clifford_audit(*max_n)))
            }
            VerifyCommand::PeakTheorem { shape } => {
                // A shape without shifted tilings is a usage error, not a failing case.
                enumerate_sshdt(&shape.shape)?;
                audit_output(AuditReport::new(peak_theorem_cases(&shape.shape)))
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("tbhl: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let body = if cli.text {
                out.text.trim_end().to_string()
            } else {
                serde_json::to_string_pretty(&out.json).expect("serializable")
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("tbhl: {e}");
            ExitCode::from(2)
        }
    }
}
