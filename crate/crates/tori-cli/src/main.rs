//! Command-line surface for the torus-normalizer classification: root
//! systems, class enumeration, torus structure, degeneracy verdicts, census
//! tables and matrix-level verification, with JSON / CSV / markdown output.
//!
//! Exit codes: 0 success, 2 parameter errors, 3 budget errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tori::classify::{
    census_classical, census_exceptional_all, census_exceptional_group, census_row,
    classify_exceptional, degenerate_labels, label_universe, tabulated_q, ExceptionalGroup,
};
use tori::rootsys::{build_root_system, Family, RootSystemType};
use tori::torus::torus_factor_orders;
use tori::verify::{
    brute_force_normalizer_report, realizable, vanishing_roots, verify_witness,
};
use tori::weylclass::{enumerate_torus_classes, ClassicalFamily, TorusClassDescriptor};
use tori::{Error, DEFAULT_ENUMERATION_BUDGET};

#[derive(Parser)]
#[command(name = "tori")]
#[command(about = "Maximal tori of finite classical groups: degeneracy census and verification")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Args)]
struct ClassArgs {
    /// Classical family: A, 2A, B, C, D or 2D.
    #[arg(long)]
    family: String,
    /// Rank parameter (matrix size for A/2A, half-dimension otherwise).
    #[arg(long)]
    n: u32,
    /// Field size, a prime power.
    #[arg(long)]
    q: u64,
    /// Accept n below the simple-group range.
    #[arg(long, default_value_t = false)]
    no_simple_filter: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a root system with Cartan data as JSON.
    Rootsys {
        /// Family: A, B, C, D, G2, F4, E6, E7 or E8.
        #[arg(long = "type")]
        family: String,
        /// Rank (ignored for the exceptional families).
        #[arg(long, default_value_t = 0)]
        rank: u32,
    },
    /// List the torus class descriptors of a family.
    Classes {
        #[command(flatten)]
        common: ClassArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify one torus class.
    Classify {
        #[command(flatten)]
        common: ClassArgs,
        /// Class string, e.g. "(1)(2)" or "(2)(2)#2".
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the abstract torus structure of one class.
    Torus {
        #[command(flatten)]
        common: ClassArgs,
        #[arg(long)]
        class: String,
    },
    /// Classify every class over a range; classical or exceptional.
    Census {
        /// Classical family (omit with --exceptional).
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
        /// Inclusive n range, e.g. 2:5 (overrides --n).
        #[arg(long)]
        n_range: Option<String>,
        /// Comma-separated q values, e.g. 2,3,4,5 (overrides --q).
        #[arg(long)]
        q_values: Option<String>,
        /// Run over the exceptional tables instead.
        #[arg(long, default_value_t = false)]
        exceptional: bool,
        /// With --exceptional: all groups at all tabulated q.
        #[arg(long, default_value_t = false)]
        all: bool,
        /// With --exceptional: a single group.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = false)]
        no_simple_filter: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Matrix-level verification reports (JSON lines, one per class).
    Verify {
        #[command(flatten)]
        common: ClassArgs,
        /// Verify a single class instead of the whole family.
        #[arg(long)]
        class: Option<String>,
        /// Enumeration budget (elements); TORI_BUDGET overrides the default.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Exceptional-group tables: universes and verdicts.
    Exceptional {
        /// Group: G2, F4, E6, E7, E8, 2E6, 3D4 or 2B2.
        #[arg(long)]
        group: String,
        #[arg(long)]
        q: Option<u64>,
        /// Classify a single label.
        #[arg(long)]
        label: Option<String>,
        /// List the label universe.
        #[arg(long, default_value_t = false)]
        list: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parameter(_) => 2,
                Error::Budget(_) => 3,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn parse_family(s: &str) -> Result<ClassicalFamily, Error> {
    ClassicalFamily::parse(s)
}

fn budget_from(cli_budget: Option<usize>) -> usize {
    cli_budget
        .or_else(|| {
            std::env::var("TORI_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ENUMERATION_BUDGET)
}

fn descriptor(common: &ClassArgs, class: &str) -> Result<TorusClassDescriptor, Error> {
    let family = parse_family(&common.family)?;
    let d = TorusClassDescriptor::parse_class(family, common.n, common.q, class)?;
    if !common.no_simple_filter && common.n < family.min_simple_n() {
        return Err(Error::parameter(format!(
            "n = {} is below the simple range for family {}; pass --no-simple-filter",
            common.n,
            family.name()
        )));
    }
    Ok(d)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Rootsys { family, rank } => {
            let (fam, rank) = match family.as_str() {
                "A" => (Family::A, rank),
                "B" => (Family::B, rank),
                "C" => (Family::C, rank),
                "D" => (Family::D, rank),
                "G2" => (Family::G2, 2),
                "F4" => (Family::F4, 4),
                "E6" => (Family::E6, 6),
                "E7" => (Family::E7, 7),
                "E8" => (Family::E8, 8),
                other => {
                    return Err(Error::parameter(format!("unknown root system type {other:?}")))
                }
            };
            let ty = RootSystemType::new(fam, rank)?;
            let rs = build_root_system(ty);
            println!("{}", serde_json::to_string_pretty(&rs.to_json()).unwrap());
            Ok(())
        }
        Command::Classes { common, format } => {
            let family = parse_family(&common.family)?;
            let classes =
                enumerate_torus_classes(family, common.n, common.q, !common.no_simple_filter)?;
            match format {
                Format::Json => {
                    let items: Vec<_> = classes
                        .iter()
                        .map(|d| {
                            json!({
                                "family": d.family.name(),
                                "n": d.n,
                                "q": d.q,
                                "class": d.class_string(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items).unwrap());
                }
                _ => {
                    for d in &classes {
                        println!("{}", d.class_string());
                    }
                }
            }
            Ok(())
        }
        Command::Classify { common, class, format } => {
            let d = descriptor(&common, &class)?;
            let row = census_row(&d)?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&row).unwrap())
                }
                Format::Csv => {
                    println!("family,n,q,class,status,clauses,torus_order,algebraic_normaliser_order");
                    println!("{}", csv_row(&row));
                }
                Format::Md => {
                    println!("| family | n | q | class | status | clauses |");
                    println!("|---|---|---|---|---|---|");
                    println!("{}", md_row(&row));
                }
            }
            Ok(())
        }
        Command::Torus { common, class } => {
            let d = descriptor(&common, &class)?;
            let t = torus_factor_orders(&d)?;
            println!("{}", serde_json::to_string_pretty(&t).unwrap());
            Ok(())
        }
        Command::Census {
            family,
            n,
            q,
            n_range,
            q_values,
            exceptional,
            all,
            group,
            no_simple_filter,
            format,
        } => {
            if exceptional {
                return exceptional_census(all, group, format);
            }
            let family = parse_family(&family.ok_or_else(|| {
                Error::parameter("--family is required for a classical census")
            })?)?;
            let (n_lo, n_hi) = match n_range {
                Some(r) => {
                    let parts: Vec<&str> = r.split(':').collect();
                    if parts.len() != 2 {
                        return Err(Error::parameter("--n-range takes lo:hi"));
                    }
                    let lo = parts[0].parse().map_err(|_| Error::parameter("bad n range"))?;
                    let hi = parts[1].parse().map_err(|_| Error::parameter("bad n range"))?;
                    (lo, hi)
                }
                None => {
                    let n =
                        n.ok_or_else(|| Error::parameter("--n or --n-range is required"))?;
                    (n, n)
                }
            };
            let qs: Vec<u64> = match q_values {
                Some(list) => list
                    .split(',')
                    .map(|v| v.parse().map_err(|_| Error::parameter("bad q list")))
                    .collect::<Result<_, _>>()?,
                None => vec![q.ok_or_else(|| Error::parameter("--q or --q-values is required"))?],
            };
            let rows = census_classical(family, (n_lo, n_hi), &qs, !no_simple_filter)?;
            let degenerate = rows.iter().filter(|r| r.verdict.is_degenerate()).count();
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                }
                Format::Csv => {
                    println!("family,n,q,class,status,clauses,torus_order,algebraic_normaliser_order");
                    for row in &rows {
                        println!("{}", csv_row(row));
                    }
                }
                Format::Md => {
                    println!("| family | n | q | class | status | clauses |");
                    println!("|---|---|---|---|---|---|");
                    for row in &rows {
                        println!("{}", md_row(row));
                    }
                }
            }
            eprintln!("degenerate classes: {degenerate} of {}", rows.len());
            Ok(())
        }
        Command::Verify { common, class, budget } => {
            let family = parse_family(&common.family)?;
            let budget = budget_from(budget);
            let classes = match class {
                Some(c) => vec![descriptor(&common, &c)?],
                None => enumerate_torus_classes(
                    family,
                    common.n,
                    common.q,
                    !common.no_simple_filter,
                )?,
            };
            for d in classes {
                println!("{}", verify_line(&d, budget)?);
            }
            Ok(())
        }
        Command::Exceptional { group, q, label, list } => {
            let g = ExceptionalGroup::parse(&group)?;
            if list {
                for l in label_universe(g) {
                    let mark = if degenerate_labels(g).contains(l) {
                        " degenerate@q=2"
                    } else {
                        ""
                    };
                    println!("{l}{mark}");
                }
                return Ok(());
            }
            match (q, label) {
                (Some(q), Some(label)) => {
                    let verdict = classify_exceptional(g, &label, q)?;
                    let out = json!({
                        "group": g.name(),
                        "q": q,
                        "label": label,
                        "status": verdict.status,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    Ok(())
                }
                (Some(q), None) => {
                    let rows = census_exceptional_group(g, q)?;
                    let degenerate = rows.iter().filter(|r| r.degenerate).count();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                    eprintln!("degenerate classes: {degenerate} of {}", rows.len());
                    Ok(())
                }
                _ => Err(Error::parameter(
                    "pass --q (and optionally --label), or --list",
                )),
            }
        }
    }
}

fn exceptional_census(all: bool, group: Option<String>, format: Format) -> Result<(), Error> {
    if !all {
        let g = ExceptionalGroup::parse(
            &group.ok_or_else(|| Error::parameter("pass --all or --group"))?,
        )?;
        let q = tabulated_q(g)[0];
        let rows = census_exceptional_group(g, q)?;
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        return Ok(());
    }
    let (rows, counts, total) = census_exceptional_all();
    match format {
        Format::Json => {
            let out = json!({
                "rows": rows,
                "per_group_degenerate": counts
                    .iter()
                    .map(|(g, c)| json!({"group": g, "degenerate": c}))
                    .collect::<Vec<_>>(),
                "total_degenerate": total,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("group,q,label,degenerate");
            for r in &rows {
                println!("{},{},{},{}", r.group, r.q, r.label, r.degenerate);
            }
        }
        Format::Md => {
            println!("| group | degenerate classes |");
            println!("|---|---|");
            for (g, c) in &counts {
                println!("| {g} | {c} |");
            }
        }
    }
    println!("total degenerate classes: {total}");
    Ok(())
}

fn csv_row(row: &tori::classify::ClassicalCensusRow) -> String {
    let clauses: Vec<String> = row.verdict.clauses.iter().map(|c| c.to_string()).collect();
    format!(
        "{},{},{},{},{:?},{},{},{}",
        row.family,
        row.n,
        row.q,
        row.class,
        row.verdict.status,
        clauses.join("+"),
        row.torus.intersected_order,
        row.algebraic_normaliser_order
            .map(|v| v.to_string())
            .unwrap_or_default(),
    )
}

fn md_row(row: &tori::classify::ClassicalCensusRow) -> String {
    let clauses: Vec<String> = row.verdict.clauses.iter().map(|c| c.to_string()).collect();
    format!(
        "| {} | {} | {} | {} | {:?} | {} |",
        row.family,
        row.n,
        row.q,
        row.class,
        row.verdict.status,
        clauses.join("+"),
    )
}

/// One JSON verification record: classifier verdict, vanishing roots, and
/// (when the ambient group fits the budget) the brute-force normalizer data.
fn verify_line(d: &TorusClassDescriptor, budget: usize) -> Result<String, Error> {
    let row = census_row(d)?;
    let vanish = if realizable(d) {
        Some(vanishing_roots(d)?)
    } else {
        None
    };
    let witness = if row.verdict.is_degenerate() {
        Some(verify_witness(d)?.all_pass())
    } else {
        None
    };
    let brute = brute_force_normalizer_report(d, budget, false).ok();
    let consistent = match (&vanish, &brute) {
        (Some(v), Some(b)) => {
            row.verdict.is_degenerate() == !v.is_empty()
                && row.verdict.is_degenerate() == b.degenerate
        }
        (Some(v), None) => row.verdict.is_degenerate() == !v.is_empty(),
        _ => true,
    };
    let out = json!({
        "family": row.family,
        "n": row.n,
        "q": row.q,
        "class": row.class,
        "status": row.verdict.status,
        "clauses": row.verdict.clauses,
        "witness_roots": row.verdict.witness_roots.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "torus_order": row.torus.intersected_order,
        "vanishing_roots": vanish.map(|v| v.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
        "witness_checks_pass": witness,
        "algebraic_normaliser_order": row.algebraic_normaliser_order,
        "full_normalizer_order": brute.as_ref().map(|b| b.full_normalizer_order),
        "consistent": consistent,
    });
    Ok(out.to_string())
}
