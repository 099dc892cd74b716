//! Command-line front end: count and list the object families, apply the
//! bijections to single objects, run the self-check suites, and emit tables.
//!
//! Exit codes: 0 success, 1 failed verification or internal inconsistency,
//! 2 parse or domain error, 3 guard refusal.

mod tables;

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use genocchi_cycles::bijection;
use genocchi_cycles::enumerate::{CycleFamily, CycleIter, HistoryFamily, HistoryIter, PermFamily, PermIter};
use genocchi_cycles::verify;
use genocchi_cycles::{Cycle, Error, Multiset, Result};

/// Ceilings enforced before a pruned enumeration starts, all liftable with
/// --unsafe-no-guard. Chosen by experiment: the largest instances finish in
/// seconds, anything beyond can run for hours.
const MAX_CYCLE_CONTENT: usize = 18;
const MAX_WORD_LEN: u32 = 15;
const MAX_FREE_HISTORY_LEN: u32 = 9;
const MAX_SHAPED_HISTORY_LEN: u32 = 14;

#[derive(Parser)]
#[command(
    name = "genocchi-cli",
    version,
    about = "Census of parity-constrained cycles, Dumont permutations, and Laguerre histories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the objects of one family
    Count(FamilyArgs),
    /// List the objects of one family, one literal per line
    List(ListArgs),
    /// Apply a bijection to one object literal
    Map(MapArgs),
    /// Run the self-check suites
    Verify(VerifyArgs),
    /// Emit a counting table
    Table(TableArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// One of: ec, dc, dumont, soe, lag-all, lag-m, lag-mstar
    #[arg(long)]
    family: String,
    /// Ground set size for cycles and words, length for histories
    #[arg(long)]
    n: Option<u32>,
    /// Content multiset for the cycle families, e.g. "1,2^2,3,4"
    #[arg(long)]
    multiset: Option<String>,
    /// Lift the size guards and accept the running time
    #[arg(long = "unsafe-no-guard")]
    unsafe_no_guard: bool,
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MapArgs {
    /// One of: eta, phi_fv, rho, psi, theta, Phi, Psi
    #[arg(long)]
    bijection: String,
    /// The object literal to map
    #[arg(long)]
    input: String,
    /// Apply the inverse map instead
    #[arg(long)]
    inverse: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: roundtrips, counts, formulas, psi-order; omit to run all
    #[arg(long)]
    suite: Option<String>,
    /// Size ceiling; defaults per suite (4, 4, 7, and 8 respectively)
    #[arg(long)]
    max_n: Option<u32>,
    /// Random contents drawn by the psi-order suite
    #[arg(long, default_value_t = 200)]
    samples: u32,
    /// Seed for the psi-order suite
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct TableArgs {
    /// One of: genocchi, genocchi-k, f-eq
    #[arg(long)]
    kind: String,
    /// Rows up to n (genocchi, genocchi-k)
    #[arg(long)]
    max_n: Option<u32>,
    /// Columns up to k (genocchi-k)
    #[arg(long)]
    max_k: Option<u32>,
    /// Word length (f-eq)
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Lift the size guards and accept the running time
    #[arg(long = "unsafe-no-guard")]
    unsafe_no_guard: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Domain(_) => 2,
                Error::Guard(_) => 3,
                Error::Internal(_) => 1,
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Count(args) => {
            println!("{}", run_count(args)?);
            Ok(0)
        }
        Command::List(args) => {
            run_list(args)?;
            Ok(0)
        }
        Command::Map(args) => {
            println!("{}", run_map(args)?);
            Ok(0)
        }
        Command::Verify(args) => run_verify(args),
        Command::Table(args) => {
            run_table(args)?;
            Ok(0)
        }
    }
}

/// What a family selector points at, with its per-family guard applied.
enum Selected {
    Cycles(CycleIter),
    Words(PermIter),
    Histories(HistoryIter),
}

fn select_family(args: &FamilyArgs) -> Result<Selected> {
    let need_n = || {
        args.n
            .ok_or_else(|| Error::Parse(format!("--family {} needs --n", args.family)))
    };
    let no_multiset = || {
        if args.multiset.is_some() {
            Err(Error::Parse(
                "--multiset only applies to the cycle families ec and dc".into(),
            ))
        } else {
            Ok(())
        }
    };
    let guard = |size: u64, limit: u64, what: &str| {
        if !args.unsafe_no_guard && size > limit {
            Err(Error::Guard(format!(
                "{what} {size} is over the limit {limit}; pass --unsafe-no-guard to run anyway"
            )))
        } else {
            Ok(())
        }
    };
    match args.family.as_str() {
        "ec" | "dc" => {
            let content = match (&args.multiset, args.n) {
                (Some(_), Some(_)) => {
                    return Err(Error::Parse("give either --n or --multiset, not both".into()))
                }
                (Some(m), None) => m.parse::<Multiset>()?,
                (None, Some(n)) => Multiset::one_to(n)?,
                (None, None) => {
                    return Err(Error::Parse(format!(
                        "--family {} needs --n or --multiset",
                        args.family
                    )))
                }
            };
            guard(content.size() as u64, MAX_CYCLE_CONTENT as u64, "content size")?;
            let family = if args.family == "ec" {
                CycleFamily::EvenOddDrop
            } else {
                CycleFamily::DCycle
            };
            Ok(Selected::Cycles(CycleIter::new(family, &content)?))
        }
        "dumont" | "soe" => {
            no_multiset()?;
            let n = need_n()?;
            guard(n.into(), MAX_WORD_LEN.into(), "word length")?;
            let family = if args.family == "dumont" {
                PermFamily::Dumont
            } else {
                PermFamily::OddEvenDescent
            };
            Ok(Selected::Words(PermIter::new(family, n)?))
        }
        "lag-all" | "lag-m" | "lag-mstar" => {
            no_multiset()?;
            let n = need_n()?;
            let (family, limit) = match args.family.as_str() {
                "lag-all" => (HistoryFamily::All, MAX_FREE_HISTORY_LEN),
                "lag-m" => (HistoryFamily::SoeShaped, MAX_SHAPED_HISTORY_LEN),
                _ => (HistoryFamily::DumontShaped, MAX_SHAPED_HISTORY_LEN),
            };
            guard(n.into(), limit.into(), "history length")?;
            Ok(Selected::Histories(HistoryIter::new(family, n)?))
        }
        other => Err(Error::Parse(format!(
            "unknown family {other}; choose ec, dc, dumont, soe, lag-all, lag-m, or lag-mstar"
        ))),
    }
}

fn run_count(args: &FamilyArgs) -> Result<u64> {
    Ok(match select_family(args)? {
        Selected::Cycles(it) => it.count() as u64,
        Selected::Words(it) => it.count() as u64,
        Selected::Histories(it) => it.count() as u64,
    })
}

/// Cycles print in compact form on the way out; the parser takes either form.
fn cycle_literal(c: &Cycle) -> String {
    c.compact().to_string()
}

fn run_list(args: &ListArgs) -> Result<()> {
    let literals: Box<dyn Iterator<Item = String>> = match select_family(&args.family)? {
        Selected::Cycles(it) => Box::new(it.map(|c| cycle_literal(&c))),
        Selected::Words(it) => Box::new(it.map(|p| p.to_string())),
        Selected::Histories(it) => Box::new(it.map(|h| h.to_string())),
    };
    emit_lines(literals, args.format)
        .map_err(|e| Error::Internal(format!("writing the listing failed: {e}")))
}

fn emit_lines(literals: impl Iterator<Item = String>, format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut w = io::BufWriter::new(stdout.lock());
    match format {
        Format::Text => {
            for l in literals {
                writeln!(w, "{l}")?;
            }
        }
        Format::Csv => {
            writeln!(w, "object")?;
            for l in literals {
                writeln!(w, "\"{l}\"")?;
            }
        }
        Format::Json => {
            write!(w, "[")?;
            for (i, l) in literals.enumerate() {
                if i > 0 {
                    write!(w, ",")?;
                }
                write!(w, "{}", serde_json::json!({ "object": l }))?;
            }
            writeln!(w, "]")?;
        }
    }
    w.flush()
}

fn run_map(args: &MapArgs) -> Result<String> {
    let input = &args.input;
    use bijection as b;
    Ok(match (args.bijection.as_str(), args.inverse) {
        ("eta", false) => b::cycle_to_soe(&input.parse()?)?.to_string(),
        ("eta", true) => cycle_literal(&b::soe_to_cycle(&input.parse()?)?),
        ("phi_fv", false) => b::perm_to_history(&input.parse()?)?.to_string(),
        ("phi_fv", true) => b::history_to_perm(&input.parse()?)?.to_string(),
        ("rho", false) => b::reshape_to_dumont(&input.parse()?)?.to_string(),
        ("rho", true) => b::reshape_to_soe(&input.parse()?)?.to_string(),
        ("psi", false) => cycle_literal(&b::ec_to_dc(&input.parse()?)?),
        ("psi", true) => cycle_literal(&b::dc_to_ec(&input.parse()?)?),
        ("theta", false) => b::dc_to_dumont(&input.parse()?)?.to_string(),
        ("theta", true) => cycle_literal(&b::dumont_to_dc(&input.parse()?)?),
        ("Phi", false) => b::ec_to_dumont_via_histories(&input.parse()?)?.to_string(),
        ("Phi", true) => cycle_literal(&b::dumont_to_ec_via_histories(&input.parse()?)?),
        ("Psi", false) => b::ec_to_dumont_via_cycles(&input.parse()?)?.to_string(),
        ("Psi", true) => cycle_literal(&b::dumont_to_ec_via_cycles(&input.parse()?)?),
        (other, _) => {
            return Err(Error::Parse(format!(
                "unknown bijection {other}; choose eta, phi_fv, rho, psi, theta, Phi, or Psi"
            )))
        }
    })
}

fn run_verify(args: &VerifyArgs) -> Result<i32> {
    let suites = ["roundtrips", "counts", "formulas", "psi-order"];
    if let Some(s) = &args.suite {
        if !suites.contains(&s.as_str()) {
            return Err(Error::Parse(format!(
                "unknown suite {s}; choose roundtrips, counts, formulas, or psi-order"
            )));
        }
    }
    let picked = |name: &str| args.suite.as_deref().map_or(true, |s| s == name);
    let mut reports = Vec::new();
    if picked("roundtrips") {
        reports.extend(verify::roundtrip_suite(args.max_n.unwrap_or(4)));
    }
    if picked("counts") {
        reports.extend(verify::counts_suite(args.max_n.unwrap_or(4)));
    }
    if picked("formulas") {
        reports.extend(verify::formulas_suite(args.max_n.unwrap_or(7)));
    }
    if picked("psi-order") {
        reports.extend(verify::psi_order_suite(
            args.max_n.unwrap_or(8) as usize,
            args.samples,
            args.seed,
        ));
    }
    for report in &reports {
        println!("{report}");
    }
    if verify::all_passed(&reports) {
        println!("all {} checks passed", reports.len());
        Ok(0)
    } else {
        println!("verification failed");
        Ok(1)
    }
}

fn run_table(args: &TableArgs) -> Result<()> {
    let table = match args.kind.as_str() {
        "genocchi" => {
            let max_n = args
                .max_n
                .ok_or_else(|| Error::Parse("--kind genocchi needs --max-n".into()))?;
            tables::genocchi(max_n)?
        }
        "genocchi-k" => {
            let max_n = args
                .max_n
                .ok_or_else(|| Error::Parse("--kind genocchi-k needs --max-n".into()))?;
            let max_k = args
                .max_k
                .ok_or_else(|| Error::Parse("--kind genocchi-k needs --max-k".into()))?;
            tables::genocchi_k(max_n, max_k, args.unsafe_no_guard)?
        }
        "f-eq" => {
            let n = args
                .n
                .ok_or_else(|| Error::Parse("--kind f-eq needs --n".into()))?;
            tables::f_eq(n, args.unsafe_no_guard)?
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown table kind {other}; choose genocchi, genocchi-k, or f-eq"
            )))
        }
    };
    print!("{}", render_table(&table, args.format));
    Ok(())
}

fn render_table(table: &tables::Table, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for row in &table.rows {
                out.push_str(&row.text);
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = table.columns.join(",");
            out.push('\n');
            for row in &table.rows {
                let fields: Vec<String> = row.cells.iter().map(tables::Cell::csv).collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .map(|row| {
                    let object: serde_json::Map<String, serde_json::Value> = table
                        .columns
                        .iter()
                        .zip(&row.cells)
                        .map(|(col, cell)| (col.to_string(), cell.json()))
                        .collect();
                    serde_json::Value::Object(object)
                })
                .collect();
            let mut out = serde_json::Value::Array(rows).to_string();
            out.push('\n');
            out
        }
    }
}
