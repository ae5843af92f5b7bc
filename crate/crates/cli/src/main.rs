use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use platycosm::closed_forms::{
    self, count, CountError, CountKind, CountQuery, TableRow, TABLE1_ROWS,
};
use platycosm::dirichlet::{self, euler_product_tau, eta_series, table2_entry, zeta_shift};
use platycosm::lowindex::{
    class_count, g2_presentation, g4_presentation, low_index_subgroups_bounded,
};
use platycosm::numtheory::tau;
use platycosm::plets::{count_by_type, IsoType};
use platycosm::{Ambient, AmbientManifold};

const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "platycosm", version, about = "Subgroup and covering counts for the flat 3-manifolds G1, G2 and G4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print s and/or c counts for one (ambient, type) pair
    Count(CountArgs),
    /// Print the 10-row table of all counts for n = 1..n_max
    Table(TableArgs),
    /// Cross-check the closed formulas against the enumeration oracles
    Verify(VerifyArgs),
    /// Run the coset-table search on one presentation and report counts
    LowIndex(LowIndexArgs),
    /// Check the generating-function identities coefficientwise
    Dirichlet(DirichletArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AmbientArg {
    G1,
    G2,
    G4,
}

impl From<AmbientArg> for AmbientManifold {
    fn from(a: AmbientArg) -> Self {
        match a {
            AmbientArg::G1 => AmbientManifold::G1,
            AmbientArg::G2 => AmbientManifold::G2,
            AmbientArg::G4 => AmbientManifold::G4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    Z3,
    G2,
    G4,
}

impl From<TypeArg> for IsoType {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::Z3 => IsoType::Z3,
            TypeArg::G2 => IsoType::G2,
            TypeArg::G4 => IsoType::G4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    S,
    C,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum, ignore_case = true)]
    ambient: AmbientArg,
    /// Subgroup isomorphism type; defaults to Z3 for G1
    #[arg(long = "type", value_enum, ignore_case = true)]
    subgroup_type: Option<TypeArg>,
    #[arg(long, value_enum, ignore_case = true, default_value = "both")]
    kind: KindArg,
    /// Single index n (mutually exclusive with --range)
    #[arg(long)]
    n: Option<u64>,
    /// Inclusive range "lo..hi"
    #[arg(long)]
    range: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 16)]
    n_max: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Upper bound for the 3-plet oracle sweep
    #[arg(long, default_value_t = 60)]
    max_n: u64,
    /// Also run the coset-table search oracle
    #[arg(long)]
    low_index: bool,
    /// Upper bound for the coset-table sweep
    #[arg(long, default_value_t = 8)]
    low_max_n: u64,
}

#[derive(Args)]
struct LowIndexArgs {
    /// Which presentation to search: g2 or g4
    #[arg(long, value_enum, ignore_case = true)]
    group: PresentationArg,
    #[arg(long)]
    n: u64,
    /// Search bound (indices above this are refused)
    #[arg(long, default_value_t = platycosm::lowindex::DEFAULT_BOUND)]
    bound: u64,
    /// Dump every coset table
    #[arg(long)]
    dump: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresentationArg {
    G2,
    G4,
}

#[derive(Args)]
struct DirichletArgs {
    /// Truncation length for the identity checks
    #[arg(long = "N", default_value_t = 256)]
    n_terms: u64,
    /// Truncation length for the tau Euler-product check
    #[arg(long, default_value_t = 2048)]
    tau_terms: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
struct Cell {
    row: String,
    n: u64,
    value: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::LowIndex(args) => cmd_low_index(args),
        Command::Dirichlet(args) => cmd_dirichlet(args),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn pair_error(e: CountError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_USAGE)
}

fn cmd_count(args: CountArgs) -> ExitCode {
    let ambient: AmbientManifold = args.ambient.into();
    let subgroup_type: IsoType = match (args.subgroup_type, ambient) {
        (Some(t), _) => t.into(),
        (None, AmbientManifold::G1) => IsoType::Z3,
        (None, _) => return usage_error("--type is required for ambient G2 and G4"),
    };
    let ns: Vec<u64> = match (args.n, &args.range) {
        (Some(n), None) => vec![n],
        (None, Some(r)) => match parse_range(r) {
            Some(ns) => ns,
            None => return usage_error("range must be \"lo..hi\" with lo <= hi"),
        },
        _ => return usage_error("exactly one of --n and --range is required"),
    };
    if ns.is_empty() || ns.contains(&0) {
        return usage_error("indices must be positive");
    }
    for n in ns {
        let kinds: &[CountKind] = match args.kind {
            KindArg::S => &[CountKind::Subgroups],
            KindArg::C => &[CountKind::Classes],
            KindArg::Both => &[CountKind::Subgroups, CountKind::Classes],
        };
        for &kind in kinds {
            let q = CountQuery { ambient, subgroup_type, n, kind };
            match count(&q) {
                Ok(v) => {
                    let tag = if kind == CountKind::Subgroups { "s" } else { "c" };
                    println!("{tag} n={n} {v}");
                }
                Err(e) => return pair_error(e),
            }
        }
    }
    ExitCode::SUCCESS
}

fn parse_range(r: &str) -> Option<Vec<u64>> {
    let (lo, hi) = r.split_once("..")?;
    let lo: u64 = lo.parse().ok()?;
    let hi: u64 = hi.parse().ok()?;
    if lo > hi {
        return None;
    }
    Some((lo..=hi).collect())
}

fn render_table_text(n_max: u64) -> String {
    let table = closed_forms::table1(n_max);
    let width = table
        .iter()
        .flat_map(|(_, vs)| vs.iter())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    let label_width = TABLE1_ROWS.iter().map(|r| r.key().len()).max().unwrap();
    let mut out = String::new();
    write!(out, "{:label_width$}", "n").unwrap();
    for n in 1..=n_max {
        write!(out, " {n:>width$}").unwrap();
    }
    out.push('\n');
    for (row, values) in &table {
        write!(out, "{:label_width$}", row.key()).unwrap();
        for (i, v) in values.iter().enumerate() {
            let n = i as u64 + 1;
            if row.is_blank(n) {
                write!(out, " {:>width$}", "").unwrap();
            } else {
                write!(out, " {v:>width$}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

fn table_cells(n_max: u64) -> Vec<Cell> {
    closed_forms::table1(n_max)
        .into_iter()
        .flat_map(|(row, values)| {
            let key = row.key();
            values
                .into_iter()
                .enumerate()
                .map(move |(i, value)| Cell { row: key.clone(), n: i as u64 + 1, value })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn cmd_table(args: TableArgs) -> ExitCode {
    if args.n_max < 1 {
        return usage_error("--n-max must be positive");
    }
    let rendered = match args.format {
        Format::Text => render_table_text(args.n_max),
        Format::Csv => {
            let mut out = String::from("row,n,value\n");
            for cell in table_cells(args.n_max) {
                writeln!(out, "{},{},{}", cell.row, cell.n, cell.value).unwrap();
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&table_cells(args.n_max)).unwrap();
            s.push('\n');
            s
        }
    };
    match args.output {
        Some(path) => {
            if let Err(e) = fs::write(&path, rendered) {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.max_n < 1 || args.max_n > 200 {
        return usage_error("--max-n must be in 1..=200");
    }
    let mut failed = false;
    for n in 1..=args.max_n {
        let mut line_ok = true;
        for (ambient_m, ambient_p) in [
            (AmbientManifold::G2, Ambient::G2),
            (AmbientManifold::G4, Ambient::G4),
        ] {
            let tallies = count_by_type(ambient_p, n);
            for t in [IsoType::Z3, IsoType::G2, IsoType::G4] {
                if !closed_forms::is_legal_pair(ambient_m, t) {
                    continue;
                }
                let s = count(&CountQuery { ambient: ambient_m, subgroup_type: t, n, kind: CountKind::Subgroups }).unwrap();
                let c = count(&CountQuery { ambient: ambient_m, subgroup_type: t, n, kind: CountKind::Classes }).unwrap();
                let (os, oc) = tallies.get(&t).copied().unwrap_or((0, 0));
                if (s, c) != (os, oc) {
                    println!(
                        "FAIL n={n} ambient={ambient_m:?} type={t:?}: formulas (s={s}, c={c}) vs oracle (s={os}, c={oc})"
                    );
                    line_ok = false;
                    failed = true;
                }
            }
        }
        if line_ok {
            println!("PASS n={n} plet oracle");
        }
    }
    if args.low_index {
        for n in 1..=args.low_max_n {
            for (name, p, ambient) in [
                ("G2", g2_presentation(), AmbientManifold::G2),
                ("G4", g4_presentation(), AmbientManifold::G4),
            ] {
                let tables = match low_index_subgroups_bounded(&p, n, args.low_max_n) {
                    Ok(t) => t,
                    Err(e) => return usage_error(&e.to_string()),
                };
                let (mut s_total, mut c_total) = (0u64, 0u64);
                for t in [IsoType::Z3, IsoType::G2, IsoType::G4] {
                    if !closed_forms::is_legal_pair(ambient, t) {
                        continue;
                    }
                    s_total += count(&CountQuery { ambient, subgroup_type: t, n, kind: CountKind::Subgroups }).unwrap();
                    c_total += count(&CountQuery { ambient, subgroup_type: t, n, kind: CountKind::Classes }).unwrap();
                }
                let found_s = tables.len() as u64;
                let found_c = class_count(&tables) as u64;
                if (found_s, found_c) != (s_total, c_total) {
                    println!(
                        "FAIL n={n} presentation={name}: search (s={found_s}, c={found_c}) vs formulas (s={s_total}, c={c_total})"
                    );
                    failed = true;
                } else {
                    println!("PASS n={n} presentation={name} low-index oracle");
                }
            }
        }
    }
    if failed {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_low_index(args: LowIndexArgs) -> ExitCode {
    let p = match args.group {
        PresentationArg::G2 => g2_presentation(),
        PresentationArg::G4 => g4_presentation(),
    };
    let tables = match low_index_subgroups_bounded(&p, args.n, args.bound) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    println!("subgroups {}", tables.len());
    println!("classes {}", class_count(&tables));
    if args.dump {
        for (i, t) in tables.iter().enumerate() {
            println!("table {}", i + 1);
            print!("{}", t.dump());
        }
    }
    ExitCode::SUCCESS
}

fn cmd_dirichlet(args: DirichletArgs) -> ExitCode {
    if args.n_terms < 1 {
        return usage_error("--N must be positive");
    }
    let mut failed = false;
    let pairs: [(IsoType, AmbientManifold); 4] = [
        (IsoType::Z3, AmbientManifold::G2),
        (IsoType::G2, AmbientManifold::G2),
        (IsoType::Z3, AmbientManifold::G4),
        (IsoType::G2, AmbientManifold::G4),
    ];
    let all_pairs = pairs
        .iter()
        .copied()
        .chain(std::iter::once((IsoType::G4, AmbientManifold::G4)));
    for (t, ambient) in all_pairs {
        for kind in [CountKind::Subgroups, CountKind::Classes] {
            let row = TableRow { kind, subgroup_type: t, ambient };
            let series = table2_entry(t, ambient, kind, args.n_terms).unwrap();
            let mut entry_ok = true;
            for n in 1..=args.n_terms {
                let direct =
                    count(&CountQuery { ambient, subgroup_type: t, n, kind }).unwrap() as i64;
                if series.get(n) != direct {
                    println!(
                        "FAIL entry {} at n={n}: series {} vs formula {direct}",
                        row.key(),
                        series.get(n)
                    );
                    entry_ok = false;
                    failed = true;
                    break;
                }
            }
            if entry_ok {
                println!("PASS entry {} to N={}", row.key(), args.n_terms);
            }
        }
    }
    // tau hat: Euler product = zeta * eta = two-squares count.
    let n = args.tau_terms;
    let product = euler_product_tau(n);
    let convolution = zeta_shift(0, n).convolve(&eta_series(n));
    let mut tau_ok = true;
    for k in 1..=n {
        if product.get(k) != convolution.get(k) || product.get(k) != tau(k) as i64 {
            println!("FAIL tau identity at n={k}");
            tau_ok = false;
            failed = true;
            break;
        }
    }
    if tau_ok {
        println!("PASS tau Euler product to N={n}");
    }
    let _ = dirichlet::chi(1);
    if failed {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}
