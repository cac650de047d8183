//! `wilf-lab`: numerical semigroup invariants, gap Wilf numbers and genus surveys.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use wilf_core::catalog::{gap_rows, gap_table_text, wide_gap_rows, wide_gap_table_text, GAP_TABLE_SEMIGROUP};
use wilf_core::enumeration::{
    mu_hist_csv, parse_predicates, record_json, summary_json, survey_streaming, SurveyConfig, DEFAULT_NODE_BUDGET,
};
use wilf_core::lattice::{lattice_csv, lattice_rows, lattice_svg, TwoGenerator};
use wilf_core::semimodule::{enumerate_semimodules, semimodule_from_generators};
use wilf_core::wilf::{mu_report, wilf_value};
use wilf_core::{parse_int_list, parse_semigroup, Error, NumericalSemigroup};

const BUDGET_VAR: &str = "WILF_LAB_NODE_BUDGET";

#[derive(Parser)]
#[command(name = "wilf-lab", version, about = "Numerical semigroups, Wilf numbers and semimodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants of a semigroup.
    Info {
        spec: String,
        #[command(flatten)]
        format: Format,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Values of W(k) = kδ - c.
    Wilf {
        spec: String,
        #[arg(long, conflicts_with = "range")]
        k: Option<u64>,
        /// Inclusive range `A..B`; endpoints may be `m` or `e`.
        #[arg(long, required_unless_present = "k")]
        range: Option<String>,
        #[command(flatten)]
        format: Format,
    },
    /// Least k with W(k) >= 0, against the embedding dimension.
    Mu {
        spec: String,
        #[command(flatten)]
        format: Format,
    },
    /// Apéry set with respect to a nonzero element (default: the multiplicity).
    Apery {
        spec: String,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        by_residue: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Wilf number of every gap.
    Gapwilf {
        spec: String,
        #[command(flatten)]
        format: Format,
    },
    /// Semimodule generated by a set of integers.
    Semimodule {
        spec: String,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "enumerate")]
        gens: Option<String>,
        #[arg(long)]
        k: Option<u64>,
        /// List every semimodule with least element 0.
        #[arg(long, conflicts_with = "gens")]
        enumerate: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Lattice coordinates and W for every gap of a two-generator semigroup.
    Lattice {
        spec: String,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Enumerate every semigroup up to a genus and check predicates.
    Survey(SurveyArgs),
    /// Reference tables.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Args)]
struct Format {
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    max_genus: u64,
    /// Comma-separated predicates, or `all`.
    #[arg(long, default_value = "wilf,bound,frogo")]
    check: String,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 4)]
    split_depth: u64,
    /// JSONL output path.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    mu_hist_csv: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            match e {
                Error::InternalInconsistency(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Info { spec, format, csv } => info(&parse_semigroup(&spec)?, format.json, csv, out),
        Command::Wilf { spec, k, range, format } => {
            let ns = parse_semigroup(&spec)?;
            let ks = match (k, range) {
                (Some(k), _) => vec![k],
                (None, Some(r)) => parse_range(&r, &ns)?,
                (None, None) => unreachable!("clap requires one of --k and --range"),
            };
            wilf(&ns, &ks, format.json, out)
        }
        Command::Mu { spec, format } => {
            let report = mu_report(&parse_semigroup(&spec)?)?;
            if format.json {
                return json_line(out, &report);
            }
            writeln!(out, "mu: {}", report.mu)?;
            writeln!(out, "W(mu): {}", report.wilf_at_mu)?;
            writeln!(out, "e: {}", report.embedding_dimension)?;
            writeln!(out, "W(e): {}", report.wilf_at_e)?;
            writeln!(out, "e-mu: {}", report.gap_e_minus_mu)?;
            Ok(())
        }
        Command::Apery { spec, s, by_residue, format } => {
            let ns = parse_semigroup(&spec)?;
            let s = s.unwrap_or(ns.multiplicity());
            let ap = ns.apery_set(s)?;
            match (format.json, by_residue) {
                (true, false) => json_line(out, &ap.elements),
                (true, true) => json_line(out, &ap.by_residue()),
                (false, false) => {
                    let items: Vec<String> = ap.elements.iter().map(u64::to_string).collect();
                    writeln!(out, "{}", items.join(" "))?;
                    Ok(())
                }
                (false, true) => {
                    for (r, w) in ap.by_residue().iter().enumerate() {
                        writeln!(out, "{r}\t{w}")?;
                    }
                    Ok(())
                }
            }
        }
        Command::Gapwilf { spec, format } => gapwilf(&parse_semigroup(&spec)?, format.json, out),
        Command::Semimodule { spec, gens, k, enumerate, format } => {
            let ns = parse_semigroup(&spec)?;
            if enumerate {
                return semimodules(&ns, k, format.json, out);
            }
            let gens = parse_int_list(gens.as_deref().unwrap_or_default())?;
            let record = semimodule_from_generators(&ns, &gens)?.record(k)?;
            if format.json {
                return json_line(out, &record);
            }
            let list: Vec<String> = record.generators.iter().map(u64::to_string).collect();
            writeln!(out, "generators: [{}]", list.join(","))?;
            writeln!(out, "shift: {}", record.shift)?;
            writeln!(out, "conductor: {}", record.conductor)?;
            writeln!(out, "frobenius: {}", record.frobenius)?;
            writeln!(out, "delta: {}", record.delta)?;
            writeln!(out, "genus: {}", record.genus)?;
            writeln!(out, "gen_count: {}", record.gen_count)?;
            writeln!(out, "W(Delta): {}", record.wilf_number)?;
            if let (Some(k), Some(w)) = (record.k, record.wilf_at_k) {
                writeln!(out, "W({k}): {w}")?;
            }
            Ok(())
        }
        Command::Lattice { spec, csv, svg } => {
            let tg = TwoGenerator::from_semigroup(&parse_semigroup(&spec)?)?;
            let rows = lattice_rows(&tg)?;
            if let Some(path) = &csv {
                write_file(path, &lattice_csv(&rows))?;
            }
            if let Some(path) = &svg {
                write_file(path, &lattice_svg(&tg, &rows))?;
            }
            if csv.is_none() && svg.is_none() {
                out.write_all(lattice_csv(&rows).as_bytes())?;
            }
            Ok(())
        }
        Command::Survey(args) => survey(args, out),
        Command::Tables { which, format } => match which {
            1 => {
                let rows = wide_gap_rows()?;
                if format.json {
                    return json_line(out, &rows);
                }
                out.write_all(wide_gap_table_text(&rows).as_bytes())?;
                Ok(())
            }
            _ => gapwilf(&parse_semigroup(GAP_TABLE_SEMIGROUP)?, format.json, out),
        },
    }
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text)?;
    Ok(())
}

fn generators_csv(ns: &NumericalSemigroup) -> String {
    ns.minimal_generators().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn info(ns: &NumericalSemigroup, json: bool, csv: bool, out: &mut impl Write) -> Outcome {
    let r = ns.record();
    if json {
        return json_line(out, &r);
    }
    let type_ = r.type_.map_or(String::new(), |t| t.to_string());
    if csv {
        writeln!(out, "generators,multiplicity,frobenius,conductor,genus,delta,embedding_dimension,type,symmetric")?;
        let gens: Vec<String> = r.generators.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "\"{}\",{},{},{},{},{},{},{},{}",
            gens.join(" "),
            r.multiplicity,
            r.frobenius,
            r.conductor,
            r.genus,
            r.delta,
            r.embedding_dimension,
            type_,
            r.symmetric
        )?;
        return Ok(());
    }
    writeln!(out, "generators: {ns}")?;
    writeln!(out, "multiplicity: {}", r.multiplicity)?;
    writeln!(out, "embedding_dimension: {}", r.embedding_dimension)?;
    writeln!(out, "frobenius: {}", r.frobenius)?;
    writeln!(out, "conductor: {}", r.conductor)?;
    writeln!(out, "genus: {}", r.genus)?;
    writeln!(out, "delta: {}", r.delta)?;
    if r.type_.is_some() {
        writeln!(out, "type: {type_}")?;
    }
    writeln!(out, "symmetric: {}", r.symmetric)?;
    Ok(())
}

fn parse_range(text: &str, ns: &NumericalSemigroup) -> Result<Vec<u64>, Failure> {
    let endpoint = |s: &str| match s.trim() {
        "m" => Ok(ns.multiplicity()),
        "e" => Ok(ns.embedding_dimension() as u64),
        other => other.parse::<u64>().map_err(|_| Failure::Usage(format!("bad range endpoint {other:?}"))),
    };
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Failure::Usage(format!("range {text:?} is not of the form A..B")))?;
    let (a, b) = (endpoint(a)?, endpoint(b)?);
    if a > b {
        return Err(Failure::Usage(format!("empty range {text:?}")));
    }
    Ok((a..=b).collect())
}

#[derive(Serialize)]
struct WilfPoint {
    k: u64,
    wilf: i64,
}

fn wilf(ns: &NumericalSemigroup, ks: &[u64], json: bool, out: &mut impl Write) -> Outcome {
    let points: Vec<WilfPoint> =
        ks.iter().map(|&k| Ok(WilfPoint { k, wilf: wilf_value(ns, k)? })).collect::<Result<_, Error>>()?;
    if json {
        return json_line(out, &points);
    }
    if let [only] = points.as_slice() {
        writeln!(out, "{}", only.wilf)?;
        return Ok(());
    }
    for p in &points {
        writeln!(out, "{}\t{}", p.k, p.wilf)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct GapTable<'a> {
    gamma: String,
    rows: &'a [wilf_core::catalog::GapRow],
}

fn gapwilf(ns: &NumericalSemigroup, json: bool, out: &mut impl Write) -> Outcome {
    let rows = gap_rows(ns)?;
    if json {
        return json_line(out, &GapTable { gamma: generators_csv(ns), rows: &rows });
    }
    out.write_all(gap_table_text(&rows).as_bytes())?;
    Ok(())
}

fn semimodules(ns: &NumericalSemigroup, k: Option<u64>, json: bool, out: &mut impl Write) -> Outcome {
    if !json {
        writeln!(out, "generators\tconductor\tdelta\tgen_count\tW(Delta){}", k.map_or(String::new(), |k| format!("\tW({k})")))?;
    }
    for d in enumerate_semimodules(ns)? {
        let r = d.record(k)?;
        if json {
            json_line(out, &r)?;
            continue;
        }
        let gens: Vec<String> = r.generators.iter().map(u64::to_string).collect();
        write!(out, "[{}]\t{}\t{}\t{}\t{}", gens.join(","), r.conductor, r.delta, r.gen_count, r.wilf_number)?;
        if let Some(w) = r.wilf_at_k {
            write!(out, "\t{w}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn node_budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{BUDGET_VAR}={v:?} is not a node count"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn survey(args: SurveyArgs, out: &mut impl Write) -> Outcome {
    if args.max_genus == 0 {
        return Err(Failure::Usage("--max-genus must be at least 1".into()));
    }
    if args.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let predicates = parse_predicates(&args.check)?;
    let config = SurveyConfig {
        jobs: args.jobs,
        split_depth: args.split_depth,
        node_budget: node_budget()?,
        ..SurveyConfig::new(args.max_genus, &predicates)
    };
    let mut sink = args.out.as_deref().map(File::create).transpose()?.map(BufWriter::new);
    let mut write_error = None;
    let report = survey_streaming(&config, |r| {
        if let (Some(w), None) = (sink.as_mut(), write_error.as_ref()) {
            if let Err(e) = writeln!(w, "{}", record_json(r)) {
                write_error = Some(e);
            }
        }
    })?;
    if let Some(e) = write_error {
        return Err(e.into());
    }
    if let Some(mut w) = sink {
        writeln!(w, "{}", summary_json(&report))?;
        w.flush()?;
    }
    if let Some(path) = &args.mu_hist_csv {
        write_file(path, &mu_hist_csv(&report))?;
    }
    writeln!(out, "semigroups: {} (genus <= {})", report.total(), report.max_genus)?;
    let counts: Vec<String> = report.per_genus.iter().map(u64::to_string).collect();
    writeln!(out, "per_genus: {}", counts.join(","))?;
    for (p, t) in &report.tallies {
        writeln!(out, "{p}: checked={} satisfied={} violated={}", t.checked, t.satisfied, t.violated)?;
        for w in &t.witnesses {
            let gens: Vec<String> = w.iter().map(u64::to_string).collect();
            writeln!(out, "  counterexample: {}", gens.join(","))?;
        }
    }
    Ok(())
}
