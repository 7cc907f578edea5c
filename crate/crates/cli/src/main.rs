use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tourn_core::decomposition::nontrivial_intervals;
use tourn_core::{
    assemble_family, c3, c_invariant, canonical_code, gen_b6, gen_critical, gen_paley7,
    is_family_t_member, is_indecomposable, parse_records, support, to_record, total_order,
    w5_set, Census, CriticalKind, EnumOptions, Error, Family, FamilySpec, Tournament,
    VerdictReport,
};

#[derive(Parser)]
#[command(name = "tourn", version, about = "Indecomposability, critical vertices and W5 sets of tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one generated tournament as a record.
    Gen(GenArgs),
    /// Report the structure of every tournament in a record stream.
    Analyze(AnalyzeArgs),
    /// List one representative per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Check a structural statement over a census.
    Verify(VerifyArgs),
}

#[derive(Parser)]
struct GenArgs {
    /// C3, T, U, W, P7, B6 or TO (total order).
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    named: Option<String>,
    /// Vertex count for T, U, W and TO.
    #[arg(long)]
    size: Option<usize>,
    /// H, I, J, J*, K, K*, L or L*.
    #[arg(long, requires = "components")]
    family: Option<String>,
    /// Half-size of each outside component, comma separated.
    #[arg(long, value_delimiter = ',')]
    components: Vec<usize>,
}

#[derive(Parser)]
struct AnalyzeArgs {
    /// Record file; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// One JSON object per line.
    #[arg(long, conflicts_with = "dot")]
    json: bool,
    /// Graphviz arc diagrams.
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Indec,
    FamilyT,
    OmitsW5,
}

#[derive(Parser)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Repeat to require several filters at once.
    #[arg(long, value_enum)]
    filter: Vec<Filter>,
    /// Shorthand for `--filter indec`.
    #[arg(long)]
    indec: bool,
    /// Allow orders above the default budget.
    #[arg(long)]
    force: bool,
    #[arg(long, env = "TOURN_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Latka,
    Hik,
    Main,
    Lemmas,
    Sayar,
}

#[derive(Parser)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    /// Order checked, for latka and main; upper bound otherwise.
    #[arg(long, conflicts_with = "max_n")]
    n: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, env = "TOURN_JOBS", default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    force: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

/// An error that maps to exit code 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a).map(|_| true),
        Command::Analyze(a) => cmd_analyze(a).map(|_| true),
        Command::Enumerate(a) => cmd_enumerate(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn cmd_gen(a: GenArgs) -> Result<(), Usage> {
    let t = if let Some(name) = a.named {
        named(&name, a.size)?
    } else {
        let family: Family = a.family.as_deref().unwrap_or_default().parse()?;
        assemble_family(&FamilySpec::new(family, a.components))?
    };
    println!("{}", to_record(&t));
    Ok(())
}

fn named(name: &str, size: Option<usize>) -> Result<Tournament, Usage> {
    let sized = |kind: CriticalKind| -> Result<Tournament, Usage> {
        let n = size.ok_or_else(|| anyhow!("--named {name} needs --size"))?;
        Ok(gen_critical(kind, n)?)
    };
    match name.to_ascii_uppercase().as_str() {
        "C3" => Ok(c3()),
        "P7" => Ok(gen_paley7()),
        "B6" => Ok(gen_b6()),
        "TO" => {
            let n = size.ok_or_else(|| anyhow!("--named TO needs --size"))?;
            if n > tourn_core::MAX_VERTICES {
                return Err(Error::TooLarge(n).into());
            }
            Ok(total_order(n))
        }
        "T" => sized(CriticalKind::T),
        "U" => sized(CriticalKind::U),
        "W" => sized(CriticalKind::W),
        _ => Err(anyhow!("unknown tournament {name:?}").into()),
    }
}

fn read_input(path: Option<&PathBuf>) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
        }
    }
    Ok(text)
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<(), Usage> {
    let text = read_input(a.input.as_ref())?;
    let ts = parse_records(&text).map_err(|(line, e)| anyhow!("line {line}: {e}"))?;
    let mut out = BufWriter::new(io::stdout().lock());
    for t in &ts {
        let line = if a.dot {
            dot(t)
        } else if a.json {
            analysis_json(t).to_string()
        } else {
            analysis_text(t)
        };
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

fn analysis_json(t: &Tournament) -> serde_json::Value {
    let indec = t.n() >= 3 && is_indecomposable(t);
    let w5 = w5_set(t);
    json!({
        "n": t.n(),
        "indecomposable": indec,
        "support": support(t).ok().map(|s| s.to_vec()),
        "w5_set": w5.to_vec(),
        "w5_size": w5.len(),
        "family_t": is_family_t_member(t),
        "c_invariant": c_invariant(t).ok(),
        "canonical": canonical_code(t).to_record(),
    })
}

fn analysis_text(t: &Tournament) -> String {
    let indec = t.n() >= 3 && is_indecomposable(t);
    let w5 = w5_set(t);
    let mut s = format!(
        "n={} indecomposable={} nontrivial_intervals={}",
        t.n(),
        indec,
        nontrivial_intervals(t).len()
    );
    match support(t) {
        Ok(sigma) => write!(s, " support={sigma}").unwrap(),
        Err(_) => s.push_str(" support=-"),
    }
    write!(s, " w5_size={} w5_set={} family_t={}", w5.len(), w5, is_family_t_member(t)).unwrap();
    match c_invariant(t) {
        Ok(c) => write!(s, " c={c}").unwrap(),
        Err(_) => s.push_str(" c=-"),
    }
    write!(s, " canonical={}", canonical_code(t)).unwrap();
    s
}

fn dot(t: &Tournament) -> String {
    let mut s = String::from("digraph T {\n");
    for v in 0..t.n() {
        writeln!(s, "  {v} [label=\"{v}\"];").unwrap();
    }
    for (x, y) in t.arcs() {
        writeln!(s, "  {x} -> {y};").unwrap();
    }
    s.push('}');
    s
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<(), Usage> {
    let opts = EnumOptions { jobs: a.jobs, force: a.force };
    let mut filters = a.filter;
    if a.indec {
        filters.push(Filter::Indec);
    }
    let census = Census::build(a.n, &opts)?;
    let needs_flags = filters.iter().any(|&f| f != Filter::All);
    let mut out = BufWriter::new(io::stdout().lock());
    let mut count = 0;
    if needs_flags {
        for e in census.entries(a.n) {
            let keep = filters.iter().all(|f| match f {
                Filter::All => true,
                Filter::Indec => e.indecomposable,
                Filter::FamilyT => e.family_t,
                Filter::OmitsW5 => e.omits_w5,
            });
            if keep {
                writeln!(out, "{}", e.canonical)?;
                count += 1;
            }
        }
    } else {
        for code in census.codes(a.n) {
            writeln!(out, "{code}")?;
            count += 1;
        }
    }
    writeln!(out, "# count={count}")?;
    out.flush()?;
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<bool, Usage> {
    let opts = EnumOptions { jobs: a.jobs, force: a.force };
    let n = match (a.n, a.max_n) {
        (Some(n), _) | (None, Some(n)) => n,
        (None, None) => match a.theorem {
            Theorem::Latka | Theorem::Main => return Err(anyhow!("this theorem needs --n").into()),
            Theorem::Sayar => 8,
            Theorem::Hik | Theorem::Lemmas => 9,
        },
    };
    let census = Census::build(n, &opts)?;
    let report = match a.theorem {
        Theorem::Latka => census.verify_latka(n)?,
        Theorem::Hik => census.verify_hik(n)?,
        Theorem::Main => census.verify_main(n)?,
        Theorem::Lemmas => census.verify_lemma_suite(n)?,
        Theorem::Sayar => census.verify_sayar(n)?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        render(&mut out, &report, 0)?;
    }
    out.flush()?;
    Ok(report.pass)
}

fn render(out: &mut impl Write, r: &VerdictReport, depth: usize) -> io::Result<()> {
    let pad = "  ".repeat(depth);
    let range = if r.n_min == r.n_max {
        format!("n={}", r.n_min)
    } else {
        format!("n={}..{}", r.n_min, r.n_max)
    };
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    writeln!(out, "{pad}{} {range} {verdict}", r.theorem)?;
    for (k, v) in &r.counts {
        writeln!(out, "{pad}  {k}={v}")?;
    }
    for c in &r.classes {
        writeln!(out, "{pad}  class {c}")?;
    }
    for c in &r.counterexamples {
        writeln!(out, "{pad}  counterexample {c}")?;
    }
    for d in &r.details {
        render(out, d, depth + 1)?;
    }
    Ok(())
}
