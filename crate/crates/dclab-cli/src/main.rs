use clap::{Args, Parser, Subcommand, ValueEnum};
use dclab_cli::suite::{run_suite, Command, OutputFormat, RunConfig};

const CSV_COLUMNS: &str = "\
CSV column order (no quoting; graph6 ids never contain commas):
  chi:       id,n,m,chi
  check:     id,n,m,chi,vertex_critical,dc_edge_count,double_critical,double_edge_critical,mixed_double_critical
  census:    id,n,m,chi,dc_edge_count,ratio,bound_c,is_decomposable,factor1,factor2
             (last line: summary,scanned,emitted,skipped_chi_mismatch,skipped_not_critical,parse_errors)
  search:    graph6,n,chi,is_complete
  minor:     id,t,outcome,certificate   (branch sets as 0+1|2|3)
  construct: n,m,graph6
  props:     id,chi,n,m,is_complete,is_vertex_critical,is_double_critical,pass,fail,vacuous

Exit codes: 0 all assertions hold; 1 a mathematical counterexample was found
(printed to stderr); 2 usage or I/O error. Malformed graph6 lines are
reported with their line number and skipped.";

/// Exact laboratory for chromatic criticality, Kempe machinery, clique
/// minors, connectivity, and small-graph censuses.
#[derive(Parser)]
#[command(name = "dclab", version, after_long_help = CSV_COLUMNS)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic number of each input graph
    Chi(Common),
    /// Criticality predicates (vertex-, double-, double-edge-, mixed-) per graph
    Check(Common),
    /// Double-critical edge census over vertex-critical graphs with chi = K
    Census(Common),
    /// Search for double-critical graphs (built-in enumeration or a corpus)
    Search(Common),
    /// K_t minor certificates per input graph
    Minor(Common),
    /// Build a named construction and print it as graph6
    Construct {
        /// Construction string: K6, C5, P4, W5, H(6,5), join(C5,K2), complement(C7)
        spec: String,
        #[command(flatten)]
        common: Common,
    },
    /// Structural property battery per input graph
    Props(Common),
}

#[derive(Args)]
struct Common {
    /// graph6 input file, one graph per line; repeatable; '-' reads stdin
    #[arg(long = "input", value_name = "FILE")]
    input: Vec<String>,

    /// Target chromatic number (census filter; chi cross-check for check)
    #[arg(long, value_name = "K")]
    k: Option<usize>,

    /// Clique order for minor search
    #[arg(long, value_name = "T")]
    t: Option<usize>,

    /// Use the built-in enumeration of all graphs on 1..=N vertices (N <= 7)
    #[arg(long = "max-n", value_name = "N")]
    max_n: Option<usize>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (0 = one per core); never affects output order
    #[arg(long, value_name = "N", default_value_t = 1)]
    jobs: usize,

    /// Step budget for minor searches
    #[arg(long, value_name = "STEPS")]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

fn to_config(command: Command, common: Common, spec: Option<String>) -> RunConfig {
    RunConfig {
        command,
        inputs: common.input,
        spec,
        k: common.k,
        t: common.t,
        max_n: common.max_n,
        format: common.format.into(),
        jobs: common.jobs,
        budget: common.budget,
    }
}

fn main() {
    let cli = Cli::parse();
    let cfg = match cli.cmd {
        Cmd::Chi(c) => to_config(Command::Chi, c, None),
        Cmd::Check(c) => to_config(Command::Check, c, None),
        Cmd::Census(c) => to_config(Command::Census, c, None),
        Cmd::Search(c) => to_config(Command::Search, c, None),
        Cmd::Minor(c) => to_config(Command::Minor, c, None),
        Cmd::Construct { spec, common } => to_config(Command::Construct, common, Some(spec)),
        Cmd::Props(c) => to_config(Command::Props, c, None),
    };
    let code = run_suite(
        &cfg,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
