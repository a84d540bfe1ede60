//! `graphzeta` command-line frontend.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 data inconsistency or a
//! failed verification suite.

use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use graphzeta::census::{self, CensusConfig, MethodSpec, Source};
use graphzeta::iso::{canonical_g6, generate_g6, Filter};
use graphzeta::switching::{even_block_sizes, find_gm_pairs, gm_switch, PartitionBlocks, SwitchingPartition};
use graphzeta::zeta::{
    geodesic_census_from_traces, ihara_reciprocal_bass, ihara_reciprocal_hashimoto, phi_ad,
    phi_adj, structure_from_zeta, zeta_fingerprint,
};
use graphzeta::{graph6, verify, Error, Exec, Graph};

#[derive(Parser)]
#[command(name = "graphzeta", version, about = "Exact zeta functions and cospectral graph censuses")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print invariants of graph6 graphs read from a file or stdin.
    Invariants(InvariantsArgs),
    /// Count graphs not determined by each method and write table files.
    Census(CensusArgs),
    /// GM / GM* switching: search for partners or apply a partition.
    Switch(SwitchArgs),
    /// Run a self-check suite.
    Verify(VerifyArgs),
    /// Print one canonical graph6 line per isomorphism class.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct InvariantsArgs {
    /// graph6 file, `-` or omitted for stdin.
    input: Option<PathBuf>,
    /// Ihara reciprocal `R(t)` (Bass formula).
    #[arg(long)]
    ihara: bool,
    /// Ihara reciprocal from the Hashimoto matrix.
    #[arg(long)]
    hashimoto: bool,
    #[arg(long)]
    phi_ad: bool,
    #[arg(long)]
    phi_adj: bool,
    /// `(n†, 2m†, R(-1), R(-2))`.
    #[arg(long)]
    special: bool,
    /// Geodesic census up to this length.
    #[arg(long, value_name = "L")]
    geodesics: Option<usize>,
    /// Structure read off `R` (connected md2 graphs).
    #[arg(long)]
    structure: bool,
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(short = 'n')]
    n: usize,
    /// Comma-separated tags; append `@md2` to restrict to md2 graphs.
    #[arg(long, value_delimiter = ',', required = true)]
    methods: Vec<MethodSpec>,
    /// graph6 catalog instead of generating.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Directory for table files, summary, classes and manifest.
    #[arg(long)]
    outdir: Option<PathBuf>,
    /// Spill sorted shards here (mandatory for n >= 10).
    #[arg(long)]
    workdir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SwitchMode {
    FindGm,
    FindGmStar,
    Apply,
}

#[derive(Args)]
struct SwitchArgs {
    mode: SwitchMode,
    /// graph6 string, or a graph6 file with one graph per line.
    graph: String,
    /// Blocks for `apply`, e.g. `0,1,2,3|4,5,6,7`.
    #[arg(long)]
    blocks: Option<PartitionBlocks>,
    /// Block sizes to search (default: every even size >= 4).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Maximum number of switching blocks (1 or 2).
    #[arg(long, default_value_t = 1)]
    k_max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    BassHashimoto,
    /// The fixed example graphs.
    #[value(name = "paper-examples")]
    Examples,
    Oracle,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    /// Largest order checked.
    #[arg(short = 'n', default_value_t = 5)]
    n: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, default_value = "all")]
    filter: Filter,
    /// Edge range `lo..hi` (inclusive).
    #[arg(long)]
    edges: Option<String>,
}

/// Exit status of a library error.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::Inconsistent(_)
            | Error::NotIsomorphFree(..)
            | Error::Interpolation(_)
            | Error::InexactDivision(_),
        ) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let out = io::stdout();
    let mut out = out.lock();
    let res = match cli.cmd {
        Cmd::Invariants(a) => invariants(a, &mut out),
        Cmd::Census(a) => run_census(a, &mut out),
        Cmd::Switch(a) => switch(a, &mut out),
        Cmd::Verify(a) => run_verify(a, &mut out),
        Cmd::Generate(a) => generate(a, &mut out),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read_graphs(input: Option<&Path>) -> anyhow::Result<Vec<(String, Graph)>> {
    let lines: Vec<String> = match input {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(Error::from)
            .with_context(|| format!("reading {}", p.display()))?
            .lines()
            .map(str::to_string)
            .collect(),
        _ => io::stdin().lock().lines().collect::<io::Result<_>>().map_err(Error::from)?,
    };
    let mut out = Vec::new();
    for l in lines {
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        out.push((l.to_string(), graph6::decode(l)?));
    }
    Ok(out)
}

fn invariants(a: InvariantsArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let graphs = read_graphs(a.input.as_deref())?;
    let none = !(a.ihara
        || a.hashimoto
        || a.phi_ad
        || a.phi_adj
        || a.special
        || a.structure
        || a.geodesics.is_some());
    let on = |flag: bool| flag || a.all;
    for (s, g) in &graphs {
        if graphs.len() > 1 {
            writeln!(out, "graph\t{s}")?;
        }
        if on(a.ihara) || none {
            writeln!(out, "ihara\t{}", ihara_reciprocal_bass(g).reciprocal.to_coeff_string())?;
        }
        if on(a.hashimoto) {
            writeln!(out, "hashimoto\t{}", ihara_reciprocal_hashimoto(g).to_coeff_string())?;
        }
        if on(a.phi_ad) {
            writeln!(out, "phi_ad\t{}", phi_ad(g).to_coeff_string())?;
        }
        if on(a.phi_adj) {
            writeln!(out, "phi_adj\t{}", phi_adj(g).to_coeff_string())?;
        }
        if on(a.special) {
            writeln!(out, "special\t{}", zeta_fingerprint(g))?;
        }
        let len = a.geodesics.or(a.all.then_some(8));
        if let Some(len) = len {
            let c = geodesic_census_from_traces(g, len);
            let v: Vec<String> = (1..=len).map(|l| c.get(l).to_string()).collect();
            writeln!(out, "geodesics\t{}", v.join(","))?;
        }
        if on(a.structure) {
            match structure_from_zeta(&ihara_reciprocal_bass(g)) {
                Ok(st) => writeln!(
                    out,
                    "structure\tn={},m={},bipartite={},circuit={},residue={}",
                    st.n, st.m, st.bipartite, st.circuit, st.residue
                )?,
                Err(e) => writeln!(out, "structure\tunavailable: {e}")?,
            }
        }
    }
    Ok(0)
}

fn run_census(a: CensusArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    if a.n >= 10 && a.workdir.is_none() {
        anyhow::bail!(Error::Precondition("n >= 10 needs --workdir".into()));
    }
    if a.n > 11 {
        anyhow::bail!(Error::Precondition("census supports n <= 11".into()));
    }
    let mut cfg = CensusConfig::new(a.n, a.methods);
    cfg.source = a.catalog.map_or(Source::Generate, Source::Catalog);
    cfg.shards = a.shards;
    cfg.workdir = a.workdir;
    cfg.exec = Exec::Parallel;
    if let Some(w) = &cfg.workdir {
        std::fs::create_dir_all(w).map_err(Error::from)?;
    }
    let g6s = census::load_source(&cfg.source, cfg.n, cfg.exec)?;
    let reports = census::census_of(&cfg, &g6s)?;
    let summary = census::summary_tsv(&reports);
    out.write_all(summary.as_bytes())?;
    if let Some(dir) = &a.outdir {
        std::fs::create_dir_all(dir).map_err(Error::from)?;
        std::fs::write(dir.join("summary.tsv"), &summary).map_err(Error::from)?;
        std::fs::write(dir.join("manifest.txt"), census::manifest(&cfg, &g6s)).map_err(Error::from)?;
        for r in &reports {
            if !r.classes.is_empty() {
                let name = format!("classes-n{}-{}.tsv", r.n, r.method.to_string().replace('@', "-"));
                std::fs::write(dir.join(name), census::classes_tsv(r)).map_err(Error::from)?;
            }
        }
        census::write_tables(&reports, dir)?;
    }
    Ok(0)
}

fn switch(a: SwitchArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let graphs = if Path::new(&a.graph).is_file() {
        read_graphs(Some(Path::new(&a.graph)))?
    } else {
        vec![(a.graph.clone(), graph6::decode(&a.graph)?)]
    };
    for (s, g) in &graphs {
        match a.mode {
            SwitchMode::Apply => {
                let blocks = a
                    .blocks
                    .clone()
                    .ok_or_else(|| Error::Partition("apply needs --blocks".into()))?;
                let p = SwitchingPartition::new(g.order(), blocks.0)?;
                let h = gm_switch(g, &p)?;
                writeln!(out, "{s}\t{}\tapply\t{p}", graph6::encode(&h))?;
            }
            SwitchMode::FindGm | SwitchMode::FindGmStar => {
                let star = matches!(a.mode, SwitchMode::FindGmStar);
                let sizes = a.sizes.clone().unwrap_or_else(|| even_block_sizes(g.order()));
                let tag = format!("{}gm{}", a.k_max + 1, if star { "*" } else { "" });
                for (p, h) in find_gm_pairs(g, &sizes, star, a.k_max) {
                    writeln!(out, "{s}\t{}\t{tag}\t{p}", canonical_g6(&h))?;
                }
            }
        }
    }
    Ok(0)
}

fn run_verify(a: VerifyArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let exec = Exec::Parallel;
    let reports = match a.suite {
        Suite::BassHashimoto => vec![verify::bass_hashimoto(a.n, exec)],
        Suite::Examples => vec![verify::examples()],
        Suite::Oracle => vec![
            verify::trace_oracle(a.n, 10, exec),
            verify::series_oracle(a.n, 6, exec),
        ],
    };
    let mut ok = true;
    for r in &reports {
        writeln!(out, "{r}")?;
        for f in &r.failures {
            writeln!(out, "  {f}")?;
        }
        ok &= r.passed();
    }
    Ok(if ok { 0 } else { 3 })
}

fn generate(a: GenerateArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    if a.n > graphzeta::iso::MAX_GEN_ORDER {
        anyhow::bail!(Error::Precondition(format!("n above {}", graphzeta::iso::MAX_GEN_ORDER)));
    }
    let range = match &a.edges {
        None => None,
        Some(r) => {
            let (lo, hi) = r
                .split_once("..")
                .and_then(|(l, h)| Some((l.parse::<usize>().ok()?, h.parse::<usize>().ok()?)))
                .ok_or_else(|| Error::Precondition(format!("bad edge range {r:?}")))?;
            Some(lo..=hi)
        }
    };
    for s in generate_g6(a.n, a.filter, range, Exec::Parallel) {
        writeln!(out, "{s}")?;
    }
    Ok(0)
}
