use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sixsphere::circuits::{self, CircuitKind};
use sixsphere::dartlist;
use sixsphere::enumerate::{self, EnumerationRequest};
use sixsphere::gc;
use sixsphere::named::{self, NamedGraphId};
use sixsphere::record::{self, GraphStore};
use sixsphere::render;
use sixsphere::symmetry;
use sixsphere::verify;
use sixsphere::PlanarMap;

#[derive(Parser)]
#[command(name = "sixsphere", about = "6-regular plane graphs with faces of size 1, 2 and 3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// worker threads (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Dartlist,
    Planarcode,
}

#[derive(Clone, Copy, ValueEnum)]
enum MirrorMode {
    /// count up to reflection
    Quotient,
    /// count chiral pairs separately
    Chiral,
}

#[derive(Args)]
struct MapSource {
    /// named graph id (six-k2, three-k3, trifolium, t2, k2-tetrahedron, r2, s2, a3, b3, c3, ti2, ...)
    #[arg(long)]
    seed: Option<String>,
    /// read a dart-list line from a file
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// hex canonical code
    #[arg(long)]
    code: Option<String>,
}

impl MapSource {
    fn resolve(&self) -> Result<PlanarMap, String> {
        if let Some(seed) = &self.seed {
            let id: NamedGraphId = seed.parse()?;
            return named::named_graph(id).map_err(|e| e.to_string());
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            let line = text.lines().next().ok_or("empty input file")?;
            return dartlist::from_dartlist(line).map_err(|e| e.to_string());
        }
        if let Some(code) = &self.code {
            let bytes = record::unhex(code).ok_or("bad hex code")?;
            return PlanarMap::from_canonical_code(&bytes).map_err(|e| e.to_string());
        }
        Err("one of --seed, --in, --code is required".into())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Census of all spheres up to a vertex bound
    Enumerate {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        p1: Option<usize>,
        #[arg(long, value_enum, default_value_t = MirrorMode::Quotient)]
        mirror: MirrorMode,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Construct a named graph or series member
    Named {
        #[arg(long)]
        seed: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dartlist)]
        format: Format,
    },
    /// Goldberg-Coxeter construction
    Gc {
        #[command(flatten)]
        source: MapSource,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
        #[arg(long)]
        render: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dartlist)]
        format: Format,
    },
    /// Oriented tripling (both bipartition classes)
    Tripling {
        #[command(flatten)]
        source: MapSource,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dartlist)]
        format: Format,
    },
    /// Zigzag and central-circuit vectors
    Circuits {
        #[command(flatten)]
        source: MapSource,
    },
    /// Schoenflies point group
    Symmetry {
        #[command(flatten)]
        source: MapSource,
    },
    /// Tightness classification (single map, or corpus report with --max-n)
    Tight {
        #[command(flatten)]
        source: MapSource,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// SVG drawing
    Render {
        #[command(flatten)]
        source: MapSource,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the invariant suites; exits 2 on any violation
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Report the quantities mentioned by the open conjectures (no assertions)
    ConjectureScan {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

fn write_maps(
    maps: &[&PlanarMap],
    out: Option<&PathBuf>,
    format: Format,
    provenance: &str,
) -> Result<(), String> {
    let Some(path) = out else {
        return Ok(());
    };
    match format {
        Format::Dartlist => {
            let lines: Vec<String> = maps.iter().map(|m| dartlist::to_dartlist(m)).collect();
            std::fs::write(path, lines.join("\n") + "\n").map_err(|e| e.to_string())
        }
        Format::Planarcode => {
            let bytes = dartlist::to_planar_code(maps).map_err(|e| e.to_string())?;
            std::fs::write(path, bytes).map_err(|e| e.to_string())
        }
        Format::Jsonl => {
            let mut store = GraphStore::create(path).map_err(|e| e.to_string())?;
            for m in maps {
                store
                    .append(&record::record_for(m, provenance))
                    .map_err(|e| e.to_string())?;
            }
            store.finish().map_err(|e| e.to_string())
        }
    }
}

fn describe(m: &PlanarMap) {
    let rec = record::record_for(m, "cli");
    let p = rec.p_vector;
    println!(
        "n={} p=({},{},{}) group={} z=[{}] c=[{}] tight_z={} tight_c={}",
        rec.n, p[0], p[1], p[2], rec.group, rec.z_vector, rec.c_vector, rec.tight_z, rec.tight_c
    );
}

fn run() -> Result<i32, String> {
    let cli = Cli::try_parse().map_err(|e| e.to_string())?;
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    match cli.command {
        Command::Enumerate {
            max_n,
            p1,
            mirror,
            out,
            format,
        } => {
            let req = EnumerationRequest {
                max_n,
                p1_filter: p1,
                dedup_mirror: matches!(mirror, MirrorMode::Quotient),
            };
            let census = enumerate::census(&req);
            println!("   n    N0    N1    N2    N3");
            for n in 1..=max_n {
                let row = census.counts_row(n);
                println!(
                    "{:4}  {:4}  {:4}  {:4}  {:4}",
                    n, row[0], row[1], row[2], row[3]
                );
            }
            if let Some(path) = out {
                match format {
                    Format::Jsonl => {
                        let mut store = GraphStore::create(&path).map_err(|e| e.to_string())?;
                        for (&(n, p1), m) in census.all() {
                            let rec = record::record_for(m, &format!("census n={n} p1={p1}"));
                            store.append(&rec).map_err(|e| e.to_string())?;
                        }
                        store.finish().map_err(|e| e.to_string())?;
                    }
                    _ => {
                        let maps: Vec<&PlanarMap> = census.all().map(|(_, m)| m).collect();
                        write_maps(&maps, Some(&path), format, "census")?;
                    }
                }
                println!("wrote {}", path.display());
            }
            Ok(0)
        }
        Command::Named { seed, out, format } => {
            let id: NamedGraphId = seed.parse()?;
            let m = named::named_graph(id).map_err(|e| e.to_string())?;
            describe(&m);
            write_maps(&[&m], out.as_ref(), format, &format!("named:{id}"))?;
            Ok(0)
        }
        Command::Gc {
            source,
            k,
            l,
            render: render_path,
            out,
            format,
        } => {
            let m = source.resolve()?;
            let result = gc::gc(&m, k, l).map_err(|e| e.to_string())?;
            for g in &result.members {
                describe(g);
            }
            if let Some(path) = render_path {
                std::fs::write(&path, render::to_svg(&result.members[0]))
                    .map_err(|e| e.to_string())?;
                println!("rendered {}", path.display());
            }
            let maps: Vec<&PlanarMap> = result.members.iter().collect();
            write_maps(&maps, out.as_ref(), format, &format!("gc k={k} l={l}"))?;
            Ok(0)
        }
        Command::Tripling {
            source,
            out,
            format,
        } => {
            let m = source.resolve()?;
            let pair = gc::tripling_pair(&m).map_err(|e| e.to_string())?;
            for g in &pair {
                describe(g);
            }
            let maps: Vec<&PlanarMap> = pair.iter().collect();
            write_maps(&maps, out.as_ref(), format, "tripling")?;
            Ok(0)
        }
        Command::Circuits { source } => {
            let m = source.resolve()?;
            let z = circuits::zigzags(&m).map_err(|e| e.to_string())?;
            let c = circuits::central_circuits(&m).map_err(|e| e.to_string())?;
            println!("z-vector: {}", z.vector().render());
            println!("c-vector: {}", c.vector().render());
            Ok(0)
        }
        Command::Symmetry { source } => {
            let m = source.resolve()?;
            let g = symmetry::point_group(&m).map_err(|e| e.to_string())?;
            println!(
                "group={} order={} rotations={}",
                g.name, g.order, g.rotation_order
            );
            Ok(0)
        }
        Command::Tight { source, max_n } => {
            if let Some(max_n) = max_n {
                corpus_tight_report(max_n);
                return Ok(0);
            }
            let m = source.resolve()?;
            for kind in [CircuitKind::Zigzag, CircuitKind::Central] {
                let t = circuits::tightness(&m, kind).map_err(|e| e.to_string())?;
                println!(
                    "{:?}: {:?} circuits={} s={} railroads={:?}",
                    kind, t.status, t.circuit_count, t.s_value, t.railroads
                );
            }
            Ok(0)
        }
        Command::Render { source, out } => {
            let m = source.resolve()?;
            std::fs::write(&out, render::to_svg(&m)).map_err(|e| e.to_string())?;
            println!("rendered {}", out.display());
            Ok(0)
        }
        Command::Verify { suite, max_n } => {
            let _ = suite;
            let results = verify::run_suite(max_n);
            let mut ok = true;
            for r in &results {
                println!(
                    "{} {}: {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                ok &= r.pass;
            }
            Ok(if ok { 0 } else { 2 })
        }
        Command::ConjectureScan { max_n } => {
            conjecture_scan(max_n);
            Ok(0)
        }
    }
}

fn corpus_tight_report(max_n: usize) {
    let census = enumerate::census(&EnumerationRequest::new(max_n));
    let report =
        circuits::classify_corpus(census.all().map(|(&(n, p1), m)| (n, p1, m)));
    println!("maximal circuit counts over the n <= {max_n} corpus:");
    for ((p1, kind, tight), (count, at_n)) in &report.maxima {
        let status = if *tight { "tight" } else { "weakly-tight" };
        println!("  p1={p1} {kind:?} {status}: {count} circuits (at n={at_n})");
    }
    println!("knotted spheres (single circuit): {}", report.knotted.len());
    if report.violations.is_empty() {
        println!("no bound violations");
    } else {
        for v in &report.violations {
            println!("VIOLATION: {v}");
        }
    }
}

fn conjecture_scan(max_n: usize) {
    let census = enumerate::census(&EnumerationRequest::new(max_n));
    let mut f: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut knotted_groups: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut simple_cc_groups: BTreeMap<&'static str, usize> = BTreeMap::new();
    for (&(n, p1), m) in census.all() {
        let c = circuits::central_circuits(m).unwrap();
        let z = circuits::zigzags(m).unwrap();
        let e = f.entry((p1, n)).or_insert(0);
        *e = (*e).max(c.len());
        let group = symmetry::point_group(m).map(|g| g.name).unwrap_or("?");
        if c.len() == 1 || z.len() == 1 {
            knotted_groups.entry(group).or_insert(n);
        }
        let all_simple = c
            .vector()
            .symbols
            .iter()
            .all(|(s, _)| s.alpha1 + s.alpha2 == 0);
        if all_simple && p1 == 0 {
            simple_cc_groups.entry(group).or_insert(n);
        }
    }
    println!("f_i(v): maximal central-circuit counts");
    for ((p1, n), count) in &f {
        println!("  f_{p1}({n}) = {count}");
    }
    println!("groups of z- or c-knotted spheres (first n): {knotted_groups:?}");
    println!("groups of spheres with only simple central circuits (p1=0, first n): {simple_cc_groups:?}");
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("{msg}");
            std::process::exit(1);
        }
    }
}
