//! `grothlib`: enumerate tableaux, build refined Grothendieck polynomials,
//! expand them in Schur functions, run the bijections and verify identities.

mod render;

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grothlib::bijections::{
    bubble_path, iota, iota_box, jdt_backward, jdt_forward_traced, rsk_backward, rsk_forward_traced, split,
    superimpose, swap_adjacent, JdtPair, RskPair,
};
use grothlib::enumerate::{visit_oft, visit_ot, visit_pft, visit_pt, visit_pt_order, visit_uft, visit_ut, EnumBounds};
use grothlib::{
    expand_schur, expand_schur_xy, groth, groth_dual, refined, schur_expansion_via_flags, Alphabet, Error, Flagged,
    Identity, Integer, Partition, Series, SkewShape, Tableau, TotalOrder, Truncation, Variant, VerifyParams,
};
use render::{count_record, Format, Panels};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "grothlib", version, about = "Exact combinatorics of refined Grothendieck polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true, env = "GROTHLIB_JOBS")]
    jobs: Option<usize>,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every tableau of a family and shape, then a count record.
    Enum(EnumArgs),
    /// Print a refined Grothendieck polynomial.
    Poly(PolyArgs),
    /// Expand a refined Grothendieck polynomial in Schur functions.
    Expand(ExpandArgs),
    /// Apply a bijection to a tableau read as JSON.
    Biject(BijectArgs),
    /// Check an identity exhaustively over a size range.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "OT", alias = "ot")]
    Ot,
    #[value(name = "UT", alias = "ut")]
    Ut,
    #[value(name = "PT", alias = "pt")]
    Pt,
    #[value(name = "OFT", alias = "oft")]
    Oft,
    #[value(name = "UFT", alias = "uft")]
    Uft,
    #[value(name = "PFT", alias = "pft")]
    Pft,
}

#[derive(Args)]
struct ShapeArgs {
    /// Straight shape, e.g. `3,2,1`; `-` is the empty partition.
    #[arg(long, conflicts_with_all = ["outer", "inner"])]
    shape: Option<String>,
    #[arg(long)]
    outer: Option<String>,
    #[arg(long, requires = "outer")]
    inner: Option<String>,
}

impl ShapeArgs {
    fn skew(&self) -> Result<SkewShape, Error> {
        let outer = self.shape.as_deref().or(self.outer.as_deref()).ok_or_else(|| usage("a shape is required"))?;
        SkewShape::new(Partition::parse(outer)?, Partition::parse(self.inner.as_deref().unwrap_or("-"))?)
    }
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Largest letter value (OT, UT, PT).
    #[arg(long, default_value_t = 2)]
    max: u32,
    /// Surplus entries allowed in overfull tableaux.
    #[arg(long, default_value_t = 0)]
    extra: u32,
    /// Total order for PT, e.g. `1',1,2',2`.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    #[value(name = "1A", alias = "1a")]
    A1,
    #[value(name = "1B", alias = "1b")]
    B1,
    #[value(name = "2A", alias = "2a")]
    A2,
    #[value(name = "2B", alias = "2b")]
    B2,
    /// The unrefined series in `x`, `y` and `z`.
    #[value(name = "G")]
    G,
    #[value(name = "Gdual", alias = "gdual")]
    Gdual,
}

impl PolyKind {
    fn variant(self) -> Option<Variant> {
        match self {
            PolyKind::A1 => Some(Variant::A1),
            PolyKind::B1 => Some(Variant::B1),
            PolyKind::A2 => Some(Variant::A2),
            PolyKind::B2 => Some(Variant::B2),
            PolyKind::G | PolyKind::Gdual => None,
        }
    }
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    variant: PolyKind,
    #[arg(long)]
    shape: String,
    /// Number of variables in each alphabet; defaults to the size of the shape.
    #[arg(long)]
    nvars: Option<usize>,
    /// Total degree in x and y kept; required for 1A, 1B and G.
    #[arg(long)]
    degree: Option<u32>,
    /// Set every z to 1.
    #[arg(long)]
    z_one: bool,
}

impl PolyArgs {
    fn lambda(&self) -> Result<Partition, Error> {
        Partition::parse(&self.shape)
    }

    fn series(&self) -> Result<Series, Error> {
        let lambda = self.lambda()?;
        let n = self.nvars.unwrap_or((lambda.size() as usize).max(1));
        let s = match self.variant.variant() {
            Some(v) => return refined(v, &lambda, n, self.degree, self.z_one),
            None if matches!(self.variant, PolyKind::G) => groth(&lambda, Truncation::new(n, n, self.degree))?,
            None => groth_dual(&lambda, Truncation::new(n, n, self.degree))?,
        };
        Ok(if self.z_one { s.at_z_one() } else { s })
    }
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    poly: PolyArgs,
    /// Read the expansion off flagged tableaux instead of the series; for
    /// 1A and 1B, `--degree` caps the partitions.
    #[arg(long)]
    flags: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    Rsk,
    Jdt,
    Iota,
    Swap,
    Reorder,
    Superimpose,
    Split,
}

#[derive(Args)]
struct BijectArgs {
    #[arg(value_enum)]
    map: Map,
    /// JSON file (`-` for stdin): a tableau, `{"input": tableau}`, or `{"p":..,"q":..}` for pairs.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    /// Also print the intermediate tableaux.
    #[arg(long)]
    trace: bool,
    /// Run RSK or jeu de taquin backwards from a pair.
    #[arg(long)]
    backward: bool,
    /// Source order for swap and reorder.
    #[arg(long)]
    from: Option<String>,
    /// Target order for swap and reorder.
    #[arg(long)]
    to: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// fact1, fact2, duo1, duo2, lemma-rskjdt, lemma-ordering, lemma-z, oracle, or all.
    identity: String,
    #[arg(long)]
    min_size: Option<u32>,
    #[arg(long)]
    max_size: Option<u32>,
    /// Check a single size.
    #[arg(long, conflicts_with_all = ["min_size", "max_size"])]
    size: Option<u32>,
    /// Largest letter value for enumerated tableaux and orders.
    #[arg(long)]
    letters: Option<u32>,
    /// Surplus entries for overfull tableaux.
    #[arg(long)]
    extra: Option<u32>,
    /// Largest shape for the jeu de taquin half of lemma-rskjdt.
    #[arg(long)]
    jdt_max_size: Option<u32>,
    /// Adjacent transpositions between compared orders.
    #[arg(long)]
    swaps: Option<u32>,
    /// Check a seeded sample of this many instances.
    #[arg(long)]
    sample: Option<usize>,
}

fn usage(msg: &str) -> Error {
    Error::Parse(msg.into())
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn cmd_enum(a: &EnumArgs, format: Format, out: &mut Out) -> Result<(), Error> {
    let shape = a.shape.skew()?;
    let straight = shape.inner().is_empty();
    let needs_straight = |name: &str| {
        if straight {
            Ok(())
        } else {
            Err(Error::Shape(format!("{name} tableaux have straight shapes")))
        }
    };
    let mut count = 0usize;
    let mut io_err = None;
    let mut emit = |t: &Tableau| {
        count += 1;
        let line = render::tableau(t, format);
        let sep = if format == Format::Json { "" } else { "\n" };
        if let Err(e) = writeln!(out, "{line}{sep}") {
            io_err.get_or_insert(e);
        }
    };
    let bounds = EnumBounds::new(a.max, a.extra);
    match a.family {
        FamilyArg::Ot => {
            needs_straight("OT")?;
            visit_ot(shape.outer(), bounds, &mut emit)
        }
        FamilyArg::Ut => {
            needs_straight("UT")?;
            visit_ut(shape.outer(), EnumBounds::new(a.max, 0), &mut emit)
        }
        FamilyArg::Pt => match &a.order {
            None if straight => visit_pt(shape.outer(), EnumBounds::new(a.max, 0), &mut emit),
            order => {
                let order = match order {
                    Some(o) => TotalOrder::parse(o)?,
                    None => TotalOrder::standard(a.max),
                };
                visit_pt_order(&shape, &order, a.max, &mut emit)?
            }
        },
        FamilyArg::Oft => visit_oft(&shape, &mut emit),
        FamilyArg::Uft => visit_uft(&shape, &mut emit),
        FamilyArg::Pft => visit_pft(&shape, &mut emit),
    }
    if let Some(e) = io_err {
        return Err(Error::Other(e.to_string()));
    }
    writeln!(out, "{}", count_record(count, format)).map_err(|e| Error::Other(e.to_string()))
}

fn cmd_poly(a: &PolyArgs, format: Format) -> Result<String, Error> {
    let s = a.series()?;
    Ok(match format {
        Format::Text => s.to_text(),
        Format::Latex => s.to_latex(),
        Format::Json => s.to_json().to_string(),
    })
}

fn cmd_expand(a: &ExpandArgs, format: Format) -> Result<String, Error> {
    let p = &a.poly;
    if a.flags {
        let (which, conjugated) = match p.variant {
            PolyKind::B1 => (Flagged::G, false),
            PolyKind::A1 => (Flagged::G, true),
            PolyKind::B2 => (Flagged::Gdual, false),
            PolyKind::A2 => (Flagged::Gdual, true),
            _ => return Err(usage("--flags applies to the refined variants 1A, 1B, 2A and 2B")),
        };
        let lambda = p.lambda()?;
        let cap = match (which, p.degree) {
            (Flagged::G, None) => return Err(Error::Unbounded),
            (_, d) => d.unwrap_or(0),
        };
        let e = schur_expansion_via_flags::<Integer>(&lambda, which, conjugated, cap);
        return Ok(expansion(&e, format));
    }
    let s = p.series()?;
    if p.variant.variant().is_some() {
        Ok(expansion(&expand_schur(&s, Alphabet::X)?, format))
    } else {
        let e = expand_schur_xy(&s)?;
        Ok(match format {
            Format::Json => e.to_json().to_string(),
            _ => e.to_text(),
        })
    }
}

fn expansion(e: &grothlib::SchurExpansion, format: Format) -> String {
    match format {
        Format::Text => e.to_text(),
        Format::Latex => e.to_latex(),
        Format::Json => e.to_json().to_string(),
    }
}

fn read_input(path: &PathBuf) -> Result<Value, Error> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Error::Other(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Other(format!("{}: {e}", path.display())))?;
    }
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_tableau(v: &Value) -> Result<Tableau, Error> {
    let v = v.get("input").unwrap_or(v);
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_pair(v: &Value) -> Result<(Tableau, Tableau), Error> {
    let field = |k: &str| {
        let x = v.get(k).ok_or_else(|| usage(&format!("input needs a {k:?} tableau")))?;
        serde_json::from_value::<Tableau>(x.clone()).map_err(|e| Error::Parse(e.to_string()))
    };
    Ok((field("p")?, field("q")?))
}

fn orders(a: &BijectArgs) -> Result<(TotalOrder, TotalOrder), Error> {
    let get = |o: &Option<String>, name: &str| {
        o.as_deref().ok_or_else(|| usage(&format!("--{name} is required"))).and_then(TotalOrder::parse)
    };
    Ok((get(&a.from, "from")?, get(&a.to, "to")?))
}

fn cmd_biject(a: &BijectArgs, format: Format) -> Result<String, Error> {
    let input = read_input(&a.input)?;
    let panels = match (a.map, a.backward) {
        (Map::Rsk, false) => {
            let (RskPair { p, q }, trace) = rsk_forward_traced(&parse_tableau(&input)?)?;
            let out = Panels::new().one("p", p).one("q", q);
            if a.trace {
                out.many("trace", trace)
            } else {
                out
            }
        }
        (Map::Rsk, true) => {
            let (p, q) = parse_pair(&input)?;
            Panels::new().one("output", rsk_backward(&RskPair { p, q })?)
        }
        (Map::Jdt, false) => {
            let (JdtPair { p, q }, trace) = jdt_forward_traced(&parse_tableau(&input)?)?;
            let out = Panels::new().one("p", p).one("q", q);
            if a.trace {
                out.many("trace", trace)
            } else {
                out
            }
        }
        (Map::Jdt, true) => {
            let (p, q) = parse_pair(&input)?;
            Panels::new().one("output", jdt_backward(&JdtPair { p, q })?)
        }
        (Map::Iota, _) => {
            let t = parse_tableau(&input)?;
            let out = iota(&t)?;
            let (row, col) = iota_box(&t).expect("iota succeeded");
            let panels = Panels::new().one("output", out.clone()).value("box", json!({"row": row, "col": col}));
            if a.trace {
                panels.many("trace", vec![t, out])
            } else {
                panels
            }
        }
        (Map::Swap, _) | (Map::Reorder, _) => {
            let t = parse_tableau(&input)?;
            let (from, to) = orders(a)?;
            let path = match a.map {
                Map::Swap => {
                    from.adjacent_transposition_to(&to)?;
                    vec![from, to]
                }
                _ => bubble_path(&from, &to)?,
            };
            let mut trace = vec![t];
            for w in path.windows(2) {
                let next = swap_adjacent(trace.last().unwrap(), &w[0], &w[1])?;
                trace.push(next);
            }
            let out = Panels::new().one("output", trace.last().unwrap().clone());
            if a.trace {
                let names: Vec<String> = path.iter().map(|o| o.to_string()).collect();
                out.value("orders", json!(names)).many("trace", trace)
            } else {
                out
            }
        }
        (Map::Superimpose, _) => {
            let (p, q) = parse_pair(&input)?;
            Panels::new().one("output", superimpose(&p, &q)?)
        }
        (Map::Split, _) => {
            let (p, q) = split(&parse_tableau(&input)?)?;
            Panels::new().one("p", p).one("q", q)
        }
    };
    Ok(panels.render(format))
}

/// Runs the requested identities; the flag is false if any failed.
fn cmd_verify(a: &VerifyArgs, format: Format, seed: u64) -> Result<(String, bool), Error> {
    let identities: Vec<Identity> =
        if a.identity == "all" { Identity::ALL.to_vec() } else { vec![a.identity.parse()?] };
    let mut lines = Vec::new();
    let mut reports = Vec::new();
    let mut all_passed = true;
    for identity in identities {
        let mut params = VerifyParams::defaults(identity);
        if let Some(s) = a.size {
            params.min_size = s;
            params.max_size = s;
        }
        if let Some(m) = a.max_size {
            params.max_size = m;
            params.jdt_max_size = m + 1;
        }
        params.min_size = a.min_size.unwrap_or(params.min_size);
        params.letters = a.letters.unwrap_or(params.letters);
        params.extra = a.extra.unwrap_or(params.extra);
        params.jdt_max_size = a.jdt_max_size.unwrap_or(params.jdt_max_size);
        params.swaps = a.swaps.unwrap_or(params.swaps);
        params.sample = a.sample;
        params.seed = seed;
        if params.min_size > params.max_size {
            return Err(usage("--min-size exceeds --max-size"));
        }
        let report = grothlib::verify(identity, &params);
        all_passed &= report.passed();
        lines.push(report.to_string());
        reports.push(report.to_json());
    }
    let text = match format {
        Format::Json if reports.len() == 1 => reports.pop().unwrap().to_string(),
        Format::Json => Value::Array(reports).to_string(),
        _ => lines.join("\n"),
    };
    Ok((text, all_passed))
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let text = match &cli.command {
        Command::Enum(a) => {
            cmd_enum(a, cli.format, &mut out)?;
            None
        }
        Command::Poly(a) => Some(cmd_poly(a, cli.format)?),
        Command::Expand(a) => Some(cmd_expand(a, cli.format)?),
        Command::Biject(a) => Some(cmd_biject(a, cli.format)?),
        Command::Verify(a) => {
            let (text, passed) = cmd_verify(a, cli.format, cli.seed)?;
            writeln!(out, "{text}").map_err(|e| Error::Other(e.to_string()))?;
            out.flush().map_err(|e| Error::Other(e.to_string()))?;
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    if let Some(text) = text {
        writeln!(out, "{text}").map_err(|e| Error::Other(e.to_string()))?;
    }
    out.flush().map_err(|e| Error::Other(e.to_string()))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
