use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multiweb::algebra::{Matrix, Poly, Rational, Scalar};
use multiweb::connection::{kasteleyn_connection, AnnulusSpec, Connection, ConnectionSpec};
use multiweb::graph::{cilia_parity_polygon, euler_check, simple_cycles, standard_structure, PlanarGraph};
use multiweb::multiweb::{enumerate_dimers, enumerate_multiwebs, weight_poly, Multiweb, MultiwebSpec};
use multiweb::random::{self, random_connection, random_lattice_polygon, random_matchable_graph, random_planar_graph, random_rational_vectors, random_triangulation};
use multiweb::theorem::{
    annulus_parity, annulus_parity_enumerated, build_h, dimer_partition, extract_ck, numeric_weights, spin_correlation,
    spin_correlation_enumerated, symbolic_weights, unit_weights, verify_kasteleyn, verify_main,
};
use multiweb::trace::{det_vertex, qdet, trace_coloring, trace_contraction, trace_identity_colorings, trace_sp2_loops, wedge_norm};
use multiweb::Error;

#[derive(Parser)]
#[command(name = "multiweb", version, about = "Traces of Sp(2n) multiwebs and Pfaffians on planar graphs")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all 2n-multiwebs of a graph.
    Multiwebs(GraphArgs),
    /// Count dimer covers and print the partition function.
    Dimers(WeightedGraphArgs),
    /// Trace one multiweb, or every multiweb when --web is omitted.
    Trace(TraceArgs),
    /// Pfaffian of the modified adjacency matrix.
    Pfaffian(PfArgs),
    /// Check Pf H̃ = ±Σ Tr(m) w(m), on a file or on random graphs.
    VerifyMain(PfArgs),
    /// Check |Pf K̃| = Z_d^{2n} for the Kasteleyn connection.
    Kasteleyn(KasteleynArgs),
    /// Double-dimer spin correlation between two faces.
    SpinCorr(SpinArgs),
    /// Parity of the number of loops around an annulus hole.
    AnnulusParity(AnnulusArgs),
    /// Fit Z₄(ε) = Σ C_k (2 + 4 cos ε)^k on an annulus.
    AnnulusCk(CkArgs),
    /// The crossing-sum 2n-valent vertex on a list of vectors.
    DetVertex(VectorArgs),
    /// Determinant of a list of column vectors.
    WedgeNorm(VectorArgs),
    /// Quantum determinant of a matrix.
    Qdet(QdetArgs),
    /// Check the descent/cilia congruence and the area formula.
    IsotopyCheck(IsotopyArgs),
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1)]
    n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightKind {
    /// Every edge weight is 1.
    Unit,
    /// Edge weight strings are variables.
    Symbolic,
    /// Edge weight strings are rational numbers.
    File,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ring {
    Rational,
    Poly,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Coloring,
    Contraction,
    Sp2,
    Identity,
}

#[derive(Args)]
struct WeightedGraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = WeightKind::Unit)]
    weights: WeightKind,
}

#[derive(Args)]
struct ConnArgs {
    /// Connection file; identity when omitted.
    #[arg(long, conflicts_with = "kasteleyn")]
    conn: Option<PathBuf>,
    /// Use the Kasteleyn connection.
    #[arg(long)]
    kasteleyn: bool,
    #[arg(long, default_value_t = 1)]
    n: usize,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    conn: ConnArgs,
    /// Multiweb file `{"n": .., "m": {edge-id: multiplicity}}`.
    #[arg(long)]
    web: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Method::Contraction)]
    method: Method,
}

#[derive(Args)]
struct PfArgs {
    /// Graph file; random graphs are generated when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[command(flatten)]
    conn: ConnArgs,
    #[arg(long, value_enum, default_value_t = WeightKind::Unit)]
    weights: WeightKind,
    #[arg(long, value_enum, default_value_t = Ring::Rational)]
    ring: Ring,
    #[arg(long, default_value_t = 20250101)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
}

#[derive(Args)]
struct KasteleynArgs {
    /// Graph file; random graphs are generated when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value_t = WeightKind::Symbolic)]
    weights: WeightKind,
    #[arg(long, default_value_t = 20250101)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
}

#[derive(Args)]
struct SpinArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Boundary vertex ids of the first face, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    face1: Vec<i64>,
    #[arg(long, value_delimiter = ',', required = true)]
    face2: Vec<i64>,
    #[arg(long, value_enum, default_value_t = WeightKind::Unit)]
    weights: WeightKind,
}

#[derive(Args)]
struct AnnulusArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Boundary vertex ids of the hole, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    inner: Vec<i64>,
    #[arg(long, value_enum, default_value_t = WeightKind::Unit)]
    weights: WeightKind,
}

#[derive(Args)]
struct CkArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    inner: Vec<i64>,
    /// Highest power of x = 2 + 4 cos ε in the fit.
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// Sample angles in radians, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.3, 1.1, 1.9, 2.6])]
    samples: Vec<f64>,
    #[arg(long, default_value_t = 0.7)]
    holdout: f64,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    beta: f64,
}

#[derive(Args)]
struct VectorArgs {
    #[arg(long)]
    n: usize,
    /// JSON list of 2n vectors of rational strings; random when omitted.
    #[arg(long)]
    vectors: Option<PathBuf>,
    #[arg(long, default_value_t = 20250101)]
    seed: u64,
}

#[derive(Args)]
struct QdetArgs {
    /// JSON matrix whose entries are rationals or variable names.
    #[arg(long)]
    matrix: PathBuf,
    /// A rational value or a variable name.
    #[arg(long, default_value = "q")]
    q: String,
}

#[derive(Args)]
struct IsotopyArgs {
    #[arg(long, default_value_t = 20250101)]
    seed: u64,
    /// Number of random polygons.
    #[arg(long, default_value_t = 1000)]
    count: usize,
    /// Number of random triangulations for the area formula.
    #[arg(long, default_value_t = 20)]
    triangulations: usize,
}

enum Failure {
    Usage(String),
    Violated(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityViolated { .. } => Failure::Violated(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

/// Human lines and the equivalent JSON value.
struct Report {
    lines: Vec<String>,
    value: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.value);
            } else {
                for l in report.lines {
                    println!("{l}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violated(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Multiwebs(a) => multiwebs(a),
        Command::Dimers(a) => dimers(a),
        Command::Trace(a) => trace(a),
        Command::Pfaffian(a) => pfaffian(a),
        Command::VerifyMain(a) => verify(a),
        Command::Kasteleyn(a) => kasteleyn(a),
        Command::SpinCorr(a) => spin(a),
        Command::AnnulusParity(a) => annulus(a),
        Command::AnnulusCk(a) => ck(a),
        Command::DetVertex(a) => vectors(a, true),
        Command::WedgeNorm(a) => vectors(a, false),
        Command::Qdet(a) => qdet_cmd(a),
        Command::IsotopyCheck(a) => isotopy(a),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PlanarGraph, Failure> {
    Ok(PlanarGraph::from_json(&read(path)?)?)
}

fn load_connection(g: &PlanarGraph, a: &ConnArgs) -> Result<Connection<Rational>, Failure> {
    if a.kasteleyn {
        return Ok(kasteleyn_connection(g, a.n));
    }
    match &a.conn {
        None => Ok(Connection::identity(g, a.n)),
        Some(p) => {
            let spec = ConnectionSpec::from_json(&read(p)?)?;
            if spec.n != a.n {
                return Err(Failure::Usage(format!("connection has rank {}, --n is {}", spec.n, a.n)));
            }
            Ok(spec.build(g)?)
        }
    }
}

fn rational_weights(g: &PlanarGraph, kind: WeightKind) -> Result<Vec<Rational>, Failure> {
    match kind {
        WeightKind::Unit => Ok(unit_weights(g)),
        WeightKind::File => Ok(numeric_weights(g)?),
        WeightKind::Symbolic => Err(Failure::Usage("symbolic weights need --ring poly".into())),
    }
}

fn multiwebs(a: GraphArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let webs = enumerate_multiwebs(&g, a.n);
    let mut lines = vec![format!("count: {}", webs.len())];
    lines.extend(webs.iter().map(|m| m.to_json(&g)));
    Ok(Report {
        lines,
        value: json!({ "count": webs.len(), "multiwebs": webs.iter().map(|m| m.to_spec(&g)).collect::<Vec<_>>() }),
    })
}

fn dimers(a: WeightedGraphArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let count = enumerate_dimers(&g).len();
    let z = match a.weights {
        WeightKind::Symbolic => dimer_partition(&g, &symbolic_weights(&g)).to_string(),
        kind => dimer_partition(&g, &rational_weights(&g, kind)?).to_string(),
    };
    Ok(Report {
        lines: vec![format!("count: {count}"), format!("Z_d: {z}")],
        value: json!({ "count": count, "z_d": z }),
    })
}

fn trace(a: TraceArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let conn = load_connection(&g, &a.conn)?;
    let s = standard_structure(&g)?;
    let webs: Vec<Multiweb> = match &a.web {
        Some(p) => vec![MultiwebSpec::from_json(&read(p)?)?.build(&g)?],
        None => enumerate_multiwebs(&g, a.conn.n),
    };
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for m in &webs {
        let t = match a.method {
            Method::Coloring => trace_coloring(&g, &conn, m, &s)?,
            Method::Contraction => trace_contraction(&g, &conn, m, &s)?,
            Method::Sp2 => trace_sp2_loops(&g, &conn, m)?,
            Method::Identity => {
                if a.conn.conn.is_some() || a.conn.kasteleyn {
                    return Err(Failure::Usage("--method identity ignores the connection; omit --conn".into()));
                }
                trace_identity_colorings(&g, m, &s)?
            }
        };
        lines.push(format!("{} {}", m.to_json(&g), t));
        items.push(json!({ "web": m.to_spec(&g), "trace": t.to_string() }));
    }
    Ok(Report {
        lines,
        value: json!({ "traces": items }),
    })
}

fn ring_check(ring: Ring, weights: WeightKind) -> Result<(), Failure> {
    if weights == WeightKind::Symbolic && ring != Ring::Poly {
        return Err(Failure::Usage("symbolic weights need --ring poly".into()));
    }
    Ok(())
}

/// Connection and weights lifted into the requested ring. `symbolic` is
/// supplied only by the polynomial ring.
fn lifted<T: Scalar>(
    g: &PlanarGraph,
    conn: &Connection<Rational>,
    kind: WeightKind,
    symbolic: Option<Vec<T>>,
) -> Result<(Connection<T>, Vec<T>), Failure> {
    let w = match (kind, symbolic) {
        (WeightKind::Symbolic, Some(w)) => w,
        (WeightKind::Symbolic, None) => return Err(Failure::Usage("symbolic weights need --ring poly".into())),
        (other, _) => rational_weights(g, other)?.iter().map(T::from_rational).collect(),
    };
    Ok((conn.lift(), w))
}

fn pfaffian(a: PfArgs) -> Outcome {
    ring_check(a.ring, a.weights)?;
    let Some(path) = &a.graph else {
        return Err(Failure::Usage("pfaffian needs --graph".into()));
    };
    let g = load_graph(path)?;
    let conn = load_connection(&g, &a.conn)?;
    fn go<T: Scalar>(g: &PlanarGraph, conn: &Connection<Rational>, kind: WeightKind, sym: Option<Vec<T>>) -> Outcome {
        let (c, w) = lifted::<T>(g, conn, kind, sym)?;
        let h = build_h(g, &c, &w)?;
        let pf = h.pfaffian();
        Ok(Report {
            lines: vec![format!("dim: {}", h.dim()), format!("pf: {pf}")],
            value: json!({ "dim": h.dim(), "pf": pf.to_string() }),
        })
    }
    match a.ring {
        Ring::Rational => go::<Rational>(&g, &conn, a.weights, None),
        Ring::Poly => go::<Poly>(&g, &conn, a.weights, Some(symbolic_weights(&g))),
        Ring::Float => go::<f64>(&g, &conn, a.weights, None),
    }
}

fn main_check<T: Scalar>(
    g: &PlanarGraph,
    conn: &Connection<Rational>,
    kind: WeightKind,
    sym: Option<Vec<T>>,
) -> Result<(String, String, i32), Failure> {
    let (c, w) = lifted::<T>(g, conn, kind, sym)?;
    let r = verify_main(g, &c, &w)?;
    Ok((r.pf.to_string(), r.sum_traces.to_string(), r.sign))
}

fn verify(a: PfArgs) -> Outcome {
    ring_check(a.ring, a.weights)?;
    let check = |g: &PlanarGraph, conn: &Connection<Rational>| match a.ring {
        Ring::Rational => main_check::<Rational>(g, conn, a.weights, None),
        Ring::Poly => main_check::<Poly>(g, conn, a.weights, Some(symbolic_weights(g))),
        Ring::Float => main_check::<f64>(g, conn, a.weights, None),
    };
    if let Some(path) = &a.graph {
        let g = load_graph(path)?;
        let conn = load_connection(&g, &a.conn)?;
        let (pf, sum, sign) = check(&g, &conn)?;
        return Ok(Report {
            lines: vec![format!("pf: {pf}"), format!("sum_traces: {sum}"), format!("sign: {sign:+}"), "OK".into()],
            value: json!({ "pf": pf, "sum_traces": sum, "sign": sign }),
        });
    }
    if a.conn.conn.is_some() {
        return Err(Failure::Usage("--conn needs --graph".into()));
    }
    if a.weights != WeightKind::Unit && a.weights != WeightKind::Symbolic {
        return Err(Failure::Usage("random suites use unit or symbolic weights".into()));
    }
    let mut rng = random::rng(a.seed);
    let max_vertices = if a.conn.n == 1 { 6 } else { 4 };
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for i in 0..a.count {
        let k = 2 + i % (max_vertices - 1);
        let g = random_planar_graph(&mut rng, k, 0.3).with_weights(|e| format!("w{e}"));
        let conn = if a.conn.kasteleyn {
            kasteleyn_connection(&g, a.conn.n)
        } else {
            random_connection(&mut rng, &g, a.conn.n)
        };
        let (pf, sum, sign) = check(&g, &conn)?;
        lines.push(format!("instance {i}: vertices {} edges {} sign {sign:+}", g.num_vertices(), g.num_edges()));
        items.push(json!({ "pf": pf, "sum_traces": sum, "sign": sign }));
    }
    lines.push("OK".into());
    Ok(Report {
        lines,
        value: json!({ "seed": a.seed, "instances": items }),
    })
}

fn kasteleyn(a: KasteleynArgs) -> Outcome {
    if a.weights == WeightKind::Unit {
        return Err(Failure::Usage("kasteleyn takes --weights symbolic or file".into()));
    }
    let one = |g: &PlanarGraph| -> Result<(String, String, i32), Failure> {
        Ok(match a.weights {
            WeightKind::Symbolic => {
                let r = verify_kasteleyn(g, &symbolic_weights(g), a.n)?;
                (r.pf.to_string(), dimer_partition(g, &symbolic_weights(g)).to_string(), r.sign)
            }
            _ => {
                let w = numeric_weights(g)?;
                let r = verify_kasteleyn(g, &w, a.n)?;
                (r.pf.to_string(), dimer_partition(g, &w).to_string(), r.sign)
            }
        })
    };
    if let Some(path) = &a.graph {
        let g = load_graph(path)?;
        let (pf, z, sign) = one(&g)?;
        return Ok(Report {
            lines: vec![format!("pf: {pf}"), format!("Z_d: {z}"), format!("sign: {sign:+}"), "OK".into()],
            value: json!({ "pf": pf, "z_d": z, "sign": sign }),
        });
    }
    if a.weights == WeightKind::File {
        return Err(Failure::Usage("random suites use symbolic weights".into()));
    }
    let mut rng = random::rng(a.seed);
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for i in 0..a.count {
        let k = if a.n == 1 { 2 * (1 + i % 3) } else { 2 * (1 + i % 2) };
        let g = random_matchable_graph(&mut rng, k, 0.3).with_weights(|e| format!("w{e}"));
        let (pf, z, sign) = one(&g)?;
        lines.push(format!("instance {i}: vertices {} edges {} sign {sign:+}", g.num_vertices(), g.num_edges()));
        items.push(json!({ "pf": pf, "z_d": z, "sign": sign }));
    }
    lines.push("OK".into());
    Ok(Report {
        lines,
        value: json!({ "seed": a.seed, "instances": items }),
    })
}

fn spin(a: SpinArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let w = rational_weights(&g, a.weights)?;
    let f1 = g.face_with_vertices(&a.face1)?;
    let f2 = g.face_with_vertices(&a.face2)?;
    let r = spin_correlation(&g, f1, f2, &w)?;
    let brute = spin_correlation_enumerated(&g, f1, f2, &w)?;
    if brute != r.value {
        return Err(Error::IdentityViolated {
            left: r.value.to_string(),
            right: brute.to_string(),
        }
        .into());
    }
    let mut lines = vec![format!("correlation: {}", r.value), format!("enumerated: {brute}")];
    if !r.lengths_ok {
        lines.push("note: a face length is not 2 mod 4".into());
    }
    Ok(Report {
        lines,
        value: json!({ "correlation": r.value.to_string(), "enumerated": brute.to_string(), "lengths_ok": r.lengths_ok }),
    })
}

fn annulus(a: AnnulusArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let w = rational_weights(&g, a.weights)?;
    let spec = AnnulusSpec::new(&g, g.face_with_vertices(&a.inner)?)?;
    let pf = annulus_parity(&g, &spec, &w)?;
    let brute = annulus_parity_enumerated(&g, &spec, &w)?;
    if pf != brute {
        return Err(Error::IdentityViolated {
            left: pf.to_string(),
            right: brute.to_string(),
        }
        .into());
    }
    Ok(Report {
        lines: vec![format!("parity: {pf}"), format!("enumerated: {brute}")],
        value: json!({ "parity": pf.to_string(), "enumerated": brute.to_string() }),
    })
}

fn ck(a: CkArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let spec = AnnulusSpec::new(&g, g.face_with_vertices(&a.inner)?)?;
    let fit = extract_ck(&g, &spec, a.degree, &a.samples, a.holdout, a.alpha, a.beta)?;
    let mut lines: Vec<String> = fit.c.iter().enumerate().map(|(k, c)| format!("C_{k}: {c}")).collect();
    lines.push(format!("residual: {:e}", fit.residual));
    Ok(Report {
        lines,
        value: json!({ "C": fit.c, "residual": fit.residual }),
    })
}

fn vectors(a: VectorArgs, crossing_sum: bool) -> Outcome {
    let vs: Vec<Vec<Rational>> = match &a.vectors {
        Some(p) => serde_json::from_str(&read(p)?).map_err(|e| Failure::Usage(format!("vectors: {e}")))?,
        None => random_rational_vectors(&mut random::rng(a.seed), 2 * a.n, 2 * a.n),
    };
    if vs.len() != 2 * a.n {
        return Err(Failure::Usage(format!("expected {} vectors, got {}", 2 * a.n, vs.len())));
    }
    let v = if crossing_sum { det_vertex(&vs)? } else { wedge_norm(&vs)? };
    Ok(Report {
        lines: vec![v.to_string()],
        value: json!({ "value": v.to_string() }),
    })
}

fn qdet_cmd(a: QdetArgs) -> Outcome {
    let rows: Vec<Vec<String>> = serde_json::from_str(&read(&a.matrix)?).map_err(|e| Failure::Usage(format!("matrix: {e}")))?;
    let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| weight_poly(s)).collect()).collect())?;
    let v = qdet(&m, &weight_poly(&a.q))?;
    Ok(Report {
        lines: vec![v.to_string()],
        value: json!({ "qdet": v.to_string() }),
    })
}

fn isotopy(a: IsotopyArgs) -> Outcome {
    let mut rng = random::rng(a.seed);
    let mut polygon_failures = 0;
    for _ in 0..a.count {
        let poly = random_lattice_polygon(&mut rng, 8, 6);
        if !cilia_parity_polygon(&poly)?.congruence_holds() {
            polygon_failures += 1;
        }
    }
    let mut loops = 0;
    let mut loop_failures = 0;
    for _ in 0..a.triangulations {
        let g = random_triangulation(&mut rng, 6);
        for gamma in simple_cycles(&g) {
            loops += 1;
            if !euler_check(&g, &gamma)? {
                loop_failures += 1;
            }
        }
    }
    let value = json!({
        "polygons": a.count,
        "polygon_failures": polygon_failures,
        "loops": loops,
        "loop_failures": loop_failures,
    });
    let lines = vec![
        format!("polygons: {} failures: {polygon_failures}", a.count),
        format!("loops: {loops} failures: {loop_failures}"),
    ];
    if polygon_failures + loop_failures > 0 {
        return Err(Failure::Violated(lines.join("; ")));
    }
    let mut lines = lines;
    lines.push("OK".into());
    Ok(Report { lines, value })
}
