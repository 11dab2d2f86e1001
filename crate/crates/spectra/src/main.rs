use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use spectra::bundle::Bundle;
use spectra::families::{self, GraphDoc, Resolved};
use spectra::formats::{omzd_from_json, GraphJson, MatrixJson};
use spectra::graph6::save_graph6;
use spectra::report::{self, document, rational};
use spectra::search::{default_threads, sign_exhaust_parallel};
use spectra::table1::{outcome_json, outcome_line, table1_reproduce};
use spectra::Error;
use spectra_core::bounds::{q_bounds, QBoundOptions, DEFAULT_SIGN_VARIABLE_CAP};
use spectra_core::codes::table2_report;
use spectra_core::graph::{
    antipodal_fold, complement, is_forcing_set, zero_forcing_closure, zero_forcing_number_exhaustive, ZeroForcing,
};
use spectra_core::hamming::{hamming_graph, hypercube_signing, omzd_with_data, tensor_signing_with, zeta};
use spectra_core::johnson::{forcing_candidate, frame_vectors, johnson_claims, johnson_graph, kneser_graph, signed_adjacency_a};
use spectra_core::linalg::{charpoly, minimal_polynomial_degree};
use spectra_core::obstruction::{parity_certificate, phi, SignExhaust, SIGN_VARIABLE_CAP};
use spectra_core::scheme::{
    check_eigenmatrix, conjugacy_scheme, hamming_eigenmatrix, idempotent_ei, johnson_eigenmatrix, scheme_from_graph,
    two_eig_search, EigenMatrixData, IdempotentWitness, SchemeData,
};
use spectra_core::{ExactMatrix, Graph};

/// Exact certificates for the number of distinct eigenvalues of graphs.
#[derive(Parser)]
#[command(name = "spectra", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Data directory; overrides SPECTRA_DATA_DIR.
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    /// Fill in elapsed_ms (output is then no longer reproducible).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph, optionally with its signing.
    #[command(subcommand)]
    Gen(Gen),
    /// Lower and upper bounds on q(G).
    Certify(CertifyArgs),
    /// Φ_j obstructions at one distance.
    Obstruct(ObstructArgs),
    #[command(subcommand)]
    Scheme(SchemeCmd),
    #[command(subcommand)]
    Codes(CodesCmd),
    /// Antipodal fold and its signed quotient.
    Fold { graph: String },
    /// ζ(d, j, t) for every j and t, against the closed form.
    Zeta {
        #[arg(long)]
        d: u32,
    },
    /// Zero forcing sets.
    Zf {
        graph: String,
        #[arg(long)]
        exhaustive: bool,
        /// Largest order for the exhaustive search.
        #[arg(long, default_value_t = 40)]
        cap: usize,
    },
    /// Reproduce the summary table of small distance-regular graphs.
    Table1 {
        #[arg(long)]
        threads: Option<usize>,
    },
    /// The tight frame of J(n, d).
    Frames {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Include the frame vectors.
        #[arg(long)]
        vectors: bool,
    },
    /// Every identity of the Johnson apparatus at (n, d).
    Johnson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Check every bundle file against the manifest.
    Bundle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Json,
    Signed,
}

#[derive(Args)]
struct EmitArg {
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Subcommand)]
enum Gen {
    Johnson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[command(flatten)]
        emit: EmitArg,
    },
    Hamming {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[command(flatten)]
        emit: EmitArg,
    },
    Kneser {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        emit: EmitArg,
    },
    Complement {
        graph: String,
        #[command(flatten)]
        emit: EmitArg,
    },
    /// Kronecker product of OMZDs; the support is a product of complete graphs.
    Tensor {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        /// OMZD matrix file for an order that is not constructed in-crate.
        #[arg(long)]
        omzd: Vec<PathBuf>,
        #[command(flatten)]
        emit: EmitArg,
    },
}

#[derive(Args)]
struct CertifyArgs {
    /// Family spec, bundle name, file, or - for stdin.
    #[arg(default_value = "-")]
    graph: String,
    /// Largest |Ω| for the sign search.
    #[arg(long, default_value_t = DEFAULT_SIGN_VARIABLE_CAP)]
    cap: usize,
    #[arg(long)]
    max_j: Option<usize>,
    /// A graph whose antipodal fold should be this one.
    #[arg(long)]
    cover: Vec<String>,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Mode {
    Parity,
    Exhaust,
    Both,
}

#[derive(Args)]
struct ObstructArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    j: usize,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Johnson,
    Hamming,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Johnson: ground set size. Hamming: alphabet size.
    #[arg(long)]
    n: usize,
    /// Johnson: subset size. Hamming: word length.
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// First eigenmatrix, checked against the distance scheme.
    Eigenmatrix(FamilyArgs),
    /// E_I for one index set.
    Idempotent {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// All E_I with |I| ≤ cap, or the character idempotents of a group.
    Search {
        #[arg(long, value_enum, requires = "n", requires = "d")]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Bundled group (s3, s4, d4, d5, q8).
        #[arg(long, conflicts_with = "family")]
        group: Option<String>,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum CodesCmd {
    /// Ternary codes of A_{n,d}, A_{n,d} − I and A_{n,d} + I.
    Table2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

/// A rendered document and whether every asserted check held.
enum Output {
    Doc(Value, bool),
    Raw(String),
    Table1(Value, Vec<String>, bool),
}

fn emit(text: &str) {
    // a closed pipe (`| head`) is not an error worth a panic
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Raw(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Ok(Output::Doc(v, ok)) => {
            match cli.format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))),
                Format::Text => emit(&report::to_text(&v)),
            }
            status(ok)
        }
        Ok(Output::Table1(v, lines, ok)) => {
            match cli.format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))),
                Format::Text => emit(&lines.iter().map(|l| format!("{}\n", l)).collect::<String>()),
            }
            status(ok)
        }
        Err(e) => {
            eprintln!("spectra: {}", e);
            ExitCode::from(if e.is_verification() { 1 } else { 2 })
        }
    }
}

fn bundle(cli: &Cli) -> Result<Bundle, Error> {
    Bundle::resolve(cli.data_dir.as_deref())
}

fn threads(t: Option<usize>) -> usize {
    t.unwrap_or_else(default_threads).max(1)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Gen(g) => gen(cli, g),
        Command::Certify(a) => certify(cli, a),
        Command::Obstruct(a) => obstruct(cli, a),
        Command::Scheme(s) => scheme(cli, s),
        Command::Codes(CodesCmd::Table2 { n, d }) => {
            let r = table2_report(*n, *d)?;
            Ok(Output::Doc(document("codes table2", report::code_report(&r)), r.all_verified()))
        }
        Command::Fold { graph } => fold(cli, graph),
        Command::Zeta { d } => zeta_table(*d),
        Command::Zf { graph, exhaustive, cap } => zf(cli, graph, *exhaustive, *cap),
        Command::Table1 { threads: t } => {
            let b = bundle(cli)?;
            let rows = table1_reproduce(&b, threads(*t));
            let all = rows.iter().all(|r| r.matches_published);
            let body = json!({
                "rows": rows.iter().map(outcome_json).collect::<Vec<_>>(),
                "matching": rows.iter().filter(|r| r.matches_published).count(),
                "total": rows.len(),
            });
            Ok(Output::Table1(document("table1", body), rows.iter().map(outcome_line).collect(), all))
        }
        Command::Frames { n, d, vectors } => {
            let f = frame_vectors(*n, *d)?;
            let ok = f.gram_identity && f.tight && f.johnson_support;
            let mut body = json!({
                "n": n,
                "d": d,
                "ambient_dim": f.ambient_dim,
                "frame_size": f.vectors.cols(),
                "frame_rank": f.frame_rank,
                "gram_identity": f.gram_identity,
                "tight": f.tight,
                "johnson_support": f.johnson_support,
            });
            if *vectors {
                body["vectors"] = serde_json::to_value(MatrixJson::from_matrix(&f.vectors)).expect("json");
            }
            Ok(Output::Doc(document("frames", body), ok))
        }
        Command::Johnson { n, d } => {
            let claims = johnson_claims(*n, *d)?;
            let ok = claims.iter().all(|c| c.verified);
            let body = json!({
                "family": "johnson",
                "n": n,
                "d": d,
                "claims": claims.iter().map(|c| json!({
                    "name": c.name,
                    "verified": c.verified,
                    "witness_refs": c.witness_refs,
                })).collect::<Vec<_>>(),
            });
            Ok(Output::Doc(document("johnson", body), ok))
        }
        Command::Bundle => {
            let b = bundle(cli)?;
            let results = b.verify_all();
            let ok = results.iter().all(|(_, r)| r.is_ok());
            let entries: Vec<Value> = results
                .iter()
                .map(|(name, r)| match r {
                    Ok(()) => json!({ "name": name, "ok": true }),
                    Err(e) => json!({ "name": name, "ok": false, "error": e.to_string() }),
                })
                .collect();
            let source = match b.source() {
                spectra::bundle::Source::Directory(p) => p.display().to_string(),
                spectra::bundle::Source::Embedded => "embedded".into(),
            };
            Ok(Output::Doc(document("bundle", json!({ "source": source, "entries": entries })), ok))
        }
    }
}

fn emit_graph(command: &str, name: String, g: &Graph, matrix: Option<(String, ExactMatrix)>, emit: Emit) -> Result<Output, Error> {
    match emit {
        Emit::Graph6 => {
            let mut s = String::from_utf8(save_graph6(g)).expect("graph6 is ascii");
            s.push('\n');
            Ok(Output::Raw(s))
        }
        Emit::Json | Emit::Signed => {
            let matrix = match (emit, matrix) {
                (Emit::Signed, Some((_, m))) => Some(MatrixJson::from_matrix(&m)),
                (Emit::Signed, None) => return Err(Error::Usage(format!("no signing is known for {}", name))),
                _ => None,
            };
            let doc = GraphDoc { name: Some(name), graph: GraphJson::from_graph(g), matrix };
            Ok(Output::Doc(document(command, serde_json::to_value(doc).expect("json")), true))
        }
    }
}

fn gen(cli: &Cli, g: &Gen) -> Result<Output, Error> {
    match g {
        Gen::Johnson { n, d, j, emit } => {
            let graph = johnson_graph(*n, *d, *j)?;
            let m = if *j == 1 { Some(("A".into(), signed_adjacency_a(*n, *d)?)) } else { None };
            emit_graph("gen johnson", format!("johnson:{}:{}:{}", n, d, j), &graph, m, emit.emit)
        }
        Gen::Hamming { d, n, j, emit } => {
            let graph = hamming_graph(*d, *n, *j)?;
            let m = if *j == 1 && *n == 2 { Some(("M".into(), hypercube_signing(*d)?)) } else { None };
            emit_graph("gen hamming", format!("hamming:{}:{}:{}", d, n, j), &graph, m, emit.emit)
        }
        Gen::Kneser { n, d, emit } => {
            emit_graph("gen kneser", format!("kneser:{}:{}", n, d), &kneser_graph(*n, *d)?, None, emit.emit)
        }
        Gen::Complement { graph, emit } => {
            let r = families::resolve(graph, &bundle(cli)?)?;
            emit_graph("gen complement", format!("complement of {}", r.id), &complement(&r.graph), None, emit.emit)
        }
        Gen::Tensor { orders, omzd, emit } => {
            let mut ingested = Vec::new();
            for p in omzd {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {}", p.display(), e)))?;
                ingested.push(omzd_from_json(&text)?);
            }
            let t = tensor_signing_with(orders, |n| omzd_with_data(n, ingested.iter().find(|m| m.rows() == n)))?;
            if !(t.square_verified && t.support_verified) {
                return Err(Error::Core(spectra_core::Error::Verification("tensor signing failed its checks".into())));
            }
            let graph = Graph::from_support(&t.matrix)?;
            let name = format!("tensor:{}", orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(","));
            emit_graph("gen tensor", name, &graph, Some(("B".into(), t.matrix)), emit.emit)
        }
    }
}

fn with_fixture(b: &Bundle, r: &Resolved, opt: &mut QBoundOptions) {
    let name = format!("{}.parity", r.id.replace(':', "_"));
    if let Ok(f) = b.parity_fixture(&name) {
        opt.parity_families.push((name, f.j, f.family));
    }
}

fn certify(cli: &Cli, a: &CertifyArgs) -> Result<Output, Error> {
    let b = bundle(cli)?;
    let r = families::resolve(&a.graph, &b)?;
    if a.cap > SIGN_VARIABLE_CAP {
        return Err(Error::Usage(format!("--cap is at most {}", SIGN_VARIABLE_CAP)));
    }
    let mut opt = QBoundOptions::new();
    opt.sign_variable_cap = a.cap;
    opt.max_j = a.max_j;
    opt.matrices = r.matrices.clone();
    for c in &a.cover {
        let cover = families::resolve(c, &b)?;
        opt.covers.push((cover.id, cover.graph));
    }
    with_fixture(&b, &r, &mut opt);
    let t = threads(a.threads);
    let report = q_bounds(&r.id, &r.graph, &opt, |sys| sign_exhaust_parallel(sys, t))?;
    Ok(Output::Doc(document("certify", report::q_bound_report(&report)), true))
}

fn obstruct(cli: &Cli, a: &ObstructArgs) -> Result<Output, Error> {
    let b = bundle(cli)?;
    let r = families::resolve(&a.graph, &b)?;
    let sys = phi(&r.graph, a.j)?;
    let mut body = json!({
        "graph": r.id,
        "j": a.j,
        "polynomials": sys.polynomials.len(),
        "variables": sys.variables().len(),
    });
    let mut found = false;
    if a.mode != Mode::Exhaust {
        let mut families_checked = Vec::new();
        let mut opt = QBoundOptions::new();
        with_fixture(&b, &r, &mut opt);
        for (name, j, fam) in &opt.parity_families {
            if *j == a.j {
                let ok = spectra_core::obstruction::verify_parity_family(&sys, fam);
                families_checked.push(json!({ "fixture": name, "size": fam.len(), "valid": ok.is_ok() }));
            }
        }
        body["parity"] = match parity_certificate(&sys)? {
            Some(c) => {
                found = true;
                report::certificate(&r.id, &c, None)
            }
            None => Value::Null,
        };
        if !families_checked.is_empty() {
            body["fixtures"] = json!(families_checked);
        }
    }
    if a.mode != Mode::Parity {
        let start = Instant::now();
        let res = sign_exhaust_parallel(&sys, threads(a.threads))?;
        let elapsed = cli.timings.then(|| start.elapsed().as_millis());
        found |= matches!(res, SignExhaust::Unsat(_));
        body["exhaust"] = report::exhaust_result(&r.id, &res, elapsed);
    }
    body["lower_bound"] = if found { json!(a.j + 1) } else { Value::Null };
    Ok(Output::Doc(document("obstruct", body), true))
}

fn family_scheme(f: &FamilyArgs) -> Result<(SchemeData, EigenMatrixData, String), Error> {
    let (g, eig, name) = match f.family {
        Family::Johnson => (johnson_graph(f.n, f.d, 1)?, johnson_eigenmatrix(f.n, f.d)?, format!("J({},{})", f.n, f.d)),
        Family::Hamming => (hamming_graph(f.d, f.n, 1)?, hamming_eigenmatrix(f.d, f.n)?, format!("H({},{})", f.d, f.n)),
    };
    let s = scheme_from_graph(&g)?;
    if !check_eigenmatrix(&s, &eig)? {
        return Err(Error::Core(spectra_core::Error::Verification(format!("eigenmatrix of {} disagrees with its scheme", name))));
    }
    Ok((s, eig, name))
}

fn witness_json(w: &IdempotentWitness) -> Value {
    json!({
        "i_set": w.i_set,
        "j_set": w.j_set,
        "coefficients": w.coefficients.iter().map(rational).collect::<Vec<_>>(),
        "rank": w.rank,
        "connected": w.connected,
        "verified": true,
    })
}

fn scheme(cli: &Cli, s: &SchemeCmd) -> Result<Output, Error> {
    match s {
        SchemeCmd::Eigenmatrix(f) => {
            let (_, eig, name) = family_scheme(f)?;
            let body = json!({
                "scheme": name,
                "p": eig.p.iter().map(|r| r.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "multiplicities": eig.multiplicities,
                "verified": true,
            });
            Ok(Output::Doc(document("scheme eigenmatrix", body), true))
        }
        SchemeCmd::Idempotent { family, set } => {
            let (sc, eig, name) = family_scheme(family)?;
            let w = idempotent_ei(&sc, &eig, set)?;
            Ok(Output::Doc(document("scheme idempotent", json!({ "scheme": name, "witness": witness_json(&w) })), true))
        }
        SchemeCmd::Search { family, n, d, group, cap } => {
            if let Some(gname) = group {
                let (g, chars) = bundle(cli)?.group(gname)?;
                let cs = conjugacy_scheme(&g, &chars)?;
                let body = json!({
                    "group": gname,
                    "order": g.order(),
                    "classes": chars.classes().iter().map(|c| json!({ "name": c.name, "size": c.size })).collect::<Vec<_>>(),
                    "witnesses": cs.witnesses.iter().map(|(i, w)| {
                        let mut v = witness_json(w);
                        v["character"] = json!(i);
                        v
                    }).collect::<Vec<_>>(),
                    "skipped_irrational": cs.skipped_irrational,
                });
                return Ok(Output::Doc(document("scheme search", body), true));
            }
            let (Some(family), Some(n), Some(d)) = (family, n, d) else {
                return Err(Error::Usage("scheme search needs --family with --n and --d, or --group".into()));
            };
            let (sc, eig, name) = family_scheme(&FamilyArgs { family: *family, n: *n, d: *d })?;
            let found: Vec<Value> = two_eig_search(&sc, &eig, *cap)?.iter().map(witness_json).collect();
            Ok(Output::Doc(document("scheme search", json!({ "scheme": name, "cap": cap, "witnesses": found })), true))
        }
    }
}

fn fold(cli: &Cli, spec: &str) -> Result<Output, Error> {
    let r = families::resolve(spec, &bundle(cli)?)?;
    let Some(f) = antipodal_fold(&r.graph) else {
        let body = json!({ "graph": r.id, "antipodal_double_cover": false });
        return Ok(Output::Doc(document("fold", body), false));
    };
    let signed = f.signed.matrix()?;
    let folded = f.folded.adjacency_matrix()?;
    let whole = charpoly(&r.graph.adjacency_matrix()?)?;
    let product = charpoly(&folded)?.mul(&charpoly(&signed)?);
    let split = whole == product;
    let degree = minimal_polynomial_degree(&signed, signed.rows().max(1))?.degree();
    let body = json!({
        "graph": r.id,
        "antipodal_double_cover": true,
        "folded": GraphJson::from_graph(&f.folded),
        "fibers": f.fibers,
        "negative_edges": f.signed.negative_edges(),
        "signed_minpoly_degree": degree,
        "charpoly_splits": split,
    });
    Ok(Output::Doc(document("fold", body), split))
}

fn zeta_table(d: u32) -> Result<Output, Error> {
    let mut rows = Vec::new();
    for j in 0..=d {
        for t in 0..3 {
            let z = zeta(d, j, t)?;
            rows.push(json!({ "j": j, "t": t, "value": z.value, "kappa": z.kappa, "case": z.case }));
        }
    }
    let body = json!({ "d": d, "identities": rows.len(), "all_verified": true, "table": rows });
    Ok(Output::Doc(document("zeta", body), true))
}

fn zf(cli: &Cli, spec: &str, exhaustive: bool, cap: usize) -> Result<Output, Error> {
    let r = families::resolve(spec, &bundle(cli)?)?;
    let g = &r.graph;
    let mut body = json!({ "graph": r.id, "order": g.n() });
    let mut ok = true;
    // Johnson family: the explicit candidate, checked by closure
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() == 3 && parts[0] == "johnson" {
        let (n, d): (usize, usize) = (parts[1].parse().expect("resolved"), parts[2].parse().expect("resolved"));
        let cand = forcing_candidate(n, d)?;
        let forces = is_forcing_set(g, &cand);
        ok &= forces;
        body["candidate"] = json!({ "size": cand.len(), "vertices": cand, "forces": forces });
    } else {
        // greedy: add the first vertex the closure misses until all are blue
        let mut set = Vec::new();
        loop {
            let closed = zero_forcing_closure(g, &set);
            if closed.len() == g.n() {
                break;
            }
            let missing = (0..g.n()).find(|v| !closed.contains(v)).expect("closure is short");
            set.push(missing);
        }
        body["greedy"] = json!({ "size": set.len(), "vertices": set, "forces": true });
    }
    if exhaustive {
        body["exhaustive"] = match zero_forcing_number_exhaustive(g, cap) {
            ZeroForcing::Number { z, witness } => json!({ "z": z, "witness": witness }),
            ZeroForcing::CapExceeded { n, cap } => json!({ "skipped": format!("order {} exceeds cap {}", n, cap) }),
        };
    }
    Ok(Output::Doc(document("zf", body), ok))
}
