use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Value};

use interlace_core::chord::{verify_cpoly_identity, ChordDiagram, DEFAULT_SQUARE_POINTS};
use interlace_core::dh::{bdh_to_sp, bdh_verdict, qn_bdh_fast, recognize_dh, BdhVerdict, DHSequence, Recognition};
use interlace_core::euler::{verify_theorem_a, EulerDigraph};
use interlace_core::interlace::{gamma, q_recursive, q_statesum, qn_from_q, qn_recursive, qn_statesum};
use interlace_core::planarsp::{
    build_sp, tutte_diagonal_sp, verify_theorem_b, verify_theorem_b_sp, PlaneMultigraph, SPSequence, TheoremBReport,
};
use interlace_core::verify::{cpoly_suite, identity_suite, theorem_a_suite, theorem_b_suite, SuiteReport};
use interlace_core::{Error, Graph, SparsePoly};

use crate::args::{
    ArcsInput, Command, DhCommand, EdgesInput, PlaneInput, QMethod, QnMethod, SuiteArgs, VerifyCommand,
};

/// Circuits of digraphs up to this size are all enumerated by `verify theorem-a`.
const ALL_CIRCUITS_UP_TO: usize = 5;
const THEOREM_A_COUNT: usize = 50;
const THEOREM_A_MAX_VERTICES: usize = 8;
const THEOREM_B_COUNT: usize = 100;
const THEOREM_B_MAX_OPS: usize = 8;
const CPOLY_COUNT: usize = 50;
const CPOLY_MAX_CHORDS: usize = 7;
const IDENTITY_COUNT: usize = 200;
const IDENTITY_MAX_ORDER: usize = 7;

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Input(String, Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Input(src, e) => write!(f, "{src}: {e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub struct Output {
    pub input: String,
    pub method: String,
    pub text: String,
    pub result: Value,
    pub verified: bool,
    pub elapsed_ms: f64,
}

impl Output {
    fn new(input: String, method: &str, text: String, result: Value) -> Self {
        Output { input, method: method.to_string(), text, result, verified: true, elapsed_ms: 0.0 }
    }

    fn verified(mut self, ok: bool) -> Self {
        self.verified = ok;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input,
            "method": self.method,
            "result": self.result,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn label(path: &Path) -> String {
    path.display().to_string()
}

/// Attach the input name to a core error.
trait Context<T> {
    fn on(self, src: &str) -> CliResult<T>;
}

impl<T> Context<T> for interlace_core::Result<T> {
    fn on(self, src: &str) -> CliResult<T> {
        self.map_err(|e| CliError::Input(src.to_string(), e))
    }
}

fn load_graph(input: &EdgesInput) -> CliResult<(String, Graph)> {
    let src = label(&input.edges);
    let g = Graph::parse_edge_list(&read(&input.edges)?).on(&src)?;
    Ok((src, g))
}

fn load_digraph(path: &Path) -> CliResult<(String, EulerDigraph)> {
    let src = label(path);
    let g = EulerDigraph::parse(&read(path)?).on(&src)?;
    Ok((src, g))
}

fn load_sp(path: &Path) -> CliResult<(String, SPSequence)> {
    let src = label(path);
    let seq = SPSequence::parse(&read(path)?).on(&src)?;
    Ok((src, seq))
}

fn load_plane(input: &PlaneInput) -> CliResult<(String, PlaneMultigraph)> {
    match (&input.rotation, &input.sp) {
        (Some(p), _) => {
            let src = label(p);
            let g = PlaneMultigraph::parse(&read(p)?).on(&src)?;
            Ok((src, g))
        }
        (None, Some(p)) => {
            let (src, seq) = load_sp(p)?;
            let g = build_sp(&seq).on(&src)?;
            Ok((src, g))
        }
        (None, None) => Err(CliError::Usage("one of --rotation or --sp is required".into())),
    }
}

fn parse_circuit(text: &str) -> CliResult<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("--circuit: `{t}` is not an arc index"))))
        .collect()
}

fn poly_line(p: &SparsePoly) -> String {
    format!("{p}\n")
}

fn graph_json(g: &Graph) -> Value {
    json!({ "vertices": g.vertex_ids(), "edges": g.edges() })
}

fn seed_of(suite: &SuiteArgs) -> CliResult<u64> {
    suite.seed.ok_or_else(|| CliError::Usage("random corpora need --seed".into()))
}

fn suite_output(seed: u64, method: &str, report: SuiteReport) -> Output {
    let ok = report.passed();
    let mut text = format!("{report}\n");
    for f in &report.failures {
        text.push_str(&format!("  {f}\n"));
    }
    Output::new(format!("seed {seed}"), method, text, json!(report)).verified(ok)
}

fn theorem_b_output(src: String, method: &str, r: TheoremBReport) -> Output {
    let ok = r.holds();
    let compact = |p: &SparsePoly| p.to_string().replace('*', "");
    let relation = if r.diagonal_matches() { "=" } else { "!=" };
    let gamma_rel = if r.gamma_matches() { "=" } else { "!=" };
    let mut text = format!("q_N={} {relation} t(G;x,x)", compact(&r.qn));
    if relation == "!=" {
        text.push_str(&format!(" = {}", compact(&r.tutte_diagonal)));
    }
    text.push_str(&format!("\ngamma={} {gamma_rel} 2*beta={}\n", r.gamma, &r.beta * 2));
    text.push_str(if ok { "verified\n" } else { "FAILED\n" });
    Output::new(src, method, text, json!(r)).verified(ok)
}

pub fn execute(cmd: &Command) -> CliResult<Output> {
    let start = Instant::now();
    let mut out = dispatch(cmd)?;
    out.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(out)
}

fn dispatch(cmd: &Command) -> CliResult<Output> {
    match cmd {
        Command::Q { input, method } => {
            let (src, g) = load_graph(input)?;
            let (q, name) = match method {
                QMethod::StateSum => (q_statesum(&g).on(&src)?, "state-sum"),
                QMethod::Recursion => (q_recursive(&g), "recursion"),
            };
            Ok(Output::new(src, name, poly_line(&q), json!(q)))
        }
        Command::Qn { input, method } => {
            let (src, g) = load_graph(input)?;
            let (qn, name) = match method {
                QnMethod::Recursion => (qn_recursive(&g).on(&src)?, "recursion"),
                QnMethod::Specialize => (qn_from_q(&g).on(&src)?, "specialize"),
                QnMethod::BdhFast => (qn_bdh_fast(&g).on(&src)?, "bdh-fast"),
                QnMethod::StateSum => (qn_statesum(&g).on(&src)?, "state-sum"),
            };
            Ok(Output::new(src, name, poly_line(&qn), json!(qn)))
        }
        Command::Gamma { input } => {
            let (src, g) = load_graph(input)?;
            let v = gamma(&g).on(&src)?;
            Ok(Output::new(src, "recursion", format!("{v}\n"), json!(v.to_string())))
        }
        Command::Tutte { input } => {
            let (src, g) = load_plane(input)?;
            let t = g.tutte();
            Ok(Output::new(src, "deletion-contraction", poly_line(&t), json!(t)))
        }
        Command::TutteDiagSp { sp } => {
            let (src, seq) = load_sp(sp)?;
            let d = tutte_diagonal_sp(&seq).on(&src)?;
            Ok(Output::new(src, "series-parallel-reduction", poly_line(&d), json!(d)))
        }
        Command::Beta { input } => {
            let (src, g) = load_plane(input)?;
            let b = g.beta().on(&src)?;
            Ok(Output::new(src, "deletion-contraction", format!("{b}\n"), json!(b.to_string())))
        }
        Command::Cpp { input: ArcsInput { arcs } } => {
            let (src, g) = load_digraph(arcs)?;
            let f = g.circuit_partition_poly().on(&src)?;
            Ok(Output::new(src, "state-enumeration", poly_line(&f), json!(f)))
        }
        Command::EulerCircuit { input: ArcsInput { arcs } } => {
            let (src, g) = load_digraph(arcs)?;
            let c = g.euler_circuit().on(&src)?;
            let mut walk: Vec<&str> = c.iter().map(|&a| g.arc_ids(a).0).collect();
            walk.extend(c.first().map(|&a| g.arc_ids(a).0));
            let ids: Vec<String> = c.iter().map(usize::to_string).collect();
            let text = format!("arcs: {}\nwalk: {}\n", ids.join(" "), walk.join(" -> "));
            Ok(Output::new(src, "hierholzer", text, json!({ "arcs": c, "walk": walk })))
        }
        Command::CircleGraph { word, arcs, circuit } => {
            let (src, diagram, method) = match (word, arcs) {
                (Some(w), _) => (w.clone(), ChordDiagram::parse(w).on("--word")?, "chord-word"),
                (None, Some(p)) => {
                    let (src, g) = load_digraph(p)?;
                    let c = match circuit {
                        Some(text) => {
                            let c = parse_circuit(text)?;
                            g.check_circuit(&c).on(&src)?;
                            c
                        }
                        None => g.euler_circuit().on(&src)?,
                    };
                    (src.clone(), g.chord_word_from_circuit(&c).on(&src)?, "euler-circuit")
                }
                (None, None) => return Err(CliError::Usage("one of --word or --arcs is required".into())),
            };
            let h = diagram.circle_graph();
            let text = format!("# word: {diagram}\n{}", h.to_edge_list());
            let mut result = graph_json(&h);
            result["word"] = json!(diagram.word());
            Ok(Output::new(src, method, text, result))
        }
        Command::Medial { input } => {
            let (src, g) = load_plane(input)?;
            let m = g.medial_digraph().on(&src)?;
            let arcs: Vec<(&str, &str)> = (0..m.arc_count()).map(|a| m.arc_ids(a)).collect();
            Ok(Output::new(src, "rotation-successor", m.to_arc_list(), json!({ "arcs": arcs })))
        }
        Command::Dh { command } => dh(command),
        Command::Verify { command } => verify(command),
    }
}

fn dh(cmd: &DhCommand) -> CliResult<Output> {
    match cmd {
        DhCommand::Recognize { input } => {
            let (src, g) = load_graph(input)?;
            let r = recognize_dh(&g).on(&src)?;
            let text = match &r {
                Recognition::Accepted(seq) => seq.to_string(),
                Recognition::Rejected { residual } => {
                    format!("not distance-hereditary; stuck on {{{}}}\n", residual.join(", "))
                }
            };
            Ok(Output::new(src, "peeling", text, json!(r)))
        }
        DhCommand::IsBdh { input } => {
            let (src, g) = load_graph(input)?;
            let v = bdh_verdict(&g).on(&src)?;
            let text = format!("{}: {}\n", if v.is_bdh() { "yes" } else { "no" }, v.describe());
            Ok(Output::new(src, "peeling", text, json!(v)))
        }
        DhCommand::ToSp { dh, edges } => {
            let (src, seq) = match (dh, edges) {
                (Some(p), _) => {
                    let src = label(p);
                    let seq = DHSequence::parse(&read(p)?).on(&src)?;
                    (src, seq)
                }
                (None, Some(p)) => {
                    let src = label(p);
                    let g = Graph::parse_edge_list(&read(p)?).on(&src)?;
                    match bdh_verdict(&g).on(&src)? {
                        BdhVerdict::Bdh { sequence } => (src, sequence),
                        other => return Err(CliError::Input(src, Error::NotBdh(other.describe()))),
                    }
                }
                (None, None) => return Err(CliError::Usage("one of --dh or --edges is required".into())),
            };
            let t = bdh_to_sp(&seq).on(&src)?;
            let mut text = t.sequence.to_string();
            for (v, e) in &t.edge_of {
                text.push_str(&format!("# {v} -> {e}\n"));
            }
            Ok(Output::new(src, "bdh-translation", text, json!(t)))
        }
    }
}

fn verify(cmd: &VerifyCommand) -> CliResult<Output> {
    match cmd {
        VerifyCommand::TheoremA { arcs: Some(p), .. } => {
            let (src, g) = load_digraph(p)?;
            let r = verify_theorem_a(&g, ALL_CIRCUITS_UP_TO).on(&src)?;
            let ok = r.holds();
            let qn = r.circle_qn.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ");
            let text = format!(
                "f={}\nq_N(H)={qn} over {} circuit(s){}\n{}\n",
                r.f,
                r.circuits_checked,
                if r.exhaustive { ", all of them" } else { "" },
                if ok { "verified" } else { "FAILED" }
            );
            Ok(Output::new(src, "single", text, json!(r)).verified(ok))
        }
        VerifyCommand::TheoremA { arcs: None, suite } => {
            let seed = seed_of(suite)?;
            let n = suite.count.unwrap_or(THEOREM_A_COUNT);
            let r = theorem_a_suite(seed, n, THEOREM_A_MAX_VERTICES, ALL_CIRCUITS_UP_TO).on("corpus")?;
            Ok(suite_output(seed, "random-corpus", r))
        }
        VerifyCommand::TheoremB { sp: Some(p), .. } => {
            let (src, seq) = load_sp(p)?;
            let r = verify_theorem_b_sp(&seq).on(&src)?;
            Ok(theorem_b_output(src, "single", r))
        }
        VerifyCommand::TheoremB { rotation: Some(p), .. } => {
            let src = label(p);
            let g = PlaneMultigraph::parse(&read(p)?).on(&src)?;
            let r = verify_theorem_b(&g).on(&src)?;
            Ok(theorem_b_output(src, "single", r))
        }
        VerifyCommand::TheoremB { suite, .. } => {
            let seed = seed_of(suite)?;
            let n = suite.count.unwrap_or(THEOREM_B_COUNT);
            let r = theorem_b_suite(seed, n, THEOREM_B_MAX_OPS).on("corpus")?;
            Ok(suite_output(seed, "random-corpus", r))
        }
        VerifyCommand::Cpoly { word: Some(w), .. } => {
            let d = ChordDiagram::parse(w).on("--word")?;
            let r = verify_cpoly_identity(&d, &DEFAULT_SQUARE_POINTS).on("--word")?;
            let ok = r.holds();
            let mut text = String::new();
            for p in &r.points {
                let rel = if p.c_value == p.q_value { "=" } else { "!=" };
                text.push_str(&format!("Y={} Z={}: C={} {rel} q={}\n", p.y, p.z, p.c_value, p.q_value));
            }
            text.push_str(if ok { "verified\n" } else { "FAILED\n" });
            Ok(Output::new(w.clone(), "single", text, json!(r)).verified(ok))
        }
        VerifyCommand::Cpoly { word: None, suite } => {
            let seed = seed_of(suite)?;
            let n = suite.count.unwrap_or(CPOLY_COUNT);
            let r = cpoly_suite(seed, n, CPOLY_MAX_CHORDS).on("corpus")?;
            Ok(suite_output(seed, "random-corpus", r))
        }
        VerifyCommand::Identities { suite } => {
            let seed = seed_of(suite)?;
            let n = suite.count.unwrap_or(IDENTITY_COUNT);
            let r = identity_suite(seed, n, IDENTITY_MAX_ORDER).on("corpus")?;
            Ok(suite_output(seed, "random-corpus", r))
        }
    }
}
