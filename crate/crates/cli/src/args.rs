use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "interlace", version, about = "Interlace, circuit-partition and Tutte polynomial workbench")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QMethod {
    StateSum,
    Recursion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QnMethod {
    Recursion,
    Specialize,
    BdhFast,
    StateSum,
}

#[derive(Args, Debug)]
pub struct EdgesInput {
    /// Edge-list file: `u v` per line, a lone `v` for an isolated vertex.
    #[arg(long)]
    pub edges: PathBuf,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct PlaneInput {
    /// Rotation system file: `v: e1 e2 ...` per vertex.
    #[arg(long)]
    pub rotation: Option<PathBuf>,
    /// Series-parallel construction file: `digon`, `series <e>`, `parallel <e>`.
    #[arg(long)]
    pub sp: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ArcsInput {
    /// Arc-list file: `u -> v` per line.
    #[arg(long)]
    pub arcs: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Two-variable interlace polynomial q(G;x,y).
    Q {
        #[command(flatten)]
        input: EdgesInput,
        #[arg(long, value_enum, default_value_t = QMethod::Recursion)]
        method: QMethod,
    },
    /// Vertex-nullity interlace polynomial q_N(G;x).
    Qn {
        #[command(flatten)]
        input: EdgesInput,
        #[arg(long, value_enum, default_value_t = QnMethod::Recursion)]
        method: QnMethod,
    },
    /// Linear coefficient of q_N.
    Gamma {
        #[command(flatten)]
        input: EdgesInput,
    },
    /// Tutte polynomial t(G;x,y) of a plane multigraph.
    Tutte {
        #[command(flatten)]
        input: PlaneInput,
    },
    /// t(G;x,x) from a series-parallel construction by reduction.
    TutteDiagSp {
        #[arg(long)]
        sp: PathBuf,
    },
    /// Coefficient of x in the Tutte polynomial.
    Beta {
        #[command(flatten)]
        input: PlaneInput,
    },
    /// Circuit partition polynomial f(G;x) of a 2-in 2-out digraph.
    Cpp {
        #[command(flatten)]
        input: ArcsInput,
    },
    /// One Euler circuit, as arc indices and visited vertices.
    EulerCircuit {
        #[command(flatten)]
        input: ArcsInput,
    },
    /// Interlacement graph of a chord word, or of a digraph along a circuit.
    CircleGraph {
        /// Chord word, e.g. "a b a b".
        #[arg(long, conflicts_with = "arcs", required_unless_present = "arcs")]
        word: Option<String>,
        #[arg(long)]
        arcs: Option<PathBuf>,
        /// Arc indices of an Euler circuit; defaults to the Hierholzer circuit.
        #[arg(long, requires = "arcs")]
        circuit: Option<String>,
    },
    /// Medial digraph of a plane multigraph, as an arc list.
    Medial {
        #[command(flatten)]
        input: PlaneInput,
    },
    /// Distance-hereditary recognition and translation.
    Dh {
        #[command(subcommand)]
        command: DhCommand,
    },
    /// Run a verification on one input or a seeded random corpus.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum DhCommand {
    /// Peel pendants and twins; print a construction sequence or the residue.
    Recognize {
        #[command(flatten)]
        input: EdgesInput,
    },
    /// Decide whether the graph is bipartite distance-hereditary.
    IsBdh {
        #[command(flatten)]
        input: EdgesInput,
    },
    /// Translate a BDH construction into a series-parallel construction.
    ToSp {
        /// Construction file: `root a`, `pendant b on a`, `falsetwin c of b`.
        #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
        dh: Option<PathBuf>,
        #[arg(long)]
        edges: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Seed for the random corpus.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Corpus size; each suite has its own default.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// f(G;x) = x q_N(H;x+1) on one digraph, or on a random corpus.
    TheoremA {
        #[arg(long)]
        arcs: Option<PathBuf>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// q_N(H;x) = t(G;x,x) and gamma = 2 beta on one plane graph, or a corpus.
    TheoremB {
        #[arg(long, conflicts_with = "rotation")]
        sp: Option<PathBuf>,
        #[arg(long)]
        rotation: Option<PathBuf>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Chord-diagram C-polynomial against q at the standard points.
    Cpoly {
        #[arg(long)]
        word: Option<String>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Interlace polynomial identities on a random corpus.
    Identities {
        #[command(flatten)]
        suite: SuiteArgs,
    },
}
