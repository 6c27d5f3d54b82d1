//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tangles::EquivalenceMode;

#[derive(Parser, Debug, Clone)]
#[command(name = "tangles", version, about = "Rational tangles, 2-bridge links and tangle equations")]
#[command(after_help = "EXAMPLES:
    tangles eval \"T(-1/2)+3T(2)\"
    tangles closure \"T(-1/2)+T(2)\" --chiral
    tangles classify \"b(11,6)\"
    tangles solve-processive --products \"b(1,1),b(3,1),b(7,3),7-crossing\" --chirality round1=left
    tangles solve-distributive --k1 \"b(3,1)\" --product \"b(3,1)#b(3,1)\" --p \"T(0)\" --r \"T(2)\"
    tangles oracle \"h^2 r h^3 r\"")]
pub struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,

    /// Equivalence mode; also read from TANGLES_MODE
    #[arg(long, global = true, value_enum, env = "TANGLES_MODE")]
    pub mode: Option<ModeArg>,

    /// Distinguish a link from its mirror image
    #[arg(long, global = true, conflicts_with = "mirror_agnostic")]
    pub chiral: bool,

    /// Identify a link with its mirror image (default)
    #[arg(long, global = true)]
    pub mirror_agnostic: bool,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn equivalence_mode(&self) -> EquivalenceMode {
        if self.chiral {
            EquivalenceMode::Chiral
        } else if self.mirror_agnostic {
            EquivalenceMode::MirrorAgnostic
        } else {
            self.mode.map(Into::into).unwrap_or_default()
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Chiral,
    MirrorAgnostic,
}

impl From<ModeArg> for EquivalenceMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Chiral => EquivalenceMode::Chiral,
            ModeArg::MirrorAgnostic => EquivalenceMode::MirrorAgnostic,
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Evaluate a tangle, twist word, knot or equation
    Eval(EvalArgs),
    /// Numerator (or denominator) closure of a tangle expression
    Closure(ClosureArgs),
    /// Distance |ps - rq| between two rational tangles
    Distance(DistanceArgs),
    /// Canonical form, name and invariants of a 2-bridge link or connected sum
    Classify(ClassifyArgs),
    /// Solve N(O + iR) = K_i for rational O and integral R
    SolveProcessive(ProcessiveArgs),
    /// Solve N(Q + P) = K1, N(Q + R) = K2#K3
    SolveDistributive(DistributiveArgs),
    /// Closures N(T(s/r) + T((u+tm)/t)) over a range of m
    MontesinosFamily(FamilyArgs),
    /// Recompute invariants from an explicit diagram
    Oracle(OracleArgs),
    /// SVG drawing of a 4-plat
    Render(RenderArgs),
}

#[derive(Args, Debug, Clone)]
pub struct EvalArgs {
    pub expr: String,
    /// Bind a tangle variable, e.g. --let R=T(2)
    #[arg(long = "let", value_name = "VAR=TANGLE")]
    pub bindings: Vec<String>,
}

#[derive(Args, Debug, Clone)]
pub struct ClosureArgs {
    pub expr: String,
    /// Denominator closure instead of numerator closure
    #[arg(long)]
    pub denominator: bool,
    #[arg(long = "let", value_name = "VAR=TANGLE")]
    pub bindings: Vec<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DistanceArgs {
    pub first: String,
    pub second: String,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    pub knot: String,
}

#[derive(Args, Debug, Clone)]
pub struct ProcessiveArgs {
    /// Comma-separated products K_0,...,K_m; the last may be "c-crossing"
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    pub products: Option<String>,
    /// Equation file with lines N(O+iR)=K_i
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Observed handedness, e.g. round1=left
    #[arg(long)]
    pub chirality: Option<String>,
    #[arg(long, default_value_t = 64)]
    pub bound_uv: i64,
    #[arg(long, default_value_t = 32)]
    pub bound_r: i64,
    /// Replay every grid point instead of pre-filtering
    #[arg(long)]
    pub no_prefilter: bool,
    /// Run the search on one thread
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug, Clone)]
pub struct DistributiveArgs {
    #[arg(long, required_unless_present = "file")]
    pub k1: Option<String>,
    #[arg(long, required_unless_present = "file")]
    pub product: Option<String>,
    #[arg(long, default_value = "T(0)")]
    pub p: String,
    #[arg(long, required_unless_present = "file")]
    pub r: Option<String>,
    /// Equation file with N(Q+P)=K1, N(Q+R)=K2#K3 and bindings P=..., R=...
    #[arg(long, conflicts_with_all = ["k1", "product", "r"])]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub r: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub u: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = -5)]
    pub m_min: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 5)]
    pub m_max: i64,
    /// Keep only members whose signed p equals this value
    #[arg(long, allow_hyphen_values = true)]
    pub p_equals: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Twist word, tangle expression or b(p,q)
    pub input: String,
    #[arg(long)]
    pub denominator: bool,
    /// Print the diagram as an edge list
    #[arg(long)]
    pub edge_list: bool,
    #[arg(long, default_value_t = tangles::oracle::DEFAULT_CROSSING_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug, Clone)]
pub struct RenderArgs {
    /// b(p,q), a knot name, or a rational tangle expression (its closure is drawn)
    pub input: String,
    /// Write the SVG here instead of standard output
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
