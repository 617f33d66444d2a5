use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monodromy_core::io;
use monodromy_core::search::{self, Budget, SearchOutcome};
use monodromy_core::van_kampen::{self, TietzeBudget};
use monodromy_core::{
    build_cover, validate_chain, BraidFactorization, BraidWord, ChainOptions, Direction, Error, Mode,
    MonodromyRep, ValidationReport,
};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_CHECK: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "monodromy", version, about = "Braid monodromy factorizations, covers and their invariants")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Affine,
    Projective,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Affine => Mode::Affine,
            ModeArg::Projective => Mode::Projective,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Args)]
struct FactInput {
    /// Factorization file.
    file: PathBuf,
    /// Accept reversed cusps (degree -3).
    #[arg(long)]
    allow_negative_cusps: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    max_nodes: Option<usize>,
    #[arg(long)]
    max_depth: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a factorization multiplies to the full twist.
    Validate(FactInput),
    /// Rewrite every conjugating word in Garside normal form.
    Normalize(FactInput),
    /// Apply one Hurwitz move at factors i, i+1 (0-based).
    Move {
        #[command(flatten)]
        input: FactInput,
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
    },
    /// Conjugate every factor by a braid.
    Conjugate {
        #[command(flatten)]
        input: FactInput,
        #[arg(long)]
        braid: String,
    },
    /// Remove a mutually inverse node pair at i, i+1.
    Cancel {
        #[command(flatten)]
        input: FactInput,
        #[arg(long)]
        index: usize,
    },
    /// Insert a mutually inverse node pair at i.
    Create {
        #[command(flatten)]
        input: FactInput,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value = "")]
        conj: String,
        #[arg(long)]
        theta: PathBuf,
    },
    /// Bounded search for an m-equivalence script.
    Equiv {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        theta: Option<PathBuf>,
        #[arg(long)]
        allow_negative_cusps: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Van Kampen presentation of the complement.
    Pi1 {
        #[command(flatten)]
        input: FactInput,
        #[arg(long, value_enum, default_value_t = ModeArg::Projective)]
        mode: ModeArg,
    },
    /// First homology of the complement.
    H1 {
        #[command(flatten)]
        input: FactInput,
        #[arg(long, value_enum, default_value_t = ModeArg::Projective)]
        mode: ModeArg,
    },
    /// Count factors by degree.
    Census(FactInput),
    /// Genus, boundary count and homology rank of the branched cover.
    Cover {
        #[arg(long)]
        theta: PathBuf,
    },
    /// Action of a liftable braid on the homology of the cover.
    Lift {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        braid: String,
    },
    /// Check a factorization against the monodromy of a cover.
    PencilCheck {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        fact: PathBuf,
        #[arg(long)]
        allow_negative_cusps: bool,
    },
    /// Check a chain of factorizations across dimensions.
    InductValidate {
        file: PathBuf,
        #[arg(long)]
        no_chain_check: bool,
    },
}

struct Output {
    code: u8,
    json: Value,
    text: String,
}

impl Output {
    fn new(code: u8, json: Value, text: impl Into<String>) -> Self {
        Output { code, json, text: text.into() }
    }

    fn report(r: &ValidationReport) -> Self {
        let code = if r.pass { EXIT_OK } else { EXIT_CHECK };
        Output::new(code, serde_json::to_value(r).expect("report serializes"), r.to_string())
    }

    fn factorization(f: &BraidFactorization) -> Self {
        let text = io::factorization_to_json(f);
        Output::new(EXIT_OK, serde_json::to_value(io::FactorizationRecord::from(f)).expect("record"), text)
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn load_factorization(path: &Path, allow_negative_cusps: bool) -> Result<BraidFactorization, Error> {
    let mut record: io::FactorizationRecord =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    record.allow_negative_cusps |= allow_negative_cusps;
    (&record).try_into()
}

fn load_input(input: &FactInput) -> Result<BraidFactorization, Error> {
    load_factorization(&input.file, input.allow_negative_cusps)
}

fn load_theta(path: &Path) -> Result<MonodromyRep, Error> {
    io::theta_from_json(&read(path)?)
}

/// `MONODROMY_BUDGET` is `NODES` or `NODES:DEPTH`; explicit flags win.
fn budget(args: &BudgetArgs) -> Result<Budget, Error> {
    let mut b = Budget::default();
    if let Ok(env) = std::env::var("MONODROMY_BUDGET") {
        let bad = || Error::Budget(format!("MONODROMY_BUDGET '{env}' is not NODES or NODES:DEPTH"));
        let mut parts = env.trim().splitn(2, ':');
        b.max_nodes = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        if let Some(d) = parts.next() {
            b.max_depth = d.parse().map_err(|_| bad())?;
        }
    }
    Budget::new(args.max_nodes.unwrap_or(b.max_nodes), args.max_depth.unwrap_or(b.max_depth))
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Validate(input) => Output::report(&load_input(&input)?.validate()),
        Command::Normalize(input) => Output::factorization(&load_input(&input)?.normalized()),
        Command::Move { input, index, direction } => {
            let dir = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Backward => Direction::Backward,
            };
            Output::factorization(&load_input(&input)?.hurwitz_move(index, dir)?)
        }
        Command::Conjugate { input, braid } => {
            let f = load_input(&input)?;
            let q = BraidWord::parse(f.strands(), &braid)?;
            Output::factorization(&f.global_conjugate(&q)?)
        }
        Command::Cancel { input, index } => Output::factorization(&load_input(&input)?.cancel_pair(index)?),
        Command::Create { input, index, conj, theta } => {
            let f = load_input(&input)?;
            let q = BraidWord::parse(f.strands(), &conj)?;
            Output::factorization(&f.create_pair(index, &q, &load_theta(&theta)?)?)
        }
        Command::Equiv { left, right, theta, allow_negative_cusps, budget: b } => {
            let f = load_factorization(&left, allow_negative_cusps)?;
            let g = load_factorization(&right, allow_negative_cusps)?;
            let theta = theta.as_deref().map(load_theta).transpose()?;
            match search::equivalence_search(&f, &g, theta.as_ref(), budget(&b)?)? {
                SearchOutcome::Equivalent(script) => {
                    let lines: Vec<String> = script.iter().map(ToString::to_string).collect();
                    let mut text = format!("equivalent ({} moves)\n", script.len());
                    for l in &lines {
                        text.push_str(&format!("  {l}\n"));
                    }
                    Output::new(EXIT_OK, json!({ "result": "equivalent", "script": script }), text)
                }
                SearchOutcome::Unknown { explored } => Output::new(
                    EXIT_UNKNOWN,
                    json!({ "result": "unknown", "explored": explored }),
                    format!("unknown (explored {explored} states)\n"),
                ),
            }
        }
        Command::Pi1 { input, mode } => {
            let p = van_kampen::presentation_from_factorization(&load_input(&input)?, mode.into())?;
            let s = van_kampen::tietze_simplify(&p, TietzeBudget::default());
            Output::new(
                EXIT_OK,
                json!({
                    "presentation": { "generators": p.generator_count, "relations": rels(&p) },
                    "simplified": { "generators": s.generator_count, "relations": rels(&s) },
                }),
                format!("{p}\nsimplified: {s}\n"),
            )
        }
        Command::H1 { input, mode } => {
            let p = van_kampen::presentation_from_factorization(&load_input(&input)?, mode.into())?;
            let a = van_kampen::abelianization(&p);
            let mut value = serde_json::to_value(&a).expect("invariants serialize");
            value["group"] = Value::from(a.to_string());
            Output::new(EXIT_OK, value, format!("{a}\n"))
        }
        Command::Census(input) => {
            let c = load_input(&input)?.census();
            let text = format!(
                "tangency {}\npositive_nodes {}\nnegative_nodes {}\ncusps {}\nnegative_cusps {}\n",
                c.tangency, c.positive_nodes, c.negative_nodes, c.cusps, c.negative_cusps
            );
            Output::new(EXIT_OK, serde_json::to_value(c).expect("census serializes"), text)
        }
        Command::Cover { theta } => {
            let c = build_cover(&load_theta(&theta)?)?;
            Output::new(
                EXIT_OK,
                json!({ "g": c.genus(), "boundary_count": c.boundary_count(), "rank": c.rank() }),
                format!("g {}\nboundary_count {}\nrank {}\n", c.genus(), c.boundary_count(), c.rank()),
            )
        }
        Command::Lift { theta, braid } => {
            let t = load_theta(&theta)?;
            let q = BraidWord::parse(t.generator_count(), &braid)?;
            match build_cover(&t)?.lift_action(&q) {
                Ok(m) => Output::new(EXIT_OK, json!({ "matrix": m.matrix }), format!("{m}\n")),
                Err(Error::NotLiftable(msg)) => Output::new(
                    EXIT_CHECK,
                    json!({ "liftable": false, "detail": msg }),
                    format!("not liftable: {msg}\n"),
                ),
                Err(e) => return Err(e),
            }
        }
        Command::PencilCheck { theta, fact, allow_negative_cusps } => {
            let f = load_factorization(&fact, allow_negative_cusps)?;
            Output::report(&build_cover(&load_theta(&theta)?)?.pencil_monodromy_check(&f))
        }
        Command::InductValidate { file, no_chain_check } => {
            let data = io::linear_system_from_json(&read(&file)?)?;
            let v = validate_chain(&data, ChainOptions { chain_check: !no_chain_check });
            let code = if !v.pass() {
                EXIT_CHECK
            } else if v.structural_only() {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            let mut out = Output::report(&v.report);
            out.code = code;
            out.json["unverified_levels"] = json!(v.unverified_levels);
            out
        }
    })
}

fn rels(p: &monodromy_core::GroupPresentation) -> Vec<String> {
    p.relations.iter().map(ToString::to_string).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => print!("{}", io::to_json(&out.json)),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
