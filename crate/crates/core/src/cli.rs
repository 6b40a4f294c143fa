//! Command-line front end.
//!
//! Exit codes: 0 on success or a true verdict, 1 when a checked property
//! fails (or a divisibility query has no witness), 2 on usage errors and
//! malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalan::{decode, encode, CatalanWord};
use crate::category::{property_f_decomposition, pushout_report};
use crate::embedding::{enumerate_morphisms, Category, OrderEmbedding};
use crate::groebner::{chain_stabilization_demo, monomials_up_to};
use crate::order::{divides, good_pair_search, minimal_members, PointedMorphismSet, ProbeLine};
use crate::tree::{enumerate_planar_trees, PlanarRootedTree, VertexId};

/// Golden Catalan word of the worked example morphism.
pub const PAPER_EXAMPLE_WORD: &str = include_str!("../data/paper_example.catalan");

/// The worked example: `(())()` into a 13-vertex tree.
pub const PAPER_EXAMPLE_MORPHISM: &str = "(())() -> ((((()()))())((()()()))) : [0,2,4,8]";

#[derive(Debug, Parser)]
#[command(name = "treecat", about = "Planar rooted trees, order embeddings and Catalan words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the morphisms between two trees.
    Enumerate {
        #[arg(long = "cat")]
        category: Category,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Catalan word of a PT morphism.
    Encode {
        #[arg(long, allow_hyphen_values = true)]
        morphism: String,
    },
    /// PT morphism of a Catalan word.
    Decode {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Compare two Catalan words.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
    },
    /// Find h with g = h∘f.
    Divides {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// All plane structures on a rooted tree.
    PlanarReps {
        #[arg(long, allow_hyphen_values = true)]
        tree: String,
    },
    /// Check T(U, J(V)) against the PT hom-sets of U's plane structures.
    Propf {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Check the pushout square obtained by cutting a tree at a vertex.
    PushoutCheck {
        #[arg(long, allow_hyphen_values = true)]
        tree: String,
        #[arg(long)]
        vertex: usize,
        #[arg(long, allow_hyphen_values = true)]
        probe: String,
    },
    /// Random bad-sequence probes.
    Lab {
        #[command(subcommand)]
        command: LabCommand,
    },
    /// Monomial ideal experiments.
    Groebner {
        #[command(subcommand)]
        command: GroebnerCommand,
    },
    /// Reproduce the worked Catalan word example.
    PaperExample,
}

#[derive(Debug, Subcommand)]
enum LabCommand {
    /// Sample a seeded sequence of PT morphisms and search it for a good pair.
    GoodPairs {
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        len: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GroebnerCommand {
    /// Feed every monomial up to a size cap into a generating set.
    Demo {
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long)]
        cap: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(stdout: String, holds: bool) -> Self {
        Output {
            code: if holds { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Output {
            code: 2,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn tree(s: &str) -> Result<PlanarRootedTree, UsageError> {
    Ok(PlanarRootedTree::parse_brackets(s.trim())?)
}

fn lines<I: IntoIterator<Item = S>, S: AsRef<str>>(items: I) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(item.as_ref());
        out.push('\n');
    }
    out
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output::usage(rendered)
            } else {
                Output::ok(rendered)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(UsageError(message)) => Output::usage(format!("error: {message}\n")),
    }
}

fn execute(command: Command) -> Result<Output, UsageError> {
    match command {
        Command::Enumerate {
            category,
            from,
            to,
            count_only,
            json,
        } => {
            let homs = enumerate_morphisms(&tree(&from)?, &tree(&to)?, category);
            let items: Vec<String> = if count_only {
                vec![homs.len().to_string()]
            } else {
                homs.iter().map(ToString::to_string).collect()
            };
            if json {
                Ok(Output::ok(serde_json::to_string(&items)? + "\n"))
            } else {
                Ok(Output::ok(lines(items)))
            }
        }
        Command::Encode { morphism } => {
            let f = OrderEmbedding::parse(&morphism, Category::PT)?;
            Ok(Output::ok(lines([encode(&f)?.to_string()])))
        }
        Command::Decode { word } => {
            let w: CatalanWord = word.parse()?;
            Ok(Output::ok(lines([decode(&w)?.to_string()])))
        }
        Command::Compare { w1, w2 } => {
            let a: CatalanWord = w1.parse()?;
            let b: CatalanWord = w2.parse()?;
            let verdict = match a.cmp(&b) {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            };
            Ok(Output::ok(lines([verdict])))
        }
        Command::Divides { f, g } => {
            let f = OrderEmbedding::parse(&f, Category::PT)?;
            let g = OrderEmbedding::parse(&g, Category::PT)?;
            Ok(match divides(&f, &g)? {
                Some(h) => Output::ok(lines([format!("WITNESS {h}")])),
                None => Output::verdict(lines(["NONE"]), false),
            })
        }
        Command::PlanarReps { tree: t } => {
            let u = tree(&t)?.canonical_rooted();
            Ok(Output::ok(lines(u.planar_representations().iter().map(|p| p.to_brackets()))))
        }
        Command::Propf { u, v } => {
            let u = tree(&u)?.canonical_rooted();
            let d = property_f_decomposition(&u, &tree(&v)?);
            let holds = d.lhs.len() == d.rhs_total() && d.is_bijective();
            let out = lines(["U | V | lhs | rhs_1 … rhs_e | ok".to_string(), d.table_row()]);
            Ok(Output::verdict(out, holds))
        }
        Command::PushoutCheck { tree: t, vertex, probe } => {
            let t = tree(&t)?;
            t.check_vertex(VertexId(vertex))?;
            let report = pushout_report(&t, VertexId(vertex), &tree(&probe)?);
            let tag = if report.holds() { "OK" } else { "FAIL" };
            Ok(Output::verdict(lines([format!("{tag} {report}")]), report.holds()))
        }
        Command::Lab {
            command:
                LabCommand::GoodPairs {
                    base,
                    max_size,
                    seed,
                    len,
                },
        } => good_pairs_lab(&tree(&base)?, max_size, seed, len),
        Command::Groebner {
            command: GroebnerCommand::Demo { base, cap },
        } => {
            let base = tree(&base)?;
            let stream = monomials_up_to(&base, cap);
            let run = chain_stabilization_demo(&base, &stream, cap)?;
            let mut out = String::new();
            for g in run.generators.generators() {
                writeln!(out, "GEN {g}").unwrap();
            }
            writeln!(out, "STABLE@{}", run.index).unwrap();
            Ok(Output::ok(out))
        }
        Command::PaperExample => {
            let f = OrderEmbedding::parse(PAPER_EXAMPLE_MORPHISM, Category::PT)?;
            let golden: CatalanWord = PAPER_EXAMPLE_WORD.parse()?;
            let word = encode(&f)?;
            let back = decode(&golden)?;
            let holds = word == golden && back == f;
            let out = lines([
                f.to_string(),
                word.to_string(),
                (if holds { "OK" } else { "FAIL" }).to_string(),
            ]);
            Ok(Output::verdict(out, holds))
        }
    }
}

fn good_pairs_lab(base: &PlanarRootedTree, max_size: usize, seed: u64, len: usize) -> Result<Output, UsageError> {
    // PT morphisms out of `base`, grouped by codomain size
    let pools: Vec<Vec<OrderEmbedding>> = (base.n_vertices()..=max_size)
        .map(|n| {
            enumerate_planar_trees(n)
                .iter()
                .flat_map(|u| enumerate_morphisms(base, u, Category::PT))
                .collect::<Vec<_>>()
        })
        .filter(|pool| !pool.is_empty())
        .collect();
    if pools.is_empty() {
        return Err(UsageError(format!(
            "no PT morphisms out of {base:?} with codomain of at most {max_size} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<OrderEmbedding> = (0..len)
        .map(|_| {
            let pool = pools.choose(&mut rng).expect("pools nonempty");
            pool.choose(&mut rng).expect("pool nonempty").clone()
        })
        .collect();

    let mut out = String::new();
    for (i, f) in seq.iter().enumerate() {
        writeln!(out, "SEQ {i} {f}").unwrap();
    }
    match good_pair_search(&seq)? {
        Some(pair) => {
            writeln!(out, "{}", ProbeLine::Good { i: pair.i, j: pair.j }).unwrap();
            writeln!(out, "WITNESS {}", pair.witness).unwrap();
        }
        None => writeln!(out, "{}", ProbeLine::Bad).unwrap(),
    }
    let mut distinct: Vec<OrderEmbedding> = Vec::new();
    for f in seq {
        if !distinct.contains(&f) {
            distinct.push(f);
        }
    }
    let set = PointedMorphismSet::new(base.clone(), distinct)?;
    writeln!(out, "{}", ProbeLine::Antichain(minimal_members(&set).len())).unwrap();
    Ok(Output::ok(out))
}
