//! The `finspace` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but a
//! mathematical precondition fails (or a verification fails), and 2 on
//! unreadable input or bad arguments.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::complex::{homology_up_to, order_complex_up_to, HomologyGroup, DEFAULT_MAX_DIM};
use crate::covering::{
    check_deck_action, comma_cover, functor_from_tree_hom, pi0_cover, verify_covering, Covering,
};
use crate::dot::{covering_to_dot, space_to_dot};
use crate::error::{Error, Result};
use crate::group::{hom_from_presentation, FiniteGroup, GroupHom};
use crate::groupoid::{
    abelianization, extend_forest_to_tree, pi1_presentation, Presentation, SpanningTree,
};
use crate::parse::{parse_edges, parse_group_spec, parse_hom_spec, read_poset, write_poset};
use crate::space::FiniteSpace;

#[derive(Parser, Debug)]
#[command(
    name = "finspace",
    version,
    about = "Computations with finite topological spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summary of a space: size, separation, components, minimal open sets.
    Info { file: PathBuf },
    /// Presentation of the fundamental group and its abelianization.
    Pi1 {
        file: PathBuf,
        #[command(flatten)]
        tree: TreeArgs,
        /// Basepoint label (default: least point).
        #[arg(long)]
        basepoint: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Integral homology of the order complex.
    Homology {
        file: PathBuf,
        /// Highest dimension reported.
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        #[arg(long)]
        json: bool,
    },
    /// A maximal tree, optionally extending a given forest.
    Tree {
        file: PathBuf,
        /// Edges the tree must contain, e.g. "a<c,b<d".
        #[arg(long)]
        forest: Option<String>,
    },
    /// Builds the covering defined by a homomorphism into a finite group.
    Cover {
        file: PathBuf,
        #[command(flatten)]
        hom: HomArgs,
        /// Check the covering conditions and the deck action.
        #[arg(long)]
        verify: bool,
        /// Write the total space in the poset format.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the Hasse diagram of the total space as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Checks a total-space poset file against the covering conditions.
    Verify {
        base: PathBuf,
        total: PathBuf,
        #[command(flatten)]
        hom: HomArgs,
    },
    /// The T0 quotient, in the poset format.
    Quotient { file: PathBuf },
    /// Hasse diagram as DOT.
    Dot { file: PathBuf },
}

#[derive(Args, Debug)]
struct TreeArgs {
    /// Maximal tree as an edge list ("a<c,b<c,b<d") or `auto`.
    #[arg(long, default_value = "auto")]
    tree: String,
    /// Edges to seed the automatic tree with.
    #[arg(long)]
    forest: Option<String>,
}

#[derive(Args, Debug)]
struct HomArgs {
    #[command(flatten)]
    tree: TreeArgs,
    #[arg(long)]
    basepoint: Option<String>,
    /// `Zn` or `table:<path>`.
    #[arg(long)]
    group: String,
    /// Generator images, e.g. "g[a<d]->2"; `@path` reads them from a file.
    /// Omitted means the trivial homomorphism.
    #[arg(long)]
    hom: Option<String>,
}

/// Runs the command line on `args` (including the program name), writing
/// reports to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Invariant(format!("write failed: {e}"))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::parse(0, format!("cannot write {}: {e}", path.display())))
}

fn dispatch(cmd: Command, out: &mut Vec<u8>) -> Result<i32> {
    match cmd {
        Command::Info { file } => info(&read_poset(file)?, out),
        Command::Pi1 {
            file,
            tree,
            basepoint,
            json,
        } => pi1(&read_poset(file)?, &tree, basepoint.as_deref(), json, out),
        Command::Homology {
            file,
            max_dim,
            json,
        } => homology(&read_poset(file)?, max_dim, json, out),
        Command::Tree { file, forest } => {
            let x = read_poset(file)?;
            let t = build_tree(
                &x,
                &TreeArgs {
                    tree: "auto".into(),
                    forest,
                },
            )?;
            writeln!(out, "tree: {}", t.display()).map_err(io)?;
            Ok(0)
        }
        Command::Cover {
            file,
            hom,
            verify,
            out: out_path,
            dot,
        } => {
            let x = read_poset(file)?;
            let (h, tree) = build_hom(&x, &hom)?;
            let c = comma_cover(&functor_from_tree_hom(&tree, &h)?);
            writeln!(out, "points: {}", c.total().len()).map_err(io)?;
            writeln!(out, "components: {}", pi0_cover(&c, &h)?).map_err(io)?;
            writeln!(out, "index of image: {}", h.cokernel_size()).map_err(io)?;
            if let Some(p) = out_path {
                write_file(&p, &write_poset(c.total()))?;
            }
            if let Some(p) = dot {
                write_file(&p, &covering_to_dot(&c))?;
            }
            if verify {
                return report(&c, out);
            }
            Ok(0)
        }
        Command::Verify { base, total, hom } => {
            let x = read_poset(base)?;
            let (h, tree) = build_hom(&x, &hom)?;
            let f = functor_from_tree_hom(&tree, &h)?;
            let expected = comma_cover(&f);
            let given = read_poset(total)?;
            let c = Covering::from_total_order(f, align(&given, expected.total())?)?;
            report(&c, out)
        }
        Command::Quotient { file } => {
            let x = read_poset(file)?;
            let q = x.kolmogorov_quotient();
            for class in q.classes.iter().filter(|c| c.len() > 1) {
                let names: Vec<&str> = class.iter().map(|&m| x.label(m)).collect();
                writeln!(out, "# {}", names.join(" ~ ")).map_err(io)?;
            }
            write!(out, "{}", write_poset(&q.space)).map_err(io)?;
            Ok(0)
        }
        Command::Dot { file } => {
            write!(out, "{}", space_to_dot(&read_poset(file)?)).map_err(io)?;
            Ok(0)
        }
    }
}

fn info(x: &FiniteSpace, out: &mut Vec<u8>) -> Result<i32> {
    let strict = x
        .comparabilities()
        .iter()
        .filter(|a| a.src != a.dst)
        .count();
    writeln!(out, "points: {}", x.len()).map_err(io)?;
    writeln!(out, "strict comparabilities: {strict}").map_err(io)?;
    writeln!(out, "T0: {}", if x.is_t0() { "yes" } else { "no" }).map_err(io)?;
    writeln!(out, "components: {}", x.connected_components().len()).map_err(io)?;
    for p in x.points() {
        let u: Vec<&str> = x.minimal_open_set(p)?.iter().map(|&q| x.label(q)).collect();
        writeln!(out, "U({}) = {{{}}}", x.label(p), u.join(", ")).map_err(io)?;
    }
    Ok(0)
}

fn build_tree(x: &FiniteSpace, args: &TreeArgs) -> Result<SpanningTree> {
    if args.tree.trim() == "auto" {
        let forest = match &args.forest {
            Some(f) => parse_edges(x, f)?,
            None => Vec::new(),
        };
        extend_forest_to_tree(x, forest)
    } else {
        if args.forest.is_some() {
            return Err(Error::parse(0, "--forest only applies with --tree auto"));
        }
        SpanningTree::from_edges(x, parse_edges(x, &args.tree)?)
    }
}

fn basepoint(x: &FiniteSpace, label: Option<&str>) -> Result<usize> {
    label.map_or(Ok(0), |l| x.index_of(l))
}

fn presentation(
    x: &FiniteSpace,
    args: &TreeArgs,
    bp: Option<&str>,
) -> Result<(Presentation, SpanningTree)> {
    let tree = build_tree(x, args)?;
    let x0 = basepoint(x, bp)?;
    Ok((pi1_presentation(x, x0, &tree)?, tree))
}

fn build_hom(x: &FiniteSpace, args: &HomArgs) -> Result<(GroupHom, SpanningTree)> {
    let (p, tree) = presentation(x, &args.tree, args.basepoint.as_deref())?;
    let g: FiniteGroup = parse_group_spec(&args.group)?;
    let h = match &args.hom {
        None => GroupHom::trivial(&p, &g),
        Some(spec) => {
            let text = match spec.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::parse(0, format!("cannot read {path}: {e}")))?,
                None => spec.clone(),
            };
            hom_from_presentation(&p, &g, parse_hom_spec(&p, &g, &text)?)?
        }
    };
    Ok((h, tree))
}

/// Re-indexes `given` so that its points line up with `expected`.
fn align(given: &FiniteSpace, expected: &FiniteSpace) -> Result<FiniteSpace> {
    if given.len() != expected.len() {
        return Err(Error::MapNotTotal {
            expected: expected.len(),
            got: given.len(),
        });
    }
    let pos: Vec<usize> = expected
        .labels()
        .iter()
        .map(|l| given.index_of(l))
        .collect::<Result<_>>()?;
    let leq = pos
        .iter()
        .map(|&i| pos.iter().map(|&j| given.leq(i, j)).collect())
        .collect();
    FiniteSpace::from_matrix(expected.labels().to_vec(), leq)
}

fn report(c: &Covering, out: &mut Vec<u8>) -> Result<i32> {
    let r = verify_covering(c);
    writeln!(out, "{r}").map_err(io)?;
    let deck = check_deck_action(c);
    let regular = deck.is_regular();
    writeln!(
        out,
        "deck action: {}",
        if regular { "PASS" } else { "FAIL" }
    )
    .map_err(io)?;
    Ok(if r.passed() && regular { 0 } else { 1 })
}

fn pi1(
    x: &FiniteSpace,
    tree: &TreeArgs,
    bp: Option<&str>,
    json: bool,
    out: &mut Vec<u8>,
) -> Result<i32> {
    let (p, t) = presentation(x, tree, bp)?;
    let ab = abelianization(&p);
    if json {
        let v = json!({
            "basepoint": x.label(p.basepoint()),
            "tree": t.edges().iter().map(|&a| x.arrow_label(a)).collect::<Vec<_>>(),
            "generators": p.generator_names(),
            "relators": p.relator_indices(),
            "abelianization": homology_json(&ab),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
    } else {
        writeln!(out, "basepoint: {}", x.label(p.basepoint())).map_err(io)?;
        writeln!(out, "tree: {}", t.display()).map_err(io)?;
        writeln!(out, "{p}").map_err(io)?;
        writeln!(out, "H1 = {ab}").map_err(io)?;
    }
    Ok(0)
}

fn homology_json(h: &HomologyGroup) -> Value {
    let torsion: Vec<Value> = h
        .torsion
        .iter()
        .map(|t| {
            t.to_u64()
                .map_or_else(|| Value::String(t.to_string()), Value::from)
        })
        .collect();
    json!({ "betti": h.betti, "torsion": torsion })
}

fn homology(x: &FiniteSpace, max_dim: usize, json: bool, out: &mut Vec<u8>) -> Result<i32> {
    let q = x.kolmogorov_quotient();
    let k = order_complex_up_to(&q.space, max_dim + 1)?;
    let groups = homology_up_to(&k, max_dim)?;
    if json {
        let dims: Vec<Value> = groups
            .iter()
            .enumerate()
            .map(|(n, h)| {
                let mut v = homology_json(h);
                v["dimension"] = Value::from(n);
                v
            })
            .collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json!({ "homology": dims })).expect("json")
        )
        .map_err(io)?;
    } else {
        for (n, h) in groups.iter().enumerate() {
            writeln!(out, "H{n} = {h}").map_err(io)?;
        }
    }
    Ok(0)
}
