//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when a `verify-*` command finds a failing
//! identity, 2 on malformed input or usage errors. Output is deterministic:
//! polynomials print in canonical term order and all randomized checks are
//! seeded.

use crate::duality::{self, CanonOptions};
use crate::graphpoly::{self, WeightMap};
use crate::polyring::{LaurentPoly, Var};
use crate::random::{random_graph, GraphConfig};
use crate::ribbon::{graph_from_json, graph_to_json, ArrowRibbonGraph, EdgeId};
use crate::transfer;
use crate::vlink::{parse_gauss, SplitChoice, SplitState, VirtualLinkDiagram};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "arrowpoly",
    about = "Arrow ribbon graph polynomials and virtual link invariants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Input file; "-" reads stdin.
    input: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    /// Arrow dichromatic polynomial.
    Arrow,
    /// Dichromatic polynomial (K variables forgotten).
    Dichromatic,
    /// Classical Tutte polynomial of the underlying graph.
    Tutte,
    /// Arrow Bollobás-Riordan polynomial with formal weights.
    Abr,
    /// Signed unweighted arrow Bollobás-Riordan polynomial.
    Sbr,
    /// Signed dichromatic substitution in q and alpha variables.
    SignedQ,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial invariants of an arrow ribbon graph (JSON input).
    GraphPoly {
        #[command(flatten)]
        common: CommonOpts,
        /// Which polynomial to compute; --arrow is the default.
        #[arg(long = "kind", value_enum, default_value_t = PolyKind::Arrow)]
        kind: PolyKind,
        /// Shorthand for --kind arrow.
        #[arg(long, conflicts_with = "kind")]
        arrow: bool,
        /// Shorthand for --kind dichromatic.
        #[arg(long, conflicts_with_all = ["kind", "arrow"])]
        dichromatic: bool,
        /// Shorthand for --kind tutte.
        #[arg(long, conflicts_with_all = ["kind", "arrow", "dichromatic"])]
        tutte: bool,
    },
    /// Partial dual with respect to an edge subset.
    GraphDual {
        #[command(flatten)]
        common: CommonOpts,
        /// Comma-separated edge ids.
        #[arg(short = 'D', long = "dual-set", conflicts_with = "all")]
        dual_set: Option<String>,
        /// Dualize over all edges (the natural dual).
        #[arg(long)]
        all: bool,
    },
    /// Delete an edge.
    GraphDelete {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(short = 'e', long)]
        edge: String,
    },
    /// Contract an edge.
    GraphContract {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(short = 'e', long)]
        edge: String,
    },
    /// Kauffman bracket of a Gauss code.
    LinkBracket {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Arrow bracket polynomial of a Gauss code.
    LinkArrow {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Jones polynomial of a Gauss code.
    LinkJones {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Normalized arrow polynomial of a Gauss code.
    LinkNormalized {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Signed arrow ribbon graph of a state of a Gauss code.
    LinkGraph {
        #[command(flatten)]
        common: CommonOpts,
        /// State: allA, allB, seifert, disoriented, or comma-separated A/B
        /// letters in crossing-id order.
        #[arg(short = 's', long, default_value = "allA")]
        state: String,
    },
    /// Verify the bracket transfer identity on a Gauss code.
    VerifyThistlethwaite {
        #[command(flatten)]
        common: CommonOpts,
        /// Check every one of the 2^n states.
        #[arg(long)]
        all_states: bool,
        /// Single state to check (same syntax as link-graph --state).
        #[arg(short = 's', long, conflicts_with = "all_states")]
        state: Option<String>,
    },
    /// Verify duality, contraction-deletion, and specialization identities
    /// on a graph (JSON input) with seeded randomized subsets.
    VerifyProperties {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the identity suite on randomly generated graphs.
        #[arg(long, default_value_t = 0)]
        random_graphs: usize,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<ArrowRibbonGraph, CliError> {
    graph_from_json(&read_input(path)?).map_err(|e| CliError::input(e.to_string()))
}

fn load_link(path: &str) -> Result<VirtualLinkDiagram, CliError> {
    parse_gauss(read_input(path)?.trim_end_matches(['\n', '\r']))
        .map_err(|e| CliError::input(e.to_string()))
}

fn poly_json(p: &LaurentPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .map(|(m, c)| {
            let factors: Vec<serde_json::Value> = m
                .vars()
                .map(|v| {
                    let q = m.exponent(v);
                    let exp = if q % 4 == 0 {
                        format!("{}", q / 4)
                    } else if q % 2 == 0 {
                        format!("{}/2", q / 2)
                    } else {
                        format!("{q}/4")
                    };
                    serde_json::json!({ "var": v.to_string(), "exponent": exp })
                })
                .collect();
            serde_json::json!({ "coeff": c.to_string(), "factors": factors })
        })
        .collect();
    serde_json::json!({ "text": p.to_string(), "terms": terms })
}

fn emit_poly(p: &LaurentPoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{p}\n"),
        OutputFormat::Json => format!("{}\n", poly_json(p)),
    }
}

fn emit_graph(g: &ArrowRibbonGraph, _format: OutputFormat) -> String {
    format!("{}\n", graph_to_json(g))
}

fn parse_state(l: &VirtualLinkDiagram, spec: &str) -> Result<SplitState, CliError> {
    match spec {
        "allA" => Ok(l.uniform_state(SplitChoice::A)),
        "allB" => Ok(l.uniform_state(SplitChoice::B)),
        "seifert" => Ok(l.seifert_state()),
        "disoriented" => Ok(l.disoriented_state()),
        other => {
            let letters: Vec<&str> = other.split(',').collect();
            let crossings: Vec<u32> = l.crossings().keys().copied().collect();
            if letters.len() != crossings.len() {
                return Err(CliError::input(format!(
                    "state has {} letters but the diagram has {} crossings",
                    letters.len(),
                    crossings.len()
                )));
            }
            let mut state = SplitState::default();
            for (c, letter) in crossings.into_iter().zip(letters) {
                let choice = match letter.trim() {
                    "A" => SplitChoice::A,
                    "B" => SplitChoice::B,
                    bad => return Err(CliError::input(format!("bad state letter {bad:?}"))),
                };
                state.choice.insert(c, choice);
            }
            Ok(state)
        }
    }
}

fn state_string(s: &SplitState) -> String {
    s.choice
        .values()
        .map(|c| match c {
            SplitChoice::A => 'A',
            SplitChoice::B => 'B',
        })
        .collect()
}

fn edge_subset(g: &ArrowRibbonGraph, spec: &str) -> Result<BTreeSet<EdgeId>, CliError> {
    let mut set = BTreeSet::new();
    for part in spec.split(',') {
        let id = EdgeId(part.trim().to_string());
        if !g.edges.contains_key(&id) {
            return Err(CliError::input(format!("no edge {} in graph", id)));
        }
        set.insert(id);
    }
    Ok(set)
}

/// Runs the identity suite on one graph; appends one PASS/FAIL line per
/// identity and returns whether everything passed.
fn property_report(
    g: &ArrowRibbonGraph,
    rng: &mut ChaCha8Rng,
    out: &mut String,
) -> Result<bool, CliError> {
    use rand::Rng;
    let mut ok = true;
    let opts = CanonOptions {
        max_edges: g.num_edges().max(8),
        ..CanonOptions::default()
    };
    let mut check = |name: &str, pass: bool, out: &mut String| {
        writeln!(out, "{} {}", if pass { "PASS" } else { "FAIL" }, name).unwrap();
        ok &= pass;
    };
    let err = |e: crate::ribbon::GraphError| CliError::input(e.to_string());

    let edges = g.edge_ids();
    let random_subset = |rng: &mut ChaCha8Rng| -> BTreeSet<EdgeId> {
        edges
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect()
    };

    let id = duality::partial_dual(g, &BTreeSet::new()).map_err(err)?;
    check(
        "dual over the empty set is the identity",
        duality::graphs_equivalent(g, &id, &opts).map_err(err)?,
        out,
    );

    let d = random_subset(rng);
    let dd = duality::partial_dual(&duality::partial_dual(g, &d).map_err(err)?, &d).map_err(err)?;
    check(
        "dualizing twice over one set is the identity",
        duality::graphs_equivalent(g, &dd, &opts).map_err(err)?,
        out,
    );

    let d2 = random_subset(rng);
    let lhs = duality::partial_dual(&duality::partial_dual(g, &d).map_err(err)?, &d2).map_err(err)?;
    let sym: BTreeSet<EdgeId> = d.symmetric_difference(&d2).cloned().collect();
    let rhs = duality::partial_dual(g, &sym).map_err(err)?;
    check(
        "iterated duality is duality over the symmetric difference",
        duality::graphs_equivalent(&lhs, &rhs, &opts).map_err(err)?,
        out,
    );

    let dual = duality::partial_dual(g, &d).map_err(err)?;
    check(
        "partial duality preserves orientability",
        g.subgraph_orientable(&g.all_edges()) == dual.subgraph_orientable(&dual.all_edges()),
        out,
    );
    check(
        "partial duality preserves component count",
        g.subgraph_components(&g.all_edges()) == dual.subgraph_components(&dual.all_edges()),
        out,
    );

    // Contraction-deletion against the direct state sum.
    let a_g = graphpoly::arrow_dichromatic(g);
    let mut cd_ok = true;
    let mut a1_ok = true;
    for e in &edges {
        let minus = duality::delete(g, e).map_err(err)?;
        let over = duality::contract(g, e).map_err(err)?;
        let b_e = LaurentPoly::var(Var::b(e.0.clone()));
        let a_minus = graphpoly::arrow_dichromatic(&minus);
        let a_over = graphpoly::arrow_dichromatic(&over);
        if duality::is_orientable_loop(g, e) {
            if duality::is_trivial_orientable_loop(g, e) {
                let b_over_a = LaurentPoly::from_monomial(
                    crate::polyring::Monomial::var(Var::b(e.0.clone()))
                        .mul(&crate::polyring::Monomial::var_pow(Var::SmallA, -4)),
                    1,
                );
                cd_ok &= a_g == &a_minus + &(&b_over_a * &a_over);
            }
        } else {
            cd_ok &= a_g == &a_minus + &(&b_e * &a_over);
        }
        let one = |p: &LaurentPoly| {
            let sigma = std::iter::once((Var::SmallA, LaurentPoly::one())).collect();
            p.substitute(&sigma).expect("constant image")
        };
        a1_ok &= one(&a_g) == &one(&a_minus) + &(&b_e * &one(&a_over));
    }
    check("contraction-deletion matches the state sum", cd_ok, out);
    check("a = 1 recurrence holds for every edge", a1_ok, out);

    // Duality identity at a = 1.
    let mut sigma = std::collections::BTreeMap::new();
    sigma.insert(Var::SmallA, LaurentPoly::one());
    let mut weight = LaurentPoly::one();
    for e in &d {
        weight = &weight * &LaurentPoly::var(Var::b(e.0.clone()));
        sigma.insert(
            Var::b(e.0.clone()),
            LaurentPoly::var_pow(Var::b(e.0.clone()), -4),
        );
    }
    let lhs = {
        let a1 = std::iter::once((Var::SmallA, LaurentPoly::one())).collect();
        a_g.substitute(&a1).expect("constant image")
    };
    let rhs = &weight
        * &graphpoly::arrow_dichromatic(&dual)
            .substitute(&sigma)
            .map_err(|e| CliError::input(e.to_string()))?;
    check("duality identity at a = 1", lhs == rhs, out);

    check(
        "Bollobás-Riordan / dichromatic relation",
        graphpoly::verify_br_z_relation(g, &WeightMap::formal(g))
            .map_err(|e| CliError::input(e.to_string()))?,
        out,
    );

    Ok(ok)
}

fn run_command(cmd: Command) -> Result<(String, i32), CliError> {
    match cmd {
        Command::GraphPoly {
            common,
            kind,
            arrow,
            dichromatic,
            tutte,
        } => {
            let g = load_graph(&common.input)?;
            let kind = if arrow {
                PolyKind::Arrow
            } else if dichromatic {
                PolyKind::Dichromatic
            } else if tutte {
                PolyKind::Tutte
            } else {
                kind
            };
            let p = match kind {
                PolyKind::Arrow => graphpoly::arrow_dichromatic(&g),
                PolyKind::Dichromatic => graphpoly::dichromatic(&g),
                PolyKind::Tutte => graphpoly::tutte(&g),
                PolyKind::Abr => graphpoly::arrow_bollobas_riordan(&g, &WeightMap::formal(&g)),
                PolyKind::Sbr => graphpoly::signed_bollobas_riordan(&g)
                    .map_err(|e| CliError::input(e.to_string()))?,
                PolyKind::SignedQ => graphpoly::signed_dichromatic_substitution(&g)
                    .map_err(|e| CliError::input(e.to_string()))?,
            };
            Ok((emit_poly(&p, common.format), 0))
        }
        Command::GraphDual {
            common,
            dual_set,
            all,
        } => {
            let g = load_graph(&common.input)?;
            let subset = if all {
                g.all_edges()
            } else {
                match &dual_set {
                    Some(spec) => edge_subset(&g, spec)?,
                    None => BTreeSet::new(),
                }
            };
            let dual = duality::partial_dual(&g, &subset)
                .map_err(|e| CliError::input(e.to_string()))?;
            Ok((emit_graph(&dual, common.format), 0))
        }
        Command::GraphDelete { common, edge } => {
            let g = load_graph(&common.input)?;
            let out = duality::delete(&g, &EdgeId(edge))
                .map_err(|e| CliError::input(e.to_string()))?;
            Ok((emit_graph(&out, common.format), 0))
        }
        Command::GraphContract { common, edge } => {
            let g = load_graph(&common.input)?;
            let out = duality::contract(&g, &EdgeId(edge))
                .map_err(|e| CliError::input(e.to_string()))?;
            Ok((emit_graph(&out, common.format), 0))
        }
        Command::LinkBracket { common } => {
            let l = load_link(&common.input)?;
            Ok((emit_poly(&l.kauffman_bracket(), common.format), 0))
        }
        Command::LinkArrow { common } => {
            let l = load_link(&common.input)?;
            Ok((emit_poly(&l.arrow_bracket(), common.format), 0))
        }
        Command::LinkJones { common } => {
            let l = load_link(&common.input)?;
            Ok((emit_poly(&l.jones(), common.format), 0))
        }
        Command::LinkNormalized { common } => {
            let l = load_link(&common.input)?;
            Ok((emit_poly(&l.normalized_arrow(), common.format), 0))
        }
        Command::LinkGraph { common, state } => {
            let l = load_link(&common.input)?;
            let s = parse_state(&l, &state)?;
            Ok((emit_graph(&transfer::state_graph(&l, &s), common.format), 0))
        }
        Command::VerifyThistlethwaite {
            common,
            all_states,
            state,
        } => {
            let l = load_link(&common.input)?;
            let states = if all_states || state.is_none() {
                l.states()
            } else {
                vec![parse_state(&l, state.as_deref().unwrap())?]
            };
            let mut out = String::new();
            let mut passed = 0usize;
            for s in &states {
                let report = transfer::thistlethwaite_verify(&l, s);
                writeln!(
                    out,
                    "state {} {}",
                    if s.choice.is_empty() {
                        "-".to_string()
                    } else {
                        state_string(s)
                    },
                    if report.equal { "PASS" } else { "FAIL" }
                )
                .unwrap();
                passed += report.equal as usize;
            }
            writeln!(
                out,
                "{}/{} states PASS",
                passed,
                states.len()
            )
            .unwrap();
            let code = if passed == states.len() { 0 } else { 1 };
            Ok((out, code))
        }
        Command::VerifyProperties {
            common,
            seed,
            random_graphs,
        } => {
            let g = load_graph(&common.input)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = String::new();
            let mut all_ok = property_report(&g, &mut rng, &mut out)?;
            let cfg = GraphConfig::default();
            for i in 0..random_graphs {
                writeln!(out, "random graph {i}").unwrap();
                let rg = random_graph(&mut rng, &cfg);
                all_ok &= property_report(&rg, &mut rng, &mut out)?;
            }
            writeln!(out, "{}", if all_ok { "ALL PASS" } else { "FAILURES" }).unwrap();
            Ok((out, if all_ok { 0 } else { 1 }))
        }
    }
}

/// Entry point shared by the binary and the integration tests. Returns the
/// stdout text and exit code.
pub fn run(argv: &[String]) -> (String, String, i32) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; usage errors exit 2.
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                (rendered, String::new(), 0)
            } else {
                (String::new(), rendered, 2)
            };
        }
    };
    match run_command(cli.command) {
        Ok((stdout, code)) => (stdout, String::new(), code),
        Err(e) => (String::new(), format!("error: {}\n", e.message), e.code),
    }
}
