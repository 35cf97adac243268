use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use tinkit::backbone::{self, ClassParams};
use tinkit::cograph;
use tinkit::generators;
use tinkit::io::{read_gr, read_td, write_gr, write_td};
use tinkit::lift::{self, SubgraphFamily};
use tinkit::mwis::{self, ClassHint, WeightedInstance};
use tinkit::oracle;
use tinkit::patterns::{self, PatternKind};
use tinkit::random;
use tinkit::starpath;
use tinkit::suite;
use tinkit::{Budget, Certificate, Graph, Outcome, TreeDecomposition, VertexSet};

use crate::report::{Exit, RunReport};
use crate::{
    Cli, CographArgs, Command, DecomposeArgs, DetectArgs, Family, GenArgs, LiftArgs, LineTdArgs, MwisArgs, OracleArgs,
    PatternArg, Quantity, Strategy, ValidateArgs, VerifyArgs,
};

pub fn dispatch(cli: &Cli, report: &mut RunReport) -> Result<Exit> {
    let budget = Budget::from_env();
    match &cli.command {
        Command::Gen(a) => gen(a, cli.seed, report),
        Command::Detect(a) => detect(a, budget, report),
        Command::Decompose(a) => decompose(a, budget, report),
        Command::Validate(a) => validate(a, budget, report),
        Command::Oracle(a) => oracle_cmd(a, budget, report),
        Command::Lift(a) => lift_cmd(a, budget, report),
        Command::LineTd(a) => line_td(a, budget, report),
        Command::Cograph(a) => cograph_cmd(a, budget, report),
        Command::Mwis(a) => mwis_cmd(a, budget, report),
        Command::VerifyPaper(a) => verify(a, cli.seed, budget, report),
    }
}

fn load_graph(report: &mut RunReport, path: &Path) -> Result<Graph> {
    let text = report.read_input(path)?;
    read_gr(&text).with_context(|| format!("in {}", path.display()))
}

fn load_td(report: &mut RunReport, path: &Path, n: usize) -> Result<TreeDecomposition> {
    let text = report.read_input(path)?;
    read_td(&text, Some(n)).with_context(|| format!("in {}", path.display()))
}

fn emit_text(report: &mut RunReport, path: Option<&Path>, key: &str, text: String, result: &mut Value) -> Result<()> {
    match path {
        Some(p) => report.write_output(p, &text),
        None => {
            result[key] = json!(text);
            Ok(())
        }
    }
}

fn certificate_json(c: &Certificate) -> Value {
    serde_json::to_value(c).expect("certificates serialize")
}

/// Reports a certificate as the result; exit code 1.
fn certified(report: &mut RunReport, c: &Certificate) -> Result<Exit> {
    report.set_result(json!({"certificate": certificate_json(c)}));
    Ok(Exit::Certificate)
}

fn vertices(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn gen(a: &GenArgs, seed: u64, report: &mut RunReport) -> Result<Exit> {
    let n = a.n;
    let mut rng = random::rng(seed);
    let g = match a.family {
        Family::Path => Graph::path(n),
        Family::Cycle => Graph::cycle(n)?,
        Family::Complete => Graph::complete(n),
        Family::Biclique => Graph::complete_bipartite(n, n),
        Family::Star => Graph::star(n),
        Family::Sp => generators::sp(n)?,
        Family::Tp => generators::tp(n)?,
        Family::Wall => generators::wall(n)?.graph,
        Family::Gn => generators::gn_witness(n)?.graph,
        Family::LineComplete => Graph::complete(n).line_graph().graph,
        Family::Gnp => {
            if !(0.0..=1.0).contains(&a.p) {
                bail!("edge probability {} outside [0, 1]", a.p);
            }
            random::gnp_with(n, a.p, &mut rng)
        }
        Family::Tree => random::random_tree(n, &mut rng),
        Family::Cograph => cograph::random_cograph(n, &mut rng),
    };
    let mut result = json!({"n": g.n(), "m": g.m()});
    emit_text(report, a.output.as_deref(), "gr", write_gr(&g), &mut result)?;
    report.set_result(result);
    Ok(Exit::Success)
}

fn detect(a: &DetectArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    let kind = match a.pattern {
        PatternArg::Star => PatternKind::Star { d: a.size },
        PatternArg::Path => PatternKind::Path { s: a.size },
        PatternArg::Cycle => PatternKind::Cycle { len: a.size },
        PatternArg::S => PatternKind::S { p: a.size },
        PatternArg::T => PatternKind::T { p: a.size },
    };
    match patterns::find_pattern(&g, kind, budget)? {
        Some(c) => certified(report, &c),
        None => {
            report.set_result(json!({"pattern": kind.to_string(), "found": false}));
            Ok(Exit::Success)
        }
    }
}

fn need(v: Option<usize>, flag: &str, strategy: &str) -> Result<usize> {
    v.ok_or_else(|| anyhow!("--{flag} is required for the {strategy} strategy"))
}

fn decompose(a: &DecomposeArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    let (outcome, bound, name) = match a.strategy {
        Strategy::StarPath => {
            let d = need(a.d, "d", "star-path")?;
            let s = need(a.s, "s", "star-path")?;
            let bound = if d >= 2 && s >= 3 {
                Some(starpath::bound(d, s))
            } else {
                None
            };
            (starpath::decompose(&g, d, s, budget)?, bound, "star-path")
        }
        Strategy::Backbone => {
            let d = need(a.d, "d", "backbone")?;
            let p = need(a.p, "p", "backbone")?;
            let params = ClassParams::new(d, p)?;
            match a.k {
                None | Some(1) => (backbone::decompose(&g, d, p, budget)?, Some(params.bound), "backbone"),
                Some(k) => (
                    backbone::decompose_k(&g, d, p, k, budget)?,
                    Some(params.bound_k(k)?),
                    "backbone",
                ),
            }
        }
        Strategy::Cograph => (cograph::decompose_cograph(&g, budget)?, None, "cograph"),
        Strategy::Heuristic => (Outcome::Done(lift::heuristic_td(&g, budget)?), None, "heuristic"),
    };
    let td = match outcome {
        Outcome::Done(td) => td,
        Outcome::Certificate(c) => return certified(report, &c),
    };
    td.validate(&g)
        .map_err(|v| anyhow!("internal error: {name} produced an invalid decomposition: {v}"))?;
    let alpha = td.independence_number(&g, budget)?;
    let bound = bound.unwrap_or_else(|| usize::try_from(td.width() + 1).unwrap_or(0));
    if !report.bound("alpha(T)", alpha, bound) {
        bail!("internal error: alpha(T) = {alpha} exceeds the guaranteed {bound}");
    }
    let mut result = json!({"strategy": name, "bags": td.node_count(), "width": td.width(), "alpha": alpha});
    emit_text(report, a.output.as_deref(), "td", write_td(&td), &mut result)?;
    report.set_result(result);
    Ok(Exit::Success)
}

fn validate(a: &ValidateArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    let td = load_td(report, &a.td, g.n())?;
    if let Err(v) = td.validate(&g) {
        report.set_result(json!({"valid": false, "axiom": v.axiom(), "message": v.to_string()}));
        bail!("invalid tree decomposition: {v}");
    }
    let alpha = td.independence_number(&g, budget)?;
    report.set_result(json!({"valid": true, "bags": td.node_count(), "width": td.width(), "alpha": alpha}));
    Ok(Exit::Success)
}

fn oracle_cmd(a: &OracleArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    let result = match a.quantity {
        Quantity::Alpha => {
            let set = oracle::max_independent_set_within(&g, &g.vertex_set(), budget)?;
            json!({"quantity": "alpha", "value": set.len(), "witness": vertices(&set)})
        }
        Quantity::Tw => {
            let opt = oracle::tw_exact_with_ordering(&g, budget)?;
            json!({"quantity": "tw", "value": opt.value, "ordering": opt.ordering})
        }
        Quantity::Tin => {
            let opt = oracle::tin_exact_with_ordering(&g, budget)?;
            json!({"quantity": "tin", "value": opt.value, "ordering": opt.ordering})
        }
        Quantity::Ibn => {
            let b = oracle::max_induced_biclique(&g, budget)?;
            json!({"quantity": "ibn", "value": b.size(), "left": b.left, "right": b.right})
        }
    };
    report.set_result(result);
    Ok(Exit::Success)
}

fn parse_family(text: &str, host: Graph) -> Result<SubgraphFamily> {
    let sets: Vec<Vec<usize>> = serde_json::from_str(text).context("family must be a JSON array of vertex arrays")?;
    let n = host.n();
    let members = sets
        .into_iter()
        .enumerate()
        .map(|(i, vs)| match vs.iter().find(|&&v| v >= n) {
            Some(v) => Err(anyhow!("family member {i} names vertex {v}, host has {n}")),
            None => Ok(VertexSet::from_iter_in(n, vs)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubgraphFamily::new(host, members)?)
}

fn lift_cmd(a: &LiftArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let host = load_graph(report, &a.host)?;
    let host_td = load_td(report, &a.td, host.n())?;
    host_td
        .validate(&host)
        .map_err(|v| anyhow!("host decomposition is invalid: {v}"))?;
    let text = report.read_input(&a.family)?;
    let fam = parse_family(&text, host)?;
    let ig = lift::intersection_graph(&fam);
    let td = lift::lift_decomposition(&fam, &host_td, budget)?;
    let alpha = td.independence_number(&ig, budget)?;
    let bound = usize::try_from(host_td.width() + 1).unwrap_or(0);
    if !report.bound("alpha(lifted T)", alpha, bound) {
        bail!("internal error: lifted alpha {alpha} exceeds host width + 1 = {bound}");
    }
    let mut result = json!({"members": fam.len(), "host_width": host_td.width(), "alpha": alpha});
    emit_text(report, a.output.as_deref(), "gr", write_gr(&ig), &mut result)?;
    emit_text(report, a.td_out.as_deref(), "td", write_td(&td), &mut result)?;
    report.set_result(result);
    Ok(Exit::Success)
}

fn line_td(a: &LineTdArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    let host = match &a.td {
        Some(p) => Some(load_td(report, p, g.n())?),
        None => None,
    };
    if let Some(td) = &host {
        td.validate(&g)
            .map_err(|v| anyhow!("host decomposition is invalid: {v}"))?;
    }
    let lifted = lift::line_decomposition(&g, host.as_ref(), budget)?;
    let line = &lifted.line.graph;
    let alpha = lifted.decomposition.independence_number(line, budget)?;
    let bound = usize::try_from(lifted.host_width + 1).unwrap_or(0);
    if !report.bound("alpha(line T)", alpha, bound) {
        bail!("internal error: lifted alpha {alpha} exceeds host width + 1 = {bound}");
    }
    let edges: Vec<[usize; 2]> = lifted.line.edges.iter().map(|&(u, v)| [u, v]).collect();
    let mut result = json!({"host_width": lifted.host_width, "alpha": alpha, "line_vertices": edges});
    emit_text(report, a.output.as_deref(), "gr", write_gr(line), &mut result)?;
    emit_text(
        report,
        a.td_out.as_deref(),
        "td",
        write_td(&lifted.decomposition),
        &mut result,
    )?;
    report.set_result(result);
    Ok(Exit::Success)
}

fn cograph_cmd(a: &CographArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    if g.n() == 0 {
        report.set_result(json!({"tin": 0, "cotree": null}));
        return Ok(Exit::Success);
    }
    let tree = match cograph::build_cotree(&g, budget)? {
        Outcome::Done(t) => t,
        Outcome::Certificate(c) => return certified(report, &c),
    };
    let tin = tree.ibn().max(1);
    let td = cograph::decompose_cotree(&tree);
    let alpha = td.independence_number(&g, budget)?;
    if !report.bound("alpha(T)", alpha, tin) {
        bail!("internal error: cotree decomposition has alpha {alpha} above tin {tin}");
    }
    let mut result = json!({"tin": tin, "alpha": tree.alpha(), "ibn": tree.ibn(), "cotree": tree.to_json()});
    if let Some(p) = &a.td_out {
        report.write_output(p, &write_td(&td))?;
    } else {
        result["td"] = json!(write_td(&td));
    }
    report.set_result(result);
    Ok(Exit::Success)
}

fn mwis_cmd(a: &MwisArgs, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let g = load_graph(report, &a.graph)?;
    let text = report.read_input(&a.weights)?;
    let weights = mwis::parse_weights(&text, g.n()).with_context(|| format!("in {}", a.weights.display()))?;
    let inst = WeightedInstance::new(g, weights)?;
    let (weight, set, strategy, alpha) = match &a.td {
        Some(p) => {
            let td = load_td(report, p, inst.graph().n())?;
            let (w, s) = mwis::solve(&inst, &td, budget)?;
            let alpha = td.independence_number(inst.graph(), budget)?;
            (w, s, "supplied", alpha)
        }
        None => {
            let hint = match (a.d, a.s, a.p) {
                (None, None, None) => None,
                (Some(d), Some(s), None) => Some(ClassHint::StarPath { d, s }),
                (Some(d), None, Some(p)) => Some(ClassHint::Backbone { d, p }),
                _ => bail!("a class hint is --d with either --s (star-path) or --p (backbone)"),
            };
            let sol = mwis::solve_auto(&inst, hint, budget)?;
            (sol.weight, sol.set, sol.strategy.name(), sol.alpha)
        }
    };
    report.set_result(json!({
        "weight": mwis::weight_json(&weight),
        "set": vertices(&set),
        "strategy": strategy,
        "alpha": alpha,
    }));
    Ok(Exit::Success)
}

fn verify(a: &VerifyArgs, seed: u64, budget: Budget, report: &mut RunReport) -> Result<Exit> {
    let reports = match a.criterion {
        Some(id) if (1..=9).contains(&id) => vec![suite::run(id, seed, budget)],
        Some(id) => bail!("criteria are numbered 1 to 9, got {id}"),
        None => suite::run_all(seed, budget),
    };
    let deterministic = report.deterministic();
    let mut rows = Vec::new();
    for r in &reports {
        eprintln!("{r}");
        let mut row = json!({"criterion": r.id, "title": r.title, "passed": r.passed, "detail": r.detail});
        if !deterministic {
            row["seconds"] = json!(r.elapsed.as_secs_f64());
        }
        rows.push(row);
    }
    let all = reports.iter().all(|r| r.passed);
    report.set_result(json!({"seed": seed, "all_passed": all, "criteria": rows}));
    Ok(if all { Exit::Success } else { Exit::Certificate })
}
