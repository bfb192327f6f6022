//! Breadth-first exploration of a crystal component with invariant checks.
//!
//! Levels are expanded in parallel and merged in frontier order with the
//! operator order `e1, e2, f1, f2`, so the result does not depend on the
//! number of workers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::connect::{reach_pi_lambda, replay, unit_index};
use super::qseq::QSequence;
use super::strata;
use crate::cartan::{reflect_index, RootIndex};
use crate::error::{Error, Result};
use crate::json::PathRecord;
use crate::lspath::{engine, LSPath, Op};

/// Operator applications are only counted out when `ε`/`φ` is at most this.
const COUNT_CAP: i64 = 64;
const MAX_REPORTED: usize = 100;

const OPS: [(Op, RootIndex); 4] = [
    (Op::E, RootIndex::One),
    (Op::E, RootIndex::Two),
    (Op::F, RootIndex::One),
    (Op::F, RootIndex::Two),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_depth: usize,
    pub max_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_depth: 4,
            max_nodes: 100_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Inverse pairs, weight shifts, `ε`/`φ` bookkeeping, monotone windows.
    CrystalAxioms,
    /// Operator outputs pass validation unchanged.
    Revalidate,
    /// `ι(e_i^max π) = r_i ι(π)` when `⟨ι(π), α_i^∨⟩ < 0`, dually for `κ`.
    IotaKappa,
    /// Every node satisfies some `C(m, n)`, and edges move `m` by at most one
    /// in the direction of the operator.
    Cmn(u32),
    /// Corner bracketing at every `C(m, n)` witness.
    Bracket(u32),
    /// `ℓ(π) >= 2n + 1`.
    LengthBound(u32),
    /// The gap class is that of the seed, and the large gap sits at `1/2`.
    GapClass,
    /// Consecutive directions differ by one (coprime shapes).
    Consecutive,
    /// `reach_pi_lambda` succeeds and replays to `π_λ`.
    Reach,
    /// No junction straddles the unit index.
    UnitBarrier,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::CrystalAxioms => f.write_str("crystal"),
            Check::Revalidate => f.write_str("revalidate"),
            Check::IotaKappa => f.write_str("iota-kappa"),
            Check::Cmn(n) => write!(f, "cmn:{n}"),
            Check::Bracket(n) => write!(f, "bracket:{n}"),
            Check::LengthBound(n) => write!(f, "length:{n}"),
            Check::GapClass => f.write_str("gap-class"),
            Check::Consecutive => f.write_str("consecutive"),
            Check::Reach => f.write_str("reach"),
            Check::UnitBarrier => f.write_str("unit-barrier"),
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown check `{s}`"));
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a.parse::<u32>().map_err(|_| bad())?)),
            None => (s, None),
        };
        Ok(match (name, arg) {
            ("crystal", None) => Check::CrystalAxioms,
            ("revalidate", None) => Check::Revalidate,
            ("iota-kappa", None) => Check::IotaKappa,
            ("cmn", Some(n)) if n >= 1 => Check::Cmn(n),
            ("bracket", Some(n)) if n >= 1 => Check::Bracket(n),
            ("length", Some(n)) => Check::LengthBound(n),
            ("gap-class", None) => Check::GapClass,
            ("consecutive", None) => Check::Consecutive,
            ("reach", None) => Check::Reach,
            ("unit-barrier", None) => Check::UnitBarrier,
            _ => return Err(bad()),
        })
    }
}

impl Check {
    /// The checks that make sense for a seed's shape without extra input.
    pub fn defaults_for(seed: &LSPath) -> Vec<Check> {
        let mut out = vec![Check::CrystalAxioms, Check::Revalidate, Check::IotaKappa];
        let content = seed.orbit().content();
        if content.is_one() {
            out.push(Check::Consecutive);
        }
        if content == BigInt::from(2) {
            out.push(Check::GapClass);
        }
        if unit_index(seed.orbit()).is_some() {
            out.push(Check::UnitBarrier);
            out.push(Check::Reach);
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExploreConfig {
    pub limits: Limits,
    pub checks: Vec<Check>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub path: PathRecord,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckStats {
    pub nodes: u64,
    pub edges: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub seed: PathRecord,
    pub max_depth: usize,
    pub max_nodes: usize,
    pub visited_count: usize,
    pub edge_count: usize,
    pub frontier_exhausted: bool,
    pub limit_exceeded: bool,
    pub depth_reached: usize,
    pub min_length: usize,
    pub max_length: usize,
    pub violation_count: u64,
    pub invariant_violations: Vec<Violation>,
    pub stats: BTreeMap<String, CheckStats>,
}

impl ComponentReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// An `f_i` edge `from → to` between visited nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub i: RootIndex,
}

#[derive(Clone, Debug)]
pub struct Exploration {
    pub report: ComponentReport,
    pub nodes: Vec<LSPath>,
    pub depths: Vec<usize>,
    pub edges: Vec<Edge>,
}

struct Ctx {
    checks: Vec<Check>,
    qs: Option<QSequence>,
    seed_class: Option<u64>,
    unit: Option<i64>,
    pi_lambda: Option<LSPath>,
}

#[derive(Default)]
struct Outcome {
    // (check, is_edge, failure)
    results: Vec<(String, bool, Option<String>)>,
}

impl Outcome {
    fn node(&mut self, check: &Check, failure: Option<String>) {
        self.results.push((check.to_string(), false, failure));
    }

    fn edge(&mut self, check: &Check, failure: Option<String>) {
        self.results.push((check.to_string(), true, failure));
    }
}

struct Expansion {
    neighbors: [Option<LSPath>; 4],
    outcome: Outcome,
}

pub fn explore(seed: &LSPath, config: &ExploreConfig) -> Result<Exploration> {
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InternalInvariant(e.to_string()))?
            .install(|| explore_inner(seed, config)),
        None => explore_inner(seed, config),
    }
}

fn explore_inner(seed: &LSPath, config: &ExploreConfig) -> Result<Exploration> {
    let ctx = build_ctx(seed, &config.checks)?;
    let limits = config.limits;
    let mut nodes = vec![seed.clone()];
    let mut depths = vec![0usize];
    let mut index: HashMap<LSPath, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let mut stats: BTreeMap<String, CheckStats> = ctx
        .checks
        .iter()
        .map(|c| (c.to_string(), CheckStats::default()))
        .collect();
    let mut violations = Vec::new();
    let mut violation_count = 0u64;
    let mut exhausted = true;
    let mut limit_exceeded = false;
    let mut frontier = vec![0usize];
    let mut depth = 0usize;

    while !frontier.is_empty() {
        let expansions: Vec<Expansion> = frontier.par_iter().map(|&id| expand(&ctx, &nodes[id])).collect();
        let mut next = Vec::new();
        for (&id, exp) in frontier.iter().zip(expansions) {
            for (name, is_edge, failure) in exp.outcome.results {
                let st = stats.entry(name.clone()).or_default();
                if is_edge {
                    st.edges += 1;
                } else {
                    st.nodes += 1;
                }
                if let Some(detail) = failure {
                    st.violations += 1;
                    violation_count += 1;
                    if violations.len() < MAX_REPORTED {
                        violations.push(Violation {
                            check: name,
                            path: PathRecord::from(&nodes[id]),
                            detail,
                        });
                    }
                }
            }
            for ((op, i), nb) in OPS.iter().zip(exp.neighbors) {
                let Some(nb) = nb else { continue };
                let target = match index.get(&nb) {
                    Some(&t) => Some(t),
                    None if depth >= limits.max_depth => {
                        exhausted = false;
                        None
                    }
                    None if nodes.len() >= limits.max_nodes => {
                        exhausted = false;
                        limit_exceeded = true;
                        None
                    }
                    None => {
                        let t = nodes.len();
                        index.insert(nb.clone(), t);
                        nodes.push(nb);
                        depths.push(depth + 1);
                        next.push(t);
                        Some(t)
                    }
                };
                if let Some(t) = target {
                    edges.insert(match op {
                        Op::F => Edge { from: id, to: t, i: *i },
                        Op::E => Edge { from: t, to: id, i: *i },
                    });
                }
            }
        }
        frontier = next;
        depth += 1;
    }

    let lengths = nodes.iter().map(LSPath::len);
    let report = ComponentReport {
        seed: PathRecord::from(seed),
        max_depth: limits.max_depth,
        max_nodes: limits.max_nodes,
        visited_count: nodes.len(),
        edge_count: edges.len(),
        frontier_exhausted: exhausted,
        limit_exceeded,
        depth_reached: depths.iter().copied().max().unwrap_or(0),
        min_length: lengths.clone().min().unwrap_or(0),
        max_length: lengths.max().unwrap_or(0),
        violation_count,
        invariant_violations: violations,
        stats,
    };
    Ok(Exploration {
        report,
        nodes,
        depths,
        edges: edges.into_iter().collect(),
    })
}

fn build_ctx(seed: &LSPath, checks: &[Check]) -> Result<Ctx> {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let needs_q = checks.iter().any(|c| matches!(c, Check::Cmn(_) | Check::Bracket(_)));
    let qs = if needs_q {
        Some(QSequence::new(seed.orbit().clone())?)
    } else {
        None
    };
    let seed_class = if checks.contains(&Check::GapClass) {
        Some(strata::z_gap_class(seed)?)
    } else {
        None
    };
    let unit = unit_index(seed.orbit());
    let pi_lambda = if checks.contains(&Check::Reach) {
        if unit.is_none() {
            return Err(Error::NotApplicableForm(
                "reach needs an orbit with a unit coordinate".into(),
            ));
        }
        Some(LSPath::pi_lambda(seed.orbit().clone())?)
    } else {
        None
    };
    Ok(Ctx {
        checks,
        qs,
        seed_class,
        unit,
        pi_lambda,
    })
}

fn expand(ctx: &Ctx, node: &LSPath) -> Expansion {
    let mut outcome = Outcome::default();
    let neighbors: [Option<LSPath>; 4] = OPS.map(|(op, i)| match node.try_apply(op, i) {
        Ok(r) => r,
        Err(err) => {
            outcome
                .results
                .push(("operator".into(), true, Some(format!("{op:?}_{i}: {err}"))));
            None
        }
    });
    for check in &ctx.checks {
        run_check(ctx, check, node, &neighbors, &mut outcome);
    }
    Expansion { neighbors, outcome }
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    cond.then(msg)
}

fn run_check(ctx: &Ctx, check: &Check, node: &LSPath, nbs: &[Option<LSPath>; 4], out: &mut Outcome) {
    let edges = || {
        OPS.iter()
            .zip(nbs.iter())
            .filter_map(|(&(op, i), nb)| nb.as_ref().map(|q| (op, i, q)))
    };
    match check {
        Check::CrystalAxioms => {
            out.node(check, crystal_node(node, nbs).err());
            for (op, i, q) in edges() {
                out.edge(check, crystal_edge(node, op, i, q).err());
            }
        }
        Check::Revalidate => {
            out.node(check, revalidate(node));
            for (_, _, q) in edges() {
                out.edge(check, revalidate(q));
            }
        }
        Check::IotaKappa => out.node(check, iota_kappa(node).err()),
        Check::Cmn(n) => {
            let qs = ctx.qs.as_ref().expect("built for cmn checks");
            let here = match qs.cmn_witnesses(node, *n) {
                Ok(w) => w,
                Err(e) => return out.node(check, Some(e.to_string())),
            };
            out.node(check, fail_if(here.is_empty(), || format!("no C(m, {n}) holds")));
            for (op, i, q) in edges() {
                let there: Vec<i64> = match qs.cmn_witnesses(q, *n) {
                    Ok(w) => w.into_iter().map(|(m, _)| m).collect(),
                    Err(e) => return out.edge(check, Some(e.to_string())),
                };
                let step = if op == Op::E { -1 } else { 1 };
                let bad = here
                    .iter()
                    .find(|&&(m, _)| !there.contains(&m) && !there.contains(&(m + step)))
                    .map(|&(m, _)| {
                        format!(
                            "{op:?}_{i} leaves C({m}, {n}); image {} satisfies C(m) for m in {there:?}",
                            q.compact()
                        )
                    });
                out.edge(check, bad);
            }
        }
        Check::Bracket(n) => {
            let qs = ctx.qs.as_ref().expect("built for bracket checks");
            match qs.cmn_witnesses(node, *n) {
                Ok(ws) => {
                    for (m, v) in ws {
                        let r = qs.bracket_holds(node, m, v, *n);
                        out.node(
                            check,
                            match r {
                                Ok(true) => None,
                                Ok(false) => Some(format!("bracketing fails at C({m}, {n}), v = {v}")),
                                Err(e) => Some(e.to_string()),
                            },
                        );
                    }
                }
                Err(e) => out.node(check, Some(e.to_string())),
            }
        }
        Check::LengthBound(n) => {
            let need = 2 * *n as usize + 1;
            out.node(
                check,
                fail_if(node.len() < need, || format!("length {} < {need}", node.len())),
            );
        }
        Check::GapClass => {
            let class = ctx.seed_class.expect("built for gap checks");
            out.node(check, gap_node(node, class).err());
            for (op, i, q) in edges() {
                let r = strata::z_gap_class(q).map_err(|e| e.to_string()).and_then(|c| {
                    if c == class {
                        Ok(())
                    } else {
                        Err(format!("{op:?}_{i} moves class {class} to {c}: {}", q.compact()))
                    }
                });
                out.edge(check, r.err());
            }
        }
        Check::Consecutive => {
            let bad = node.dirs().windows(2).any(|w| w[0] - w[1] != 1);
            out.node(check, fail_if(bad, || format!("gap in {:?}", node.dirs())));
        }
        Check::Reach => {
            let target = ctx.pi_lambda.as_ref().expect("built for reach checks");
            out.node(check, reach(node, target).err());
            for (_, _, q) in edges() {
                out.edge(check, reach(q, target).err());
            }
        }
        Check::UnitBarrier => {
            if let Some(j0) = ctx.unit {
                let bad = node.kappa() < j0 && j0 <= node.iota();
                out.node(check, fail_if(bad, || format!("junction straddles unit index {j0}")));
            }
        }
    }
}

fn revalidate(p: &LSPath) -> Option<String> {
    match LSPath::validate(p.orbit().clone(), p.dirs().to_vec(), p.sigmas().to_vec()) {
        Ok(q) if &q == p => None,
        Ok(q) => Some(format!("revalidation changed the path to {}", q.compact())),
        Err(e) => Some(format!("revalidation failed: {e}")),
    }
}

fn reach(p: &LSPath, target: &LSPath) -> std::result::Result<(), String> {
    let ops = reach_pi_lambda(p).map_err(|e| e.to_string())?;
    let end = replay(p, &ops).map_err(|e| e.to_string())?;
    if &end == target {
        Ok(())
    } else {
        Err(format!("replay ends at {}", end.compact()))
    }
}

fn gap_node(p: &LSPath, class: u64) -> std::result::Result<(), String> {
    let c = strata::z_gap_class(p).map_err(|e| e.to_string())?;
    if c != class {
        return Err(format!("class {c}, seed class {class}"));
    }
    if !strata::gap_position_ok(p).map_err(|e| e.to_string())? {
        return Err("large gap away from 1/2 or non-integral midpoint".into());
    }
    Ok(())
}

fn count_steps(p: &LSPath, op: Op, i: RootIndex, cap: i64) -> std::result::Result<i64, String> {
    let mut cur = p.clone();
    let mut n = 0;
    while let Some(next) = cur.try_apply(op, i).map_err(|e| e.to_string())? {
        cur = next;
        n += 1;
        if n > cap {
            break;
        }
    }
    Ok(n)
}

fn crystal_node(p: &LSPath, nbs: &[Option<LSPath>; 4]) -> std::result::Result<(), String> {
    let wt = p.weight().map_err(|e| e.to_string())?;
    for (k, i) in RootIndex::ALL.into_iter().enumerate() {
        let hp = p.h_profile(i).map_err(|e| e.to_string())?;
        let eps = -hp.min_value.clone();
        let end = hp.corners.last().expect("nonempty").clone();
        if !end.is_integer() {
            return Err(format!("H_{i}(1) = {end} is not an integer"));
        }
        let phi = end.to_integer() - &hp.min_value;
        if &phi - &eps != wt.pairing(i) {
            return Err(format!(
                "φ_{i} - ε_{i} = {} but ⟨wt, α_{i}^∨⟩ = {}",
                &phi - &eps,
                wt.pairing(i)
            ));
        }
        if nbs[k].is_none() != eps.is_zero() {
            return Err(format!(
                "e_{i} is {} but ε_{i} = {eps}",
                if nbs[k].is_none() { "0" } else { "defined" }
            ));
        }
        if nbs[k + 2].is_none() != phi.is_zero() {
            return Err(format!(
                "f_{i} is {} but φ_{i} = {phi}",
                if nbs[k + 2].is_none() { "0" } else { "defined" }
            ));
        }
        for (op, val) in [(Op::E, &eps), (Op::F, &phi)] {
            let v = val.to_i64().unwrap_or(i64::MAX);
            if v <= COUNT_CAP {
                let counted = count_steps(p, op, i, COUNT_CAP)?;
                if counted != v {
                    return Err(format!("{op:?}_{i} applies {counted} times, expected {v}"));
                }
            }
            window_monotone(p, op, i)?;
        }
    }
    Ok(())
}

fn window_monotone(p: &LSPath, op: Op, i: RootIndex) -> std::result::Result<(), String> {
    let prof = engine::profile(p.orbit(), &p.segments(0), i);
    let Some((t0, t1)) = engine::window(&prof, op).map_err(|e| e.to_string())? else {
        return Ok(());
    };
    for (k, slope) in prof.slopes.iter().enumerate() {
        let (s, e) = (&prof.times[k], &prof.times[k + 1]);
        if s < &t1 && e > &t0 {
            let ok = match op {
                Op::E => slope.is_negative(),
                Op::F => slope.is_positive(),
            };
            if !ok {
                return Err(format!("H_{i} has slope {slope} inside the {op:?} window [{t0}, {t1}]"));
            }
        }
    }
    Ok(())
}

fn crystal_edge(p: &LSPath, op: Op, i: RootIndex, q: &LSPath) -> std::result::Result<(), String> {
    let back = match op {
        Op::E => q.try_f(i),
        Op::F => q.try_e(i),
    }
    .map_err(|e| e.to_string())?;
    if back.as_ref() != Some(p) {
        return Err(format!("{op:?}_{i} is not inverted on {}", q.compact()));
    }
    let alpha = p.cartan().simple_root(i);
    let (wp, wq) = (
        p.weight().map_err(|e| e.to_string())?,
        q.weight().map_err(|e| e.to_string())?,
    );
    let (de, dp) = match op {
        Op::E => (-1, 1),
        Op::F => (1, -1),
    };
    let expected = match op {
        Op::E => &wp + &alpha,
        Op::F => &wp - &alpha,
    };
    if wq != expected {
        return Err(format!("{op:?}_{i} moves the weight from {wp} to {wq}"));
    }
    if q.epsilon(i) != p.epsilon(i) + de || q.phi(i) != p.phi(i) + dp {
        return Err(format!("{op:?}_{i} breaks ε/φ bookkeeping"));
    }
    Ok(())
}

fn iota_kappa(p: &LSPath) -> std::result::Result<(), String> {
    for i in RootIndex::ALL {
        let orbit = p.orbit();
        if orbit.pairing(p.iota(), i).is_negative() && p.epsilon(i) <= BigInt::from(COUNT_CAP) {
            let top = p.e_max(i);
            let want = reflect_index(p.iota(), i);
            if top.iota() != want {
                return Err(format!("ι(e_{i}^max π) = {} but r_{i} ι(π) = {want}", top.iota()));
            }
        }
        if orbit.pairing(p.kappa(), i).is_positive() && p.phi(i) <= BigInt::from(COUNT_CAP) {
            let bottom = p.f_max(i);
            let want = reflect_index(p.kappa(), i);
            if bottom.kappa() != want {
                return Err(format!("κ(f_{i}^max π) = {} but r_{i} κ(π) = {want}", bottom.kappa()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanData, Weight};
    use crate::lspath::shape_orbit;
    use std::collections::HashSet;

    fn seed(a: i64, b: i64, k: i64, l: i64) -> LSPath {
        LSPath::pi_lambda(shape_orbit(CartanData::new(a, b).unwrap(), Weight::from_i64(k, l)).unwrap()).unwrap()
    }

    fn config(depth: usize, checks: Vec<Check>) -> ExploreConfig {
        ExploreConfig {
            limits: Limits {
                max_depth: depth,
                max_nodes: 100_000,
            },
            checks,
            threads: None,
        }
    }

    #[test]
    fn depth_zero() {
        let s = seed(3, 3, 1, -1);
        let ex = explore(&s, &config(0, vec![])).unwrap();
        assert_eq!(ex.report.visited_count, 1);
        assert!(!ex.report.frontier_exhausted);
    }

    #[test]
    fn connected_case_passes_defaults() {
        let s = seed(3, 3, 1, -1);
        let ex = explore(&s, &config(4, Check::defaults_for(&s))).unwrap();
        assert!(ex.report.passed(), "{:?}", ex.report.invariant_violations);
        assert!(ex.report.visited_count > 10);
        assert_eq!(ex.report.depth_reached, 4);
        assert!(ex.report.stats["reach"].nodes as usize == ex.report.visited_count);
    }

    #[test]
    fn cmn_components_are_disjoint() {
        let s = seed(4, 3, 3, -2);
        let qs = QSequence::new(s.orbit().clone()).unwrap();
        let mut sets: Vec<HashSet<LSPath>> = Vec::new();
        for n in 1..=2u32 {
            let checks = vec![
                Check::Cmn(n),
                Check::Bracket(n),
                Check::LengthBound(n),
                Check::CrystalAxioms,
            ];
            let ex = explore(&qs.pi_n(n).unwrap(), &config(3, checks)).unwrap();
            assert!(ex.report.passed(), "{:?}", ex.report.invariant_violations);
            assert!(ex.report.min_length > 2 * n as usize);
            sets.push(ex.nodes.into_iter().collect());
        }
        assert!(sets[0].is_disjoint(&sets[1]));
    }

    #[test]
    fn deterministic_across_workers() {
        let s = seed(3, 3, 2, -2);
        let mut cfg = config(3, Check::defaults_for(&s));
        cfg.threads = Some(1);
        let a = explore(&s, &cfg).unwrap();
        cfg.threads = Some(4);
        let b = explore(&s, &cfg).unwrap();
        assert_eq!(a.report, b.report);
        assert_eq!(a.nodes, b.nodes);
        assert_eq!(a.edges, b.edges);
    }

    #[test]
    fn node_limit() {
        let s = seed(3, 3, 1, -1);
        let mut cfg = config(10, vec![]);
        cfg.limits.max_nodes = 5;
        let ex = explore(&s, &cfg).unwrap();
        assert_eq!(ex.report.visited_count, 5);
        assert!(ex.report.limit_exceeded);
    }

    #[test]
    fn check_names_roundtrip() {
        for c in [
            Check::CrystalAxioms,
            Check::Revalidate,
            Check::IotaKappa,
            Check::Cmn(2),
            Check::Bracket(3),
            Check::LengthBound(1),
            Check::GapClass,
            Check::Consecutive,
            Check::Reach,
            Check::UnitBarrier,
        ] {
            assert_eq!(c.to_string().parse::<Check>().unwrap(), c);
        }
        assert!("cmn:0".parse::<Check>().is_err());
        assert!("nope".parse::<Check>().is_err());
    }
}
