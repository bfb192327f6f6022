//! Acceptance suite: nine criteria, one PASS/FAIL line each.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use lscrystal::analysis::{
    decide_connectedness, explore, gap_seed, Check, Connectedness, ExploreConfig, Limits, QSequence,
};
use lscrystal::cartan::WeylIndex;
use lscrystal::lspath::concat::tensor_pair_factor;
use lscrystal::lspath::{shape_orbit, split, tensor_rule_factor, ConcatPath, Op};
use lscrystal::orbit::{Form, OrbitKind};
use lscrystal::{classify, oracle, CartanData, LSPath, PSequence, RootIndex, StarOrbit, Weight};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const GRID: [(i64, i64); 6] = [(2, 3), (3, 2), (2, 4), (3, 3), (4, 3), (5, 2)];

fn cartan(a: i64, b: i64) -> CartanData {
    CartanData::new(a, b).unwrap()
}

fn orbit(a: i64, b: i64, k: i64, l: i64) -> std::sync::Arc<StarOrbit> {
    shape_orbit(cartan(a, b), Weight::from_i64(k, l)).unwrap()
}

fn pi(a: i64, b: i64, k: i64, l: i64) -> LSPath {
    LSPath::pi_lambda(orbit(a, b, k, l)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid_weights() -> impl Iterator<Item = (i64, i64, i64, i64)> {
    GRID.into_iter().flat_map(|(a, b)| {
        (-4..=4i64).flat_map(move |k| {
            (-4..=4i64)
                .filter(move |&l| (k, l) != (0, 0))
                .map(move |l| (a, b, k, l))
        })
    })
}

fn run_explore(seed: &LSPath, depth: usize, checks: Vec<Check>) -> Result<lscrystal::analysis::Exploration, String> {
    let cfg = ExploreConfig {
        limits: Limits {
            max_depth: depth,
            max_nodes: 1_000_000,
        },
        checks,
        threads: None,
    };
    let ex = explore(seed, &cfg).map_err(|e| e.to_string())?;
    if !ex.report.passed() {
        let v = &ex.report.invariant_violations[0];
        return Err(format!(
            "{} violation(s) from {}; first [{}] {}",
            ex.report.violation_count,
            seed.compact(),
            v.check,
            v.detail
        ));
    }
    Ok(ex)
}

fn c1_closed_form() -> Outcome {
    let mut count = 0;
    for (a, b, k, l) in grid_weights() {
        let c = cartan(a, b);
        let w = Weight::from_i64(k, l);
        let seq = PSequence::for_weight(c, &w);
        for m in -12..=12 {
            let fast = lscrystal::orbit::xm_lambda(&seq, m);
            let slow = c.act_xm_oracle(WeylIndex(m), &w);
            ensure(fast == slow, || format!("({a},{b},{k},{l}) m={m}: {fast} vs {slow}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (cartan, λ, m) triples agree"))
}

fn c2_dichotomy() -> Outcome {
    let (mut stars, mut total) = (0, 0);
    for (a, b, k, l) in grid_weights() {
        let c = cartan(a, b);
        let w = Weight::from_i64(k, l);
        let seq = PSequence::for_weight(c, &w);
        let window: Vec<BigInt> = (-25..=25).map(|m| seq.p(m)).collect();
        let single = window.iter().all(|p| p.is_positive()) || window.iter().all(|p| p.is_negative());
        let cls = classify(c, &w).map_err(|e| e.to_string())?;
        total += 1;
        ensure((cls.kind == OrbitKind::Star) == single, || {
            format!("({a},{b},{k},{l}): {:?} but single-signed = {single}", cls.kind)
        })?;
        if cls.kind != OrbitKind::Star {
            continue;
        }
        stars += 1;
        let can = cls.canonical.clone().unwrap();
        let (k0, l0) = (can.c1.clone(), -can.c2.clone());
        let (ab, bb) = (BigInt::from(a), BigInt::from(b));
        let ok = match cls.form.unwrap() {
            Form::I => l0 <= k0 && k0 < (&ab - 1) * &l0,
            Form::II => k0 < l0 && l0 <= (&bb - 1) * &k0,
        };
        ensure(ok, || {
            format!("({a},{b},{k},{l}): canonical ({k0}, -{l0}) breaks form {:?}", cls.form)
        })?;
    }
    Ok(format!("{total} weights, {stars} star orbits with valid normal forms"))
}

fn c3_sigma_chains() -> Outcome {
    let mut sigmas = Vec::new();
    for d in 2..=60i64 {
        for j in 1..d {
            if j.gcd(&d) == 1 {
                sigmas.push(BigRational::new(j.into(), d.into()));
            }
        }
    }
    let mut count = 0usize;
    let mut positives = 0usize;
    for (a, b, k, l) in [(4, 3, 3, -2), (3, 3, 2, -2)] {
        let o = orbit(a, b, k, l);
        for m in -3..=3i64 {
            for n in (m - 5)..m {
                let slow = oracle::sigma_chain_brute_many(o.cartan(), o.lambda(), m, n, &sigmas);
                for (s, want) in sigmas.iter().zip(slow) {
                    let got = o.sigma_chain_exists(m, n, s).map_err(|e| e.to_string())?;
                    ensure(got == want, || {
                        format!("({a},{b},{k},{l}) m={m} n={n} σ={s}: {got} vs {want}")
                    })?;
                    count += 1;
                    positives += usize::from(got);
                }
            }
        }
    }
    Ok(format!("{count} (m, n, σ) triples agree, {positives} admit a chain"))
}

fn crystal_checks() -> Vec<Check> {
    vec![Check::CrystalAxioms, Check::Revalidate, Check::IotaKappa]
}

fn c4_crystal_axioms() -> Outcome {
    let mut nodes = 0;
    let ex = run_explore(&pi(3, 3, 1, -1), 6, crystal_checks())?;
    nodes += ex.report.visited_count;
    let qs = QSequence::new(orbit(4, 3, 3, -2)).map_err(|e| e.to_string())?;
    for n in 1..=2 {
        let seed = qs.pi_n(n).map_err(|e| e.to_string())?;
        let ex = run_explore(&seed, 4, crystal_checks())?;
        ensure(
            ex.report.stats["crystal"].nodes as usize == ex.report.visited_count,
            || "crystal check skipped nodes".into(),
        )?;
        nodes += ex.report.visited_count;
    }
    Ok(format!("{nodes} nodes, zero violations"))
}

fn c5_connected() -> Outcome {
    let mut summary = Vec::new();
    for (a, b, k, l) in [(3, 3, 1, -1), (2, 3, 1, -1)] {
        let seed = pi(a, b, k, l);
        let mut checks = crystal_checks();
        checks.extend([Check::Reach, Check::UnitBarrier]);
        let ex = run_explore(&seed, 6, checks)?;
        let st = &ex.report.stats["reach"];
        ensure(st.nodes as usize == ex.report.visited_count, || {
            "reach skipped nodes".into()
        })?;
        for p in &ex.nodes {
            let ops = lscrystal::analysis::reach_pi_lambda(p).map_err(|e| e.to_string())?;
            let end = lscrystal::analysis::replay(p, &ops).map_err(|e| e.to_string())?;
            ensure(end == seed, || format!("{} replays to {}", p.compact(), end.compact()))?;
        }
        summary.push(format!(
            "({a},{b},{k},{l}): {} nodes and {} operator images reach π_λ",
            ex.report.visited_count, st.edges
        ));
    }
    Ok(summary.join("; "))
}

fn c6_coprime() -> Outcome {
    let o = orbit(4, 3, 3, -2);
    let qs = QSequence::new(o.clone()).map_err(|e| e.to_string())?;
    for m in -10..=10 {
        let d = qs.q(m) * qs.p(m + 1) - qs.q(m + 1) * qs.p(m);
        ensure(d.is_one(), || format!("q_m p_(m+1) - q_(m+1) p_m = {d} at m = {m}"))?;
    }
    let mut sets: Vec<HashSet<LSPath>> = Vec::new();
    let mut summary = Vec::new();
    for n in 1..=3u32 {
        let seed = qs.pi_n(n).map_err(|e| e.to_string())?;
        let again = LSPath::validate(o.clone(), seed.dirs().to_vec(), seed.sigmas().to_vec())
            .map_err(|e| format!("π^({n}) fails validation: {e}"))?;
        ensure(again == seed, || format!("π^({n}) is not canonical"))?;
        let ex = run_explore(&seed, 4, vec![Check::Cmn(n), Check::Bracket(n), Check::LengthBound(n)])?;
        let closure = &ex.report.stats[&Check::Cmn(n).to_string()];
        ensure(
            closure.nodes as usize == ex.report.visited_count && closure.edges > 0,
            || format!("C-closure not checked on every node and edge of π^({n})"),
        )?;
        ensure(ex.report.min_length > 2 * n as usize, || {
            format!("min length {} in component of π^({n})", ex.report.min_length)
        })?;
        summary.push(format!(
            "n={n}: {} nodes, min ℓ {}",
            ex.report.visited_count, ex.report.min_length
        ));
        sets.push(ex.nodes.into_iter().collect());
    }
    for x in 0..3 {
        for y in (x + 1)..3 {
            ensure(sets[x].is_disjoint(&sets[y]), || {
                format!("components of π^({}) and π^({}) meet", x + 1, y + 1)
            })?;
        }
    }
    Ok(format!(
        "{}; pairwise disjoint; determinant 1 on [-10, 10]",
        summary.join(", ")
    ))
}

fn c7_strata() -> Outcome {
    let base = pi(3, 3, 2, -2);
    let mut summary = Vec::new();
    let mut sets: Vec<HashSet<LSPath>> = Vec::new();
    for r in 0..=2 {
        let seed = gap_seed(&base, r).map_err(|e| e.to_string())?;
        let ex = run_explore(&seed, 5, vec![Check::GapClass, Check::Revalidate])?;
        let st = &ex.report.stats["gap-class"];
        ensure(st.nodes as usize == ex.report.visited_count, || {
            "gap check skipped nodes".into()
        })?;
        summary.push(format!("r={r}: {} nodes, {} edges", ex.report.visited_count, st.edges));
        sets.push(ex.nodes.into_iter().collect());
    }
    ensure(
        sets[0].is_disjoint(&sets[1]) && sets[1].is_disjoint(&sets[2]) && sets[0].is_disjoint(&sets[2]),
        || "strata overlap".into(),
    )?;
    Ok(summary.join(", "))
}

fn random_path(rng: &mut ChaCha8Rng, base: &LSPath) -> LSPath {
    let r = rng.gen_range(0..=2u64);
    let mut p = gap_seed(base, r).unwrap();
    for _ in 0..3 {
        let moves: Vec<LSPath> = [Op::E, Op::F]
            .into_iter()
            .flat_map(|op| RootIndex::ALL.map(|i| (op, i)))
            .filter_map(|(op, i)| p.apply(op, i))
            .collect();
        p = moves[rng.gen_range(0..moves.len())].clone();
    }
    p
}

fn c8_concatenation() -> Outcome {
    let base = pi(3, 3, 2, -2);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut points = 0;
    let mut pairs = 0;
    for _ in 0..50 {
        let p = random_path(&mut rng, &base);
        let factors = split(&p, 2).map_err(|e| e.to_string())?;
        let cp = ConcatPath::new(factors.clone()).map_err(|e| e.to_string())?;
        let mut ts: Vec<BigRational> = (0..=120).map(|j| BigRational::new(j.into(), 120.into())).collect();
        ts.extend(p.sigmas().iter().cloned());
        for t in &ts {
            ensure(cp.evaluate(t).unwrap() == p.evaluate(t).unwrap(), || {
                format!("{} differs at t={t}", p.compact())
            })?;
            points += 1;
        }
        ensure(cp.flatten(p.orbit().clone()).map_err(|e| e.to_string())? == p, || {
            "flatten(split) != id".into()
        })?;
        for op in [Op::E, Op::F] {
            for i in RootIndex::ALL {
                let next = cp.try_apply(op, i).map_err(|e| e.to_string())?;
                let rule = tensor_rule_factor(&factors, op, i);
                let pair = tensor_pair_factor(&factors[0], &factors[1], op, i);
                let changed = next
                    .as_ref()
                    .map(|n| n.factors().iter().zip(&factors).position(|(x, y)| x != y).unwrap());
                ensure(changed == rule && rule == pair, || {
                    format!(
                        "{} {op:?}_{i}: concat {changed:?}, signature {rule:?}, pair {pair:?}",
                        p.compact()
                    )
                })?;
                let whole = p.apply(op, i);
                let glued = next.map(|n| n.flatten(p.orbit().clone()).unwrap());
                ensure(whole == glued, || {
                    format!("{} {op:?}_{i}: operator does not commute with split", p.compact())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "50 paths, {points} evaluation points, {pairs} operator/factor-pair comparisons"
    ))
}

fn c9_decision() -> Outcome {
    let cases = [
        ((2, 3, 1, -1), Connectedness::Connected),
        ((3, 3, 1, -1), Connectedness::Connected),
        ((2, 4, 1, -2), Connectedness::Connected),
        ((4, 3, 3, -2), Connectedness::InfinitelyManyComponents),
        ((3, 3, 2, -2), Connectedness::InfinitelyManyComponents),
        ((5, 2, 3, -2), Connectedness::InfinitelyManyComponents),
        ((3, 3, 1, 1), Connectedness::NotStar),
    ];
    for ((a, b, k, l), want) in cases {
        let c = cartan(a, b);
        let w = Weight::from_i64(k, l);
        let got = decide_connectedness(c, &w);
        ensure(got == want, || format!("({a},{b},{k},{l}): {got}, expected {want}"))?;
        let star = !oracle::meets_chamber(c, &w, 30);
        let unit = oracle::has_unit_coordinate(c, &w, 30);
        let independent = match (star, unit) {
            (false, _) => Connectedness::NotStar,
            (true, true) => Connectedness::Connected,
            (true, false) => Connectedness::InfinitelyManyComponents,
        };
        ensure(independent == got, || {
            format!("({a},{b},{k},{l}): orbit scan gives {independent}")
        })?;
    }
    Ok("7 cases match the expected answers and the independent orbit scan".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("closed form of x_m λ matches reflection folding", c1_closed_form),
        ("classification dichotomy and normal forms", c2_dichotomy),
        ("σ-chain test matches brute-force chains", c3_sigma_chains),
        ("crystal axioms on explored nodes", c4_crystal_axioms),
        ("connected case reaches π_λ from every node", c5_connected),
        ("coprime components π^(n) are closed and disjoint", c6_coprime),
        ("gap class is constant on d = 2 components", c7_strata),
        ("split/concat roundtrip and tensor rule", c8_concatenation),
        ("connectedness decision", c9_decision),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {} PASS  {name} ({detail}) [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
