//! Acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion over all of them.

mod common;

use common::{all_whiskers, j, random_cmvwc_family, random_whiskers};
use covertool::betti::betti_oracle;
use covertool::depth::{analytic_spread, depth_table, min_suppy_witnesses};
use covertool::fixtures::{fix1, fix2, fix3};
use covertool::ideal::cover_ideal_recursive;
use covertool::lq::{hs_ideal, linear_quotients_check, LqOutcome, QuotientTrace};
use covertool::normality::{decomposition_certificate, normality_certify, persistence_check, DecompositionNode, Verdict};
use covertool::rees::{
    default_t_order, l_exchange_check, rees_groebner, structure_and_quadraticity_check, toric_ideal, verify_groebner,
    Binomial, GroebnerBasis,
};
use covertool::scan::{scan, Check, Mode, ScanConfig};
use covertool::{power, Caps, Graph, MonomialIdeal, OrderSpec};
use serde_json::Value;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

/// Everything produced along the way, for the invariant criterion.
#[derive(Default)]
struct Seen {
    covers: Vec<(Graph, MonomialIdeal)>,
    powers: Vec<(MonomialIdeal, u32)>,
    ideals: Vec<MonomialIdeal>,
    bases: Vec<GroebnerBasis>,
}

impl Seen {
    fn cover(&mut self, g: &Graph) -> MonomialIdeal {
        let i = j(g);
        self.covers.push((g.clone(), i.clone()));
        i
    }

    fn power(&mut self, i: &MonomialIdeal, k: u32) -> MonomialIdeal {
        let p = power(i, k).unwrap();
        self.powers.push((p.clone(), k));
        p
    }

    fn ideal(&mut self, i: &MonomialIdeal) {
        self.ideals.push(i.clone());
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:.1?}, limit {limit:?}"));
    }
    Ok(())
}

fn order_a_trace(i: &MonomialIdeal) -> Result<QuotientTrace, String> {
    let n = i.ring().pairs().unwrap();
    linear_quotients_check(i, &OrderSpec::order_a(n))
        .unwrap()
        .into_trace()
        .map_err(|e| format!("{}: {e}", i.format()))
}

const FIX2_GENS: [&str; 8] = [
    "x1*x2*x3*x4*x5*x6",
    "x1*x2*x3*x4*x5*y6",
    "x1*x2*x3*x4*y5*x6",
    "x1*x2*x3*x4*y5*y6",
    "x1*x2*x3*y4*y5*y6",
    "x1*x2*y3*y4*y5*y6",
    "x1*y2*x3*x4*x5*x6",
    "y1*x2*x3*x4*x5*x6",
];

/// The basis exactly as printed, including the repeated entry.
const FIX2_BASIS_PRINTED: [&str; 9] = [
    "x6*t2 - y6*t1",
    "x5*t3 - y5*t1",
    "x6*t4 - y6*t3",
    "x5*t3 - y5*t1",
    "x4*t5 - y4*t4",
    "x3*t6 - y3*t5",
    "x2*t7 - y2*t1",
    "x1*t8 - y1*t1",
    "t1*t4 - t2*t3",
];

fn c1(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let i = seen.cover(&fix2());
    within(start, Duration::from_secs(1), "cover ideal")?;
    let ring = i.ring();
    let expected: Vec<_> = FIX2_GENS.iter().map(|s| ring.parse_monomial(s).unwrap()).collect();
    if i.gens() != expected.as_slice() {
        return Err(format!("got {}", i.format()));
    }
    Ok(format!("8 generators in order, {:.1?}", start.elapsed()))
}

fn c2(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let i = seen.cover(&fix2());
    let base = OrderSpec::order_a(6);
    let p = rees_groebner(&i, &base, &default_t_order(&i, &base), &Caps::default()).unwrap();
    within(start, Duration::from_secs(30), "Rees basis")?;
    seen.bases.push(p.basis.clone());
    let got: BTreeSet<String> = p.basis.elements.iter().map(|b| b.format(&p.ring)).collect();
    let printed: BTreeSet<String> = FIX2_BASIS_PRINTED
        .iter()
        .map(|s| p.ring.parse_binomial(s, &p.basis.order).unwrap().format(&p.ring))
        .collect();
    if got != printed {
        let extra: Vec<_> = got.difference(&printed).collect();
        let missing: Vec<_> = printed.difference(&got).collect();
        return Err(format!(
            "computed {} elements, printed list has {} distinct; computed only {extra:?}, printed only {missing:?}",
            got.len(),
            printed.len()
        ));
    }
    Ok(format!("{} elements", got.len()))
}

fn c3(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let mut graphs = all_whiskers(4);
    graphs.extend(random_whiskers(5, 30, 3));
    let mut checked = 0;
    for g in &graphs {
        let n = g.pairs().unwrap();
        let i = seen.cover(g);
        for k in 1..=3 {
            let p = seen.power(&i, k);
            if !linear_quotients_check(&p, &OrderSpec::order_a(n)).unwrap().is_success() {
                return Err(format!("J^{k} of {:?} has no linear quotients", g.edges()));
            }
            checked += 1;
        }
    }
    within(start, Duration::from_secs(600), "sweep")?;
    Ok(format!("{checked} powers over {} whiskers, {:.1?}", graphs.len(), start.elapsed()))
}

/// Graphs, powers and traces shared by the HS criteria.
fn hs_instances(seen: &mut Seen) -> Vec<(MonomialIdeal, QuotientTrace)> {
    let mut graphs = all_whiskers(3);
    graphs.extend(random_whiskers(4, 10, 4));
    let mut out = Vec::new();
    for g in &graphs {
        let i = seen.cover(g);
        for ell in 1..=2 {
            let p = seen.power(&i, ell);
            let t = order_a_trace(&p).unwrap();
            out.push((p, t));
        }
    }
    out
}

fn c4(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (p, trace) in hs_instances(seen) {
        let n = p.ring().pairs().unwrap();
        for k in 1..=trace.max_set_size() {
            let hs = hs_ideal(&trace, k).map_err(|e| e.to_string())?;
            seen.ideal(&hs);
            if hs.is_zero() {
                continue;
            }
            checked += 1;
            if let LqOutcome::Failure(f) = linear_quotients_check(&hs, &OrderSpec::order_b(n)).unwrap() {
                let ring = p.ring();
                failures.push(format!(
                    "HS_{k} of {} fails at {} with colon generator {}",
                    p.format(),
                    ring.format(&f.generator),
                    ring.format(&f.witness)
                ));
            }
        }
    }
    within(start, Duration::from_secs(600), "sweep")?;
    if let Some(first) = failures.first() {
        return Err(format!("{} of {checked} nonzero shift ideals fail; first: {first}", failures.len()));
    }
    Ok(format!("{checked} nonzero shift ideals, {:.1?}", start.elapsed()))
}

fn c5(seen: &mut Seen) -> Outcome {
    let mut compared = 0;
    for (p, trace) in hs_instances(seen) {
        if p.ring().nvars() > 12 || p.len() > 60 {
            continue;
        }
        let betti = betti_oracle(&p, &Caps::default()).unwrap();
        for k in 0..=p.ring().nvars() {
            let hs = hs_ideal(&trace, k).unwrap();
            let oracle = MonomialIdeal::new(p.ring().clone(), betti.multidegrees(k)).unwrap();
            if hs != oracle {
                return Err(format!("HS_{k} of {}: {} vs Betti {}", p.format(), hs.format(), oracle.format()));
            }
        }
        compared += 1;
    }
    Ok(format!("{compared} ideals agree in every homological degree"))
}

fn c6(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let graphs = all_whiskers(4);
    for g in &graphs {
        let n = g.pairs().unwrap();
        let t = depth_table(g, n as u32 + 1, &Caps::default()).unwrap();
        let i = seen.cover(g);
        let ctx = || format!("base edges {:?}: {:?}", g.edges(), t.depths());
        if !t.is_non_increasing() {
            return Err(format!("depth increases, {}", ctx()));
        }
        if t.rows.iter().filter(|r| r.k as usize >= n).any(|r| r.depth != n - 1) {
            return Err(format!("depth at k >= n is not n - 1, {}", ctx()));
        }
        if t.dstab_observed as usize > n {
            return Err(format!("dstab {} > n, {}", t.dstab_observed, ctx()));
        }
        let l = analytic_spread(&i).unwrap();
        if l != n + 1 {
            return Err(format!("analytic spread {l} != n + 1, {}", ctx()));
        }
    }
    within(start, Duration::from_secs(300), "depth suite")?;
    Ok(format!("{} whiskers, {:.1?}", graphs.len(), start.elapsed()))
}

fn tree_violations(node: &DecompositionNode) -> usize {
    usize::from(!node.containment) + node.children.iter().map(tree_violations).sum::<usize>()
}

fn c7(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let caps = Caps::default();
    let mut runs: Vec<(Graph, Option<u32>)> = vec![(fix1(), None), (fix2(), Some(2))];
    runs.extend(random_cmvwc_family(4, 10, 7).into_iter().map(|g| (g, Some(2))));
    for (g, k) in &runs {
        let i = seen.cover(g);
        let cert = normality_certify(&i, *k, &caps).unwrap();
        if cert.is_failure() {
            return Err(format!("{}: {:?}", i.format(), cert.verdict));
        }
        if k.is_none() && cert.verdict != Verdict::CertifiedNormal {
            return Err(format!("{}: full bound not reached, {:?}", i.format(), cert.notes));
        }
        let d = decomposition_certificate(g).unwrap();
        let bad = d.tree.as_ref().map_or(1, tree_violations);
        if d.verdict != Verdict::CertifiedNormal || bad > 0 {
            return Err(format!("decomposition of {:?}: {:?}, {bad} containment violations", g.edges(), d.verdict));
        }
    }
    within(start, Duration::from_secs(600), "normality")?;
    Ok(format!("{} graphs, {:.1?}", runs.len(), start.elapsed()))
}

fn c8(seen: &mut Seen) -> Outcome {
    let mut graphs = vec![fix1(), fix3()];
    graphs.extend(random_cmvwc_family(3, 5, 8));
    for g in &graphs {
        let i = seen.cover(g);
        let r = persistence_check(&i, 3, &Caps::default()).unwrap();
        if !r.passed() {
            return Err(format!("{}: {:?}", i.format(), r.first_violation));
        }
    }
    Ok(format!("{} graphs up to k = 3", graphs.len()))
}

fn c9(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let mut graphs = all_whiskers(3);
    graphs.extend(random_whiskers(4, 5, 9));
    for g in &graphs {
        let i = seen.cover(g);
        let base = OrderSpec::order_a(g.pairs().unwrap());
        let r = l_exchange_check(&i, &base, &default_t_order(&i, &base), 2, &Caps::default()).unwrap();
        if !r.passed() {
            return Err(format!("{}: {:?}", i.format(), r.counterexample));
        }
    }
    within(start, Duration::from_secs(600), "exchange sweep")?;
    Ok(format!("{} whiskers, {:.1?}", graphs.len(), start.elapsed()))
}

/// `x_i t_u - y_i t_w` for every generator `u`, every `y_i | u` and
/// `w = x_i u / y_i` a generator, written out by hand.
fn expected_swaps(i: &MonomialIdeal) -> BTreeSet<String> {
    let n = i.ring().pairs().unwrap();
    let gens = i.gens();
    let mut out = BTreeSet::new();
    for (a, u) in gens.iter().enumerate() {
        for p in 0..n {
            if u.0[n + p] == 0 {
                continue;
            }
            let mut w = u.clone();
            w.0[n + p] -= 1;
            w.0[p] += 1;
            if let Some(c) = gens.iter().position(|g| *g == w) {
                out.insert(format!("x{}*t{} - y{}*t{}", p + 1, a + 1, p + 1, c + 1));
            }
        }
    }
    out
}

fn c10(seen: &mut Seen) -> Outcome {
    let graphs = all_whiskers(3);
    for g in &graphs {
        let i = seen.cover(g);
        let base = OrderSpec::order_a(g.pairs().unwrap());
        let t_order = default_t_order(&i, &base);
        let p = rees_groebner(&i, &base, &t_order, &Caps::default()).unwrap();
        let t = toric_ideal(&i, &t_order, &Caps::default()).unwrap();
        seen.bases.push(p.basis.clone());
        seen.bases.push(t.basis.clone());
        let r = structure_and_quadraticity_check(&p.ring, &p.basis, Some(&t.basis));
        let mixed: BTreeSet<String> = r.mixed.iter().map(|b: &Binomial| b.format(&p.ring)).collect();
        let expected = expected_swaps(&i);
        if mixed != expected {
            return Err(format!("{}: mixed {mixed:?}, expected {expected:?}", i.format()));
        }
        if !r.cor411_form || !r.quadratic {
            return Err(format!("{}: {:?}", i.format(), r.exceptions));
        }
    }
    Ok(format!("{} whiskers", graphs.len()))
}

fn c11(seen: &mut Seen) -> Outcome {
    let mut graphs = vec![fix1(), fix2(), fix3()];
    graphs.extend(all_whiskers(4));
    for g in &graphs {
        let a = seen.cover(g);
        let b = cover_ideal_recursive(g).unwrap();
        seen.ideal(&b);
        if a != b {
            return Err(format!("{:?}: {} vs {}", g.edges(), a.format(), b.format()));
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn c12(seen: &Seen) -> Outcome {
    let mut violations = Vec::new();
    for (g, i) in &seen.covers {
        let n = g.pairs().unwrap();
        for u in i.gens() {
            let paired = (0..n).all(|p| u.0[p] + u.0[n + p] == 1);
            if !u.is_squarefree() || u.degree() as usize != n || !paired {
                violations.push(format!("cover generator {}", i.ring().format(u)));
            }
        }
        match min_suppy_witnesses(g, &Caps::default()) {
            Ok(w) if w.len() == n => {
                for (p, u) in w.iter().enumerate() {
                    if (0..n).find(|&q| u.0[n + q] > 0) != Some(p) || !i.gens().contains(u) {
                        violations.push(format!("witness {p} of {}", i.format()));
                    }
                }
            }
            other => violations.push(format!("witnesses of {}: {other:?}", i.format())),
        }
    }
    for (p, k) in &seen.powers {
        let n = p.ring().pairs().unwrap();
        if p.gens().iter().any(|u| (0..n).any(|q| (u.0[q] + u.0[n + q]) as u32 != *k)) {
            violations.push(format!("pairing in power {k} of a {n}-pair ideal"));
        }
    }
    let all = seen.covers.iter().map(|(_, i)| i).chain(seen.powers.iter().map(|(p, _)| p)).chain(&seen.ideals);
    let mut ideals = 0;
    for i in all {
        ideals += 1;
        let g = i.gens();
        for a in 0..g.len() {
            for b in 0..g.len() {
                if a != b && g[a].divides(&g[b]) {
                    violations.push(format!("{} divides {}", i.ring().format(&g[a]), i.ring().format(&g[b])));
                }
            }
        }
    }
    for b in &seen.bases {
        if let Err(pair) = verify_groebner(b).unwrap() {
            violations.push(format!("S-pair {pair:?} does not reduce to zero"));
        }
    }
    if !violations.is_empty() {
        violations.truncate(10);
        return Err(violations.join("; "));
    }
    Ok(format!("{} covers, {} powers, {ideals} ideals, {} bases", seen.covers.len(), seen.powers.len(), seen.bases.len()))
}

fn c13() -> Outcome {
    let mut cfg = ScanConfig::new(Mode::CmvwcRandom, vec![Check::GbQuadratic, Check::Cor411, Check::HsLq]).with_fix2();
    cfg.seed = 13;
    cfg.n_min = 1;
    cfg.n_max = 5;
    // count is per n: 4 for each n in 1..=5
    cfg.count = 4;
    let r = scan(&cfg).unwrap();
    let lines: Vec<Value> = r.to_jsonl().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let (aggregate, instances) = lines.split_last().unwrap();
    if aggregate["schema"] != "covertool.scan-aggregate/1" || !aggregate["totals"].is_object() {
        return Err(format!("malformed aggregate {aggregate}"));
    }
    if instances.iter().any(|v| v["schema"] != "covertool.scan/1" || v.get("label").is_none()) {
        return Err("malformed instance line".into());
    }
    let fix2 = instances.iter().find(|v| v["label"] == "fix2").ok_or("no fix2 instance")?;
    if fix2["checks"]["gb_quadratic"]["quadratic"] != true {
        return Err(format!("fix2 instance: {}", fix2["checks"]));
    }
    Ok(format!(
        "{} instance lines, totals {}; findings: {} fail, {} resource, {} error",
        instances.len(),
        aggregate["totals"],
        r.failures(),
        r.resource_stops(),
        r.errors()
    ))
}

#[test]
fn acceptance() {
    let mut seen = Seen::default();
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "cover ideal of the 12-vertex example", c1(&mut seen)),
        (2, "Rees basis of the 12-vertex example", c2(&mut seen)),
        (3, "linear quotients of whisker powers", c3(&mut seen)),
        (4, "linear quotients of shift ideals", c4(&mut seen)),
        (5, "shift ideals against the Betti oracle", c5(&mut seen)),
        (6, "depth and analytic spread of whiskers", c6(&mut seen)),
        (7, "normality certificates", c7(&mut seen)),
        (8, "persistence of associated primes", c8(&mut seen)),
        (9, "exchange property on whiskers", c9(&mut seen)),
        (10, "swap shape of whisker Rees bases", c10(&mut seen)),
        (11, "enumerated and recursive cover ideals agree", c11(&mut seen)),
    ];
    results.push((13, "conjecture scan", c13()));
    results.insert(11, (12, "invariants over everything above", c12(&seen)));
    let mut failed = Vec::new();
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {n:>2} {name}: {detail}");
                failed.push(*n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
