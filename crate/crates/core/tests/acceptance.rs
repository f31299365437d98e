//! Acceptance run: one line per criterion.
//!
//! `cargo test --test acceptance -- 3 5` runs only criteria 3 and 5.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use onepack::caterpillar::{base_three_paths, leaf_curves, run_leaf_steps, BaseTemplate, LeafStep, CATERPILLAR};
use onepack::certificate::{validate_certificate, PackingCertificate};
use onepack::dispatch::{pack_instance, Strategy};
use onepack::drawing::{EdgeLabel, OnePlaneDrawing};
use onepack::graph::{GuestGraph, Vertex};
use onepack::io::parse_certificate_unchecked;
use onepack::leaf::{
    apply_leaf_addition, catalog, reference_contexts, select_gadget, validate_cutting_curve, CuttingCurve, GadgetFamily,
};
use onepack::packing::PackError;
use onepack::svg::{count_crossings, polylines_in_svg, render_svg, Style};
use onepack::tester::{
    one_planar_test, oracle_pack, oracle_pack_with, OnePlanarity, OracleOptions, OracleVerdict, SearchBudget,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use common::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family(s: Strategy, n: usize) -> Vec<GuestGraph> {
    s.family(n).expect("generated family")
}

fn valid(c: &PackingCertificate, what: &str) -> Result<(), String> {
    let v = validate_certificate(c);
    ensure(v.is_empty(), || format!("{what}: {} violations, first {}", v.len(), v[0]))
}

fn labeled_degrees(dr: &OnePlaneDrawing) -> Vec<usize> {
    let mut d = vec![0; dr.n];
    for e in dr.edges.iter().filter(|e| e.label != EdgeLabel::Discard) {
        d[e.ends[0]] += 1;
        d[e.ends[1]] += 1;
    }
    d
}

fn three_paths_sweep() -> Check {
    let mut hist = BTreeMap::new();
    for n in 6..=200 {
        let c = pack_instance(&family(Strategy::ThreePaths, n), Strategy::Auto).map_err(|e| format!("n={n}: {e}"))?;
        valid(&c, &format!("n={n}"))?;
        let x = c.drawing.crossing_count();
        ensure((3..=7).contains(&x), || format!("n={n}: {x} crossings"))?;
        if n <= 7 {
            ensure(x == 3, || format!("n={n}: {x} crossings, expected 3"))?;
        }
        if n >= 10 && (n - 7) % 3 == 0 {
            ensure(x == 6, || format!("n={n}: {x} crossings, expected 6"))?;
        }
        *hist.entry(x).or_insert(0) += 1;
    }
    Ok(format!("n=6..200 valid; crossings histogram {hist:?}"))
}

fn spans_as_cycle(dr: &OnePlaneDrawing, g: usize) -> bool {
    let mut adj = vec![Vec::new(); dr.n];
    for e in dr.edges.iter().filter(|e| e.label == EdgeLabel::Guest(g)) {
        adj[e.ends[0]].push(e.ends[1]);
        adj[e.ends[1]].push(e.ends[0]);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return false;
    }
    let (mut prev, mut cur, mut seen) = (usize::MAX, 0, 0);
    loop {
        let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
        prev = cur;
        cur = next;
        seen += 1;
        if cur == 0 {
            return seen == dr.n;
        }
    }
}

fn three_cycles_sweep() -> Check {
    let mut hist = BTreeMap::new();
    for n in 20..=200 {
        let c = pack_instance(&family(Strategy::ThreeCycles, n), Strategy::Auto).map_err(|e| format!("n={n}: {e}"))?;
        valid(&c, &format!("n={n}"))?;
        let x = c.drawing.crossing_count();
        ensure((6..=14).contains(&x), || format!("n={n}: {x} crossings"))?;
        for g in 0..3 {
            ensure(spans_as_cycle(&c.drawing, g), || format!("n={n}: guest {g} is not a spanning cycle"))?;
        }
        *hist.entry(x).or_insert(0) += 1;
    }
    Ok(format!("n=20..200 valid spanning cycles; crossings histogram {hist:?}"))
}

fn quadruple() -> Check {
    match pack_instance(&family(Strategy::PathsMatching, 10), Strategy::Auto) {
        Err(PackError::NoPacking { code: "quadruple-degree-six", .. }) => {}
        other => return Err(format!("n=10: expected the degree-six refusal, got {other:?}")),
    }
    let mut worst = 0;
    for n in (12..=128).step_by(2) {
        let c = pack_instance(&family(Strategy::PathsMatching, n), Strategy::Auto).map_err(|e| format!("n={n}: {e}"))?;
        valid(&c, &format!("n={n}"))?;
        let m = c.drawing.edges.iter().filter(|e| e.label != EdgeLabel::Discard).count();
        ensure(m == 7 * n / 2 - 3, || format!("n={n}: {m} edges, expected {}", 7 * n / 2 - 3))?;
        let off = labeled_degrees(&c.drawing).iter().filter(|&&d| d != 7).count();
        ensure(off <= 6, || format!("n={n}: {off} vertices of degree other than 7"))?;
        worst = worst.max(off);
    }
    Ok(format!("n=10 refused (quadruple-degree-six); even n=12..128 valid with 7n/2-3 edges, at most {worst} vertices off degree 7"))
}

fn caterpillar_instance(legs: &[usize], rng: Option<&mut StdRng>) -> Vec<GuestGraph> {
    let t = GuestGraph::caterpillar(legs);
    let n = t.n();
    let t = match rng {
        Some(rng) => {
            let mut perm: Vec<Vertex> = (0..n).collect();
            perm.shuffle(rng);
            let edges = t.edges().iter().map(|&[a, b]| [perm[a], perm[b]]).collect();
            GuestGraph::new(n, edges, t.kind()).expect("relabeled caterpillar")
        }
        None => t,
    };
    vec![GuestGraph::path_on(n), GuestGraph::path_on(n), t]
}

fn caterpillars() -> Check {
    let shapes = in_scope_shapes(14);
    let (mut packed, mut refused) = (0, 0);
    for legs in &shapes {
        let n = shape_n(legs);
        let expect = n >= 6 && max_degree(legs) + 3 <= n;
        match pack_instance(&caterpillar_instance(legs, None), Strategy::Auto) {
            Ok(c) => {
                valid(&c, &format!("{legs:?}"))?;
                ensure(expect, || format!("{legs:?}: packed although refusal expected"))?;
                packed += 1;
            }
            Err(PackError::NoPacking { .. }) if !expect => refused += 1,
            Err(e) => return Err(format!("{legs:?} (n={n}): {e}")),
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_ca7);
    let mut largest = 0;
    for _ in 0..500 {
        let legs = random_shape(&mut rng, 60);
        let inst = caterpillar_instance(&legs, Some(&mut rng));
        let c = pack_instance(&inst, Strategy::Auto).map_err(|e| format!("{legs:?}: {e}"))?;
        valid(&c, &format!("{legs:?}"))?;
        largest = largest.max(c.n());
    }
    Ok(format!(
        "{} shapes with n <= 14: {packed} packed, {refused} refused, matching the degree condition; 500 random shapes (n <= {largest}) valid",
        shapes.len()
    ))
}

fn leaves_added(before: &OnePlaneDrawing, after: &OnePlaneDrawing, anchor: Vertex, label: EdgeLabel) -> usize {
    (before.n..after.n)
        .filter(|&w| {
            after.edges.iter().any(|e| e.label == label && e.key() == [anchor.min(w), anchor.max(w)])
                && after.edges.iter().filter(|e| e.label == label && e.ends.contains(&w)).count() == 1
        })
        .count()
}

/// Faces a curve passes through or ends in.
fn curve_faces(dr: &OnePlaneDrawing, c: &CuttingCurve) -> [usize; 2] {
    let idx = dr.index().expect("valid drawing");
    [idx.face(c.corner), idx.face(idx.twin(c.s1))]
}

/// One curve per step on the base drawing, no two sharing a stub edge or a
/// face.
fn curve_system(base: &BaseTemplate, steps: &[LeafStep]) -> Option<Vec<CuttingCurve>> {
    fn go(base: &BaseTemplate, steps: &[LeafStep], used: &mut Vec<usize>, faces: &mut Vec<usize>, out: &mut Vec<CuttingCurve>) -> bool {
        let Some(s) = steps.get(out.len()) else { return true };
        for c in leaf_curves(&base.drawing, base.backbone[s.pos]) {
            let fs = curve_faces(&base.drawing, &c);
            if used.contains(&c.s1.edge) || used.contains(&c.s2.edge) || fs.iter().any(|f| faces.contains(f)) {
                continue;
            }
            used.extend([c.s1.edge, c.s2.edge]);
            faces.extend(fs);
            out.push(c);
            if go(base, steps, used, faces, out) {
                return true;
            }
            out.pop();
            used.truncate(used.len() - 2);
            faces.truncate(faces.len() - 2);
        }
        false
    }
    let mut out = Vec::new();
    go(base, steps, &mut Vec::new(), &mut Vec::new(), &mut out).then_some(out)
}

/// Runs the packer's leaf additions in the given order and checks the leaf
/// count at every backbone position.
fn any_order(base: &BaseTemplate, steps: &[LeafStep], order: &[usize]) -> Result<(), String> {
    let ordered: Vec<LeafStep> = order.iter().map(|&i| steps[i]).collect();
    let out = run_leaf_steps(base, &ordered).ok_or_else(|| format!("n'={} order {ordered:?} failed", base.n_prime))?;
    let v = out.validate();
    ensure(v.is_empty(), || format!("n'={} order {ordered:?}: {}", base.n_prime, v[0]))?;
    for s in steps {
        let got = leaves_added(&base.drawing, &out, base.backbone[s.pos], EdgeLabel::Guest(CATERPILLAR));
        ensure(got == s.count, || format!("n'={} order {ordered:?}: {got} leaves at {}", base.n_prime, s.pos))?;
    }
    Ok(())
}

/// Applies the fixed curves in the given order, checking each curve against
/// the drawing it is applied to.
fn in_order(base: &BaseTemplate, steps: &[LeafStep], curves: &[CuttingCurve], order: &[usize]) -> Result<(), String> {
    let mut dr = base.drawing.clone();
    for &i in order {
        let (s, c) = (steps[i], &curves[i]);
        let bad = validate_cutting_curve(&dr, c);
        ensure(bad.is_empty(), || format!("n'={} order {order:?}: curve for {s:?} broke: {}", base.n_prime, bad[0]))?;
        let next = apply_leaf_addition(&dr, c, s.count, EdgeLabel::Guest(CATERPILLAR))
            .map_err(|e| format!("n'={} order {order:?}: {s:?}: {e}", base.n_prime))?;
        let got = leaves_added(&dr, &next, c.anchor, EdgeLabel::Guest(CATERPILLAR));
        ensure(got == s.count, || format!("{s:?}: {got} leaves added"))?;
        dr = next;
    }
    let v = dr.validate();
    ensure(v.is_empty(), || format!("n'={} order {order:?}: {}", base.n_prime, v[0]))
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn leaf_additions() -> Check {
    let mut applied = 0;
    for entry in catalog() {
        for k in (5..=25).filter(|&k| entry.admits(k)) {
            let t = entry.instantiate(k).map_err(|e| format!("{:?} k={k}: {e}", entry.family))?;
            ensure(select_gadget(entry.family, k).ok() == Some(t), || format!("{:?} k={k}: record shadowed", entry.family))?;
            for ctx in reference_contexts().into_iter().filter(|c| c.family == entry.family) {
                for curve in &ctx.curves {
                    let label = EdgeLabel::Guest(0);
                    let out = apply_leaf_addition(&ctx.drawing, curve, k, label)
                        .map_err(|e| format!("{} k={k}: {e}", ctx.name))?;
                    let v = out.validate();
                    ensure(v.is_empty(), || format!("{} k={k}: {}", ctx.name, v[0]))?;
                    ensure(out.n == ctx.drawing.n + k, || format!("{} k={k}: {} new vertices", ctx.name, out.n - ctx.drawing.n))?;
                    let got = leaves_added(&ctx.drawing, &out, curve.anchor, label);
                    ensure(got == k, || format!("{} k={k}: {got} new leaves", ctx.name))?;
                    applied += 1;
                }
            }
        }
    }
    for fam in [GadgetFamily::Parallel, GadgetFamily::NonParallel] {
        for k in 5..=25 {
            select_gadget(fam, k).map_err(|e| format!("{fam:?} k={k}: {e}"))?;
        }
    }

    let mut orders = 0;
    let (mut fixed_ok, mut fixed_broken, mut no_system) = (0, 0, 0);
    for n_prime in 6..=9 {
        let base = base_three_paths(n_prime).map_err(|e| e.to_string())?;
        let internal: Vec<usize> = (1..n_prime - 1).collect();
        for mask in 1u32..(1 << internal.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let steps: Vec<LeafStep> = internal
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(i, &pos)| LeafStep { pos, count: 5 + (i + pos) % 4 })
                .collect();
            let idx: Vec<usize> = (0..steps.len()).collect();
            for order in permutations(&idx) {
                any_order(&base, &steps, &order)?;
                orders += 1;
            }
            match curve_system(&base, &steps) {
                None => no_system += 1,
                Some(curves) => {
                    if permutations(&idx).iter().all(|o| in_order(&base, &steps, &curves, o).is_ok()) {
                        fixed_ok += 1;
                    } else {
                        fixed_broken += 1;
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x1eaf);
    let mut random = 0;
    for n_prime in [12, 20] {
        let base = base_three_paths(n_prime).map_err(|e| e.to_string())?;
        let steps: Vec<LeafStep> =
            (1..n_prime - 1).map(|pos| LeafStep { pos, count: rng.gen_range(5..=12) }).collect();
        let mut order: Vec<usize> = (0..steps.len()).collect();
        for _ in 0..50 {
            order.shuffle(&mut rng);
            any_order(&base, &steps, &order)?;
            random += 1;
        }
    }
    Ok(format!(
        "{applied} catalog applications (k=5..25, both families) valid with exactly k leaves; {orders} exhaustive and {random} random addition orders valid; fixed curve systems: {fixed_ok} order-free, {fixed_broken} order-dependent, {no_system} without a disjoint system"
    ))
}

fn complete_minus(n: usize, missing: &[[Vertex; 2]]) -> Vec<[Vertex; 2]> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| [a, b]))
        .filter(|e| !missing.contains(e))
        .collect()
}

fn non_existence() -> Check {
    let t = Instant::now();
    let k7 = one_planar_test(7, &complete_minus(7, &[]), SearchBudget::seconds(60));
    ensure(k7 == OnePlanarity::NotOnePlanar, || format!("K7: {k7:?}"))?;
    let k7_ms = t.elapsed().as_millis();
    let t = Instant::now();
    let tri = one_planar_test(7, &complete_minus(7, &[[0, 1], [0, 2], [1, 2]]), SearchBudget::seconds(15 * 60));
    ensure(tri == OnePlanarity::NotOnePlanar, || format!("K7 minus a triangle: {tri:?}"))?;
    let tri_s = t.elapsed().as_secs_f64();
    let paths = |n| vec![GuestGraph::path_on(n); 3];
    let t = Instant::now();
    let five = oracle_pack(&paths(5), SearchBudget::seconds(60));
    ensure(five == OracleVerdict::NotExists, || format!("three paths n=5: {five:?}"))?;
    let six = oracle_pack(&paths(6), SearchBudget::seconds(60));
    let OracleVerdict::Exists(w) = six else { return Err(format!("three paths n=6: {six:?}")) };
    valid(&w, "three paths n=6 witness")?;
    let oracle_s = t.elapsed().as_secs_f64();
    Ok(format!(
        "K7 not 1-planar ({k7_ms} ms); K7 minus a triangle not 1-planar ({tri_s:.1} s); oracle n=5 NotExists, n=6 Exists ({oracle_s:.1} s)"
    ))
}

fn oracle_agreement() -> Check {
    let mut constructive: Vec<(String, Vec<GuestGraph>)> = Vec::new();
    for n in 6..=8 {
        constructive.push((format!("three paths n={n}"), family(Strategy::ThreePaths, n)));
    }
    for legs in in_scope_shapes(8) {
        let inst = caterpillar_instance(&legs, None);
        if pack_instance(&inst, Strategy::Auto).is_ok() {
            constructive.push((format!("caterpillar {legs:?}"), inst));
        }
    }
    for s in [Strategy::ThreeCycles, Strategy::PathsMatching] {
        for n in 3..=8 {
            if s == Strategy::PathsMatching && n % 2 == 1 {
                continue;
            }
            let inst = family(s, n);
            if pack_instance(&inst, s).is_ok() {
                constructive.push((format!("{s} n={n}"), inst));
            }
        }
    }
    let deadline = Instant::now() + Duration::from_secs(30 * 60);
    for (name, inst) in &constructive {
        let left = deadline.saturating_duration_since(Instant::now()).max(Duration::from_secs(1));
        match oracle_pack(inst, SearchBudget::new(u64::MAX, left)) {
            OracleVerdict::Exists(w) => {
                valid(&w, name)?;
                ensure(w.instance == *inst, || format!("{name}: witness is for another instance"))?;
            }
            other => return Err(format!("{name}: {other:?}")),
        }
    }

    let mut small: Vec<(String, Vec<GuestGraph>)> = Vec::new();
    for n in 3..=6 {
        small.push((format!("three paths n={n}"), family(Strategy::ThreePaths, n)));
        small.push((format!("three cycles n={n}"), family(Strategy::ThreeCycles, n)));
        small.push((format!("two paths n={n}"), vec![GuestGraph::path_on(n); 2]));
        small.push((format!("two cycles n={n}"), vec![GuestGraph::cycle_on(n); 2]));
        if n % 2 == 0 {
            small.push((format!("three paths and a matching n={n}"), family(Strategy::PathsMatching, n)));
        }
    }
    for legs in in_scope_shapes(6) {
        small.push((format!("caterpillar {legs:?}"), caterpillar_instance(&legs, None)));
    }
    let star = GuestGraph::new(6, (1..6).map(|i| [0, i]).collect(), onepack::graph::GuestKind::Tree).unwrap();
    small.push(("two paths and a star n=6".into(), vec![GuestGraph::path_on(6), GuestGraph::path_on(6), star]));
    let mut verdicts = BTreeMap::new();
    for (name, inst) in &small {
        let verdict = |pruning| {
            let v = oracle_pack_with(inst, SearchBudget::seconds(120), OracleOptions { symmetry_pruning: pruning });
            match v {
                OracleVerdict::Exists(w) => valid(&w, name).map(|_| "exists"),
                OracleVerdict::NotExists => Ok("not-exists"),
                OracleVerdict::Timeout => Err(format!("{name}: timeout (pruning {pruning})")),
            }
        };
        let (a, b) = (verdict(true)?, verdict(false)?);
        ensure(a == b, || format!("{name}: pruned {a}, unpruned {b}"))?;
        *verdicts.entry(a).or_insert(0) += 1;
    }
    Ok(format!(
        "{} constructive instances with n <= 8 found by the oracle, witnesses valid; {} instances with n <= 6 agree with and without pruning {verdicts:?}",
        constructive.len(),
        small.len()
    ))
}

/// Checked-in certificates plus fresh ones from every construction.
fn corpus() -> Vec<(String, String)> {
    let mut out = corpus_certificates();
    let mut add = |name: String, r: Result<PackingCertificate, PackError>| {
        let c = r.unwrap_or_else(|e| panic!("{name}: {e}"));
        out.push((name, onepack::io::emit_certificate(&c).unwrap()));
    };
    for n in (6..=60).step_by(3) {
        add(format!("three-paths-{n}"), pack_instance(&family(Strategy::ThreePaths, n), Strategy::Auto));
    }
    for n in (20..=50).step_by(5) {
        add(format!("three-cycles-{n}"), pack_instance(&family(Strategy::ThreeCycles, n), Strategy::Auto));
    }
    for n in (12..=48).step_by(6) {
        add(format!("paths-matching-{n}"), pack_instance(&family(Strategy::PathsMatching, n), Strategy::Auto));
    }
    for legs in [vec![2, 2], vec![3, 7], vec![1, 5, 1], vec![6, 0, 9], vec![1, 5, 0, 0, 7, 1], vec![8, 5, 6, 1]] {
        add(format!("caterpillar-{legs:?}"), pack_instance(&caterpillar_instance(&legs, None), Strategy::Auto));
    }
    out
}

fn mutation_fuzzing() -> Check {
    let docs: Vec<(String, Value)> =
        corpus().into_iter().map(|(name, text)| (name, serde_json::from_str(&text).unwrap())).collect();
    let mut rng = StdRng::seed_from_u64(0xf022);
    let (mut at_parse, mut by_validator) = (0, 0);
    let mut kinds = BTreeMap::new();
    let mut done = 0;
    while done < 1000 {
        let (name, doc) = docs.choose(&mut rng).unwrap();
        let kind = *MUTATIONS.choose(&mut rng).unwrap();
        let Some(bad) = mutate(doc, kind, &mut rng) else { continue };
        done += 1;
        *kinds.entry(kind).or_insert(0) += 1;
        match parse_certificate_unchecked(&bad.to_string()) {
            Err(_) => at_parse += 1,
            Ok(c) if !validate_certificate(&c).is_empty() => by_validator += 1,
            Ok(_) => return Err(format!("{kind} on {name} was accepted")),
        }
    }
    Ok(format!(
        "1000 mutations over {} certificates rejected ({by_validator} by the validator, {at_parse} at parse), {} kinds",
        docs.len(),
        kinds.len()
    ))
}

fn rendering_fidelity() -> Check {
    let docs = corpus();
    let mut total = 0;
    for (name, text) in &docs {
        let c = onepack::io::parse_certificate(text).map_err(|e| format!("{name}: {e}"))?;
        let svg = render_svg(&c, &Style::default());
        let lines = polylines_in_svg(&svg);
        ensure(lines.len() == c.drawing.edges.len(), || format!("{name}: {} polylines", lines.len()))?;
        let drawn = count_crossings(&lines);
        let stored = c.drawing.crossing_count();
        ensure(drawn == stored, || format!("{name}: {drawn} drawn, {stored} stored"))?;
        total += stored;
    }
    Ok(format!("{} certificates, {total} crossings, every recount exact", docs.len()))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "three paths, n=6..200", limit: Duration::from_secs(10), run: three_paths_sweep },
        Criterion { id: 2, title: "three cycles, n=20..200", limit: Duration::from_secs(30), run: three_cycles_sweep },
        Criterion { id: 3, title: "three paths and a matching", limit: Duration::from_secs(60), run: quadruple },
        Criterion { id: 4, title: "caterpillar characterization", limit: Duration::from_secs(300), run: caterpillars },
        Criterion { id: 5, title: "leaf additions", limit: Duration::from_secs(120), run: leaf_additions },
        Criterion { id: 6, title: "non-existence verdicts", limit: Duration::from_secs(16 * 60), run: non_existence },
        Criterion { id: 7, title: "oracle agreement", limit: Duration::from_secs(30 * 60), run: oracle_agreement },
        Criterion { id: 8, title: "mutation fuzzing", limit: Duration::from_secs(600), run: mutation_fuzzing },
        Criterion { id: 9, title: "rendering fidelity", limit: Duration::from_secs(600), run: rendering_fidelity },
    ];
    let wanted: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in criteria.iter().filter(|c| wanted.is_empty() || wanted.contains(&c.id)) {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let took = t.elapsed();
        let r = r.and_then(|d| {
            if took <= c.limit {
                Ok(d)
            } else {
                Err(format!("{d}; over the {} s limit", c.limit.as_secs()))
            }
        });
        let (tag, detail) = match &r {
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        println!("criterion {} {tag} {} [{:.2} s]: {detail}", c.id, c.title, took.as_secs_f64());
        failed += usize::from(r.is_err());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

