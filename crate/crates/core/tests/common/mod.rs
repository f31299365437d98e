#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

pub fn corpus_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus"].iter().collect()
}

/// Name and text of every checked-in certificate, sorted by name.
pub fn corpus_certificates() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = fs::read_dir(corpus_dir().join("certificates"))
        .expect("corpus directory")
        .map(|e| {
            let p = e.unwrap().path();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&p).unwrap())
        })
        .filter(|(name, _)| name.ends_with(".json"))
        .collect();
    out.sort();
    out
}

pub fn corpus_instance(name: &str) -> String {
    fs::read_to_string(corpus_dir().join("instances").join(name)).unwrap()
}

pub const MUTATIONS: [&str; 12] = [
    "relabel-edge",
    "move-endpoint",
    "swap-endpoints",
    "swap-darts-at-crossing",
    "move-dart",
    "drop-crossing",
    "retarget-crossing",
    "duplicate-image",
    "flag-intermediate",
    "miscount-crossings",
    "bend-guest-edge",
    "dangling-dart",
];

fn arr(v: &Value) -> &Vec<Value> {
    v.as_array().expect("array")
}

fn num(v: &Value) -> usize {
    v.as_u64().expect("integer") as usize
}

/// Applies one random mutation that changes what the certificate claims.
/// Returns `None` when the chosen kind does not apply to this certificate.
pub fn mutate(doc: &Value, kind: &str, rng: &mut impl Rng) -> Option<Value> {
    let mut d = doc.clone();
    let n = num(&d["instance"]["n"]);
    let m = arr(&d["host_edges"]).len();
    let guests = arr(&d["instance"]["guests"]).len();
    let crossings = arr(&d["crossings"]).len();
    match kind {
        "relabel-edge" => {
            let e = rng.gen_range(0..m);
            let slot = &mut d["host_edges"][e]["guest"];
            let now = slot.as_u64().map(|g| g as usize);
            let choices: Vec<Value> = (0..guests)
                .filter(|&g| Some(g) != now)
                .map(|g| json!(g))
                .chain(now.is_some().then_some(Value::Null))
                .collect();
            *slot = choices.choose(rng)?.clone();
        }
        "move-endpoint" => {
            let e = rng.gen_range(0..m);
            let j = rng.gen_range(0..2);
            let ends: Vec<usize> = arr(&d["host_edges"][e]["ends"]).iter().map(num).collect();
            let others: Vec<usize> = (0..n).filter(|v| !ends.contains(v)).collect();
            d["host_edges"][e]["ends"][j] = json!(*others.choose(rng)?);
        }
        "swap-endpoints" => {
            let e = rng.gen_range(0..m);
            let ends = d["host_edges"][e]["ends"].clone();
            d["host_edges"][e]["ends"] = json!([ends[1], ends[0]]);
        }
        "swap-darts-at-crossing" => {
            if crossings == 0 {
                return None;
            }
            let row = &mut d["rotation"][n + rng.gen_range(0..crossings)];
            let p = rng.gen_range(0..4);
            let a = row[p].clone();
            row[p] = row[(p + 1) % 4].clone();
            row[(p + 1) % 4] = a;
        }
        "move-dart" => {
            let v = rng.gen_range(0..n);
            let w = (v + rng.gen_range(1..n)) % n;
            let row = d["rotation"][v].as_array_mut().unwrap();
            let dart = row.remove(rng.gen_range(0..row.len()));
            let to = d["rotation"][w].as_array_mut().unwrap();
            to.insert(rng.gen_range(0..=to.len()), dart);
        }
        "drop-crossing" => {
            if crossings == 0 {
                return None;
            }
            d["crossings"].as_array_mut().unwrap().remove(rng.gen_range(0..crossings));
            d["crossing_count"] = json!(crossings - 1);
        }
        "retarget-crossing" => {
            if crossings == 0 || m < 2 {
                return None;
            }
            let c = rng.gen_range(0..crossings);
            let j = rng.gen_range(0..2);
            let now = num(&d["crossings"][c][j]);
            let e = (now + rng.gen_range(1..m)) % m;
            d["crossings"][c][j] = json!(e);
        }
        "duplicate-image" => {
            let g = rng.gen_range(0..guests);
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            d["mappings"][g][u] = d["mappings"][g][v].clone();
        }
        "flag-intermediate" => d["intermediate"] = json!(true),
        "miscount-crossings" => {
            let c = crossings + 1 + rng.gen_range(0..3);
            d["crossing_count"] = json!(c);
        }
        "bend-guest-edge" => {
            let g = rng.gen_range(0..guests);
            let edges = d["instance"]["guests"][g]["edges"].as_array_mut().unwrap();
            let i = rng.gen_range(0..edges.len());
            let j = rng.gen_range(0..2);
            let keep = num(&edges[i][1 - j]);
            let old = num(&edges[i][j]);
            let w = (0..n).filter(|&w| w != keep && w != old).collect::<Vec<_>>();
            edges[i][j] = json!(*w.choose(rng)?);
        }
        "dangling-dart" => {
            let v = rng.gen_range(0..n);
            let row = d["rotation"][v].as_array_mut().unwrap();
            let p = rng.gen_range(0..row.len());
            row[p][0] = json!(m + rng.gen_range(0..5));
        }
        _ => unreachable!("unknown mutation {kind}"),
    }
    Some(d)
}

/// Leaf counts per spine vertex of every caterpillar on at most `max_n`
/// vertices with a backbone of four, or a longer backbone whose spine
/// vertices have degree 2 or at least 7. One of each mirror pair.
pub fn in_scope_shapes(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for ends in 2..=max_n - 2 {
        for a in 1..ends {
            let b = ends - a;
            if a <= b {
                out.push(vec![a, b]);
            }
        }
    }
    let mut cur = Vec::new();
    for k in 3..=max_n - 2 {
        legs(k, max_n, &mut cur, &mut out);
    }
    out
}

fn legs(k: usize, max_n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let used = cur.len() + cur.iter().sum::<usize>();
    if cur.len() == k {
        let rev: Vec<usize> = cur.iter().rev().copied().collect();
        if *cur <= rev {
            out.push(cur.clone());
        }
        return;
    }
    let end = cur.is_empty() || cur.len() + 1 == k;
    let (low, high) = if end { (1, 6) } else { (0, 5) };
    let rest = k - cur.len() - 1;
    let min_rest = rest + usize::from(rest > 0);
    for l in std::iter::once(low).chain(high..) {
        if used + 1 + l + min_rest > max_n {
            break;
        }
        cur.push(l);
        legs(k, max_n, cur, out);
        cur.pop();
    }
}

pub fn shape_n(legs: &[usize]) -> usize {
    legs.len() + legs.iter().sum::<usize>()
}

pub fn max_degree(legs: &[usize]) -> usize {
    let k = legs.len();
    legs.iter()
        .enumerate()
        .map(|(i, &l)| l + usize::from(i > 0) + usize::from(i + 1 < k))
        .max()
        .unwrap_or(0)
}

/// A random in-scope shape with `6 <= n <= max_n` and every degree at most
/// `n - 3`.
pub fn random_shape(rng: &mut impl Rng, max_n: usize) -> Vec<usize> {
    loop {
        let legs = if rng.gen_bool(0.25) {
            let a = rng.gen_range(2..=max_n / 2);
            let b = rng.gen_range(2..=max_n - 2 - a);
            vec![a, b]
        } else {
            let k = rng.gen_range(3..=max_n / 3);
            (0..k)
                .map(|i| {
                    let end = i == 0 || i + 1 == k;
                    match (end, rng.gen_bool(0.5)) {
                        (true, false) => 1,
                        (false, false) => 0,
                        (true, true) => rng.gen_range(6..=12),
                        (false, true) => rng.gen_range(5..=12),
                    }
                })
                .collect()
        };
        let n = shape_n(&legs);
        if (6..=max_n).contains(&n) && max_degree(&legs) + 3 <= n {
            return legs;
        }
    }
}
