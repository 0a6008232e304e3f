//! One line per acceptance criterion.

use std::collections::{HashSet, VecDeque};
use std::process::Command;
use std::time::{Duration, Instant};

use freeknot::bracket::{bracket_of, certify_minimal, fuzz_invariance, FuzzConfig};
use freeknot::construct::{realize, qr_diagram, random_cubic, TrivalentGraph, is_prime};
use freeknot::diagram::{all_diagrams_up_to, canonical_word, ChordDiagram};
use freeknot::framed::{chord_diagram_to_framed, isomorphic, smooth, FramedFourGraph};
use freeknot::moves::{apply_move, find_moves, r2_terminals};
use freeknot::parity::{is_irreducibly_odd, parities};
use freeknot::planarity::{cr_framed_exact, cr_graph_exact, BoundKind, CrossingBound, Graph, Witness, DEFAULT_BUDGET};
use freeknot::{Parity, Smoothing, SmoothingChoice};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn bracket_invariance() -> Outcome {
    let start = Instant::now();
    let pool: Vec<ChordDiagram> = all_diagrams_up_to(6);
    let seeds: Vec<&ChordDiagram> = pool.iter().step_by(pool.len() / 24).take(24).collect();
    let mut moves = 0;
    for (i, d) in seeds.iter().enumerate() {
        let r = fuzz_invariance(d, &FuzzConfig::new(d, 50, i as u64)).map_err(|e| e.to_string())?;
        if let Some(m) = r.mismatch {
            return Err(format!("{d}: step {} ({}) changed {} to {}", m.step, m.site, m.expected, m.found));
        }
        moves += r.steps;
    }
    check(seeds.len() >= 20 && moves >= 1000, || format!("{} seeds, {moves} moves", seeds.len()))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} seeds, {moves} moves, {:.1?}", seeds.len(), start.elapsed()))
}

fn all_even_collapse() -> Outcome {
    let mut n = 0;
    for d in all_diagrams_up_to(5) {
        if parities(&d).iter().all(|p| *p == Parity::Even) {
            let b = bracket_of(&d).map_err(|e| e.to_string())?;
            check(b.is_circle(), || format!("{d}: bracket {b}"))?;
            check(b.summands % 2 == 1, || format!("{d}: {} one-component smoothings", b.summands))?;
            n += 1;
        }
    }
    Ok(format!("{n} all-even diagrams"))
}

/// Every diagram reachable from `d` by moves that stay within `cap` chords.
fn orbit_min(d: &ChordDiagram, cap: usize) -> (usize, usize) {
    let start = canonical_word(d);
    let mut seen: HashSet<ChordDiagram> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut least = d.chord_count();
    while let Some(x) = queue.pop_front() {
        least = least.min(x.chord_count());
        for site in find_moves(&x) {
            if x.chord_count() as i64 + site.delta() as i64 > cap as i64 {
                continue;
            }
            let y = canonical_word(&apply_move(&x, &site).unwrap());
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    (least, seen.len())
}

fn odd_fixed_point() -> Outcome {
    let found: Vec<ChordDiagram> =
        all_diagrams_up_to(6).into_iter().filter(|d| !d.is_empty() && is_irreducibly_odd(d)).collect();
    check(!found.is_empty(), || "no irreducibly odd diagram".into())?;
    let mut states = 0;
    for d in &found {
        check(bracket_of(d).map_err(|e| e.to_string())?.is_singleton_of(d), || format!("{d}: bracket"))?;
        certify_minimal(d).map_err(|e| format!("{d}: {e}"))?;
        let (least, n) = orbit_min(d, d.chord_count() + 2);
        check(least == d.chord_count(), || format!("{d}: reached {least} chords"))?;
        states += n;
    }
    let list: Vec<String> = found.iter().map(|d| format!("[{d}]")).collect();
    Ok(format!("{} found {}, {states} states explored", found.len(), list.join(" ")))
}

fn realize_contract() -> Outcome {
    let start = Instant::now();
    let mut inputs = vec![
        ("k4".to_string(), TrivalentGraph::named("k4").unwrap()),
        ("prism".to_string(), TrivalentGraph::named("prism").unwrap()),
    ];
    for s in 0..10u64 {
        let n = 4 + 2 * (s as usize % 5);
        inputs.push((format!("random{n}/{s}"), random_cubic(n, s).map_err(|e| e.to_string())?));
    }
    for (name, l) in &inputs {
        let out = realize(l, 0).map_err(|e| format!("{name}: {e}"))?;
        let n = l.vertex_count();
        check(is_irreducibly_odd(&out.gamma), || format!("{name}: not irreducibly odd"))?;
        check(out.gamma.chord_count() <= 3 * n, || format!("{name}: too many chords"))?;
        let smoothed = out.oddified().smooth_small().map_err(|e| e.to_string())?;
        check(isomorphic(&smoothed, &chord_diagram_to_framed(&out.gamma_prime)), || format!("{name}: smoothing"))?;
        // Core arcs minus pairing edges.
        let gp = &out.gamma_prime;
        let m = gp.len();
        let mut arcs: Vec<(usize, usize)> = (0..m)
            .map(|i| {
                let u: usize = gp.label(gp.word()[i]).parse().unwrap();
                let v: usize = gp.label(gp.word()[(i + 1) % m]).parse().unwrap();
                (u.min(v), u.max(v))
            })
            .collect();
        for p in &out.pairing {
            let i = arcs.iter().position(|a| a == p).ok_or(format!("{name}: pairing edge missing"))?;
            arcs.remove(i);
        }
        arcs.sort();
        let mut want = l.edges().to_vec();
        want.sort();
        check(arcs == want, || format!("{name}: L not recovered"))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{} graphs, {:.1?}", inputs.len(), start.elapsed()))
}

fn qr_family() -> Outcome {
    let mut n = 0;
    for p in (7..=97).filter(|&p| is_prime(p)) {
        let d = qr_diagram(p).map_err(|e| e.to_string())?;
        check(d.chord_count() as u64 == (p - 3) / 2, || format!("p = {p}: {} chords", d.chord_count()))?;
        n += 1;
    }
    let w = canonical_word(&qr_diagram(7).unwrap()).to_string();
    check(w == "1 2 1 2", || format!("p = 7 gives {w}"))?;
    Ok(format!("{n} primes"))
}

fn exact_with_witness(name: &str, b: &CrossingBound, want: usize) -> Result<String, String> {
    check(
        b.kind == BoundKind::Exact && b.value == want && matches!(b.witness, Some(Witness::Insertion(_))),
        || format!("{name}: {b}, expected exact {want}"),
    )?;
    Ok(format!("{name}={want}"))
}

fn crossing_oracle() -> Outcome {
    let start = Instant::now();
    let left = FramedFourGraph::from_edges(1, 0, &[((0, 0), (0, 2)), ((0, 1), (0, 3))]).unwrap();
    let right = FramedFourGraph::from_edges(1, 0, &[((0, 0), (0, 1)), ((0, 2), (0, 3))]).unwrap();
    let parts = [
        exact_with_witness("K4", &cr_graph_exact(&Graph::complete(4), DEFAULT_BUDGET), 0)?,
        exact_with_witness("K5", &cr_graph_exact(&Graph::complete(5), DEFAULT_BUDGET), 1)?,
        exact_with_witness("K3,3", &cr_graph_exact(&Graph::complete_bipartite(3, 3), DEFAULT_BUDGET), 1)?,
        exact_with_witness("Petersen", &cr_graph_exact(&Graph::petersen(), DEFAULT_BUDGET), 2)?,
        exact_with_witness("one-vertex crossed framing", &cr_framed_exact(&left, DEFAULT_BUDGET), 1)?,
        exact_with_witness("one-vertex planar framing", &cr_framed_exact(&right, DEFAULT_BUDGET), 0)?,
    ];
    within(start, Duration::from_secs(300))?;
    Ok(format!("{}, {:.1?}", parts.join(" "), start.elapsed()))
}

fn smoothing_monotone() -> Outcome {
    let mut pairs = 0;
    for d in all_diagrams_up_to(4) {
        let g = chord_diagram_to_framed(&d);
        let before = cr_framed_exact(&g, DEFAULT_BUDGET);
        check(before.is_exact(), || format!("{d}: {before}"))?;
        for v in 0..g.vertex_count() {
            for s in Smoothing::both() {
                let h = smooth(&g, SmoothingChoice { vertex: v, variant: s }).map_err(|e| e.to_string())?;
                let after = cr_framed_exact(&h, DEFAULT_BUDGET);
                check(after.is_exact() && after.value <= before.value, || {
                    format!("{d}, vertex {v} {s:?}: {after} after, {before} before")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} smoothings"))
}

fn confluence() -> Outcome {
    let mut n = 0;
    for d in all_diagrams_up_to(5) {
        let t = r2_terminals(&d);
        check(t.len() == 1, || format!("{d}: {} terminals", t.len()))?;
        n += 1;
    }
    let out = Command::new(env!("CARGO_BIN_EXE_freeknot"))
        .args(["reduce", "--exhaustive", "5"])
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.code() == Some(0), || format!("cli exit {:?}", out.status.code()))?;
    Ok(format!("{n} diagrams, cli exit 0"))
}

fn pipeline() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_freeknot"))
            .args(["pipeline", "--named", "k4,prism,petersen", "--seed", "0", "--format", "records"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    check(a.status.success(), || format!("exit {:?}", a.status.code()))?;
    check(a.stdout == b.stdout, || "output differs between runs".into())?;
    let text = String::from_utf8(a.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("row ")).collect();
    check(rows.len() == 3, || format!("{} rows", rows.len()))?;
    let mut values = Vec::new();
    for row in rows {
        let field = |k: &str| {
            row.split_whitespace()
                .find_map(|f| f.strip_prefix(&format!("{k}=")))
                .map(str::to_string)
                .ok_or(format!("missing {k} in `{row}`"))
        };
        check(field("certificate")? == "ok", || format!("not certified: {row}"))?;
        check(field("cl_upper")? == field("chords_gamma")?, || format!("cl_upper: {row}"))?;
        let vi: usize = field("vi_lower")?.rsplit(':').next().unwrap().parse().unwrap();
        let chain = field("chain")?;
        let best = chain
            .split('|')
            .map(|l| l.rsplit(':').next().unwrap().parse::<usize>().unwrap())
            .max()
            .unwrap();
        check(best == vi, || format!("vi_lower not justified by chain: {row}"))?;
        values.push(format!("{}:{vi}", field("name")?));
    }
    Ok(format!("vi_lower {}", values.join(" ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 bracket invariance under random moves", bracket_invariance),
        ("2 all-even diagrams collapse to the circle", all_even_collapse),
        ("3 irreducibly odd diagrams are minimal", odd_fixed_point),
        ("4 odd augmentation contract", realize_contract),
        ("5 quadratic-residue family", qr_family),
        ("6 crossing-number oracles", crossing_oracle),
        ("7 smoothing never increases crossings", smoothing_monotone),
        ("8 second-move reduction is confluent", confluence),
        ("9 end-to-end pipeline", pipeline),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
