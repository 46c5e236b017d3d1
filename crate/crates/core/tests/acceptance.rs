//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its wall time; the test fails if any criterion fails or overruns.
//!
//! Counts and distances are compared against brute-force oracles that only
//! use the multiplication table of the structure (products, divisions and an
//! exhaustive meet), never the automata under test.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use garside_core::artin::{acceptor_for, verify_witnesses, WitnessCatalog};
use garside_core::experiment::pd_experiment;
use garside_core::garside::{
    brute_force_meet, build_structure, delta_pure, proper_simples, BuildOptions, Garside, Simple,
};
use garside_core::langgraph::{
    build_acceptor, build_acceptor_raw, count_ball, count_rigid_sequence, count_sequence,
    essential_count, essential_elements, essential_transitivity, growth_profile, LangGraph,
    Sampler,
};
use garside_core::normalform::{
    is_normal, multiply, multiply_incremental, normalize, normalize_with,
    penetration_distance, penetration_distance_literal, NormalForm, Sweep,
};
use garside_core::penetration::{build_pi, build_pi_tilde, count_pseq};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn structure(desc: &str) -> Arc<dyn Garside> {
    build_structure(desc, &BuildOptions::default()).unwrap_or_else(|e| panic!("{desc}: {e}"))
}

fn acceptor(desc: &str) -> LangGraph {
    build_acceptor(structure(desc).as_ref()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Ledger {
    failed: Vec<String>,
}

impl Ledger {
    fn run(&mut self, id: &str, title: &str, limit: Duration, f: impl FnOnce() -> Check) {
        let t0 = Instant::now();
        let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        let dt = t0.elapsed();
        let r = match r {
            Ok(_) if dt > limit => Err(format!("took {dt:.2?}, limit {limit:?}")),
            r => r,
        };
        match r {
            Ok(detail) => report(format!("PASS {id} {title} [{dt:.2?}]: {detail}")),
            Err(detail) => {
                report(format!("FAIL {id} {title} [{dt:.2?}]: {detail}"));
                self.failed.push(id.to_string());
            }
        }
    }
}

/// Writes to the stderr handle directly so the lines show without
/// `--nocapture`.
fn report(line: String) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

// ---------------------------------------------------------------- oracles

/// Prefix order from the product table alone.
fn divides(g: &dyn Garside, x: Simple, y: Simple) -> bool {
    (0..g.num_simples() as u32).any(|u| g.product(x, Simple(u)) == Some(y))
}

/// `∂x` by search over the table.
fn complement(g: &dyn Garside, x: Simple) -> Simple {
    (0..g.num_simples() as u32)
        .map(Simple)
        .find(|&u| g.product(x, u) == Some(g.delta()))
        .expect("complement exists")
}

fn meet(g: &dyn Garside, x: Simple, y: Simple) -> Simple {
    brute_force_meet(g, x, y).expect("meet exists")
}

/// `normal[x][y]` iff `∂x ∧ y = 1`, for all simples.
fn normal_table(g: &dyn Garside) -> Vec<Vec<bool>> {
    let n = g.num_simples();
    (0..n as u32)
        .map(|x| {
            let c = complement(g, Simple(x));
            (0..n as u32).map(|y| meet(g, c, Simple(y)) == Simple::ONE).collect()
        })
        .collect()
}

/// Calls `f` on every `k`-tuple over `letters`.
fn for_tuples(letters: &[Simple], k: usize, mut f: impl FnMut(&[Simple])) {
    if k == 0 {
        f(&[]);
        return;
    }
    let mut idx = vec![0usize; k];
    let mut word = vec![letters[0]; k];
    loop {
        f(&word);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < letters.len() {
                word[i] = letters[idx[i]];
                break;
            }
            idx[i] = 0;
            word[i] = letters[0];
        }
    }
}

struct Brute {
    words: Vec<u64>,
    ball: Vec<u64>,
    rigid: Vec<u64>,
    pseq: Vec<u64>,
}

fn brute_counts(g: &dyn Garside, kmax: usize) -> Brute {
    let nt = normal_table(g);
    let ok = |x: Simple, y: Simple| nt[x.idx()][y.idx()];
    let proper: Vec<Simple> = (1..g.num_simples() as u32)
        .map(Simple)
        .filter(|&s| s != g.delta())
        .collect();
    let mut with_delta = proper.clone();
    with_delta.push(g.delta());
    let (mut words, mut ball, mut rigid) = (vec![0; kmax + 1], vec![0; kmax + 1], vec![0; kmax + 1]);
    for k in 1..=kmax {
        for_tuples(&proper, k, |w| {
            if w.windows(2).all(|p| ok(p[0], p[1])) {
                words[k] += 1;
                if ok(w[k - 1], w[0]) {
                    rigid[k] += 1;
                }
            }
        });
        for_tuples(&with_delta, k, |w| {
            if w.windows(2).all(|p| ok(p[0], p[1])) {
                ball[k] += 1;
            }
        });
    }
    // penetration sequences, grown from the right by the defining clauses
    let mut pseq = vec![0u64; kmax + 1];
    let mut layer: Vec<(Simple, Simple)> = Vec::new();
    for &s in &proper {
        for &m in &proper {
            if divides(g, m, complement(g, s)) {
                layer.push((s, m));
            }
        }
    }
    for k in 1..=kmax {
        pseq[k] = layer.len() as u64;
        let mut next = Vec::new();
        for &(s, m) in &layer {
            let sm = g.product(s, m).expect("m divides ∂s");
            if sm == g.delta() {
                continue;
            }
            for &t in &proper {
                if !ok(t, s) {
                    continue;
                }
                let mt = meet(g, complement(g, t), sm);
                if mt != Simple::ONE && mt != g.delta() {
                    next.push((t, mt));
                }
            }
        }
        layer = next;
    }
    Brute { words, ball, rigid, pseq }
}

fn to_u64(v: &BigUint) -> u64 {
    u64::try_from(v).expect("fits")
}

/// Named edges of a graph with one node per simple.
fn edge_names(g: &LangGraph) -> BTreeSet<(String, String)> {
    let mut out = BTreeSet::new();
    for c in 0..g.num_nodes() {
        for &d in g.successors(c) {
            out.insert((g.name(c).to_string(), g.name(d as usize).to_string()));
        }
    }
    out
}

fn edges_of(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// Some vertex bijection carries the edges of `g` onto those of `h`.
fn isomorphic(g: &LangGraph, h: &LangGraph) -> bool {
    let n = g.num_nodes();
    if n != h.num_nodes() || g.num_node_edges() != h.num_node_edges() {
        return false;
    }
    fn extend(g: &LangGraph, h: &LangGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == g.num_nodes() {
            return true;
        }
        for j in 0..h.num_nodes() {
            if used[j] {
                continue;
            }
            let consistent = (0..i).chain(std::iter::once(i)).all(|p| {
                let mp = if p == i { j } else { map[p] };
                g.has_edge(i, p) == h.has_edge(j, mp) && g.has_edge(p, i) == h.has_edge(mp, j)
            });
            if consistent {
                map.push(j);
                used[j] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// Essential transitivity and diameter of a graph with one node per
/// vertex, by all-pairs BFS: essential vertices lie on a cycle; the
/// diameter is the longest shortest path between distinct ones.
fn brute_diameter(g: &LangGraph) -> Option<usize> {
    let n = g.num_nodes();
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            let mut q = VecDeque::new();
            for &t in g.successors(s) {
                if d[t as usize] == usize::MAX {
                    d[t as usize] = 1;
                    q.push_back(t as usize);
                }
            }
            while let Some(v) = q.pop_front() {
                for &t in g.successors(v) {
                    if d[t as usize] == usize::MAX {
                        d[t as usize] = d[v] + 1;
                        q.push_back(t as usize);
                    }
                }
            }
            d
        })
        .collect();
    let ess: Vec<usize> = (0..n).filter(|&v| dist[v][v] != usize::MAX).collect();
    let mut diam = 0;
    for &u in &ess {
        for &v in &ess {
            if u != v {
                if dist[u][v] == usize::MAX {
                    return None;
                }
                diam = diam.max(dist[u][v]);
            }
        }
    }
    Some(diam)
}

// --------------------------------------------------------------- criteria

fn acceptor_fixtures() -> Check {
    let aa_bb = build_acceptor_raw(structure("table:aa_bb").as_ref()).unwrap();
    ensure(edge_names(&aa_bb) == edges_of(&[("a", "b"), ("b", "a")]), || {
        format!("aa_bb edges {:?}", edge_names(&aa_bb))
    })?;

    let framed_fixture = build_acceptor_raw(structure("table:aa_bb_framed2").as_ref()).unwrap();
    let figure = edges_of(&[
        ("ab", "a"),
        ("ba", "b"),
        ("b^3", "a"),
        ("a^3", "b"),
        ("ab", "ab"),
        ("b^3", "ab"),
        ("ba", "ba"),
        ("a^3", "ba"),
    ]);
    ensure(framed_fixture.num_nodes() == 7, || format!("M(2) has {} vertices", framed_fixture.num_nodes()))?;
    ensure(edge_names(&framed_fixture) == figure, || {
        format!("M(2) edges {:?}", edge_names(&framed_fixture))
    })?;
    let framed = build_acceptor_raw(structure("frame:table:aa_bb:2").as_ref()).unwrap();
    ensure(isomorphic(&framed, &framed_fixture), || "framing of aa_bb is not isomorphic to the M(2) figure".into())?;

    for d in ["artin:A2", "table:a2"] {
        let a2 = build_acceptor_raw(structure(d).as_ref()).unwrap();
        ensure(a2.num_nodes() == 4 && a2.num_node_edges() == 8, || {
            format!("{d}: {} vertices, {} edges", a2.num_nodes(), a2.num_node_edges())
        })?;
    }
    let a2 = build_acceptor_raw(structure("artin:A2").as_ref()).unwrap();
    let expected = edges_of(&[
        ("1", "1"),
        ("1", "12"),
        ("2", "2"),
        ("2", "21"),
        ("12", "2"),
        ("12", "21"),
        ("21", "1"),
        ("21", "12"),
    ]);
    ensure(edge_names(&a2) == expected, || format!("A2 edges {:?}", edge_names(&a2)))?;

    let abc = build_acceptor_raw(structure("table:abc").as_ref()).unwrap();
    let expected = edges_of(&[
        ("a", "c"),
        ("c", "b"),
        ("b", "a"),
        ("a^2", "b^2"),
        ("b^2", "c^2"),
        ("c^2", "a^2"),
        ("a^2", "b"),
        ("a^2", "c"),
        ("b^2", "a"),
        ("b^2", "c"),
        ("c^2", "a"),
        ("c^2", "b"),
    ]);
    ensure(edge_names(&abc) == expected, || format!("abc edges {:?}", edge_names(&abc)))?;
    Ok("aa_bb 2-cycle, M(2) 7 vertices/8 edges (fixture and framing), A2 4/8, abc 3+3+6".into())
}

fn pi_fixtures() -> Check {
    let a2 = build_pi(structure("artin:A2").as_ref(), u128::MAX).unwrap();
    ensure(a2.states.len() == 6 && a2.graph.num_node_edges() == 0, || {
        format!("A2 Π: {} states, {} edges", a2.states.len(), a2.graph.num_node_edges())
    })?;
    let aa = build_pi(structure("table:aa_bb").as_ref(), u128::MAX).unwrap();
    ensure(aa.states.len() == 2 && aa.graph.num_node_edges() == 0, || {
        format!("aa_bb Π: {} states, {} edges", aa.states.len(), aa.graph.num_node_edges())
    })?;
    let fixtures = [
        "artin:A2", "artin:A3", "artin:B2", "artin:B3", "artin:I2(5)", "table:aa_bb", "table:abc",
        "table:aba_bb", "table:a2", "table:aa_bb_framed2", "frame:table:aa_bb:2",
        "prod:artin:A2,artin:A2",
    ];
    let mut states = 0;
    for d in fixtures {
        let g = structure(d);
        let nt = normal_table(g.as_ref());
        let proper = proper_simples(g.as_ref());
        let tilde = build_pi_tilde(g.as_ref(), u128::MAX).unwrap();
        for (i, t) in tilde.states.iter().enumerate() {
            let gamma_in = proper.iter().filter(|&&p| nt[p.idx()][t.s.idx()]).count();
            let pi_in = tilde.graph.predecessors(i).len();
            ensure(gamma_in == pi_in, || {
                format!("{d}: in-degree of {} is {pi_in}, Γ in-degree of s is {gamma_in}", t.render(g.as_ref()))
            })?;
        }
        states += tilde.states.len();
    }
    Ok(format!("A2 Π 6/0, aa_bb Π 2/0, in-degree law on {states} Π̃ states of {} structures", fixtures.len()))
}

fn essentiality() -> Check {
    let all = [
        "artin:A2", "artin:A3", "artin:A4", "artin:A5", "artin:B2", "artin:B3", "artin:B4",
        "artin:D4", "artin:F4", "artin:H3", "artin:I2(5)",
    ];
    for d in all {
        let g = structure(d);
        let ess = essential_count(&build_acceptor(g.as_ref()).unwrap());
        let proper = (g.num_simples() - 2) as u128;
        ensure(ess == proper, || format!("{d}: {ess} essential of {proper} proper"))?;
    }
    let names = |d: &str| -> BTreeSet<String> {
        let g = structure(d);
        let acc = build_acceptor_raw(g.as_ref()).unwrap();
        essential_elements(&acc).into_iter().map(|s| g.display(s)).collect()
    };
    let aba = names("table:aba_bb");
    ensure(!aba.is_empty() && !aba.contains("b") && !aba.contains("b^2"), || format!("aba_bb Ess {aba:?}"))?;
    let m2 = names("table:aa_bb_framed2");
    ensure(m2 == BTreeSet::from(["ab".to_string(), "ba".to_string()]), || format!("M(2) Ess {m2:?}"))?;
    let framed = names("frame:table:aa_bb:2");
    ensure(framed == BTreeSet::from(["a.b".to_string(), "b.a".to_string()]), || format!("framing Ess {framed:?}"))?;
    Ok(format!("Ess = proper simples for {} Artin types; aba_bb Ess {aba:?}; M(2) Ess {{ab, ba}}", all.len()))
}

const DIAMETERS: &[(&str, usize)] = &[
    ("artin:A2", 2),
    ("artin:A3", 4),
    ("artin:A4", 5),
    ("artin:A5", 5),
    ("artin:B2", 2),
    ("artin:B3", 4),
    ("artin:B4", 4),
    ("artin:B5", 5),
    ("artin:D3", 4),
    ("artin:D4", 4),
    ("artin:D5", 4),
    ("artin:H3", 3),
    ("artin:H4", 3),
    ("artin:F4", 3),
    ("artin:I2(3)", 2),
    ("artin:I2(5)", 2),
    ("artin:I2(7)", 2),
];

fn diameter_of(desc: &str) -> Result<usize, String> {
    let t = essential_transitivity(&acceptor_for(desc, &BuildOptions::default()).map_err(|e| e.to_string())?);
    t.k.ok_or_else(|| format!("{desc} is not essentially transitive"))
}

fn diameters() -> Check {
    let mut got = Vec::new();
    for &(d, want) in DIAMETERS {
        let k = diameter_of(d)?;
        ensure(k == want, || format!("{d}: diameter {k}, expected {want}"))?;
        got.push(format!("{}→{k}", d.trim_start_matches("artin:")));
    }
    // the quotient-based diameters agree with all-pairs BFS on the raw acceptor
    for d in ["artin:A2", "artin:A3", "artin:A4", "artin:B3", "artin:B4", "artin:D4", "artin:H3", "artin:I2(7)"] {
        let raw = build_acceptor_raw(structure(d).as_ref()).unwrap();
        let brute = brute_diameter(&raw);
        ensure(brute == Some(diameter_of(d)?), || format!("{d}: brute-force diameter {brute:?}"))?;
    }
    for d in ["prod:artin:A2,artin:A2", "prod:artin:A1,artin:A1", "prod:artin:A2,artin:B2"] {
        ensure(!essential_transitivity(&acceptor(d)).transitive, || format!("{d} is transitive"))?;
    }
    Ok(got.join(" "))
}

fn heavy_diameters() -> Check {
    let k = diameter_of("artin:E6")?;
    ensure(k == 4, || format!("E6: diameter {k}, expected 4"))?;
    Ok("E6→4".into())
}

struct Rates {
    alpha: f64,
    beta: f64,
}

fn rates(desc: &str) -> Rates {
    let g = structure(desc);
    let pi = build_pi(g.as_ref(), u128::MAX).unwrap();
    let gamma = build_acceptor(g.as_ref()).unwrap();
    Rates {
        alpha: growth_profile(&pi.graph).unwrap().rate,
        beta: growth_profile(&gamma).unwrap().rate,
    }
}

fn growth() -> Check {
    let fixtures = [
        "artin:A2", "artin:A3", "artin:A4", "artin:A5", "artin:B2", "artin:B3", "artin:B4",
        "artin:D4", "artin:F4", "artin:H3", "artin:I2(5)",
    ];
    let mut margin = f64::INFINITY;
    for d in fixtures {
        let r = rates(d);
        ensure(r.beta - r.alpha > 0.1, || format!("{d}: alpha {} beta {}", r.alpha, r.beta))?;
        margin = margin.min(r.beta - r.alpha);
    }
    let a2 = rates("artin:A2");
    ensure(a2.alpha == 0.0 && (a2.beta - 2.0).abs() < 1e-9, || format!("A2: alpha {} beta {}", a2.alpha, a2.beta))?;
    // |L^(k)| doubles exactly for A2
    let counts = count_sequence(&acceptor("artin:A2"), 40);
    ensure(counts[1..].windows(2).all(|w| &w[0] * 2u32 == w[1]), || "A2 counts do not double".into())?;
    let p = rates("prod:artin:A2,artin:A2");
    ensure((p.alpha - p.beta).abs() <= 1e-6 * p.beta, || format!("A2×A2: alpha {} beta {}", p.alpha, p.beta))?;
    Ok(format!("min β−α = {margin:.4} over {} types; A2 α=0 β=2; A2×A2 α=β={:.6}", fixtures.len(), p.beta))
}

fn counting() -> Check {
    let fixtures = [
        "artin:A2", "artin:A3", "artin:B2", "table:aa_bb", "table:abc", "table:aba_bb", "table:a2",
        "table:aa_bb_framed2",
    ];
    const K: usize = 4;
    for d in fixtures {
        let g = structure(d);
        let gamma = build_acceptor(g.as_ref()).unwrap();
        let brute = brute_counts(g.as_ref(), K);
        let words: Vec<u64> = count_sequence(&gamma, K).iter().map(to_u64).collect();
        let rigid: Vec<u64> = count_rigid_sequence(&gamma, K).iter().map(to_u64).collect();
        let pseq: Vec<u64> = count_pseq(&build_pi(g.as_ref(), u128::MAX).unwrap(), K).iter().map(to_u64).collect();
        for k in 1..=K {
            let ball = to_u64(&count_ball(&gamma, k));
            ensure(words[k] == brute.words[k], || format!("{d} |L^({k})| {} vs {}", words[k], brute.words[k]))?;
            ensure(ball == brute.ball[k], || format!("{d} |L̄^({k})| {ball} vs {}", brute.ball[k]))?;
            ensure(rigid[k] == brute.rigid[k], || format!("{d} rigid({k}) {} vs {}", rigid[k], brute.rigid[k]))?;
            ensure(pseq[k] == brute.pseq[k], || format!("{d} |PSeq^({k})| {} vs {}", pseq[k], brute.pseq[k]))?;
        }
    }
    let aa = acceptor("table:aa_bb");
    let words = count_sequence(&aa, 21);
    let rigid = count_rigid_sequence(&aa, 21);
    for m in 0..=10 {
        let k = 2 * m + 1;
        ensure(words[k] == BigUint::from(2u32) && rigid[k] == BigUint::from(0u32), || {
            format!("aa_bb k={k}: |L|={} rigid={}", words[k], rigid[k])
        })?;
    }
    Ok(format!("L, L̄, rigid, PSeq agree with enumeration for k ≤ {K} on {} structures; aa_bb odd lengths ok", fixtures.len()))
}

fn witnesses() -> Check {
    let checks = verify_witnesses(&WitnessCatalog::builtin()).map_err(|e| e.to_string())?;
    let per_type = checks.iter().fold(BTreeMap::<&str, usize>::new(), |mut m, c| {
        *m.entry(c.ty.as_str()).or_default() += 1;
        m
    });
    let want = BTreeMap::from([("E6", 1), ("E7", 1), ("E8", 1), ("F4", 8), ("H3", 3), ("H4", 4)]);
    ensure(per_type == want, || format!("catalogue {per_type:?}"))?;
    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(bad.line());
    }
    Ok(format!("{} words reduced with the stated S/F sets", checks.len()))
}

fn product_laws() -> Check {
    let prod = acceptor("prod:artin:A2,artin:A2");
    let a2 = acceptor("artin:A2");
    // ψ preserves sup as max(sup_G, sup_H), so it restricts to a bijection
    // between the sets of elements with sup ≤ k: ⋃_{j≤k} L̄^(j)
    let upto = |g: &LangGraph, k: usize| -> BigUint { (0..=k).map(|j| count_ball(g, j)).sum() };
    for k in 0..=5 {
        let (m, g) = (upto(&prod, k), upto(&a2, k));
        ensure(m == &g * &g, || format!("k={k}: |L̄_M^(≤k)| = {m}, |L̄_G^(≤k)|² = {}", &g * &g))?;
    }
    let mut shown = Vec::new();
    for (g, h) in [("artin:A2", "artin:A2"), ("artin:A2", "artin:B2"), ("artin:B2", "artin:A3")] {
        let rate = |d: &str| growth_profile(&acceptor(d)).unwrap().rate;
        let (bg, bh) = (rate(g), rate(h));
        let bm = rate(&format!("prod:{g},{h}"));
        ensure(bg > 1.0 && bh > 1.0, || format!("{g}, {h} rates {bg}, {bh}"))?;
        ensure((bm - bg * bh).abs() <= 1e-6 * bg * bh, || format!("{g}×{h}: β_M {bm} vs {}", bg * bh))?;
        shown.push(format!("{:.4}", bm));
    }
    Ok(format!("|L̄^(≤k)| multiplies for k ≤ 5; β_M = β_Gβ_H ({})", shown.join(", ")))
}

fn expected_pd() -> Check {
    let mean = |d: &str, ks: &[usize]| -> Result<Vec<f64>, String> {
        let g = structure(d);
        let gamma = build_acceptor(g.as_ref()).unwrap();
        let rows = pd_experiment(g.as_ref(), &gamma, ks, 2000, 2024).map_err(|e| e.to_string())?;
        Ok(rows.iter().map(|r| r.mean_pd).collect())
    };
    let a3 = mean("artin:A3", &[10, 20, 40, 80])?;
    ensure(a3[3] <= 1.5 * a3[0], || format!("A3 means {a3:?}"))?;
    let p = mean("prod:artin:A2,artin:A2", &[5, 10, 20, 40])?;
    ensure(p.windows(2).all(|w| w[1] > w[0]) && p[3] >= 2.0 * p[1], || format!("A2×A2 means {p:?}"))?;
    Ok(format!("A3 {a3:.3?}; A2×A2 {p:.3?}"))
}

fn normal_forms() -> Check {
    let toys = ["table:aa_bb", "table:abc", "table:aba_bb", "table:a2", "table:aa_bb_framed2", "artin:A2", "artin:B2"];
    let mut words = 0usize;
    for d in toys {
        let g = structure(d);
        let g = g.as_ref();
        let letters: Vec<Simple> = (0..g.num_simples() as u32).map(Simple).collect();
        for k in 0..=4 {
            let mut err = None;
            for_tuples(&letters, k, |w| {
                if err.is_some() {
                    return;
                }
                words += 1;
                let nf = normalize(g, w);
                let ok = normalize_with(g, w, Sweep::LeftToRight) == nf
                    && normalize(g, &nf.to_word(g)) == nf
                    && is_normal(g, &nf.factors)
                    && !nf.factors.contains(&g.delta())
                    && w.iter().fold(NormalForm::identity(), |acc, &s| multiply(g, &acc, s)) == nf;
                if !ok {
                    let shown: Vec<String> = w.iter().map(|&s| g.display(s)).collect();
                    err = Some(format!("{d}: word {}", shown.join(".")));
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
    }

    let random = [
        "table:aa_bb", "table:abc", "table:aba_bb", "table:aa_bb_framed2", "frame:table:aa_bb:2",
        "artin:A3", "artin:B3", "artin:I2(5)", "prod:artin:A2,artin:A2",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in random {
        let g = structure(d);
        let g = g.as_ref();
        let gamma = build_acceptor(g).unwrap();
        let samplers: Vec<Sampler> = (1..=12).map(|k| Sampler::new(&gamma, k).unwrap()).collect();
        let n = g.num_simples() as u32;
        let draw = |rng: &mut ChaCha8Rng| {
            let s = &samplers[rng.gen_range(0..samplers.len())];
            NormalForm { inf: 0, factors: s.sample(rng) }
        };
        for _ in 0..10_000 {
            let mut x = draw(&mut rng);
            x.inf = rng.gen_range(0..3);
            let y = Simple(rng.gen_range(0..n));
            let full = multiply(g, &x, y);
            let (inc, _) = multiply_incremental(g, &x, y);
            ensure(inc == full, || format!("{d}: {} · {}", x.render(g), g.display(y)))?;
        }
        for _ in 0..1_000 {
            let x = draw(&mut rng);
            let len = rng.gen_range(1..=3);
            let y: Vec<Simple> = (0..len).map(|_| Simple(rng.gen_range(1..n))).collect();
            let (pd, lit) = (penetration_distance(g, &x, &y), penetration_distance_literal(g, &x, &y));
            ensure(pd == lit, || format!("{d}: pd {pd} vs literal {lit} for {}", x.render(g)))?;
        }
    }
    Ok(format!(
        "{words} words of length ≤ 4 on {} toys; 10⁴ incremental and 10³ pd cases on each of {} structures",
        toys.len(),
        random.len()
    ))
}

fn delta_purity() -> Check {
    for d in ["table:aa_bb_framed2", "frame:table:aa_bb:2"] {
        let g = structure(d);
        let p = delta_pure(g.as_ref());
        ensure(p.pure, || format!("{d} is not Δ-pure"))?;
        // Δ_x = x² = a² for both atoms; in the framing a² is the base Δ
        let want = if d.starts_with("frame") { "Δ" } else { "a^2" };
        for &(x, dx) in &p.witness {
            ensure(g.product(x, x) == Some(dx) && g.display(dx) == want, || {
                format!("{d}: Δ_{} = {}", g.display(x), g.display(dx))
            })?;
        }
    }
    for d in ["prod:artin:A2,artin:A2", "prod:artin:A1,artin:A1", "prod:artin:A2,artin:B2"] {
        ensure(!delta_pure(structure(d).as_ref()).pure, || format!("{d} reported Δ-pure"))?;
    }
    let artin = ["artin:A2", "artin:A3", "artin:A4", "artin:B3", "artin:D4", "artin:F4", "artin:H3", "artin:I2(5)"];
    for d in artin {
        let g = structure(d);
        let p = delta_pure(g.as_ref());
        ensure(p.pure && p.witness.iter().all(|&(_, da)| da == g.delta()), || format!("{d} not Δ-pure"))?;
    }
    Ok(format!("M(2): Δ_a = Δ_b = a²; 3 products impure; {} Artin types pure", artin.len()))
}

#[test]
fn acceptance() {
    let mut ledger = Ledger { failed: Vec::new() };
    ledger.run("1", "acceptor fixtures", secs(1), acceptor_fixtures);
    ledger.run("2", "penetration automata", secs(1), pi_fixtures);
    ledger.run("3", "essentiality", secs(10), essentiality);
    ledger.run("4", "diameters", secs(60), diameters);
    ledger.run("4h", "diameters (heavy set)", secs(3600), heavy_diameters);
    ledger.run("5", "growth-rate inequality", secs(60), growth);
    ledger.run("6", "counting oracles", secs(30), counting);
    ledger.run("7", "witness suite", secs(5), witnesses);
    ledger.run("8", "product laws", secs(30), product_laws);
    ledger.run("9", "expected penetration distance", secs(300), expected_pd);
    ledger.run("10", "normal-form engine", secs(120), normal_forms);
    ledger.run("11", "delta-purity", secs(30), delta_purity);
    assert!(ledger.failed.is_empty(), "failed criteria: {:?}", ledger.failed);
}
