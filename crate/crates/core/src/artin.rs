//! Type-specific constructions for spherical Artin monoids: connecting
//! elements, the `u`/`v` elements of an A-chain, witness catalogs for the
//! exceptional types, the `I₂(p)` classification, and the transitivity
//! harness.
//!
//! Everything here works on [`GroupElement`]s, so no group enumeration is
//! needed (E8 included).

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, CoxeterType, GroupElement, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::garside::{build_structure, is_proper, ArtinGarside, AtomSet, BuildOptions, Garside, Simple};
use crate::langgraph::{acceptor_from_system, build_acceptor, essential_transitivity};
use crate::normalform::is_normal_pair;

/// Right complement `∂z = z⁻¹Δ` in the group.
pub fn complement(sys: &CoxeterSystem, z: &GroupElement) -> GroupElement {
    z.inverse().mul(sys.longest())
}

/// The diagram automorphism `i ↦ j` with `Δ sᵢ Δ = sⱼ`.
pub fn delta_automorphism(sys: &CoxeterSystem) -> Vec<usize> {
    let w0 = sys.longest();
    (0..sys.rank())
        .map(|i| {
            let c = w0.mul(sys.generator(i)).mul(w0);
            (0..sys.rank())
                .find(|&j| *sys.generator(j) == c)
                .expect("conjugation by the longest element permutes the generators")
        })
        .collect()
}

fn product_of(sys: &CoxeterSystem, word: &[usize]) -> GroupElement {
    sys.element_of_word(word).0
}

fn label_set(sys: &CoxeterSystem, set: AtomSet) -> String {
    sys.graph().format_set(set)
}

/// Elements `x`, `y` with `S(x) = {a}`, `F(x) = {b}`, `S(y) = A∖{a}` and
/// `F(y) = A∖{b}`.
#[derive(Clone, Debug)]
pub struct Connecting {
    pub x: GroupElement,
    pub y: GroupElement,
}

/// `x` is the product along the diagram path `a … b`. For `y` we take the
/// complement of the path element from `σ(b)` back to `a`, where `σ` is
/// conjugation by `Δ`: since `F(∂z) = A∖σ(S(z))`, using the path to `b`
/// itself would only give `F(y) = A∖{σ(b)}`.
pub fn connecting_element(sys: &CoxeterSystem, a: usize, b: usize) -> Result<Connecting> {
    let graph = sys.graph();
    let different = || Error::DifferentComponent {
        a: graph.label(a).to_string(),
        b: graph.label(b).to_string(),
    };
    if a >= sys.rank() || b >= sys.rank() {
        return Err(Error::Config(format!("atom index out of range for {}", sys.ty())));
    }
    let path = graph.path(a, b).ok_or_else(different)?;
    let x = product_of(sys, &path);
    let sigma = delta_automorphism(sys);
    let mut back = graph.path(a, sigma[b]).ok_or_else(different)?;
    back.reverse();
    let y = complement(sys, &product_of(sys, &back));

    let full = AtomSet::full(sys.rank());
    let want = [
        (sys.left_descents(&x), AtomSet::singleton(a), "S(x)"),
        (sys.right_descents(&x), AtomSet::singleton(b), "F(x)"),
        (sys.left_descents(&y), full.difference(AtomSet::singleton(a)), "S(y)"),
        (sys.right_descents(&y), full.difference(AtomSet::singleton(b)), "F(y)"),
    ];
    for (got, expect, what) in want {
        if got != expect {
            return Err(Error::Defect(format!(
                "connecting element {}→{} in {}: {what} = {} but expected {}",
                graph.label(a),
                graph.label(b),
                sys.ty(),
                label_set(sys, got),
                label_set(sys, expect)
            )));
        }
    }
    Ok(Connecting { x, y })
}

fn check_chain(sys: &CoxeterSystem, chain: &[usize]) -> Result<()> {
    let g = sys.graph();
    let bad = |why: String| Err(Error::NotAChain(why));
    if chain.is_empty() {
        return bad("empty chain".into());
    }
    for (i, &c) in chain.iter().enumerate() {
        if c >= sys.rank() {
            return bad(format!("atom index {c} out of range"));
        }
        for (j, &d) in chain.iter().enumerate().take(i) {
            let m = if c == d { 1 } else { g.m(c, d) };
            let expect = if i == j + 1 { 3 } else { 2 };
            if m != expect {
                return bad(format!(
                    "atoms {} and {} have m = {m}, expected {expect}",
                    g.label(d),
                    g.label(c)
                ));
            }
        }
    }
    Ok(())
}

/// The permutation `π_u` of `{1,…,k}` in one-line notation (0-based values).
fn pi_u(k: usize) -> Vec<usize> {
    let h = k / 2;
    (1..=k)
        .map(|i| if i <= h { 2 * i } else { 2 * (i - h) - 1 })
        .map(|v| v - 1)
        .collect()
}

/// A reduced word (positions `0..k−1`, letter `a` swapping strings `a` and
/// `a+1`) for a permutation, peeling off starting letters `π(a+1) < π(a)`.
fn permutation_word(mut pi: Vec<usize>) -> Vec<usize> {
    let mut word = Vec::new();
    while let Some(a) = (0..pi.len().saturating_sub(1)).find(|&a| pi[a + 1] < pi[a]) {
        word.push(a);
        pi.swap(a, a + 1);
    }
    word
}

fn chain_set(chain: &[usize], labels: impl Iterator<Item = usize>) -> AtomSet {
    labels.map(|l| chain[l - 1]).collect()
}

/// The element `u` of an A-chain `c₁ — ⋯ — c_{k−1}` realizing `π_u`, with
/// `S(u) = {c_{⌊k/2⌋}}` and `F(u) = {c₁, c₃, …, c_{2⌊k/2⌋−1}}`.
pub fn u_element(sys: &CoxeterSystem, chain: &[usize]) -> Result<GroupElement> {
    check_chain(sys, chain)?;
    let k = chain.len() + 1;
    let h = k / 2;
    let word: Vec<usize> = permutation_word(pi_u(k)).into_iter().map(|a| chain[a]).collect();
    let (u, reduced) = sys.element_of_word(&word);
    let start = chain_set(chain, std::iter::once(h));
    let finish = chain_set(chain, (1..=h).map(|i| 2 * i - 1));
    if !reduced || sys.left_descents(&u) != start || sys.right_descents(&u) != finish {
        return Err(Error::Defect(format!(
            "u element in {}: reduced={reduced} S={} F={}, expected S={} F={}",
            sys.ty(),
            label_set(sys, sys.left_descents(&u)),
            label_set(sys, sys.right_descents(&u)),
            label_set(sys, start),
            label_set(sys, finish)
        )));
    }
    Ok(u)
}

/// `v = (rev u)·D` where `D` is the longest element of the parabolic on
/// every atom except `c_{⌊k/2⌋}`; simple with `F(v) ⊇ A∖{c_{⌊k/2⌋}}`.
pub fn v_element(sys: &CoxeterSystem, chain: &[usize]) -> Result<GroupElement> {
    let u = u_element(sys, chain)?;
    let mid = chain[chain.len().div_ceil(2) - 1];
    let rest = AtomSet::full(sys.rank()).difference(AtomSet::singleton(mid));
    let d = sys.parabolic_longest(rest);
    // reversing a reduced word of u gives u⁻¹
    let rev = u.inverse();
    let v = rev.mul(&d);
    if v.length() != rev.length() + d.length() {
        return Err(Error::Defect(format!("v element in {} is not simple", sys.ty())));
    }
    if !rest.is_subset(sys.right_descents(&v)) {
        return Err(Error::Defect(format!(
            "v element in {}: F = {} misses part of {}",
            sys.ty(),
            label_set(sys, sys.right_descents(&v)),
            label_set(sys, rest)
        )));
    }
    Ok(v)
}

/// The diagram chain `1 — 2 — ⋯` used for types A, B and D. For `D₃`
/// that chain gives `S(v) = {0,1} ⊄ F(u)`, so the A₃ chain `0 — 2 — 1` is
/// used instead.
pub fn standard_chain(sys: &CoxeterSystem) -> Result<Vec<usize>> {
    let g = sys.graph();
    let labels: Vec<u32> = match sys.ty() {
        CoxeterType::A(n) => (1..=n as u32).collect(),
        CoxeterType::D(3) => vec![0, 2, 1],
        CoxeterType::B(n) | CoxeterType::D(n) => (1..n as u32).collect(),
        t => return Err(Error::Config(format!("no standard chain for type {t}"))),
    };
    Ok(labels.into_iter().map(|l| g.index_of_label(l).unwrap()).collect())
}

/// The factors `x₁ | x₂ | x₃ | x₄` joining `x` to `y` through the standard
/// chain, each checked to be a proper simple; the caller checks the pairs.
pub fn five_factor_bridge(
    sys: &CoxeterSystem,
    x: &GroupElement,
    y: &GroupElement,
) -> Result<[GroupElement; 4]> {
    let chain = standard_chain(sys)?;
    let mid = chain[chain.len().div_ceil(2) - 1];
    let a = sys
        .right_descents(x)
        .first()
        .ok_or_else(|| Error::Config("x must not be the identity".into()))?;
    let b = AtomSet::full(sys.rank())
        .difference(sys.left_descents(y))
        .first()
        .ok_or_else(|| Error::Config("y must not be Δ".into()))?;
    let x1 = connecting_element(sys, a, mid)?.x;
    let x2 = u_element(sys, &chain)?;
    let x3 = v_element(sys, &chain)?;
    let x4 = connecting_element(sys, mid, b)?.y;
    Ok([x1, x2, x3, x4])
}

/// An expected starting or finishing set, in diagram labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelSet {
    Only(Vec<u32>),
    AllBut(Vec<u32>),
}

impl LabelSet {
    fn resolve(&self, sys: &CoxeterSystem) -> Result<AtomSet> {
        let g = sys.graph();
        let set = |ls: &[u32]| -> Result<AtomSet> {
            ls.iter()
                .map(|&l| {
                    g.index_of_label(l)
                        .ok_or_else(|| Error::Parse(format!("no atom labelled {l} in {}", sys.ty())))
                })
                .collect()
        };
        Ok(match self {
            LabelSet::Only(ls) => set(ls)?,
            LabelSet::AllBut(ls) => AtomSet::full(sys.rank()).difference(set(ls)?),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "type")]
    pub ty: String,
    pub name: String,
    /// Single-digit diagram labels, as printed.
    pub word: String,
    pub start: LabelSet,
    pub finish: LabelSet,
}

/// Witness words for the exceptional types.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessCatalog(pub Vec<Witness>);

impl WitnessCatalog {
    pub fn builtin() -> Self {
        Self::from_json(include_str!("../fixtures/witnesses.json")).expect("built-in catalog parses")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Entries for one type, e.g. `"F4"`.
    pub fn of_type(&self, ty: CoxeterType) -> Vec<&Witness> {
        let name = ty.to_string();
        self.0.iter().filter(|w| w.ty.eq_ignore_ascii_case(&name)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessCheck {
    #[serde(rename = "type")]
    pub ty: String,
    pub name: String,
    pub word: String,
    pub reduced: bool,
    pub expected_start: String,
    pub start: String,
    pub expected_finish: String,
    pub finish: String,
    pub pass: bool,
}

impl WitnessCheck {
    /// One `PASS`/`FAIL` line; failures show computed against expected sets.
    pub fn line(&self) -> String {
        if self.pass {
            format!("PASS {} {} = {}: S={} F={}", self.ty, self.name, self.word, self.start, self.finish)
        } else {
            format!(
                "FAIL {} {} = {}: reduced={} S={} (expected {}) F={} (expected {})",
                self.ty,
                self.name,
                self.word,
                self.reduced,
                self.start,
                self.expected_start,
                self.finish,
                self.expected_finish
            )
        }
    }
}

/// Checks every catalog word: reduced (hence simple) with exactly the
/// stated starting and finishing sets.
pub fn verify_witnesses(catalog: &WitnessCatalog) -> Result<Vec<WitnessCheck>> {
    let mut systems: BTreeMap<String, CoxeterSystem> = BTreeMap::new();
    let mut out = Vec::new();
    for w in &catalog.0 {
        let ty: CoxeterType = w.ty.parse()?;
        let sys = match systems.entry(ty.to_string()) {
            std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::btree_map::Entry::Vacant(e) => e.insert(CoxeterSystem::new(ty)?),
        };
        let word = sys.graph().parse_word(&w.word)?;
        let (elem, reduced) = sys.element_of_word(&word);
        let (s, f) = (sys.left_descents(&elem), sys.right_descents(&elem));
        let (es, ef) = (w.start.resolve(sys)?, w.finish.resolve(sys)?);
        let proper = !s.is_empty() && s != AtomSet::full(sys.rank());
        out.push(WitnessCheck {
            ty: ty.to_string(),
            name: w.name.clone(),
            word: w.word.clone(),
            reduced,
            expected_start: label_set(sys, es),
            start: label_set(sys, s),
            expected_finish: label_set(sys, ef),
            finish: label_set(sys, f),
            pass: reduced && proper && s == es && f == ef,
        });
    }
    Ok(out)
}

/// The four families of proper simples of `I₂(p)`:
/// `a = 2(12)^k`, `b = 1(21)^k2`, `c = 2(12)^k1`, `d = 1(21)^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum I2Class {
    A,
    B,
    C,
    D,
}

impl I2Class {
    pub const ALL: [I2Class; 4] = [I2Class::A, I2Class::B, I2Class::C, I2Class::D];

    pub fn tag(self) -> char {
        match self {
            I2Class::A => 'a',
            I2Class::B => 'b',
            I2Class::C => 'c',
            I2Class::D => 'd',
        }
    }

    /// The word needed between two classes: `None` for a direct edge,
    /// otherwise `12` or `21` (diagram labels).
    pub fn connector(self, next: I2Class) -> Option<&'static str> {
        use I2Class::*;
        match (self, next) {
            (A | B, B | D) => Some("21"),
            (C | D, A | C) => Some("12"),
            _ => None,
        }
    }
}

fn require_i2(g: &ArtinGarside) -> Result<usize> {
    match g.system().ty() {
        CoxeterType::I2(p) => Ok(p),
        t => Err(Error::Config(format!("expected a dihedral type, got {t}"))),
    }
}

/// Class and exponent `k` of a proper simple of `I₂(p)`.
pub fn i2_classify(g: &ArtinGarside, s: Simple) -> Result<(I2Class, usize)> {
    require_i2(g)?;
    if !is_proper(g, s) {
        return Err(Error::Config(format!("{} is not a proper simple", g.display(s))));
    }
    // proper simples have a unique reduced word, alternating in the atoms
    let word = g.word(s);
    let first = g.system().graph().label(word[0]);
    let n = word.len();
    let class = match (first, n % 2) {
        (2, 1) => I2Class::A,
        (1, 0) => I2Class::B,
        (2, 0) => I2Class::C,
        _ => I2Class::D,
    };
    Ok((class, (n - 1) / 2))
}

/// Verifies the connection table on every pair of proper simples.
pub fn verify_i2_table(g: &ArtinGarside) -> Result<usize> {
    require_i2(g)?;
    let sys = g.system();
    let simples = crate::garside::proper_simples(g);
    let parse = |w: &str| -> Result<Simple> {
        g.from_word(&sys.graph().parse_word(w)?)
            .ok_or_else(|| Error::Defect(format!("{w} is not simple")))
    };
    let (m12, m21) = (parse("12")?, parse("21")?);
    let classes: Vec<I2Class> = simples
        .iter()
        .map(|&s| i2_classify(g, s).map(|c| c.0))
        .collect::<Result<_>>()?;
    let mut checked = 0;
    for (i, &s) in simples.iter().enumerate() {
        for (j, &t) in simples.iter().enumerate() {
            let ok = match classes[i].connector(classes[j]) {
                None => is_normal_pair(g, s, t),
                Some(w) => {
                    let m = if w == "12" { m12 } else { m21 };
                    is_normal_pair(g, s, m) && is_normal_pair(g, m, t)
                }
            };
            if !ok {
                return Err(Error::Defect(format!(
                    "I2 table fails for {} ({}) → {} ({})",
                    g.display(s),
                    classes[i].tag(),
                    g.display(t),
                    classes[j].tag()
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// One structure of the transitivity harness with its expected outcome.
#[derive(Clone, Copy, Debug)]
pub struct HarnessCase {
    pub structure: &'static str,
    pub irreducible: bool,
    pub diameter: Option<usize>,
}

const fn case(structure: &'static str, diameter: usize) -> HarnessCase {
    HarnessCase { structure, irreducible: true, diameter: Some(diameter) }
}

const fn reducible(structure: &'static str) -> HarnessCase {
    HarnessCase { structure, irreducible: false, diameter: None }
}

pub const HARNESS_DEFAULT: &[HarnessCase] = &[
    case("artin:A2", 2),
    case("artin:A3", 4),
    case("artin:A4", 5),
    case("artin:A5", 5),
    case("artin:B2", 2),
    case("artin:B3", 4),
    case("artin:B4", 4),
    case("artin:B5", 5),
    case("artin:D3", 4),
    case("artin:D4", 4),
    case("artin:D5", 4),
    case("artin:H3", 3),
    case("artin:H4", 3),
    case("artin:F4", 3),
    case("artin:I2(3)", 2),
    case("artin:I2(5)", 2),
    case("artin:I2(7)", 2),
    reducible("prod:artin:A2,artin:A2"),
    reducible("prod:artin:A1,artin:A1"),
    reducible("prod:artin:A2,artin:B2"),
];

pub const HARNESS_HEAVY: &[HarnessCase] = &[case("artin:E6", 4)];

#[derive(Clone, Debug, Serialize)]
pub struct HarnessRow {
    pub structure: String,
    pub irreducible: bool,
    pub transitive: bool,
    pub k: Option<usize>,
    pub expected_k: Option<usize>,
    pub pass: bool,
    pub seconds: f64,
}

/// The acceptor of a descriptor; Artin types are streamed from the group.
pub fn acceptor_for(desc: &str, opts: &BuildOptions) -> Result<crate::langgraph::LangGraph> {
    let trimmed = desc.trim();
    if let Some(ty) = trimmed.strip_prefix("artin:") {
        let sys = CoxeterSystem::new(ty.parse()?)?;
        return acceptor_from_system(&sys, opts.cap.max(DEFAULT_ENUMERATION_CAP));
    }
    build_acceptor(build_structure(trimmed, opts)?.as_ref())
}

/// Irreducible structures are transitive with `k ≤ 5` (and the stated
/// diameter where known); reducible ones are not transitive.
pub fn transitivity_harness(cases: &[HarnessCase], opts: &BuildOptions) -> Result<Vec<HarnessRow>> {
    cases
        .iter()
        .map(|c| {
            let t0 = Instant::now();
            let t = essential_transitivity(&acceptor_for(c.structure, opts)?);
            let pass = if c.irreducible {
                t.transitive && t.k.is_some_and(|k| k <= 5) && (c.diameter.is_none() || t.k == c.diameter)
            } else {
                !t.transitive
            };
            Ok(HarnessRow {
                structure: c.structure.to_string(),
                irreducible: c.irreducible,
                transitive: t.transitive,
                k: t.k,
                expected_k: c.diameter,
                pass,
                seconds: t0.elapsed().as_secs_f64(),
            })
        })
        .collect()
}
