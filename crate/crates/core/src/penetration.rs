//! Penetration sequences: the automaton Π over `𝒫 = {(s,m) : sm ≼ Δ}`, its
//! extension Π̃ allowing `m = 1`, counting and the comparison of growth rates.
//!
//! Paths run in display order: a path `(s_k,m_k) → ⋯ → (s_1,m_1)` is the
//! penetration sequence written `(s_k,m_k).⋯.(s_1,m_1)`. An edge
//! `(p,m_p) → (q,m_q)` exists iff `p|q` is normal and `m_p = ∂p ∧ q·m_q`,
//! and, in Π only, `q·m_q ≠ Δ` and `m_p ≠ 1`.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::{proper_simples, DirectProduct, Garside, Simple};
use crate::langgraph::{count_sequence, growth_profile, ratio_sequence, LangGraph};
use crate::normalform::is_normal_pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PenState {
    pub s: Simple,
    pub m: Simple,
}

impl PenState {
    pub fn render<G: Garside + ?Sized>(&self, g: &G) -> String {
        format!("({};{})", g.display(self.s), g.display(self.m))
    }
}

/// A penetration automaton together with its state list.
pub struct PenGraph {
    pub states: Vec<PenState>,
    pub graph: LangGraph,
    index: HashMap<PenState, u32>,
}

impl PenGraph {
    pub fn node_of(&self, t: PenState) -> Option<usize> {
        self.index.get(&t).map(|&i| i as usize)
    }
}

/// `𝒫` (or `𝒫̃` when `with_one`), ordered by `s` then `m`.
pub fn pen_states<G: Garside + ?Sized>(g: &G, with_one: bool) -> Vec<PenState> {
    let proper = proper_simples(g);
    let mut out = Vec::new();
    for &s in &proper {
        if with_one {
            out.push(PenState { s, m: Simple::ONE });
        }
        for &m in &proper {
            if g.product(s, m).is_some() {
                out.push(PenState { s, m });
            }
        }
    }
    out
}

fn build(g: &dyn Garside, tilde: bool, cap: u128) -> Result<PenGraph> {
    let proper = proper_simples(g);
    let states = pen_states(g, tilde);
    if states.len() as u128 > cap {
        return Err(Error::CapExceeded { count: states.len() as u128, cap });
    }
    let index: HashMap<PenState, u32> =
        states.iter().enumerate().map(|(i, &t)| (t, i as u32)).collect();
    // Γ in-neighbours of every proper simple
    let mut gamma_pred: HashMap<Simple, Vec<Simple>> = HashMap::new();
    for &q in &proper {
        gamma_pred.insert(q, proper.iter().copied().filter(|&p| is_normal_pair(g, p, q)).collect());
    }
    let delta = g.delta();
    let mut edges = Vec::new();
    for (j, t) in states.iter().enumerate() {
        let qm = g.product(t.s, t.m).expect("state product is simple");
        if !tilde && qm == delta {
            continue;
        }
        for &p in &gamma_pred[&t.s] {
            let mp = g.meet(g.right_complement(p), qm);
            if !tilde && mp == Simple::ONE {
                continue;
            }
            let i = index[&PenState { s: p, m: mp }];
            edges.push((i, j as u32));
        }
    }
    let names = states.iter().map(|t| t.render(g)).collect();
    let graph = LangGraph::from_edges(names, vec![1; states.len()], edges);
    Ok(PenGraph { states, graph, index })
}

/// The automaton Π accepting penetration sequences.
pub fn build_pi(g: &dyn Garside, cap: u128) -> Result<PenGraph> {
    build(g, false, cap)
}

/// The extension Π̃ over `𝒫̃`.
pub fn build_pi_tilde(g: &dyn Garside, cap: u128) -> Result<PenGraph> {
    build(g, true, cap)
}

/// `|PSeq^(j)|` for `j = 0..=k`.
pub fn count_pseq(pi: &PenGraph, k: usize) -> Vec<BigUint> {
    count_sequence(&pi.graph, k)
}

/// Checks a sequence, given in display order, against the definition of a
/// penetration sequence.
pub fn is_penetration_sequence<G: Garside + ?Sized>(g: &G, seq: &[PenState]) -> bool {
    let proper = |x: Simple| x != Simple::ONE && x != g.delta();
    if seq.is_empty() || !seq.iter().all(|t| proper(t.s) && proper(t.m)) {
        return false;
    }
    // index 1 is the rightmost entry
    let at = |i: usize| seq[seq.len() - i];
    if g.product(at(1).s, at(1).m).is_none() {
        return false;
    }
    for i in 1..seq.len() {
        let (cur, next) = (at(i), at(i + 1));
        let Some(sm) = g.product(cur.s, cur.m) else { return false };
        if sm == g.delta() || !is_normal_pair(g, next.s, cur.s) {
            return false;
        }
        if next.m != g.meet(g.right_complement(next.s), sm) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaBeta {
    pub alpha: f64,
    pub beta: f64,
    pub alpha_degree: usize,
    pub beta_degree: usize,
    pub alpha_lt_beta: bool,
    /// Last consecutive count ratios of PSeq and L, as evidence.
    pub alpha_ratio: f64,
    pub beta_ratio: f64,
}

/// Growth rates of Π and Γ and their comparison (relative tolerance 10⁻⁶).
pub fn alpha_beta_report(pi: &PenGraph, gamma: &LangGraph, ratio_k: usize) -> Result<AlphaBeta> {
    let a = growth_profile(&pi.graph)?;
    let b = growth_profile(gamma)?;
    let last = |v: Vec<f64>| v.last().copied().unwrap_or(0.0);
    Ok(AlphaBeta {
        alpha: a.rate,
        beta: b.rate,
        alpha_degree: a.degree,
        beta_degree: b.degree,
        alpha_lt_beta: a.rate < b.rate * (1.0 - 1e-6),
        alpha_ratio: last(ratio_sequence(&pi.graph, ratio_k)),
        beta_ratio: last(ratio_sequence(gamma, ratio_k)),
    })
}

/// The sequence `π_{g,h}` for normal words `g` of `G` and `h` of `H` of equal
/// length, in display order, validated against the definition.
pub fn product_pseq_witness(
    prod: &DirectProduct,
    g_word: &[Simple],
    h_word: &[Simple],
) -> Result<Vec<PenState>> {
    let k = g_word.len();
    if k == 0 || h_word.len() != k {
        return Err(Error::Config("factor words must be non-empty and of equal length".into()));
    }
    let x: Vec<Simple> = g_word.iter().zip(h_word).map(|(&a, &b)| prod.pair(a, b)).collect();
    let mut m = vec![Simple::ONE; k];
    m[k - 1] = prod.pair(Simple::ONE, prod.right().right_complement(h_word[k - 1]));
    for i in (0..k - 1).rev() {
        let next = prod.product(x[i + 1], m[i + 1]).ok_or_else(|| {
            Error::Defect(format!("x_{} m_{} is not simple", i + 2, i + 2))
        })?;
        m[i] = prod.meet(prod.right_complement(x[i]), next);
    }
    let seq: Vec<PenState> = x.into_iter().zip(m).map(|(s, m)| PenState { s, m }).collect();
    if !is_penetration_sequence(prod, &seq) {
        let shown: Vec<String> = seq.iter().map(|t| t.render(prod)).collect();
        return Err(Error::Defect(format!("not a penetration sequence: {}", shown.join("."))));
    }
    Ok(seq)
}
