use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{components, count_sequence, LangGraph};
use crate::error::{Error, Result};

const TOLERANCE: f64 = 1e-10;
const MAX_ITERATIONS: usize = 100_000;
const RATE_TIE: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct GrowthProfile {
    /// Exponential growth rate (largest spectral radius over components).
    pub rate: f64,
    /// Polynomial degree: rate-achieving components along one path, minus one.
    pub degree: usize,
    /// Spectral radius of every non-trivial component, in component order.
    pub component_rates: Vec<f64>,
}

/// Perron eigenvalue of the weighted adjacency restricted to `nodes` (which
/// must form a strongly connected set), by power iteration on `W + I` with
/// Collatz–Wielandt bounds as the stopping rule.
pub fn spectral_radius(g: &LangGraph, nodes: &[usize]) -> Result<f64> {
    let n = g.num_nodes();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in nodes.iter().enumerate() {
        local[v] = i;
    }
    // in-edges within the block, weighted by source size
    let preds: Vec<Vec<(usize, f64)>> = nodes
        .iter()
        .map(|&d| {
            g.predecessors(d)
                .iter()
                .filter(|&&b| local[b as usize] != usize::MAX)
                .map(|&b| (local[b as usize], g.weight(b as usize) as f64))
                .collect()
        })
        .collect();
    if preds.iter().all(|p| p.is_empty()) {
        return Ok(0.0);
    }
    let mut v = vec![1.0f64; nodes.len()];
    let mut last = 0.0;
    for _ in 0..MAX_ITERATIONS {
        let next: Vec<f64> = (0..nodes.len())
            .map(|i| v[i] + preds[i].iter().map(|&(b, w)| w * v[b]).sum::<f64>())
            .collect();
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for i in 0..nodes.len() {
            let r = next[i] / v[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        last = 0.5 * (lo + hi) - 1.0;
        if hi - lo <= TOLERANCE * hi {
            return Ok(last);
        }
        let norm = next.iter().cloned().fold(0.0, f64::max);
        v = next.into_iter().map(|x| x / norm).collect();
    }
    Err(Error::Numeric { iterations: MAX_ITERATIONS, last })
}

/// Growth rate and polynomial degree of the number of paths.
pub fn growth_profile(g: &LangGraph) -> Result<GrowthProfile> {
    let comps = components(g);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); comps.count];
    for v in 0..g.num_nodes() {
        members[comps.comp[v] as usize].push(v);
    }
    let mut rates = vec![0.0f64; comps.count];
    for c in 0..comps.count {
        if comps.nontrivial[c] {
            rates[c] = spectral_radius(g, &members[c])?;
        }
    }
    let rate = rates.iter().cloned().fold(0.0, f64::max);
    let degree = if rate == 0.0 {
        0
    } else {
        let top = |c: usize| comps.nontrivial[c] && rates[c] >= rate * (1.0 - RATE_TIE);
        // ids are reverse topological: successors have smaller ids
        let mut best = vec![0usize; comps.count];
        for c in 0..comps.count {
            let mut m = 0;
            for &v in &members[c] {
                for &d in g.successors(v) {
                    let dc = comps.comp[d as usize] as usize;
                    if dc != c {
                        m = m.max(best[dc]);
                    }
                }
            }
            best[c] = m + top(c) as usize;
        }
        best.into_iter().max().unwrap_or(1).saturating_sub(1)
    };
    let component_rates = (0..comps.count)
        .filter(|&c| comps.nontrivial[c])
        .map(|c| rates[c])
        .collect();
    Ok(GrowthProfile { rate, degree, component_rates })
}

/// Consecutive ratios `|L^(j+1)| / |L^(j)|` for `j = 1..k`, as a sanity
/// channel next to the spectral estimate.
pub fn ratio_sequence(g: &LangGraph, k: usize) -> Vec<f64> {
    ratios(&count_sequence(g, k + 1)[1..])
}

pub(crate) fn ratios(counts: &[BigUint]) -> Vec<f64> {
    counts
        .windows(2)
        .map(|w| match (w[0].to_f64(), w[1].to_f64()) {
            (Some(a), Some(b)) if a > 0.0 => b / a,
            _ => 0.0,
        })
        .collect()
}
