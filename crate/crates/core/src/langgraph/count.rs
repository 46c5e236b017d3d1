use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use super::{components, LangGraph};
use crate::error::{Error, Result};
use crate::garside::Simple;

/// `f[c]` = number of `j`-vertex paths ending at one fixed vertex of node
/// `c`; advances `j` by one.
fn step_into(g: &LangGraph, f: &[BigUint]) -> Vec<BigUint> {
    (0..g.num_nodes())
        .map(|d| {
            let mut acc = BigUint::zero();
            for &b in g.predecessors(d) {
                acc += &f[b as usize] * g.weight(b as usize);
            }
            acc
        })
        .collect()
}

fn total(g: &LangGraph, f: &[BigUint]) -> BigUint {
    f.iter().enumerate().map(|(c, x)| x * g.weight(c)).sum()
}

/// `|L^(j)|` for `j = 0..=k` (the empty word counts once).
pub fn count_sequence(g: &LangGraph, k: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut f = vec![BigUint::one(); g.num_nodes()];
    for j in 1..=k {
        if j > 1 {
            f = step_into(g, &f);
        }
        out.push(total(g, &f));
    }
    out
}

/// Number of `k`-vertex paths; with `last`, only those ending at that vertex.
pub fn count_words(g: &LangGraph, k: usize, last: Option<Simple>) -> Result<BigUint> {
    let Some(s) = last else {
        return Ok(count_sequence(g, k).pop().unwrap());
    };
    let c = g
        .node_of(s)
        .ok_or_else(|| Error::Config(format!("{s:?} is not a vertex of the graph")))?;
    if k == 0 {
        return Ok(BigUint::zero());
    }
    let mut f = vec![BigUint::one(); g.num_nodes()];
    for _ in 1..k {
        f = step_into(g, &f);
    }
    Ok(f.swap_remove(c))
}

/// `Σ_{j ≤ k} |L^(j)|`, the size of `L̄^(k)`.
pub fn count_ball(g: &LangGraph, k: usize) -> BigUint {
    count_sequence(g, k).into_iter().sum()
}

/// Closed walks of `j` edges (rigid words of length `j`) for `j = 0..=k`;
/// entry 0 is zero by convention.
pub fn count_rigid_sequence(g: &LangGraph, k: usize) -> Vec<BigUint> {
    let comps = components(g);
    let live: Vec<usize> = (0..g.num_nodes())
        .filter(|&v| comps.nontrivial[comps.comp[v] as usize])
        .collect();
    let per_source: Vec<Vec<BigUint>> = live
        .par_iter()
        .map(|&src| {
            let id = comps.comp[src];
            // h[d] = walks from one fixed vertex of src to one fixed vertex of d
            let mut h: Vec<BigUint> = vec![BigUint::zero(); g.num_nodes()];
            for &d in g.successors(src) {
                if comps.comp[d as usize] == id {
                    h[d as usize] = BigUint::one();
                }
            }
            let w = g.weight(src);
            let mut out = vec![BigUint::zero(); k + 1];
            for (j, slot) in out.iter_mut().enumerate().skip(1) {
                if j > 1 {
                    let mut next = vec![BigUint::zero(); g.num_nodes()];
                    for v in 0..g.num_nodes() {
                        if comps.comp[v] != id || h[v].is_zero() {
                            continue;
                        }
                        let x = &h[v] * g.weight(v);
                        for &d in g.successors(v) {
                            if comps.comp[d as usize] == id {
                                next[d as usize] += &x;
                            }
                        }
                    }
                    h = next;
                }
                *slot = &h[src] * w;
            }
            out
        })
        .collect();
    let mut out = vec![BigUint::zero(); k + 1];
    for v in per_source {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    out
}

/// Rigid words of length `k`: normal words `x₁|⋯|x_k` with `x_k|x₁` normal.
pub fn count_rigid(g: &LangGraph, k: usize) -> BigUint {
    count_rigid_sequence(g, k).pop().unwrap()
}

/// Exact uniform sampler for `L^(k)` via suffix counts.
pub struct Sampler<'a> {
    g: &'a LangGraph,
    k: usize,
    /// `suffix[j][c]`: paths of `j` vertices starting at a fixed vertex of `c`.
    suffix: Vec<Vec<BigUint>>,
    total: BigUint,
}

impl<'a> Sampler<'a> {
    pub fn new(g: &'a LangGraph, k: usize) -> Result<Self> {
        let n = g.num_nodes();
        let mut suffix = vec![vec![BigUint::zero(); n], vec![BigUint::one(); n]];
        for _ in 2..=k {
            let prev = suffix.last().unwrap();
            let next = (0..n)
                .map(|c| {
                    let mut acc = BigUint::zero();
                    for &d in g.successors(c) {
                        acc += &prev[d as usize] * g.weight(d as usize);
                    }
                    acc
                })
                .collect();
            suffix.push(next);
        }
        let total = if k == 0 { BigUint::one() } else { total(g, &suffix[k]) };
        if k == 0 || total.is_zero() {
            return Err(Error::EmptyLanguage { k });
        }
        Ok(Sampler { g, k, suffix, total })
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    fn pick<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        candidates: impl Iterator<Item = usize>,
        j: usize,
        mass: &BigUint,
    ) -> usize {
        let mut r = rng.gen_biguint_below(mass);
        for c in candidates {
            let w = &self.suffix[j][c] * self.g.weight(c);
            if r < w {
                return c;
            }
            r -= w;
        }
        unreachable!("sampling mass is consistent with suffix counts")
    }

    /// A uniformly random path as node indices together with, for each
    /// position, the index of the chosen vertex inside its node.
    pub fn sample_nodes<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<(usize, u64)> {
        let g = self.g;
        let mut out = Vec::with_capacity(self.k);
        let mut c = self.pick(rng, 0..g.num_nodes(), self.k, &self.total);
        out.push((c, rng.gen_range(0..g.weight(c))));
        for j in (1..self.k).rev() {
            let mass = &self.suffix[j + 1][c];
            c = self.pick(rng, g.successors(c).iter().map(|&d| d as usize), j, mass);
            out.push((c, rng.gen_range(0..g.weight(c))));
        }
        out
    }

    /// A uniformly random word of `L^(k)` (requires materialized members).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Simple> {
        self.sample_nodes(rng)
            .into_iter()
            .map(|(c, i)| self.g.members(c)[i as usize])
            .collect()
    }
}
