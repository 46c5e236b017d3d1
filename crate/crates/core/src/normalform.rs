//! Left-greedy normal forms.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::garside::{Garside, Simple};

/// `Δ^inf · x₁ | ⋯ | x_ℓ` with proper factors satisfying `∂xᵢ ∧ xᵢ₊₁ = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NormalForm {
    pub inf: usize,
    pub factors: Vec<Simple>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm::default()
    }

    /// An L-word taken as-is (no normalization).
    pub fn from_factors(factors: Vec<Simple>) -> Self {
        NormalForm { inf: 0, factors }
    }

    pub fn sup(&self) -> usize {
        self.inf + self.factors.len()
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// The word `Δ^inf` followed by the factors.
    pub fn to_word<G: Garside + ?Sized>(&self, g: &G) -> Vec<Simple> {
        let mut w = vec![g.delta(); self.inf];
        w.extend_from_slice(&self.factors);
        w
    }

    /// Renders as `Δ^k · s1 | s2 | …`.
    pub fn render<G: Garside + ?Sized>(&self, g: &G) -> String {
        let body: Vec<String> = self.factors.iter().map(|&s| g.display(s)).collect();
        let mut out = String::new();
        if self.inf > 0 || body.is_empty() {
            write!(out, "Δ^{}", self.inf).unwrap();
            if !body.is_empty() {
                out.push_str(" · ");
            }
        }
        out.push_str(&body.join(" | "));
        out
    }

    /// Parses the output of [`NormalForm::render`]; the result is normalized.
    pub fn parse<G: Garside + ?Sized>(g: &G, text: &str) -> Result<Self> {
        let text = text.trim();
        let (inf, rest) = match text.strip_prefix("Δ^") {
            Some(r) => {
                let (k, rest) = r.split_once('·').unwrap_or((r, ""));
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad Δ exponent in {text:?}")))?;
                (k, rest)
            }
            None => (0, text),
        };
        let mut word = vec![g.delta(); inf];
        for name in rest.split('|').map(str::trim).filter(|s| !s.is_empty()) {
            word.push(
                g.parse_simple(name)
                    .ok_or_else(|| Error::Parse(format!("unknown simple {name:?}")))?,
            );
        }
        Ok(normalize(g, &word))
    }
}

/// The local transformation on an adjacent pair; returns `true` on change.
#[inline]
fn left_weight<G: Garside + ?Sized>(g: &G, w: &mut [Simple], i: usize) -> bool {
    let (u, v) = (w[i], w[i + 1]);
    let t = g.meet(g.right_complement(u), v);
    if t == Simple::ONE {
        return false;
    }
    w[i] = g.product(u, t).expect("u·(∂u ∧ v) is simple");
    w[i + 1] = g.left_divide(t, v).expect("t ≼ v");
    true
}

/// Order of the sweeps in [`normalize_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sweep {
    RightToLeft,
    LeftToRight,
}

pub fn normalize<G: Garside + ?Sized>(g: &G, word: &[Simple]) -> NormalForm {
    normalize_with(g, word, Sweep::RightToLeft)
}

/// Repeats full sweeps of the local transformation until nothing changes,
/// then moves Δ factors into the exponent and drops identity factors.
pub fn normalize_with<G: Garside + ?Sized>(g: &G, word: &[Simple], sweep: Sweep) -> NormalForm {
    let mut w = word.to_vec();
    if w.len() > 1 {
        loop {
            let mut changed = false;
            match sweep {
                Sweep::RightToLeft => {
                    for i in (0..w.len() - 1).rev() {
                        changed |= left_weight(g, &mut w, i);
                    }
                }
                Sweep::LeftToRight => {
                    for i in 0..w.len() - 1 {
                        changed |= left_weight(g, &mut w, i);
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
    strip(g, w)
}

fn strip<G: Garside + ?Sized>(g: &G, w: Vec<Simple>) -> NormalForm {
    let delta = g.delta();
    let inf = w.iter().take_while(|&&s| s == delta).count();
    let factors: Vec<Simple> = w[inf..]
        .iter()
        .copied()
        .filter(|&s| s != Simple::ONE)
        .collect();
    debug_assert!(!factors.contains(&delta));
    NormalForm { inf, factors }
}

/// `∂x ∧ y = 1`.
pub fn is_normal_pair<G: Garside + ?Sized>(g: &G, x: Simple, y: Simple) -> bool {
    g.meet(g.right_complement(x), y) == Simple::ONE
}

/// True iff no factor is the identity and every adjacent pair is normal
/// (Δ factors can then only form a leading run).
pub fn is_normal<G: Garside + ?Sized>(g: &G, word: &[Simple]) -> bool {
    !word.contains(&Simple::ONE) && word.windows(2).all(|p| is_normal_pair(g, p[0], p[1]))
}

/// `NF(x·y)` by full renormalization.
pub fn multiply<G: Garside + ?Sized>(g: &G, x: &NormalForm, y: Simple) -> NormalForm {
    let mut word = x.factors.clone();
    word.push(y);
    let mut nf = normalize(g, &word);
    nf.inf += x.inf;
    nf
}

/// `NF(x·y)` by a single right-to-left pass of left-weighting over
/// `x₁|⋯|x_k|y` that stops as soon as a pair is already normal. `touched`
/// counts the factors of `x` that changed.
pub fn multiply_incremental<G: Garside + ?Sized>(
    g: &G,
    x: &NormalForm,
    y: Simple,
) -> (NormalForm, usize) {
    let mut w = x.factors.clone();
    w.push(y);
    let mut touched = 0;
    for i in (0..w.len() - 1).rev() {
        if !left_weight(g, &mut w, i) {
            break;
        }
        touched += 1;
    }
    let mut nf = strip(g, w);
    nf.inf += x.inf;
    (nf, touched)
}

/// Applies `∂̃²` `times` times.
fn conjugate_back<G: Garside + ?Sized>(g: &G, s: Simple, times: usize) -> Simple {
    (0..times).fold(s, |acc, _| g.left_complement(g.left_complement(acc)))
}

/// Penetration distance `pd(x, y)` for `x` given by its normal form and `y`
/// given as a word of simples, by comparing factor sequences of `NF(x)` and
/// `NF(xy)Δ^{-inf(xy)}`.
pub fn penetration_distance<G: Garside + ?Sized>(g: &G, x: &NormalForm, y: &[Simple]) -> usize {
    let base = NormalForm::from_factors(x.factors.clone());
    let mut xy = base.clone();
    for &s in y {
        xy = multiply_incremental(g, &xy, s).0;
    }
    let zhat: Vec<Simple> = xy
        .factors
        .iter()
        .map(|&z| conjugate_back(g, z, xy.inf))
        .collect();
    let lcp = base
        .factors
        .iter()
        .zip(&zhat)
        .take_while(|(a, b)| a == b)
        .count();
    base.factors.len() - lcp
}

/// `Δ ∧ w` for an arbitrary word, with the word left-weighted in place so
/// that `w[0]` becomes the head and `w[1..]` a word for the remainder.
fn extract_head<G: Garside + ?Sized>(g: &G, w: &mut [Simple]) -> Simple {
    for i in (0..w.len().saturating_sub(1)).rev() {
        left_weight(g, w, i);
    }
    w.first().copied().unwrap_or(Simple::ONE)
}

/// The sequence of iterated heads `Δ ∧ w`, `Δ ∧ (head\w)`, … up to `len`
/// terms, padded with the identity.
fn iterated_heads<G: Garside + ?Sized>(g: &G, word: &[Simple], len: usize) -> Vec<Simple> {
    let mut w = word.to_vec();
    let mut heads = Vec::with_capacity(len);
    for start in 0..len {
        if start < w.len() {
            heads.push(extract_head(g, &mut w[start..]));
        } else {
            heads.push(Simple::ONE);
        }
    }
    heads
}

/// Independent evaluation of `pd` from its definition: the meets
/// `w ∧ Δ^i` are computed as products of iterated heads of the raw words.
pub fn penetration_distance_literal<G: Garside + ?Sized>(
    g: &G,
    x: &NormalForm,
    y: &[Simple],
) -> usize {
    let cl = x.factors.len();
    let delta = g.delta();
    let mut xy_word = x.factors.clone();
    xy_word.extend_from_slice(y);
    let total = xy_word.len();
    let heads_xy = iterated_heads(g, &xy_word, total);
    let q = heads_xy.iter().take_while(|&&h| h == delta).count();
    let rest: Vec<Simple> = heads_xy[q..]
        .iter()
        .map(|&h| conjugate_back(g, h, q))
        .collect();
    let heads_x = iterated_heads(g, &x.factors, cl);
    let pad = |v: &[Simple], i: usize| v.get(i).copied().unwrap_or(Simple::ONE);
    let meet_equal = |i: usize| (0..i).all(|j| pad(&heads_x, j) == pad(&rest, j));
    let best = (0..=cl).rev().find(|&i| meet_equal(i)).unwrap_or(0);
    cl - best
}
