//! The acceptor Γ of the language of normal forms, its strongly connected
//! components, exact path counting and growth rates.
//!
//! A [`LangGraph`] is a digraph over *nodes* that stand for one or more
//! *vertices*: in a raw graph every node is a single vertex, in a class
//! quotient a node is the set of proper simples sharing `(S(x), F(x))`. Edges
//! are node-level; vertex-level adjacency is "node adjacency of the classes".

mod count;
mod growth;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::garside::{proper_simples, AtomSet, Garside, Simple};
use crate::normalform::is_normal_pair;

pub use count::{
    count_ball, count_rigid, count_rigid_sequence, count_sequence, count_words, Sampler,
};
pub use growth::{growth_profile, ratio_sequence, spectral_radius, GrowthProfile};

/// Largest vertex count for which a raw (vertex-level) acceptor is built.
pub const RAW_LIMIT: usize = 6000;

/// Weighted digraph with compressed adjacency in both directions.
#[derive(Clone, Debug)]
pub struct LangGraph {
    names: Vec<String>,
    weight: Vec<u64>,
    succ_off: Vec<usize>,
    succ: Vec<u32>,
    pred_off: Vec<usize>,
    pred: Vec<u32>,
    members: Vec<Vec<Simple>>,
    keys: Option<Vec<(AtomSet, AtomSet)>>,
    node_of: HashMap<Simple, u32>,
}

fn csr(n: usize, edges: &[(u32, u32)], forward: bool) -> (Vec<usize>, Vec<u32>) {
    let mut off = vec![0usize; n + 1];
    for &(a, b) in edges {
        off[if forward { a } else { b } as usize + 1] += 1;
    }
    for i in 0..n {
        off[i + 1] += off[i];
    }
    let mut fill = off.clone();
    let mut out = vec![0u32; edges.len()];
    for &(a, b) in edges {
        let (from, to) = if forward { (a, b) } else { (b, a) };
        out[fill[from as usize]] = to;
        fill[from as usize] += 1;
    }
    for i in 0..n {
        out[off[i]..off[i + 1]].sort_unstable();
    }
    (off, out)
}

impl LangGraph {
    /// Builds a graph from node names, node weights and node-level edges.
    pub fn from_edges(names: Vec<String>, weight: Vec<u64>, mut edges: Vec<(u32, u32)>) -> Self {
        let n = names.len();
        assert_eq!(weight.len(), n);
        edges.sort_unstable();
        edges.dedup();
        let (succ_off, succ) = csr(n, &edges, true);
        let (pred_off, pred) = csr(n, &edges, false);
        LangGraph {
            names,
            weight,
            succ_off,
            succ,
            pred_off,
            pred,
            members: vec![Vec::new(); n],
            keys: None,
            node_of: HashMap::new(),
        }
    }

    fn with_members(mut self, members: Vec<Vec<Simple>>) -> Self {
        self.node_of = members
            .iter()
            .enumerate()
            .flat_map(|(i, m)| m.iter().map(move |&s| (s, i as u32)))
            .collect();
        self.members = members;
        self
    }

    pub fn num_nodes(&self) -> usize {
        self.names.len()
    }

    /// Number of vertices (sum of node weights).
    pub fn num_vertices(&self) -> u128 {
        self.weight.iter().map(|&w| w as u128).sum()
    }

    /// Number of vertex-level edges.
    pub fn num_edges(&self) -> u128 {
        (0..self.num_nodes())
            .map(|c| {
                let wc = self.weight[c] as u128;
                self.successors(c).iter().map(|&d| wc * self.weight[d as usize] as u128).sum::<u128>()
            })
            .sum()
    }

    pub fn num_node_edges(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, c: usize) -> &[u32] {
        &self.succ[self.succ_off[c]..self.succ_off[c + 1]]
    }

    pub fn predecessors(&self, c: usize) -> &[u32] {
        &self.pred[self.pred_off[c]..self.pred_off[c + 1]]
    }

    pub fn has_edge(&self, c: usize, d: usize) -> bool {
        self.successors(c).binary_search(&(d as u32)).is_ok()
    }

    pub fn weight(&self, c: usize) -> u64 {
        self.weight[c]
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    /// Vertices of a node, when materialized.
    pub fn members(&self, c: usize) -> &[Simple] {
        &self.members[c]
    }

    pub fn node_of(&self, s: Simple) -> Option<usize> {
        self.node_of.get(&s).map(|&c| c as usize)
    }

    pub fn node_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_quotient(&self) -> bool {
        self.keys.is_some()
    }

    /// `(S, F)` key of a class node.
    pub fn class_key(&self, c: usize) -> Option<(AtomSet, AtomSet)> {
        self.keys.as_ref().map(|k| k[c])
    }

    /// Vertex-level in-degree of any vertex of node `c`.
    pub fn vertex_in_degree(&self, c: usize) -> u128 {
        self.predecessors(c).iter().map(|&b| self.weight[b as usize] as u128).sum()
    }

    /// Plain-text digraph: one node per line, then one `src -> dst` per edge.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for (i, n) in self.names.iter().enumerate() {
            if self.weight[i] == 1 {
                writeln!(out, "{n}").unwrap();
            } else {
                writeln!(out, "{n} [size={}]", self.weight[i]).unwrap();
            }
        }
        for c in 0..self.num_nodes() {
            for &d in self.successors(c) {
                writeln!(out, "{} -> {}", self.names[c], self.names[d as usize]).unwrap();
            }
        }
        out
    }
}

/// Builds the acceptor, using the class quotient when the edge law is
/// determined by starting and finishing sets.
pub fn build_acceptor(g: &dyn Garside) -> Result<LangGraph> {
    if g.descent_determined() {
        Ok(build_acceptor_quotient(g))
    } else {
        build_acceptor_raw(g)
    }
}

/// Vertex-level acceptor: edge `x → y` iff `∂x ∧ y = 1`.
pub fn build_acceptor_raw(g: &dyn Garside) -> Result<LangGraph> {
    let verts = proper_simples(g);
    if verts.len() > RAW_LIMIT {
        return Err(Error::CapExceeded { count: verts.len() as u128, cap: RAW_LIMIT as u128 });
    }
    let edges: Vec<(u32, u32)> = (0..verts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let verts = &verts;
            (0..verts.len())
                .filter(move |&j| is_normal_pair(g, verts[i], verts[j]))
                .map(move |j| (i as u32, j as u32))
        })
        .collect();
    let names = verts.iter().map(|&s| g.display(s)).collect();
    let members = verts.iter().map(|&s| vec![s]).collect();
    Ok(LangGraph::from_edges(names, vec![1; verts.len()], edges).with_members(members))
}

fn quotient_from_classes(classes: BTreeMap<(u64, u64), (u64, Vec<Simple>)>) -> LangGraph {
    let keys: Vec<(AtomSet, AtomSet)> =
        classes.keys().map(|&(s, f)| (AtomSet(s), AtomSet(f))).collect();
    let mut edges = Vec::new();
    for (i, &(_, f)) in keys.iter().enumerate() {
        for (j, &(s, _)) in keys.iter().enumerate() {
            if s.is_subset(f) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let names = keys.iter().map(|(s, f)| format!("S={s} F={f}")).collect();
    let weight = classes.values().map(|(w, _)| *w).collect();
    let members = classes.into_values().map(|(_, m)| m).collect();
    let mut g = LangGraph::from_edges(names, weight, edges).with_members(members);
    g.keys = Some(keys);
    g
}

/// Class quotient keyed by `(S(x), F(x))`; valid when `x → y ⇔ S(y) ⊆ F(x)`.
pub fn build_acceptor_quotient(g: &dyn Garside) -> LangGraph {
    let mut classes: BTreeMap<(u64, u64), (u64, Vec<Simple>)> = BTreeMap::new();
    for s in proper_simples(g) {
        let e = classes
            .entry((g.starting_set(s).0, g.finishing_set(s).0))
            .or_default();
        e.0 += 1;
        e.1.push(s);
    }
    quotient_from_classes(classes)
}

/// Class quotient of a spherical Artin acceptor, streamed from the Coxeter
/// group without materializing simples.
pub fn acceptor_from_system(sys: &CoxeterSystem, cap: u128) -> Result<LangGraph> {
    let full = AtomSet::full(sys.rank());
    let mut classes: BTreeMap<(u64, u64), (u64, Vec<Simple>)> = BTreeMap::new();
    for w in sys.enumerate(cap)? {
        let (s, f) = (sys.left_descents(&w), sys.right_descents(&w));
        if s.is_empty() || s == full {
            continue; // identity or w0
        }
        classes.entry((s.0, f.0)).or_default().0 += 1;
    }
    Ok(quotient_from_classes(classes))
}

/// Strongly connected components.
#[derive(Clone, Debug)]
pub struct Components {
    /// Component of each node; ids are in reverse topological order (a
    /// component only reaches components with smaller or equal id).
    pub comp: Vec<u32>,
    pub count: usize,
    /// A component is non-trivial when it carries at least one edge.
    pub nontrivial: Vec<bool>,
}

impl Components {
    pub fn nodes_of(&self, c: usize) -> Vec<usize> {
        (0..self.comp.len()).filter(|&v| self.comp[v] as usize == c).collect()
    }
}

/// Iterative Tarjan.
pub fn components(g: &LangGraph) -> Components {
    let n = g.num_nodes();
    const UNSEEN: u32 = u32::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut count = 0u32;
    let mut next = 0u32;
    let mut call: Vec<(u32, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root as u32, 0));
        while let Some(&(v, pos)) = call.last() {
            let v = v as usize;
            if pos == 0 && index[v] == UNSEEN {
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v as u32);
                on_stack[v] = true;
            }
            let succ = g.successors(v);
            if pos < succ.len() {
                call.last_mut().unwrap().1 += 1;
                let w = succ[pos] as usize;
                if index[w] == UNSEEN {
                    call.push((w as u32, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(u, _)) = call.last() {
                let u = u as usize;
                low[u] = low[u].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap() as usize;
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    let mut size = vec![0usize; count as usize];
    for &c in &comp {
        size[c as usize] += 1;
    }
    let mut nontrivial: Vec<bool> = size.iter().map(|&s| s > 1).collect();
    for v in 0..n {
        if g.has_edge(v, v) {
            nontrivial[comp[v] as usize] = true;
        }
    }
    Components { comp, count: count as usize, nontrivial }
}

/// Nodes lying in a component that carries an edge.
pub fn essential_nodes(g: &LangGraph) -> Vec<usize> {
    let c = components(g);
    (0..g.num_nodes()).filter(|&v| c.nontrivial[c.comp[v] as usize]).collect()
}

/// Essential proper simples (requires materialized members).
pub fn essential_elements(g: &LangGraph) -> Vec<Simple> {
    let mut out: Vec<Simple> = essential_nodes(g)
        .into_iter()
        .flat_map(|c| g.members(c).iter().copied())
        .collect();
    out.sort();
    out
}

/// Number of essential vertices.
pub fn essential_count(g: &LangGraph) -> u128 {
    essential_nodes(g).into_iter().map(|c| g.weight(c) as u128).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Transitivity {
    pub transitive: bool,
    /// Smallest `k` with essential `k`-transitivity.
    pub k: Option<usize>,
    /// Diameter of the unique non-trivial component, when transitive.
    pub diameter: Option<usize>,
    pub nontrivial_components: usize,
}

/// Essential transitivity: exactly one non-trivial component; `k` is its
/// vertex-level diameter.
pub fn essential_transitivity(g: &LangGraph) -> Transitivity {
    let c = components(g);
    let nontrivial: Vec<usize> = (0..c.count).filter(|&i| c.nontrivial[i]).collect();
    if nontrivial.len() != 1 {
        return Transitivity {
            transitive: false,
            k: None,
            diameter: None,
            nontrivial_components: nontrivial.len(),
        };
    }
    let d = component_diameter(g, &c, nontrivial[0]);
    Transitivity { transitive: true, k: Some(d), diameter: Some(d), nontrivial_components: 1 }
}

/// Longest shortest path between vertices of one component. Distinct
/// vertices of the same node need a walk of length at least one.
pub fn component_diameter(g: &LangGraph, c: &Components, id: usize) -> usize {
    let nodes = c.nodes_of(id);
    let inside = |v: usize| c.comp[v] as usize == id;
    nodes
        .par_iter()
        .map(|&src| {
            let mut dist = vec![usize::MAX; g.num_nodes()];
            let mut frontier: Vec<usize> = Vec::new();
            for &d in g.successors(src) {
                let d = d as usize;
                if inside(d) && dist[d] == usize::MAX {
                    dist[d] = 1;
                    frontier.push(d);
                }
            }
            let mut level = 1;
            while !frontier.is_empty() {
                level += 1;
                let mut next = Vec::new();
                for &v in &frontier {
                    for &d in g.successors(v) {
                        let d = d as usize;
                        if inside(d) && dist[d] == usize::MAX {
                            dist[d] = level;
                            next.push(d);
                        }
                    }
                }
                frontier = next;
            }
            nodes
                .iter()
                .filter(|&&d| d != src || g.weight(src) > 1)
                .map(|&d| dist[d])
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}
