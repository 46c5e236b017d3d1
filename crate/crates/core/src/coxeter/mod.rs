//! Finite Coxeter groups of spherical type.
//!
//! Elements are stored as the signed permutation they induce on the set of
//! positive roots. Roots are exact: integer or golden-ratio coordinates in the
//! basis of simple roots, except for the dihedral groups `I2(p)` with
//! `p ∉ {3,4,5,6}`, which use a combinatorial angle model.

mod golden;

pub use golden::Golden;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::garside::AtomSet;

/// Default cap on the group order for [`CoxeterSystem::enumerate`].
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(usize),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n)
            | CoxeterType::B(n)
            | CoxeterType::D(n)
            | CoxeterType::E(n)
            | CoxeterType::H(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 3,
            CoxeterType::E(n) => (6..=8).contains(&n),
            CoxeterType::F4 => true,
            CoxeterType::H(n) => n == 3 || n == 4,
            CoxeterType::I2(p) => p >= 3,
        };
        // signed root indices are packed into u16
        let small = match self {
            CoxeterType::I2(p) => p < 1 << 14,
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n <= 60,
            _ => true,
        };
        if ok && small {
            Ok(())
        } else {
            Err(Error::Config(format!("unsupported Coxeter type {self}")))
        }
    }

    /// Group order, from the classical formulas.
    pub fn group_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::E(6) => 51_840,
            CoxeterType::E(7) => 2_903_040,
            CoxeterType::E(_) => 696_729_600,
            CoxeterType::F4 => 1152,
            CoxeterType::H(3) => 120,
            CoxeterType::H(_) => 14_400,
            CoxeterType::I2(p) => 2 * p as u128,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H(n) => write!(f, "H{n}"),
            CoxeterType::I2(p) => write!(f, "I2({p})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::Parse(format!("bad Coxeter type descriptor {s:?}"));
        let ty = if let Some(rest) = t.strip_prefix("I2(") {
            let p = rest.strip_suffix(')').ok_or_else(bad)?;
            CoxeterType::I2(p.parse().map_err(|_| bad())?)
        } else {
            let (head, num) = t.split_at(1.min(t.len()));
            let n: usize = num.parse().map_err(|_| bad())?;
            match head {
                "A" => CoxeterType::A(n),
                "B" => CoxeterType::B(n),
                "D" => CoxeterType::D(n),
                "E" => CoxeterType::E(n),
                "F" if n == 4 => CoxeterType::F4,
                "H" => CoxeterType::H(n),
                _ => return Err(bad()),
            }
        };
        ty.validate()?;
        Ok(ty)
    }
}

/// A Coxeter graph with the vertex labels used in the classification
/// diagrams: `A_n`, `F_4`, `H_n`, `I_2(p)` count from 1; `B_n`, `D_n`, `E_n`
/// count from 0, with the branch node 0 of `E_n` attached to vertex 3.
#[derive(Clone, Debug)]
pub struct CoxeterGraph {
    pub ty: CoxeterType,
    labels: Vec<u32>,
    /// Coxeter matrix; the diagonal holds 2 by the diagram convention and is
    /// never consulted.
    matrix: Vec<Vec<u32>>,
}

impl CoxeterGraph {
    pub fn new(ty: CoxeterType) -> Result<Self> {
        ty.validate()?;
        let n = ty.rank();
        let mut matrix = vec![vec![2u32; n]; n];
        let mut bond = |i: usize, j: usize, m: u32| {
            matrix[i][j] = m;
            matrix[j][i] = m;
        };
        let labels: Vec<u32> = match ty {
            CoxeterType::A(_) | CoxeterType::F4 | CoxeterType::H(_) | CoxeterType::I2(_) => {
                (1..=n as u32).collect()
            }
            _ => (0..n as u32).collect(),
        };
        match ty {
            CoxeterType::A(_) => (0..n.saturating_sub(1)).for_each(|i| bond(i, i + 1, 3)),
            CoxeterType::B(_) => {
                bond(0, 1, 4);
                (1..n - 1).for_each(|i| bond(i, i + 1, 3));
            }
            CoxeterType::D(_) => {
                bond(0, 2, 3);
                bond(1, 2, 3);
                (2..n - 1).for_each(|i| bond(i, i + 1, 3));
            }
            CoxeterType::E(_) => {
                bond(0, 3, 3);
                (1..n - 1).for_each(|i| bond(i, i + 1, 3));
            }
            CoxeterType::F4 => {
                bond(0, 1, 3);
                bond(1, 2, 4);
                bond(2, 3, 3);
            }
            CoxeterType::H(_) => {
                bond(0, 1, 5);
                (1..n - 1).for_each(|i| bond(i, i + 1, 3));
            }
            CoxeterType::I2(p) => bond(0, 1, p as u32),
        }
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 2;
        }
        Ok(CoxeterGraph { ty, labels, matrix })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Off-diagonal Coxeter matrix entry.
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix[i][j]
    }

    /// Diagram label of the generator with internal index `i`.
    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn index_of_label(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Generators joined to `i` by an edge (m ≥ 3).
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.matrix[i][j] >= 3)
    }

    /// Shortest path of generators from `a` to `b` in the diagram.
    pub fn path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let n = self.rank();
        let mut prev = vec![usize::MAX; n];
        prev[a] = a;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if prev[b] == usize::MAX {
            return None;
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = prev[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Renders an atom set with diagram labels, e.g. `{0,1,3}`.
    pub fn format_set(&self, set: AtomSet) -> String {
        let items: Vec<String> = set.iter().map(|i| self.label(i).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Parses a word of single-digit diagram labels, e.g. `302134302154`.
    /// Dots and whitespace are ignored.
    pub fn parse_word(&self, word: &str) -> Result<Vec<usize>> {
        word.chars()
            .filter(|c| !c.is_whitespace() && *c != '.')
            .map(|c| {
                c.to_digit(10)
                    .and_then(|d| self.index_of_label(d))
                    .ok_or_else(|| Error::Parse(format!("bad generator {c:?} in {word:?}")))
            })
            .collect()
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.label(i).to_string()).collect()
    }
}

/// A group element as a signed permutation of the positive roots.
///
/// Entry `r` encodes the image of positive root `r` as `(index << 1) | sign`,
/// where a set sign bit means the image is negative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement(Box<[u16]>);

impl GroupElement {
    fn identity(n: usize) -> Self {
        GroupElement((0..n as u16).map(|r| r << 1).collect())
    }

    #[inline]
    fn image(&self, signed: u16) -> u16 {
        self.0[(signed >> 1) as usize] ^ (signed & 1)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&v| v & 1 == 1).count()
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.0.len()];
        for (r, &v) in self.0.iter().enumerate() {
            inv[(v >> 1) as usize] = ((r as u16) << 1) | (v & 1);
        }
        GroupElement(inv.into())
    }

    /// Composition: `(self * other)(β) = self(other(β))`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement(other.0.iter().map(|&v| self.image(v)).collect())
    }

    pub fn raw(&self) -> &[u16] {
        &self.0
    }
}

#[derive(Clone, Debug)]
enum Roots {
    Vectors(Vec<Vec<Golden>>),
    Dihedral,
}

/// A finite Coxeter system with exact root data.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    graph: CoxeterGraph,
    roots: Roots,
    num_roots: usize,
    gens: Vec<GroupElement>,
    simple_index: Vec<u16>,
    w0: GroupElement,
}

impl CoxeterSystem {
    pub fn new(ty: CoxeterType) -> Result<Self> {
        Self::build(CoxeterGraph::new(ty)?)
    }

    pub fn build(graph: CoxeterGraph) -> Result<Self> {
        let (roots, gens, simple_index) = match graph.ty {
            CoxeterType::I2(p) if !matches!(p, 3..=6) => dihedral_roots(p),
            _ => vector_roots(&graph),
        };
        let num_roots = simple_index.len().max(gens[0].0.len());
        let mut sys = CoxeterSystem {
            graph,
            roots,
            num_roots,
            gens,
            simple_index,
            w0: GroupElement::identity(num_roots),
        };
        sys.w0 = sys.parabolic_longest(AtomSet::full(sys.rank()));
        Ok(sys)
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn ty(&self) -> CoxeterType {
        self.graph.ty
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.num_roots
    }

    /// Positive roots in simple-root coordinates (`None` for the dihedral model).
    pub fn positive_roots(&self) -> Option<&[Vec<Golden>]> {
        match &self.roots {
            Roots::Vectors(v) => Some(v),
            Roots::Dihedral => None,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.num_roots)
    }

    pub fn generator(&self, i: usize) -> &GroupElement {
        &self.gens[i]
    }

    pub fn longest(&self) -> &GroupElement {
        &self.w0
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        w.length()
    }

    /// Right descents `{i : ℓ(w sᵢ) < ℓ(w)}`, read off from the sign of `w(αᵢ)`.
    pub fn right_descents(&self, w: &GroupElement) -> AtomSet {
        let mut set = AtomSet::EMPTY;
        for (i, &r) in self.simple_index.iter().enumerate() {
            if w.0[r as usize] & 1 == 1 {
                set.insert(i);
            }
        }
        set
    }

    /// Left descents `{i : ℓ(sᵢ w) < ℓ(w)}`, read off from the sign of `w⁻¹(αᵢ)`.
    pub fn left_descents(&self, w: &GroupElement) -> AtomSet {
        let mut set = AtomSet::EMPTY;
        for (i, &r) in self.simple_index.iter().enumerate() {
            if let Some(v) = w.0.iter().find(|&&v| v >> 1 == r) {
                if v & 1 == 1 {
                    set.insert(i);
                }
            }
        }
        set
    }

    pub fn is_right_descent(&self, w: &GroupElement, i: usize) -> bool {
        w.0[self.simple_index[i] as usize] & 1 == 1
    }

    /// `w · sᵢ`
    pub fn rmul_gen(&self, w: &GroupElement, i: usize) -> GroupElement {
        w.mul(&self.gens[i])
    }

    /// `sᵢ · w`
    pub fn lmul_gen(&self, i: usize, w: &GroupElement) -> GroupElement {
        self.gens[i].mul(w)
    }

    /// The product of the generators of `word` (internal indices), and
    /// whether the word is reduced.
    pub fn element_of_word(&self, word: &[usize]) -> (GroupElement, bool) {
        let mut w = self.identity();
        for &i in word {
            w = self.rmul_gen(&w, i);
        }
        let reduced = w.length() == word.len();
        (w, reduced)
    }

    /// Lexicographically smallest reduced word (internal indices).
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while let Some(i) = self.left_descents(&cur).first() {
            word.push(i);
            cur = self.lmul_gen(i, &cur);
        }
        word
    }

    /// Longest element of the standard parabolic subgroup on `subset`.
    pub fn parabolic_longest(&self, subset: AtomSet) -> GroupElement {
        let mut w = self.identity();
        while let Some(j) = subset.iter().find(|&j| !self.is_right_descent(&w, j)) {
            w = self.rmul_gen(&w, j);
        }
        w
    }

    /// Streams every group element once, in nondecreasing length.
    ///
    /// Each element `w ≠ 1` is generated from its canonical parent `w·sⱼ`
    /// with `j = min F(w)`, so no visited set is needed.
    pub fn enumerate(&self, cap: u128) -> Result<GroupIter<'_>> {
        let order = self.ty().group_order();
        if order > cap {
            return Err(Error::EnumerationTooLarge { order, cap });
        }
        Ok(GroupIter {
            sys: self,
            level: vec![self.identity()],
            pos: 0,
        })
    }
}

/// Level-by-level stream of group elements.
pub struct GroupIter<'a> {
    sys: &'a CoxeterSystem,
    level: Vec<GroupElement>,
    pos: usize,
}

impl Iterator for GroupIter<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        if self.pos == self.level.len() {
            let sys = self.sys;
            let mut next = Vec::new();
            for v in &self.level {
                let f = sys.right_descents(v);
                for i in 0..sys.rank() {
                    if f.contains(i) {
                        continue;
                    }
                    let c = sys.rmul_gen(v, i);
                    if sys.right_descents(&c).first() == Some(i) {
                        next.push(c);
                    }
                }
            }
            if next.is_empty() {
                return None;
            }
            self.level = next;
            self.pos = 0;
        }
        self.pos += 1;
        Some(self.level[self.pos - 1].clone())
    }
}

/// Entry `c[i][j]` such that `sᵢ(αⱼ) = αⱼ − c[i][j]·αᵢ`.
fn cartan(graph: &CoxeterGraph) -> Vec<Vec<Golden>> {
    let n = graph.rank();
    let mut c = vec![vec![Golden::ZERO; n]; n];
    for i in 0..n {
        c[i][i] = Golden::int(2);
        for j in i + 1..n {
            let (x, y) = match graph.m(i, j) {
                2 => (Golden::ZERO, Golden::ZERO),
                3 => (Golden::int(-1), Golden::int(-1)),
                4 => (Golden::int(-1), Golden::int(-2)),
                5 => (-Golden::PHI, -Golden::PHI),
                6 => (Golden::int(-1), Golden::int(-3)),
                m => unreachable!("label {m} handled by the dihedral model"),
            };
            c[i][j] = x;
            c[j][i] = y;
        }
    }
    c
}

fn vector_roots(graph: &CoxeterGraph) -> (Roots, Vec<GroupElement>, Vec<u16>) {
    let n = graph.rank();
    let c = cartan(graph);
    let reflect = |i: usize, beta: &[Golden]| -> Vec<Golden> {
        let coeff = (0..n).fold(Golden::ZERO, |acc, j| acc + beta[j] * c[i][j]);
        let mut out = beta.to_vec();
        out[i] = out[i] - coeff;
        out
    };
    let mut roots: Vec<Vec<Golden>> = (0..n)
        .map(|i| (0..n).map(|j| Golden::int((i == j) as i64)).collect())
        .collect();
    let mut index: HashMap<Vec<Golden>, usize> =
        roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
    let mut head = 0;
    while head < roots.len() {
        for i in 0..n {
            let gamma = reflect(i, &roots[head]);
            if gamma.iter().all(|x| x.signum() >= 0) && !index.contains_key(&gamma) {
                index.insert(gamma.clone(), roots.len());
                roots.push(gamma);
            }
        }
        head += 1;
    }
    let gens = (0..n)
        .map(|i| {
            GroupElement(
                roots
                    .iter()
                    .map(|r| {
                        let gamma = reflect(i, r);
                        if let Some(&k) = index.get(&gamma) {
                            (k as u16) << 1
                        } else {
                            let neg: Vec<Golden> = gamma.iter().map(|&x| -x).collect();
                            ((index[&neg] as u16) << 1) | 1
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let simple_index = (0..n as u16).collect();
    (Roots::Vectors(roots), gens, simple_index)
}

/// Roots of `I2(p)` at angles `jπ/p`, `j mod 2p`; indices `0..p` are
/// positive and `j + p` is the negative of `j`. `α₁` sits at angle 0 and
/// `α₂` at angle `(p−1)π/p`.
fn dihedral_roots(p: usize) -> (Roots, Vec<GroupElement>, Vec<u16>) {
    let signed = |j: usize| -> u16 {
        let j = j % (2 * p);
        if j < p {
            (j as u16) << 1
        } else {
            (((j - p) as u16) << 1) | 1
        }
    };
    let s1 = GroupElement((0..p).map(|j| signed(p - j)).collect());
    let s2 = GroupElement((0..p).map(|j| signed(3 * p - 2 - j)).collect());
    (Roots::Dihedral, vec![s1, s2], vec![0, (p - 1) as u16])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::new(s.parse().unwrap()).unwrap()
    }

    /// Length by breadth-first search over words; independent of root signs.
    fn bfs_lengths(sys: &CoxeterSystem) -> HashMap<GroupElement, usize> {
        let mut dist = HashMap::from([(sys.identity(), 0usize)]);
        let mut frontier = vec![sys.identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..sys.rank() {
                    let c = sys.rmul_gen(w, i);
                    if !dist.contains_key(&c) {
                        dist.insert(c.clone(), dist[w] + 1);
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    #[test]
    fn parses_descriptors() {
        assert_eq!("a5".parse::<CoxeterType>().unwrap(), CoxeterType::A(5));
        assert_eq!("I2(7)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(7));
        assert_eq!("i2(5)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(5));
        assert!("E9".parse::<CoxeterType>().is_err());
        assert!("F3".parse::<CoxeterType>().is_err());
        assert!("D2".parse::<CoxeterType>().is_err());
        assert!("I2(2)".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [
            ("A2", 3),
            ("A5", 15),
            ("B3", 9),
            ("D4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("H3", 15),
            ("H4", 60),
            ("I2(5)", 5),
            ("I2(7)", 7),
            ("I2(6)", 6),
        ] {
            assert_eq!(sys(t).num_positive_roots(), n, "{t}");
        }
    }

    #[test]
    fn group_orders_by_enumeration() {
        for t in ["A1", "A2", "A3", "B2", "B3", "D4", "F4", "H3", "I2(5)", "I2(7)", "E6"] {
            let s = sys(t);
            let count = s.enumerate(DEFAULT_ENUMERATION_CAP).unwrap().count() as u128;
            assert_eq!(count, s.ty().group_order(), "{t}");
        }
    }

    #[test]
    fn d4_order_matches_signed_permutation_count() {
        // even-signed permutations of 4 letters: 2^3 · 4!
        let mut count = 0;
        for perm in permutations(4) {
            for signs in 0..16u32 {
                if signs.count_ones() % 2 == 0 {
                    let _ = &perm;
                    count += 1;
                }
            }
        }
        assert_eq!(sys("D4").enumerate(u128::MAX).unwrap().count(), count);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn enumeration_cap_refuses_e8() {
        let err = sys("E8").enumerate(DEFAULT_ENUMERATION_CAP).err().unwrap();
        assert!(err.to_string().contains("696729600"));
    }

    #[test]
    fn enumeration_is_length_sorted_and_distinct() {
        let s = sys("H3");
        let all: Vec<_> = s.enumerate(u128::MAX).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].length() <= w[1].length()));
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn descents_agree_with_length_comparison_exhaustively() {
        for t in ["A2", "A3", "B3", "D4", "H3", "F4", "I2(5)", "I2(7)", "I2(4)"] {
            let s = sys(t);
            let lengths = bfs_lengths(&s);
            for (w, &l) in &lengths {
                assert_eq!(w.length(), l, "{t}");
                assert_eq!(w.inverse().length(), l);
                assert_eq!(w.mul(&w.inverse()), s.identity());
                for i in 0..s.rank() {
                    let r = lengths[&s.rmul_gen(w, i)];
                    let lft = lengths[&s.lmul_gen(i, w)];
                    assert!(r == l + 1 || r + 1 == l);
                    assert!(lft == l + 1 || lft + 1 == l);
                    assert_eq!(s.right_descents(w).contains(i), r < l, "{t} right");
                    assert_eq!(s.left_descents(w).contains(i), lft < l, "{t} left");
                }
            }
        }
    }

    #[test]
    fn a2_sign_convention() {
        let s = sys("A2");
        // w = s1 s2: only s1 can be removed on the left, only s2 on the right
        let (w, reduced) = s.element_of_word(&[0, 1]);
        assert!(reduced);
        assert_eq!(s.left_descents(&w), AtomSet::from_iter([0]));
        assert_eq!(s.right_descents(&w), AtomSet::from_iter([1]));
        assert_eq!(s.longest().length(), 3);
    }

    #[test]
    fn longest_element_properties() {
        for t in ["A4", "B4", "D5", "E6", "F4", "H4", "I2(9)"] {
            let s = sys(t);
            let w0 = s.longest();
            assert_eq!(w0.length(), s.num_positive_roots(), "{t}");
            assert_eq!(w0.mul(w0), s.identity());
            let full = AtomSet::full(s.rank());
            assert_eq!(s.left_descents(w0), full);
            assert_eq!(s.right_descents(w0), full);
        }
    }

    #[test]
    fn words_and_witnesses() {
        let a2 = sys("A2");
        assert_eq!(a2.element_of_word(&[]), (a2.identity(), true));
        let (w, red) = a2.element_of_word(&[0, 0]);
        assert_eq!(w, a2.identity());
        assert!(!red);

        let e6 = sys("E6");
        let word = e6.graph().parse_word("302134302154").unwrap();
        let (w, red) = e6.element_of_word(&word);
        assert!(red);
        assert_eq!(w.length(), 12);
        assert_eq!(e6.graph().format_set(e6.left_descents(&w)), "{3}");
        assert_eq!(e6.graph().format_set(e6.right_descents(&w)), "{0,1,2,4,5}");

        let h3 = sys("H3");
        let (w, red) = h3.element_of_word(&h3.graph().parse_word("1213").unwrap());
        assert!(red);
        assert_eq!(h3.graph().format_set(h3.left_descents(&w)), "{1}");
        assert_eq!(h3.graph().format_set(h3.right_descents(&w)), "{1,3}");

        let e8 = sys("E8");
        let word = e8.graph().parse_word("30213430213454302134565430217654").unwrap();
        assert!(e8.element_of_word(&word).1);
    }

    #[test]
    fn reduced_word_round_trip() {
        let s = sys("B3");
        for w in s.enumerate(u128::MAX).unwrap() {
            let word = s.reduced_word(&w);
            assert_eq!(word.len(), w.length());
            assert_eq!(s.element_of_word(&word), (w, true));
        }
    }

    #[test]
    fn i2_models_agree() {
        // I2(5) by golden roots vs. the angle model, compared via word lengths
        let golden = sys("I2(5)");
        let (roots, gens, simple) = dihedral_roots(5);
        let angle = CoxeterSystem {
            graph: CoxeterGraph::new(CoxeterType::I2(5)).unwrap(),
            roots,
            num_roots: 5,
            w0: GroupElement::identity(5),
            gens,
            simple_index: simple,
        };
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for len in 1..=6 {
            for start in 0..2 {
                words.push((0..len).map(|k| (start + k) % 2).collect());
            }
        }
        for w in &words {
            let (g, _) = golden.element_of_word(w);
            let (a, _) = angle.element_of_word(w);
            assert_eq!(g.length(), a.length(), "{w:?}");
            assert_eq!(golden.left_descents(&g), angle.left_descents(&a));
            assert_eq!(golden.right_descents(&g), angle.right_descents(&a));
        }
    }

    #[test]
    fn a_type_matches_permutation_model() {
        // word i1…il ↦ π = t_il ∘ … ∘ t_i1; a ∈ S ⇔ π(a+1) < π(a)
        let s = sys("A3");
        for w in s.enumerate(u128::MAX).unwrap() {
            let word = s.reduced_word(&w);
            let mut pi: Vec<usize> = (0..4).collect();
            for &i in &word {
                for v in pi.iter_mut() {
                    if *v == i {
                        *v = i + 1;
                    } else if *v == i + 1 {
                        *v = i;
                    }
                }
            }
            let mut inv = [0; 4];
            for (x, &y) in pi.iter().enumerate() {
                inv[y] = x;
            }
            let inversions = (0..4)
                .flat_map(|x| (x + 1..4).map(move |y| (x, y)))
                .filter(|&(x, y)| pi[x] > pi[y])
                .count();
            assert_eq!(inversions, w.length());
            for a in 0..3 {
                assert_eq!(s.left_descents(&w).contains(a), pi[a + 1] < pi[a]);
                assert_eq!(s.right_descents(&w).contains(a), inv[a + 1] < inv[a]);
            }
        }
    }

    #[test]
    fn b_type_matches_signed_permutation_rule() {
        // atom 0 ↦ (1,-1); atom i ↦ (i,i+1)(-i,-(i+1)); x acts on the right,
        // S(x) = {i : i·x > (i+1)·x} with 0·x = 0
        let n = 4;
        let s = sys("B4");
        for w in s.enumerate(u128::MAX).unwrap() {
            let word = s.reduced_word(&w);
            // image of k under x = s_{i1}⋯s_{il} acting on the right
            let act = |k: i64| -> i64 {
                let mut v = k;
                for &i in &word {
                    v = if i == 0 {
                        if v.abs() == 1 {
                            -v
                        } else {
                            v
                        }
                    } else {
                        let i = i as i64;
                        if v.abs() == i {
                            v.signum() * (i + 1)
                        } else if v.abs() == i + 1 {
                            v.signum() * i
                        } else {
                            v
                        }
                    };
                }
                v
            };
            for i in 0..n {
                let lhs = if i == 0 { 0 } else { act(i as i64) };
                let rhs = act(i as i64 + 1);
                assert_eq!(s.left_descents(&w).contains(i), lhs > rhs, "{word:?}");
            }
        }
    }
}
