//! Garside structures over a finite set of simple elements.
//!
//! Every backend materializes its simples as handles `0..num_simples()`,
//! with handle 0 reserved for the identity.

mod amalgam;
mod artin;
mod descriptor;
mod framing;
mod product;
mod table;

pub use amalgam::Amalgam;
pub use artin::ArtinGarside;
pub use descriptor::{build_structure, builtin_tables, BuildOptions};
pub use framing::Framing;
pub use product::DirectProduct;
pub use table::{GarsideTable, SimpleEntry, TableGarside};

use std::collections::BTreeSet;
use std::fmt;

/// Default cap on the number of materialized simples.
pub const DEFAULT_SIMPLES_CAP: u128 = 10_000_000;

/// Handle of a simple element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simple(pub u32);

impl Simple {
    pub const ONE: Simple = Simple(0);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// A set of atoms, as a bitmask over atom indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AtomSet(pub u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn full(n: usize) -> AtomSet {
        if n >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> AtomSet {
        AtomSet(1 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & !other.0)
    }

    pub fn shifted(self, by: usize) -> AtomSet {
        AtomSet(self.0 << by)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for AtomSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = AtomSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Tie-break rule for the greedy meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Lowest,
    Highest,
}

/// A Garside structure with finitely many simples.
///
/// `x ≼ y` is the prefix order; `left_divide(x, y)` returns `u` with
/// `x·u = y` and `right_divide(y, x)` returns `u` with `u·x = y`.
pub trait Garside: Send + Sync {
    fn name(&self) -> String;
    /// Number of simples, including the identity and Δ.
    fn num_simples(&self) -> usize;
    fn num_atoms(&self) -> usize;
    fn atom(&self, i: usize) -> Simple;
    fn delta(&self) -> Simple;
    /// `x·y` if it is simple.
    fn product(&self, x: Simple, y: Simple) -> Option<Simple>;
    fn left_divide(&self, x: Simple, y: Simple) -> Option<Simple>;
    fn right_divide(&self, y: Simple, x: Simple) -> Option<Simple>;
    /// Atoms that are prefixes of `x`.
    fn starting_set(&self, x: Simple) -> AtomSet;
    /// Atoms that are suffixes of `x`.
    fn finishing_set(&self, x: Simple) -> AtomSet;
    fn display(&self, x: Simple) -> String;

    /// `∂x`, with `x·∂x = Δ`.
    fn right_complement(&self, x: Simple) -> Simple {
        self.left_divide(x, self.delta()).expect("every simple divides Δ")
    }

    /// `∂̃x`, with `∂̃x·x = Δ`.
    fn left_complement(&self, x: Simple) -> Simple {
        self.right_divide(self.delta(), x).expect("every simple divides Δ")
    }

    /// Meet in the prefix order.
    fn meet(&self, x: Simple, y: Simple) -> Simple {
        greedy_meet(self, x, y, TieBreak::Lowest)
    }

    /// Meet in the suffix order.
    fn suffix_meet(&self, x: Simple, y: Simple) -> Simple {
        greedy_suffix_meet(self, x, y, TieBreak::Lowest)
    }

    /// True when `x|y ⇔ S(y) ⊆ F(x)` holds, so the acceptor may be
    /// quotiented by descent classes.
    fn descent_determined(&self) -> bool {
        false
    }

    fn as_artin(&self) -> Option<&ArtinGarside> {
        None
    }

    fn as_framing(&self) -> Option<&Framing> {
        None
    }

    fn as_product(&self) -> Option<&DirectProduct> {
        None
    }

    /// Looks a simple up by its display name.
    fn parse_simple(&self, name: &str) -> Option<Simple> {
        (0..self.num_simples() as u32)
            .map(Simple)
            .find(|&s| self.display(s) == name)
    }
}

/// Greedy common-prefix ascent: repeatedly strip a common starting atom.
pub fn greedy_meet<G: Garside + ?Sized>(g: &G, x: Simple, y: Simple, tie: TieBreak) -> Simple {
    let (mut d, mut rx, mut ry) = (Simple::ONE, x, y);
    loop {
        let common = g.starting_set(rx).intersection(g.starting_set(ry));
        let a = match tie {
            TieBreak::Lowest => common.first(),
            TieBreak::Highest => common.last(),
        };
        let Some(a) = a else { return d };
        let atom = g.atom(a);
        d = g.product(d, atom).expect("common prefix is simple");
        rx = g.left_divide(atom, rx).expect("atom is a prefix");
        ry = g.left_divide(atom, ry).expect("atom is a prefix");
    }
}

/// Greedy common-suffix ascent, with finishing sets.
pub fn greedy_suffix_meet<G: Garside + ?Sized>(
    g: &G,
    x: Simple,
    y: Simple,
    tie: TieBreak,
) -> Simple {
    let (mut d, mut rx, mut ry) = (Simple::ONE, x, y);
    loop {
        let common = g.finishing_set(rx).intersection(g.finishing_set(ry));
        let a = match tie {
            TieBreak::Lowest => common.first(),
            TieBreak::Highest => common.last(),
        };
        let Some(a) = a else { return d };
        let atom = g.atom(a);
        d = g.product(atom, d).expect("common suffix is simple");
        rx = g.right_divide(rx, atom).expect("atom is a suffix");
        ry = g.right_divide(ry, atom).expect("atom is a suffix");
    }
}

/// Full meet table `t[x·n + y]`, computed by the recursion
/// `x ∧ y = a·((a\x) ∧ (a\y))` for a common starting atom `a`.
pub(crate) fn meet_table<G: Garside + ?Sized>(g: &G, suffix: bool) -> Vec<u32> {
    const UNKNOWN: u32 = u32::MAX;
    let n = g.num_simples();
    let mut t = vec![UNKNOWN; n * n];
    fn go<G: Garside + ?Sized>(g: &G, t: &mut [u32], n: usize, x: Simple, y: Simple, suffix: bool) -> u32 {
        let key = x.idx() * n + y.idx();
        if t[key] != u32::MAX {
            return t[key];
        }
        let common = if suffix {
            g.finishing_set(x).intersection(g.finishing_set(y))
        } else {
            g.starting_set(x).intersection(g.starting_set(y))
        };
        let v = match common.first() {
            None => 0,
            Some(a) => {
                let atom = g.atom(a);
                if suffix {
                    let rx = g.right_divide(x, atom).unwrap();
                    let ry = g.right_divide(y, atom).unwrap();
                    let m = Simple(go(g, t, n, rx, ry, suffix));
                    g.product(m, atom).unwrap().0
                } else {
                    let rx = g.left_divide(atom, x).unwrap();
                    let ry = g.left_divide(atom, y).unwrap();
                    let m = Simple(go(g, t, n, rx, ry, suffix));
                    g.product(atom, m).unwrap().0
                }
            }
        };
        t[key] = v;
        t[y.idx() * n + x.idx()] = v;
        v
    }
    for x in 0..n {
        for y in x..n {
            go(g, &mut t, n, Simple(x as u32), Simple(y as u32), suffix);
        }
    }
    t
}

/// `x ∨ y = ∂̃(∂x ∧_suffix ∂y)`.
pub fn join<G: Garside + ?Sized>(g: &G, x: Simple, y: Simple) -> Simple {
    let m = g.suffix_meet(g.right_complement(x), g.right_complement(y));
    g.left_complement(m)
}

/// `x\y = x⁻¹(x ∨ y)`.
pub fn left_quotient<G: Garside + ?Sized>(g: &G, x: Simple, y: Simple) -> Simple {
    g.left_divide(x, join(g, x, y)).expect("x divides x ∨ y")
}

pub fn is_prefix<G: Garside + ?Sized>(g: &G, x: Simple, y: Simple) -> bool {
    g.left_divide(x, y).is_some()
}

pub fn atoms<G: Garside + ?Sized>(g: &G) -> Vec<Simple> {
    (0..g.num_atoms()).map(|i| g.atom(i)).collect()
}

/// All simples other than the identity and Δ, in handle order.
pub fn proper_simples<G: Garside + ?Sized>(g: &G) -> Vec<Simple> {
    let delta = g.delta();
    (1..g.num_simples() as u32)
        .map(Simple)
        .filter(|&s| s != delta)
        .collect()
}

pub fn is_proper<G: Garside + ?Sized>(g: &G, x: Simple) -> bool {
    x != Simple::ONE && x != g.delta()
}

/// Result of the Δ-purity test.
#[derive(Clone, Debug)]
pub struct DeltaPurity {
    pub pure: bool,
    /// `(a, Δ_a)` for every atom `a`.
    pub witness: Vec<(Simple, Simple)>,
}

/// Computes `Δ_a = ⋁{x\a : x ∈ M}` for every atom `a`, using the closure of
/// `{a}` under `v ↦ b\v` over atoms `b`.
pub fn delta_pure<G: Garside + ?Sized>(g: &G) -> DeltaPurity {
    let witness: Vec<(Simple, Simple)> = atoms(g)
        .into_iter()
        .map(|a| {
            let mut seen = BTreeSet::from([a]);
            let mut stack = vec![a];
            let mut acc = a;
            while let Some(v) = stack.pop() {
                acc = join(g, acc, v);
                for b in atoms(g) {
                    let w = left_quotient(g, b, v);
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            (a, acc)
        })
        .collect();
    let pure = witness.windows(2).all(|w| w[0].1 == w[1].1);
    DeltaPurity { pure, witness }
}

/// Brute-force maximum common prefix over the materialized divisor order.
pub fn brute_force_meet<G: Garside + ?Sized>(g: &G, x: Simple, y: Simple) -> Option<Simple> {
    let n = g.num_simples() as u32;
    let common: Vec<Simple> = (0..n)
        .map(Simple)
        .filter(|&d| is_prefix(g, d, x) && is_prefix(g, d, y))
        .collect();
    common
        .iter()
        .copied()
        .find(|&m| common.iter().all(|&d| is_prefix(g, d, m)))
}
