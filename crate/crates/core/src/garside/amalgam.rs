use std::sync::Arc;

use super::{proper_simples, AtomSet, Garside, Simple};

/// Free product of two structures amalgamated over their Garside elements.
///
/// Handles: 0 is the identity, 1 is Δ, then the proper simples of `G`,
/// then those of `H`.
pub struct Amalgam {
    g: Arc<dyn Garside>,
    h: Arc<dyn Garside>,
    g_proper: Vec<Simple>,
    h_proper: Vec<Simple>,
    g_back: Vec<u32>,
    h_back: Vec<u32>,
    rg: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    One,
    Delta,
    G(Simple),
    H(Simple),
}

const DELTA: Simple = Simple(1);

impl Amalgam {
    pub fn new(g: Arc<dyn Garside>, h: Arc<dyn Garside>) -> Self {
        let g_proper = proper_simples(g.as_ref());
        let h_proper = proper_simples(h.as_ref());
        let offset_h = 2 + g_proper.len() as u32;
        let mut g_back = vec![u32::MAX; g.num_simples()];
        g_back[0] = 0;
        g_back[g.delta().idx()] = 1;
        for (i, s) in g_proper.iter().enumerate() {
            g_back[s.idx()] = 2 + i as u32;
        }
        let mut h_back = vec![u32::MAX; h.num_simples()];
        h_back[0] = 0;
        h_back[h.delta().idx()] = 1;
        for (i, s) in h_proper.iter().enumerate() {
            h_back[s.idx()] = offset_h + i as u32;
        }
        let rg = g.num_atoms();
        Amalgam { g, h, g_proper, h_proper, g_back, h_back, rg }
    }

    fn side(&self, x: Simple) -> Side {
        let i = x.idx();
        match i {
            0 => Side::One,
            1 => Side::Delta,
            _ if i < 2 + self.g_proper.len() => Side::G(self.g_proper[i - 2]),
            _ => Side::H(self.h_proper[i - 2 - self.g_proper.len()]),
        }
    }

    fn from_g(&self, s: Simple) -> Simple {
        Simple(self.g_back[s.idx()])
    }

    fn from_h(&self, s: Simple) -> Simple {
        Simple(self.h_back[s.idx()])
    }

    /// Lifts both arguments into a common factor and applies `f` there.
    fn within(
        &self,
        x: Simple,
        y: Simple,
        f: impl Fn(&dyn Garside, Simple, Simple) -> Option<Simple>,
    ) -> Option<Simple> {
        let in_g = |s: Side| match s {
            Side::One => Some(Simple::ONE),
            Side::Delta => Some(self.g.delta()),
            Side::G(v) => Some(v),
            Side::H(_) => None,
        };
        let in_h = |s: Side| match s {
            Side::One => Some(Simple::ONE),
            Side::Delta => Some(self.h.delta()),
            Side::H(v) => Some(v),
            Side::G(_) => None,
        };
        let (sx, sy) = (self.side(x), self.side(y));
        if let (Some(a), Some(b)) = (in_g(sx), in_g(sy)) {
            return f(self.g.as_ref(), a, b).map(|r| self.from_g(r));
        }
        if let (Some(a), Some(b)) = (in_h(sx), in_h(sy)) {
            return f(self.h.as_ref(), a, b).map(|r| self.from_h(r));
        }
        None
    }
}

impl Garside for Amalgam {
    fn name(&self) -> String {
        format!("amalgam:[{}],[{}]", self.g.name(), self.h.name())
    }

    fn num_simples(&self) -> usize {
        2 + self.g_proper.len() + self.h_proper.len()
    }

    fn num_atoms(&self) -> usize {
        self.rg + self.h.num_atoms()
    }

    fn atom(&self, i: usize) -> Simple {
        if i < self.rg {
            self.from_g(self.g.atom(i))
        } else {
            self.from_h(self.h.atom(i - self.rg))
        }
    }

    fn delta(&self) -> Simple {
        DELTA
    }

    fn product(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.within(x, y, |m, a, b| m.product(a, b))
    }

    fn left_divide(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.within(x, y, |m, a, b| m.left_divide(a, b))
    }

    fn right_divide(&self, y: Simple, x: Simple) -> Option<Simple> {
        self.within(y, x, |m, a, b| m.right_divide(a, b))
    }

    fn starting_set(&self, x: Simple) -> AtomSet {
        match self.side(x) {
            Side::One => AtomSet::EMPTY,
            Side::Delta => AtomSet::full(self.num_atoms()),
            Side::G(v) => self.g.starting_set(v),
            Side::H(v) => self.h.starting_set(v).shifted(self.rg),
        }
    }

    fn finishing_set(&self, x: Simple) -> AtomSet {
        match self.side(x) {
            Side::One => AtomSet::EMPTY,
            Side::Delta => AtomSet::full(self.num_atoms()),
            Side::G(v) => self.g.finishing_set(v),
            Side::H(v) => self.h.finishing_set(v).shifted(self.rg),
        }
    }

    fn meet(&self, x: Simple, y: Simple) -> Simple {
        self.within(x, y, |m, a, b| Some(m.meet(a, b)))
            .unwrap_or(Simple::ONE)
    }

    fn suffix_meet(&self, x: Simple, y: Simple) -> Simple {
        self.within(x, y, |m, a, b| Some(m.suffix_meet(a, b)))
            .unwrap_or(Simple::ONE)
    }

    fn display(&self, x: Simple) -> String {
        match self.side(x) {
            Side::One => "1".into(),
            Side::Delta => "Δ".into(),
            Side::G(v) => format!("G:{}", self.g.display(v)),
            Side::H(v) => format!("H:{}", self.h.display(v)),
        }
    }
}
