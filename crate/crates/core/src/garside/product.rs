use std::sync::Arc;

use super::{AtomSet, Garside, Simple};

/// Direct product `G × H`; the handle of `(g, h)` is `g·|H| + h`.
pub struct DirectProduct {
    g: Arc<dyn Garside>,
    h: Arc<dyn Garside>,
    nh: u32,
    rg: usize,
}

impl DirectProduct {
    pub fn new(g: Arc<dyn Garside>, h: Arc<dyn Garside>) -> Self {
        let nh = h.num_simples() as u32;
        let rg = g.num_atoms();
        DirectProduct { g, h, nh, rg }
    }

    pub fn left(&self) -> &Arc<dyn Garside> {
        &self.g
    }

    pub fn right(&self) -> &Arc<dyn Garside> {
        &self.h
    }

    pub fn split(&self, x: Simple) -> (Simple, Simple) {
        (Simple(x.0 / self.nh), Simple(x.0 % self.nh))
    }

    pub fn pair(&self, g: Simple, h: Simple) -> Simple {
        Simple(g.0 * self.nh + h.0)
    }

    fn both(
        &self,
        x: Simple,
        y: Simple,
        fg: impl Fn(&dyn Garside, Simple, Simple) -> Option<Simple>,
    ) -> Option<Simple> {
        let (xg, xh) = self.split(x);
        let (yg, yh) = self.split(y);
        Some(self.pair(fg(self.g.as_ref(), xg, yg)?, fg(self.h.as_ref(), xh, yh)?))
    }
}

impl Garside for DirectProduct {
    fn name(&self) -> String {
        format!("prod:[{}],[{}]", self.g.name(), self.h.name())
    }

    fn num_simples(&self) -> usize {
        self.g.num_simples() * self.h.num_simples()
    }

    fn num_atoms(&self) -> usize {
        self.rg + self.h.num_atoms()
    }

    fn atom(&self, i: usize) -> Simple {
        if i < self.rg {
            self.pair(self.g.atom(i), Simple::ONE)
        } else {
            self.pair(Simple::ONE, self.h.atom(i - self.rg))
        }
    }

    fn delta(&self) -> Simple {
        self.pair(self.g.delta(), self.h.delta())
    }

    fn product(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.both(x, y, |m, a, b| m.product(a, b))
    }

    fn left_divide(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.both(x, y, |m, a, b| m.left_divide(a, b))
    }

    fn right_divide(&self, y: Simple, x: Simple) -> Option<Simple> {
        self.both(y, x, |m, a, b| m.right_divide(a, b))
    }

    fn starting_set(&self, x: Simple) -> AtomSet {
        let (g, h) = self.split(x);
        self.g
            .starting_set(g)
            .union(self.h.starting_set(h).shifted(self.rg))
    }

    fn finishing_set(&self, x: Simple) -> AtomSet {
        let (g, h) = self.split(x);
        self.g
            .finishing_set(g)
            .union(self.h.finishing_set(h).shifted(self.rg))
    }

    fn right_complement(&self, x: Simple) -> Simple {
        let (g, h) = self.split(x);
        self.pair(self.g.right_complement(g), self.h.right_complement(h))
    }

    fn left_complement(&self, x: Simple) -> Simple {
        let (g, h) = self.split(x);
        self.pair(self.g.left_complement(g), self.h.left_complement(h))
    }

    fn meet(&self, x: Simple, y: Simple) -> Simple {
        self.both(x, y, |m, a, b| Some(m.meet(a, b))).unwrap()
    }

    fn suffix_meet(&self, x: Simple, y: Simple) -> Simple {
        self.both(x, y, |m, a, b| Some(m.suffix_meet(a, b))).unwrap()
    }

    fn display(&self, x: Simple) -> String {
        let (g, h) = self.split(x);
        format!("({},{})", self.g.display(g), self.h.display(h))
    }

    fn parse_simple(&self, name: &str) -> Option<Simple> {
        let inner = name.strip_prefix('(')?.strip_suffix(')')?;
        // split at the comma that balances parentheses
        let mut depth = 0i32;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    let g = self.g.parse_simple(&inner[..i])?;
                    let h = self.h.parse_simple(&inner[i + 1..])?;
                    return Some(self.pair(g, h));
                }
                _ => {}
            }
        }
        None
    }

    fn descent_determined(&self) -> bool {
        self.g.descent_determined() && self.h.descent_determined()
    }

    fn as_product(&self) -> Option<&DirectProduct> {
        Some(self)
    }
}
