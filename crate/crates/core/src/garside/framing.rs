use std::collections::HashMap;
use std::sync::Arc;

use super::{proper_simples, AtomSet, Garside, GarsideTable, Simple, SimpleEntry, TableGarside};
use crate::error::{Error, Result};
use crate::normalform::{is_normal_pair, multiply, NormalForm};

/// The k-framing `M(k)`: the same monoid with Garside element `Δ^k`.
///
/// Its simples are the elements of sup at most `k`, keyed by their base
/// normal forms. Operations run on a table derived from base arithmetic.
pub struct Framing {
    base: Arc<dyn Garside>,
    k: usize,
    keys: Vec<NormalForm>,
    index: HashMap<NormalForm, u32>,
    table: TableGarside,
}

impl Framing {
    pub fn new(base: Arc<dyn Garside>, k: usize, cap: u128) -> Result<Self> {
        if k == 0 {
            return Err(Error::Config("framing needs k ≥ 1".into()));
        }
        let keys = enumerate_keys(base.as_ref(), k, cap)?;
        let index: HashMap<NormalForm, u32> = keys
            .iter()
            .enumerate()
            .map(|(i, nf)| (nf.clone(), i as u32))
            .collect();
        if index.len() != keys.len() {
            return Err(Error::Defect("framing keys are not injective".into()));
        }
        let mut products = Vec::new();
        for (i, x) in keys.iter().enumerate() {
            for (j, y) in keys.iter().enumerate() {
                if x.inf + y.inf > k {
                    continue;
                }
                let mut z = x.clone();
                for s in y.to_word(base.as_ref()) {
                    z = multiply(base.as_ref(), &z, s);
                }
                if z.sup() <= k {
                    products.push([i as u32, j as u32, index[&z]]);
                }
            }
        }
        let simples = keys
            .iter()
            .enumerate()
            .map(|(i, nf)| SimpleEntry { id: i as u32, display: key_name(base.as_ref(), nf) })
            .collect();
        let delta = index[&NormalForm { inf: k, factors: vec![] }];
        let table = GarsideTable {
            name: format!("frame:{}:{k}", base.name()),
            simples,
            delta,
            products,
        };
        let table = TableGarside::from_table(&table)?;
        Ok(Framing { base, k, keys, index, table })
    }

    pub fn base(&self) -> &Arc<dyn Garside> {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Base normal form of an `M(k)` simple.
    pub fn base_normal_form(&self, x: Simple) -> &NormalForm {
        &self.keys[x.idx()]
    }

    pub fn handle_of(&self, nf: &NormalForm) -> Option<Simple> {
        self.index.get(nf).map(|&i| Simple(i))
    }

    /// Expands an `M(k)` word letter by letter into base normal forms.
    pub fn expand(&self, word: &[Simple]) -> Vec<Simple> {
        word.iter()
            .flat_map(|&x| self.keys[x.idx()].to_word(self.base.as_ref()))
            .collect()
    }

    /// Groups a base normal form `x₀|x₁|⋯` into blocks of `k` letters,
    /// padding with the identity, giving an `M(k)` normal form.
    pub fn regroup(&self, word: &[Simple]) -> Option<Vec<Simple>> {
        word.chunks(self.k)
            .map(|chunk| {
                let mut nf = NormalForm::identity();
                for &s in chunk {
                    nf = multiply(self.base.as_ref(), &nf, s);
                }
                self.handle_of(&nf)
            })
            .collect()
    }
}

fn key_name(base: &dyn Garside, nf: &NormalForm) -> String {
    if nf.sup() == 0 {
        return "1".into();
    }
    let mut parts = vec!["Δ".to_string(); nf.inf];
    parts.extend(nf.factors.iter().map(|&s| base.display(s)));
    parts.join(".")
}

/// All normal forms `Δ^p·x₁⋯x_j` with `p + j ≤ k`, sorted by sup; the
/// identity comes first and `Δ^k` last.
fn enumerate_keys(base: &dyn Garside, k: usize, cap: u128) -> Result<Vec<NormalForm>> {
    let proper = proper_simples(base);
    let mut by_len: Vec<Vec<Vec<Simple>>> = vec![vec![vec![]]];
    let mut total: u128 = 1;
    for len in 1..=k {
        let mut next = Vec::new();
        for w in &by_len[len - 1] {
            for &s in &proper {
                if w.last().is_none_or(|&x| is_normal_pair(base, x, s)) {
                    let mut v = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
        }
        total += next.len() as u128;
        if total > cap {
            return Err(Error::CapExceeded { count: total, cap });
        }
        by_len.push(next);
    }
    let mut keys = Vec::new();
    for sup in 0..=k {
        for inf in (0..=sup).rev() {
            for w in &by_len[sup - inf] {
                keys.push(NormalForm { inf, factors: w.clone() });
            }
        }
    }
    // Δ^k is the largest key; move it to the end
    let top = NormalForm { inf: k, factors: vec![] };
    keys.retain(|nf| *nf != top);
    keys.push(top);
    Ok(keys)
}

impl Garside for Framing {
    fn name(&self) -> String {
        self.table.name()
    }
    fn num_simples(&self) -> usize {
        self.table.num_simples()
    }
    fn num_atoms(&self) -> usize {
        self.table.num_atoms()
    }
    fn atom(&self, i: usize) -> Simple {
        self.table.atom(i)
    }
    fn delta(&self) -> Simple {
        self.table.delta()
    }
    fn product(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.table.product(x, y)
    }
    fn left_divide(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.table.left_divide(x, y)
    }
    fn right_divide(&self, y: Simple, x: Simple) -> Option<Simple> {
        self.table.right_divide(y, x)
    }
    fn starting_set(&self, x: Simple) -> AtomSet {
        self.table.starting_set(x)
    }
    fn finishing_set(&self, x: Simple) -> AtomSet {
        self.table.finishing_set(x)
    }
    fn meet(&self, x: Simple, y: Simple) -> Simple {
        self.table.meet(x, y)
    }
    fn suffix_meet(&self, x: Simple, y: Simple) -> Simple {
        self.table.suffix_meet(x, y)
    }
    fn display(&self, x: Simple) -> String {
        self.table.display(x)
    }
    fn as_framing(&self) -> Option<&Framing> {
        Some(self)
    }
}
