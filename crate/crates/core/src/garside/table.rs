use serde::{Deserialize, Serialize};

use super::{AtomSet, Garside, Simple};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// Largest table accepted by the loader (tables are dense `n × n`).
pub const TABLE_LIMIT: usize = 4096;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SimpleEntry {
    pub id: u32,
    pub display: String,
}

/// Serialized form: named simples, Δ, and all products `u·v = w` that are
/// simple. The identity is id 0; its rows may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GarsideTable {
    pub name: String,
    pub simples: Vec<SimpleEntry>,
    pub delta: u32,
    pub products: Vec<[u32; 3]>,
}

impl GarsideTable {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

/// A Garside structure given by an explicit, validated product table.
pub struct TableGarside {
    name: String,
    names: Vec<String>,
    n: usize,
    delta: u32,
    prod: Vec<u32>,
    ldiv: Vec<u32>,
    rdiv: Vec<u32>,
    atoms: Vec<u32>,
    sset: Vec<AtomSet>,
    fset: Vec<AtomSet>,
    meet: Vec<u32>,
    smeet: Vec<u32>,
}

/// Dense bitset rows.
struct Bits {
    words: usize,
    data: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Bits { words, data: vec![0; n * words] }
    }
    fn set(&mut self, row: usize, col: usize) {
        self.data[row * self.words + col / 64] |= 1 << (col % 64);
    }
    fn row(&self, row: usize) -> &[u64] {
        &self.data[row * self.words..(row + 1) * self.words]
    }
}

impl TableGarside {
    pub fn from_table(table: &GarsideTable) -> Result<Self> {
        let err = |msg: String| Error::Table(format!("{}: {msg}", table.name));
        let n = table
            .simples
            .iter()
            .map(|s| s.id as usize + 1)
            .max()
            .unwrap_or(1)
            .max(1);
        if n > TABLE_LIMIT {
            return Err(err(format!("{n} simples exceeds the table limit {TABLE_LIMIT}")));
        }
        let mut names: Vec<Option<String>> = vec![None; n];
        for s in &table.simples {
            if names[s.id as usize].replace(s.display.clone()).is_some() {
                return Err(err(format!("duplicate simple id {}", s.id)));
            }
        }
        if names[0].is_none() {
            names[0] = Some("1".into());
        }
        let names: Vec<String> = names
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| err(format!("missing simple id {i}"))))
            .collect::<Result<_>>()?;
        let delta = table.delta;
        if delta as usize >= n {
            return Err(err(format!("Δ id {delta} out of range")));
        }
        if delta == 0 {
            return Err(err("Δ equals the identity".into()));
        }

        let mut prod = vec![NONE; n * n];
        let mut put = |u: u32, v: u32, w: u32| -> Result<()> {
            for id in [u, v, w] {
                if id as usize >= n {
                    return Err(err(format!("product ({u},{v}) mentions unknown id {id}")));
                }
            }
            let slot = &mut prod[u as usize * n + v as usize];
            if *slot != NONE && *slot != w {
                return Err(err(format!(
                    "conflicting products for pair ({},{})",
                    names[u as usize], names[v as usize]
                )));
            }
            *slot = w;
            Ok(())
        };
        for x in 0..n as u32 {
            put(0, x, x)?;
            put(x, 0, x)?;
        }
        for &[u, v, w] in &table.products {
            put(u, v, w)?;
        }
        let name = |x: usize| names[x].as_str();

        // cancellativity and quotients
        let mut ldiv = vec![NONE; n * n];
        let mut rdiv = vec![NONE; n * n];
        for u in 0..n {
            for v in 0..n {
                let w = prod[u * n + v];
                if w == NONE {
                    continue;
                }
                let w = w as usize;
                if ldiv[u * n + w] != NONE {
                    return Err(err(format!(
                        "left cancellativity fails for pair ({},{})",
                        name(u),
                        name(v)
                    )));
                }
                ldiv[u * n + w] = v as u32;
                if rdiv[w * n + v] != NONE {
                    return Err(err(format!(
                        "right cancellativity fails for pair ({},{})",
                        name(u),
                        name(v)
                    )));
                }
                rdiv[w * n + v] = u as u32;
            }
        }
        let d = delta as usize;
        for x in 0..n {
            if ldiv[x * n + d] == NONE {
                return Err(err(format!("no right complement for pair ({},Δ)", name(x))));
            }
            if rdiv[d * n + x] == NONE {
                return Err(err(format!("no left complement for pair (Δ,{})", name(x))));
            }
        }

        // prefix and suffix orders as bitsets: pre[y] ∋ x ⇔ x ≼ y
        let mut pre = Bits::new(n);
        let mut suf = Bits::new(n);
        for x in 0..n {
            for y in 0..n {
                if ldiv[x * n + y] != NONE {
                    pre.set(y, x);
                }
                if rdiv[y * n + x] != NONE {
                    suf.set(y, x);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && ldiv[x * n + y] != NONE && ldiv[y * n + x] != NONE {
                    return Err(err(format!("prefix order not antisymmetric on pair ({},{})", name(x), name(y))));
                }
                // transitivity: x ≼ y ⇒ pre[x] ⊆ pre[y]
                if ldiv[x * n + y] != NONE
                    && pre.row(x).iter().zip(pre.row(y)).any(|(a, b)| a & !b != 0)
                {
                    return Err(err(format!("prefix order not transitive on pair ({},{})", name(x), name(y))));
                }
            }
        }

        // associativity where defined
        for x in 0..n {
            for y in 0..n {
                let xy = prod[x * n + y];
                if xy == NONE {
                    continue;
                }
                for z in 0..n {
                    let left = prod[xy as usize * n + z];
                    let yz = prod[y * n + z];
                    let right = if yz == NONE { NONE } else { prod[x * n + yz as usize] };
                    if left != right {
                        return Err(err(format!(
                            "associativity fails on ({},{},{})",
                            name(x),
                            name(y),
                            name(z)
                        )));
                    }
                }
            }
        }

        let atoms: Vec<u32> = (1..n)
            .filter(|&x| {
                (1..n).all(|u| {
                    let v = ldiv[u * n + x];
                    u == x || v == NONE || v == 0
                })
            })
            .map(|x| x as u32)
            .collect();
        if atoms.is_empty() {
            return Err(err("no atoms".into()));
        }
        if atoms.len() > 64 {
            return Err(err(format!("{} atoms exceeds 64", atoms.len())));
        }
        let sset = (0..n)
            .map(|x| {
                (0..atoms.len())
                    .filter(|&i| ldiv[atoms[i] as usize * n + x] != NONE)
                    .collect()
            })
            .collect();
        let fset = (0..n)
            .map(|x| {
                (0..atoms.len())
                    .filter(|&i| rdiv[x * n + atoms[i] as usize] != NONE)
                    .collect()
            })
            .collect();

        let lattice = |bits: &Bits, order: &str| -> Result<Vec<u32>> {
            let rank: Vec<u32> = (0..n)
                .map(|x| bits.row(x).iter().map(|w| w.count_ones()).sum())
                .collect();
            let mut t = vec![0u32; n * n];
            let mut common = vec![0u64; bits.words];
            for x in 0..n {
                for y in x..n {
                    for (c, (a, b)) in common.iter_mut().zip(bits.row(x).iter().zip(bits.row(y))) {
                        *c = a & b;
                    }
                    let mut best = 0usize;
                    for (wi, &word) in common.iter().enumerate() {
                        let mut bitsw = word;
                        while bitsw != 0 {
                            let m = wi * 64 + bitsw.trailing_zeros() as usize;
                            bitsw &= bitsw - 1;
                            if rank[m] > rank[best] {
                                best = m;
                            }
                        }
                    }
                    if bits.row(best) != common.as_slice() {
                        return Err(err(format!(
                            "{order} meet does not exist for pair ({},{})",
                            name(x),
                            name(y)
                        )));
                    }
                    t[x * n + y] = best as u32;
                    t[y * n + x] = best as u32;
                }
            }
            Ok(t)
        };
        let meet = lattice(&pre, "prefix")?;
        let smeet = lattice(&suf, "suffix")?;

        Ok(TableGarside {
            name: table.name.clone(),
            names,
            n,
            delta,
            prod,
            ldiv,
            rdiv,
            atoms,
            sset,
            fset,
            meet,
            smeet,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_table(&GarsideTable::from_json(text)?)
    }
}

fn opt(v: u32) -> Option<Simple> {
    (v != NONE).then_some(Simple(v))
}

impl Garside for TableGarside {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn num_simples(&self) -> usize {
        self.n
    }

    fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    fn atom(&self, i: usize) -> Simple {
        Simple(self.atoms[i])
    }

    fn delta(&self) -> Simple {
        Simple(self.delta)
    }

    fn product(&self, x: Simple, y: Simple) -> Option<Simple> {
        opt(self.prod[x.idx() * self.n + y.idx()])
    }

    fn left_divide(&self, x: Simple, y: Simple) -> Option<Simple> {
        opt(self.ldiv[x.idx() * self.n + y.idx()])
    }

    fn right_divide(&self, y: Simple, x: Simple) -> Option<Simple> {
        opt(self.rdiv[y.idx() * self.n + x.idx()])
    }

    fn starting_set(&self, x: Simple) -> AtomSet {
        self.sset[x.idx()]
    }

    fn finishing_set(&self, x: Simple) -> AtomSet {
        self.fset[x.idx()]
    }

    fn meet(&self, x: Simple, y: Simple) -> Simple {
        Simple(self.meet[x.idx() * self.n + y.idx()])
    }

    fn suffix_meet(&self, x: Simple, y: Simple) -> Simple {
        Simple(self.smeet[x.idx() * self.n + y.idx()])
    }

    fn display(&self, x: Simple) -> String {
        self.names[x.idx()].clone()
    }
}
