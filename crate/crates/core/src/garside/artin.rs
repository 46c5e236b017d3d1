use std::collections::HashMap;
use std::sync::Arc;

use super::{greedy_meet, greedy_suffix_meet, AtomSet, Garside, Simple, TieBreak};
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};

/// Largest structure for which full meet tables are precomputed.
const MEET_TABLE_LIMIT: usize = 3000;

/// The Artin monoid of a finite Coxeter system; simples are the group
/// elements, materialized in nondecreasing length.
pub struct ArtinGarside {
    sys: Arc<CoxeterSystem>,
    elems: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    len: Vec<u16>,
    sset: Vec<AtomSet>,
    fset: Vec<AtomSet>,
    /// `lmul[x·r + i] = sᵢx`
    lmul: Vec<u32>,
    /// `rmul[x·r + i] = x sᵢ`
    rmul: Vec<u32>,
    comp: Vec<u32>,
    lcomp: Vec<u32>,
    delta: u32,
    meet: Option<Vec<u32>>,
    smeet: Option<Vec<u32>>,
}

impl ArtinGarside {
    pub fn new(sys: Arc<CoxeterSystem>, cap: u128) -> Result<Self> {
        let order = sys.ty().group_order();
        if order > cap {
            return Err(Error::CapExceeded { count: order, cap });
        }
        let elems: Vec<GroupElement> = sys.enumerate(cap)?.collect();
        let n = elems.len();
        let r = sys.rank();
        let index: HashMap<GroupElement, u32> = elems
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k as u32))
            .collect();
        let len: Vec<u16> = elems.iter().map(|e| e.length() as u16).collect();
        let mut lmul = vec![0u32; n * r];
        let mut rmul = vec![0u32; n * r];
        for (x, e) in elems.iter().enumerate() {
            for i in 0..r {
                lmul[x * r + i] = index[&sys.lmul_gen(i, e)];
                rmul[x * r + i] = index[&sys.rmul_gen(e, i)];
            }
        }
        let sset = (0..n)
            .map(|x| {
                (0..r)
                    .filter(|&i| len[lmul[x * r + i] as usize] < len[x])
                    .collect()
            })
            .collect();
        let fset = (0..n)
            .map(|x| {
                (0..r)
                    .filter(|&i| len[rmul[x * r + i] as usize] < len[x])
                    .collect()
            })
            .collect();
        let w0 = sys.longest();
        let delta = index[w0];
        let comp = elems.iter().map(|e| index[&e.inverse().mul(w0)]).collect();
        let lcomp = elems.iter().map(|e| index[&w0.mul(&e.inverse())]).collect();
        let mut g = ArtinGarside {
            sys,
            elems,
            index,
            len,
            sset,
            fset,
            lmul,
            rmul,
            comp,
            lcomp,
            delta,
            meet: None,
            smeet: None,
        };
        if n <= MEET_TABLE_LIMIT {
            g.meet = Some(super::meet_table(&g, false));
            g.smeet = Some(super::meet_table(&g, true));
        }
        Ok(g)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn element(&self, x: Simple) -> &GroupElement {
        &self.elems[x.idx()]
    }

    pub fn handle_of(&self, w: &GroupElement) -> Option<Simple> {
        self.index.get(w).map(|&k| Simple(k))
    }

    pub fn length(&self, x: Simple) -> usize {
        self.len[x.idx()] as usize
    }

    /// Simple of a word of internal generator indices, if the word is reduced.
    pub fn from_word(&self, word: &[usize]) -> Option<Simple> {
        word.iter().try_fold(Simple::ONE, |acc, &i| self.product(acc, self.atom(i)))
    }

    /// Lexicographically smallest reduced word.
    pub fn word(&self, x: Simple) -> Vec<usize> {
        let r = self.sys.rank();
        let mut out = Vec::with_capacity(self.length(x));
        let mut cur = x.idx();
        while let Some(i) = self.sset[cur].first() {
            out.push(i);
            cur = self.lmul[cur * r + i] as usize;
        }
        out
    }

    #[inline]
    fn r(&self) -> usize {
        self.sys.rank()
    }
}

impl Garside for ArtinGarside {
    fn name(&self) -> String {
        format!("artin:{}", self.sys.ty())
    }

    fn num_simples(&self) -> usize {
        self.elems.len()
    }

    fn num_atoms(&self) -> usize {
        self.r()
    }

    fn atom(&self, i: usize) -> Simple {
        Simple(self.rmul[i])
    }

    fn delta(&self) -> Simple {
        Simple(self.delta)
    }

    fn product(&self, x: Simple, y: Simple) -> Option<Simple> {
        let r = self.r();
        let (mut cur, mut rest) = (x.idx(), y.idx());
        while let Some(a) = self.sset[rest].first() {
            if self.fset[cur].contains(a) {
                return None;
            }
            cur = self.rmul[cur * r + a] as usize;
            rest = self.lmul[rest * r + a] as usize;
        }
        Some(Simple(cur as u32))
    }

    fn left_divide(&self, x: Simple, y: Simple) -> Option<Simple> {
        let r = self.r();
        let (mut cx, mut cy) = (x.idx(), y.idx());
        while let Some(a) = self.sset[cx].first() {
            if !self.sset[cy].contains(a) {
                return None;
            }
            cx = self.lmul[cx * r + a] as usize;
            cy = self.lmul[cy * r + a] as usize;
        }
        Some(Simple(cy as u32))
    }

    fn right_divide(&self, y: Simple, x: Simple) -> Option<Simple> {
        let r = self.r();
        let (mut cx, mut cy) = (x.idx(), y.idx());
        while let Some(a) = self.fset[cx].first() {
            if !self.fset[cy].contains(a) {
                return None;
            }
            cx = self.rmul[cx * r + a] as usize;
            cy = self.rmul[cy * r + a] as usize;
        }
        Some(Simple(cy as u32))
    }

    fn starting_set(&self, x: Simple) -> AtomSet {
        self.sset[x.idx()]
    }

    fn finishing_set(&self, x: Simple) -> AtomSet {
        self.fset[x.idx()]
    }

    fn right_complement(&self, x: Simple) -> Simple {
        Simple(self.comp[x.idx()])
    }

    fn left_complement(&self, x: Simple) -> Simple {
        Simple(self.lcomp[x.idx()])
    }

    fn meet(&self, x: Simple, y: Simple) -> Simple {
        match &self.meet {
            Some(t) => Simple(t[x.idx() * self.elems.len() + y.idx()]),
            None => greedy_meet(self, x, y, TieBreak::Lowest),
        }
    }

    fn suffix_meet(&self, x: Simple, y: Simple) -> Simple {
        match &self.smeet {
            Some(t) => Simple(t[x.idx() * self.elems.len() + y.idx()]),
            None => greedy_suffix_meet(self, x, y, TieBreak::Lowest),
        }
    }

    fn display(&self, x: Simple) -> String {
        if x == Simple::ONE {
            return "e".into();
        }
        if x == self.delta() {
            return "Δ".into();
        }
        let g = self.sys.graph();
        let sep = if (0..g.rank()).any(|i| g.label(i) >= 10) { "." } else { "" };
        self.word(x)
            .iter()
            .map(|&i| g.label(i).to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    fn parse_simple(&self, name: &str) -> Option<Simple> {
        match name {
            "e" => Some(Simple::ONE),
            "Δ" => Some(self.delta()),
            _ => {
                let word = self.sys.graph().parse_word(name).ok()?;
                self.from_word(&word)
            }
        }
    }

    fn descent_determined(&self) -> bool {
        true
    }

    fn as_artin(&self) -> Option<&ArtinGarside> {
        Some(self)
    }
}
