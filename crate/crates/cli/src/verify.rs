//! The verification suite: witness words, connecting elements, chain
//! elements, the dihedral table, transitivity and the growth inequality.

use std::sync::Arc;

use anyhow::Result;
use clap::ValueEnum;
use garside_core::artin::{
    connecting_element, five_factor_bridge, standard_chain, transitivity_harness, u_element,
    v_element, verify_i2_table, verify_witnesses, WitnessCatalog, HARNESS_DEFAULT, HARNESS_HEAVY,
};
use garside_core::coxeter::CoxeterSystem;
use garside_core::garside::{build_structure, proper_simples, ArtinGarside, AtomSet, BuildOptions};
use garside_core::langgraph::build_acceptor;
use garside_core::normalform::is_normal;
use garside_core::penetration::{alpha_beta_report, build_pi};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Witnesses,
    Connecting,
    Chains,
    Dihedral,
    Transitivity,
    Growth,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    fn new(claim: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Claim { claim: claim.into(), pass, detail: detail.into() }
    }

    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{verdict} {}", self.claim)
        } else {
            format!("{verdict} {}: {}", self.claim, self.detail)
        }
    }
}

fn from_result<T>(claim: String, r: garside_core::Result<T>, ok: impl FnOnce(T) -> (bool, String)) -> Claim {
    match r {
        Ok(v) => {
            let (pass, detail) = ok(v);
            Claim::new(claim, pass, detail)
        }
        Err(e) => Claim::new(claim, false, e.to_string()),
    }
}

fn system(t: &str) -> garside_core::Result<CoxeterSystem> {
    CoxeterSystem::new(t.parse()?)
}

fn witnesses(catalog: &WitnessCatalog) -> Result<Vec<Claim>> {
    Ok(verify_witnesses(catalog)?
        .into_iter()
        .map(|c| {
            let line = c.line();
            let detail = line.split_once(": ").map(|(_, d)| d.to_string()).unwrap_or_default();
            Claim::new(format!("witness {} {} = {}", c.ty, c.name, c.word), c.pass, detail)
        })
        .collect())
}

fn connecting() -> Vec<Claim> {
    ["A4", "B4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(7)"]
        .iter()
        .map(|t| {
            let r = system(t).and_then(|s| {
                for a in 0..s.rank() {
                    for b in 0..s.rank() {
                        connecting_element(&s, a, b)?;
                    }
                }
                Ok(s.rank() * s.rank())
            });
            from_result(format!("connecting elements {t}"), r, |n| (true, format!("{n} atom pairs")))
        })
        .collect()
}

fn chains() -> Vec<Claim> {
    let mut out = Vec::new();
    for t in ["A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "D3", "D4", "D5", "D6"] {
        let r = system(t).and_then(|s| {
            let chain = standard_chain(&s)?;
            let u = u_element(&s, &chain)?;
            let v = v_element(&s, &chain)?;
            let odd: AtomSet = (1..=chain.len().div_ceil(2)).map(|i| chain[2 * i - 2]).collect();
            let sv = s.left_descents(&v);
            Ok((sv == odd && sv.is_subset(s.right_descents(&u)), s.graph().format_set(sv)))
        });
        out.push(from_result(format!("u|v chain {t}"), r, |(ok, sv)| (ok, format!("S(v)={sv}"))));
    }
    for t in ["A2", "A3", "A4", "A5", "B3", "D4"] {
        let r = system(t).and_then(|s| {
            let s = Arc::new(s);
            let g = ArtinGarside::new(s.clone(), 1 << 20)?;
            let proper = proper_simples(&g);
            let mut bad = 0usize;
            // a deterministic spread of pairs
            let n = proper.len();
            for i in 0..400usize {
                let (x, y) = (proper[(i * 7919) % n], proper[(i * 104_729 + 3) % n]);
                let bridge = five_factor_bridge(&s, g.element(x), g.element(y))?;
                let mut word = vec![x];
                word.extend(bridge.iter().filter_map(|e| g.handle_of(e)));
                word.push(y);
                if word.len() != 6 || !is_normal(&g, &word) {
                    bad += 1;
                }
            }
            Ok(bad)
        });
        out.push(from_result(format!("five-factor bridge {t}"), r, |bad| {
            (bad == 0, format!("{bad} of 400 pairs failed"))
        }));
    }
    out
}

fn dihedral() -> Vec<Claim> {
    [3usize, 5, 6, 7]
        .iter()
        .map(|p| {
            let r = system(&format!("I2({p})"))
                .and_then(|s| ArtinGarside::new(Arc::new(s), 1 << 20))
                .and_then(|g| verify_i2_table(&g));
            from_result(format!("I2({p}) connection table"), r, |n| (true, format!("{n} pairs")))
        })
        .collect()
}

fn transitivity(heavy: bool) -> Vec<Claim> {
    let mut cases = HARNESS_DEFAULT.to_vec();
    if heavy {
        cases.extend_from_slice(HARNESS_HEAVY);
    }
    cases
        .iter()
        .map(|c| {
            let r = transitivity_harness(std::slice::from_ref(c), &BuildOptions::default());
            from_result(format!("transitivity {}", c.structure), r, |rows| {
                let r = &rows[0];
                let detail = match (r.k, r.expected_k) {
                    (Some(k), Some(e)) => format!("k={k} (expected {e})"),
                    (Some(k), None) => format!("k={k}"),
                    (None, _) => format!("not transitive (irreducible: {})", r.irreducible),
                };
                (r.pass, detail)
            })
        })
        .collect()
}

pub const GROWTH_FIXTURES: &[&str] = &[
    "artin:A2", "artin:A3", "artin:A4", "artin:A5", "artin:B2", "artin:B3", "artin:B4", "artin:D4",
    "artin:H3", "artin:F4", "artin:I2(5)", "artin:I2(7)",
];

fn alpha_beta(desc: &str) -> garside_core::Result<garside_core::penetration::AlphaBeta> {
    let opts = BuildOptions::default();
    let s = build_structure(desc, &opts)?;
    let gamma = build_acceptor(s.as_ref())?;
    let pi = build_pi(s.as_ref(), opts.cap)?;
    alpha_beta_report(&pi, &gamma, 30)
}

fn growth() -> Vec<Claim> {
    let mut out: Vec<Claim> = GROWTH_FIXTURES
        .iter()
        .map(|d| {
            from_result(format!("alpha < beta {d}"), alpha_beta(d), |r| {
                (r.beta - r.alpha > 0.1, format!("alpha={:.6} beta={:.6}", r.alpha, r.beta))
            })
        })
        .collect();
    out.push(from_result("alpha = beta prod:artin:A2,artin:A2".into(), alpha_beta("prod:artin:A2,artin:A2"), |r| {
        ((r.alpha - r.beta).abs() <= 1e-6 * r.beta, format!("alpha={:.9} beta={:.9}", r.alpha, r.beta))
    }));
    out
}

pub fn run(suite: Suite, heavy: bool, catalog: &WitnessCatalog) -> Result<Vec<Claim>> {
    let all = suite == Suite::All;
    let mut claims = Vec::new();
    if all || suite == Suite::Witnesses {
        claims.extend(witnesses(catalog)?);
    }
    if all || suite == Suite::Connecting {
        claims.extend(connecting());
    }
    if all || suite == Suite::Chains {
        claims.extend(chains());
    }
    if all || suite == Suite::Dihedral {
        claims.extend(dihedral());
    }
    if all || suite == Suite::Transitivity {
        claims.extend(transitivity(heavy));
    }
    if all || suite == Suite::Growth {
        claims.extend(growth());
    }
    Ok(claims)
}
