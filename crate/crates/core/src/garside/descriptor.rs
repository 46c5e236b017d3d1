use std::path::Path;
use std::sync::Arc;

use super::{Amalgam, ArtinGarside, DirectProduct, Framing, Garside, TableGarside, DEFAULT_SIMPLES_CAP};
use crate::coxeter::{CoxeterSystem, CoxeterType};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Refuse structures with more simples than this.
    pub cap: u128,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { cap: DEFAULT_SIMPLES_CAP }
    }
}

const BUILTIN: &[(&str, &str)] = &[
    ("aa_bb", include_str!("../../fixtures/aa_bb.json")),
    ("abc", include_str!("../../fixtures/abc.json")),
    ("aba_bb", include_str!("../../fixtures/aba_bb.json")),
    ("a2", include_str!("../../fixtures/a2.json")),
    ("aa_bb_framed2", include_str!("../../fixtures/aa_bb_framed2.json")),
];

/// Names of the built-in table fixtures.
pub fn builtin_tables() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

fn load_table(spec: &str) -> Result<TableGarside> {
    let path = Path::new(spec);
    if path.is_file() {
        return TableGarside::from_json(&std::fs::read_to_string(path)?);
    }
    let stem = spec.strip_suffix(".json").unwrap_or(spec);
    let stem = Path::new(stem)
        .file_name()
        .and_then(|s| s.to_str())
        .unwrap_or(stem);
    match BUILTIN.iter().find(|(n, _)| *n == stem) {
        Some((_, text)) => TableGarside::from_json(text),
        None => Err(Error::Config(format!("no table file or built-in fixture {spec:?}"))),
    }
}

fn strip_brackets(s: &str) -> &str {
    let s = s.trim();
    match s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        Some(inner) if balanced(inner) => inner,
        _ => s,
    }
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Splits at the first comma outside brackets.
fn split_pair(s: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => return Ok((strip_brackets(&s[..i]), strip_brackets(&s[i + 1..]))),
            _ => {}
        }
    }
    Err(Error::Parse(format!("expected two comma-separated descriptors in {s:?}")))
}

/// Builds a structure from a descriptor:
/// `artin:A3`, `table:<path|builtin>`, `frame:<desc>:<k>`,
/// `prod:<desc>,<desc>`, `amalgam:<desc>,<desc>`; nested descriptors may be
/// wrapped in brackets.
pub fn build_structure(desc: &str, opts: &BuildOptions) -> Result<Arc<dyn Garside>> {
    let desc = strip_brackets(desc);
    let (kind, rest) = desc
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad structure descriptor {desc:?}")))?;
    let s: Arc<dyn Garside> = match kind.to_ascii_lowercase().as_str() {
        "artin" => {
            let ty: CoxeterType = rest.parse()?;
            Arc::new(ArtinGarside::new(Arc::new(CoxeterSystem::new(ty)?), opts.cap)?)
        }
        "table" => Arc::new(load_table(rest)?),
        "frame" => {
            let (inner, k) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("frame needs :<k> in {desc:?}")))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad framing exponent in {desc:?}")))?;
            Arc::new(Framing::new(build_structure(inner, opts)?, k, opts.cap)?)
        }
        "prod" | "amalgam" => {
            let (a, b) = split_pair(rest)?;
            let (g, h) = (build_structure(a, opts)?, build_structure(b, opts)?);
            let count = if kind == "prod" {
                g.num_simples() as u128 * h.num_simples() as u128
            } else {
                (g.num_simples() + h.num_simples()) as u128
            };
            if count > opts.cap {
                return Err(Error::CapExceeded { count, cap: opts.cap });
            }
            if g.num_atoms() + h.num_atoms() > 64 {
                return Err(Error::Config("more than 64 atoms".into()));
            }
            if kind == "prod" {
                Arc::new(DirectProduct::new(g, h))
            } else {
                Arc::new(Amalgam::new(g, h))
            }
        }
        _ => return Err(Error::Parse(format!("unknown structure kind {kind:?}"))),
    };
    Ok(s)
}
