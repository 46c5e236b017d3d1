//! Sampling experiments for the expected penetration distance under the
//! uniform measure on `L^(k)` times the uniform measure on atoms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::{Garside, Simple};
use crate::langgraph::{LangGraph, Sampler};
use crate::normalform::{penetration_distance, penetration_distance_literal, NormalForm};

/// Every `CROSS_CHECK`-th sample is also evaluated by the literal oracle.
const CROSS_CHECK: u64 = 100;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PdRow {
    pub k: usize,
    pub mean_pd: f64,
    pub max_pd: usize,
    pub samples: usize,
}

/// Independent RNG for sample `index` at length `k`; output does not
/// depend on how samples are scheduled.
pub fn sample_rng(seed: u64, k: usize, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((k as u64) << 32) | index);
    rng
}

/// One uniformly random normal word of length `k` and atom, with `pd`.
fn draw(g: &dyn Garside, sampler: &Sampler<'_>, seed: u64, k: usize, index: u64) -> Result<usize> {
    let mut rng = sample_rng(seed, k, index);
    let word: Vec<Simple> = sampler.sample(&mut rng);
    let atom = g.atom(rng.gen_range(0..g.num_atoms()));
    let x = NormalForm::from_factors(word);
    let pd = penetration_distance(g, &x, &[atom]);
    if index.is_multiple_of(CROSS_CHECK) {
        let literal = penetration_distance_literal(g, &x, &[atom]);
        if literal != pd {
            return Err(Error::Defect(format!(
                "pd mismatch at k={k}, sample {index}: {pd} vs literal {literal} for {} · {}",
                x.render(g),
                g.display(atom)
            )));
        }
    }
    Ok(pd)
}

/// Mean and maximum of `pd(x, a)` over `samples` draws for each `k`.
pub fn pd_experiment(
    g: &dyn Garside,
    acceptor: &LangGraph,
    ks: &[usize],
    samples: usize,
    seed: u64,
) -> Result<Vec<PdRow>> {
    if samples == 0 {
        return Err(Error::Config("samples must be at least 1".into()));
    }
    ks.iter()
        .map(|&k| {
            let sampler = Sampler::new(acceptor, k)?;
            let pds: Vec<usize> = (0..samples as u64)
                .into_par_iter()
                .map(|i| draw(g, &sampler, seed, k, i))
                .collect::<Result<_>>()?;
            let sum: usize = pds.iter().sum();
            Ok(PdRow {
                k,
                mean_pd: sum as f64 / samples as f64,
                max_pd: pds.iter().copied().max().unwrap_or(0),
                samples,
            })
        })
        .collect()
}
