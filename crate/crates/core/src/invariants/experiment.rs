//! Dependence of `λ(I^(n+1) / J I^n)` on the minimal reduction `J`.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::filtration::{jpower_product, vv_table};
use super::reduction::{find_minimal_reduction, reduction_number};
use super::{ideal_json, Params};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::local::local_quotient_length;

#[derive(Clone, Debug)]
pub struct InvarianceTrial {
    /// Trial index, or `None` for a reduction supplied by the caller.
    pub index: Option<usize>,
    pub j: Ideal,
    /// `r_J(I)`, or `None` when `J` is not a reduction within the cap.
    pub r: Option<usize>,
    /// Valabrega-Valla prefix `t_J`, capped at `n_cap`.
    pub vv_prefix: usize,
    /// `λ(I^(n+1) / J I^n)` for `n = 0 ..= n_cap`.
    pub lengths: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub trials: Vec<InvarianceTrial>,
    pub common_prefix: usize,
    /// Whether the lengths of all reductions agree for `n <= common_prefix`.
    pub consistent: bool,
    /// `n` with differing lengths across the reductions.
    pub divergences: Vec<usize>,
    pub seed: u64,
}

impl InvarianceReport {
    pub fn to_json(&self) -> Value {
        json!({
            "common_prefix": self.common_prefix,
            "consistent": self.consistent,
            "divergences": self.divergences,
            "seed": self.seed,
            "trials": self.trials.iter().map(|t| json!({
                "J": ideal_json(&t.j),
                "index": t.index,
                "lengths": t.lengths,
                "r": t.r,
                "vv_prefix": t.vv_prefix,
            })).collect::<Vec<_>>(),
        })
    }
}

fn measure(i: &Ideal, j: &Ideal, n_cap: usize, index: Option<usize>, p: &Params) -> Result<InvarianceTrial> {
    let r = match reduction_number(j, i, p.cap) {
        Ok(c) => Some(c.r),
        Err(Error::NotAReductionWithinCap { .. }) => None,
        Err(e) => return Err(e),
    };
    let vv_prefix = vv_table(j, i, n_cap)?.prefix();
    let lengths = (0..=n_cap)
        .map(|n| local_quotient_length(&i.power(n as u32 + 1), &jpower_product(j, i, n)?))
        .collect::<Result<Vec<u64>>>()?;
    Ok(InvarianceTrial { index, j: j.clone(), r, vv_prefix, lengths })
}

/// Lengths for the supplied ideals and for `trials` random minimal
/// reductions (trial `k` searches with seed derived from `(seed, k)`).
/// Trials are ordered by index whatever `parallel` is. Supplied ideals that
/// are not reductions are measured but left out of the comparison.
pub fn invariance_experiment(
    i: &Ideal,
    explicit: &[Ideal],
    trials: usize,
    n_cap: usize,
    p: &Params,
    parallel: bool,
) -> Result<InvarianceReport> {
    let run = |k: usize| -> Result<InvarianceTrial> {
        let mut q = p.clone();
        q.seed = p.seed.wrapping_add(k as u64 * 1_000_003);
        let found = find_minimal_reduction(i, &q)?;
        measure(i, &found.j, n_cap, Some(k), p)
    };
    let mut out = explicit.iter().map(|j| measure(i, j, n_cap, None, p)).collect::<Result<Vec<_>>>()?;
    let random: Vec<InvarianceTrial> = if parallel {
        (0..trials).into_par_iter().map(run).collect::<Result<Vec<_>>>()?
    } else {
        (0..trials).map(run).collect::<Result<Vec<_>>>()?
    };
    out.extend(random);
    let reductions: Vec<&InvarianceTrial> = out.iter().filter(|t| t.r.is_some()).collect();
    let common_prefix = reductions.iter().map(|t| t.vv_prefix).min().unwrap_or(0);
    let divergences: Vec<usize> =
        (0..=n_cap).filter(|&n| reductions.iter().any(|t| t.lengths[n] != reductions[0].lengths[n])).collect();
    let consistent = divergences.iter().all(|&n| n > common_prefix && n > 0);
    Ok(InvarianceReport { trials: out, common_prefix, consistent, divergences, seed: p.seed })
}
