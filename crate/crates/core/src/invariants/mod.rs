//! Filtration invariants of an m-primary ideal `I` in the local ring at the
//! origin: Ratliff-Rush closures, reductions, superficial elements,
//! Valabrega-Valla tables, Hilbert-Samuel data and Wang torsion lengths,
//! together with executable audits of the statements relating them.
//!
//! Randomized searches draw coefficients from [`Mcg64`]; every report echoes
//! the seed. Properties that hold "for all n" are checked over a window and
//! reported as window-certified.

mod audit;
mod experiment;
mod filtration;
mod reduction;
mod rr;

pub use audit::{colon_criterion_213, lemma32_check, proposition_audit, AuditParams, AuditReport, Clause, AUDIT_IDS};
pub use experiment::{invariance_experiment, InvarianceReport, InvarianceTrial};
pub use filtration::{
    depth_flags, hilbert, vv_table, wang_torsion_length, DepthFlags, HilbertData, VvRow, VvTable, WangLength,
};
pub use reduction::{
    find_minimal_reduction, reduction_number, superficial_check, tame_superficial_sequence, FoundReduction,
    ReductionCert, ReductionCheck, SuperficialReport, TameSequence,
};
pub use rr::{ratliff_rush, RrReport, Superficial};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Result;
use crate::ideals::Ideal;
use crate::local::local_length;
use crate::poly::{Field, Polynomial};
use crate::rng::Mcg64;

/// Knobs shared by the analyses. Defaults match the documented ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    /// Krull dimension of the local ring.
    pub d: usize,
    /// Consecutive chain equalities that stop a Ratliff-Rush chain.
    pub window: usize,
    /// Window of colon checks certifying a superficial element.
    pub sup_window: usize,
    /// Cap on reduction numbers and chain lengths.
    pub cap: usize,
    /// Largest `n` for which `~(I^n) = I^n` is decided.
    pub flag_cap: usize,
    /// Attempts of every randomized search.
    pub attempts: usize,
    pub seed: u64,
}

impl Params {
    pub fn new(d: usize) -> Params {
        Params { d, window: 2, sup_window: 3, cap: 12, flag_cap: 4, attempts: 20, seed: 0 }
    }

    /// `d` guessed as the number of variables minus the number of ambient
    /// generators, which is right for complete intersections.
    pub fn for_ideal(i: &Ideal) -> Params {
        let ctx = i.ctx();
        Params::new(ctx.nvars().saturating_sub(ctx.ambient().len()))
    }
}

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

fn random_coefficient(field: Field, rng: &mut Mcg64) -> i64 {
    match field {
        Field::Prime(p) => 1 + rng.below(p - 1) as i64,
        Field::Rational => loop {
            let v = rng.below(199) as i64 - 99;
            if v != 0 {
                return v;
            }
        },
    }
}

/// Random combination of the generators of `I` with nonzero coefficients.
pub fn random_element(i: &Ideal, rng: &mut Mcg64) -> Result<Polynomial> {
    let field = i.ctx().field();
    let mut acc = Polynomial::zero(i.ring());
    for g in i.gens() {
        let c = field.from_i64(random_coefficient(field, rng));
        acc = acc.add(&g.scale(&c))?;
    }
    Ok(acc)
}

pub(crate) fn colength(q: &Ideal) -> Result<u64> {
    local_length(q)
}

pub(crate) fn principal(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    Ideal::new(i.ctx(), vec![f.clone()])
}

/// `I^n : f = I^(n-1)` locally.
pub(crate) fn power_colon_drops(i: &Ideal, n: u32, f: &Polynomial) -> Result<bool> {
    crate::local::local_colon_equals(&i.power(n), f, &i.power(n - 1))
}

pub(crate) fn ideal_json(i: &Ideal) -> Value {
    json!(i.gen_strings())
}

#[cfg(test)]
mod tests;
