//! Reductions, reduction numbers and superficial elements.

use serde_json::{json, Value};

use super::{colength, ideal_json, random_element, Params};
use crate::error::{Error, Result};
use crate::ideals::{quotient_ctx, Ideal};
use crate::local::{is_regular_local, local_colon_equals, local_contains, local_member};
use crate::poly::Polynomial;
use crate::rng::Mcg64;

/// Colengths compared at step `n`: `λ(R/I^(n+1))` and `λ(R/J I^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCheck {
    pub n: usize,
    pub power_colength: u64,
    pub product_colength: u64,
}

/// `r_J(I)` with the checks at `r` (equal) and `r - 1` (not equal).
#[derive(Clone, Debug)]
pub struct ReductionCert {
    pub j: Ideal,
    pub i: Ideal,
    pub r: usize,
    pub witness: Vec<ReductionCheck>,
}

impl ReductionCert {
    pub fn to_json(&self) -> Value {
        json!({
            "I": ideal_json(&self.i),
            "J": ideal_json(&self.j),
            "r": self.r,
            "witness": self.witness.iter().map(|c| json!({
                "n": c.n,
                "colength_power": c.power_colength,
                "colength_product": c.product_colength,
                "equal": c.power_colength == c.product_colength,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Least `r <= cap` with `I^(r+1) = J I^r` locally. Since `J I^r ⊆ I^(r+1)`
/// the comparison is one of colengths.
pub fn reduction_number(j: &Ideal, i: &Ideal, cap: usize) -> Result<ReductionCert> {
    if !local_contains(i, j)? {
        return Err(Error::NotContained);
    }
    let mut last: Option<ReductionCheck> = None;
    for n in 0..=cap {
        let prod = if n == 0 { j.clone() } else { j.product(&i.power(n as u32))? };
        let check =
            ReductionCheck { n, power_colength: colength(&i.power(n as u32 + 1))?, product_colength: colength(&prod)? };
        if check.power_colength == check.product_colength {
            let mut witness: Vec<ReductionCheck> = last.into_iter().collect();
            witness.push(check);
            return Ok(ReductionCert { j: j.clone(), i: i.clone(), r: n, witness });
        }
        last = Some(check);
    }
    Err(Error::NotAReductionWithinCap { cap })
}

/// A reduction found by random search, with the attempt that produced it.
#[derive(Clone, Debug)]
pub struct FoundReduction {
    pub j: Ideal,
    pub elements: Vec<Polynomial>,
    pub cert: ReductionCert,
    pub attempt: usize,
    pub seed: u64,
}

impl FoundReduction {
    pub fn to_json(&self) -> Value {
        json!({
            "J": self.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "attempt": self.attempt,
            "r": self.cert.r,
            "cert": self.cert.to_json(),
        })
    }
}

fn try_reduction(i: &Ideal, elements: &[Polynomial], cap: usize) -> Result<Option<(Ideal, ReductionCert)>> {
    let j = Ideal::new(i.ctx(), elements.to_vec())?;
    match reduction_number(&j, i, cap) {
        Ok(cert) => Ok(Some((j, cert))),
        Err(Error::NotAReductionWithinCap { .. }) | Err(Error::NotMPrimary { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `d` random combinations of the generators of `I` generating a reduction.
/// With `d` generators the reduction is minimal.
pub fn find_minimal_reduction(i: &Ideal, p: &Params) -> Result<FoundReduction> {
    for attempt in 0..p.attempts {
        let mut rng = Mcg64::derive(p.seed, attempt as u64);
        let elements = (0..p.d).map(|_| random_element(i, &mut rng)).collect::<Result<Vec<_>>>()?;
        if let Some((j, cert)) = try_reduction(i, &elements, p.cap)? {
            return Ok(FoundReduction { j, elements, cert, attempt, seed: p.seed });
        }
    }
    if p.d >= 2 {
        let mut rng = Mcg64::derive(p.seed, p.attempts as u64);
        let fewer = (0..p.d - 1).map(|_| random_element(i, &mut rng)).collect::<Result<Vec<_>>>()?;
        if try_reduction(i, &fewer, p.cap)?.is_some() {
            return Err(Error::DimensionMismatch {
                d: p.d,
                reason: format!("{} elements already generate a reduction", p.d - 1),
            });
        }
    }
    Err(Error::SearchFailed { what: format!("{}-generated reduction", p.d), attempts: p.attempts })
}

/// Outcome of a window check of `I^(n+1) : x = I^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperficialReport {
    pub in_ideal: bool,
    pub regular: bool,
    pub anchor: usize,
    pub rows: Vec<(usize, bool)>,
}

impl SuperficialReport {
    pub fn passed(&self) -> bool {
        self.in_ideal && self.regular && self.rows.iter().all(|r| r.1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "anchor": self.anchor,
            "certified": "window",
            "in_ideal": self.in_ideal,
            "passed": self.passed(),
            "regular": self.regular,
            "rows": self.rows.iter().map(|(n, ok)| json!({"n": n, "colon_equal": ok})).collect::<Vec<_>>(),
        })
    }
}

/// Whether `x` is a local nonzerodivisor with `I^(n+1) : x = I^n` for
/// `n` in `anchor ..= anchor + window`.
pub fn superficial_check(x: &Polynomial, i: &Ideal, window: usize, anchor: usize) -> Result<SuperficialReport> {
    let mut report = SuperficialReport { in_ideal: false, regular: false, anchor, rows: Vec::new() };
    report.in_ideal = local_member(i, x)?;
    if !report.in_ideal {
        return Ok(report);
    }
    report.regular = is_regular_local(x, i.ctx())?;
    if !report.regular {
        return Ok(report);
    }
    for n in anchor..=anchor + window {
        let ok = local_colon_equals(&i.power(n as u32 + 1), x, &i.power(n as u32))?;
        report.rows.push((n, ok));
        if !ok {
            break;
        }
    }
    Ok(report)
}

/// A tame superficial sequence generating a reduction.
#[derive(Clone, Debug)]
pub struct TameSequence {
    pub xs: Vec<Polynomial>,
    pub j: Ideal,
    pub cert: ReductionCert,
    pub attempt: usize,
    pub seed: u64,
}

impl TameSequence {
    pub fn to_json(&self) -> Value {
        json!({
            "attempt": self.attempt,
            "certified": "window",
            "r": self.cert.r,
            "xs": self.xs.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Whether `xs` is a superficial sequence of `I` (each `x_k` superficial for
/// `I` modulo the earlier ones) and, if `tame`, each is superficial for `I`.
pub(crate) fn is_superficial_sequence(
    i: &Ideal,
    xs: &[Polynomial],
    window: usize,
    anchor: usize,
    tame: bool,
) -> Result<bool> {
    for k in 0..xs.len() {
        if (tame || k == 0) && !superficial_check(&xs[k], i, window, anchor)?.passed() {
            return Ok(false);
        }
        if k > 0 {
            let q = quotient_ctx(i.ctx(), &xs[..k])?;
            let x = xs[k].clone();
            if !superficial_check(&x, &i.in_ctx(&q)?, window, anchor)?.passed() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Random `d` elements forming a tame superficial sequence of `I` whose
/// ideal is a reduction. The superficial window is anchored at the
/// reduction number of the drawn ideal.
pub fn tame_superficial_sequence(i: &Ideal, p: &Params) -> Result<TameSequence> {
    for attempt in 0..p.attempts {
        let mut rng = Mcg64::derive(p.seed, attempt as u64);
        let xs = (0..p.d).map(|_| random_element(i, &mut rng)).collect::<Result<Vec<_>>>()?;
        let Some((j, cert)) = try_reduction(i, &xs, p.cap)? else { continue };
        if is_superficial_sequence(i, &xs, p.sup_window, cert.r.max(1), true)? {
            return Ok(TameSequence { xs, j, cert, attempt, seed: p.seed });
        }
    }
    Err(Error::SearchFailed { what: "tame superficial sequence".into(), attempts: p.attempts })
}
