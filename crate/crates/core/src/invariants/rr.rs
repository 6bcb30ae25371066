//! Ratliff-Rush closure by two independent chains.
//!
//! Method A is the chain `I^(n+1) : I^n`. Method B is `I^(t+1) : x^t` for a
//! superficial nonzerodivisor `x`. Both stop after `window` consecutive
//! equalities and must agree.

use serde_json::{json, Value};

use super::reduction::{find_minimal_reduction, superficial_check};
use super::{colength, ideal_json, principal, random_element, Params};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::local::{local_colon, local_colon_poly, local_contains, local_equal};
use crate::poly::Polynomial;
use crate::rng::Mcg64;

/// A superficial element with the anchor its window check used.
#[derive(Clone, Debug)]
pub struct Superficial {
    pub x: Polynomial,
    pub anchor: usize,
}

#[derive(Clone, Debug)]
pub struct RrReport {
    pub i: Ideal,
    pub closure: Ideal,
    /// `(n, ~(I^n) = I^n)` for `n = 1 ..= flag_cap`.
    pub per_n: Vec<(usize, bool)>,
    pub method_a_steps: usize,
    pub method_b_steps: usize,
    /// First `n` with `I^(n+1) : I^n` equal to the closure.
    pub stabilization: usize,
    pub agreement: bool,
    pub window: usize,
    pub superficial: Superficial,
}

impl RrReport {
    /// Window-certified `~(I^n) = I^n` for every tested `n`.
    pub fn all_closed(&self) -> bool {
        self.per_n.iter().all(|f| f.1)
    }

    pub fn closed_at(&self, n: usize) -> Option<bool> {
        if n == 0 {
            return Some(true);
        }
        self.per_n.iter().find(|f| f.0 == n).map(|f| f.1)
    }

    pub fn is_closed(&self) -> Result<bool> {
        local_equal(&self.closure, &self.i)
    }

    pub fn to_json(&self) -> Result<Value> {
        Ok(json!({
            "I": ideal_json(&self.i),
            "agreement": self.agreement,
            "certified": "window",
            "closed": self.is_closed()?,
            "closure": ideal_json(&self.closure),
            "method_a_steps": self.method_a_steps,
            "method_b_steps": self.method_b_steps,
            "per_n": self.per_n.iter().map(|(n, ok)| json!({"n": n, "closed": ok})).collect::<Vec<_>>(),
            "stabilization": self.stabilization,
            "superficial": {"x": self.superficial.x.to_string(), "anchor": self.superficial.anchor},
            "window": self.window,
        }))
    }
}

/// Runs a chain `next(k)` for `k = 1, 2, ...` until `window` consecutive
/// members are equal. Returns the last member, the number of members and the
/// first index of the final value.
fn stabilize<F>(what: &str, window: usize, cap: usize, mut next: F) -> Result<(Ideal, usize, usize)>
where
    F: FnMut(usize) -> Result<Ideal>,
{
    let mut prev = next(1)?;
    let mut first = 1;
    let mut same = 0;
    for k in 2..=cap.max(2) {
        let cur = next(k)?;
        if !local_contains(&cur, &prev)? {
            return Err(Error::Invalid(format!("{what} chain is not ascending at step {k}")));
        }
        if local_equal(&cur, &prev)? {
            same += 1;
            if same >= window {
                return Ok((cur, k, first));
            }
        } else {
            same = 0;
            first = k;
        }
        prev = cur;
    }
    Err(Error::NoStabilization { what: what.into(), cap })
}

/// Colength of `I^n` compared with the stabilized colength of
/// `I^(n+t) : x^t`.
fn power_is_closed(i: &Ideal, n: usize, x: &Polynomial, p: &Params) -> Result<bool> {
    let target = colength(&i.power(n as u32))?;
    let mut prev = None;
    let mut same = 0;
    for t in 1..=p.cap {
        let a = i.power((n + t) as u32);
        let xt = x.pow(t as u32);
        let len = colength(&a)? - colength(&a.sum(&principal(i, &xt)?)?)?;
        if prev == Some(len) {
            same += 1;
            if same >= p.window {
                return Ok(len == target);
            }
        } else {
            same = 0;
        }
        prev = Some(len);
    }
    Err(Error::NoStabilization { what: format!("I^({n}+t) : x^t"), cap: p.cap })
}

fn find_superficial(i: &Ideal, p: &Params) -> Result<Superficial> {
    let anchor = find_minimal_reduction(i, p)?.cert.r.max(1);
    for attempt in 0..p.attempts {
        let mut rng = Mcg64::derive(p.seed.wrapping_add(0x5eed), attempt as u64);
        let x = random_element(i, &mut rng)?;
        if superficial_check(&x, i, p.sup_window, anchor)?.passed() {
            return Ok(Superficial { x, anchor });
        }
    }
    Err(Error::SuperficialSearchFailed { attempts: p.attempts })
}

/// Ratliff-Rush closure of `I` with per-`n` flags `~(I^n) = I^n`.
///
/// `sup` supplies a superficial element; otherwise one is drawn and
/// certified over a window anchored at the reduction number of a random
/// minimal reduction.
pub fn ratliff_rush(i: &Ideal, p: &Params, sup: Option<Superficial>) -> Result<RrReport> {
    let (a, a_steps, first) =
        stabilize("I^(n+1) : I^n", p.window, p.cap, |n| local_colon(&i.power(n as u32 + 1), &i.power(n as u32)))?;
    let sup = match sup {
        Some(s) => s,
        None => find_superficial(i, p)?,
    };
    let x = sup.x.clone();
    let (b, b_steps, _) =
        stabilize("I^(t+1) : x^t", p.window, p.cap, |t| local_colon_poly(&i.power(t as u32 + 1), &x.pow(t as u32)))?;
    if !local_equal(&a, &b)? {
        return Err(Error::MethodDisagreement);
    }
    if !local_contains(&a, i)? {
        return Err(Error::Invalid("closure does not contain I".into()));
    }
    let s = first as u32;
    if !local_contains(&i.power(s + 1), &a.product(&i.power(s))?)? {
        return Err(Error::Invalid("closure times I^s escapes I^(s+1)".into()));
    }
    let mut per_n = Vec::new();
    for n in 1..=p.flag_cap {
        per_n.push((n, power_is_closed(i, n, &x, p)?));
    }
    if let Some(&(_, closed)) = per_n.first() {
        if closed != local_equal(&a, i)? {
            return Err(Error::MethodDisagreement);
        }
    }
    Ok(RrReport {
        i: i.clone(),
        closure: a,
        per_n,
        method_a_steps: a_steps,
        method_b_steps: b_steps,
        stabilization: first,
        agreement: true,
        window: p.window,
        superficial: sup,
    })
}
