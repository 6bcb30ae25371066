//! Staircase arithmetic for monomial ideals, with no Gröbner machinery.
//!
//! Used as a brute-force oracle against the general engine. Only monomial
//! ideals of a polynomial ring in at most three variables are accepted.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Dimension;
use crate::ideals::Ideal;
use crate::poly::{Monomial, Polynomial, RingCtx};

/// Default number of consecutive equal chain members that ends [`stair_rr`].
pub const DEFAULT_RR_CAP: usize = 4;
const HARD_CAP: usize = 64;

/// Minimal generators of a monomial ideal, as exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    nvars: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StairOp {
    Product,
    Intersect,
    Colon,
    Sum,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Staircase {
    /// Minimalizes `gens`; the empty list is the zero ideal.
    pub fn new(nvars: usize, gens: Vec<Vec<u32>>) -> Result<Staircase> {
        if nvars == 0 || nvars > 3 {
            return Err(Error::Invalid(format!("staircases need 1 to 3 variables, got {nvars}")));
        }
        if gens.iter().any(|g| g.len() != nvars) {
            return Err(Error::Invalid("exponent vector of the wrong length".into()));
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Vec<u32>> =
            gens.iter().filter(|g| !gens.iter().any(|h| h != *g && divides(h, g))).cloned().collect();
        Ok(Staircase { nvars, gens: minimal })
    }

    pub fn unit(nvars: usize) -> Staircase {
        Staircase { nvars, gens: vec![vec![0; nvars]] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn contains_point(&self, e: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, e))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Staircase) -> bool {
        other.gens.iter().all(|g| self.contains_point(g))
    }

    /// Reads a monomial ideal of a ring without ambient ideal.
    pub fn from_ideal(i: &Ideal) -> Result<Staircase> {
        if i.ctx().has_ambient() {
            return Err(Error::Invalid("the oracle has no quotient rings".into()));
        }
        let n = i.ring().nvars();
        let mut gens = Vec::new();
        for g in i.gens() {
            if !g.is_monomial() {
                return Err(Error::NotMonomial(g.to_string()));
            }
            gens.push(g.terms()[0].0.exponents().iter().map(|&e| e as u32).collect());
        }
        Staircase::new(n, gens)
    }

    pub fn to_ideal(&self, ctx: &RingCtx) -> Result<Ideal> {
        let ring = ctx.ring();
        let gens = self
            .gens
            .iter()
            .map(|g| Ok(Polynomial::monomial(ring, Monomial::from_exponents(g)?, ring.field().one())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ctx, gens)
    }
}

impl fmt::Debug for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// Lattice points outside the staircase.
pub fn stair_length(s: &Staircase) -> Dimension {
    let n = s.nvars;
    let mut bounds = vec![0u32; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        let pure = s.gens.iter().filter(|g| g.iter().enumerate().all(|(j, &e)| j == i || e == 0)).map(|g| g[i]).min();
        match pure {
            Some(e) => *b = e,
            None => return Dimension::Infinite,
        }
    }
    let mut count = 0u64;
    let mut point = vec![0u32; n];
    loop {
        if !s.contains_point(&point) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return Dimension::Finite(count);
            }
            point[k] += 1;
            if point[k] < bounds[k] {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}

fn sub_trunc(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x.saturating_sub(*y)).collect()
}

pub fn stair_op(a: &Staircase, b: &Staircase, op: StairOp) -> Result<Staircase> {
    if a.nvars != b.nvars {
        return Err(Error::RingMismatch);
    }
    let n = a.nvars;
    let gens: Vec<Vec<u32>> = match op {
        StairOp::Product => a
            .gens
            .iter()
            .flat_map(|x| b.gens.iter().map(move |y| x.iter().zip(y).map(|(p, q)| p + q).collect()))
            .collect(),
        StairOp::Intersect => a
            .gens
            .iter()
            .flat_map(|x| b.gens.iter().map(move |y| x.iter().zip(y).map(|(p, q)| *p.max(q)).collect()))
            .collect(),
        StairOp::Sum => a.gens.iter().chain(b.gens.iter()).cloned().collect(),
        StairOp::Colon => {
            // (A : B) is the intersection over generators b of (A : b).
            let mut acc = Staircase::unit(n);
            for y in &b.gens {
                let one = Staircase::new(n, a.gens.iter().map(|x| sub_trunc(x, y)).collect())?;
                acc = stair_op(&acc, &one, StairOp::Intersect)?;
            }
            return Ok(acc);
        }
    };
    Staircase::new(n, gens)
}

pub fn stair_power(a: &Staircase, k: u32) -> Result<Staircase> {
    let mut acc = Staircase::unit(a.nvars);
    for _ in 0..k {
        acc = stair_op(&acc, a, StairOp::Product)?;
    }
    Ok(acc)
}

/// Union of the chain `I^(n+1) : I^n`, stopped after `cap` consecutive
/// equal members.
pub fn stair_rr(i: &Staircase, cap: usize) -> Result<Staircase> {
    if stair_length(i) == Dimension::Infinite {
        return Err(Error::NotMPrimary { cap: 0 });
    }
    let mut cur = i.clone();
    let mut acc = i.clone();
    let mut same = 0;
    for _ in 0..HARD_CAP {
        let next = stair_op(&cur, i, StairOp::Product)?;
        let member = stair_op(&next, &cur, StairOp::Colon)?;
        let merged = stair_op(&acc, &member, StairOp::Sum)?;
        if merged == acc {
            same += 1;
            if same >= cap {
                return Ok(acc);
            }
        } else {
            same = 0;
            acc = merged;
        }
        cur = next;
    }
    Err(Error::NoStabilization { what: "staircase Ratliff-Rush chain".into(), cap: HARD_CAP })
}
