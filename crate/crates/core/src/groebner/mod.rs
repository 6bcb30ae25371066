//! Normal forms, reduced Gröbner bases and standard monomials.

mod engine;
mod staircase;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};

pub(crate) use engine::{Basis, Engine, Term};
pub(crate) use staircase::monomials_of_degree;
pub use staircase::{count_standard, enumerate_standard};

/// Vector-space dimension of a quotient `S / I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl Dimension {
    pub fn finite(self) -> Option<u64> {
        match self {
            Dimension::Finite(n) => Some(n),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial.
///
/// With a truncation degree `N` this is instead the reduced standard basis of
/// the image of the ideal in `S / M^N` (monomials of degree `>= N` vanish).
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    trunc: Option<u32>,
    gens: Vec<Polynomial>,
    work: Vec<Vec<Term>>,
    lts: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn truncation(&self) -> Option<u32> {
        self.trunc
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lts
    }

    pub fn is_unit(&self) -> bool {
        self.lts.len() == 1 && self.lts[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn engine(&self) -> Engine {
        Engine { field: self.ring.field(), order: self.order, trunc: self.trunc }
    }

    pub(crate) fn basis(&self) -> Basis {
        Basis::from_polys(self.work.clone())
    }

    /// Buchberger criterion over all pairs.
    pub fn is_groebner(&self) -> bool {
        self.engine().is_groebner(&self.work)
    }

    /// Whether `p` reduces to zero.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(normal_form(p, self)?.is_zero())
    }

    fn from_work(ring: &Arc<PolyRing>, engine: Engine, work: Vec<Vec<Term>>) -> GroebnerBasis {
        let gens = work.iter().map(|t| to_poly(ring, engine.order, t.clone())).collect();
        let lts = work.iter().map(|t| t[0].0).collect();
        GroebnerBasis { ring: ring.clone(), order: engine.order, trunc: engine.trunc, gens, work, lts }
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.trunc == other.trunc && self.gens == other.gens
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

pub(crate) fn to_terms(p: &Polynomial, engine: &Engine) -> Vec<Term> {
    engine.normalize(p.terms().to_vec())
}

pub(crate) fn to_poly(ring: &Arc<PolyRing>, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
    if order == MonomialOrder::Grevlex {
        Polynomial::from_sorted(ring, terms)
    } else {
        Polynomial::from_terms(ring, terms)
    }
}

fn check_all(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<()> {
    if gens.iter().all(|g| same_ring(g.ring(), ring)) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Reduced Gröbner basis of `<gens>` under `ord`. Panics on ring mismatch;
/// use [`try_reduced_groebner`] for checked input.
pub fn reduced_groebner(ring: &Arc<PolyRing>, gens: &[Polynomial], ord: MonomialOrder) -> GroebnerBasis {
    try_reduced_groebner(ring, gens, ord).expect("generators in the given ring")
}

pub fn try_reduced_groebner(ring: &Arc<PolyRing>, gens: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    if ord == MonomialOrder::LocalGrevlex {
        return Err(Error::Invalid("the local order needs a truncation degree".into()));
    }
    build(ring, gens, Engine { field: ring.field(), order: ord, trunc: None })
}

/// Reduced standard basis of the image of `<gens>` in `S / M^n` under the
/// local degree order.
pub fn truncated_standard_basis(ring: &Arc<PolyRing>, gens: &[Polynomial], n: u32) -> Result<GroebnerBasis> {
    build(ring, gens, Engine { field: ring.field(), order: MonomialOrder::LocalGrevlex, trunc: Some(n) })
}

/// Gröbner basis of `<gens> + M^n` under `ord`, computed the plain way by
/// listing every monomial of degree `n` as a generator.
pub fn groebner_with_power_of_max(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    n: u32,
    ord: MonomialOrder,
) -> Result<GroebnerBasis> {
    let mut all = gens.to_vec();
    let field = ring.field();
    for m in staircase::monomials_of_degree(ring.nvars(), n) {
        all.push(Polynomial::monomial(ring, m, field.one()));
    }
    try_reduced_groebner(ring, &all, ord)
}

fn build(ring: &Arc<PolyRing>, gens: &[Polynomial], engine: Engine) -> Result<GroebnerBasis> {
    check_all(ring, gens)?;
    if engine.trunc == Some(0) {
        // S / M^0 is the zero ring: every ideal is the unit ideal.
        let one = vec![(Monomial::one(ring.nvars()), ring.field().one())];
        let mut gb = GroebnerBasis::from_work(ring, engine, vec![]);
        gb.work = vec![one.clone()];
        gb.lts = vec![one[0].0];
        gb.gens = vec![Polynomial::one(ring)];
        return Ok(gb);
    }
    let work_in: Vec<Vec<Term>> = gens.iter().map(|g| to_terms(g, &engine)).collect();
    let work = engine.reduced(work_in, ring.nvars());
    Ok(GroebnerBasis::from_work(ring, engine, work))
}

/// Remainder of multivariate division by `g`: no term is divisible by a
/// leading monomial of `g`, and `p - NF(p)` lies in the ideal.
pub fn normal_form(p: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if !same_ring(p.ring(), &g.ring) {
        return Err(Error::RingMismatch);
    }
    let engine = g.engine();
    let basis = g.basis();
    let r = engine.reduce(to_terms(p, &engine), &basis);
    Ok(to_poly(&g.ring, g.order, r))
}

/// Number of standard monomials; `Infinite` when some variable has no pure
/// power among the leading monomials (global bases only).
pub fn k_dimension(g: &GroebnerBasis) -> Dimension {
    if g.is_unit() {
        return Dimension::Finite(0);
    }
    let n = g.ring.nvars();
    if g.trunc.is_none() {
        let mut has_pure = vec![false; n];
        for m in &g.lts {
            if let Some(i) = m.pure_power_var() {
                has_pure[i] = true;
            }
        }
        if has_pure.iter().any(|b| !b) {
            return Dimension::Infinite;
        }
    }
    Dimension::Finite(count_standard(n, &g.lts, g.trunc.map(|t| t.saturating_sub(1))))
}

/// Standard monomials of degree at most `degree_cap`, by degree and then
/// grevlex-descending within a degree.
pub fn standard_monomials(g: &GroebnerBasis, degree_cap: u32) -> Vec<Monomial> {
    let cap = match g.trunc {
        Some(t) => degree_cap.min(t.saturating_sub(1)),
        None => degree_cap,
    };
    if g.is_unit() || (g.trunc == Some(0)) {
        return Vec::new();
    }
    let mut out = enumerate_standard(g.ring.nvars(), &g.lts, cap);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp_grevlex(a)));
    out
}
