//! Ideal algebra in `S` and in quotients `R = S / I_R`.
//!
//! An [`Ideal`] stands for `<gens> + I_R`, the full preimage in `S` of an ideal
//! of `R`. Equality is semantic (reduced Gröbner bases), never a comparison of
//! generator lists.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{k_dimension, normal_form, reduced_groebner, try_reduced_groebner, Dimension, GroebnerBasis};
use crate::local::Artinian;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, RingCtx};

struct Inner {
    ctx: RingCtx,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    artinian: OnceLock<Result<Artinian>>,
    powers: Mutex<Vec<Ideal>>,
}

/// Cheap-to-clone handle; caches are shared between clones.
#[derive(Clone)]
pub struct Ideal(Arc<Inner>);

impl Ideal {
    /// `<gens> + I_R`. Generators are reduced modulo the ambient ideal and
    /// duplicates dropped; monomials divisible by another monomial generator
    /// are dropped as well.
    pub fn new(ctx: &RingCtx, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if !crate::poly::same_ring(g.ring(), ctx.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            let g = if ctx.has_ambient() { normal_form(&g, ctx.ambient_gb())? } else { g };
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        let monos: Vec<Monomial> = out.iter().filter(|g| g.is_monomial()).map(|g| g.terms()[0].0).collect();
        out.retain(|g| {
            !g.is_monomial() || {
                let m = g.terms()[0].0;
                !monos.iter().any(|o| *o != m && o.divides(&m))
            }
        });
        Ok(Ideal::from_clean(ctx, out))
    }

    fn from_clean(ctx: &RingCtx, gens: Vec<Polynomial>) -> Ideal {
        Ideal(Arc::new(Inner {
            ctx: ctx.clone(),
            gens,
            gb: OnceLock::new(),
            artinian: OnceLock::new(),
            powers: Mutex::new(Vec::new()),
        }))
    }

    pub fn from_strs(ctx: &RingCtx, gens: &[&str]) -> Result<Ideal> {
        let ps = gens.iter().map(|s| crate::poly::parse_poly(s, ctx.ring())).collect::<Result<Vec<_>>>()?;
        Ideal::new(ctx, ps)
    }

    /// The zero ideal of `R`, i.e. `I_R` itself.
    pub fn zero(ctx: &RingCtx) -> Ideal {
        Ideal::from_clean(ctx, Vec::new())
    }

    pub fn unit(ctx: &RingCtx) -> Ideal {
        Ideal::from_clean(ctx, vec![Polynomial::one(ctx.ring())])
    }

    /// The maximal ideal of the origin.
    pub fn maximal(ctx: &RingCtx) -> Ideal {
        Ideal::new(ctx, ctx.ring().variables()).expect("variables of the ring")
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.0.ctx
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.0.ctx.ring()
    }

    /// Generators, not including the ambient ideal.
    pub fn gens(&self) -> &[Polynomial] {
        &self.0.gens
    }

    /// Generators together with those of the ambient ideal.
    pub fn full_gens(&self) -> Vec<Polynomial> {
        let mut all = self.0.gens.clone();
        all.extend(self.0.ctx.ambient().iter().cloned());
        all
    }

    /// Reduced grevlex basis of the preimage, computed once.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.0.gb.get_or_init(|| reduced_groebner(self.ring(), &self.full_gens(), MonomialOrder::Grevlex))
    }

    pub fn groebner_in(&self, ord: MonomialOrder) -> Result<GroebnerBasis> {
        if ord == MonomialOrder::Grevlex {
            return Ok(self.groebner().clone());
        }
        try_reduced_groebner(self.ring(), &self.full_gens(), ord)
    }

    pub(crate) fn artinian_cell(&self) -> &OnceLock<Result<Artinian>> {
        &self.0.artinian
    }

    /// `dim_K S / (gens + I_R)` globally.
    pub fn global_dimension(&self) -> Dimension {
        k_dimension(self.groebner())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    /// Whether the ideal is the zero ideal of `R`.
    pub fn is_zero(&self) -> bool {
        self.0.gens.is_empty()
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.0.ctx.same_as(&other.0.ctx) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.0.gens.clone();
        gens.extend(other.0.gens.iter().cloned());
        Ideal::new(&self.0.ctx, gens)
    }

    /// Pairwise products of generators. The ambient ideal is absorbed once,
    /// never multiplied with itself.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.0.gens.len() * other.0.gens.len());
        for a in &self.0.gens {
            for b in &other.0.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.0.ctx, gens)
    }

    /// `A^0` is the unit ideal. Powers are cached per handle.
    pub fn power(&self, n: u32) -> Ideal {
        if n == 0 {
            return Ideal::unit(&self.0.ctx);
        }
        if n == 1 {
            return self.clone();
        }
        let mut cache = self.0.powers.lock().expect("power cache");
        // cache[k] holds A^(k+2)
        while cache.len() < (n - 1) as usize {
            let prev = cache.last().cloned().unwrap_or_else(|| self.clone());
            let next = prev.product(self).expect("same context");
            cache.push(next);
        }
        cache[(n - 2) as usize].clone()
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.groebner().contains(f)
    }

    /// Whether `other` is contained in `self` (globally).
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &other.0.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Semantic equality of the preimages in `S`.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.groebner().gens() == other.groebner().gens())
    }

    /// `A ∩ B` by eliminating `t` from `t A + (1 - t) B` in `S[t]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let gens = intersect_raw(self.ring(), &self.0.gens, &other.0.gens, self.0.ctx.ambient())?;
        Ideal::new(&self.0.ctx, gens)
    }

    /// `A : f` for a single element, via `(A ∩ (f)) / f` where `(f)` is the
    /// principal ideal of `S`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() || (self.0.ctx.has_ambient() && normal_form(f, self.0.ctx.ambient_gb())?.is_zero()) {
            return Ok(Ideal::unit(&self.0.ctx));
        }
        let meet = intersect_raw(self.ring(), &self.full_gens(), std::slice::from_ref(f), &[])?;
        let mut quot = Vec::with_capacity(meet.len());
        for g in meet {
            let q = g.div_exact(f)?.ok_or_else(|| Error::Invalid("colon: inexact division".into()))?;
            quot.push(q);
        }
        Ideal::new(&self.0.ctx, quot)
    }

    /// `A : B = ∩ over generators b of B of (A : b)`. Colon by the zero ideal
    /// is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc = Ideal::unit(&self.0.ctx);
        for b in &other.0.gens {
            let c = self.colon_poly(b)?;
            acc = if acc.is_unit() { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// The same generators read in another context on the same ring.
    pub fn in_ctx(&self, ctx: &RingCtx) -> Result<Ideal> {
        if !crate::poly::same_ring(ctx.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        Ideal::new(ctx, self.full_gens())
    }

    /// Generators as sorted strings, for reports.
    pub fn gen_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.0.gens.iter().map(|g| g.to_string()).collect();
        v.sort();
        v
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gen_strings().join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.0.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

fn lift(p: &Polynomial, ext: &Arc<PolyRing>, t_exp: u16) -> Polynomial {
    p.map_monomials(ext, |m| m.prepend_var(t_exp))
}

/// Generators of `(a) ∩ (b) + amb` computed in `S[t]`; `amb` enters once,
/// unmultiplied, since it lies in both sides.
fn intersect_raw(
    ring: &Arc<PolyRing>,
    a: &[Polynomial],
    b: &[Polynomial],
    amb: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    if a.is_empty() || b.is_empty() {
        return Ok(amb.to_vec());
    }
    if ring.nvars() + 1 > crate::poly::MAX_VARS {
        return Err(Error::TooManyVariables(ring.nvars() + 1));
    }
    let ext = ring.extend_front("_t");
    let t = Polynomial::monomial(&ext, Monomial::var(ext.nvars(), 0, 1), ext.field().one());
    let one_minus_t = Polynomial::one(&ext).sub(&t)?;
    let mut gens = Vec::with_capacity(a.len() + b.len() + amb.len());
    for g in a {
        gens.push(t.mul(&lift(g, &ext, 0))?);
    }
    for g in b {
        gens.push(one_minus_t.mul(&lift(g, &ext, 0))?);
    }
    for g in amb {
        gens.push(lift(g, &ext, 0));
    }
    let gb = reduced_groebner(&ext, &gens, MonomialOrder::Block(1));
    Ok(gb
        .gens()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| p.map_monomials(ring, |m| m.drop_first_var()))
        .collect())
}

/// `A ∩ K[remaining variables]`, computed with a block order that puts the
/// dropped variables first. The result lives in `S` without ambient ideal
/// (its generators do not involve the dropped variables).
pub fn eliminate(a: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = a.ring();
    let n = ring.nvars();
    if drop.iter().any(|&i| i >= n) {
        return Err(Error::Invalid("eliminate: variable index out of range".into()));
    }
    let mut perm: Vec<usize> = drop.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let k = perm.len();
    perm.extend((0..n).filter(|i| !drop.contains(i)));
    let mut inv = vec![0usize; n];
    for (pos, &src) in perm.iter().enumerate() {
        inv[src] = pos;
    }
    let pr = ring.permuted(&perm);
    let gens: Vec<Polynomial> = a.full_gens().iter().map(|g| g.map_monomials(&pr, |m| m.permuted(&perm))).collect();
    let gb = reduced_groebner(&pr, &gens, MonomialOrder::Block(k));
    let kept: Vec<Polynomial> = gb
        .gens()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| (0..k).all(|i| m.exponent(i) == 0)))
        .map(|p| p.map_monomials(ring, |m| m.permuted(&inv)))
        .collect();
    Ideal::new(&RingCtx::new(ring), kept)
}

/// `ctx` with `extra` added to the ambient ideal.
pub fn quotient_ctx(ctx: &RingCtx, extra: &[Polynomial]) -> Result<RingCtx> {
    let mut amb = ctx.ambient().to_vec();
    amb.extend(extra.iter().cloned());
    Ok(RingCtx::with_ambient(ctx.ring(), amb)?.with_truncation_cap(ctx.truncation_cap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ctx(vars: &[&str]) -> RingCtx {
        RingCtx::new(&PolyRing::with_vars(vars, Field::Prime(32003)))
    }

    fn id(c: &RingCtx, g: &[&str]) -> Ideal {
        Ideal::from_strs(c, g).unwrap()
    }

    #[test]
    fn compose_examples() {
        let c = ctx(&["x", "y"]);
        assert!(id(&c, &["x"]).sum(&id(&c, &["y"])).unwrap().equal(&id(&c, &["x", "y"])).unwrap());
        let m = id(&c, &["x", "y"]);
        let m2 = m.product(&m).unwrap();
        assert_eq!(m2.gen_strings(), ["x*y", "x^2", "y^2"]);
        let j = id(&c, &["x^2", "y^2"]);
        assert!(j.product(&m.power(0)).unwrap().equal(&j).unwrap());
    }

    #[test]
    fn power_examples() {
        let c = ctx(&["x", "y"]);
        let m = id(&c, &["x", "y"]);
        assert!(m.power(2).equal(&id(&c, &["x^2", "x*y", "y^2"])).unwrap());
        assert!(m.power(1).equal(&m).unwrap());
        assert!(m.power(2).power(2).equal(&m.power(4)).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let c = ctx(&["x", "y"]);
        assert!(id(&c, &["x"]).intersect(&id(&c, &["y"])).unwrap().equal(&id(&c, &["x*y"])).unwrap());
        let a = id(&c, &["x^2+y", "y^3"]);
        assert!(a.intersect(&a).unwrap().equal(&a).unwrap());
        assert!(id(&c, &["x^2", "y"]).intersect(&id(&c, &["x"])).unwrap().equal(&id(&c, &["x^2", "x*y"])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let c = ctx(&["x", "y"]);
        assert!(id(&c, &["x^2"]).colon(&id(&c, &["x"])).unwrap().equal(&id(&c, &["x"])).unwrap());
        assert!(id(&c, &["x*y"]).colon(&id(&c, &["x"])).unwrap().equal(&id(&c, &["y"])).unwrap());
        let q = id(&c, &["x^4", "x^3*y", "x*y^3", "y^4"]).colon(&id(&c, &["x^2*y^2"])).unwrap();
        assert!(q.equal(&id(&c, &["x", "y"])).unwrap());
        assert!(id(&c, &["x"]).colon(&Ideal::zero(&c)).unwrap().is_unit());
    }

    #[test]
    fn equality_and_membership() {
        let c = ctx(&["x", "y"]);
        assert!(id(&c, &["x", "y"]).equal(&id(&c, &["y", "x"])).unwrap());
        assert!(id(&c, &["x"]).member(&crate::poly::parse_poly("x^2+x*y", c.ring()).unwrap()).unwrap());
        assert!(!id(&c, &["x"]).sum(&id(&c, &["y"])).unwrap().equal(&id(&c, &["x+y"])).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let r = PolyRing::with_vars(&["t", "x", "y"], Field::Prime(32003));
        let c = RingCtx::new(&r);
        let e = eliminate(&id(&c, &["t*x", "(1-t)*y"]), &[0]).unwrap();
        assert!(e.equal(&id(&c, &["x*y"])).unwrap());
        let c2 = ctx(&["x", "y"]);
        assert!(eliminate(&id(&c2, &["x-y"]), &[0]).unwrap().is_zero());
        let c3 = ctx(&["x", "y", "z"]);
        let e = eliminate(&id(&c3, &["x-y^2", "y-z"]), &[1]).unwrap();
        assert!(e.equal(&id(&c3, &["x-z^2"])).unwrap());
    }

    #[test]
    fn quotient_contexts_compose() {
        let c = ctx(&["x", "y"]);
        let p = |s: &str| crate::poly::parse_poly(s, c.ring()).unwrap();
        let once = quotient_ctx(&quotient_ctx(&c, &[p("x")]).unwrap(), &[p("y")]).unwrap();
        let both = quotient_ctx(&c, &[p("x"), p("y")]).unwrap();
        assert!(once.same_as(&both));
        assert_eq!(quotient_ctx(&c, &[p("x+1")]).unwrap_err().code(), "NONZERO_CONSTANT");
        let bar = quotient_ctx(&c, &[p("x")]).unwrap();
        assert_eq!(Ideal::from_strs(&bar, &["y"]).unwrap().global_dimension(), Dimension::Finite(1));
    }

    #[test]
    fn ambient_is_never_squared() {
        let c = ctx(&["x", "y"]);
        let p = |s: &str| crate::poly::parse_poly(s, c.ring()).unwrap();
        let q = quotient_ctx(&c, &[p("x*y")]).unwrap();
        let m = Ideal::maximal(&q);
        // (x, y)^2 + (xy) = (x^2, y^2, xy)
        assert_eq!(m.power(2).global_dimension(), Dimension::Finite(3));
        assert!(Ideal::zero(&q).equal(&Ideal::from_strs(&q, &["x*y"]).unwrap()).unwrap());
    }
}
