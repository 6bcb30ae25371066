//! Computations in the localization at the origin.
//!
//! A locally `M`-primary ideal `Q` satisfies `M^N ⊆ Q` locally for some `N`,
//! and then `Q + M^N` is a globally `M`-primary ideal with the same local
//! data. The smallest such `N` is certified by `L(N) = L(N+1)` where
//! `L(N) = dim S / (Q + M^N)`: equal colengths and `Q + M^(N+1) ⊆ Q + M^N`
//! give `M^N ⊆ Q + M^(N+1)`, hence `M^N ⊆ Q` locally by Nakayama.
//!
//! Every local operation then runs on the global reduced basis of `Q + M^N`,
//! which is canonical for the local ideal.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::{
    groebner_with_power_of_max, k_dimension, normal_form, standard_monomials, truncated_standard_basis, Dimension,
    GroebnerBasis,
};
use crate::ideals::Ideal;
use crate::linalg::{kernel, SparseVec};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingCtx};

/// How a certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `Q` is globally zero-dimensional and supported only at the origin;
    /// `N` is the least exponent with `M^N ⊆ Q`.
    Global,
    /// Stabilization of truncated colengths in `S / M^N`.
    Truncated,
}

/// Truncation exponent with the colengths that witnessed stabilization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCert {
    pub n: u32,
    pub lengths: (u64, u64),
    pub route: Route,
}

/// Canonical global model of a locally `M`-primary ideal.
#[derive(Clone, Debug)]
pub(crate) struct Artinian {
    pub cert: LocalCert,
    pub gb: GroebnerBasis,
}

fn monomial_poly(ctx: &RingCtx, m: Monomial) -> Polynomial {
    Polynomial::monomial(ctx.ring(), m, ctx.field().one())
}

/// Whether every variable is nilpotent modulo the zero-dimensional `gb` of
/// dimension `dim`.
fn supported_at_origin(ctx: &RingCtx, gb: &GroebnerBasis, dim: u64) -> Result<bool> {
    for x in ctx.ring().variables() {
        let mut p = Polynomial::one(ctx.ring());
        let mut steps = 0u64;
        while !p.is_zero() {
            if steps > dim {
                return Ok(false);
            }
            p = normal_form(&p.mul(&x)?, gb)?;
            steps += 1;
        }
    }
    Ok(true)
}

fn least_power_inside(ctx: &RingCtx, gb: &GroebnerBasis) -> Result<u32> {
    let n = ctx.nvars();
    let mut d = 0u32;
    loop {
        let inside = crate::groebner::monomials_of_degree(n, d)
            .into_iter()
            .map(|m| normal_form(&monomial_poly(ctx, m), gb).map(|r| r.is_zero()))
            .collect::<Result<Vec<bool>>>()?;
        if inside.iter().all(|&b| b) {
            return Ok(d);
        }
        d += 1;
    }
}

fn truncated_length(q: &Ideal, n: u32) -> Result<u64> {
    let tb = truncated_standard_basis(q.ring(), &q.full_gens(), n)?;
    Ok(k_dimension(&tb).finite().expect("truncated quotients are finite"))
}

fn compute_artinian(q: &Ideal) -> Result<Artinian> {
    let ctx = q.ctx();
    let gb = q.groebner();
    if gb.is_unit() {
        let cert = LocalCert { n: 0, lengths: (0, 0), route: Route::Global };
        return Ok(Artinian { cert, gb: gb.clone() });
    }
    if let Dimension::Finite(dim) = k_dimension(gb) {
        if supported_at_origin(ctx, gb, dim)? {
            let n = least_power_inside(ctx, gb)?;
            let cert = LocalCert { n, lengths: (dim, dim), route: Route::Global };
            return Ok(Artinian { cert, gb: gb.clone() });
        }
    }
    let cap = ctx.truncation_cap();
    let mut prev = truncated_length(q, 1)?;
    for n in 1..=cap {
        let next = truncated_length(q, n + 1)?;
        if next == prev {
            let gb = groebner_with_power_of_max(q.ring(), &q.full_gens(), n, MonomialOrder::Grevlex)?;
            let cert = LocalCert { n, lengths: (prev, next), route: Route::Truncated };
            return Ok(Artinian { cert, gb });
        }
        prev = next;
    }
    Err(Error::NotMPrimary { cap })
}

pub(crate) fn artinian(q: &Ideal) -> Result<&Artinian> {
    q.artinian_cell().get_or_init(|| compute_artinian(q)).as_ref().map_err(|e| e.clone())
}

/// Smallest `N` with `L(N) = L(N+1)`; `NOT_M_PRIMARY` past the context's cap.
pub fn truncation_exponent(q: &Ideal) -> Result<LocalCert> {
    Ok(artinian(q)?.cert.clone())
}

/// Length of `S_M / Q S_M` (that is, of `R / Q` localized).
pub fn local_length(q: &Ideal) -> Result<u64> {
    Ok(artinian(q)?.cert.lengths.0)
}

/// Reduced grevlex basis of the `M`-primary ideal `Q S_M ∩ S`.
pub fn local_basis(q: &Ideal) -> Result<GroebnerBasis> {
    Ok(artinian(q)?.gb.clone())
}

/// `b ⊆ a` after localizing.
pub fn local_contains(a: &Ideal, b: &Ideal) -> Result<bool> {
    let ga = &artinian(a)?.gb;
    let gb = &artinian(b)?.gb;
    for g in gb.gens() {
        if !normal_form(g, ga)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f ∈ A` after localizing.
pub fn local_member(a: &Ideal, f: &Polynomial) -> Result<bool> {
    Ok(normal_form(f, &artinian(a)?.gb)?.is_zero())
}

pub fn local_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    Ok(artinian(a)?.gb.gens() == artinian(b)?.gb.gens())
}

/// `λ(A / B)` for `B ⊆ A` locally.
pub fn local_quotient_length(a: &Ideal, b: &Ideal) -> Result<u64> {
    if !local_contains(a, b)? {
        return Err(Error::NotContained);
    }
    Ok(local_length(b)? - local_length(a)?)
}

/// `λ(R / (A : f))`, from `0 -> R/(A:f) -> R/A -> R/(A + (f)) -> 0`.
pub fn local_colon_length(a: &Ideal, f: &Polynomial) -> Result<u64> {
    let mut gens = a.gens().to_vec();
    gens.push(f.clone());
    let af = Ideal::new(a.ctx(), gens)?;
    Ok(local_length(a)? - local_length(&af)?)
}

/// Whether `A : f = B` locally, for `B` with `f B ⊆ A`.
pub fn local_colon_equals(a: &Ideal, f: &Polynomial, b: &Ideal) -> Result<bool> {
    let ga = &artinian(a)?.gb;
    for g in b.gens() {
        if !normal_form(&g.mul(f)?, ga)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(local_colon_length(a, f)? == local_length(b)?)
}

/// `λ(R / (A ∩ B))` from `λ(A ∩ B) = λ(A) + λ(B) - λ(A + B)` on colengths.
pub fn local_intersection_length(a: &Ideal, b: &Ideal) -> Result<u64> {
    let s = a.sum(b)?;
    Ok(local_length(a)? + local_length(b)? - local_length(&s)?)
}

fn coords(p: &Polynomial, index: &HashMap<Monomial, usize>, offset: usize) -> SparseVec {
    let mut v: SparseVec = p.terms().iter().map(|(m, c)| (index[m] + offset, c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

fn std_index(gb: &GroebnerBasis) -> (Vec<Monomial>, HashMap<Monomial, usize>) {
    let mons = standard_monomials(gb, u32::MAX);
    let index = mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    (mons, index)
}

fn from_kernel(ctx: &RingCtx, base: &GroebnerBasis, mons: &[Monomial], ker: Vec<SparseVec>) -> Result<Ideal> {
    let mut gens: Vec<Polynomial> = base.gens().to_vec();
    for v in ker {
        let terms = v.into_iter().map(|(j, c)| (mons[j], c)).collect();
        gens.push(Polynomial::from_terms(ctx.ring(), terms));
    }
    let wide = Ideal::new(ctx, gens)?;
    // Present the result by its canonical basis.
    let gb = wide.groebner().gens().to_vec();
    Ideal::new(ctx, gb)
}

/// `A : B` in the local ring, by linear algebra on `S / (A + M^N)`.
pub fn local_colon(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ga = &artinian(a)?.gb;
    let ctx = a.ctx();
    if b.gens().is_empty() {
        return Ok(Ideal::unit(ctx));
    }
    let (mons, index) = std_index(ga);
    let k = mons.len();
    let images: Vec<SparseVec> = mons
        .iter()
        .map(|m| {
            let mut v = SparseVec::new();
            for (bi, g) in b.gens().iter().enumerate() {
                let r = normal_form(&g.mul_monomial(m), ga)?;
                v.extend(coords(&r, &index, bi * k));
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    from_kernel(ctx, ga, &mons, kernel(ctx.field(), images))
}

/// `A : f` in the local ring.
pub fn local_colon_poly(a: &Ideal, f: &Polynomial) -> Result<Ideal> {
    local_colon(a, &Ideal::new(a.ctx(), vec![f.clone()])?)
}

/// `A ∩ B` in the local ring, as the kernel of `S/C -> S/A ⊕ S/B` with
/// `C = A B` (which lies in both).
pub fn local_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ga = &artinian(a)?.gb;
    let gb = &artinian(b)?.gb;
    let c = a.product(b)?;
    let gc = &artinian(&c)?.gb;
    let (mons_a, idx_a) = std_index(ga);
    let (_, idx_b) = std_index(gb);
    let (mons_c, _) = std_index(gc);
    let images: Vec<SparseVec> = mons_c
        .iter()
        .map(|m| {
            let p = monomial_poly(a.ctx(), *m);
            let mut v = coords(&normal_form(&p, ga)?, &idx_a, 0);
            v.extend(coords(&normal_form(&p, gb)?, &idx_b, mons_a.len()));
            Ok(v)
        })
        .collect::<Result<_>>()?;
    from_kernel(a.ctx(), gc, &mons_c, kernel(a.ctx().field(), images))
}

/// Whether `x` is a nonzerodivisor of `R` localized at the origin.
///
/// With `Q = I_R : x` in `S`, `x` is regular locally iff `Q = I_R` locally,
/// iff `I_R : Q` contains an element with nonzero constant term.
pub fn is_regular_local(x: &Polynomial, ctx: &RingCtx) -> Result<bool> {
    let plain = RingCtx::new(ctx.ring());
    let amb = Ideal::new(&plain, ctx.ambient().to_vec())?;
    if !x.constant_term().is_zero() {
        return Ok(true);
    }
    if amb.is_zero() {
        return Ok(!x.is_zero());
    }
    let q = amb.colon_poly(x)?;
    if amb.contains(&q)? {
        return Ok(true);
    }
    let k = amb.colon(&q)?;
    Ok(k.groebner().gens().iter().any(|g| !g.constant_term().is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::monomials_of_degree;
    use crate::ideals::quotient_ctx;
    use crate::poly::{parse_poly, Field, PolyRing};

    fn ctx(vars: &[&str]) -> RingCtx {
        RingCtx::new(&PolyRing::with_vars(vars, Field::Prime(32003)))
    }

    fn id(c: &RingCtx, g: &[&str]) -> Ideal {
        Ideal::from_strs(c, g).unwrap()
    }

    fn ex34() -> RingCtx {
        let r = PolyRing::with_vars(&["x", "y", "z", "u", "v"], Field::Prime(32003));
        let p = |s: &str| parse_poly(s, &r).unwrap();
        RingCtx::with_ambient(&r, vec![p("x^2+y^5"), p("x*y+u^4"), p("x*z+v^3")]).unwrap()
    }

    #[test]
    fn truncation_exponent_examples() {
        let c = ctx(&["x", "y"]);
        let cert = truncation_exponent(&id(&c, &["x^2", "y^2"])).unwrap();
        assert_eq!((cert.n, cert.lengths), (3, (4, 4)));
        let cert = truncation_exponent(&id(&c, &["x", "y"])).unwrap();
        assert_eq!((cert.n, cert.lengths.0), (1, 1));
        assert_eq!(truncation_exponent(&id(&c, &["x"])).unwrap_err().code(), "NOT_M_PRIMARY");
    }

    #[test]
    fn truncated_route_agrees_with_global_route() {
        // A component at (1, 0) forces the truncated search.
        let c = ctx(&["x", "y"]);
        let q = id(&c, &["x^2*(x-1)", "y^2"]);
        let cert = truncation_exponent(&q).unwrap();
        assert_eq!(cert.route, Route::Truncated);
        assert_eq!((cert.n, cert.lengths), (3, (4, 4)));
        assert!(local_equal(&q, &id(&c, &["x^2", "y^2"])).unwrap());
        assert!(!q.equal(&id(&c, &["x^2", "y^2"])).unwrap());
    }

    #[test]
    fn local_length_examples() {
        let c = ctx(&["x", "y"]);
        assert_eq!(local_length(&id(&c, &["x^2", "y^2"])).unwrap(), 4);
        assert_eq!(local_length(&id(&c, &["x^2+y^5", "y^2"])).unwrap(), 4);
        let c = ex34();
        assert_eq!(local_length(&Ideal::maximal(&c)).unwrap(), 1);
    }

    #[test]
    fn local_equality_examples() {
        let c = ctx(&["x", "y"]);
        assert!(local_equal(&id(&c, &["x"]).sum(&id(&c, &["y^2", "x*y"])).unwrap(), &id(&c, &["x", "y^2"])).unwrap());
        let m = Ideal::maximal(&c);
        assert!(!local_equal(&m.power(2), &m.power(3)).unwrap());
        // a unit factor disappears locally
        assert!(local_equal(&id(&c, &["x*(1+y)", "y^3"]), &id(&c, &["x", "y^3"])).unwrap());
        // and x*(x^2+1) puts x itself in the ideal
        assert!(!local_equal(&id(&c, &["x^2", "y^2"]), &id(&c, &["x^2", "y^2", "x*(x^2+1)"])).unwrap());
    }

    #[test]
    fn quotient_length_examples() {
        let c = ctx(&["x", "y"]);
        let m = Ideal::maximal(&c);
        assert_eq!(local_quotient_length(&m, &m.power(2)).unwrap(), 2);
        assert_eq!(local_quotient_length(&id(&c, &["x^2", "x*y", "y^2"]), &id(&c, &["x^2", "y^2"])).unwrap(), 1);
        assert_eq!(local_quotient_length(&m.power(2), &m).unwrap_err().code(), "NOT_CONTAINED");
    }

    #[test]
    fn example_3_4_lengths() {
        let c = ex34();
        let m = Ideal::maximal(&c);
        let j1 = id(&c, &["y", "z"]);
        let j2 = id(&c, &["z", "u"]);
        let m3 = m.power(3);
        // Values confirmed by plain linear algebra in S / M^10 (no Gröbner bases).
        assert_eq!(local_quotient_length(&m.power(4), &j1.product(&m3).unwrap()).unwrap(), 14);
        assert_eq!(local_quotient_length(&m.power(4), &j2.product(&m3).unwrap()).unwrap(), 10);
        assert_eq!(local_length(&j1).unwrap(), 24);
        assert_eq!(local_length(&j2).unwrap(), 21);
    }

    #[test]
    fn regularity_examples() {
        let c = ctx(&["x", "y"]);
        let x = parse_poly("x", c.ring()).unwrap();
        assert!(is_regular_local(&x, &c).unwrap());
        let q = quotient_ctx(&c, &[parse_poly("x*y", c.ring()).unwrap()]).unwrap();
        assert!(!is_regular_local(&x, &q).unwrap());
        let e = ex34();
        assert!(is_regular_local(&parse_poly("y", e.ring()).unwrap(), &e).unwrap());
        // x^2 - x kills y globally, but only away from the origin
        let q = quotient_ctx(&c, &[parse_poly("y*(x-1)", c.ring()).unwrap()]).unwrap();
        assert!(is_regular_local(&parse_poly("x^2-x", c.ring()).unwrap(), &q).unwrap());
        assert!(!is_regular_local(&parse_poly("y", c.ring()).unwrap(), &q).unwrap());
    }

    #[test]
    fn monotone_and_nakayama() {
        let c = ctx(&["x", "y", "z"]);
        let q = id(&c, &["x^2-y*z", "y^3+x*z", "z^3-x*y^2*(1+z)"]);
        let cert = truncation_exponent(&q).unwrap();
        let mut prev = 0;
        for n in 1..=cert.n + 3 {
            let l = truncated_length(&q, n).unwrap();
            assert!(l >= prev);
            if n >= cert.n {
                assert_eq!(l, cert.lengths.0);
            }
            prev = l;
        }
        let qn1 = groebner_with_power_of_max(q.ring(), &q.full_gens(), cert.n + 1, MonomialOrder::Grevlex).unwrap();
        for m in monomials_of_degree(3, cert.n) {
            assert!(qn1.contains(&monomial_poly(&c, m)).unwrap());
        }
        // the global quotient also sees points away from the origin
        assert!(k_dimension(q.groebner()).finite().unwrap() > local_length(&q).unwrap());
        let p = id(&c, &["x^2-y*z", "y^3+x*z", "z^3"]);
        assert_eq!(truncation_exponent(&p).unwrap().route, Route::Global);
        assert_eq!(k_dimension(p.groebner()).finite(), Some(local_length(&p).unwrap()));
    }

    #[test]
    fn local_colon_and_intersection_match_global() {
        let c = ctx(&["x", "y"]);
        let a = id(&c, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        let b = id(&c, &["x^2*y^2", "x*y"]);
        assert!(local_equal(&local_colon(&a, &b).unwrap(), &a.colon(&b).unwrap()).unwrap());
        let p = id(&c, &["x^3", "y^2"]);
        assert!(local_equal(&local_intersect(&a, &p).unwrap(), &a.intersect(&p).unwrap()).unwrap());
        assert_eq!(local_intersection_length(&a, &p).unwrap(), local_length(&a.intersect(&p).unwrap()).unwrap());
    }
}
