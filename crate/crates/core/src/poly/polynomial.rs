use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::ring::same_ring;
use super::{Coefficient, Field, Monomial, MonomialOrder, PolyRing};
use crate::error::{Error, Result};

/// Sparse polynomial in `S`, terms kept in grevlex-descending order with no
/// zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coefficient)>,
}

/// Binary operation selector for [`combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Mul,
}

/// Exact sum or product of two polynomials of the same ring.
pub fn combine(a: &Polynomial, b: &Polynomial, op: CombineOp) -> Result<Polynomial> {
    match op {
        CombineOp::Add => a.add(b),
        CombineOp::Mul => a.mul(b),
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coefficient) -> Polynomial {
        Polynomial::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coefficient) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coefficient)>) -> Polynomial {
        let field = ring.field();
        let mut acc: BTreeMap<GrevlexKey, Coefficient> = BTreeMap::new();
        for (m, c) in terms {
            let slot = acc.entry(GrevlexKey(m)).or_insert_with(|| field.zero());
            *slot = field.add(slot, &c);
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.0, c)).collect();
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusted constructor: terms already grevlex-descending and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coefficient)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_grevlex(&w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Coefficient {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Lowest total degree of a term (the order at the origin).
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_grevlex(mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(ca, cb);
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        let terms = self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Largest monomial under `ord` together with its coefficient.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Monomial, Coefficient)> {
        let best = self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0)).ok_or(Error::ZeroPolynomial)?;
        Ok(best.clone())
    }

    /// Divides by the grevlex leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(d)?;
        let (lm, lc) = d.leading_term(MonomialOrder::Grevlex)?;
        let field = self.field();
        let lc_inv = field.inv(&lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let Some(q) = lm.quotient_of(&m) else {
                return Ok(None);
            };
            let qc = field.mul(&c, &lc_inv);
            rem = rem.sub(&d.mul_monomial(&q).scale(&qc))?;
            quot.push((q, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot)))
    }

    /// Applies a monomial map, landing in `ring`.
    pub(crate) fn map_monomials<F>(&self, ring: &Arc<PolyRing>, f: F) -> Polynomial
    where
        F: Fn(&Monomial) -> Monomial,
    {
        let terms = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Same polynomial over another ring with identical variables.
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.var_names() != self.ring.var_names() {
            return Err(Error::RingMismatch);
        }
        if ring.field() == self.field() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        // Only integral coefficients can be carried across fields.
        let field = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = match c {
                Coefficient::Rat(r) if r.is_integer() => field.from_bigint(r.numer()),
                Coefficient::Mod(v) => {
                    let p = self.field().characteristic() as i64;
                    let signed = if (*v as i64) > p / 2 { *v as i64 - p } else { *v as i64 };
                    field.from_i64(signed)
                }
                Coefficient::Rat(_) => {
                    return Err(Error::Invalid("non-integral coefficient cannot change field".into()))
                }
            };
            terms.push((*m, v));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// BTreeMap key ordering monomials by grevlex.
#[derive(Clone, Copy, PartialEq, Eq)]
struct GrevlexKey(Monomial);

impl PartialOrd for GrevlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrevlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_grevlex(&other.0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.var_names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let text = field.format(c);
            let abs = text.trim_start_matches('-');
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{}", m.format_with(names))?;
            } else {
                write!(f, "{abs}*{}", m.format_with(names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    fn ring7() -> Arc<PolyRing> {
        PolyRing::with_vars(&["x", "y"], Field::Prime(7))
    }

    #[test]
    fn add_cancels_to_zero() {
        let r = PolyRing::with_vars(&["x", "y"], Field::Rational);
        let x = r.var("x").unwrap();
        assert!(combine(&x, &x.neg(), CombineOp::Add).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::with_vars(&["x", "y"], Field::Rational);
        let a = parse_poly("x+y", &r).unwrap();
        let b = parse_poly("x-y", &r).unwrap();
        let p = combine(&a, &b, CombineOp::Mul).unwrap();
        assert_eq!(p, parse_poly("x^2-y^2", &r).unwrap());
    }

    #[test]
    fn product_mod_seven() {
        let r = ring7();
        let a = parse_poly("3*x", &r).unwrap();
        let b = parse_poly("5*x", &r).unwrap();
        assert_eq!(a.mul(&b).unwrap(), parse_poly("x^2", &r).unwrap());
    }

    #[test]
    fn leading_terms_under_orders() {
        let r = PolyRing::with_vars(&["x", "y"], Field::Prime(32003));
        let p = parse_poly("x^2+y^5", &r).unwrap();
        let (m, _) = p.leading_term(MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.exponents(), &[0, 5]);
        let (m, _) = p.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m.exponents(), &[2, 0]);

        let s = PolyRing::with_vars(&["x", "y", "z", "u", "v"], Field::Prime(32003));
        let q = parse_poly("x*y+u^4", &s).unwrap();
        let (m, _) = q.leading_term(MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.exponents(), &[0, 0, 0, 4, 0]);
        assert_eq!(Polynomial::zero(&s).leading_term(MonomialOrder::Grevlex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = PolyRing::with_vars(&["x", "y"], Field::Rational).var("x").unwrap();
        let b = PolyRing::with_vars(&["x", "z"], Field::Rational).var("x").unwrap();
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::with_vars(&["x", "y"], Field::Prime(32003));
        let a = parse_poly("x^3*y-x*y^3", &r).unwrap();
        let d = parse_poly("x+y", &r).unwrap();
        let q = a.div_exact(&d).unwrap().unwrap();
        assert_eq!(q.mul(&d).unwrap(), a);
        assert!(parse_poly("x^2+1", &r).unwrap().div_exact(&d).unwrap().is_none());
    }

    #[test]
    fn display_is_grevlex_descending() {
        let r = PolyRing::with_vars(&["x", "y"], Field::Prime(32003));
        let p = parse_poly("x^2+y^5 - 3", &r).unwrap();
        assert_eq!(p.to_string(), "y^5+x^2-3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
