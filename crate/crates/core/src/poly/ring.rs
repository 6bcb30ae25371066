use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{Field, Monomial, MonomialOrder, Polynomial, MAX_VARS};
use crate::error::{Error, Result};
use crate::groebner::{reduced_groebner, GroebnerBasis};

/// The ambient polynomial ring `S = K[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], field: Field) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if vars.len() >= MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { vars, field, order: MonomialOrder::Grevlex }))
    }

    /// Ring over `field` with the given variables; panics on invalid names.
    pub fn with_vars(vars: &[&str], field: Field) -> Arc<PolyRing> {
        PolyRing::new(vars, field).expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn default_order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same variables over another coefficient field.
    pub fn with_field(&self, field: Field) -> Arc<PolyRing> {
        Arc::new(PolyRing { vars: self.vars.clone(), field, order: self.order })
    }

    /// Ring with an extra leading variable, used for elimination.
    pub(crate) fn extend_front(&self, name: &str) -> Arc<PolyRing> {
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing { vars, field: self.field, order: self.order })
    }

    /// Ring with variables reordered so that `perm[i]` becomes variable `i`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Arc<PolyRing> {
        let vars = perm.iter().map(|&i| self.vars[i].clone()).collect();
        Arc::new(PolyRing { vars, field: self.field, order: self.order })
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let i = self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::monomial(self, Monomial::var(self.nvars(), i, 1), self.field.one()))
    }

    /// All variables as polynomials, in ring order.
    pub fn variables(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars())
            .map(|i| Polynomial::monomial(self, Monomial::var(self.nvars(), i, 1), self.field.one()))
            .collect()
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

struct CtxInner {
    ring: Arc<PolyRing>,
    ambient: Vec<Polynomial>,
    ambient_gb: OnceLock<GroebnerBasis>,
    trunc_cap: u32,
}

/// Default bound on the truncation exponent searched by the local module.
pub const DEFAULT_TRUNCATION_CAP: u32 = 40;

/// A ring `R = S / I_R` with the origin on `V(I_R)`.
///
/// Ideals of `R` are represented by their full preimages in `S`.
#[derive(Clone)]
pub struct RingCtx(Arc<CtxInner>);

impl RingCtx {
    pub fn new(ring: &Arc<PolyRing>) -> RingCtx {
        RingCtx(Arc::new(CtxInner {
            ring: ring.clone(),
            ambient: Vec::new(),
            ambient_gb: OnceLock::new(),
            trunc_cap: DEFAULT_TRUNCATION_CAP,
        }))
    }

    /// `S / (gens)`; every generator must vanish at the origin.
    pub fn with_ambient(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<RingCtx> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !g.constant_term().is_zero() {
                return Err(Error::NonzeroConstant(g.to_string()));
            }
        }
        let ambient = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(RingCtx(Arc::new(CtxInner {
            ring: ring.clone(),
            ambient,
            ambient_gb: OnceLock::new(),
            trunc_cap: DEFAULT_TRUNCATION_CAP,
        })))
    }

    /// Same ring and ambient ideal with another truncation cap.
    pub fn with_truncation_cap(&self, cap: u32) -> RingCtx {
        let gb = OnceLock::new();
        if let Some(g) = self.0.ambient_gb.get() {
            let _ = gb.set(g.clone());
        }
        RingCtx(Arc::new(CtxInner {
            ring: self.0.ring.clone(),
            ambient: self.0.ambient.clone(),
            ambient_gb: gb,
            trunc_cap: cap,
        }))
    }

    pub fn truncation_cap(&self) -> u32 {
        self.0.trunc_cap
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.0.ring
    }

    pub fn ambient(&self) -> &[Polynomial] {
        &self.0.ambient
    }

    pub fn has_ambient(&self) -> bool {
        !self.0.ambient.is_empty()
    }

    /// Reduced grevlex basis of the defining ideal, computed once.
    pub fn ambient_gb(&self) -> &GroebnerBasis {
        self.0.ambient_gb.get_or_init(|| reduced_groebner(self.ring(), &self.0.ambient, MonomialOrder::Grevlex))
    }

    /// Same ring and same defining ideal.
    pub fn same_as(&self, other: &RingCtx) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        same_ring(self.ring(), other.ring()) && self.ambient_gb().gens() == other.ambient_gb().gens()
    }

    pub fn nvars(&self) -> usize {
        self.0.ring.nvars()
    }

    pub fn field(&self) -> Field {
        self.0.ring.field()
    }
}

impl fmt::Debug for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.ring().var_names().join(","))?;
        if self.has_ambient() {
            let gens: Vec<String> = self.ambient().iter().map(|g| g.to_string()).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        Ok(())
    }
}
