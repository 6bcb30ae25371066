use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// Monomial orders.
///
/// `LocalGrevlex` is the negative-degree order (lower degree is larger,
/// grevlex breaks ties). It is not a well-order on the polynomial ring and is
/// only used by the truncated engine, where every monomial of degree `>= N`
/// is zero and the set of live monomials is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// The first `k` variables form a block compared before the rest;
    /// grevlex within each block.
    Block(usize),
    LocalGrevlex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Block(k) => {
                let n = a.nvars();
                match a.cmp_grevlex_range(b, 0, *k) {
                    Ordering::Equal => a.cmp_grevlex_range(b, *k, n),
                    ord => ord,
                }
            }
            MonomialOrder::LocalGrevlex => match b.degree().cmp(&a.degree()) {
                Ordering::Equal => a.cmp_grevlex(b),
                ord => ord,
            },
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
            MonomialOrder::LocalGrevlex => write!(f, "local-grevlex"),
        }
    }
}
