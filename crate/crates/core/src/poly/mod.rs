//! Exact coefficients, monomials, monomial orders and sparse polynomials.

mod coeff;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coefficient, Field, DEFAULT_PRIME};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use polynomial::{combine, CombineOp, Polynomial};
pub(crate) use ring::same_ring;
pub use ring::{PolyRing, RingCtx, DEFAULT_TRUNCATION_CAP};

use crate::error::Result;

/// Inverse of a nonzero coefficient.
pub fn coeff_inv(field: Field, c: &Coefficient) -> Result<Coefficient> {
    field.inv(c)
}

#[cfg(test)]
mod proptests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::with_vars(&["x", "y", "z"], Field::Prime(32003))
    }

    fn qring() -> Arc<PolyRing> {
        PolyRing::with_vars(&["x", "y", "z"], Field::Rational)
    }

    prop_compose! {
        fn arb_terms()(terms in proptest::collection::vec(
            (-20i64..20, proptest::collection::vec(0u32..4, 3)), 0..6)) -> Vec<(i64, Vec<u32>)> {
            terms
        }
    }

    fn build(r: &Arc<PolyRing>, terms: &[(i64, Vec<u32>)]) -> Polynomial {
        let f = r.field();
        Polynomial::from_terms(
            r,
            terms.iter().map(|(c, e)| (Monomial::from_exponents(e).unwrap(), f.from_i64(*c))).collect(),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(250))]

        #[test]
        fn ring_axioms(a in arb_terms(), b in arb_terms(), c in arb_terms()) {
            for r in [ring(), qring()] {
                let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
                prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
                prop_assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
            }
        }

        #[test]
        fn leading_term_is_multiplicative(a in arb_terms(), b in arb_terms()) {
            let r = ring();
            let (a, b) = (build(&r, &a), build(&r, &b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
                let (ma, _) = a.leading_term(ord).unwrap();
                let (mb, _) = b.leading_term(ord).unwrap();
                let (mab, _) = a.mul(&b).unwrap().leading_term(ord).unwrap();
                prop_assert_eq!(mab, ma.mul(&mb));
            }
        }
    }

    // 1000 random polynomials, as a fixed seeded loop rather than shrinking cases.
    #[test]
    fn print_parse_round_trip() {
        use crate::rng::Mcg64;
        let mut rng = Mcg64::new(2024);
        for r in [ring(), qring()] {
            for _ in 0..1000 {
                let n = rng.below(6) as usize;
                let terms: Vec<(i64, Vec<u32>)> = (0..n)
                    .map(|_| {
                        let c = rng.below(41) as i64 - 20;
                        let e = (0..3).map(|_| rng.below(5)).collect();
                        (c, e)
                    })
                    .collect();
                let p = build(&r, &terms);
                let printed = p.to_string();
                let back = parse_poly(&printed, &r).unwrap();
                assert_eq!(back, p, "{printed}");
            }
        }
    }
}
