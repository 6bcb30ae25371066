use super::*;
use crate::ideals::Ideal;
use crate::local::local_equal;
use crate::poly::{parse_poly, Field, PolyRing, RingCtx};

fn ctx(vars: &[&str]) -> RingCtx {
    RingCtx::new(&PolyRing::with_vars(vars, Field::Prime(32003)))
}

fn id(c: &RingCtx, g: &[&str]) -> Ideal {
    Ideal::from_strs(c, g).unwrap()
}

fn ex215(c: &RingCtx) -> (Ideal, Ideal) {
    (id(c, &["x^6", "x^4*y^2", "x^3*y^3", "x^2*y^4", "x*y^5", "y^6"]), id(c, &["x^6", "y^6+x^4*y^2"]))
}

fn p2() -> Params {
    Params::new(2)
}

#[test]
fn binomials() {
    assert_eq!(binom(5, 2), 10.into());
    assert_eq!(binom(1, 2), 0.into());
    assert_eq!(binom(-1, 0), 0.into());
    assert_eq!(binom(0, 0), 1.into());
}

#[test]
fn rr_of_maximal_ideal() {
    let c = ctx(&["x", "y"]);
    let m = Ideal::maximal(&c);
    let rep = ratliff_rush(&m, &p2(), None).unwrap();
    assert!(rep.is_closed().unwrap());
    assert!(rep.all_closed());
}

#[test]
fn rr_adds_the_missing_monomial() {
    let c = ctx(&["x", "y"]);
    let i = id(&c, &["x^4", "x^3*y", "x*y^3", "y^4"]);
    let rep = ratliff_rush(&i, &p2(), None).unwrap();
    assert!(local_equal(&rep.closure, &id(&c, &["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"])).unwrap());
    assert_eq!(rep.per_n[0], (1, false));
}

#[test]
fn reduction_numbers() {
    let c = ctx(&["x", "y"]);
    let m2 = id(&c, &["x^2", "x*y", "y^2"]);
    assert_eq!(reduction_number(&m2, &m2, 12).unwrap().r, 0);
    assert_eq!(reduction_number(&id(&c, &["x^2", "y^2"]), &m2, 12).unwrap().r, 1);
    let (i, j) = ex215(&c);
    let cert = reduction_number(&j, &i, 12).unwrap();
    assert_eq!(cert.r, 2);
    assert_eq!(cert.witness.len(), 2);
    assert!(cert.witness[0].power_colength != cert.witness[0].product_colength);
}

#[test]
fn minimal_reductions_found() {
    let c = ctx(&["x", "y"]);
    let found = find_minimal_reduction(&Ideal::maximal(&c), &p2()).unwrap();
    assert_eq!(found.cert.r, 0);
    let found = find_minimal_reduction(&id(&c, &["x^2", "x*y", "y^2"]), &p2()).unwrap();
    assert_eq!(found.cert.r, 1);
}

#[test]
fn superficial_examples() {
    let c = ctx(&["x", "y"]);
    let m = Ideal::maximal(&c);
    let x = parse_poly("x", c.ring()).unwrap();
    assert!(superficial_check(&x, &m, 3, 1).unwrap().passed());
    let y5 = parse_poly("y^5", c.ring()).unwrap();
    assert!(!superficial_check(&y5, &m, 3, 1).unwrap().passed());
    let (i, _) = ex215(&c);
    let x6 = parse_poly("x^6", c.ring()).unwrap();
    assert!(superficial_check(&x6, &i, 3, 2).unwrap().passed());
}

#[test]
fn tame_sequences() {
    let c = ctx(&["x", "y"]);
    let (i, _) = ex215(&c);
    let t = tame_superficial_sequence(&i, &p2()).unwrap();
    assert_eq!(t.xs.len(), 2);
    let c1 = ctx(&["x"]);
    let t = tame_superficial_sequence(&id(&c1, &["x^2"]), &Params::new(1)).unwrap();
    assert_eq!(t.cert.r, 0);
}

#[test]
fn vv_rows_for_example_215() {
    let c = ctx(&["x", "y"]);
    let (i, j) = ex215(&c);
    let t = vv_table(&j, &i, 4).unwrap();
    assert!(t.rows[0].holds);
    assert!(!t.rows[1].holds);
    assert_eq!(t.first_failure, Some(2));
    assert!(t.rows[2].holds && t.rows[3].holds);
}

#[test]
fn hilbert_examples() {
    let c = ctx(&["x", "y"]);
    let h = hilbert(&Ideal::maximal(&c), 2, 6).unwrap();
    assert_eq!(h.e, vec![1.into(), 0.into(), 0.into()]);
    let h = hilbert(&id(&c, &["x^2", "x*y", "y^2"]), 2, 6).unwrap();
    assert_eq!(h.e, vec![4.into(), 1.into(), 0.into()]);
    assert_eq!(h.h[3], 21);
    let (i, j) = ex215(&c);
    let h = hilbert(&i, 2, 6).unwrap();
    assert_eq!(h.e[0], 36.into());
    assert_eq!(crate::local::local_length(&j).unwrap(), 36);
}

#[test]
fn wang_vanishing() {
    let c = ctx(&["x", "y"]);
    let (i, j) = ex215(&c);
    for k in 1..=3 {
        assert_eq!(wang_torsion_length(&i, &j, 1, k, 2).unwrap().torsion, 0);
    }
    let c1 = ctx(&["x"]);
    let i1 = id(&c1, &["x^3"]);
    let j1 = id(&c1, &["x^3"]);
    assert_eq!(wang_torsion_length(&i1, &j1, 3, 2, 1).unwrap().torsion, 0);
}

#[test]
fn lemma32_on_m_squared() {
    let c = ctx(&["x", "y"]);
    let rep = lemma32_check(&id(&c, &["x^2", "x*y", "y^2"]), &id(&c, &["x^2", "y^2"]), 3, &p2(), None).unwrap();
    assert!(rep.hypotheses_hold() && rep.conclusion_holds(), "{:?}", rep);
    assert_eq!(rep.witness["length_I_over_J"], 1);
}

#[test]
fn depth_examples() {
    let c = ctx(&["x", "y"]);
    let m = Ideal::maximal(&c);
    let f = depth_flags(&m, &m, &p2()).unwrap();
    assert_eq!((f.depth_ge1, f.cm_at_d2), (true, Some(true)));
    let (i, j) = ex215(&c);
    let f = depth_flags(&i, &j, &p2()).unwrap();
    assert_eq!((f.depth_ge1, f.cm_at_d2, f.r), (true, Some(false), 2));
}

#[test]
fn audits_on_example_215() {
    let c = ctx(&["x", "y"]);
    let (i, j) = ex215(&c);
    for id in ["Cor2.3", "Prop2.6", "Prop2.1", "Lemma2.11", "Prop2.4ii", "Cor2.14"] {
        let rep = proposition_audit(id, &i, &j, &p2(), &AuditParams::default()).unwrap();
        assert!(rep.consistent(), "{id}: {}", rep.to_json());
    }
    let rep = proposition_audit("Cor2.3", &i, &j, &p2(), &AuditParams::default()).unwrap();
    assert!(rep.hypotheses_hold());
    assert_eq!(rep.witness["I2_colon_x1_equals_I"], true);
}

#[test]
fn unsupported_dimension() {
    let c = ctx(&["x", "y"]);
    let m = Ideal::maximal(&c);
    let err = proposition_audit("Thm2.13", &m, &m, &p2(), &AuditParams::default()).unwrap_err();
    assert_eq!(err.code(), "UNSUPPORTED_DIMENSION");
    let err = proposition_audit("Nope", &m, &m, &p2(), &AuditParams::default()).unwrap_err();
    assert_eq!(err.code(), "UNKNOWN_STATEMENT");
}

#[test]
fn invariance_on_m_squared() {
    let c = ctx(&["x", "y"]);
    let i = id(&c, &["x^2", "x*y", "y^2"]);
    let rep = invariance_experiment(&i, &[], 5, 3, &p2(), false).unwrap();
    assert!(rep.consistent);
    assert!(rep.divergences.is_empty());
    let par = invariance_experiment(&i, &[], 5, 3, &p2(), true).unwrap();
    assert_eq!(rep.to_json(), par.to_json());
}
