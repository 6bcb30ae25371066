//! Acceptance run: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use rrlab::groebner::Dimension;
use rrlab::ideals::Ideal;
use rrlab::invariants::*;
use rrlab::local::{local_length, local_quotient_length};
use rrlab::oracle::{stair_length, stair_op, stair_rr, StairOp, Staircase, DEFAULT_RR_CAP};
use rrlab::poly::{Field, PolyRing, RingCtx};
use rrlab::rng::Mcg64;
use rrlab::session::{emit, ex3_4_lengths, execute, parse_session, ExecOptions, Format, EX3_4_STATED};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn plane() -> RingCtx {
    RingCtx::new(&PolyRing::with_vars(&["x", "y"], Field::Prime(32003)))
}

fn id(c: &RingCtx, g: &[&str]) -> Ideal {
    Ideal::from_strs(c, g).unwrap()
}

fn ex215(c: &RingCtx) -> (Ideal, Ideal) {
    (id(c, &["x^6", "x^4*y^2", "x^3*y^3", "x^2*y^4", "x*y^5", "y^6"]), id(c, &["x^6", "y^6+x^4*y^2"]))
}

/// The three corpus ideals of the plane.
fn corpus(c: &RingCtx) -> Vec<(&'static str, Ideal)> {
    vec![("m", Ideal::maximal(c)), ("m^2", id(c, &["x^2", "x*y", "y^2"])), ("ex2_15", ex215(c).0)]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Debug>(r: rrlab::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{} ({})", e, e.code()))
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let main = e(ex3_4_lengths(32003))?;
    let cross = e(ex3_4_lengths(101))?;
    let rational = e(ex3_4_lengths(0))?;
    ensure(main == cross && main == rational, || format!("characteristics disagree: {main:?} {cross:?} {rational:?}"))?;
    ensure(t.elapsed() < Duration::from_secs(300), || "over 5 minutes".into())?;
    ensure(main == EX3_4_STATED, || {
        format!(
            "computed λ(m^4/J1 m^3) = {}, λ(m^4/J2 m^3) = {} at p = 32003, p = 101 and char 0; stated {} and {}",
            main.0, main.1, EX3_4_STATED.0, EX3_4_STATED.1
        )
    })?;
    Ok(format!("{main:?}"))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let c = plane();
    let (i, j) = ex215(&c);
    let p = Params::new(2);
    let r = e(reduction_number(&j, &i, p.cap))?.r;
    ensure(r == 2, || format!("r_J(I) = {r}"))?;
    let f = e(depth_flags(&i, &j, &p))?;
    ensure((f.depth_ge1, f.cm_at_d2) == (true, Some(false)), || format!("flags {:?}", (f.depth_ge1, f.cm_at_d2)))?;
    ensure(f.vv.first_failure == Some(2), || format!("VV first failure {:?}", f.vv.first_failure))?;
    ensure(t.elapsed() < Duration::from_secs(60), || "over 1 minute".into())?;
    Ok("r = 2, depth_ge1 = true, cm = false".into())
}

fn criterion_3() -> Outcome {
    let c = plane();
    let i = id(&c, &["x^2", "x*y", "y^2"]);
    let rep = e(invariance_experiment(&i, &[], 5, 4, &Params::new(2), false))?;
    ensure(rep.trials.len() == 5 && rep.trials.iter().all(|t| t.r.is_some()), || "trials missing".into())?;
    let base = &rep.trials[0].lengths;
    for t in &rep.trials {
        let upto = rep.common_prefix.min(4) + 1;
        for (n, (a, b)) in t.lengths.iter().zip(base).take(upto).enumerate() {
            ensure(a == b, || format!("trial {:?} differs at n = {n}", t.index))?;
        }
    }
    ensure(rep.consistent, || "inconsistent".into())?;
    Ok(format!("prefix {}, lengths {:?}", rep.common_prefix, base))
}

fn criterion_4() -> Outcome {
    let c = plane();
    for (name, i) in corpus(&c) {
        let p = Params::new(2);
        let found = e(find_minimal_reduction(&i, &p))?;
        let rep = e(lemma32_check(&i, &found.j, 4, &p, None))?;
        ensure(rep.hypotheses_hold() && rep.conclusion_holds(), || format!("{name}: {}", rep.to_json()))?;
    }
    Ok("m, m^2, ex2_15".into())
}

fn criterion_5() -> Outcome {
    let c = plane();
    let mut count = 0;
    for (name, i) in corpus(&c) {
        let found = e(find_minimal_reduction(&i, &Params::new(2)))?;
        let j = found.j;
        for k in 1..=4 {
            let w = e(wang_torsion_length(&i, &j, 1, k, 2))?;
            ensure(w.torsion == 0, || format!("{name}: T(1,{k}) = {}", w.torsion))?;
            count += 1;
        }
        let t = e(vv_table(&j, &i, 4))?.prefix();
        for n in 2..=t.min(4) {
            for k in 1..=4 {
                let w = e(wang_torsion_length(&i, &j, n, k, 2))?;
                ensure(w.torsion == 0, || format!("{name}: T({n},{k}) = {} with prefix {t}", w.torsion))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} torsion lengths, all zero"))
}

fn criterion_6() -> Outcome {
    let c = plane();
    let (i, j) = ex215(&c);
    let p = Params::new(2);
    let ap = AuditParams::default();
    let cor = e(proposition_audit("Cor2.3", &i, &j, &p, &ap))?;
    ensure(cor.witness["I2_colon_x1_equals_I"] == true, || "I^2 : x^6 != I".into())?;
    for sid in ["Prop2.1", "Cor2.3", "Prop2.6", "Prop2.4ii"] {
        let rep = e(proposition_audit(sid, &i, &j, &p, &ap))?;
        ensure(rep.consistent(), || format!("{sid}: {}", rep.to_json()))?;
    }
    let mut pairs = vec![("ex2_15/J".to_string(), i.clone(), j.clone())];
    pairs.push(("m^2/(x^2,y^2)".into(), id(&c, &["x^2", "x*y", "y^2"]), id(&c, &["x^2", "y^2"])));
    for (name, i) in corpus(&c) {
        let found = e(find_minimal_reduction(&i, &p))?;
        pairs.push((format!("{name}/random"), i, found.j));
    }
    let mut audited = 0;
    let mut findings = Vec::new();
    for (name, i, j) in &pairs {
        for sid in AUDIT_IDS {
            match proposition_audit(sid, i, j, &p, &ap) {
                // With r_J(I) <= 1 both sides of the Prop2.6 equivalence
                // disagree; only the r <= 2 form survives.
                Ok(rep) if *sid == "Prop2.6" && !rep.consistent() => {
                    let r = rep.witness["r"].as_u64();
                    ensure(r.is_some_and(|r| r <= 1) && rep.witness["r_le_2_form_holds"] == true, || {
                        format!("Prop2.6 on {name}: {}", rep.to_json())
                    })?;
                    findings.push(format!("Prop2.6 fails on {name} (r = {})", r.unwrap()));
                    audited += 1;
                }
                Ok(rep) => {
                    ensure(rep.consistent(), || format!("{sid} on {name}: {}", rep.to_json()))?;
                    audited += 1;
                }
                Err(err) if err.code() == "UNSUPPORTED_DIMENSION" => {}
                Err(err) => return Err(format!("{sid} on {name}: {err}")),
            }
        }
        let l211 = e(proposition_audit("Lemma2.11", i, j, &p, &ap))?;
        if l211.witness["length_JcapI2_over_JI"].as_u64().unwrap_or(u64::MAX) <= 1 {
            ensure(l211.conclusion_holds(), || format!("Lemma2.11 on {name}"))?;
        }
    }
    let note = if findings.is_empty() { String::new() } else { format!("; counterexamples: {}", findings.join(", ")) };
    Ok(format!("{audited} audits on {} pairs{note}", pairs.len()))
}

fn criterion_7() -> Outcome {
    let c = plane();
    let h = e(hilbert(&id(&c, &["x^2", "x*y", "y^2"]), 2, 6))?;
    ensure(h.e == vec![4.into(), 1.into(), 0.into()], || format!("e = {:?}", h.e))?;
    for n in 1..=6i64 {
        let closed = ((2 * n + 1) * (2 * n)) / 2;
        ensure(h.h[n as usize] == closed as u64, || format!("H({n}) = {}", h.h[n as usize]))?;
    }
    let (i215, j215) = ex215(&c);
    let mut pairs = vec![(i215.clone(), j215)];
    for (_, i) in corpus(&c) {
        let found = e(find_minimal_reduction(&i, &Params::new(2)))?;
        pairs.push((i, found.j));
    }
    for (i, j) in &pairs {
        let e0 = e(hilbert(i, 2, 6))?.e[0].clone();
        let lj = e(local_length(j))?;
        ensure(e0 == lj.into(), || format!("e0 = {e0}, λ(R/J) = {lj}"))?;
    }
    Ok("(4, 1, 0); e0 = λ(R/J) on 4 reductions".into())
}

fn random_stair(rng: &mut Mcg64) -> Staircase {
    let mut gens = vec![vec![1 + rng.below(5), 0], vec![0, 1 + rng.below(5)]];
    for _ in 0..rng.below(4) {
        gens.push(vec![rng.below(5), rng.below(5)]);
    }
    Staircase::new(2, gens).unwrap()
}

fn to_stair(i: &Ideal) -> Result<Staircase, String> {
    let gb = e(Ideal::new(i.ctx(), i.groebner().gens().to_vec()))?;
    e(Staircase::from_ideal(&gb))
}

fn criterion_8() -> Outcome {
    let c = plane();
    let mut rng = Mcg64::new(2024);
    for k in 0..200 {
        let (a, b) = (random_stair(&mut rng), random_stair(&mut rng));
        let (ia, ib) = (e(a.to_ideal(&c))?, e(b.to_ideal(&c))?);
        let want = stair_length(&a);
        let got = e(local_length(&ia))?;
        ensure(want == Dimension::Finite(got), || format!("#{k} length {a:?}: {want} vs {got}"))?;
        let checks = [
            (StairOp::Product, e(ia.product(&ib))?),
            (StairOp::Intersect, e(ia.intersect(&ib))?),
            (StairOp::Colon, e(ia.colon(&ib))?),
        ];
        for (op, engine) in checks {
            let want = e(stair_op(&a, &b, op))?;
            ensure(to_stair(&engine)? == want, || format!("#{k} {op:?} of {a:?}, {b:?}"))?;
        }
        let rr = e(ratliff_rush(&ia, &Params::new(2), None))?;
        let want = e(stair_rr(&a, DEFAULT_RR_CAP))?;
        ensure(to_stair(&rr.closure)? == want, || format!("#{k} RR of {a:?}"))?;
    }
    let named = Staircase::new(2, vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]]).unwrap();
    let expected = e(stair_op(&named, &Staircase::new(2, vec![vec![2, 2]]).unwrap(), StairOp::Sum))?;
    ensure(e(stair_rr(&named, DEFAULT_RR_CAP))? == expected, || "oracle RR of the named ideal".into())?;
    let engine = e(ratliff_rush(&e(named.to_ideal(&c))?, &Params::new(2), None))?;
    ensure(to_stair(&engine.closure)? == expected, || "engine RR of the named ideal".into())?;
    let lq = e(local_quotient_length(&engine.closure, &e(named.to_ideal(&c))?))?;
    ensure(lq == 1, || format!("λ(~I / I) = {lq}"))?;
    Ok("200 random pairs plus RR((x^4,x^3y,xy^3,y^4)) = I + (x^2y^2)".into())
}

pub const FULL_SESSION: &str = "ring R = char 32003 vars x y
ideal m = [x, y]
ideal m2 = m^2
ideal I = [x^6, x^4*y^2, x^3*y^3, x^2*y^4, x*y^5, y^6]
ideal J = [x^6, y^6+x^4*y^2]
set seed=11
repro ex2_15
repro ex3_4
rednum J I
vv J I
hilbert m2
rr [x^4,x^3*y,x*y^3,y^4]
minred m2
tame I
lemma32 m2 [x^2,y^2] n=4
wang I J k=4
audit Cor2.3 I J
audit Prop2.6 I J
invariance m2 trials=5
length_quotient m2 J
";

fn criterion_9() -> Outcome {
    let s = e(parse_session(FULL_SESSION))?;
    let bytes = |parallel: bool| -> String {
        let opts = ExecOptions { parallel, ..Default::default() };
        execute(&s, &opts).iter().map(|r| emit(r, Format::Json)).collect()
    };
    let first = bytes(false);
    let second = bytes(false);
    let third = bytes(true);
    ensure(first == second, || "two runs differ".into())?;
    ensure(first == third, || "parallel trials change the output".into())?;
    Ok(format!("{} bytes, identical", first.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("ex3_4 lengths 17 and 20, p = 101 agrees", criterion_1),
        ("ex2_15: r = 2, depth flags (true, false)", criterion_2),
        ("invariance of λ(I^(n+1)/J I^n) on m^2", criterion_3),
        ("length identities for minimal reductions", criterion_4),
        ("Wang torsion lengths vanish", criterion_5),
        ("proposition audits", criterion_6),
        ("Hilbert coefficients and e0 = λ(R/J)", criterion_7),
        ("monomial oracle equivalence", criterion_8),
        ("byte-identical reports", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        match &out {
            Ok(detail) => println!("criterion {}: PASS {name} [{detail}] ({secs:.1}s)", k + 1),
            Err(why) => println!("criterion {}: FAIL {name} [{why}] ({secs:.1}s)", k + 1),
        }
        if out.is_err() {
            failed.push(k + 1);
        }
    }
    // The stated ex3_4 lengths are not reproducible; the computed ones
    // are pinned instead and must agree across characteristics.
    assert_eq!(ex3_4_lengths(32003).unwrap(), (14, 10));
    assert_eq!(failed, vec![1], "unexpected criterion failures");
    println!("acceptance: 8 of 9 criteria pass; criterion 1 fails on the stated values");
}
