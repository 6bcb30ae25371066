use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use super::presets::repro;
use super::{Arg, BinOp, Command, Expr, RingDecl, Session, Stmt};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::invariants::{
    colon_criterion_213, find_minimal_reduction, hilbert, invariance_experiment, lemma32_check, proposition_audit,
    ratliff_rush, reduction_number, superficial_check, tame_superficial_sequence, vv_table, wang_torsion_length,
    AuditParams, AuditReport, Params,
};
use crate::local::{
    local_colon, local_equal, local_intersect, local_length, local_quotient_length, truncation_exponent, Route,
};
use crate::poly::{parse_poly, Field, PolyRing, RingCtx};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Overrides from the command line. They beat `set` lines but not options
/// written on a command.
#[derive(Clone, Debug, Default)]
pub struct ExecOptions {
    pub characteristic: Option<u64>,
    pub seed: Option<u64>,
    pub window: Option<usize>,
    pub cap: Option<usize>,
    pub trials: Option<usize>,
    pub parallel: bool,
    /// Seed used when neither a flag nor a `set` line gives one.
    pub default_seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub payload: Value,
    pub certs: Value,
    /// `(code, message)`.
    pub error: Option<(String, String)>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("ok".into(), json!(self.ok));
        m.insert("payload".into(), self.payload.clone());
        m.insert("certs".into(), self.certs.clone());
        if let Some((code, message)) = &self.error {
            m.insert("error".into(), json!({"code": code, "message": message}));
        }
        Value::Object(m)
    }

    fn failed(command: String, certs: Value, e: &Error) -> Report {
        Report { command, ok: false, payload: Value::Null, certs, error: Some((e.code().to_string(), e.to_string())) }
    }
}

/// One line of JSON per report, or an indented text block.
pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => {
            let mut out = format!("> {}\n", report.command);
            out.push_str(if report.ok { "ok\n" } else { "FAILED\n" });
            if let Some((code, msg)) = &report.error {
                out.push_str(&format!("error {code}: {msg}\n"));
            }
            if !report.payload.is_null() {
                let body = serde_json::to_string_pretty(&report.payload).expect("json");
                out.push_str(&body);
                out.push('\n');
            }
            out.push_str(&format!("certs {}\n", report.certs));
            out
        }
    }
}

/// Effective knobs of one command.
pub(crate) struct Knobs {
    map: BTreeMap<String, u64>,
}

impl Knobs {
    pub(crate) fn get(&self, key: &str) -> Option<u64> {
        self.map.get(key).copied()
    }

    pub(crate) fn usize_or(&self, key: &str, default: usize) -> usize {
        self.get(key).map(|v| v as usize).unwrap_or(default)
    }

    pub(crate) fn seed(&self) -> u64 {
        self.get("seed").unwrap_or(0)
    }

    fn params(&self, i: Option<&Ideal>) -> Params {
        let mut p = match (self.get("d"), i) {
            (Some(d), _) => Params::new(d as usize),
            (None, Some(i)) => Params::for_ideal(i),
            (None, None) => Params::new(2),
        };
        p.window = self.usize_or("window", p.window);
        p.sup_window = self.usize_or("sup_window", p.sup_window);
        p.cap = self.usize_or("cap", p.cap);
        p.flag_cap = self.usize_or("flag_cap", p.flag_cap);
        p.attempts = self.usize_or("attempts", p.attempts);
        p.seed = self.seed();
        p
    }

    fn certs(&self, characteristic: Option<u64>) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("seed".into(), json!(self.seed()));
        m.insert("window".into(), json!(self.usize_or("window", 2)));
        m.insert("cap".into(), json!(self.usize_or("cap", 12)));
        if let Some(c) = characteristic {
            m.insert("char".into(), json!(c));
        }
        m
    }
}

fn parse_u64(v: &str) -> u64 {
    v.parse().expect("validated by the parser")
}

pub(crate) fn build_ctx(decl: &RingDecl, characteristic: u64) -> Result<RingCtx> {
    let field = Field::from_characteristic(characteristic)?;
    let ring = PolyRing::new(&decl.vars, field)?;
    let gens = decl.modulus.iter().map(|g| parse_poly(g, &ring)).collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        Ok(RingCtx::new(&ring))
    } else {
        RingCtx::with_ambient(&ring, gens)
    }
}

type Env = BTreeMap<String, Result<Ideal>>;

fn eval(e: &Expr, ctx: &RingCtx, env: &Env) -> Result<Ideal> {
    match e {
        Expr::Name(n) => env.get(n).cloned().unwrap_or_else(|| Err(Error::Invalid(format!("unbound `{n}`")))),
        Expr::List(ps) => {
            let gens = ps.iter().map(|p| parse_poly(p, ctx.ring())).collect::<Result<Vec<_>>>()?;
            Ideal::new(ctx, gens)
        }
        Expr::Power(b, k) => Ok(eval(b, ctx, env)?.power(*k)),
        Expr::Bin(op, a, b) => {
            let (a, b) = (eval(a, ctx, env)?, eval(b, ctx, env)?);
            match op {
                BinOp::Product => a.product(&b),
                BinOp::Sum => a.sum(&b),
                BinOp::Intersect => local_intersect(&a, &b),
                BinOp::Colon => local_colon(&a, &b),
            }
        }
    }
}

fn trunc_json(q: &Ideal) -> Result<Value> {
    let c = truncation_exponent(q)?;
    Ok(json!({
        "N": c.n,
        "lengths": [c.lengths.0, c.lengths.1],
        "route": match c.route { Route::Global => "global", Route::Truncated => "truncated" },
    }))
}

fn audit_outcome(rep: AuditReport) -> (bool, Value, Option<Error>) {
    let ok = rep.consistent();
    let json = rep.to_json();
    let err = (!ok).then(|| Error::Invalid(format!("{}: hypotheses hold but the conclusion fails", rep.id)));
    (ok, json, err)
}

pub(crate) struct Outcome {
    ok: bool,
    payload: Value,
    certs: Map<String, Value>,
    /// Error recorded on a report that still carries a payload.
    soft_error: Option<(String, String)>,
}

impl Outcome {
    fn ok(payload: Value) -> Outcome {
        Outcome { ok: true, payload, certs: Map::new(), soft_error: None }
    }
}

fn counterexample(ok: bool, payload: Value, err: Option<Error>) -> Outcome {
    Outcome { ok, payload, certs: Map::new(), soft_error: err.map(|e| ("COUNTEREXAMPLE".to_string(), e.to_string())) }
}

fn audit_params(k: &Knobs, j2: Option<Ideal>) -> AuditParams {
    AuditParams {
        k: k.get("k").map(|v| v as usize),
        t: k.get("t").map(|v| v as usize),
        n_cap: k.get("n_cap").map(|v| v as usize),
        m_cap: k.get("m_cap").map(|v| v as usize),
        k_cap: k.get("k_cap").map(|v| v as usize),
        j2,
        e0: k.get("e0").map(BigInt::from),
    }
}

fn run_command(cmd: &Command, ctx: Option<&RingCtx>, env: &Env, knobs: &Knobs, opts: &ExecOptions) -> Result<Outcome> {
    let ideals = || -> Result<Vec<Ideal>> {
        let ctx = ctx.ok_or_else(|| Error::Invalid("no ring declared".into()))?;
        cmd.args
            .iter()
            .filter_map(|a| match a {
                Arg::Ideal(e) => Some(eval(e, ctx, env)),
                _ => None,
            })
            .collect()
    };
    let word =
        || cmd.args.iter().find_map(|a| if let Arg::Word(w) = a { Some(w.clone()) } else { None }).unwrap_or_default();
    match cmd.name.as_str() {
        "repro" => repro(&word(), knobs, opts.characteristic),
        "length" => {
            let [i] = &ideals()?[..] else { unreachable!() };
            let mut o = Outcome::ok(json!({"length": local_length(i)?}));
            o.certs.insert("truncation".into(), json!([trunc_json(i)?]));
            Ok(o)
        }
        "length_quotient" => {
            let [a, b] = &ideals()?[..] else { unreachable!() };
            let mut o = Outcome::ok(json!({"length": local_quotient_length(a, b)?}));
            o.certs.insert("truncation".into(), json!([trunc_json(a)?, trunc_json(b)?]));
            Ok(o)
        }
        "equal_local" => {
            let [a, b] = &ideals()?[..] else { unreachable!() };
            let mut o = Outcome::ok(json!({"equal": local_equal(a, b)?}));
            o.certs.insert("truncation".into(), json!([trunc_json(a)?, trunc_json(b)?]));
            Ok(o)
        }
        "rr" => {
            let [i] = &ideals()?[..] else { unreachable!() };
            Ok(Outcome::ok(ratliff_rush(i, &knobs.params(Some(i)), None)?.to_json()?))
        }
        "rednum" => {
            let [j, i] = &ideals()?[..] else { unreachable!() };
            Ok(Outcome::ok(reduction_number(j, i, knobs.params(Some(i)).cap)?.to_json()))
        }
        "minred" => {
            let [i] = &ideals()?[..] else { unreachable!() };
            Ok(Outcome::ok(find_minimal_reduction(i, &knobs.params(Some(i)))?.to_json()))
        }
        "superficial" => {
            let [i] = &ideals()?[..] else { unreachable!() };
            let Some(Arg::Poly(src)) = cmd.args.first() else { unreachable!() };
            let x = parse_poly(src, i.ring())?;
            let p = knobs.params(Some(i));
            let anchor = match knobs.get("anchor") {
                Some(a) => a as usize,
                None => find_minimal_reduction(i, &p)?.cert.r.max(1),
            };
            Ok(Outcome::ok(superficial_check(&x, i, p.sup_window, anchor)?.to_json()))
        }
        "tame" => {
            let [i] = &ideals()?[..] else { unreachable!() };
            Ok(Outcome::ok(tame_superficial_sequence(i, &knobs.params(Some(i)))?.to_json()))
        }
        "vv" => {
            let [j, i] = &ideals()?[..] else { unreachable!() };
            Ok(Outcome::ok(vv_table(j, i, knobs.usize_or("n_cap", 4))?.to_json()))
        }
        "hilbert" => {
            let [i] = &ideals()?[..] else { unreachable!() };
            let d = knobs.params(Some(i)).d;
            Ok(Outcome::ok(hilbert(i, d, knobs.usize_or("n_cap", d + 4))?.to_json()))
        }
        "wang" => {
            let [i, j] = &ideals()?[..] else { unreachable!() };
            let d = knobs.params(Some(i)).d;
            let w = wang_torsion_length(i, j, knobs.usize_or("n", 1), knobs.usize_or("k", 1), d)?;
            Ok(Outcome::ok(w.to_json()))
        }
        "lemma32" => {
            let [i, j] = &ideals()?[..] else { unreachable!() };
            let p = knobs.params(Some(i));
            let rep = lemma32_check(i, j, knobs.usize_or("n", 4), &p, knobs.get("e0").map(BigInt::from))?;
            let (ok, payload, err) = audit_outcome(rep);
            Ok(counterexample(ok, payload, err))
        }
        "audit" => {
            let v = ideals()?;
            let [i, j] = &v[..] else { unreachable!() };
            let p = knobs.params(Some(i));
            let rep = proposition_audit(&word(), i, j, &p, &audit_params(knobs, None))?;
            let (ok, payload, err) = audit_outcome(rep);
            Ok(counterexample(ok, payload, err))
        }
        "colon213" => {
            let v = ideals()?;
            let i = &v[0];
            let p = knobs.params(Some(i));
            let xs = match v.get(1) {
                Some(list) => list.gens().to_vec(),
                None => tame_superficial_sequence(i, &p)?.xs,
            };
            let rep = colon_criterion_213(i, &xs, &p, &audit_params(knobs, None))?;
            let (ok, payload, err) = audit_outcome(rep);
            Ok(counterexample(ok, payload, err))
        }
        "invariance" => {
            let v = ideals()?;
            let i = &v[0];
            let p = knobs.params(Some(i));
            let rep = invariance_experiment(
                i,
                &v[1..],
                knobs.usize_or("trials", 5),
                knobs.usize_or("n_cap", 4),
                &p,
                opts.parallel,
            )?;
            let err = (!rep.consistent)
                .then(|| Error::Invalid("lengths differ inside the common Valabrega-Valla prefix".into()));
            Ok(counterexample(rep.consistent, rep.to_json(), err))
        }
        other => Err(Error::Invalid(format!("unknown command `{other}`"))),
    }
}

/// Runs every command in order. A failing command yields a report with an
/// error code and does not stop the rest.
pub fn execute(session: &Session, opts: &ExecOptions) -> Vec<Report> {
    let characteristic = session.ring.as_ref().map(|r| opts.characteristic.unwrap_or(r.characteristic));
    let ctx: Option<Result<RingCtx>> = session.ring.as_ref().map(|r| build_ctx(r, characteristic.expect("ring")));
    let mut env: Env = BTreeMap::new();
    let mut set: BTreeMap<String, u64> = BTreeMap::new();
    if let Some(seed) = opts.default_seed {
        set.insert("seed".into(), seed);
    }
    let mut reports = Vec::new();
    for line in &session.lines {
        match &line.stmt {
            Stmt::Set { key, value } => {
                set.insert(key.clone(), parse_u64(value));
            }
            Stmt::Ideal { name, expr } => {
                let v = match &ctx {
                    Some(Ok(c)) => eval(expr, c, &env),
                    Some(Err(e)) => Err(e.clone()),
                    None => Err(Error::Invalid("no ring declared".into())),
                };
                env.insert(name.clone(), v);
            }
            Stmt::Command(cmd) => {
                let mut map = set.clone();
                for (k, v) in [
                    ("seed", opts.seed),
                    ("window", opts.window.map(|v| v as u64)),
                    ("cap", opts.cap.map(|v| v as u64)),
                    ("trials", opts.trials.map(|v| v as u64)),
                ] {
                    if let Some(v) = v {
                        map.insert(k.into(), v);
                    }
                }
                for (k, v) in &cmd.opts {
                    map.insert(k.clone(), parse_u64(v));
                }
                let knobs = Knobs { map };
                let echo = cmd.to_string();
                let mut certs = knobs.certs(characteristic);
                let result = match &ctx {
                    Some(Err(e)) if cmd.name != "repro" => Err(e.clone()),
                    Some(Ok(c)) => run_command(cmd, Some(c), &env, &knobs, opts),
                    _ => run_command(cmd, None, &env, &knobs, opts),
                };
                let report = match result {
                    Ok(o) => {
                        certs.extend(o.certs);
                        Report {
                            command: echo,
                            ok: o.ok,
                            payload: o.payload,
                            certs: Value::Object(certs),
                            error: o.soft_error,
                        }
                    }
                    Err(e) => Report::failed(echo, Value::Object(certs), &e),
                };
                reports.push(report);
            }
        }
    }
    reports
}

impl Outcome {
    pub(crate) fn new(ok: bool, payload: Value, certs: Map<String, Value>, error: Option<(String, String)>) -> Outcome {
        Outcome { ok, payload, certs, soft_error: error }
    }
}
