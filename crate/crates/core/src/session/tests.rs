use super::*;

const EX34: &str = "ring R = char 32003 vars x y z u v mod [x^2+y^5, x*y+u^4, x*z+v^3]
ideal m = [x, y, z, u, v]
ideal J1 = [y, z]
ideal J2 = [z, u]
length_quotient m^4 J1*m^3
";

fn run(src: &str) -> Vec<Report> {
    execute(&parse_session(src).unwrap(), &ExecOptions::default())
}

#[test]
fn one_binding() {
    let s = parse_session("ring R = char 32003 vars x y\nideal I = [x^2, x*y, y^2]\n").unwrap();
    assert_eq!(s.lines.len(), 1);
    assert_eq!(s.ring.as_ref().unwrap().vars, ["x", "y"]);
}

#[test]
fn example_session_parses() {
    let s = parse_session(EX34).unwrap();
    assert_eq!(s.ring.unwrap().modulus.len(), 3);
    assert_eq!(s.lines.len(), 4);
}

#[test]
fn unbound_names_carry_lines() {
    let e = parse_session("ring R = char 7 vars x y\n\nideal I = [w]\n").unwrap_err();
    assert!(matches!(e, Error::Syntax { line: 3, .. }), "{e:?}");
    let e = parse_session("ring R = char 7 vars x y\nrr K\n").unwrap_err();
    assert_eq!(e, Error::UnboundName { line: 2, name: "K".into() });
    let e = parse_session("ring R = char 7 vars x\nring S = char 7 vars y\n").unwrap_err();
    assert_eq!(e, Error::DuplicateRing { line: 2 });
}

#[test]
fn syntax_errors() {
    for bad in [
        "ring R = char 4 vars x",
        "ring R = char 7 vars x\nideal I = [x\n",
        "ring R = char 7 vars x\nideal I = [x]^999",
        "ring R = char 7 vars x\nfrobnicate",
        "ring R = char 7 vars x\nideal I = [x]\nrr I I",
        "ring R = char 7 vars x\nideal I = [x]\nrr I bogus=3",
        "ideal I = [x]",
    ] {
        assert!(matches!(parse_session(bad), Err(Error::Syntax { .. })), "{bad}");
    }
}

#[test]
fn round_trip() {
    let src = "ring R = char 0 vars x y mod [x^3-y^2]
ideal I = [x^2, 1/2*x*y, y^2]
ideal K = (I+[x])^2*I : [y] & I
set seed=5 window=3
superficial x+y I anchor=2
audit Prop2.1 I K k=1
";
    let s = parse_session(src).unwrap();
    let again = parse_session(&s.to_string()).unwrap();
    assert_eq!(s.ring, again.ring);
    let strip = |s: &Session| s.lines.iter().map(|l| l.stmt.clone()).collect::<Vec<_>>();
    assert_eq!(strip(&s), strip(&again));
}

#[test]
fn precedence() {
    let s = parse_session("ring R = char 7 vars x y\nideal A = [x]\nideal B = A+A*A^2:A&A\n").unwrap();
    let Stmt::Ideal { expr, .. } = &s.lines[1].stmt else { panic!() };
    assert!(matches!(expr, Expr::Bin(BinOp::Intersect, a, _) if matches!(**a, Expr::Bin(BinOp::Colon, ..))));
    assert_eq!(expr.to_string(), "A+A*A^2:A&A");
}

#[test]
fn length_reports() {
    let r = run("ring R = char 32003 vars x y\nideal I = [x^2, x*y, y^2]\nlength I\nlength_quotient [x,y] I\nequal_local I [x^2,y^2]\n");
    assert_eq!(r[0].payload["length"], 3);
    assert_eq!(r[1].payload["length"], 2);
    assert_eq!(r[2].payload["equal"], false);
    let line = emit(&r[1], Format::Json);
    assert!(line.starts_with(r#"{"certs":"#), "{line}");
    assert!(line.contains(r#""command":"length_quotient [x,y] I","ok":true,"payload":{"length":2}"#), "{line}");
}

#[test]
fn error_reports_keep_going() {
    let r = run("ring R = char 32003 vars x y\nideal I = [x]\nlength I\nlength [x,y]\n");
    assert!(!r[0].ok);
    assert_eq!(r[0].error.as_ref().unwrap().0, "NOT_M_PRIMARY");
    assert!(emit(&r[0], Format::Json).contains("NOT_M_PRIMARY"));
    assert!(r[1].ok);
}

#[test]
fn dispatch() {
    let r = run("ring R = char 32003 vars x y
ideal I = [x^4, x^3*y, x*y^3, y^4]
ideal J = [x^4, y^4]
rr I window=2
rednum J I
vv J I
hilbert [x^2,x*y,y^2]
wang I J k=2
");
    assert!(r.iter().all(|r| r.ok), "{:?}", r);
    assert_eq!(r[0].certs["window"], 2);
    assert_eq!(r[1].payload["r"], 2);
}

#[test]
fn option_precedence() {
    let s = parse_session("ring R = char 7 vars x y\nset seed=3\nlength [x,y]\nlength [x,y] seed=9\n").unwrap();
    let r = execute(&s, &ExecOptions { default_seed: Some(1), ..Default::default() });
    assert_eq!(r[0].certs["seed"], 3);
    assert_eq!(r[1].certs["seed"], 9);
    let r = execute(&s, &ExecOptions { seed: Some(4), ..Default::default() });
    assert_eq!(r[0].certs["seed"], 4);
    assert_eq!(r[1].certs["seed"], 9);
    let r = execute(
        &parse_session("ring R = char 7 vars x\nlength [x]").unwrap(),
        &ExecOptions { default_seed: Some(1), characteristic: Some(101), ..Default::default() },
    );
    assert_eq!((r[0].certs["seed"].clone(), r[0].certs["char"].clone()), (1.into(), 101.into()));
}

#[test]
fn repro_ex2_15() {
    let r = run("repro ex2_15\n");
    assert!(r[0].ok, "{:?}", r[0]);
    assert_eq!(r[0].payload["r"], 2);
    assert_eq!(r[0].payload["depth_ge1"], true);
    assert_eq!(r[0].payload["cm"], false);
}

#[test]
fn unknown_preset() {
    let r = run("repro ex9\n");
    assert_eq!(r[0].error.as_ref().unwrap().0, "INVALID");
}
