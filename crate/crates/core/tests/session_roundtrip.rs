use proptest::prelude::*;
use rrlab::session::{parse_session, Stmt};

fn expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("A".to_string()),
        Just("B".to_string()),
        Just("[x^2,x*y]".to_string()),
        Just("[y-3*x^2]".to_string()),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), 0u32..4).prop_map(|(e, k)| format!("({e})^{k}")),
            (inner.clone(), inner.clone(), prop::sample::select(vec!['*', '+', '&', ':']))
                .prop_map(|(a, b, op)| format!("({a}){op}({b})")),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse(e in expr(), seed in 0u64..1000) {
        let src = format!(
            "ring R = char 101 vars x y\nideal A = [x, y]\nideal B = A^2\nideal C = {e}\nset seed={seed}\nrr C window=3\n"
        );
        let s = parse_session(&src).unwrap();
        let printed = s.to_string();
        let again = parse_session(&printed).unwrap();
        let stmts = |s: &rrlab::session::Session| s.lines.iter().map(|l| l.stmt.clone()).collect::<Vec<Stmt>>();
        prop_assert_eq!(stmts(&s), stmts(&again));
        prop_assert_eq!(printed, again.to_string());
    }

    #[test]
    fn parser_never_panics(src in "[a-z0-9 =\\[\\]\\(\\)\\^*+&:,#\n-]{0,80}") {
        let _ = parse_session(&format!("ring R = char 7 vars x y\n{src}"));
    }
}
