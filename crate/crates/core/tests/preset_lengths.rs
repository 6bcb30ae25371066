//! Lengths of the `ex3_4` preset against a dense oracle: the local colength of `Q` is
//! `dim S / (Q + m^N)` once two consecutive `N` agree.

use rrlab::session::ex3_4_lengths;

type Exps = [u32; 5];
type Poly = Vec<(Exps, i64)>;

fn monomials_below(n: u32) -> Vec<Exps> {
    let mut out = Vec::new();
    for deg in 0..n {
        for a in 0..=deg {
            for b in 0..=deg - a {
                for c in 0..=deg - a - b {
                    for d in 0..=deg - a - b - c {
                        out.push([a, b, c, d, deg - a - b - c - d]);
                    }
                }
            }
        }
    }
    out
}

fn mono(e: Exps) -> Poly {
    vec![(e, 1)]
}

fn ambient() -> Vec<Poly> {
    // x^2+y^5, xy+u^4, xz+v^3 in variables x y z u v
    vec![
        vec![([2, 0, 0, 0, 0], 1), ([0, 5, 0, 0, 0], 1)],
        vec![([1, 1, 0, 0, 0], 1), ([0, 0, 0, 4, 0], 1)],
        vec![([1, 0, 1, 0, 0], 1), ([0, 0, 0, 0, 3], 1)],
    ]
}

fn deg(e: &Exps) -> u32 {
    e.iter().sum()
}

/// `dim_F S / (gens + m^n)` by Gaussian elimination mod `p`.
fn truncated_colength(gens: &[Poly], n: u32, p: i64) -> usize {
    let mons = monomials_below(n);
    let index: std::collections::HashMap<Exps, usize> = mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut pivots: Vec<Option<Vec<i64>>> = vec![None; mons.len()];
    let mut rank = 0;
    for g in gens {
        for mu in &mons {
            let mut row = vec![0i64; mons.len()];
            let mut nonzero = false;
            for (e, c) in g {
                let mut t = *e;
                for k in 0..5 {
                    t[k] += mu[k];
                }
                if deg(&t) < n {
                    let i = index[&t];
                    row[i] = (row[i] + c).rem_euclid(p);
                    nonzero = true;
                }
            }
            if !nonzero {
                continue;
            }
            for col in 0..mons.len() {
                if row[col] == 0 {
                    continue;
                }
                match &pivots[col] {
                    Some(pr) => {
                        let f = row[col];
                        for k in col..mons.len() {
                            row[k] = (row[k] - f * pr[k]).rem_euclid(p);
                        }
                    }
                    None => {
                        let inv = pow_mod(row[col], p - 2, p);
                        for v in row.iter_mut().skip(col) {
                            *v = *v * inv % p;
                        }
                        pivots[col] = Some(row);
                        rank += 1;
                        break;
                    }
                }
            }
        }
    }
    mons.len() - rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn local_colength(gens: &[Poly], p: i64) -> usize {
    let mut prev = truncated_colength(gens, 1, p);
    for n in 2..16 {
        let cur = truncated_colength(gens, n, p);
        if cur == prev {
            return cur;
        }
        prev = cur;
    }
    panic!("no stabilization");
}

fn with_ambient(mut gens: Vec<Poly>) -> Vec<Poly> {
    gens.extend(ambient());
    gens
}

fn degree_exactly(d: u32) -> Vec<Exps> {
    monomials_below(d + 1).into_iter().filter(|e| deg(e) == d).collect()
}

fn oracle(p: i64) -> (usize, usize) {
    let m4: Vec<Poly> = degree_exactly(4).into_iter().map(mono).collect();
    let cubic = degree_exactly(3);
    let times = |var: usize| -> Vec<Poly> {
        cubic
            .iter()
            .map(|e| {
                let mut t = *e;
                t[var] += 1;
                mono(t)
            })
            .collect()
    };
    let j1: Vec<Poly> = [times(1), times(2)].concat();
    let j2: Vec<Poly> = [times(2), times(3)].concat();
    let base = local_colength(&with_ambient(m4), p);
    (local_colength(&with_ambient(j1), p) - base, local_colength(&with_ambient(j2), p) - base)
}

#[test]
fn engine_matches_dense_oracle() {
    for p in [32003i64, 101] {
        let (a, b) = oracle(p);
        let (ea, eb) = ex3_4_lengths(p as u64).unwrap();
        assert_eq!((ea as usize, eb as usize), (a, b), "p = {p}");
    }
}

#[test]
fn rational_agrees_with_modular() {
    assert_eq!(ex3_4_lengths(0).unwrap(), ex3_4_lengths(32003).unwrap());
    assert_eq!(ex3_4_lengths(0).unwrap(), ex3_4_lengths(101).unwrap());
}
