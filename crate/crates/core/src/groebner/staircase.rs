use crate::poly::Monomial;

fn divisible(m: &Monomial, lts: &[Monomial]) -> bool {
    lts.iter().any(|l| l.divides(m))
}

/// Depth-first walk over the order ideal of standard monomials. Exponents are
/// raised one variable at a time; since divisibility is monotone in each
/// exponent the walk stops at the first divisible monomial.
fn walk<F: FnMut(&Monomial)>(
    n: usize,
    lts: &[Monomial],
    max_deg: Option<u32>,
    var: usize,
    exps: &mut Vec<u32>,
    visit: &mut F,
) {
    if var == n {
        let m = Monomial::from_exponents(exps).expect("bounded exponents");
        visit(&m);
        return;
    }
    let mut e = 0u32;
    loop {
        exps[var] = e;
        let deg: u32 = exps[..=var].iter().sum();
        if max_deg.is_some_and(|d| deg > d) {
            break;
        }
        let m = Monomial::from_exponents(exps).expect("bounded exponents");
        if divisible(&m, lts) {
            break;
        }
        walk(n, lts, max_deg, var + 1, exps, visit);
        e += 1;
        if e > u16::MAX as u32 {
            break;
        }
    }
    exps[var] = 0;
}

/// Number of monomials not divisible by any of `lts`, of degree at most
/// `max_deg` when given. Without a degree bound the caller must ensure the
/// staircase is finite.
pub fn count_standard(n: usize, lts: &[Monomial], max_deg: Option<u32>) -> u64 {
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    walk(n, lts, max_deg, 0, &mut exps, &mut |_| count += 1);
    count
}

/// The standard monomials of degree at most `cap`, in discovery order.
pub fn enumerate_standard(n: usize, lts: &[Monomial], cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    walk(n, lts, Some(cap), 0, &mut exps, &mut |m| out.push(*m));
    out
}

/// All monomials of total degree exactly `d` in `n` variables.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, var: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == n {
            exps[var] = left;
            out.push(Monomial::from_exponents(exps).expect("bounded"));
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            rec(n, var + 1, left - e, exps, out);
        }
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    rec(n, 0, d, &mut exps, &mut out);
    out
}
