//! Buchberger's algorithm over a sorted-vector term representation.
//!
//! With `trunc = Some(N)` every monomial of degree `>= N` is treated as zero,
//! i.e. the computation happens in `S / M^N`. Combined with the local degree
//! order this yields standard bases of ideals of the Artinian ring `S / M^N`:
//! there `LT(f * m) = LT(f) * m` unless `f * m = 0`, which is all the
//! Buchberger criterion and both pair criteria need.

use std::cmp::Ordering;

use crate::poly::{Coefficient, Field, Monomial, MonomialOrder};

pub(crate) type Term = (Monomial, Coefficient);

#[derive(Clone, Copy, Debug)]
pub(crate) struct Engine {
    pub field: Field,
    pub order: MonomialOrder,
    pub trunc: Option<u32>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Basis elements: monic polynomials with their leading data cached.
#[derive(Default)]
pub(crate) struct Basis {
    pub polys: Vec<Vec<Term>>,
    lts: Vec<Monomial>,
    masks: Vec<u16>,
    active: Vec<bool>,
}

impl Basis {
    fn push(&mut self, p: Vec<Term>) -> usize {
        let lt = p[0].0;
        self.lts.push(lt);
        self.masks.push(lt.support_mask());
        self.active.push(true);
        self.polys.push(p);
        self.polys.len() - 1
    }

    pub fn from_polys(polys: Vec<Vec<Term>>) -> Basis {
        let mut b = Basis::default();
        for p in polys {
            b.push(p);
        }
        b
    }

    #[inline]
    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.lts.len()).find(|&k| self.active[k] && self.masks[k] & !mask == 0 && self.lts[k].divides(m))
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&k| self.active[k]).collect()
    }
}

impl Engine {
    #[inline]
    fn live(&self, m: &Monomial) -> bool {
        match self.trunc {
            Some(n) => m.degree() < n,
            None => true,
        }
    }

    /// Sorts descending under the engine order and drops dead monomials.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Vec<Term> {
        terms.retain(|(m, c)| !c.is_zero() && self.live(m));
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }

    /// `f - c * m * g`, all inputs sorted descending.
    fn sub_mul(&self, f: &[Term], c: &Coefficient, m: &Monomial, g: &[Term]) -> Vec<Term> {
        let field = self.field;
        let negc = field.neg(c);
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut gi = g.iter().filter_map(|(gm, gc)| {
            let pm = gm.mul(m);
            if self.live(&pm) {
                Some((pm, gc))
            } else {
                None
            }
        });
        let mut next_g = gi.next();
        let mut i = 0;
        while i < f.len() {
            match &next_g {
                None => {
                    out.extend_from_slice(&f[i..]);
                    return out;
                }
                Some((pm, gc)) => match self.order.cmp(&f[i].0, pm) {
                    Ordering::Greater => {
                        out.push(f[i].clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((*pm, field.mul(&negc, gc)));
                        next_g = gi.next();
                    }
                    Ordering::Equal => {
                        let v = field.add(&f[i].1, &field.mul(&negc, gc));
                        if !v.is_zero() {
                            out.push((*pm, v));
                        }
                        i += 1;
                        next_g = gi.next();
                    }
                },
            }
        }
        while let Some((pm, gc)) = next_g {
            out.push((pm, field.mul(&negc, gc)));
            next_g = gi.next();
        }
        out
    }

    pub fn make_monic(&self, mut p: Vec<Term>) -> Vec<Term> {
        if let Some((_, lc)) = p.first() {
            if !lc.is_one() {
                let inv = self.field.inv(lc).expect("nonzero");
                for (_, c) in p.iter_mut() {
                    *c = self.field.mul(c, &inv);
                }
            }
        }
        p
    }

    /// Full reduction: no term of the result is divisible by an active
    /// leading monomial of `basis`.
    pub fn reduce(&self, mut f: Vec<Term>, basis: &Basis) -> Vec<Term> {
        let mut rem = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let m = f[start].0;
            match basis.find_divisor(&m) {
                Some(k) => {
                    let q = basis.lts[k].quotient_of(&m).expect("divides");
                    let c = f[start].1.clone();
                    // basis polynomials are monic
                    f = self.sub_mul(&f[start..], &c, &q, &basis.polys[k]);
                    start = 0;
                }
                None => {
                    rem.push(f[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    fn s_poly(&self, f: &[Term], g: &[Term], lcm: &Monomial) -> Vec<Term> {
        let mf = f[0].0.quotient_of(lcm).expect("lcm");
        let mg = g[0].0.quotient_of(lcm).expect("lcm");
        let one = self.field.one();
        // mf*f - mg*g with both monic; the leading terms cancel.
        let left: Vec<Term> = f[1..]
            .iter()
            .filter_map(|(m, c)| {
                let pm = m.mul(&mf);
                self.live(&pm).then(|| (pm, c.clone()))
            })
            .collect();
        self.sub_mul(&left, &one, &mg, &g[1..])
    }

    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        a.lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| a.lcm.cmp_grevlex(&b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
    }

    /// Gebauer-Moeller installation of a new basis element `h`.
    fn update(&self, basis: &mut Basis, pairs: &mut Vec<Pair>, h_poly: Vec<Term>) {
        let h = basis.push(h_poly);
        let lth = basis.lts[h];
        let olds: Vec<usize> = (0..h).filter(|&k| basis.active[k]).collect();

        let mut c: Vec<Pair> = olds.iter().map(|&g| Pair { i: g, j: h, lcm: basis.lts[g].lcm(&lth) }).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = basis.lts[p.i].is_coprime(&lth);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !basis.lts[p.i].is_coprime(&lth) && self.live(&p.lcm)).collect();

        pairs.retain(|p| {
            !(lth.divides(&p.lcm) && basis.lts[p.i].lcm(&lth) != p.lcm && basis.lts[p.j].lcm(&lth) != p.lcm)
        });
        pairs.extend(e);

        for &g in &olds {
            if lth.divides(&basis.lts[g]) {
                basis.active[g] = false;
            }
        }
    }

    /// Gröbner (or truncated standard) basis, not yet inter-reduced.
    pub fn buchberger(&self, gens: Vec<Vec<Term>>) -> Basis {
        let mut basis = Basis::default();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut gens: Vec<Vec<Term>> = gens.into_iter().map(|g| self.normalize(g)).filter(|g| !g.is_empty()).collect();
        // Small leading monomials first keeps early reductions cheap.
        gens.sort_by(|a, b| self.order.cmp(&a[0].0, &b[0].0).then(a.len().cmp(&b.len())));
        for g in gens {
            let r = self.reduce(g, &basis);
            if r.is_empty() {
                continue;
            }
            if r[0].0.is_one() {
                return self.unit_basis();
            }
            self.update(&mut basis, &mut pairs, self.make_monic(r));
        }
        while !pairs.is_empty() {
            let best = (0..pairs.len()).min_by(|&a, &b| self.pair_cmp(&pairs[a], &pairs[b])).expect("nonempty");
            let p = pairs.swap_remove(best);
            let s = self.s_poly(&basis.polys[p.i], &basis.polys[p.j], &p.lcm);
            let r = self.reduce(s, &basis);
            if r.is_empty() {
                continue;
            }
            if r[0].0.is_one() {
                return self.unit_basis();
            }
            self.update(&mut basis, &mut pairs, self.make_monic(r));
        }
        basis
    }

    fn unit_basis(&self) -> Basis {
        Basis::from_polys(vec![vec![(Monomial::one(0), self.field.one())]])
    }

    /// Reduced basis: minimal, tail-reduced, monic, sorted by leading
    /// monomial ascending.
    pub fn reduced(&self, gens: Vec<Vec<Term>>, nvars: usize) -> Vec<Vec<Term>> {
        let basis = self.buchberger(gens);
        if basis.polys.len() == 1 && basis.lts[0].is_one() {
            return vec![vec![(Monomial::one(nvars), self.field.one())]];
        }
        let idx = basis.active_indices();
        let mut out: Vec<Vec<Term>> = Vec::with_capacity(idx.len());
        for (pos, &k) in idx.iter().enumerate() {
            let others = Basis::from_polys(
                idx.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &o)| basis.polys[o].clone()).collect(),
            );
            let p = &basis.polys[k];
            let mut tail = self.reduce(p[1..].to_vec(), &others);
            let mut full = vec![p[0].clone()];
            full.append(&mut tail);
            out.push(full);
        }
        out.sort_by(|a, b| self.order.cmp(&a[0].0, &b[0].0));
        out
    }

    /// Buchberger criterion: every S-polynomial reduces to zero.
    pub fn is_groebner(&self, polys: &[Vec<Term>]) -> bool {
        let basis = Basis::from_polys(polys.iter().map(|p| self.make_monic(p.clone())).collect());
        for i in 0..polys.len() {
            for j in (i + 1)..polys.len() {
                let lcm = basis.lts[i].lcm(&basis.lts[j]);
                if !self.live(&lcm) {
                    continue;
                }
                let s = self.s_poly(&basis.polys[i], &basis.polys[j], &lcm);
                if !self.reduce(s, &basis).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
