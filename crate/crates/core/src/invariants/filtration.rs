//! Valabrega-Valla tables, Hilbert-Samuel data, Wang torsion lengths and
//! depth flags.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::reduction::reduction_number;
use super::rr::{ratliff_rush, Superficial};
use super::{binom, colength, Params};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::local::local_quotient_length;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VvRow {
    pub n: usize,
    pub holds: bool,
    /// `λ(R / (J ∩ I^n))`
    pub intersection_colength: u64,
    /// `λ(R / J I^(n-1))`
    pub product_colength: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VvTable {
    pub rows: Vec<VvRow>,
    pub first_failure: Option<usize>,
}

impl VvTable {
    /// Largest `t` with the condition holding for `n = 1 ..= t`.
    pub fn prefix(&self) -> usize {
        self.rows.iter().take_while(|r| r.holds).count()
    }

    pub fn holds_on(&self, lo: usize, hi: usize) -> bool {
        self.rows.iter().filter(|r| r.n >= lo && r.n <= hi).all(|r| r.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "first_failure": self.first_failure,
            "rows": self.rows.iter().map(|r| json!({
                "n": r.n,
                "holds": r.holds,
                "colength_intersection": r.intersection_colength,
                "colength_product": r.product_colength,
            })).collect::<Vec<_>>(),
        })
    }
}

/// `λ(R / (J ∩ I^n))` from `λ(J) + λ(I^n) - λ(J + I^n)` on colengths.
pub(crate) fn intersection_colength(j: &Ideal, i: &Ideal, n: usize) -> Result<u64> {
    let pw = i.power(n as u32);
    Ok(colength(j)? + colength(&pw)? - colength(&j.sum(&pw)?)?)
}

pub(crate) fn jpower_product(j: &Ideal, i: &Ideal, n: usize) -> Result<Ideal> {
    if n == 0 {
        Ok(j.clone())
    } else {
        j.product(&i.power(n as u32))
    }
}

/// `J ∩ I^n = J I^(n-1)` locally for `n = 1 ..= cap`. The right side lies in
/// the left, so colengths decide.
pub fn vv_table(j: &Ideal, i: &Ideal, cap: usize) -> Result<VvTable> {
    let mut rows = Vec::new();
    for n in 1..=cap {
        let inter = intersection_colength(j, i, n)?;
        let prod = colength(&jpower_product(j, i, n - 1)?)?;
        if prod < inter {
            return Err(Error::Invalid(format!("J I^{} is not inside J ∩ I^{n}", n - 1)));
        }
        rows.push(VvRow { n, holds: inter == prod, intersection_colength: inter, product_colength: prod });
    }
    let first_failure = rows.iter().find(|r| !r.holds).map(|r| r.n);
    Ok(VvTable { rows, first_failure })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `H(n) = λ(R / I^n)` for `n = 0 ..= cap + 3`.
    pub h: Vec<u64>,
    /// `(e_0, ..., e_d)`
    pub e: Vec<BigInt>,
    pub n0: usize,
    pub d: usize,
    pub cap: usize,
}

fn basis_value(d: usize, i: usize, n: i64) -> BigInt {
    let sign = if i.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    sign * binom(n + d as i64 - i as i64 - 1, (d - i) as i64)
}

impl HilbertData {
    /// `P(n) = Σ (-1)^i e_i C(n+d-i-1, d-i)`
    pub fn polynomial(&self, n: usize) -> BigInt {
        (0..=self.d).map(|i| &self.e[i] * basis_value(self.d, i, n as i64)).sum()
    }

    pub fn e_i64(&self, i: usize) -> Option<i64> {
        self.e.get(i).and_then(|v| v.to_i64())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "H": self.h,
            "cap": self.cap,
            "d": self.d,
            "e": self.e.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "n0": self.n0,
        })
    }
}

fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Hilbert-Samuel function up to `cap + 3` and the coefficients fitted on
/// `n = cap - d ..= cap`, validated at `cap + 1 ..= cap + 3`.
pub fn hilbert(i: &Ideal, d: usize, cap: usize) -> Result<HilbertData> {
    if cap < d + 4 {
        return Err(Error::Invalid(format!("hilbert needs cap >= d + 4 = {}", d + 4)));
    }
    let h = (0..=cap + 3).map(|n| colength(&i.power(n as u32))).collect::<Result<Vec<u64>>>()?;
    let ns: Vec<usize> = (cap - d..=cap).collect();
    let a =
        ns.iter().map(|&n| (0..=d).map(|k| BigRational::from_integer(basis_value(d, k, n as i64))).collect()).collect();
    let b = ns.iter().map(|&n| BigRational::from_integer(BigInt::from(h[n]))).collect();
    let sol = solve(a, b).ok_or_else(|| Error::NoStableFit("singular fit system".into()))?;
    if sol.iter().any(|v| !v.is_integer()) {
        return Err(Error::NoStableFit("non-integral Hilbert coefficients".into()));
    }
    let e: Vec<BigInt> = sol.into_iter().map(|v| v.to_integer()).collect();
    let mut data = HilbertData { h, e, n0: cap - d, d, cap };
    for n in cap + 1..=cap + 3 {
        if data.polynomial(n) != BigInt::from(data.h[n]) {
            return Err(Error::NoStableFit(format!("polynomial misses H({n}); raise cap")));
        }
    }
    while data.n0 > 1 && data.polynomial(data.n0 - 1) == BigInt::from(data.h[data.n0 - 1]) {
        data.n0 -= 1;
    }
    if data.e[0].is_negative() {
        return Err(Error::NoStableFit("negative multiplicity".into()));
    }
    Ok(data)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WangLength {
    pub n: usize,
    pub k: usize,
    /// `C(k+d-1, d-1) λ(I^n / J I^(n-1))`
    pub sum_length: u64,
    /// `λ(J^k I^n / J^(k+1) I^(n-1))`
    pub image_length: u64,
    pub torsion: u64,
}

impl WangLength {
    pub fn to_json(&self) -> Value {
        json!({
            "image_length": self.image_length,
            "k": self.k,
            "n": self.n,
            "sum_length": self.sum_length,
            "torsion": self.torsion,
        })
    }
}

/// `λ(T_{n,k})` from the exact sequence
/// `0 -> T -> (I^n / J I^(n-1))^C(k+d-1,d-1) -> J^k I^n / J^(k+1) I^(n-1) -> 0`.
pub fn wang_torsion_length(i: &Ideal, j: &Ideal, n: usize, k: usize, d: usize) -> Result<WangLength> {
    if n == 0 {
        return Err(Error::Invalid("wang lengths need n >= 1".into()));
    }
    if j.gens().len() != d {
        return Err(Error::DimensionMismatch { d, reason: format!("J has {} generators", j.gens().len()) });
    }
    let base = local_quotient_length(&i.power(n as u32), &jpower_product(j, i, n - 1)?)?;
    let mult = binom((k + d - 1) as i64, (d - 1) as i64).to_u64().expect("small binomial");
    let jk = j.power(k as u32);
    let top = jk.product(&i.power(n as u32))?;
    let bottom = j.power(k as u32 + 1).product(&i.power(n as u32 - 1))?;
    let image = local_quotient_length(&top, &bottom)?;
    let sum = mult * base;
    if image > sum {
        return Err(Error::NegativeLength(sum as i64 - image as i64));
    }
    Ok(WangLength { n, k, sum_length: sum, image_length: image, torsion: sum - image })
}

#[derive(Clone, Debug)]
pub struct DepthFlags {
    pub depth_ge1: bool,
    pub cm_at_d2: Option<bool>,
    pub r: usize,
    pub per_n: Vec<(usize, bool)>,
    pub vv: VvTable,
}

impl DepthFlags {
    pub fn to_json(&self) -> Value {
        json!({
            "certified": "window",
            "cm_at_d2": self.cm_at_d2,
            "depth_ge1": self.depth_ge1,
            "per_n": self.per_n.iter().map(|(n, ok)| json!({"n": n, "closed": ok})).collect::<Vec<_>>(),
            "r": self.r,
            "vv": self.vv.to_json(),
        })
    }
}

/// `depth G(I) >= 1` from the Ratliff-Rush flags of the powers, using the
/// first generator of `J` as superficial element; for `d = 2`, Cohen-Macaulay
/// iff the Valabrega-Valla condition holds up to `r + 1`.
pub fn depth_flags(i: &Ideal, j: &Ideal, p: &Params) -> Result<DepthFlags> {
    let cert = reduction_number(j, i, p.cap)?;
    let x = j.gens().first().cloned().ok_or_else(|| Error::Invalid("J has no generators".into()))?;
    let rr = ratliff_rush(i, p, Some(Superficial { x, anchor: cert.r.max(1) }))?;
    let vv = vv_table(j, i, cert.r + 1)?;
    let cm = if p.d == 2 { Some(vv.first_failure.is_none()) } else { None };
    Ok(DepthFlags { depth_ge1: rr.all_closed(), cm_at_d2: cm, r: cert.r, per_n: rr.per_n, vv })
}
