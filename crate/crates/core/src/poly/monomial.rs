use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Capacity of the inline exponent array. One slot is reserved for the
/// auxiliary variable used by intersections, so user rings get one less.
pub const MAX_VARS: usize = 12;

/// A monomial `x_1^e_1 ... x_n^e_n` with its total degree cached.
///
/// Exponents live in a fixed inline array so monomials are `Copy`; slots past
/// `nvars` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, deg: 0 }
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m.deg = exp as u32;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        m.deg = exps.iter().sum();
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Product; panics if an exponent leaves the `u16` range.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        out.deg = self.deg + other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self | other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..self.nvars as usize {
            out.exps[i] -= self.exps[i];
        }
        out.deg = other.deg - self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u32;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u32;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Bit `i` set iff variable `i` occurs; a cheap divisibility pre-filter.
    #[inline]
    pub fn support_mask(&self) -> u16 {
        let mut mask = 0u16;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Index of the single variable when this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Same exponents viewed in a ring with one extra leading variable.
    pub(crate) fn prepend_var(&self, exp: u16) -> Monomial {
        assert!((self.nvars as usize) < MAX_VARS, "too many variables");
        let mut out = Monomial::one(self.nvars as usize + 1);
        out.exps[0] = exp;
        out.exps[1..=self.nvars as usize].copy_from_slice(self.exponents());
        out.deg = self.deg + exp as u32;
        out
    }

    /// Drops the leading variable (which must have exponent zero).
    pub(crate) fn drop_first_var(&self) -> Monomial {
        debug_assert_eq!(self.exps[0], 0);
        let mut out = Monomial::one(self.nvars as usize - 1);
        out.exps[..self.nvars as usize - 1].copy_from_slice(&self.exps[1..self.nvars as usize]);
        out.deg = self.deg;
        out
    }

    /// Exponents reordered: slot `i` of the result takes slot `perm[i]` of self.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = *self;
        for (i, &src) in perm.iter().enumerate() {
            out.exps[i] = self.exps[src];
        }
        out
    }

    /// Graded reverse lexicographic comparison (x_1 > x_2 > ... > x_n).
    #[inline]
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.nvars as usize).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for i in 0..self.nvars as usize {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Grevlex restricted to the variable range `lo..hi`.
    #[inline]
    pub(crate) fn cmp_grevlex_range(&self, other: &Monomial, lo: usize, hi: usize) -> Ordering {
        let da: u32 = self.exps[lo..hi].iter().map(|&e| e as u32).sum();
        let db: u32 = other.exps[lo..hi].iter().map(|&e| e as u32).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (lo..hi).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Renders with the given variable names, `1` for the unit monomial.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.deg == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
