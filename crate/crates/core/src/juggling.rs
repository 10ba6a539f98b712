//! Juggling functions and their combinatorics.
//!
//! A juggling function is an n-periodic bijection `π: Z -> Z` with
//! `i <= π(i) <= i + n`. It is stored by its values on `[1, n]`; every query
//! at an arbitrary integer reduces mod `n` on the fly. The period is part of
//! the data and is never collapsed to a minimal one.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Residue of `a` in `[1, n]`.
pub fn residue(a: i64, n: usize) -> usize {
    ((a - 1).rem_euclid(n as i64) + 1) as usize
}

/// An n-periodic bijection of `Z` with `i <= π(i) <= i + n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JugglingFunction {
    values: Vec<i64>,
    // inv[r - 1] = the i in [1, n] with π(i) ≡ r (mod n)
    inv: Vec<usize>,
}

/// Loops, coloops and uniformity of a juggling function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// `a` in `[1, n]` with `π(a) = a`.
    pub loops: Vec<usize>,
    /// `a` in `[1, n]` with `π(a) = a + n`.
    pub coloops: Vec<usize>,
    /// All throws equal.
    pub uniform: bool,
}

impl JugglingFunction {
    /// From the values `π(1), ..., π(n)`.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let throws: Vec<i64> = values.iter().zip(1..).map(|(&v, i)| v - i).collect();
        Self::from_throws(&throws)
    }

    /// From the siteswap `t_i = π(i) - i`.
    pub fn from_throws(throws: &[i64]) -> Result<Self> {
        let n = throws.len();
        if n == 0 {
            return Err(Error::EmptySiteswap);
        }
        for (idx, &t) in throws.iter().enumerate() {
            if t < 0 || t > n as i64 {
                return Err(Error::ThrowOutOfRange { index: idx + 1, throw: t, period: n });
            }
        }
        let mut inv = alloc::vec![0usize; n];
        for (idx, &t) in throws.iter().enumerate() {
            let i = idx + 1;
            let r = residue(i as i64 + t, n);
            if inv[r - 1] != 0 {
                return Err(Error::NotBijective { first: inv[r - 1], second: i });
            }
            inv[r - 1] = i;
        }
        let values = throws.iter().zip(1..).map(|(&t, i)| i + t).collect();
        Ok(JugglingFunction { values, inv })
    }

    /// `π(a) = a + h`, period `n`.
    pub fn uniform(n: usize, h: usize) -> Result<Self> {
        Self::from_throws(&alloc::vec![h as i64; n])
    }

    /// Period `n`.
    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// `π(1), ..., π(n)`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Siteswap throws `π(i) - i`.
    pub fn throws(&self) -> Vec<i64> {
        self.values.iter().zip(1..).map(|(&v, i)| v - i).collect()
    }

    /// `π(a)` for any integer `a`.
    pub fn eval(&self, a: i64) -> i64 {
        let n = self.period();
        let r = residue(a, n);
        self.values[r - 1] + (a - r as i64)
    }

    /// `π^{-1}(a)` for any integer `a`.
    pub fn inverse(&self, a: i64) -> i64 {
        let n = self.period();
        let i = self.inv[residue(a, n) - 1] as i64;
        i + (a - self.values[i as usize - 1])
    }

    /// `π†(a) = π^{-1}(a) + n`.
    pub fn dual(&self) -> Self {
        let n = self.period() as i64;
        let values = (1..=n).map(|a| self.inverse(a) + n).collect();
        JugglingFunction::new(values).expect("the dual of a juggling function is one")
    }

    /// `(1/n) Σ (π(i) - i)`.
    pub fn num_balls(&self) -> usize {
        let s: i64 = self.throws().iter().sum();
        (s / self.period() as i64) as usize
    }

    /// `π(a) = a`.
    pub fn is_loop(&self, a: i64) -> bool {
        self.eval(a) == a
    }

    /// `π(a) = a + n`.
    pub fn is_coloop(&self, a: i64) -> bool {
        self.eval(a) == a + self.period() as i64
    }

    /// Every throw equal.
    pub fn is_uniform(&self) -> bool {
        let t = self.throws();
        t.iter().all(|&x| x == t[0])
    }

    /// `S_π(a, b) = {i : a < i, π(i) < b}`, ascending.
    pub fn s_set(&self, a: i64, b: i64) -> Vec<i64> {
        (a + 1..b).filter(|&i| self.eval(i) < b).collect()
    }

    /// `L_a = {b : π^{-1}(b) < a <= b}`, ascending. Always inside `[a, a + n)`.
    pub fn landing_schedule(&self, a: i64) -> Vec<i64> {
        let n = self.period() as i64;
        (a..a + n).filter(|&b| self.inverse(b) < a).collect()
    }

    /// Residues of `L_1, ..., L_n`, each sorted: the Grassmann necklace.
    pub fn necklace(&self) -> Vec<Vec<usize>> {
        let n = self.period();
        (1..=n as i64)
            .map(|a| {
                let mut r: Vec<usize> =
                    self.landing_schedule(a).into_iter().map(|b| residue(b, n)).collect();
                r.sort_unstable();
                r
            })
            .collect()
    }

    /// Loops, coloops and uniformity.
    pub fn classify(&self) -> Classification {
        let n = self.period();
        Classification {
            loops: (1..=n).filter(|&a| self.is_loop(a as i64)).collect(),
            coloops: (1..=n).filter(|&a| self.is_coloop(a as i64)).collect(),
            uniform: self.is_uniform(),
        }
    }

    /// Siteswap text: digits when every throw is at most 9, else comma separated.
    pub fn siteswap(&self) -> String {
        let t = self.throws();
        if t.iter().all(|&x| x <= 9) {
            t.iter().map(|x| x.to_string()).collect()
        } else {
            t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for JugglingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.siteswap())
    }
}

/// Parse a digit string such as `"53635514"` or a comma list such as `"10,0,2"`.
pub fn parse_siteswap(text: &str) -> Result<JugglingFunction> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::EmptySiteswap);
    }
    let throws: Vec<i64> = if t.contains(',') {
        t.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>().map_err(|_| Error::BadSiteswapToken(tok.to_string()))
            })
            .collect::<Result<_>>()?
    } else {
        t.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(i64::from)
                    .ok_or_else(|| Error::BadSiteswapToken(c.to_string()))
            })
            .collect::<Result<_>>()?
    };
    JugglingFunction::from_throws(&throws)
}
