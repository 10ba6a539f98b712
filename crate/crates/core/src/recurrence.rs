//! Linear recurrences attached to friezes.
//!
//! A frieze `C` of shape `π` (h balls, period n) is a recurrence matrix: its
//! solutions `C x = 0` form an h-dimensional space, and `C` is a frieze exactly
//! when every solution satisfies `x_{a+n} = (-1)^{n-h-1} x_a`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::construct::{build_frieze_det, is_pi_unimodular};
use crate::error::{Error, Result};
use crate::frieze::PeriodicFrieze;
use crate::juggling::residue;
use crate::matrix::RationalMatrix;
use crate::rational::{self, Rational};
use crate::JugglingFunction;

/// A finite stretch `x_start, x_{start+1}, ...` of an integer-indexed sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    start: i64,
    values: Vec<Rational>,
}

impl Sequence {
    /// Values starting at index `start`.
    pub fn new(start: i64, values: Vec<Rational>) -> Self {
        Sequence { start, values }
    }

    /// First index.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Last index (`start - 1` when empty).
    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    /// `x_i`, if inside the window.
    pub fn get(&self, i: i64) -> Option<&Rational> {
        if i < self.start {
            return None;
        }
        self.values.get((i - self.start) as usize)
    }

    /// The stored values.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// One period of a superperiodic solution matrix plus its sign law.
///
/// Column `b` holds `Sol_{a,b}` for `a` in `[b, b + n)`; the rest of the
/// matrix follows from `Sol_{a+n,b} = (-1)^s Sol_{a,b}` and
/// `Sol_{a+n,b+n} = Sol_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionWindow {
    period: usize,
    sign_exponent: i64,
    columns: Vec<Vec<Rational>>,
}

impl SolutionWindow {
    /// From `n` columns of length `n`.
    pub fn new(period: usize, sign_exponent: i64, columns: Vec<Vec<Rational>>) -> Result<Self> {
        if columns.len() != period || columns.iter().any(|c| c.len() != period) {
            return Err(Error::Dimension(alloc::format!(
                "a solution window of period {period} needs {period} columns of length {period}"
            )));
        }
        Ok(SolutionWindow { period, sign_exponent, columns })
    }

    /// Period `n`.
    pub fn period(&self) -> usize {
        self.period
    }

    /// `s` in `x_{a+n} = (-1)^s x_a`.
    pub fn sign_exponent(&self) -> i64 {
        self.sign_exponent
    }

    /// Stored column `b` in `[1, n]`.
    pub fn column(&self, b: usize) -> &[Rational] {
        &self.columns[b - 1]
    }

    /// `Sol_{a,b}` for any integers.
    pub fn value(&self, a: i64, b: i64) -> Rational {
        let n = self.period as i64;
        let shift = (b - 1).div_euclid(n) * n;
        let (a, b) = (a - shift, b - shift);
        let d = a - b;
        let wraps = d.div_euclid(n);
        rational::sign(self.sign_exponent * wraps)
            * &self.columns[(b - 1) as usize][d.rem_euclid(n) as usize]
    }

    /// Column `b` over the rows `[from, to]`.
    pub fn sequence(&self, b: i64, from: i64, to: i64) -> Sequence {
        Sequence::new(from, (from..=to).map(|a| self.value(a, b)).collect())
    }

    /// Rows `[a, a + 2n)` of the columns indexed by `schedule`.
    pub fn block(&self, schedule: &[i64], a: i64) -> RationalMatrix {
        let n = self.period as i64;
        let rows = (a..a + 2 * n).map(|r| schedule.iter().map(|&b| self.value(r, b)).collect());
        RationalMatrix::from_rows(schedule.len(), rows.collect()).expect("rectangular")
    }
}

/// `q_{(k,n)}(v)_a = (-1)^{(k-1)(a - ā)/n} v_ā`.
pub fn superperiodic_extension(v: &[Rational], k: i64, a: i64) -> Rational {
    let n = v.len();
    let r = residue(a, n);
    let wraps = (a - r as i64) / n as i64;
    rational::sign((k - 1) * wraps) * &v[r - 1]
}

/// `(C x)_a = Σ_b C_{a,b} x_b`, which needs `x` on `[a - n, a]`.
pub fn residual(c: &PeriodicFrieze, x: &Sequence, a: i64) -> Result<Rational> {
    let n = c.period() as i64;
    if x.start() > a - n || x.end() < a {
        return Err(Error::InsufficientWindow { need_from: a - n, need_to: a });
    }
    Ok((a - n..=a).map(|b| c.entry(a, b) * x.get(b).expect("checked")).sum())
}

/// `Sol(C)`: column `b` is `(-1)^{a+b} C†_{a,b}` over one period, or zero
/// when `b` is a loop. The sign exponent is `n - h - 1`.
pub fn solution_matrix(c: &PeriodicFrieze) -> Result<SolutionWindow> {
    if !c.is_frieze() {
        return Err(Error::NotFrieze);
    }
    let pi = c.shape();
    let n = pi.period() as i64;
    let h = pi.num_balls() as i64;
    let dual = c.dual_frieze();
    let columns = (1..=n)
        .map(|b| {
            (b..b + n)
                .map(|a| {
                    if pi.is_loop(b) {
                        Rational::zero()
                    } else {
                        rational::sign(a + b) * dual.entry(a, b)
                    }
                })
                .collect()
        })
        .collect();
    SolutionWindow::new(n as usize, n - h - 1, columns)
}

/// `Tiling(C)_{a,b} = Σ_i (-1)^{a+b+i(n-h-1)} C_{a+in,b}` for a frieze of
/// shape with `h` balls. Columns are superperiodic with sign exponent `h - 1`.
pub fn tiling(c: &PeriodicFrieze) -> SolutionWindow {
    let n = c.period() as i64;
    let h = c.shape().num_balls() as i64;
    let columns = (1..=n)
        .map(|b| {
            (b..b + n)
                .map(|a| {
                    // only i = 0, and i = 1 on the diagonal, meet the stored band
                    (0..=1)
                        .map(|i| rational::sign(a + b + i * (n - h - 1)) * c.entry(a + i * n, b))
                        .sum()
                })
                .collect()
        })
        .collect();
    SolutionWindow::new(n as usize, h - 1, columns).expect("n columns of length n")
}

/// Every candidate solution column (the column of
/// `C^{-1}` below the diagonal, spread superperiodically upward) solves
/// `C x = 0` and obeys `x_{a+n} = (-1)^{n-h-1} x_a` over two periods.
///
/// Candidates are built by forward substitution, independently of the
/// determinant formula used by [`PeriodicFrieze::dual_frieze`].
pub fn verify_superperiodic_kernel(c: &PeriodicFrieze) -> bool {
    if !c.is_prefrieze() {
        return false;
    }
    let pi = c.shape();
    let n = pi.period() as i64;
    let s = n - pi.num_balls() as i64 - 1;
    (1..=n).filter(|&b| !pi.is_loop(b)).all(|b| {
        let mut y: Vec<Rational> = Vec::with_capacity(2 * n as usize + 1);
        y.push(Rational::one());
        for a in b + 1..=b + 2 * n {
            let acc: Rational =
                ((a - n).max(b)..a).map(|col| c.entry(a, col) * &y[(col - b) as usize]).sum();
            y.push(-acc);
        }
        let sign = rational::sign(s);
        if (0..=n as usize).any(|i| y[i + n as usize] != &sign * &y[i]) {
            return false;
        }
        let mut x: Vec<Rational> = (0..n as usize).map(|i| &sign * &y[i]).collect();
        x.extend(y);
        let seq = Sequence::new(b - n, x);
        (b..=b + 2 * n).all(|a| residual(c, &seq, a).is_ok_and(|r| r.is_zero()))
    })
}

/// Check that `A v = 0` exactly when `F(A) q_{(k,n)}(v) = 0`, on a kernel basis
/// of `A`, on each unit vector, and on kernel vectors shifted by unit vectors.
/// Also checks `dim ker A = n - k`.
pub fn kernel_correspondence(a: &RationalMatrix, pi: &JugglingFunction) -> Result<bool> {
    let cert = is_pi_unimodular(a, pi)?;
    if !cert.passes() {
        return Err(Error::NotUnimodular("kernel correspondence needs a unimodular matrix".into()));
    }
    let f = build_frieze_det(a, pi)?;
    let n = pi.period();
    let k = pi.num_balls() as i64;
    let kernel = a.kernel_basis();
    if kernel.rows() != n - k as usize {
        return Ok(false);
    }
    let frieze_side = |v: &[Rational]| -> bool {
        let ni = n as i64;
        let seq = Sequence::new(1 - ni, (1 - ni..=2 * ni).map(|i| superperiodic_extension(v, k, i)).collect());
        (1..=2 * ni).all(|r| residual(&f, &seq, r).expect("window covers").is_zero())
    };
    let matrix_side = |v: &[Rational]| a.mul_vec(v).expect("n entries").iter().all(Zero::is_zero);
    let mut probes: Vec<Vec<Rational>> = kernel.to_rows();
    probes.push(alloc::vec![Rational::zero(); n]);
    for j in 0..n {
        let mut e = alloc::vec![Rational::zero(); n];
        e[j] = Rational::one();
        probes.push(e.clone());
        if let Some(row) = kernel.to_rows().get(j % kernel.rows().max(1)) {
            probes.push(row.iter().zip(&e).map(|(x, y)| x + y).collect());
        }
    }
    Ok(probes.iter().all(|v| matrix_side(v) == frieze_side(v)))
}
