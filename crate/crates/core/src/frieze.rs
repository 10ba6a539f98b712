//! Periodic friezes shaped by a juggling function.
//!
//! A frieze is a `Z x Z` lower unitriangular array `C` with `C_{a,b} = 0`
//! unless `π^{-1}(a) <= b <= a <= π(b)`. Only one fundamental domain is
//! stored: for each `b` in `[1, n]`, the entries `C_{a,b}` with `a` in
//! `[b, b + n]`. Every other entry follows from `C_{a+n,b+n} = C_{a,b}`.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::juggling::JugglingFunction;
use crate::matrix::RationalMatrix;
use crate::rational::{self, Rational};

/// One fundamental domain of a periodic frieze.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicFrieze {
    shape: JugglingFunction,
    columns: Vec<Vec<Rational>>,
}

/// A diamond whose determinant is not the required value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondFailure {
    /// Left end of the interval.
    pub a: i64,
    /// Right end of the interval.
    pub b: i64,
    /// The determinant found.
    pub determinant: Rational,
}

/// An entry breaking a boundary or vanishing condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryViolation {
    /// Row.
    pub a: i64,
    /// Column.
    pub b: i64,
    /// Stored value.
    pub found: Rational,
    /// Value forced by the shape.
    pub expected: Rational,
}

/// Evidence for the prefrieze, frieze and tameness conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezeReport {
    /// Boundary and vanishing conditions hold.
    pub prefrieze_ok: bool,
    /// Frieze diamonds whose determinant is not 1, sorted by `(a, b)`.
    pub frieze_failures: Vec<DiamondFailure>,
    /// Tameness diamonds whose determinant is not 0, sorted by `(a, b)`.
    pub tame_failures: Vec<DiamondFailure>,
    /// Number of diamonds evaluated.
    pub checked_pairs: usize,
}

impl FriezeReport {
    /// Every condition holds.
    pub fn is_frieze(&self) -> bool {
        self.prefrieze_ok && self.frieze_failures.is_empty() && self.tame_failures.is_empty()
    }
}

impl PeriodicFrieze {
    /// From columns `b = 1..=n`, each listing `C_{b,b}, ..., C_{b+n,b}`.
    pub fn new(shape: JugglingFunction, columns: Vec<Vec<Rational>>) -> Result<Self> {
        let n = shape.period();
        if columns.len() != n {
            return Err(Error::InvalidFrieze(alloc::format!(
                "expected {n} columns, got {}",
                columns.len()
            )));
        }
        for (i, c) in columns.iter().enumerate() {
            if c.len() != n + 1 {
                return Err(Error::InvalidFrieze(alloc::format!(
                    "column {} has {} entries, expected {}",
                    i + 1,
                    c.len(),
                    n + 1
                )));
            }
            if !c[0].is_one() {
                return Err(Error::InvalidFrieze(alloc::format!(
                    "diagonal entry C_{{{0},{0}}} is {1}, expected 1",
                    i + 1,
                    rational::format(&c[0])
                )));
            }
        }
        Ok(PeriodicFrieze { shape, columns })
    }

    /// Tabulate `f(a, b)` over the fundamental domain.
    pub fn from_fn(shape: JugglingFunction, mut f: impl FnMut(i64, i64) -> Rational) -> Result<Self> {
        let n = shape.period() as i64;
        let columns = (1..=n).map(|b| (b..=b + n).map(|a| f(a, b)).collect()).collect();
        Self::new(shape, columns)
    }

    /// The shape `π`.
    pub fn shape(&self) -> &JugglingFunction {
        &self.shape
    }

    /// Period `n`.
    pub fn period(&self) -> usize {
        self.shape.period()
    }

    /// Stored column `b` in `[1, n]`: `C_{b,b}, ..., C_{b+n,b}`.
    pub fn column(&self, b: usize) -> &[Rational] {
        &self.columns[b - 1]
    }

    /// `C_{a,b}` for any integers, 0 outside the stored band.
    pub fn entry(&self, a: i64, b: i64) -> Rational {
        let n = self.period() as i64;
        let shift = (b - 1).div_euclid(n) * n;
        let (a, b) = (a - shift, b - shift);
        let d = a - b;
        if d < 0 || d > n {
            return Rational::zero();
        }
        self.columns[(b - 1) as usize][d as usize].clone()
    }

    /// Copy with `C_{a,b}` (and its translates) replaced.
    pub fn with_entry(&self, a: i64, b: i64, value: Rational) -> Result<Self> {
        let n = self.period() as i64;
        let shift = (b - 1).div_euclid(n) * n;
        let (a, b) = (a - shift, b - shift);
        let d = a - b;
        if d < 0 || d > n {
            return Err(Error::InvalidFrieze(alloc::format!(
                "position ({a},{b}) is outside the stored band"
            )));
        }
        let mut columns = self.columns.clone();
        columns[(b - 1) as usize][d as usize] = value;
        Self::new(self.shape.clone(), columns)
    }

    /// The translate `C'_{a,b} = C_{a-t,b-t}`, of shape `a -> π(a - t) + t`.
    pub fn translate(&self, t: i64) -> PeriodicFrieze {
        let n = self.period() as i64;
        let shape = JugglingFunction::new((1..=n).map(|a| self.shape.eval(a - t) + t).collect())
            .expect("a translate of a juggling function is one");
        PeriodicFrieze::from_fn(shape, |a, b| self.entry(a - t, b - t)).expect("diagonal is 1")
    }

    /// `C_{R,K}` with rows and columns in the given order.
    pub fn submatrix(&self, rows: &[i64], cols: &[i64]) -> RationalMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &a in rows {
            for &b in cols {
                entries.push(self.entry(a, b));
            }
        }
        RationalMatrix::new(rows.len(), cols.len(), entries).expect("sized above")
    }

    /// `det(C_{R,K})`; rows and columns must have equal length.
    pub fn minor(&self, rows: &[i64], cols: &[i64]) -> Rational {
        self.submatrix(rows, cols).det().expect("minor of a non-square selection")
    }

    /// `π^{-1}(a) <= b <= a <= π(b)`: the only positions allowed to be nonzero.
    pub fn in_support(&self, a: i64, b: i64) -> bool {
        self.shape.inverse(a) <= b && b <= a && a <= self.shape.eval(b)
    }

    /// Value forced by the shape at `(a, b)`, or `None` when the entry is free.
    pub fn forced_value(&self, a: i64, b: i64) -> Option<Rational> {
        let pb = self.shape.eval(b);
        if a == b {
            Some(Rational::one())
        } else if a == pb {
            Some(rational::sign(self.shape.s_set(b, pb).len() as i64))
        } else if !self.in_support(a, b) {
            Some(Rational::zero())
        } else {
            None
        }
    }

    /// Stored entries that break a boundary or vanishing condition.
    pub fn prefrieze_violations(&self) -> Vec<EntryViolation> {
        let n = self.period() as i64;
        let mut out = Vec::new();
        for b in 1..=n {
            for a in b..=b + n {
                if let Some(expected) = self.forced_value(a, b) {
                    let found = self.entry(a, b);
                    if found != expected {
                        out.push(EntryViolation { a, b, found, expected });
                    }
                }
            }
        }
        out
    }

    /// Diagonal 1s, signed boundary, zeros outside the support.
    pub fn is_prefrieze(&self) -> bool {
        self.prefrieze_violations().is_empty()
    }

    /// Frieze diamond on `[a, b]`:
    /// `det(C_{[a,b] \ I, [a,b] \ π†(I)})` with `I = S_{π†}(a-1, b+1)`.
    pub fn frieze_diamond(&self, a: i64, b: i64) -> Rational {
        let dual = self.shape.dual();
        let removed: Vec<i64> = dual.s_set(a - 1, b + 1);
        let images: Vec<i64> = removed.iter().map(|&i| dual.eval(i)).collect();
        let rows: Vec<i64> = (a..=b).filter(|i| !removed.contains(i)).collect();
        let cols: Vec<i64> = (a..=b).filter(|i| !images.contains(i)).collect();
        self.minor(&rows, &cols)
    }

    /// Tameness diamond on `[a, b]`:
    /// `det(C_{(a,b] \ J, [a,b) \ π†(J)})` with `J = S_{π†}(a, b)`.
    pub fn tameness_diamond(&self, a: i64, b: i64) -> Rational {
        let dual = self.shape.dual();
        let removed: Vec<i64> = dual.s_set(a, b);
        let images: Vec<i64> = removed.iter().map(|&i| dual.eval(i)).collect();
        let rows: Vec<i64> = (a + 1..=b).filter(|i| !removed.contains(i)).collect();
        let cols: Vec<i64> = (a..b).filter(|i| !images.contains(i)).collect();
        self.minor(&rows, &cols)
    }

    /// Whether `[a, b]` is subject to the tameness condition:
    /// `π†(a) < b < a + n` or `b < a + n < π(b)`.
    pub fn tameness_applies(&self, a: i64, b: i64) -> bool {
        let n = self.period() as i64;
        let dual = self.shape.dual();
        (dual.eval(a) < b && b < a + n) || (b < a + n && a + n < self.shape.eval(b))
    }

    /// Evaluate every frieze diamond `[a, b]` with `a` in `[1, n]`, `a <= b < a + n`,
    /// and every tameness diamond in the same range that the shape subjects to it.
    pub fn check_frieze(&self) -> FriezeReport {
        let n = self.period() as i64;
        let mut frieze_failures = Vec::new();
        let mut tame_failures = Vec::new();
        let mut checked_pairs = 0;
        for a in 1..=n {
            for b in a..a + n {
                checked_pairs += 1;
                let d = self.frieze_diamond(a, b);
                if !d.is_one() {
                    frieze_failures.push(DiamondFailure { a, b, determinant: d });
                }
                if self.tameness_applies(a, b) {
                    checked_pairs += 1;
                    let d = self.tameness_diamond(a, b);
                    if !d.is_zero() {
                        tame_failures.push(DiamondFailure { a, b, determinant: d });
                    }
                }
            }
        }
        FriezeReport {
            prefrieze_ok: self.is_prefrieze(),
            frieze_failures,
            tame_failures,
            checked_pairs,
        }
    }

    /// Prefrieze with no failing frieze or tameness diamond.
    pub fn is_frieze(&self) -> bool {
        self.is_prefrieze() && self.check_frieze().is_frieze()
    }

    /// The n-truncated dual `C†`, of shape `π†`.
    ///
    /// `C†_{a,b} = det(C_{[b+1,a],[b,a-1]})` for `b <= a < b + n`. For a loop `b`
    /// of `π` the slot `(b + n, b)` is a coloop boundary of `π†` and carries
    /// `(-1)^{balls(π)}`; every other slot is 0.
    pub fn dual_frieze(&self) -> PeriodicFrieze {
        let n = self.period() as i64;
        let balls = self.shape.num_balls() as i64;
        PeriodicFrieze::from_fn(self.shape.dual(), |a, b| {
            if a < b + n {
                let rows: Vec<i64> = (b + 1..=a).collect();
                let cols: Vec<i64> = (b..a).collect();
                self.minor(&rows, &cols)
            } else if self.shape.is_loop(b) {
                rational::sign(balls)
            } else {
                Rational::zero()
            }
        })
        .expect("the empty minor on the diagonal is 1")
    }

    /// SL(k)-frieze of height `h`: uniform shape with `h` balls and period `h + k`.
    ///
    /// Checks the frieze conditions and, independently, that solid `k x k`
    /// minors are 1 and solid `(k+1) x (k+1)` minors are 0 inside the strip.
    pub fn is_sl_frieze(&self, k: usize, h: usize) -> Result<bool> {
        if h == 0 {
            return Err(Error::InvalidFrieze("height 0 is degenerate".into()));
        }
        let expected = JugglingFunction::uniform(h + k, h)?;
        if self.shape != expected {
            return Err(Error::InvalidFrieze(alloc::format!(
                "shape {} is not uniform with {h} balls and period {}",
                self.shape,
                h + k
            )));
        }
        if !self.is_frieze() {
            return Ok(false);
        }
        let (n, k, h) = (self.period() as i64, k as i64, h as i64);
        for b in 1..=n {
            for a in b..=b + h {
                let r: Vec<i64> = (a..a + k).collect();
                let c: Vec<i64> = (b..b + k).collect();
                if !self.minor(&r, &c).is_one() {
                    return Ok(false);
                }
                if b < a && a < b + h {
                    let r: Vec<i64> = (a..=a + k).collect();
                    let c: Vec<i64> = (b..=b + k).collect();
                    if !self.minor(&r, &c).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(-1)^{|S_π(b,a)|} C_{a,b} > 0` at every position not forced to be 0.
    pub fn is_positive(&self) -> bool {
        let n = self.period() as i64;
        (1..=n).all(|b| {
            (b..=b + n).filter(|&a| self.in_support(a, b)).all(|a| {
                let s = rational::sign(self.shape.s_set(b, a).len() as i64);
                (s * self.entry(a, b)).is_positive()
            })
        })
    }
}

/// All positive integral SL(2)-friezes of height `h` whose second row
/// (the quiddity row `C_{b+1,b}`) has entries in `[1, bound]`.
///
/// Depth-first over quiddity rows of period `h + 2`. Each column is grown
/// with the continuant rule `C_{b+j+1,b} = c_{b+j} C_{b+j,b} - C_{b+j-1,b}`,
/// which is the SL(2) diamond rule solved for the lower entry; branches with
/// a nonpositive interior entry or a wrong boundary are cut. Translates are
/// distinct results unless they agree entrywise. Lexicographic in the quiddity row.
pub fn enumerate_sl2_positive(h: usize, bound: u64) -> Result<Vec<PeriodicFrieze>> {
    if h == 0 {
        return Err(Error::InvalidFrieze("height 0 is degenerate".into()));
    }
    let n = h + 2;
    let shape = JugglingFunction::uniform(n, h)?;
    let mut found = Vec::new();
    let mut quiddity = Vec::with_capacity(n);
    dfs(n, h, bound as i64, &mut quiddity, &mut |q| {
        let columns = (0..n).map(|b| continuant_column(q, b, n)).collect();
        found.push(PeriodicFrieze::new(shape.clone(), columns).expect("diagonal is 1"));
    });
    Ok(found)
}

fn dfs(n: usize, h: usize, bound: i64, q: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if q.len() == n {
        if (0..n).all(|b| column_ok(q, b, h, true)) {
            emit(q);
        }
        return;
    }
    for c in 1..=bound {
        q.push(c);
        if (0..q.len()).all(|b| column_ok(q, b, h, false)) {
            dfs(n, h, bound, q, emit);
        }
        q.pop();
    }
}

// Continuant entries m_0 = 1, m_1 = c_b, ... of column b, as far as the
// known quiddity entries allow (cyclically when `wrap`), up to m_{h+1}.
fn column_ok(q: &[i64], b: usize, h: usize, wrap: bool) -> bool {
    let n = q.len();
    let (mut prev, mut cur) = (0i64, 1i64);
    for j in 1..=h + 1 {
        let idx = b + j - 1;
        if !wrap && idx >= n {
            return true;
        }
        let next = q[idx % n] * cur - prev;
        prev = cur;
        cur = next;
        let ok = match j.cmp(&h) {
            core::cmp::Ordering::Less => cur > 0,
            core::cmp::Ordering::Equal => cur == 1,
            core::cmp::Ordering::Greater => cur == 0,
        };
        if !ok {
            return false;
        }
    }
    true
}

fn continuant_column(q: &[i64], b: usize, n: usize) -> Vec<Rational> {
    let mut col = Vec::with_capacity(n + 1);
    let (mut prev, mut cur) = (0i64, 1i64);
    col.push(rational::int(1));
    for j in 1..=n {
        let next = q[(b + j - 1) % n] * cur - prev;
        prev = cur;
        cur = next;
        col.push(rational::int(cur));
    }
    // Past the bottom boundary the strip is zero; the recurrence would
    // continue into the negated copy below it.
    for v in col.iter_mut().skip(n - 1) {
        *v = Rational::zero();
    }
    col
}
