//! From matrices to friezes and back.
//!
//! A k x n matrix `A` is π-unimodular when every necklace minor
//! `det(A_{L_a})` is 1 and `rank(A_{[a,b]}) <= |L_a ∩ [a,b]|`. Such a matrix
//! determines a frieze `F(A)` of shape `π†`, either directly by maximal
//! minors or through the twist `τ(A)` and the product `τ(A)ᵀ A`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::frieze::PeriodicFrieze;
use crate::juggling::{residue, JugglingFunction};
use crate::matrix::{k_subsets, residue_columns, RationalMatrix};
use crate::rational::{self, Rational};

/// Which unimodularity notion a certificate records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// All cyclically consecutive maximal minors are 1.
    Consecutive,
    /// Necklace minors are 1 and interval ranks respect the landing schedules.
    Positroid,
}

/// One required minor and its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedMinor {
    /// Index `a` of the window or landing schedule.
    pub a: usize,
    /// Column residues, ascending, 1-based.
    pub columns: Vec<usize>,
    /// The determinant found.
    pub determinant: Rational,
}

/// An interval whose rank exceeds the landing-schedule bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankViolation {
    /// Left end.
    pub a: i64,
    /// Right end.
    pub b: i64,
    /// `rank(A_{[a,b]})`.
    pub rank: usize,
    /// `|L_a ∩ [a,b]|`.
    pub allowed: usize,
}

/// Evidence for (or against) unimodularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularCertificate {
    /// Which test was run.
    pub kind: CertificateKind,
    /// Every required minor with its determinant.
    pub checked_minors: Vec<CheckedMinor>,
    /// Intervals breaking the rank bound.
    pub rank_violations: Vec<RankViolation>,
}

impl UnimodularCertificate {
    /// Required minors whose determinant is not 1.
    pub fn failing_minors(&self) -> Vec<&CheckedMinor> {
        self.checked_minors.iter().filter(|m| !m.determinant.is_one()).collect()
    }

    /// No failing minor and no rank violation.
    pub fn passes(&self) -> bool {
        self.failing_minors().is_empty() && self.rank_violations.is_empty()
    }

    fn summary(&self) -> alloc::string::String {
        if let Some(m) = self.failing_minors().first() {
            alloc::format!(
                "minor on columns {:?} (a = {}) is {}",
                m.columns,
                m.a,
                rational::format(&m.determinant)
            )
        } else if let Some(r) = self.rank_violations.first() {
            alloc::format!(
                "rank of columns [{}, {}] is {}, bound is {}",
                r.a,
                r.b,
                r.rank,
                r.allowed
            )
        } else {
            "passes".into()
        }
    }
}

/// Certificate that every cyclic window of `k` consecutive columns has minor 1.
pub fn consecutive_certificate(a: &RationalMatrix) -> Result<UnimodularCertificate> {
    let (k, n) = (a.rows(), a.cols());
    if k > n {
        return Err(Error::Dimension(alloc::format!("{k}x{n} matrix has more rows than columns")));
    }
    let checked_minors = (1..=n)
        .map(|s| {
            let window: Vec<i64> = (s as i64..(s + k) as i64).collect();
            let m = a.cyclic_submatrix(&window, n).expect("n columns");
            CheckedMinor {
                a: s,
                columns: residue_columns(&window, n).iter().map(|c| c + 1).collect(),
                determinant: m.det().expect("k x k"),
            }
        })
        .collect();
    Ok(UnimodularCertificate {
        kind: CertificateKind::Consecutive,
        checked_minors,
        rank_violations: Vec::new(),
    })
}

/// `det(A_{[a,a+k-1]}) = 1` for every `a` in `[1, n]`.
pub fn is_consecutively_unimodular(a: &RationalMatrix) -> Result<bool> {
    Ok(consecutive_certificate(a)?.passes())
}

fn check_dims(a: &RationalMatrix, pi: &JugglingFunction) -> Result<()> {
    if a.cols() != pi.period() || a.rows() != pi.num_balls() {
        return Err(Error::Dimension(alloc::format!(
            "a {}x{} matrix does not fit a juggling function with {} balls and period {}",
            a.rows(),
            a.cols(),
            pi.num_balls(),
            pi.period()
        )));
    }
    Ok(())
}

fn necklace_minor(a: &RationalMatrix, pi: &JugglingFunction, s: i64) -> CheckedMinor {
    let n = pi.period();
    let l = pi.landing_schedule(s);
    let m = a.cyclic_submatrix(&l, n).expect("n columns");
    CheckedMinor {
        a: s as usize,
        columns: residue_columns(&l, n).iter().map(|c| c + 1).collect(),
        determinant: m.det().expect("k x k"),
    }
}

/// Necklace minors and interval rank bounds for every `a` in `[1, n]`,
/// `a <= b < a + n`. The kind is `Consecutive` for uniform `π`.
pub fn is_pi_unimodular(a: &RationalMatrix, pi: &JugglingFunction) -> Result<UnimodularCertificate> {
    check_dims(a, pi)?;
    let n = pi.period() as i64;
    let checked_minors = (1..=n).map(|s| necklace_minor(a, pi, s)).collect();
    let mut rank_violations = Vec::new();
    for s in 1..=n {
        let l = pi.landing_schedule(s);
        for b in s..s + n {
            let interval: Vec<i64> = (s..=b).collect();
            let rank = a.cyclic_submatrix(&interval, n as usize)?.rank();
            let allowed = l.iter().filter(|&&x| x <= b).count();
            if rank > allowed {
                rank_violations.push(RankViolation { a: s, b, rank, allowed });
            }
        }
    }
    let kind = if pi.is_uniform() { CertificateKind::Consecutive } else { CertificateKind::Positroid };
    Ok(UnimodularCertificate { kind, checked_minors, rank_violations })
}

fn require_unimodular(a: &RationalMatrix, pi: &JugglingFunction) -> Result<()> {
    let cert = is_pi_unimodular(a, pi)?;
    if cert.passes() {
        Ok(())
    } else {
        Err(Error::NotUnimodular(cert.summary()))
    }
}

/// The twist `τ(A)`.
///
/// For a non-loop `a`, column `a` is the unique `x` with `x · A_b = 1` for
/// `b = a` and `0` for the other `b` in `L_a`. Loops give zero columns.
pub fn twist(a: &RationalMatrix, pi: &JugglingFunction) -> Result<RationalMatrix> {
    check_dims(a, pi)?;
    let (k, n) = (a.rows(), a.cols());
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for s in 1..=n as i64 {
        if pi.is_loop(s) {
            columns.push(alloc::vec![Rational::zero(); k]);
            continue;
        }
        let l = pi.landing_schedule(s);
        let m = a.cyclic_submatrix(&l, n)?;
        let d = m.det()?;
        if !d.is_one() {
            return Err(Error::NotUnimodular(alloc::format!(
                "necklace minor at a = {s} is {}",
                rational::format(&d)
            )));
        }
        let pos = residue_columns(&l, n)
            .iter()
            .position(|&c| c + 1 == residue(s, n))
            .expect("a lies in its own landing schedule");
        let mut e = alloc::vec![Rational::zero(); k];
        e[pos] = Rational::one();
        columns.push(m.transpose().solve_square(&e)?);
    }
    let rows = (0..k).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    RationalMatrix::from_rows(n, rows)
}

/// A positive complement `A‡`: an `(n-k) x n` matrix with
/// `det(A_I) = det(A‡_{[n] \ I})` for every k-subset `I`.
///
/// Kernel basis, odd columns negated, first row rescaled by the constant
/// read off one nonzero minor; the identity is then checked on every subset.
pub fn positive_complement(a: &RationalMatrix) -> Result<RationalMatrix> {
    let (k, n) = (a.rows(), a.cols());
    let rank = a.rank();
    if rank < k {
        return Err(Error::RankDeficient { rank, expected: k });
    }
    let kernel = a.kernel_basis();
    let rows: Vec<Vec<Rational>> = kernel
        .to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter().enumerate().map(|(j, x)| if j % 2 == 0 { -x } else { x }).collect()
        })
        .collect();
    let mut b = RationalMatrix::from_rows(n, rows)?;
    let complement = |s: &[usize]| -> Vec<usize> { (0..n).filter(|j| !s.contains(j)).collect() };
    let subsets = k_subsets(n, k);
    let pivot = subsets
        .iter()
        .map(|s| (s, a.select_columns(s).det().expect("k x k")))
        .find(|(_, d)| !d.is_zero())
        .expect("a rank k matrix has a nonzero maximal minor");
    let db = b.select_columns(&complement(pivot.0)).det()?;
    let lambda = db / &pivot.1;
    if lambda.is_zero() {
        return Err(Error::ComplementMismatch { subset: pivot.0.iter().map(|c| c + 1).collect() });
    }
    if b.rows() > 0 {
        b = b.scale_row(0, &lambda.recip());
    }
    for s in &subsets {
        let lhs = a.select_columns(s).det()?;
        let rhs = b.select_columns(&complement(s)).det()?;
        if lhs != rhs {
            return Err(Error::ComplementMismatch { subset: s.iter().map(|c| c + 1).collect() });
        }
    }
    Ok(b)
}

/// Equal shapes and equal maximal minors: the same point of the Grassmannian
/// with the same normalization, i.e. the same left SL(k)-orbit.
pub fn same_plucker(a: &RationalMatrix, b: &RationalMatrix) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && a.maximal_minors().into_iter().zip(b.maximal_minors()).all(|(x, y)| x.1 == y.1)
}

/// Inverse of the twist: a π-unimodular `M` with `τ(M)` in the SL(k)-orbit of `B`.
///
/// Computed as `(τ(B‡))‡`, the twist taken with respect to `π†`.
pub fn inverse_twist(b: &RationalMatrix, pi: &JugglingFunction) -> Result<RationalMatrix> {
    require_unimodular(b, pi)?;
    let dual = pi.dual();
    let bc = positive_complement(b)?;
    let t = twist(&bc, &dual)?;
    let m = positive_complement(&t)?;
    if !same_plucker(&twist(&m, pi)?, b) {
        return Err(Error::RoundTrip("twist of the inverse twist differs".into()));
    }
    Ok(m)
}

/// `F(A)_{a,b}` evaluated at the given integers, without periodic reduction.
///
/// Assumes `A` is π-unimodular.
pub fn det_formula_entry(a_mat: &RationalMatrix, pi: &JugglingFunction, a: i64, b: i64) -> Rational {
    let n = pi.period() as i64;
    let pa = pi.eval(a);
    if b <= a && a < b + n && a < pa {
        let mut set: Vec<i64> = pi.landing_schedule(a).into_iter().filter(|&x| x != a).collect();
        if set.iter().any(|&x| (x - b).rem_euclid(n) == 0) {
            return Rational::zero();
        }
        set.push(b);
        let m = a_mat.cyclic_submatrix(&set, n as usize).expect("n columns");
        let sign = rational::sign(pi.dual().s_set(b, a).len() as i64);
        sign * m.det().expect("k x k")
    } else if pa == a && a == b {
        Rational::one()
    } else if pa == a && a == b + n {
        rational::sign(pi.num_balls() as i64)
    } else {
        Rational::zero()
    }
}

/// `F(A)`, the frieze of shape `π†` whose entries are signed maximal minors of `A`.
pub fn build_frieze_det(a: &RationalMatrix, pi: &JugglingFunction) -> Result<PeriodicFrieze> {
    require_unimodular(a, pi)?;
    PeriodicFrieze::from_fn(pi.dual(), |r, c| det_formula_entry(a, pi, r, c))
}

/// The n x n product `τ(A)ᵀ A`.
pub fn twist_product(a: &RationalMatrix, pi: &JugglingFunction) -> Result<RationalMatrix> {
    twist(a, pi)?.transpose().mul(a)
}

/// `F(A)` through the twist: entries of `τ(A)ᵀ A` on or below the diagonal
/// are placed as they are, entries above it move down by one period with the
/// sign `(-1)^{k-1}`, and each loop splits its diagonal 0 into `1` and `(-1)^k`.
pub fn build_frieze_twist(a: &RationalMatrix, pi: &JugglingFunction) -> Result<PeriodicFrieze> {
    require_unimodular(a, pi)?;
    let p = twist_product(a, pi)?;
    let n = pi.period() as i64;
    let k = pi.num_balls() as i64;
    PeriodicFrieze::from_fn(pi.dual(), |r, c| {
        let d = r - c;
        if d == n {
            return if pi.is_loop(c) { rational::sign(k) } else { Rational::zero() };
        }
        if d == 0 && pi.is_loop(c) {
            return Rational::one();
        }
        let (ra, cb) = (residue(r, n as usize), residue(c, n as usize));
        let v = p.get(ra - 1, cb - 1).clone();
        if ra >= cb {
            v
        } else {
            rational::sign(k - 1) * v
        }
    })
}

/// Recover a π-unimodular `A` with `F(A) = C` from a frieze `C` of shape `π†`.
///
/// The superperiodic solutions `C q(v) = 0` (one period of rows) form the
/// kernel of `A`; `A` spans its orthogonal complement, normalized so that
/// `det(A_{L_1}) = 1`. The result is checked by rebuilding `C`.
pub fn frieze_to_matrix(c: &PeriodicFrieze) -> Result<RationalMatrix> {
    let sigma = c.shape();
    let pi = sigma.dual();
    let n = sigma.period();
    let k = pi.num_balls();
    let system = superperiodic_system(c, k);
    let v = system.kernel_basis();
    if v.rows() != n - k {
        return Err(Error::KernelDimension { found: v.rows(), expected: n - k });
    }
    let a0 = v.kernel_basis();
    let d = a0.cyclic_submatrix(&pi.landing_schedule(1), n)?.det()?;
    if d.is_zero() {
        return Err(Error::ZeroNormalization);
    }
    let a = if k > 0 { a0.scale_row(0, &d.recip()) } else { a0 };
    let cert = is_pi_unimodular(&a, &pi)?;
    if !cert.passes() {
        return Err(Error::RoundTrip(alloc::format!("recovered matrix: {}", cert.summary())));
    }
    if build_frieze_det(&a, &pi)? != *c {
        return Err(Error::RoundTrip("rebuilt frieze differs from the input".into()));
    }
    Ok(a)
}

/// The n x n matrix `E` with `(E v)_a = (C q_{(k,n)}(v))_a` for `a` in `[1, n]`.
pub fn superperiodic_system(c: &PeriodicFrieze, k: usize) -> RationalMatrix {
    let n = c.period();
    let ni = n as i64;
    let mut rows = alloc::vec![alloc::vec![Rational::zero(); n]; n];
    for a in 1..=ni {
        for b in a - ni..=a {
            let x = c.entry(a, b);
            if x.is_zero() {
                continue;
            }
            let col = residue(b, n);
            let wraps = (b - col as i64) / ni;
            rows[(a - 1) as usize][col - 1] += rational::sign((k as i64 - 1) * wraps) * x;
        }
    }
    RationalMatrix::from_rows(n, rows).expect("square")
}
