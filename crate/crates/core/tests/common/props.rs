//! Randomized identities, each checked on 100 seeded instances.

use jfrieze_core::construct::{det_formula_entry, twist_product};
use jfrieze_core::rational::int;
use jfrieze_core::recurrence::{
    kernel_correspondence, residual, solution_matrix, tiling, verify_superperiodic_kernel,
};
use jfrieze_core::*;
use num_traits::Zero;
use rand::Rng;

use super::gen::*;

pub const INSTANCES: usize = 100;

pub type Check = std::result::Result<(), String>;

/// A named check.
pub type Named = (&'static str, fn() -> Check);

/// Every property, in the order the acceptance report lists them.
pub const ALL: &[Named] = &[
    ("dual of dual juggling function", dual_of_dual_pi),
    ("ball count identity", ball_identity),
    ("double dual frieze", double_dual_frieze),
    ("determinant and twist paths agree", det_equals_twist),
    ("SL(k) invariance of F", sl_invariance),
    ("dualities triangle", dualities_triangle),
    ("minors of the dual", minor_duality),
    ("cofrieze minors", cofrieze_minors),
    ("rank versus kernel projection", rank_kernel),
    ("kernel correspondence", kernel_agrees),
    ("entries agree one period apart", entry_periodicity),
    ("solution matrix equals tiling of dual", solution_is_tiling),
    ("solution columns lie in the kernel", solutions_in_kernel),
    ("landing schedule columns span", schedule_span),
    ("F(A) is a frieze and inverts", frieze_round_trip),
    ("kernel test detects perturbations", kernel_test_detects),
];

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn each(seed: u64, mut f: impl FnMut(&mut rand_chacha::ChaCha8Rng, usize) -> Check) -> Check {
    let mut r = rng(seed);
    (0..INSTANCES).try_for_each(|i| f(&mut r, i).map_err(|e| format!("instance {i}: {e}")))
}

/// A random π-unimodular matrix together with F(A).
fn instance(r: &mut rand_chacha::ChaCha8Rng) -> (RationalMatrix, JugglingFunction, PeriodicFrieze) {
    let (a, pi) = random_unimodular(r);
    let c = build_frieze_det(&a, &pi).expect("generator yields unimodular matrices");
    (a, pi, c)
}

pub fn dual_of_dual_pi() -> Check {
    each(1, |r, _| {
        let n = r.gen_range(1..=12);
        let p = random_pi(r, n);
        ensure(p.dual().dual() == p, || format!("{p}"))
    })
}

pub fn ball_identity() -> Check {
    each(2, |r, _| {
        let n = r.gen_range(1..=12);
        let p = random_pi(r, n);
        let d = p.dual();
        let balls = p.num_balls() as i64;
        let n = n as i64;
        (-n..2 * n).try_for_each(|a| {
            let pa = p.eval(a);
            let lhs = pa - a + d.s_set(pa, a + n).len() as i64 - p.s_set(a, pa).len() as i64;
            ensure(lhs == balls, || format!("{p} at {a}: {lhs} != {balls}"))
        })
    })
}

pub fn double_dual_frieze() -> Check {
    each(3, |r, _| {
        let (_, pi, c) = instance(r);
        ensure(c.dual_frieze().dual_frieze() == c, || format!("shape {}", pi.dual()))
    })
}

pub fn det_equals_twist() -> Check {
    each(4, |r, _| {
        let (a, pi, c) = instance(r);
        let t = build_frieze_twist(&a, &pi).map_err(|e| e.to_string())?;
        ensure(t == c, || format!("{pi}: twist path differs\n{a}"))
    })
}

pub fn sl_invariance() -> Check {
    each(5, |r, _| {
        let (a, pi, c) = instance(r);
        let g = random_sl(r, a.rows());
        let moved = build_frieze_det(&g.mul(&a).unwrap(), &pi).map_err(|e| e.to_string())?;
        ensure(moved == c, || format!("{pi}"))
    })
}

pub fn dualities_triangle() -> Check {
    each(6, |r, _| {
        let (a, pi, c) = instance(r);
        let d = pi.dual();
        let dual = c.dual_frieze();
        let via_twist = positive_complement(&twist(&a, &pi).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let via_inverse =
            inverse_twist(&positive_complement(&a).map_err(|e| e.to_string())?, &d).map_err(|e| e.to_string())?;
        let f1 = build_frieze_det(&via_twist, &d).map_err(|e| e.to_string())?;
        let f2 = build_frieze_det(&via_inverse, &d).map_err(|e| e.to_string())?;
        ensure(f1 == dual && f2 == dual, || format!("{pi}"))
    })
}

pub fn minor_duality() -> Check {
    each(7, |r, _| {
        let (_, _, c) = instance(r);
        let dual = c.dual_frieze();
        let n = c.period() as i64;
        let a = r.gen_range(-n..=n);
        let b = a + r.gen_range(0..n);
        let window: Vec<i64> = (a..=b).collect();
        let size = r.gen_range(0..=window.len());
        let i = random_subset(r, &window, size);
        let j = random_subset(r, &window, size);
        let not = |s: &[i64]| window.iter().copied().filter(|x| !s.contains(x)).collect::<Vec<_>>();
        let lhs = dual.minor(&i, &j);
        let rhs = c.minor(&not(&j), &not(&i));
        ensure(lhs == rhs, || format!("[{a},{b}] I={i:?} J={j:?}: {lhs} != {rhs}"))
    })
}

pub fn cofrieze_minors() -> Check {
    each(8, |r, _| {
        let (_, _, c) = instance(r);
        let s = c.shape();
        let n = c.period() as i64;
        let a = r.gen_range(1..=n);
        let b = a + r.gen_range(1..=n);
        let cols = s.s_set(a, b);
        let mut rows: Vec<i64> = cols.iter().map(|&i| s.eval(i)).collect();
        rows.sort_unstable();
        let det = c.minor(&rows, &cols);
        ensure(det == int(1), || format!("{s} a={a} b={b}: {det}"))
    })
}

pub fn rank_kernel() -> Check {
    each(9, |r, _| {
        let n = r.gen_range(1..=8);
        let k = r.gen_range(1..=n);
        let a = loop {
            let rows: Vec<Vec<i64>> =
                (0..k).map(|_| (0..n).map(|_| if r.gen_bool(0.6) { r.gen_range(-3..=3) } else { 0 }).collect()).collect();
            let a = RationalMatrix::from_ints(&rows);
            if a.rank() == k {
                break a;
            }
        };
        let cols: Vec<i64> = (0..n as i64).collect();
        let size = r.gen_range(0..=n);
        let i: Vec<usize> = random_subset(r, &cols, size).into_iter().map(|x| x as usize).collect();
        let rest: Vec<usize> = (0..n).filter(|x| !i.contains(x)).collect();
        let kernel = a.kernel_basis();
        let projected = if kernel.rows() == 0 { 0 } else { kernel.select_columns(&rest).rank() };
        let lhs = a.select_columns(&i).rank() as i64;
        let rhs = projected as i64 + i.len() as i64 - (n - k) as i64;
        ensure(lhs == rhs, || format!("I={i:?}: {lhs} != {rhs}\n{a}"))
    })
}

pub fn kernel_agrees() -> Check {
    each(10, |r, _| {
        let (a, pi) = random_unimodular(r);
        let ok = kernel_correspondence(&a, &pi).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{pi}\n{a}"))
    })
}

pub fn entry_periodicity() -> Check {
    each(11, |r, _| {
        let (a, pi, _) = instance(r);
        let strip = build_frieze_twist(&a, &pi).map_err(|e| e.to_string())?;
        let n = pi.period() as i64;
        (1..=n).try_for_each(|b| {
            (b - 1..=b + n + 1).try_for_each(|row| {
                let here = det_formula_entry(&a, &pi, row, b);
                let there = det_formula_entry(&a, &pi, row + n, b + n);
                let twisted = strip.entry(row + n, b + n);
                ensure(here == there && here == twisted, || format!("{pi} at ({row},{b})"))
            })
        })
    })
}

pub fn solution_is_tiling() -> Check {
    each(12, |r, _| {
        let (_, _, c) = instance(r);
        let sol = solution_matrix(&c).map_err(|e| e.to_string())?;
        let til = tiling(&c.dual_frieze());
        let n = c.period() as i64;
        ensure(sol.sign_exponent().rem_euclid(2) == til.sign_exponent().rem_euclid(2), || "sign".into())?;
        (1..=n).try_for_each(|b| {
            (b - 2 * n..b + 2 * n).try_for_each(|a| {
                ensure(sol.value(a, b) == til.value(a, b), || format!("{} at ({a},{b})", c.shape()))
            })
        })
    })
}

pub fn solutions_in_kernel() -> Check {
    each(13, |r, _| {
        let (_, _, c) = instance(r);
        let sol = solution_matrix(&c).map_err(|e| e.to_string())?;
        let n = c.period() as i64;
        (1..=n).try_for_each(|b| {
            let x = sol.sequence(b, b - 2 * n, b + 2 * n);
            (b - n..=b + 2 * n).try_for_each(|a| {
                let res = residual(&c, &x, a).map_err(|e| e.to_string())?;
                ensure(res.is_zero(), || format!("{} column {b} row {a}: {res}", c.shape()))
            })
        })
    })
}

pub fn schedule_span() -> Check {
    each(14, |r, _| {
        let (_, _, c) = instance(r);
        let sol = solution_matrix(&c).map_err(|e| e.to_string())?;
        let s = c.shape();
        let h = s.num_balls();
        (1..=c.period() as i64).try_for_each(|a| {
            let block = sol.block(&s.landing_schedule(a), a);
            let rank = block.rank();
            ensure(rank == h, || format!("{s} at {a}: rank {rank} != {h}"))
        })
    })
}

pub fn frieze_round_trip() -> Check {
    each(15, |r, _| {
        let (a, pi, c) = instance(r);
        ensure(c.is_frieze(), || format!("{pi}: F(A) fails the frieze conditions"))?;
        let back = frieze_to_matrix(&c).map_err(|e| e.to_string())?;
        ensure(same_plucker(&back, &a), || format!("{pi}: round trip changed the Plücker vector"))?;
        let tw = twist(&a, &pi).map_err(|e| e.to_string())?;
        let cert = is_pi_unimodular(&tw, &pi).map_err(|e| e.to_string())?;
        ensure(cert.passes(), || format!("{pi}: twist is not unimodular"))?;
        let p = twist_product(&a, &pi).map_err(|e| e.to_string())?;
        ensure(p.rows() == pi.period(), || "product shape".into())
    })
}

pub fn kernel_test_detects() -> Check {
    each(16, |r, _| {
        let (_, _, c) = instance(r);
        ensure(verify_superperiodic_kernel(&c), || format!("{}: frieze rejected", c.shape()))?;
        let n = c.period() as i64;
        let b = r.gen_range(1..=n);
        let free: Vec<i64> = (b..=b + n).filter(|&a| c.forced_value(a, b).is_none()).collect();
        if free.is_empty() {
            return Ok(());
        }
        let a = free[r.gen_range(0..free.len())];
        let bumped = c.with_entry(a, b, c.entry(a, b) + int(r.gen_range(1..=3))).map_err(|e| e.to_string())?;
        let frieze = bumped.is_frieze();
        let kernel = verify_superperiodic_kernel(&bumped);
        ensure(frieze == kernel, || format!("{} bumped at ({a},{b}): frieze {frieze}, kernel {kernel}", c.shape()))
    })
}
