//! Seeded instance generators for property tests.

use jfrieze_core::frieze::PeriodicFrieze;
use jfrieze_core::juggling::residue;
use jfrieze_core::rational::int;
use jfrieze_core::*;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random residue permutation, with a coin flip between 0 and n for fixed points.
pub fn random_pi(r: &mut ChaCha8Rng, n: usize) -> JugglingFunction {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(r);
    let throws: Vec<i64> = (1..=n)
        .map(|i| {
            let t = (perm[i - 1] as i64 - i as i64).rem_euclid(n as i64);
            if t == 0 && r.gen_bool(0.5) {
                n as i64
            } else {
                t
            }
        })
        .collect();
    JugglingFunction::from_throws(&throws).unwrap()
}

/// Product of random elementary matrices: determinant 1, small integer entries.
pub fn random_sl(r: &mut ChaCha8Rng, k: usize) -> RationalMatrix {
    let mut g = RationalMatrix::identity(k);
    if k < 2 {
        return g;
    }
    for _ in 0..2 * k {
        let i = r.gen_range(0..k);
        let mut j = r.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        let t = r.gen_range(-2i64..=2);
        let mut e = RationalMatrix::identity(k);
        e = e.with_entry(i, j, int(t));
        g = e.mul(&g).unwrap();
    }
    g
}

/// Quiddity row of a uniformly chosen triangulation of an m-gon.
pub fn random_quiddity(r: &mut ChaCha8Rng, m: usize) -> Vec<i64> {
    fn go(r: &mut ChaCha8Rng, verts: &[usize], q: &mut [i64]) {
        if verts.len() < 3 {
            return;
        }
        let apex = r.gen_range(1..verts.len() - 1);
        q[verts[0]] += 1;
        q[verts[apex]] += 1;
        q[*verts.last().unwrap()] += 1;
        go(r, &verts[..=apex], q);
        go(r, &verts[apex..], q);
    }
    let verts: Vec<usize> = (0..m).collect();
    let mut q = vec![0; m];
    go(r, &verts, &mut q);
    q
}

/// SL(2) frieze of height m - 2 with the given quiddity row.
pub fn frieze_from_quiddity(q: &[i64]) -> PeriodicFrieze {
    let n = q.len();
    let h = n - 2;
    let shape = JugglingFunction::uniform(n, h).unwrap();
    let columns = (0..n)
        .map(|b| {
            let mut col = vec![int(1)];
            let (mut prev, mut cur) = (0i64, 1i64);
            for j in 1..=n {
                let next = q[(b + j - 1) % n] * cur - prev;
                prev = cur;
                cur = next;
                col.push(if j <= h { int(cur) } else { int(0) });
            }
            col
        })
        .collect();
    PeriodicFrieze::new(shape, columns).unwrap()
}

/// The juggling function of a full-rank matrix: its lex-min Grassmann necklace
/// read as a bounded affine permutation.
pub fn juggling_of(a: &RationalMatrix) -> JugglingFunction {
    let (k, n) = (a.rows(), a.cols());
    let necklace: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut basis: Vec<usize> = Vec::new();
            for off in 0..n {
                let c = (s + off) % n;
                let mut trial = basis.clone();
                trial.push(c);
                if a.select_columns(&trial).rank() == trial.len() {
                    basis = trial;
                }
                if basis.len() == k {
                    break;
                }
            }
            basis.sort_unstable();
            basis
        })
        .collect();
    let values: Vec<i64> = (0..n)
        .map(|s| {
            let here = &necklace[s];
            let next = &necklace[(s + 1) % n];
            let a1 = s as i64 + 1;
            if !here.contains(&s) {
                a1
            } else if here == next {
                a1 + n as i64
            } else {
                let land = *next.iter().find(|c| !here.contains(c)).unwrap();
                let r = land as i64 + 1;
                a1 + (r - a1).rem_euclid(n as i64)
            }
        })
        .collect();
    JugglingFunction::new(values).unwrap()
}

/// Scale columns, then the first row, so every necklace minor becomes 1.
/// Fails when the cycles of `π` impose inconsistent ratios.
pub fn normalize_necklace(a: &RationalMatrix, pi: &JugglingFunction) -> Option<RationalMatrix> {
    let n = pi.period();
    let delta: Vec<Rational> = (1..=n as i64)
        .map(|s| a.cyclic_submatrix(&pi.landing_schedule(s), n).unwrap().det().unwrap())
        .collect();
    if delta.iter().any(Zero::is_zero) {
        return None;
    }
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 1..=n {
        let s = start as i64;
        if d[start - 1].is_some() {
            continue;
        }
        d[start - 1] = Some(Rational::one());
        if pi.is_loop(s) || pi.is_coloop(s) {
            continue;
        }
        let mut cur = start;
        loop {
            let next = residue(pi.eval(cur as i64), n);
            let want = d[cur - 1].clone().unwrap() * &delta[cur - 1] / &delta[cur % n];
            match &d[next - 1] {
                Some(v) if *v == want => break,
                Some(_) => return None,
                None => d[next - 1] = Some(want),
            }
            cur = next;
        }
    }
    let rows = a
        .to_rows()
        .into_iter()
        .map(|row| row.into_iter().zip(&d).map(|(x, s)| x * s.as_ref().unwrap()).collect())
        .collect();
    let b = RationalMatrix::from_rows(n, rows).unwrap();
    let d1 = b.cyclic_submatrix(&pi.landing_schedule(1), n).unwrap().det().unwrap();
    Some(if b.rows() > 0 { b.scale_row(0, &d1.recip()) } else { b })
}

/// Sparse random integer matrix of full rank, normalized for its own juggling function.
pub fn random_envelope(r: &mut ChaCha8Rng, k: usize, n: usize) -> Option<(RationalMatrix, JugglingFunction)> {
    let density = r.gen_range(0.35..0.9);
    let rows: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..n).map(|_| if r.gen_bool(density) { r.gen_range(-2..=2) } else { 0 }).collect())
        .collect();
    let a = RationalMatrix::from_ints(&rows);
    if a.rank() < k {
        return None;
    }
    let pi = juggling_of(&a);
    let b = normalize_necklace(&a, &pi)?;
    Some((b, pi))
}

/// A π-unimodular matrix drawn from one of several families, left-multiplied by
/// a random SL(k) element.
pub fn random_unimodular(r: &mut ChaCha8Rng) -> (RationalMatrix, JugglingFunction) {
    let (a, pi) = match r.gen_range(0..10) {
        0 => (m(&SL3_MATRIX), JugglingFunction::uniform(8, 3).unwrap()),
        1 => (m(&POSITROID_MATRIX), pi_of("23345357")),
        2 => (m(&POSITROID_COMPLEMENT), pi_of("53635514")),
        3 | 4 => {
            let size = r.gen_range(4..=7);
            let c = frieze_from_quiddity(&random_quiddity(r, size));
            let a = frieze_to_matrix(&c).unwrap();
            let p = c.shape().dual();
            if r.gen_bool(0.5) {
                (a, p)
            } else {
                (positive_complement(&a).unwrap(), p.dual())
            }
        }
        _ => loop {
            let n = r.gen_range(2..=7);
            let k = r.gen_range(1..=n);
            if let Some(found) = random_envelope(r, k, n) {
                break found;
            }
        },
    };
    let g = random_sl(r, a.rows());
    (g.mul(&a).unwrap(), pi)
}

fn pi_of(s: &str) -> JugglingFunction {
    pi(s)
}

/// Random subset of `items` of the given size.
pub fn random_subset(r: &mut ChaCha8Rng, items: &[i64], size: usize) -> Vec<i64> {
    let mut v: Vec<i64> = items.choose_multiple(r, size).copied().collect();
    v.sort_unstable();
    v
}

/// All quiddity rows of triangulations of an m-gon (labelled vertices).
pub fn triangulation_quiddities(m: usize) -> std::collections::BTreeSet<Vec<i64>> {
    fn all(verts: &[usize]) -> Vec<Vec<[usize; 3]>> {
        if verts.len() < 3 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let last = *verts.last().unwrap();
        for apex in 1..verts.len() - 1 {
            for left in all(&verts[..=apex]) {
                for right in all(&verts[apex..]) {
                    let mut t = vec![[verts[0], verts[apex], last]];
                    t.extend(left.iter().copied());
                    t.extend(right.iter().copied());
                    out.push(t);
                }
            }
        }
        out
    }
    let verts: Vec<usize> = (0..m).collect();
    all(&verts)
        .into_iter()
        .map(|tri| {
            let mut q = vec![0i64; m];
            for t in tri {
                for v in t {
                    q[v] += 1;
                }
            }
            q
        })
        .collect()
}

/// Number of triangulations of an m-gon by the Catalan recurrence.
pub fn triangulation_count(m: usize) -> usize {
    let mut t = vec![0usize; m.max(3) + 1];
    t[2] = 1;
    for size in 3..=m {
        t[size] = (2..size).map(|apex| t[apex] * t[size - apex + 1]).sum();
    }
    t[m]
}
