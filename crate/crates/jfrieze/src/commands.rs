//! Subcommand bodies. Each returns the text for stdout and an exit code, so
//! the binary stays a thin shell and tests can call these directly.

use jfrieze_core::construct::{build_frieze_det, build_frieze_twist, frieze_to_matrix};
use jfrieze_core::frieze::{enumerate_sl2_positive, DiamondFailure};
use jfrieze_core::juggling::{parse_siteswap, residue};
use jfrieze_core::rational;
use jfrieze_core::recurrence::{residual, solution_matrix};
use jfrieze_core::{inverse_twist, positive_complement, twist, PeriodicFrieze};
use serde::Serialize;

use crate::error::CliError;
use crate::json;

/// Text for stdout plus the process exit code (0 or 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// Output text.
    pub stdout: String,
    /// 0 on success, 1 when a mathematical check failed.
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn checked(stdout: String, passed: bool) -> Self {
        Outcome { stdout, code: if passed { 0 } else { 1 } }
    }
}

/// Construction route for `F(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Signed maximal minors.
    Det,
    /// Strip of the twist product.
    Twist,
}

/// Transform applied by `transform`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Transform {
    /// Matrix to its twist (needs `--siteswap`).
    Twist,
    /// Matrix to its inverse twist (needs `--siteswap` of the input).
    InverseTwist,
    /// Matrix to its positive complement.
    Complement,
    /// Frieze to its dual.
    Dual,
    /// Frieze back to a matrix.
    #[value(name = "invert-F")]
    InvertF,
}

/// `siteswap`: period, values, balls, dual, loops, coloops, landing schedules.
pub fn siteswap(pattern: &str, as_json: bool) -> Result<Outcome, CliError> {
    let p = parse_siteswap(pattern)?;
    let class = p.classify();
    let n = p.period() as i64;
    let schedules: Vec<Vec<i64>> = (1..=n).map(|a| p.landing_schedule(a)).collect();
    if as_json {
        #[derive(Serialize)]
        struct Report {
            period: usize,
            throws: Vec<i64>,
            values: Vec<i64>,
            balls: usize,
            dual: Vec<i64>,
            loops: Vec<usize>,
            coloops: Vec<usize>,
            uniform: bool,
            landing_schedules: Vec<Vec<i64>>,
            necklace: Vec<Vec<usize>>,
        }
        return Ok(Outcome::ok(json::report(&Report {
            period: p.period(),
            throws: p.throws(),
            values: p.values().to_vec(),
            balls: p.num_balls(),
            dual: p.dual().throws(),
            loops: class.loops,
            coloops: class.coloops,
            uniform: class.uniform,
            landing_schedules: schedules,
            necklace: p.necklace(),
        })));
    }
    let list = |v: &[usize]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        }
    };
    let mut out = String::new();
    out += &format!("siteswap {}\n", p.siteswap());
    out += &format!("period   {}\n", p.period());
    out += &format!("values   {}\n", p.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    out += &format!("balls    {}\n", p.num_balls());
    out += &format!("dual     {}\n", p.dual().siteswap());
    out += &format!("loops    {}\n", list(&class.loops));
    out += &format!("coloops  {}\n", list(&class.coloops));
    out += "landing schedules\n";
    for (a, (l, r)) in schedules.iter().zip(p.necklace()).enumerate() {
        let l: Vec<String> = l.iter().map(ToString::to_string).collect();
        let r: Vec<String> = r.iter().map(ToString::to_string).collect();
        out += &format!("  L_{:<3} {{{}}}  residues {{{}}}\n", a + 1, l.join(","), r.join(","));
    }
    Ok(Outcome::ok(out))
}

/// A position moved into the fundamental domain: the original is
/// `(a + shift * n, b + shift * n)`.
#[derive(Serialize)]
struct Position {
    a: i64,
    b: i64,
    shift: i64,
}

fn reduce(a: i64, b: i64, n: usize) -> Position {
    let n = n as i64;
    let low = a.min(b);
    let shift = (low - residue(low, n as usize) as i64) / n;
    Position { a: a - shift * n, b: b - shift * n, shift }
}

#[derive(Serialize)]
struct Diamond {
    #[serde(flatten)]
    at: Position,
    determinant: String,
}

fn diamonds(list: &[DiamondFailure], n: usize) -> Vec<Diamond> {
    list.iter()
        .map(|d| Diamond { at: reduce(d.a, d.b, n), determinant: rational::format(&d.determinant) })
        .collect()
}

/// `check`: prefrieze, frieze, tameness and positivity, as a JSON report.
pub fn check(c: &PeriodicFrieze) -> Outcome {
    #[derive(Serialize)]
    struct Violation {
        #[serde(flatten)]
        at: Position,
        found: String,
        expected: String,
    }
    #[derive(Serialize)]
    struct Report {
        siteswap: Vec<i64>,
        frieze: bool,
        prefrieze: bool,
        positive: bool,
        checked_pairs: usize,
        prefrieze_violations: Vec<Violation>,
        frieze_failures: Vec<Diamond>,
        tame_failures: Vec<Diamond>,
    }
    let n = c.period();
    let r = c.check_frieze();
    let report = Report {
        siteswap: c.shape().throws(),
        frieze: r.is_frieze(),
        prefrieze: r.prefrieze_ok,
        positive: c.is_positive(),
        checked_pairs: r.checked_pairs,
        prefrieze_violations: c
            .prefrieze_violations()
            .iter()
            .map(|v| Violation {
                at: reduce(v.a, v.b, n),
                found: rational::format(&v.found),
                expected: rational::format(&v.expected),
            })
            .collect(),
        frieze_failures: diamonds(&r.frieze_failures, n),
        tame_failures: diamonds(&r.tame_failures, n),
    };
    Outcome::checked(json::report(&report), r.is_frieze())
}

/// `construct`: `F(A)` by the chosen method; `verify` also runs the other
/// method and the frieze conditions.
pub fn construct(matrix: &str, pattern: &str, method: Method, verify: bool) -> Result<Outcome, CliError> {
    let a = json::matrix_from_json(matrix)?;
    let p = parse_siteswap(pattern)?;
    let f = match method {
        Method::Det => build_frieze_det(&a, &p)?,
        Method::Twist => build_frieze_twist(&a, &p)?,
    };
    let text = json::frieze_to_json(&f);
    if !verify {
        return Ok(Outcome::ok(text));
    }
    let other = match method {
        Method::Det => build_frieze_twist(&a, &p)?,
        Method::Twist => build_frieze_det(&a, &p)?,
    };
    if other != f {
        return Err(CliError::Math("determinant and twist constructions disagree".into()));
    }
    if !f.is_frieze() {
        return Err(CliError::Math("F(A) fails the frieze conditions".into()));
    }
    Ok(Outcome::ok(text))
}

/// `transform`: one of the matrix or frieze operations.
pub fn transform(input: &str, op: Transform, pattern: Option<&str>) -> Result<Outcome, CliError> {
    let shape = || {
        pattern
            .ok_or_else(|| CliError::Input("this transform needs --siteswap".into()))
            .and_then(|s| Ok(parse_siteswap(s)?))
    };
    let text = match op {
        Transform::Twist => json::matrix_to_json(&twist(&json::matrix_from_json(input)?, &shape()?)?),
        Transform::InverseTwist => {
            json::matrix_to_json(&inverse_twist(&json::matrix_from_json(input)?, &shape()?)?)
        }
        Transform::Complement => json::matrix_to_json(&positive_complement(&json::matrix_from_json(input)?)?),
        Transform::Dual => json::frieze_to_json(&json::frieze_from_json(input)?.dual_frieze()),
        Transform::InvertF => json::matrix_to_json(&frieze_to_matrix(&json::frieze_from_json(input)?)?),
    };
    Ok(Outcome::ok(text))
}

/// `solve`: the solution window, or with `basis = Some(a)` the columns
/// indexed by the landing schedule `L_a` over rows `[a, a + 2n)`.
pub fn solve(c: &PeriodicFrieze, basis: Option<i64>) -> Result<Outcome, CliError> {
    let sol = solution_matrix(c)?;
    let n = c.period() as i64;
    for b in 1..=n {
        let x = sol.sequence(b, b - n, b + 2 * n);
        for row in b..=b + 2 * n {
            if residual(c, &x, row)? != rational::int(0) {
                return Err(CliError::Math(format!("column {b} leaves a residual at row {row}")));
            }
        }
    }
    let Some(a) = basis else {
        return Ok(Outcome::ok(json::solution_to_json(&sol)));
    };
    #[derive(Serialize)]
    struct Basis {
        a: i64,
        schedule: Vec<i64>,
        rows: [i64; 2],
        rank: usize,
        vectors: Vec<Vec<String>>,
    }
    let schedule = c.shape().landing_schedule(a);
    let block = sol.block(&schedule, a);
    let vectors = (0..schedule.len())
        .map(|j| block.column(j).iter().map(rational::format).collect())
        .collect();
    let report = Basis { a, rank: block.rank(), schedule, rows: [a, a + 2 * n - 1], vectors };
    Ok(Outcome::ok(json::report(&report)))
}

/// `enumerate`: positive integral SL(2)-friezes of height `h`.
pub fn enumerate(height: usize, bound: Option<u64>, dump: bool) -> Result<Outcome, CliError> {
    let bound = bound.unwrap_or(height.max(1) as u64);
    let found = enumerate_sl2_positive(height, bound)?;
    #[derive(Serialize)]
    struct Report {
        height: usize,
        bound: u64,
        count: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        quiddity_rows: Option<Vec<Vec<String>>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        friezes: Option<Vec<serde_json::Value>>,
    }
    let (quiddity_rows, friezes) = if dump {
        let rows = found
            .iter()
            .map(|c| (1..=c.period() as i64).map(|b| rational::format(&c.entry(b + 1, b))).collect())
            .collect();
        let docs = found
            .iter()
            .map(|c| serde_json::from_str(&json::frieze_to_json(c)))
            .collect::<Result<_, _>>()?;
        (Some(rows), Some(docs))
    } else {
        (None, None)
    };
    let report = Report { height, bound, count: found.len(), quiddity_rows, friezes };
    Ok(Outcome::ok(json::report(&report)))
}
