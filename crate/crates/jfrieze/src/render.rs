//! ASCII diamond strips.
//!
//! Entry `C_{a,b}` sits on text row `a - b` at horizontal slot `a + b`, so
//! the diagonal forms the top row and each column of the matrix runs down
//! and to the right. Positions outside the support are blank. Diagonal
//! entries carry a `G` marker and entries on the shape boundary `a = π(b)`
//! carry a `B` marker; a loop is marked `G`.

use jfrieze_core::rational;
use jfrieze_core::PeriodicFrieze;

/// Render `periods` fundamental domains, columns `b = 1 .. periods * n`.
pub fn render(c: &PeriodicFrieze, periods: usize) -> String {
    let shape = c.shape();
    let n = c.period() as i64;
    let last = periods as i64 * n;
    let depth = shape.throws().into_iter().max().unwrap_or(0);

    let cell = |a: i64, b: i64| -> Option<String> {
        if !c.in_support(a, b) {
            return None;
        }
        let marker = if a == b {
            "G"
        } else if a == shape.eval(b) {
            "B"
        } else {
            " "
        };
        Some(format!("{}{marker}", rational::format(&c.entry(a, b))))
    };

    let cells: Vec<Vec<Option<String>>> =
        (0..=depth).map(|r| (1..=last).map(|b| cell(b + r, b)).collect()).collect();
    let width = 1 + cells.iter().flatten().flatten().map(String::len).max().unwrap_or(1);

    let mut out = format!("siteswap {}, {periods} period(s) of {n}\n", shape.siteswap());
    for (r, row) in cells.iter().enumerate() {
        let mut line = String::new();
        for x in 2..=2 * last + depth {
            let slot = x - r as i64;
            let text = if slot % 2 == 0 && (1..=last).contains(&(slot / 2)) {
                row[(slot / 2 - 1) as usize].as_deref().unwrap_or("")
            } else {
                ""
            };
            line.push_str(&format!("{text:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
