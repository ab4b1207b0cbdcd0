//! Benchmark harness: runs the embedded fixtures against the eight
//! divisions, compares against the published reference table, and renders
//! the report as markdown, CSV, or JSON.

use serde::Serialize;

use involutive::completion::{complete, default_completion_order, CapKind, Limits};
use involutive::division::DivisionKind;
use involutive::fixtures::{ExpectedCell, FIXTURES};
use involutive::monomial::MonomialSet;

/// Element cap for cells the reference table leaves empty: those runs
/// either diverge (Pommaret on ideals that are not zero-dimensional) or
/// were out of computational reach, so they are cut short and reported as
/// a dash.
pub const EMPTY_CELL_ELEMENT_CAP: usize = 2_000;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CellOutcome {
    Completed {
        length: usize,
        examined: u64,
        reducible: u64,
        added: u64,
        reducible_percent: f64,
        elapsed_seconds: f64,
    },
    CapExceeded {
        cap: CapKind,
        limit: u64,
        reached: usize,
        elapsed_seconds: f64,
    },
    Skipped,
}

/// One (fixture, division) cell of the report.
#[derive(Clone, Debug, Serialize)]
pub struct BenchCell {
    pub fixture: &'static str,
    pub division: DivisionKind,
    pub expected_length: Option<usize>,
    pub expected_prolongations: Option<u64>,
    pub expected_reducible_percent: Option<u8>,
    #[serde(flatten)]
    pub outcome: CellOutcome,
    /// Whether the basis length reproduces the reference value; `None` when
    /// the reference cell is empty or the cell was skipped.
    pub length_match: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub cells: Vec<BenchCell>,
}

impl BenchReport {
    /// Cells whose computed basis length contradicts the reference table.
    pub fn mismatches(&self) -> Vec<&BenchCell> {
        self.cells
            .iter()
            .filter(|c| c.length_match == Some(false))
            .collect()
    }
}

/// A degree ceiling under which a terminating completion run provably (or,
/// for Pommaret, empirically) finishes.  Thomas, Janet, Division I and the
/// induced divisions never leave the componentwise-maximum box of the
/// input: a variable is only prolonged while some element exceeds it there.
/// Division II can push any exponent up to the largest single input
/// exponent, so it ranges over a cube instead.
pub fn terminating_degree_cap(input: &MonomialSet, kind: DivisionKind) -> u32 {
    let n = input.arity() as u32;
    match kind {
        DivisionKind::DivisionII => {
            let max_exp = input
                .iter()
                .flat_map(|m| m.exponents().iter().copied())
                .max()
                .unwrap_or(0);
            n * max_exp + n
        }
        _ => {
            let box_degree: u32 = (0..input.arity())
                .map(|v| input.iter().map(|m| m.deg(v)).max().unwrap_or(0))
                .sum();
            box_degree + n
        }
    }
}

/// Caps for a cell the reference table fills.
fn limits_for_expected(input: &MonomialSet, kind: DivisionKind) -> Limits {
    Limits::new(Some(terminating_degree_cap(input, kind)), Some(50_000))
}

fn limits_for_empty(input: &MonomialSet) -> Limits {
    Limits::new(
        Some(2 * input.max_degree() + input.arity() as u32),
        Some(EMPTY_CELL_ELEMENT_CAP),
    )
}

fn run_cell(cell: &ExpectedCell, input: &MonomialSet) -> CellOutcome {
    let limits = if cell.length.is_some() {
        limits_for_expected(input, cell.division)
    } else {
        limits_for_empty(input)
    };
    let order = default_completion_order(cell.division);
    match complete(input, cell.division, order, limits) {
        Ok(result) => {
            let stats = result.stats;
            CellOutcome::Completed {
                length: result.basis.len(),
                examined: stats.examined,
                reducible: stats.reducible,
                added: stats.added,
                reducible_percent: if stats.examined == 0 {
                    100.0
                } else {
                    100.0 * stats.reducible as f64 / stats.examined as f64
                },
                elapsed_seconds: stats.elapsed.as_secs_f64(),
            }
        }
        Err(err) => CellOutcome::CapExceeded {
            cap: err.cap,
            limit: err.limit,
            reached: err.partial.basis.len(),
            elapsed_seconds: err.partial.stats.elapsed.as_secs_f64(),
        },
    }
}

/// Runs the selected cells of the benchmark grid.
///
/// With no filters, every fixture runs against every division except that
/// sq4 — whose reference row only fills the Janet column — is restricted to
/// Janet; its other cells require both an explicit fixture and an explicit
/// division filter, and then run under the tight empty-cell caps.
pub fn run_bench(
    fixture_filter: Option<&[String]>,
    division_filter: Option<&[DivisionKind]>,
) -> Result<BenchReport, String> {
    if let Some(names) = fixture_filter {
        for name in names {
            if !FIXTURES.iter().any(|f| f.name == name) {
                let known: Vec<_> = FIXTURES.iter().map(|f| f.name).collect();
                return Err(format!(
                    "unknown fixture `{name}` (expected one of {})",
                    known.join(", ")
                ));
            }
        }
    }
    let mut cells = Vec::new();
    for fixture in FIXTURES {
        if let Some(names) = fixture_filter {
            if !names.iter().any(|n| n == fixture.name) {
                continue;
            }
        }
        let input = fixture.input();
        for cell in fixture.expected {
            if let Some(kinds) = division_filter {
                if !kinds.contains(&cell.division) {
                    continue;
                }
            }
            let opted_in = fixture_filter.is_some() && division_filter.is_some();
            let outcome = if fixture.name == "sq4"
                && cell.division != DivisionKind::Janet
                && !opted_in
            {
                CellOutcome::Skipped
            } else {
                run_cell(cell, &input)
            };
            let length_match = match (&outcome, cell.length) {
                (CellOutcome::Completed { length, .. }, Some(expected)) => {
                    Some(*length == expected)
                }
                (CellOutcome::CapExceeded { .. }, Some(_)) => Some(false),
                _ => None,
            };
            cells.push(BenchCell {
                fixture: fixture.name,
                division: cell.division,
                expected_length: cell.length,
                expected_prolongations: cell.prolongations,
                expected_reducible_percent: cell.reducible_percent,
                outcome,
                length_match,
            });
        }
    }
    Ok(BenchReport { cells })
}

/// Markdown table shaped like the reference: one row per fixture, one
/// column per division, `length / prolongations / reducible% / time` per
/// cell and a dash for runs that were cut short or skipped.
pub fn render_markdown(report: &BenchReport) -> String {
    let mut out = String::new();
    let divisions = DivisionKind::ALL;
    out.push_str("| Input | ");
    for d in divisions {
        out.push_str(&format!("{d} | "));
    }
    out.push('\n');
    out.push_str("|---|");
    for _ in divisions {
        out.push_str("---|");
    }
    out.push('\n');

    let mut fixtures: Vec<&str> = Vec::new();
    for cell in &report.cells {
        if !fixtures.contains(&cell.fixture) {
            fixtures.push(cell.fixture);
        }
    }
    for fixture in fixtures {
        out.push_str(&format!("| {fixture} | "));
        for d in divisions {
            let cell = report
                .cells
                .iter()
                .find(|c| c.fixture == fixture && c.division == d);
            let text = match cell.map(|c| &c.outcome) {
                Some(CellOutcome::Completed {
                    length,
                    examined,
                    reducible_percent,
                    elapsed_seconds,
                    ..
                }) => {
                    let flag = match cell.unwrap().length_match {
                        Some(false) => " ✗",
                        _ => "",
                    };
                    format!("{length} / {examined} / {reducible_percent:.0}% / {elapsed_seconds:.2}s{flag}")
                }
                Some(CellOutcome::CapExceeded { .. }) | Some(CellOutcome::Skipped) => {
                    "–".to_string()
                }
                None => String::new(),
            };
            out.push_str(&text);
            out.push_str(" | ");
        }
        out.push('\n');
    }
    out
}

/// Long-form CSV: one row per (fixture, division, metric).
pub fn render_csv(report: &BenchReport) -> String {
    let mut out = String::from("fixture,division,metric,value,expected\n");
    for cell in &report.cells {
        let d = cell.division.cli_name();
        let f = cell.fixture;
        let expected_len = cell
            .expected_length
            .map_or(String::new(), |v| v.to_string());
        match &cell.outcome {
            CellOutcome::Completed {
                length,
                examined,
                reducible_percent,
                elapsed_seconds,
                ..
            } => {
                out.push_str(&format!("{f},{d},length,{length},{expected_len}\n"));
                out.push_str(&format!(
                    "{f},{d},prolongations,{examined},{}\n",
                    cell.expected_prolongations
                        .map_or(String::new(), |v| v.to_string())
                ));
                out.push_str(&format!(
                    "{f},{d},reducible_percent,{reducible_percent:.1},{}\n",
                    cell.expected_reducible_percent
                        .map_or(String::new(), |v| v.to_string())
                ));
                out.push_str(&format!("{f},{d},time_seconds,{elapsed_seconds:.3},\n"));
            }
            CellOutcome::CapExceeded { cap, limit, reached, .. } => {
                out.push_str(&format!(
                    "{f},{d},cap_exceeded,{cap:?}:{limit} at {reached},{expected_len}\n"
                ));
            }
            CellOutcome::Skipped => {
                out.push_str(&format!("{f},{d},skipped,,{expected_len}\n"));
            }
        }
    }
    out
}

pub fn render_json(report: &BenchReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}
