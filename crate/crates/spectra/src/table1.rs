//! The twelve small distance-regular graphs of the q(G) summary table,
//! each run through `q_bounds` with whatever the bundle supplies.

use serde_json::{json, Value};
use spectra_core::bounds::{q_bounds, CitedBound, QBoundOptions, QBoundReport};
use spectra_core::graph::antipodal_fold;
use spectra_core::hamming::hamming_graph;
use spectra_core::johnson::{johnson_graph, kneser_graph};
use spectra_core::Graph;

use crate::bundle::Bundle;
use crate::report::q_bound_report;
use crate::search::sign_exhaust_parallel;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub id: &'static str,
    pub name: &'static str,
    pub diameter: usize,
    pub order: usize,
    /// Published interval for q(G); equal ends when settled.
    pub published: (usize, usize),
}

const fn row(id: &'static str, name: &'static str, diameter: usize, order: usize, lo: usize, hi: usize) -> Table1Row {
    Table1Row { id, name, diameter, order, published: (lo, hi) }
}

pub const ROWS: [Table1Row; 12] = [
    row("hamming_2_3", "Hamming H(2,3)", 2, 9, 3, 3),
    row("clebsch", "Clebsch graph", 2, 16, 2, 2),
    row("shrikhande", "Shrikhande graph", 2, 16, 3, 3),
    row("folded_johnson_8_4", "folded Johnson J(8,4)", 2, 35, 2, 2),
    row("folded_halved_8_cube", "folded halved 8-cube", 2, 64, 2, 2),
    row("m22", "M22 graph", 2, 77, 3, 3),
    row("icosahedron", "icosahedron", 3, 12, 3, 4),
    row("heawood", "Heawood graph", 3, 14, 4, 4),
    row("heawood_distance_3", "distance 3 of Heawood", 3, 14, 2, 2),
    row("kneser_7_3", "Kneser K(7,3)", 3, 35, 4, 4),
    row("perkel", "Perkel graph", 3, 57, 3, 4),
    row("coxeter", "Coxeter graph", 4, 28, 5, 5),
];

#[derive(Debug)]
pub struct RowOutcome {
    pub row: Table1Row,
    pub result: Result<QBoundReport, String>,
    /// Computed interval equals the published one.
    pub matches_published: bool,
}

fn fold_of(cover: &Graph, what: &str) -> Result<Graph, Error> {
    antipodal_fold(cover)
        .map(|f| f.folded)
        .ok_or_else(|| Error::Core(spectra_core::Error::Verification(format!("{} is not an antipodal double cover", what))))
}

/// The graph for a row and the extra inputs handed to `q_bounds`.
pub fn row_input(bundle: &Bundle, id: &str) -> Result<(Graph, QBoundOptions, Vec<String>), Error> {
    let mut opt = QBoundOptions::new();
    let mut notes = Vec::new();
    let graph = match id {
        "hamming_2_3" => hamming_graph(2, 3, 1)?,
        "kneser_7_3" => kneser_graph(7, 3)?,
        "folded_johnson_8_4" => {
            let cover = johnson_graph(8, 4, 1)?;
            let g = fold_of(&cover, "J(8,4)")?;
            opt.covers.push(("J(8,4)".into(), cover));
            g
        }
        "folded_halved_8_cube" => {
            let cover = bundle.graph("halved_8_cube")?;
            let g = fold_of(&cover, "halved 8-cube")?;
            opt.covers.push(("halved_8_cube".into(), cover));
            g
        }
        "clebsch" => {
            let g = bundle.graph("clebsch")?;
            match bundle.graph("wells") {
                Ok(w) => opt.covers.push(("wells".into(), w)),
                Err(e) => notes.push(format!("Wells graph unavailable: {}", e)),
            }
            g
        }
        "heawood_distance_3" => {
            let g = bundle.graph("heawood_distance_3")?;
            opt.cited_upper.push(CitedBound { value: 2, source: "signing S_14 of McKee and Smyth (2007)".into() });
            match bundle.matrix("heawood_distance_3.signing") {
                Ok(m) => opt.matrices.push(("bundled signing".into(), m)),
                Err(e) => notes.push(format!("signing unavailable, upper bound 2 not verified: {}", e)),
            }
            g
        }
        other => bundle.graph(other)?,
    };
    let fixture = format!("{}.parity", id);
    if bundle.contains(&fixture) {
        match bundle.parity_fixture(&fixture) {
            Ok(f) => opt.parity_families.push((fixture, f.j, f.family)),
            Err(e) => notes.push(format!("parity fixture unreadable: {}", e)),
        }
    }
    Ok((graph, opt, notes))
}

pub fn run_row(bundle: &Bundle, row: Table1Row, threads: usize) -> Result<QBoundReport, Error> {
    let (g, opt, notes) = row_input(bundle, row.id)?;
    let mut report = q_bounds(row.id, &g, &opt, |sys| sign_exhaust_parallel(sys, threads))?;
    report.notes.extend(notes);
    Ok(report)
}

/// Every row in table order; a failing row is reported and the run goes on.
pub fn table1_reproduce(bundle: &Bundle, threads: usize) -> Vec<RowOutcome> {
    ROWS.iter()
        .map(|&row| {
            let result = run_row(bundle, row, threads).map_err(|e| e.to_string());
            let matches_published = result.as_ref().is_ok_and(|r| (r.lower, r.upper) == row.published);
            RowOutcome { row, result, matches_published }
        })
        .collect()
}

fn interval(lo: usize, hi: usize) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("{} or {}", lo, hi)
    }
}

pub fn outcome_json(o: &RowOutcome) -> Value {
    let (lo, hi) = o.row.published;
    let mut v = json!({
        "row": o.row.id,
        "name": o.row.name,
        "published": interval(lo, hi),
        "status": if o.matches_published { "matches-paper" } else { "differs" },
    });
    match &o.result {
        Ok(r) => {
            v["computed"] = json!(interval(r.lower, r.upper));
            v["report"] = q_bound_report(r);
        }
        Err(e) => v["error"] = json!(e),
    }
    v
}

/// One line per row for the text format.
pub fn outcome_line(o: &RowOutcome) -> String {
    let (lo, hi) = o.row.published;
    let computed = match &o.result {
        Ok(r) => format!(
            "{:<7} lower {} ({}), upper {} ({})",
            interval(r.lower, r.upper),
            r.lower,
            r.best_lower().map_or("-", |e| e.rule.name()),
            r.upper,
            r.best_upper().map_or("-", |e| e.rule.name()),
        ),
        Err(e) => format!("error: {}", e),
    };
    format!(
        "{:<24} published {:<7} computed {}  [{}]",
        o.row.name,
        interval(lo, hi),
        computed,
        if o.matches_published { "matches-paper" } else { "differs" }
    )
}
