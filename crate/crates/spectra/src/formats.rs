//! JSON and CSV exchange formats.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use spectra_core::hamming::verify_omzd;
use spectra_core::scheme::{CharValue, CharacterTableData, ConjugacyClass, GroupTable};
use spectra_core::simplicial::SimplicialComplex;
use spectra_core::{ExactMatrix, Graph, Rational};

use crate::Error;

fn bad(what: &str, detail: impl std::fmt::Display) -> Error {
    Error::Format(format!("{}: {}", what, detail))
}

/// An integer that may not fit in 64 bits; big values travel as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn of(x: &impl ToString) -> Self {
        let s = x.to_string();
        s.parse().map(JsonInt::Small).unwrap_or(JsonInt::Big(s))
    }

    fn text(&self) -> String {
        match self {
            JsonInt::Small(x) => x.to_string(),
            JsonInt::Big(s) => s.clone(),
        }
    }
}

/// `{rows, cols, entries: [[num, den], ...]}`, row-major, reduced fractions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(JsonInt, JsonInt)>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ExactMatrix) -> Self {
        let entries = m.entries().iter().map(|r| (JsonInt::of(r.numer()), JsonInt::of(r.denom()))).collect();
        MatrixJson { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn to_matrix(&self) -> Result<ExactMatrix, Error> {
        if self.entries.len() != self.rows * self.cols {
            return Err(bad("matrix", format!("{} entries for {}x{}", self.entries.len(), self.rows, self.cols)));
        }
        let mut values = Vec::with_capacity(self.entries.len());
        for (k, (p, q)) in self.entries.iter().enumerate() {
            let q = q.text();
            if q.trim_start_matches('-').chars().all(|c| c == '0') {
                return Err(bad("matrix", format!("entry {} has zero denominator", k)));
            }
            let r: Rational = format!("{}/{}", p.text(), q).parse().map_err(|e| bad("matrix", format!("entry {}: {}", k, e)))?;
            values.push(r);
        }
        Ok(ExactMatrix::from_rationals(self.rows, self.cols, values)?)
    }
}

pub fn matrix_to_json(m: &ExactMatrix) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("matrix serializes")
}

pub fn matrix_from_json(text: &str) -> Result<ExactMatrix, Error> {
    let mj: MatrixJson = serde_json::from_str(text).map_err(|e| bad("matrix", e))?;
    mj.to_matrix()
}

/// One row per line, integers separated by commas.
pub fn matrix_to_csv(m: &ExactMatrix) -> Result<String, Error> {
    if !m.is_integral() {
        return Err(Error::Core(spectra_core::Error::NotIntegral));
    }
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.entry(i, j).numer().to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

pub fn matrix_from_csv(text: &str) -> Result<ExactMatrix, Error> {
    let mut values = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<&str> = line.split(',').map(str::trim).collect();
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(bad("csv", format!("line {} has {} fields", line_no + 1, row.len())));
        }
        for f in row {
            let r: Rational = f.parse().map_err(|e| bad("csv", format!("line {}: {:?}: {}", line_no + 1, f, e)))?;
            if !r.is_integer() {
                return Err(bad("csv", format!("line {}: {} is not an integer", line_no + 1, f)));
            }
            values.push(r);
        }
        rows += 1;
    }
    Ok(ExactMatrix::from_rationals(rows, cols.unwrap_or(0), values)?)
}

/// OMZD data is rejected unless it passes the axioms.
pub fn omzd_from_json(text: &str) -> Result<ExactMatrix, Error> {
    let m = matrix_from_json(text)?;
    verify_omzd(&m)?;
    Ok(m)
}

/// `{n, edges: [[u, v], ...]}` with optional labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().to_vec(), labels: g.labels().map(|l| l.to_vec()) }
    }

    pub fn to_graph(&self) -> Result<Graph, Error> {
        let g = Graph::new(self.n, self.edges.iter().copied())?;
        Ok(match &self.labels {
            Some(l) => g.with_labels(l.clone())?,
            None => g,
        })
    }
}

/// `{n, facets}`; the closure is taken on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex, Error> {
    let c: ComplexJson = serde_json::from_str(text).map_err(|e| bad("complex", e))?;
    Ok(SimplicialComplex::from_facets(c.n, &c.facets)?)
}

#[derive(Clone, Debug, Deserialize)]
struct ClassJson {
    size: usize,
    name: String,
    #[serde(default)]
    representative: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
struct CharacterTableJson {
    order: usize,
    classes: Vec<ClassJson>,
    table: Vec<Vec<Value>>,
}

/// A character value is a JSON integer, a string "p/q", or an object
/// `{"irrational": "..."}` / `{"complex": "..."}` naming a value that is
/// not rational.
fn char_value(v: &Value) -> Result<CharValue, Error> {
    match v {
        Value::Number(x) => {
            let r: Rational = x.to_string().parse().map_err(|e| bad("character", e))?;
            Ok(CharValue::Rational(r))
        }
        Value::String(s) => Ok(CharValue::Rational(s.parse().map_err(|e| bad("character", format!("{:?}: {}", s, e)))?)),
        Value::Object(o) if o.contains_key("irrational") => Ok(CharValue::Irrational),
        Value::Object(o) if o.contains_key("complex") => Ok(CharValue::Complex),
        other => Err(bad("character", format!("unsupported value {}", other))),
    }
}

/// Representatives default to the class's position when the file omits them.
pub fn character_table_from_json(text: &str) -> Result<CharacterTableData, Error> {
    let t: CharacterTableJson = serde_json::from_str(text).map_err(|e| bad("character table", e))?;
    let classes = t
        .classes
        .iter()
        .enumerate()
        .map(|(k, c)| ConjugacyClass { size: c.size, name: c.name.clone(), representative: c.representative.unwrap_or(k) })
        .collect();
    let table = t.table.iter().map(|row| row.iter().map(char_value).collect()).collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(CharacterTableData::new(t.order, classes, table)?)
}

pub fn group_table_from_json(text: &str) -> Result<GroupTable, Error> {
    let mul: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| bad("group table", e))?;
    Ok(GroupTable::new(mul)?)
}

/// A parity family shipped as data: indices into Φ_j of the named graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityFixture {
    pub graph: String,
    pub j: usize,
    pub family: Vec<usize>,
}
