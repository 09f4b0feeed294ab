//! Vertex/edge counts and edge-density ratios of `Q_n`, `Q̃_n`,
//! `Q̃_n(11100)` and `Q_n(1010)`, measured on constructed graphs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{hypercube_eq_interpolated, tilde_eq_interpolated};
use crate::cube::{CubeGraph, Metric};
use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// Expected cells for n = 4..16, one row per line after the header.
pub const TABLE1_GOLDEN: &str = include_str!("../../data/table1.csv");

pub const ROW_LABELS: [&str; 10] = [
    "n",
    "|V(Q_n)|=|V(Q~_n)|",
    "|E(Q_n)|",
    "|E(Q~_n)|",
    "|V(Q~_n(11100))|",
    "|E(Q~_n(11100))|",
    "R~(11100)",
    "|V(Q_n(1010))|",
    "|E(Q_n(1010))|",
    "R_H(1010)",
];

const RATIO_ROWS: [usize; 2] = [6, 9];

/// One column of the table: every measured quantity at order `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Column {
    pub n: usize,
    pub vertices_q: u64,
    pub edges_q: u64,
    pub edges_q_tilde: u64,
    pub vertices_tilde_11100: u64,
    pub edges_tilde_11100: u64,
    /// `|E(Q̃_n(11100))|` over `N (3 log2 N - 1) / 4`, `N = |V(Q̃_n(11100))|`.
    pub ratio_tilde_11100: f64,
    pub vertices_ham_1010: u64,
    pub edges_ham_1010: u64,
    /// `|E(Q_n(1010))|` over `N log2 N / 2`, `N = |V(Q_n(1010))|`.
    pub ratio_ham_1010: f64,
}

impl Table1Column {
    pub fn measure(n: usize) -> Result<Self> {
        let f11100: BinaryWord = "11100".parse()?;
        let f1010: BinaryWord = "1010".parse()?;
        let q = CubeGraph::build(n, Metric::Hamming, None)?;
        let qt = CubeGraph::build(n, Metric::Tilde, None)?;
        let t = CubeGraph::build(n, Metric::Tilde, Some(&f11100))?;
        let h = CubeGraph::build(n, Metric::Hamming, Some(&f1010))?;
        let ratio_tilde_11100 =
            t.edge_count() as f64 / tilde_eq_interpolated(t.vertex_count() as f64)?;
        let ratio_ham_1010 =
            h.edge_count() as f64 / hypercube_eq_interpolated(h.vertex_count() as f64)?;
        Ok(Self {
            n,
            vertices_q: q.vertex_count() as u64,
            edges_q: q.edge_count() as u64,
            edges_q_tilde: qt.edge_count() as u64,
            vertices_tilde_11100: t.vertex_count() as u64,
            edges_tilde_11100: t.edge_count() as u64,
            ratio_tilde_11100,
            vertices_ham_1010: h.vertex_count() as u64,
            edges_ham_1010: h.edge_count() as u64,
            ratio_ham_1010,
        })
    }

    /// Row `row` of this column (indexing [`ROW_LABELS`]); ratios as `f64`.
    pub fn cell(&self, row: usize) -> CellValue {
        match row {
            0 => CellValue::Count(self.n as u64),
            1 => CellValue::Count(self.vertices_q),
            2 => CellValue::Count(self.edges_q),
            3 => CellValue::Count(self.edges_q_tilde),
            4 => CellValue::Count(self.vertices_tilde_11100),
            5 => CellValue::Count(self.edges_tilde_11100),
            6 => CellValue::Ratio(self.ratio_tilde_11100),
            7 => CellValue::Count(self.vertices_ham_1010),
            8 => CellValue::Count(self.edges_ham_1010),
            9 => CellValue::Ratio(self.ratio_ham_1010),
            _ => panic!("row {row} out of range"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CellValue {
    Count(u64),
    Ratio(f64),
}

impl CellValue {
    /// Renders the value, ratios rounded to `decimals` places.
    pub fn render(&self, decimals: usize) -> String {
        match self {
            CellValue::Count(c) => c.to_string(),
            CellValue::Ratio(r) => format!("{r:.decimals$}"),
        }
    }
}

/// Measures every column for `n_from ..= n_to`.
pub fn table1(n_from: usize, n_to: usize) -> Result<Vec<Table1Column>> {
    if n_from < 4 || n_from > n_to || n_to > 24 {
        return Err(Error::OutOfRange {
            name: "n range",
            value: format!("{n_from}..={n_to}"),
            range: "4 <= from <= to <= 24".into(),
        });
    }
    (n_from..=n_to)
        .into_par_iter()
        .map(Table1Column::measure)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMismatch {
    pub row: String,
    pub n: usize,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Verification {
    pub compared: usize,
    pub mismatches: Vec<CellMismatch>,
}

impl Table1Verification {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Parsed golden cells: `(row index, n, printed text)`.
fn golden_cells() -> Vec<(usize, usize, String)> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(TABLE1_GOLDEN.as_bytes());
    let orders: Vec<usize> = reader
        .headers()
        .expect("golden header")
        .iter()
        .skip(1)
        .map(|h| h.parse().expect("golden order"))
        .collect();
    let mut cells: Vec<(usize, usize, String)> =
        orders.iter().map(|&n| (0, n, n.to_string())).collect();
    for record in reader.records() {
        let record = record.expect("golden record");
        let label = &record[0];
        let row = ROW_LABELS
            .iter()
            .position(|l| *l == label)
            .unwrap_or_else(|| panic!("unknown golden row {label}"));
        for (k, text) in record.iter().skip(1).enumerate() {
            cells.push((row, orders[k], text.to_string()));
        }
    }
    cells
}

fn decimals_of(text: &str) -> usize {
    text.split_once('.').map_or(0, |(_, frac)| frac.len())
}

/// Compares computed columns to every golden cell whose order is present.
/// Ratio cells are rounded to the number of decimals printed in the cell.
pub fn verify_table1(columns: &[Table1Column]) -> Table1Verification {
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for (row, n, expected) in golden_cells() {
        let Some(column) = columns.iter().find(|c| c.n == n) else {
            continue;
        };
        compared += 1;
        let decimals = if RATIO_ROWS.contains(&row) {
            decimals_of(&expected)
        } else {
            0
        };
        let computed = column.cell(row).render(decimals);
        if computed != expected {
            mismatches.push(CellMismatch {
                row: ROW_LABELS[row].to_string(),
                n,
                expected,
                computed,
            });
        }
    }
    Table1Verification {
        compared,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_fixture_has_130_cells() {
        let cells = golden_cells();
        assert_eq!(cells.len(), 130);
        assert!(cells.contains(&(5, 12, "24691".into())));
        assert!(cells.contains(&(6, 4, "1".into())));
        assert!(cells.contains(&(9, 7, "0.90".into())));
    }

    #[test]
    fn small_columns() {
        let cols = table1(4, 5).unwrap();
        assert_eq!(cols[0].vertices_ham_1010, 15);
        assert_eq!(cols[0].edges_ham_1010, 28);
        assert_eq!(cols[0].cell(9).render(2), "0.96");
        assert_eq!(cols[0].cell(6).render(0), "1");
        let check = verify_table1(&cols);
        assert_eq!(check.compared, 20);
        assert!(check.all_match(), "{:?}", check.mismatches);
        assert!(table1(3, 5).is_err());
        assert!(table1(6, 5).is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let mut cols = table1(4, 4).unwrap();
        cols[0].edges_q_tilde = 45;
        let check = verify_table1(&cols);
        assert_eq!(check.mismatches.len(), 1);
        assert_eq!(check.mismatches[0].row, "|E(Q~_n)|");
        assert_eq!(check.mismatches[0].expected, "44");
    }
}
