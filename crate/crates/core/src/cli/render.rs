//! Text, DOT, edge-list and CSV renderings.

use std::fmt::Write as _;

use crate::counting::{Table1Column, ROW_LABELS};
use crate::cube::{CubeGraph, Metric};
use crate::isometry::{IsometryVerdict, Status};

/// Human-readable name such as `Q~_4(11)` or `Q_5`.
pub fn graph_name(g: &CubeGraph) -> String {
    let base = match g.metric() {
        Metric::Hamming => "Q",
        Metric::Tilde => "Q~",
    };
    match g.avoided() {
        Some(f) => format!("{base}_{}({f})", g.order()),
        None => format!("{base}_{}", g.order()),
    }
}

/// One `u v` line per edge, lexicographically sorted.
pub fn edge_list(g: &CubeGraph) -> String {
    let mut out = String::new();
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn dot(g: &CubeGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "// {}: {} vertices, {} edges",
        graph_name(g),
        g.vertex_count(),
        g.edge_count()
    );
    out.push_str("graph cube {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  \"{v}\";");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
    }
    out.push_str("}\n");
    out
}

pub fn verdict_line(word: &str, metric: Metric, verdict: &IsometryVerdict) -> String {
    match (verdict.status, verdict.witness) {
        (Status::NonIsometric, Some(w)) => {
            let d_sub = w
                .subgraph_distance
                .map_or_else(|| "unreachable".to_string(), |d| d.to_string());
            format!(
                "{word} {metric}: non-isometric at n={} (witness u={} v={}, d_sub={d_sub}, d_{metric}={})",
                w.u.len(),
                w.u,
                w.v,
                w.ambient_distance
            )
        }
        _ => format!(
            "{word} {metric}: isometric-up-to-{}",
            verdict.checked_max_n
        ),
    }
}

pub fn status_word(verdict: &IsometryVerdict) -> String {
    match verdict.status {
        Status::IsometricUpTo => format!("isometric-up-to-{}", verdict.checked_max_n),
        Status::NonIsometric => "non-isometric".to_string(),
    }
}

fn ratio_decimals(text: bool) -> usize {
    if text {
        4
    } else {
        6
    }
}

/// Rows of cells, label first, one column per order.
fn table_rows(columns: &[Table1Column], text: bool) -> Vec<Vec<String>> {
    ROW_LABELS
        .iter()
        .enumerate()
        .map(|(row, label)| {
            std::iter::once(label.to_string())
                .chain(
                    columns
                        .iter()
                        .map(|c| c.cell(row).render(ratio_decimals(text))),
                )
                .collect()
        })
        .collect()
}

pub fn table_text(columns: &[Table1Column]) -> String {
    let rows = table_rows(columns, true);
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|k| rows.iter().map(|r| r[k].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, cell)| {
                if k == 0 {
                    format!("{cell:<w$}", w = widths[k])
                } else {
                    format!("{cell:>w$}", w = widths[k])
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table_csv(columns: &[Table1Column]) -> csv::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once(ROW_LABELS[0].to_string())
        .chain(columns.iter().map(|c| c.n.to_string()))
        .collect();
    writer.write_record(&header)?;
    for row in table_rows(columns, false).into_iter().skip(1) {
        writer.write_record(&row)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
