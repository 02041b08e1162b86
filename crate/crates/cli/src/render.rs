//! Text, CSV and JSON rendering of reports.

use anyhow::Result;
use serde_json::{json, Value};

use zagreb_core::qspr::Table;
use zagreb_core::{DiscrepancyReport, IndexReport, Property};

pub const CONVENTIONS: [(&str, &str); 4] = [
    ("edge_degree", "d(uv) = d(u) + d(v) - 2"),
    (
        "edge_pairs",
        "adjacent edge pairs are unordered; each pair counted once",
    ),
    (
        "ehm",
        "sum over adjacent pairs of (d(a) + d(b))^2 with a and b the two edges",
    ),
    (
        "coindices",
        "sums over unordered distinct non-adjacent vertex pairs",
    ),
];

pub fn conventions_json() -> Value {
    CONVENTIONS
        .iter()
        .map(|&(k, v)| (k.to_string(), Value::from(v)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

pub fn conventions_comment() -> String {
    CONVENTIONS
        .iter()
        .map(|(k, v)| format!("# {k}: {v}\n"))
        .collect()
}

/// Left-aligned columns separated by two spaces, no trailing whitespace.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                out.push_str(cell);
            } else {
                out.push_str(&format!("{cell:<w$}  "));
            }
        }
        out.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn index_text(report: &IndexReport) -> String {
    let rows: Vec<Vec<String>> = IndexReport::FIELD_NAMES
        .iter()
        .zip(report.values())
        .map(|(name, v)| vec![name.to_string(), v.to_string()])
        .collect();
    conventions_comment() + &aligned(&["index", "value"], &rows)
}

pub fn index_csv(report: &IndexReport) -> String {
    let values: Vec<String> = report.values().iter().map(u64::to_string).collect();
    format!(
        "{}\n{}\n",
        IndexReport::FIELD_NAMES.join(","),
        values.join(",")
    )
}

pub fn index_json(report: &IndexReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(&json!({
        "conventions": conventions_json(),
        "indices": report,
    }))? + "\n")
}

pub fn discrepancy_text(report: &DiscrepancyReport) -> String {
    aligned(
        &["theorem", "closed_form", "oracle", "difference", "operands"],
        &[vec![
            report.theorem_id.to_string(),
            report.closed_form_value.to_string(),
            report.oracle_value.to_string(),
            report.difference.to_string(),
            report.operand_description.clone(),
        ]],
    )
}

pub fn discrepancy_json(report: &DiscrepancyReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(&json!({
        "conventions": conventions_json(),
        "report": report,
    }))? + "\n")
}

fn table_header(table: &Table) -> Vec<&'static str> {
    let mut header = vec!["formula", "n", "ehm"];
    if table.has_values() {
        header.extend(Property::ALL.map(Property::key));
    }
    header
}

fn table_cells(table: &Table) -> Vec<Vec<String>> {
    table
        .rows
        .iter()
        .map(|row| {
            let mut cells = vec![
                row.formula.clone(),
                row.rings.to_string(),
                row.ehm.to_string(),
            ];
            if let Some(values) = row.values {
                cells.extend(Property::ALL.map(|p| values.get(p).to_string()));
            }
            cells
        })
        .collect()
}

pub fn table_text(table: &Table) -> String {
    let mut header = table_header(table);
    header.push("errata");
    let rows: Vec<Vec<String>> = table_cells(table)
        .into_iter()
        .zip(&table.rows)
        .map(|(mut cells, row)| {
            cells.push(row.errata.join("; "));
            cells
        })
        .collect();
    let mut out = format!("Table {}: {}\n", table.id.number(), table.title);
    out.push_str(&aligned(&header, &rows));
    for note in &table.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

/// Data rows first, then one `# erratum` comment line per annotated row.
pub fn table_csv(table: &Table) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(table_header(table))?;
    for cells in table_cells(table) {
        writer.write_record(&cells)?;
    }
    let mut out = String::from_utf8(writer.into_inner()?)?;
    for (i, row) in table.rows.iter().enumerate() {
        if !row.errata.is_empty() {
            out.push_str(&format!(
                "# erratum row {}: {}\n",
                i + 1,
                row.errata.join("; ")
            ));
        }
    }
    Ok(out)
}

pub fn table_json(table: &Table) -> Result<String> {
    Ok(serde_json::to_string_pretty(table)? + "\n")
}
