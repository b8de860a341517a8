//! Output rendering. Text tables are aligned on class columns; JSON uses
//! the library's serializable models; CSV keeps the exact `p/q` and
//! `c*z{N}^{k}` strings (never decimals).

use serde::{Deserialize, Serialize};

use kleinian::chartab::CharacterTable;
use kleinian::rrcoeff::{reference_coefficients, CheckEntry, ReportModel, RrCoefficients, Verdict};
use kleinian::Rational;

use crate::CliError;

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn chartab_text(t: &CharacterTable) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["class".to_string()];
    header.extend(t.classes.iter().map(|c| c.label.clone()));
    rows.push(header);
    let mut size_row = vec!["size".to_string()];
    size_row.extend(t.classes.iter().map(|c| c.size.to_string()));
    rows.push(size_row);
    let mut cent_row = vec!["|C_G(g)|".to_string()];
    cent_row.extend(t.classes.iter().map(|c| c.centralizer_order.to_string()));
    rows.push(cent_row);
    for irrep in &t.irreps {
        let mut row = vec![irrep.name.clone()];
        row.extend(irrep.values.iter().map(|v| t.pretty_value(v)));
        rows.push(row);
    }
    format!("{} (order {})\n{}", t.group.spec, t.order(), align(&rows))
}

pub fn chartab_csv(t: &CharacterTable) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["irrep".to_string(), "dim".to_string()];
    header.extend(t.classes.iter().map(|c| c.label.clone()));
    write_record(&mut w, &header)?;
    let mut size_row = vec!["size".to_string(), String::new()];
    size_row.extend(t.classes.iter().map(|c| c.size.to_string()));
    write_record(&mut w, &size_row)?;
    let mut cent_row = vec!["centralizer_order".to_string(), String::new()];
    cent_row.extend(t.classes.iter().map(|c| c.centralizer_order.to_string()));
    write_record(&mut w, &cent_row)?;
    for irrep in &t.irreps {
        let mut row = vec![irrep.name.clone(), irrep.dim.to_string()];
        row.extend(irrep.values.iter().map(|v| v.to_string()));
        write_record(&mut w, &row)?;
    }
    finish_csv(w)
}

#[derive(Serialize, Deserialize)]
pub struct RrModel {
    pub group: String,
    pub order: usize,
    pub coefficients: Vec<CoefficientModel>,
}

#[derive(Serialize, Deserialize)]
pub struct CoefficientModel {
    pub name: String,
    pub dim: usize,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
}

pub fn rr_model(t: &CharacterTable, coeffs: &RrCoefficients) -> RrModel {
    let reference = reference_coefficients(t.group.spec);
    RrModel {
        group: t.group.spec.to_string(),
        order: t.order(),
        coefficients: t
            .irreps
            .iter()
            .zip(&coeffs.values)
            .enumerate()
            .map(|(i, (irrep, v))| {
                let erratum = reference.as_ref().and_then(|r| {
                    let entry = &r[i];
                    entry
                        .is_erratum
                        .then(|| format!("paper-erratum: reference prints {}", entry.printed))
                });
                CoefficientModel {
                    name: irrep.name.clone(),
                    dim: irrep.dim,
                    value: v.to_string(),
                    erratum,
                }
            })
            .collect(),
    }
}

pub fn rr_text(model: &RrModel) -> String {
    let mut rows = vec![vec![
        "irrep".to_string(),
        "dim".to_string(),
        "T".to_string(),
    ]];
    for c in &model.coefficients {
        let mut row = vec![c.name.clone(), c.dim.to_string(), c.value.clone()];
        if let Some(note) = &c.erratum {
            row.push(format!("[{}]", note));
        }
        rows.push(row);
    }
    format!("{} (order {})\n{}", model.group, model.order, align(&rows))
}

pub fn rr_csv(model: &RrModel) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write_record(
        &mut w,
        &["irrep".into(), "dim".into(), "value".into(), "note".into()],
    )?;
    for c in &model.coefficients {
        write_record(
            &mut w,
            &[
                c.name.clone(),
                c.dim.to_string(),
                c.value.clone(),
                c.erratum.clone().unwrap_or_default(),
            ],
        )?;
    }
    finish_csv(w)
}

#[derive(Serialize, Deserialize)]
pub struct DeltaModel {
    pub group: String,
    pub a: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub delta: String,
}

pub fn delta_csv(
    t: &CharacterTable,
    k: &kleinian::KClass,
    value: &Rational,
) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write_record(&mut w, &["group".into(), "a".into(), "delta".into()])?;
    let a =
        k.0.iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",");
    write_record(&mut w, &[t.group.spec.to_string(), a, value.to_string()])?;
    finish_csv(w)
}

pub fn report_text(report: &ReportModel) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    for e in &report.entries {
        rows.push(entry_row(e));
    }
    let mut out = align(&rows);
    out.push_str(&format!(
        "summary: {} match, {} paper-erratum, {} mismatch\n",
        report.counts.matches, report.counts.paper_erratum, report.counts.mismatch
    ));
    out
}

fn entry_row(e: &CheckEntry) -> Vec<String> {
    let verdict = match e.verdict {
        Verdict::Match => "ok",
        Verdict::PaperErratum => "erratum",
        Verdict::Mismatch => "FAIL",
    };
    let detail = match e.verdict {
        Verdict::Match => e.subject.clone(),
        Verdict::PaperErratum => format!(
            "{}: computed {}, reference prints {}",
            e.subject, e.computed, e.expected
        ),
        Verdict::Mismatch => format!(
            "{}: computed {}, expected {}",
            e.subject, e.computed, e.expected
        ),
    };
    vec![verdict.to_string(), e.group.clone(), e.name.clone(), detail]
}

pub fn report_csv(report: &ReportModel) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write_record(
        &mut w,
        &[
            "name".into(),
            "group".into(),
            "subject".into(),
            "computed".into(),
            "expected".into(),
            "source".into(),
            "verdict".into(),
        ],
    )?;
    for e in &report.entries {
        let source = serde_plain(&e.source)?;
        let verdict = serde_plain(&e.verdict)?;
        write_record(
            &mut w,
            &[
                e.name.clone(),
                e.group.clone(),
                e.subject.clone(),
                e.computed.clone(),
                e.expected.clone(),
                source,
                verdict,
            ],
        )?;
    }
    finish_csv(w)
}

/// Render a unit enum through its serde name.
fn serde_plain<T: Serialize>(value: &T) -> Result<String, CliError> {
    let s = serde_json::to_string(value).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(s.trim_matches('"').to_string())
}

fn write_record(w: &mut csv::Writer<Vec<u8>>, record: &[String]) -> Result<(), CliError> {
    w.write_record(record)
        .map_err(|e| CliError::Input(e.to_string()))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
}
