//! CSV and JSON writers for sweep results.

use std::io::Write;

use serde_json::json;

use super::{SweepResult, SweepRow};

/// Column order of the sweep CSV. Fixed; downstream tooling indexes by name.
pub const CSV_HEADER: [&str; 27] = [
    "family",
    "n",
    "l",
    "partition",
    "d",
    "r",
    "s",
    "N",
    "dimX",
    "expected",
    "predicted",
    "defect",
    "epsilon",
    "fills",
    "status",
    "citation",
    "oracle_dim",
    "agree",
    "upper_bound_ok",
    "outcome",
    "detail",
    "prime",
    "seed",
    "trial_ranks",
    "wlp_k",
    "wlp_pass",
    "wlp_complete",
];

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_record(row: &SweepRow) -> Vec<String> {
    let inst = &row.instance;
    let p = row.prediction.as_ref();
    let o = row.oracle.as_ref();
    vec![
        row.family.name().to_string(),
        inst.n.to_string(),
        inst.l.to_string(),
        inst.partition.to_string(),
        inst.d().to_string(),
        inst.partition.len().to_string(),
        inst.partition.tail_sum().to_string(),
        inst.ambient().to_string(),
        inst.dim_variety().to_string(),
        opt(p.map(|p| &p.expected)),
        opt(p.map(|p| &p.predicted)),
        opt(p.map(|p| &p.defect)),
        opt(p.map(|p| &p.epsilon)),
        opt(p.map(|p| p.fills)),
        opt(p.map(|p| p.status.label())),
        opt(p.and_then(|p| p.status.citation()).map(|c| c.describe())),
        opt(o.map(|o| o.secant_dim)),
        opt(row.agree),
        opt(row.upper_bound_ok),
        row.outcome.label().to_string(),
        row.outcome.detail().to_string(),
        opt(o.map(|o| o.prime)),
        opt(o.map(|o| o.seed)),
        o.map(|o| o.trial_ranks.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" "))
            .unwrap_or_default(),
        opt(row.wlp.as_ref().map(|w| w.k)),
        opt(row.wlp.as_ref().map(|w| w.pass)),
        opt(row.wlp.as_ref().map(|w| w.complete)),
    ]
}

/// One header line and one record per row, in row order. Contains no timings, so
/// the same configuration always produces the same bytes.
pub fn write_csv<W: Write>(result: &SweepResult, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in &result.rows {
        w.write_record(csv_record(row))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(result: &SweepResult, mut out: W) -> std::io::Result<()> {
    let doc = json!({
        "summary": result.summary.to_json(),
        "rows": result.rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)
}
