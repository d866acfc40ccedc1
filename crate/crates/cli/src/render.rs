//! Output rendering. JSON is canonical: keys are emitted in sorted order,
//! values are integers and strings only, and identical inputs produce
//! byte-identical output.

use fatpoints_core::hilbert::HilbertTable;
use fatpoints_core::interp::{InterpReport, Verdict};
use fatpoints_core::types::{BettiTable, DeltaMatrix, FatPointConfig, FreeResolution};
use serde::Serialize;

use crate::verify::{CheckOutcome, VerifySummary};
use crate::Format;

fn triple(config: FatPointConfig) -> [u32; 3] {
    [config.m11, config.m12, config.m21]
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

// field order = sorted key order; serde_json preserves declaration order

#[derive(Serialize)]
struct EntryJson {
    a: i64,
    b: i64,
    mult: u64,
    u: usize,
}

#[derive(Serialize)]
struct BettiJson {
    config: [u32; 3],
    entries: Vec<EntryJson>,
}

pub fn betti(config: FatPointConfig, table: &BettiTable, format: Format) -> String {
    match format {
        Format::Text => {
            let lines: Vec<String> = table
                .iter()
                .map(|(u, deg, mult)| format!("u={u} ({},{}) {mult}", deg.a, deg.b))
                .collect();
            lines.join("\n")
        }
        Format::Csv => {
            let mut out = vec!["u,a,b,mult".to_string()];
            out.extend(
                table
                    .iter()
                    .map(|(u, deg, mult)| format!("{u},{},{},{mult}", deg.a, deg.b)),
            );
            out.join("\n")
        }
        Format::Json => json(&BettiJson {
            config: triple(config),
            entries: table
                .iter()
                .map(|(u, deg, mult)| EntryJson {
                    a: deg.a,
                    b: deg.b,
                    mult,
                    u,
                })
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct ShiftJson {
    a: i64,
    b: i64,
    mult: u64,
}

#[derive(Serialize)]
struct ResolutionJson {
    config: [u32; 3],
    levels: Vec<Vec<ShiftJson>>,
}

fn level_counts(level: &[fatpoints_core::types::Bidegree]) -> Vec<ShiftJson> {
    let mut out: Vec<ShiftJson> = Vec::new();
    for deg in level {
        match out.iter_mut().find(|s| s.a == deg.a && s.b == deg.b) {
            Some(s) => s.mult += 1,
            None => out.push(ShiftJson {
                a: deg.a,
                b: deg.b,
                mult: 1,
            }),
        }
    }
    out
}

pub fn resolution(config: FatPointConfig, res: &FreeResolution, format: Format) -> String {
    let levels: Vec<Vec<ShiftJson>> = res.levels.iter().map(|l| level_counts(l)).collect();
    match format {
        Format::Text => {
            let mut lines = Vec::new();
            for (u, level) in levels.iter().enumerate() {
                for s in level {
                    lines.push(format!("level={u} ({},{}) {}", s.a, s.b, s.mult));
                }
            }
            lines.join("\n")
        }
        Format::Csv => {
            let mut out = vec!["level,a,b,mult".to_string()];
            for (u, level) in levels.iter().enumerate() {
                for s in level {
                    out.push(format!("{u},{},{},{}", s.a, s.b, s.mult));
                }
            }
            out.join("\n")
        }
        Format::Json => json(&ResolutionJson {
            config: triple(config),
            levels,
        }),
    }
}

fn matrix_text(rows: &[Vec<i64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn matrix_csv(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Serialize)]
struct HilbertJson<'a> {
    config: [u32; 3],
    gamma: i64,
    rows: &'a [Vec<i64>],
}

pub fn hilbert(config: FatPointConfig, table: &HilbertTable, format: Format) -> String {
    match format {
        Format::Text => matrix_text(&table.rows),
        Format::Csv => matrix_csv(&table.rows),
        Format::Json => json(&HilbertJson {
            config: triple(config),
            gamma: table.gamma,
            rows: &table.rows,
        }),
    }
}

#[derive(Serialize)]
struct DeltaJson<'a> {
    config: [u32; 3],
    rows: &'a [Vec<i64>],
}

pub fn delta(config: FatPointConfig, table: &DeltaMatrix, format: Format) -> String {
    match format {
        Format::Text => matrix_text(table.rows()),
        Format::Csv => matrix_csv(table.rows()),
        Format::Json => json(&DeltaJson {
            config: triple(config),
            rows: table.rows(),
        }),
    }
}

#[derive(Serialize)]
struct MismatchJson {
    a: i64,
    b: i64,
    forward: i64,
    input: i64,
}

#[derive(Serialize)]
struct CandidateJson {
    matched: bool,
    mismatch: Option<MismatchJson>,
    system: String,
    triple: [u32; 3],
}

#[derive(Serialize)]
struct VerdictJson {
    kind: &'static str,
    triple: Option<[u32; 3]>,
}

#[derive(Serialize)]
struct InterpJson {
    alpha: Option<i64>,
    beta: Option<i64>,
    candidates: Vec<CandidateJson>,
    case: u8,
    d: Option<i64>,
    gamma: Option<i64>,
    notes: Vec<String>,
    verdict: VerdictJson,
}

pub fn interp(report: &InterpReport, format: Format) -> String {
    let verdict_json = match &report.verdict {
        Verdict::IsHilbertFunction(t) => VerdictJson {
            kind: "is_hilbert_function",
            triple: Some(triple(*t)),
        },
        Verdict::NotHilbertFunction => VerdictJson {
            kind: "not_hilbert_function",
            triple: None,
        },
        Verdict::NotCaseOne => VerdictJson {
            kind: "not_case_one",
            triple: None,
        },
    };
    match format {
        Format::Json => json(&InterpJson {
            alpha: report.invariants.map(|i| i.alpha),
            beta: report.invariants.map(|i| i.beta),
            candidates: report
                .candidates
                .iter()
                .map(|c| CandidateJson {
                    matched: c.matched,
                    mismatch: c.mismatch.map(|m| MismatchJson {
                        a: m.a,
                        b: m.b,
                        forward: m.forward,
                        input: m.input,
                    }),
                    system: c.system.to_string(),
                    triple: triple(c.triple),
                })
                .collect(),
            case: if report.is_case_one() { 1 } else { 2 },
            d: report.invariants.map(|i| i.d),
            gamma: report.invariants.map(|i| i.gamma),
            notes: report.notes.clone(),
            verdict: verdict_json,
        }),
        Format::Csv => {
            let mut out = vec!["m11,m12,m21,system,matched".to_string()];
            for c in &report.candidates {
                out.push(format!(
                    "{},{},{},{},{}",
                    c.triple.m11, c.triple.m12, c.triple.m21, c.system, c.matched
                ));
            }
            out.join("\n")
        }
        Format::Text => {
            let mut lines = Vec::new();
            match report.invariants {
                Some(inv) => lines.push(format!(
                    "case 1: gamma={} alpha={} beta={} d={}",
                    inv.gamma, inv.alpha, inv.beta, inv.d
                )),
                None => lines.push("case 2: no antidiagonal structure".to_string()),
            }
            for c in &report.candidates {
                let outcome = if c.matched {
                    "matches".to_string()
                } else {
                    match c.mismatch {
                        Some(m) => format!(
                            "mismatch at ({},{}): input {}, forward {}",
                            m.a, m.b, m.input, m.forward
                        ),
                        None => "no match".to_string(),
                    }
                };
                lines.push(format!(
                    "candidate ({},{},{}) from system ({}): {outcome}",
                    c.triple.m11, c.triple.m12, c.triple.m21, c.system
                ));
            }
            for note in &report.notes {
                lines.push(format!("note: {note}"));
            }
            match &report.verdict {
                Verdict::IsHilbertFunction(t) => lines.push(format!(
                    "verdict: Hilbert function of ({},{},{})",
                    t.m11, t.m12, t.m21
                )),
                Verdict::NotHilbertFunction | Verdict::NotCaseOne => lines.push(
                    "verdict: not the Hilbert function of fat points on an ACI support".to_string(),
                ),
            }
            lines.join("\n")
        }
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    fail: u64,
    first_failure: &'a Option<String>,
    name: &'a str,
    pass: u64,
    skip: u64,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    checks: Vec<CheckJson<'a>>,
    mmax: u32,
    ok: bool,
    oracle: bool,
}

pub fn verify(summary: &VerifySummary, format: Format) -> String {
    match format {
        Format::Json => json(&VerifyJson {
            checks: summary
                .checks
                .iter()
                .map(|c| CheckJson {
                    fail: c.fail,
                    first_failure: &c.first_failure,
                    name: c.name,
                    pass: c.pass,
                    skip: c.skip,
                })
                .collect(),
            mmax: summary.mmax,
            ok: summary.ok(),
            oracle: summary.oracle,
        }),
        Format::Csv => {
            let mut out = vec!["name,pass,fail,skip".to_string()];
            for c in &summary.checks {
                out.push(format!("{},{},{},{}", c.name, c.pass, c.fail, c.skip));
            }
            out.join("\n")
        }
        Format::Text => {
            let mut lines = Vec::new();
            let name_width = summary
                .checks
                .iter()
                .map(|c| c.name.len())
                .max()
                .unwrap_or(0);
            for CheckOutcome {
                name,
                pass,
                fail,
                skip,
                first_failure,
            } in &summary.checks
            {
                lines.push(format!(
                    "{name:<name_width$}  pass {pass:>5}  fail {fail:>3}  skip {skip:>3}"
                ));
                if let Some(counterexample) = first_failure {
                    lines.push(format!("  first failure: {counterexample}"));
                }
            }
            let verdict = if summary.ok() { "ok" } else { "FAILED" };
            lines.push(format!("result: {verdict} (mmax={})", summary.mmax));
            lines.join("\n")
        }
    }
}
