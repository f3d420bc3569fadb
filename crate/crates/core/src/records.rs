//! JSONL exchange of semiring tables.
//!
//! Each semiring is one line `{"n":2,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]]}`
//! with row-major nested arrays. An export ends with a summary line
//! `{"count":…,"query":{…}}`, which readers skip.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::census::{verify_semiring, CensusQuery, SemiringPair, VerificationReport};
use crate::table::OpTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiringRecord {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl From<&SemiringPair> for SemiringRecord {
    fn from(p: &SemiringPair) -> Self {
        SemiringRecord {
            n: p.order(),
            add: p.add().rows(),
            mul: p.mul().rows(),
        }
    }
}

impl SemiringRecord {
    pub fn tables(&self) -> Result<(OpTable, OpTable), String> {
        let parse = |name: &str, rows: &[Vec<usize>]| {
            if rows.len() != self.n {
                return Err(format!("{name} has {} rows but n = {}", rows.len(), self.n));
            }
            OpTable::from_rows(rows).map_err(|e| format!("{name}: {e}"))
        };
        Ok((parse("add", &self.add)?, parse("mul", &self.mul)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<CensusQuery>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Line {
    Semiring(SemiringRecord),
    Summary(Summary),
}

pub fn parse_line(text: &str) -> Result<Line, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

/// Writes one record per semiring followed by the summary line.
pub fn write_jsonl<W: Write>(
    mut w: W,
    query: &CensusQuery,
    pairs: &[SemiringPair],
) -> std::io::Result<()> {
    for p in pairs {
        serde_json::to_writer(&mut w, &SemiringRecord::from(p))?;
        w.write_all(b"\n")?;
    }
    let summary = Summary {
        count: pairs.len() as u64,
        query: Some(*query),
    };
    serde_json::to_writer(&mut w, &summary)?;
    w.write_all(b"\n")?;
    w.flush()
}

/// The verdict on one input line.
#[derive(Clone, Debug)]
pub enum LineVerdict {
    Valid,
    Invalid(VerificationReport),
    /// Unparseable, or tables of the wrong shape.
    Malformed(String),
}

#[derive(Clone, Debug)]
pub struct LineReport {
    /// 1-based.
    pub line: usize,
    pub verdict: LineVerdict,
}

#[derive(Clone, Debug, Default)]
pub struct CheckSummary {
    pub reports: Vec<LineReport>,
    pub records: usize,
    pub invalid: usize,
    /// Counts claimed by summary lines, with the line they appear on.
    pub claimed: Vec<(usize, u64)>,
}

impl CheckSummary {
    pub fn all_valid(&self) -> bool {
        self.invalid == 0
    }
}

/// Verifies every record of a JSONL stream; bad lines are reported and
/// skipped, never fatal.
pub fn check_jsonl<R: BufRead>(reader: R) -> std::io::Result<CheckSummary> {
    let mut summary = CheckSummary::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let number = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let verdict = match parse_line(&line) {
            Ok(Line::Summary(s)) => {
                summary.claimed.push((number, s.count));
                continue;
            }
            Ok(Line::Semiring(record)) => match record.tables() {
                Ok((add, mul)) => {
                    let report = verify_semiring(&add, &mul).expect("orders agree");
                    if report.is_semiring() {
                        LineVerdict::Valid
                    } else {
                        LineVerdict::Invalid(report)
                    }
                }
                Err(message) => LineVerdict::Malformed(message),
            },
            Err(message) => LineVerdict::Malformed(message),
        };
        summary.records += 1;
        if !matches!(verdict, LineVerdict::Valid) {
            summary.invalid += 1;
        }
        summary.reports.push(LineReport {
            line: number,
            verdict,
        });
    }
    Ok(summary)
}
